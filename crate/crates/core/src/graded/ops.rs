use crate::error::{Error, Result};
use crate::linalg::scalar::sign;
use crate::linalg::Matrix;

use super::module::{GradedMap, GradedModule};

/// `V(m)`, with `V(m)^i = V^{i-m}` and the same matrices.
pub fn shift(v: &GradedModule, m: i64) -> GradedModule {
    GradedModule::new_unchecked(
        v.alg().clone(),
        v.lo() + m,
        v.dims().to_vec(),
        v.rho0_raw().to_vec(),
        v.odd_raw().to_vec(),
    )
}

/// Position of the block `V^i ⊗ W^{l-i}` inside `(V ⊗ W)^l`, listed with
/// `i` increasing. Each entry is `(i, offset)`.
pub fn tensor_blocks(v: &GradedModule, w: &GradedModule, l: i64) -> Vec<(i64, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for i in v.degrees() {
        let j = l - i;
        let size = v.dim_at(i) * w.dim_at(j);
        if size > 0 {
            out.push((i, off));
            off += size;
        }
    }
    out
}

/// `V ⊗ W` with the Koszul sign `(-1)^i` on odd elements passing `V^i`.
pub fn tensor(v: &GradedModule, w: &GradedModule) -> Result<GradedModule> {
    if v.alg() != w.alg() {
        return Err(Error::AlgebraMismatch);
    }
    let alg = v.alg().clone();
    if v.total_dim() == 0 || w.total_dim() == 0 {
        return Ok(GradedModule::zero(alg, v.lo() + w.lo()));
    }
    let lo = v.lo() + w.lo();
    let hi = v.hi() + w.hi();
    let dim = |l: i64| -> usize { v.degrees().map(|i| v.dim_at(i) * w.dim_at(l - i)).sum() };
    let dims: Vec<usize> = (lo..=hi).map(dim).collect();

    let mut rho0 = Vec::new();
    let mut odd = Vec::new();
    for l in lo..=hi {
        let n = dim(l);
        let blocks = tensor_blocks(v, w, l);
        let mut even_l = Vec::new();
        for x in 0..alg.dim0() {
            let mut m = Matrix::zeros(n, n);
            for &(i, off) in &blocks {
                let (a, b) = (v.rho0_at(i, x), w.rho0_at(l - i, x));
                let blk = &a.kron(&Matrix::identity(b.rows())) + &Matrix::identity(a.rows()).kron(&b);
                m.set_block(off, off, &blk);
            }
            even_l.push(m);
        }
        rho0.push(even_l);

        let next_blocks = tensor_blocks(v, w, l + 1);
        let find = |i: i64| next_blocks.iter().find(|b| b.0 == i).map(|b| b.1);
        let mut odd_l = Vec::new();
        for e in 0..alg.dim1() {
            let mut m = Matrix::zeros(dim(l + 1), n);
            for &(i, off) in &blocks {
                let j = l - i;
                if let Some(t) = find(i + 1) {
                    let blk = v.odd_at(i, e).kron(&Matrix::identity(w.dim_at(j)));
                    m.set_block(t, off, &blk);
                }
                if let Some(t) = find(i) {
                    let blk = Matrix::identity(v.dim_at(i)).kron(&w.odd_at(j, e)).scale(&sign(i));
                    m.set_block(t, off, &blk);
                }
            }
            odd_l.push(m);
        }
        odd.push(odd_l);
    }
    GradedModule::new_unchecked(alg, lo, dims, rho0, odd).validated()
}

/// Graded dual: `(V*)^i = (V^{-i})*`, even action `-rho^T`, odd action
/// `a*_e^i = (-1)^{i+1} (a_e^{-i-1})^T`.
pub fn dual(v: &GradedModule) -> GradedModule {
    let alg = v.alg().clone();
    if v.total_dim() == 0 {
        return GradedModule::zero(alg, -v.lo());
    }
    let lo = -v.hi();
    let hi = -v.lo();
    let dims: Vec<usize> = (lo..=hi).map(|i| v.dim_at(-i)).collect();
    let rho0 = (lo..=hi)
        .map(|i| (0..alg.dim0()).map(|x| -&v.rho0_at(-i, x).transpose()).collect())
        .collect();
    let odd = (lo..=hi)
        .map(|i| (0..alg.dim1()).map(|e| v.odd_at(-i - 1, e).transpose().scale(&sign(i + 1))).collect())
        .collect();
    GradedModule::new_unchecked(alg, lo, dims, rho0, odd)
}

/// The canonical isomorphism `V -> V**`, equal to `(-1)^j` on degree `j`.
pub fn double_dual_iso(v: &GradedModule) -> Result<GradedMap> {
    let vv = dual(&dual(v));
    let comps = v.degrees().map(|j| Matrix::identity(v.dim_at(j)).scale(&sign(j))).collect();
    GradedMap::new(v.clone(), vv, comps)
}

/// The left module attached to `V` viewed as a right module: odd matrices
/// leaving degree `j` are multiplied by `(-1)^j`. An involution.
pub fn right_twist(v: &GradedModule) -> GradedModule {
    let odd = v
        .degrees()
        .zip(v.odd_raw())
        .map(|(j, ms)| ms.iter().map(|m| m.scale(&sign(j))).collect())
        .collect();
    GradedModule::new_unchecked(v.alg().clone(), v.lo(), v.dims().to_vec(), v.rho0_raw().to_vec(), odd)
}

/// Direct sum; in each degree the summands appear in the given order.
pub fn direct_sum(parts: &[&GradedModule]) -> Result<GradedModule> {
    let Some(first) = parts.first() else {
        return Err(Error::Precondition("direct sum of no modules".into()));
    };
    let alg = first.alg().clone();
    if parts.iter().any(|p| p.alg() != &alg) {
        return Err(Error::AlgebraMismatch);
    }
    let nonzero: Vec<&&GradedModule> = parts.iter().filter(|p| p.total_dim() > 0).collect();
    if nonzero.is_empty() {
        return Ok(GradedModule::zero(alg, first.lo()));
    }
    let lo = nonzero.iter().map(|p| p.lo()).min().unwrap();
    let hi = nonzero.iter().map(|p| p.hi()).max().unwrap();
    let dims = (lo..=hi).map(|j| parts.iter().map(|p| p.dim_at(j)).sum()).collect();
    let rho0 = (lo..=hi)
        .map(|j| {
            (0..alg.dim0())
                .map(|x| {
                    let blocks: Vec<Matrix> = parts.iter().map(|p| p.rho0_at(j, x).into_owned()).collect();
                    Matrix::block_diag(&blocks.iter().collect::<Vec<_>>())
                })
                .collect()
        })
        .collect();
    let odd = (lo..=hi)
        .map(|j| {
            (0..alg.dim1())
                .map(|e| {
                    let blocks: Vec<Matrix> = parts.iter().map(|p| p.odd_at(j, e).into_owned()).collect();
                    Matrix::block_diag(&blocks.iter().collect::<Vec<_>>())
                })
                .collect()
        })
        .collect();
    Ok(GradedModule::new_unchecked(alg, lo, dims, rho0, odd))
}

/// Inclusion of the `k`-th summand into `direct_sum(parts)`.
pub fn sum_inclusion(parts: &[&GradedModule], k: usize, sum: &GradedModule) -> Result<GradedMap> {
    let part = parts[k];
    let comps = part
        .degrees()
        .map(|j| {
            let before: usize = parts[..k].iter().map(|p| p.dim_at(j)).sum();
            let mut m = Matrix::zeros(sum.dim_at(j), part.dim_at(j));
            m.set_block(before, 0, &Matrix::identity(part.dim_at(j)));
            m
        })
        .collect();
    GradedMap::new_unchecked(part.clone(), sum.clone(), comps)
}

/// Projection of `direct_sum(parts)` onto its `k`-th summand.
pub fn sum_projection(parts: &[&GradedModule], k: usize, sum: &GradedModule) -> Result<GradedMap> {
    let part = parts[k];
    let comps = sum
        .degrees()
        .map(|j| {
            let before: usize = parts[..k].iter().map(|p| p.dim_at(j)).sum();
            let mut m = Matrix::zeros(part.dim_at(j), sum.dim_at(j));
            m.set_block(0, before, &Matrix::identity(part.dim_at(j)));
            m
        })
        .collect();
    GradedMap::new_unchecked(sum.clone(), part.clone(), comps)
}

/// The quotient `V^{<= m}` by the submodule of degrees above `m`.
pub fn truncate_above(v: &GradedModule, m: i64) -> GradedModule {
    if m < v.lo() {
        return GradedModule::zero(v.alg().clone(), v.lo());
    }
    let keep = ((m - v.lo() + 1) as usize).min(v.dims().len());
    let mut odd: Vec<Vec<Matrix>> = v.odd_raw()[..keep].to_vec();
    if keep < v.dims().len() {
        let last = &mut odd[keep - 1];
        for a in last.iter_mut() {
            *a = Matrix::zeros(0, a.cols());
        }
    }
    GradedModule::new_unchecked(
        v.alg().clone(),
        v.lo(),
        v.dims()[..keep].to_vec(),
        v.rho0_raw()[..keep].to_vec(),
        odd,
    )
}

/// The submodule `V^{>= m}`.
pub fn truncate_below(v: &GradedModule, m: i64) -> GradedModule {
    if m > v.hi() {
        return GradedModule::zero(v.alg().clone(), m);
    }
    let skip = (m - v.lo()).max(0) as usize;
    GradedModule::new_unchecked(
        v.alg().clone(),
        v.lo() + skip as i64,
        v.dims()[skip..].to_vec(),
        v.rho0_raw()[skip..].to_vec(),
        v.odd_raw()[skip..].to_vec(),
    )
}

/// Transports the module structure along invertible matrices `p[d]`
/// (new basis vectors as columns). Returns the new module and the
/// isomorphism from it to `v`.
pub fn change_basis(v: &GradedModule, p: &[Matrix]) -> Result<(GradedModule, GradedMap)> {
    if p.len() != v.dims().len() {
        return Err(Error::Shape("one basis change per degree required".into()));
    }
    let mut inv = Vec::new();
    for (d, m) in p.iter().enumerate() {
        if m.shape() != (v.dims()[d], v.dims()[d]) {
            return Err(Error::Shape(format!("basis change of shape {:?}", m.shape())));
        }
        inv.push(m.inverse().ok_or_else(|| Error::Precondition("basis change is singular".into()))?);
    }
    let rho0 = v
        .rho0_raw()
        .iter()
        .enumerate()
        .map(|(d, ms)| ms.iter().map(|r| &(&inv[d] * r) * &p[d]).collect())
        .collect();
    let n = v.dims().len();
    let odd = v
        .odd_raw()
        .iter()
        .enumerate()
        .map(|(d, ms)| {
            ms.iter()
                .map(|a| if d + 1 < n { &(&inv[d + 1] * a) * &p[d] } else { a.clone() })
                .collect()
        })
        .collect();
    let w = GradedModule::new_unchecked(v.alg().clone(), v.lo(), v.dims().to_vec(), rho0, odd).validated()?;
    let iso = GradedMap::new(w.clone(), v.clone(), p.to_vec())?;
    Ok((w, iso))
}

/// The submodule spanned by the columns of `bases[d]` (full column rank,
/// stable under the action). Returns the submodule and its inclusion.
pub fn submodule(v: &GradedModule, bases: &[Matrix]) -> Result<(GradedModule, GradedMap)> {
    if bases.len() != v.dims().len() {
        return Err(Error::Shape("one basis per degree required".into()));
    }
    let mut left = Vec::new();
    for (d, b) in bases.iter().enumerate() {
        if b.rows() != v.dims()[d] {
            return Err(Error::Shape(format!("basis with {} rows in a degree of dimension {}", b.rows(), v.dims()[d])));
        }
        left.push(b.left_inverse().ok_or_else(|| Error::Precondition("basis columns are dependent".into()))?);
    }
    let n = bases.len();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let mut rho0 = Vec::new();
    let mut odd = Vec::new();
    for d in 0..n {
        let mut even_d = Vec::new();
        for r in &v.rho0_raw()[d] {
            let img = r * &bases[d];
            let c = &left[d] * &img;
            if &bases[d] * &c != img {
                return Err(Error::Invariant(format!("subspace in degree {} is not g0-stable", v.lo() + d as i64)));
            }
            even_d.push(c);
        }
        rho0.push(even_d);
        let mut odd_d = Vec::new();
        for a in &v.odd_raw()[d] {
            if d + 1 < n {
                let img = a * &bases[d];
                let c = &left[d + 1] * &img;
                if &bases[d + 1] * &c != img {
                    return Err(Error::Invariant(format!("subspace in degree {} is not g1-stable", v.lo() + d as i64)));
                }
                odd_d.push(c);
            } else {
                odd_d.push(Matrix::zeros(0, dims[d]));
            }
        }
        odd.push(odd_d);
    }
    let sub = GradedModule::new_unchecked(v.alg().clone(), v.lo(), dims, rho0, odd).validated()?;
    let incl = GradedMap::new(sub.clone(), v.clone(), bases.to_vec())?;
    Ok((sub, incl))
}

/// Kernel of a graded map, as a submodule of its source.
pub fn kernel(f: &GradedMap) -> Result<(GradedModule, GradedMap)> {
    let bases: Vec<Matrix> = f.comps().iter().map(Matrix::nullspace).collect();
    submodule(f.source(), &bases)
}

/// Image of a graded map, as a submodule of its target.
pub fn image(f: &GradedMap) -> Result<(GradedModule, GradedMap)> {
    let w = f.target();
    let bases: Vec<Matrix> = w
        .degrees()
        .map(|j| {
            let c = f.comp(j);
            let (_, pivots) = c.rref();
            c.select_columns(&pivots)
        })
        .collect();
    submodule(w, &bases)
}
