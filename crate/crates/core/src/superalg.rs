//! Lie superalgebras `g = g0 ⊕ g1` with `[g1, g1] = 0`, given by structure
//! constants of `g0` and matrices of the `g0`-action on `g1`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::scalar::{self, int, Scalar};
use crate::linalg::{Matrix, PolyIdeal, Polynomial};

/// Even part: `[x_i, x_j] = sum_k c[i][j][k] x_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebraEven {
    dim: usize,
    consts: Vec<Scalar>,
}

impl LieAlgebraEven {
    pub fn new(dim: usize, consts: Vec<Scalar>) -> Result<Self> {
        if consts.len() != dim * dim * dim {
            return Err(Error::Shape(format!("{} structure constants for dimension {dim}", consts.len())));
        }
        Ok(LieAlgebraEven { dim, consts })
    }

    pub fn from_triples(dim: usize, triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Result<Self> {
        let mut consts = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, k, v) in triples {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Shape(format!("bracket index ({i},{j},{k}) out of range for dimension {dim}")));
            }
            consts[(i * dim + j) * dim + k] = v;
        }
        Ok(LieAlgebraEven { dim, consts })
    }

    pub fn zero_algebra() -> Self {
        LieAlgebraEven { dim: 0, consts: Vec::new() }
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebraEven { dim, consts: vec![Scalar::zero(); dim * dim * dim] }
    }

    /// sl2 in the basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let (e, h, f) = (0, 1, 2);
        let triples = [
            (h, e, e, 2),
            (e, h, e, -2),
            (h, f, f, -2),
            (f, h, f, 2),
            (e, f, h, 1),
            (f, e, h, -1),
        ];
        LieAlgebraEven::from_triples(3, triples.iter().map(|&(i, j, k, v)| (i, j, k, int(v)))).unwrap()
    }

    /// Direct sum of two Lie algebras; the basis of `other` follows that of `self`.
    pub fn direct_sum(&self, other: &LieAlgebraEven) -> Self {
        let n = self.dim + other.dim;
        let mut triples = Vec::new();
        for (alg, off) in [(self, 0), (other, self.dim)] {
            for i in 0..alg.dim {
                for j in 0..alg.dim {
                    for k in 0..alg.dim {
                        let v = alg.c(i, j, k);
                        if !v.is_zero() {
                            triples.push((i + off, j + off, k + off, v.clone()));
                        }
                    }
                }
            }
        }
        LieAlgebraEven::from_triples(n, triples).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.consts[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero structure constants as `(i, j, k, c)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = self.c(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad x_i`, with `(ad x_i)[k][j] = c[i][j][k]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            for k in 0..d {
                m.set(k, j, self.c(i, j, k).clone());
            }
        }
        m
    }

    /// `sum_k c[i][j][k] * mats[k]`: the image of `[x_i, x_j]` under a linear
    /// map given on basis elements.
    pub fn bracket_image(&self, i: usize, j: usize, mats: &[Matrix]) -> Matrix {
        let (r, c) = mats.first().map_or((0, 0), Matrix::shape);
        let mut out = Matrix::zeros(r, c);
        for (k, m) in mats.iter().enumerate() {
            out.add_scaled(self.c(i, j, k), m);
        }
        out
    }

    pub fn check_antisymmetry(&self) -> Check {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !(self.c(i, j, k) + self.c(j, i, k)).is_zero() {
                        return Check::fail("antisymmetry", [i, j, k]);
                    }
                }
            }
        }
        Check::pass("antisymmetry")
    }

    /// `[x_i,[x_j,x_l]] + [x_j,[x_l,x_i]] + [x_l,[x_i,x_j]] = 0` on all basis triples.
    pub fn check_jacobi(&self) -> Check {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for l in 0..d {
                    for m in 0..d {
                        let mut acc = Scalar::zero();
                        for p in 0..d {
                            acc += self.c(j, l, p) * self.c(i, p, m);
                            acc += self.c(l, i, p) * self.c(j, p, m);
                            acc += self.c(i, j, p) * self.c(l, p, m);
                        }
                        if !acc.is_zero() {
                            return Check::fail("jacobi", [i, j, l]);
                        }
                    }
                }
            }
        }
        Check::pass("jacobi")
    }

    /// Checks `rho([x_i,x_j]) = [rho(x_i), rho(x_j)]`. On failure the triple
    /// is `(i, j, row)` of the first mismatching entry.
    pub fn check_representation(&self, rho: &[Matrix], name: &str) -> Check {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = self.bracket_image(i, j, rho);
                let rhs = &(&rho[i] * &rho[j]) - &(&rho[j] * &rho[i]);
                if lhs != rhs {
                    let row = (0..lhs.rows()).find(|&r| lhs.row(r) != rhs.row(r)).unwrap_or(0);
                    return Check::fail(name, [i, j, row]);
                }
            }
        }
        Check::pass(name)
    }

    /// `K[i][j] = trace(ad x_i ∘ ad x_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                k.set(i, j, (&ads[i] * &ads[j]).trace());
            }
        }
        k
    }

    /// Cartan's criterion over the rationals. The zero algebra counts as
    /// semisimple, with `trivially` set.
    pub fn semisimplicity(&self) -> Semisimplicity {
        if self.dim == 0 {
            return Semisimplicity { semisimple: true, trivially: true, killing_det: scalar::one() };
        }
        let det = self.killing_form().det().expect("square");
        Semisimplicity { semisimple: !det.is_zero(), trivially: false, killing_det: det }
    }

    pub fn is_semisimple(&self) -> bool {
        self.semisimplicity().semisimple
    }

    /// Indices of a smallest subset of the basis that generates the whole
    /// algebra (first in lexicographic order). Equivariance constraints only
    /// need to be imposed for these. Above 12 dimensions every index is used.
    pub fn generating_indices(&self) -> Vec<usize> {
        let d = self.dim;
        if d > 12 {
            return (0..d).collect();
        }
        for k in 0..=d {
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                if self.generated_span(&combo).rank() == d {
                    return combo;
                }
                // Next k-subset in lexicographic order.
                let Some(pos) = (0..k).rev().find(|&p| combo[p] < d - k + p) else {
                    break;
                };
                combo[pos] += 1;
                for q in pos + 1..k {
                    combo[q] = combo[q - 1] + 1;
                }
            }
        }
        (0..d).collect()
    }

    /// Columns spanning the Lie subalgebra generated by the given basis elements.
    fn generated_span(&self, gens: &[usize]) -> Matrix {
        let d = self.dim;
        let mut vecs: Vec<Vec<Scalar>> = gens
            .iter()
            .map(|&g| (0..d).map(|k| if k == g { scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        let mut span = Matrix::from_columns(d, &vecs);
        loop {
            let mut grown = false;
            let current = vecs.clone();
            for a in &current {
                for b in &current {
                    let mut br = vec![Scalar::zero(); d];
                    for (i, ai) in a.iter().enumerate() {
                        if ai.is_zero() {
                            continue;
                        }
                        for (j, bj) in b.iter().enumerate() {
                            if bj.is_zero() {
                                continue;
                            }
                            for (k, slot) in br.iter_mut().enumerate() {
                                let c = self.c(i, j, k);
                                if !c.is_zero() {
                                    *slot += ai * bj * c;
                                }
                            }
                        }
                    }
                    let trial = Matrix::hstack(&[&span, &Matrix::column_vector(br.clone())]).unwrap();
                    if trial.rank() > span.rank() {
                        span = trial;
                        vecs.push(br);
                        grown = true;
                    }
                }
            }
            if !grown {
                return span;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Semisimplicity {
    pub semisimple: bool,
    /// Set for the zero algebra, where the hypothesis is vacuous.
    pub trivially: bool,
    #[serde(with = "scalar::serde_scalar")]
    pub killing_det: Scalar,
}

/// `g1` as a `g0`-module: `[x_i, e_j] = sum_k A_i[k][j] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddPart {
    dim: usize,
    action: Vec<Matrix>,
}

impl OddPart {
    pub fn new(dim: usize, action: Vec<Matrix>) -> Result<Self> {
        for (i, a) in action.iter().enumerate() {
            if a.shape() != (dim, dim) {
                return Err(Error::Shape(format!("action matrix {i} is {:?}, expected {dim}x{dim}", a.shape())));
            }
        }
        Ok(OddPart { dim, action })
    }

    pub fn trivial(dim: usize, dim0: usize) -> Self {
        OddPart { dim, action: vec![Matrix::zeros(dim, dim); dim0] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }
}

/// Symmetric odd bracket `[e_j, e_k] = sum_i B[j][k][i] x_i`. Only used to
/// write down the self-commuting cone; the module machinery assumes it is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddBracketForm {
    dim1: usize,
    dim0: usize,
    coeffs: Vec<Scalar>,
}

impl OddBracketForm {
    pub fn from_triples(
        dim1: usize,
        dim0: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut coeffs = vec![Scalar::zero(); dim1 * dim1 * dim0];
        for (j, k, i, v) in triples {
            if j >= dim1 || k >= dim1 || i >= dim0 {
                return Err(Error::Shape(format!("odd bracket index ({j},{k},{i}) out of range")));
            }
            coeffs[(j * dim1 + k) * dim0 + i] = v;
        }
        let form = OddBracketForm { dim1, dim0, coeffs };
        for j in 0..dim1 {
            for k in 0..dim1 {
                for i in 0..dim0 {
                    if form.b(j, k, i) != form.b(k, j, i) {
                        return Err(Error::Invariant(format!("odd bracket not symmetric at ({j},{k},{i})")));
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn b(&self, j: usize, k: usize, i: usize) -> &Scalar {
        &self.coeffs[(j * self.dim1 + k) * self.dim0 + i]
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn dim0(&self) -> usize {
        self.dim0
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for j in 0..self.dim1 {
            for k in 0..self.dim1 {
                for i in 0..self.dim0 {
                    let v = self.b(j, k, i);
                    if !v.is_zero() {
                        out.push((j, k, i, v.clone()));
                    }
                }
            }
        }
        out
    }
}

/// Quadratic equations of the self-commuting cone `{x : [x,x] = 0}` in the
/// coordinates `x = sum_j t_j e_j`, one per even basis index, zero ones
/// dropped. With no odd bracket the cone is all of `P(g1)`.
pub fn cone_equations(dim1: usize, form: Option<&OddBracketForm>) -> Result<PolyIdeal> {
    let Some(b) = form else {
        return Ok(PolyIdeal::new(dim1, []));
    };
    if b.dim1() != dim1 {
        return Err(Error::DimensionMismatch(format!("odd bracket on {} odd coordinates, expected {dim1}", b.dim1())));
    }
    let gens = (0..b.dim0()).map(|i| {
        let mut terms = Vec::new();
        for j in 0..dim1 {
            for k in 0..dim1 {
                let mut e = vec![0u32; dim1];
                e[j] += 1;
                e[k] += 1;
                terms.push((e, b.b(j, k, i).clone()));
            }
        }
        Polynomial::from_terms(dim1, terms).expect("exponent lengths match")
    });
    Ok(PolyIdeal::new(dim1, gens))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub first_failure: Option<[usize; 3]>,
}

impl Check {
    fn pass(name: &str) -> Self {
        Check { name: name.to_string(), passed: true, first_failure: None }
    }

    fn fail(name: &str, at: [usize; 3]) -> Self {
        Check { name: name.to_string(), passed: false, first_failure: Some(at) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    pub name: Option<String>,
    even: LieAlgebraEven,
    odd: OddPart,
    odd_bracket: Option<OddBracketForm>,
}

// Names are labels only; equality is structural.
impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.even == other.even && self.odd == other.odd && self.odd_bracket == other.odd_bracket
    }
}

impl Eq for SuperAlgebra {}

impl SuperAlgebra {
    /// Checks shapes only; call [`SuperAlgebra::validate`] for the identities.
    pub fn new(even: LieAlgebraEven, odd: OddPart) -> Result<Self> {
        if odd.action.len() != even.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an even part of dimension {}",
                odd.action.len(),
                even.dim()
            )));
        }
        Ok(SuperAlgebra { name: None, even, odd, odd_bracket: None })
    }

    pub fn with_odd_bracket(mut self, form: OddBracketForm) -> Result<Self> {
        if form.dim1() != self.dim1() || form.dim0() != self.dim0() {
            return Err(Error::Shape("odd bracket dimensions do not match the algebra".into()));
        }
        self.odd_bracket = Some(form);
        Ok(self)
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Validates and fails with the first broken identity.
    pub fn validated(self) -> Result<Self> {
        let report = self.validate();
        if let Some(c) = report.first_failure() {
            return Err(Error::Invariant(format!("algebra fails {} at {:?}", c.name, c.first_failure)));
        }
        Ok(self)
    }

    pub fn even(&self) -> &LieAlgebraEven {
        &self.even
    }

    pub fn odd(&self) -> &OddPart {
        &self.odd
    }

    pub fn odd_bracket(&self) -> Option<&OddBracketForm> {
        self.odd_bracket.as_ref()
    }

    pub fn dim0(&self) -> usize {
        self.even.dim()
    }

    pub fn dim1(&self) -> usize {
        self.odd.dim()
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            checks: vec![
                self.even.check_antisymmetry(),
                self.even.check_jacobi(),
                self.even.check_representation(&self.odd.action, "representation"),
            ],
        }
    }

    pub fn cone_equations(&self) -> PolyIdeal {
        cone_equations(self.dim1(), self.odd_bracket.as_ref()).expect("dimensions checked on construction")
    }

    /// Exterior algebra `Λ(k^n)`: zero even part, `n` odd generators.
    pub fn grassmann(n: usize) -> Self {
        SuperAlgebra::new(LieAlgebraEven::zero_algebra(), OddPart::trivial(n, 0))
            .unwrap()
            .named(format!("grassmann({n})"))
    }

    /// sl2 acting trivially on an `n`-dimensional odd part.
    pub fn sl2_trivial(n: usize) -> Self {
        SuperAlgebra::new(LieAlgebraEven::sl2(), OddPart::trivial(n, 3))
            .unwrap()
            .named(format!("sl2_trivial({n})"))
    }

    /// sl2 with `g1` the adjoint representation.
    pub fn sl2_adjoint() -> Self {
        let even = LieAlgebraEven::sl2();
        let action = (0..3).map(|i| even.ad(i)).collect();
        let odd = OddPart::new(3, action).unwrap();
        SuperAlgebra::new(even, odd).unwrap().named("sl2_adjoint")
    }

    /// sl2 with `g1` a sum of `m` copies of the natural representation.
    pub fn sl2_natural_sum(m: usize) -> Self {
        let nat = sl2_natural();
        let action = nat.iter().map(|a| Matrix::identity(m).kron(a)).collect();
        let odd = OddPart::new(2 * m, action).unwrap();
        SuperAlgebra::new(LieAlgebraEven::sl2(), odd).unwrap().named(format!("sl2_natural_sum({m})"))
    }

    /// Resolves a built-in name such as `"grassmann(2)"` or `"sl2_adjoint"`.
    pub fn builtin(name: &str) -> Result<Self> {
        let name = name.trim();
        let arg = |prefix: &str| -> Option<Result<usize>> {
            let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(rest.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad argument in {name:?}: {e}"))))
        };
        if name == "sl2_adjoint" {
            return Ok(SuperAlgebra::sl2_adjoint());
        }
        if let Some(n) = arg("grassmann") {
            return Ok(SuperAlgebra::grassmann(n?));
        }
        if let Some(n) = arg("sl2_trivial") {
            return Ok(SuperAlgebra::sl2_trivial(n?));
        }
        if let Some(n) = arg("sl2_natural_sum") {
            return Ok(SuperAlgebra::sl2_natural_sum(n?));
        }
        Err(Error::Parse(format!("unknown built-in algebra {name:?}")))
    }

    pub fn builtin_names() -> &'static [&'static str] {
        &["grassmann(n)", "sl2_trivial(n)", "sl2_adjoint", "sl2_natural_sum(m)"]
    }
}

/// Natural representation of sl2 in the basis `(e, h, f)`.
pub fn sl2_natural() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for alg in [
            SuperAlgebra::grassmann(0),
            SuperAlgebra::grassmann(3),
            SuperAlgebra::sl2_trivial(2),
            SuperAlgebra::sl2_adjoint(),
            SuperAlgebra::sl2_natural_sum(2),
        ] {
            assert!(alg.validate().passed(), "{:?}", alg.name);
        }
    }

    #[test]
    fn perturbed_sl2_breaks_jacobi() {
        let sl2 = LieAlgebraEven::sl2();
        let mut triples = sl2.triples();
        for t in triples.iter_mut() {
            if (t.0, t.1, t.2) == (1, 0, 0) {
                t.3 = int(3);
            }
            if (t.0, t.1, t.2) == (0, 1, 0) {
                t.3 = int(-3);
            }
        }
        let bad = LieAlgebraEven::from_triples(3, triples).unwrap();
        assert!(bad.check_antisymmetry().passed);
        let j = bad.check_jacobi();
        assert!(!j.passed);
        assert!(j.first_failure.is_some());
    }

    #[test]
    fn antisymmetry_failure_reports_triple() {
        let bad = LieAlgebraEven::from_triples(2, [(0, 1, 1, int(1))]).unwrap();
        assert_eq!(bad.check_antisymmetry().first_failure, Some([0, 1, 1]));
    }

    #[test]
    fn broken_representation_detected() {
        let even = LieAlgebraEven::sl2();
        let mut action: Vec<Matrix> = (0..3).map(|i| even.ad(i)).collect();
        action[0] = action[0].scale(&int(2));
        let alg = SuperAlgebra::new(even, OddPart::new(3, action).unwrap()).unwrap();
        let report = alg.validate();
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().name, "representation");
    }

    #[test]
    fn killing_form_of_sl2() {
        // Independent oracle: ad matrices written out by hand in the basis
        // (e, h, f), columns = images of basis vectors.
        let ad_e = Matrix::from_i64(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]);
        let ad_h = Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]);
        let ad_f = Matrix::from_i64(&[&[0, 0, 0], &[-1, 0, 0], &[0, 2, 0]]);
        let ads = [ad_e, ad_h, ad_f];
        let sl2 = LieAlgebraEven::sl2();
        for (i, a) in ads.iter().enumerate() {
            assert_eq!(&sl2.ad(i), a);
        }
        let k = sl2.killing_form();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k.get(i, j), &(&ads[i] * &ads[j]).trace());
            }
        }
        assert_eq!(k.get(1, 1), &int(8));
        assert_eq!(k.get(0, 2), &int(4));
        assert_eq!(k.get(0, 0), &int(0));
        assert_eq!(k.get(2, 2), &int(0));
        assert_eq!(k, k.transpose());
    }

    #[test]
    fn killing_form_edge_cases() {
        assert!(LieAlgebraEven::abelian(2).killing_form().is_zero());
        assert_eq!(LieAlgebraEven::zero_algebra().killing_form().shape(), (0, 0));
    }

    #[test]
    fn semisimplicity() {
        let s = LieAlgebraEven::sl2().semisimplicity();
        assert!(s.semisimple && !s.trivially);
        assert_eq!(s.killing_det, int(-128));
        assert!(!LieAlgebraEven::abelian(1).is_semisimple());
        let z = LieAlgebraEven::zero_algebra().semisimplicity();
        assert!(z.semisimple && z.trivially);
        let sl2 = LieAlgebraEven::sl2();
        assert!(sl2.direct_sum(&sl2).is_semisimple());
        // gl2 = sl2 ⊕ center
        assert!(!sl2.direct_sum(&LieAlgebraEven::abelian(1)).is_semisimple());
    }

    #[test]
    fn sl2_is_generated_by_e_and_f() {
        assert_eq!(LieAlgebraEven::sl2().generating_indices(), vec![0, 2]);
        assert_eq!(LieAlgebraEven::abelian(2).generating_indices(), vec![0, 1]);
        assert!(LieAlgebraEven::zero_algebra().generating_indices().is_empty());
    }

    #[test]
    fn cone_equation_examples() {
        assert!(cone_equations(3, None).unwrap().is_zero_ideal());

        let gl11 = OddBracketForm::from_triples(2, 1, [(0, 1, 0, int(1)), (1, 0, 0, int(1))]).unwrap();
        let ideal = cone_equations(2, Some(&gl11)).unwrap();
        assert_eq!(ideal.generators.len(), 1);
        let expected = Polynomial::variable(2, 0).mul(&Polynomial::variable(2, 1)).scale(&int(2));
        assert_eq!(ideal.generators[0], expected);

        let zero = OddBracketForm::from_triples(2, 3, []).unwrap();
        assert!(cone_equations(2, Some(&zero)).unwrap().is_zero_ideal());
        assert!(OddBracketForm::from_triples(2, 1, [(0, 1, 0, int(1))]).is_err());
    }

    #[test]
    fn cone_equations_match_direct_bracket() {
        // [x,x]_i = sum_{j,k} t_j t_k B[j][k][i], compared against the generators
        // on a grid of points.
        let form = OddBracketForm::from_triples(
            3,
            2,
            [(0, 1, 0, int(1)), (1, 0, 0, int(1)), (2, 2, 1, int(1)), (0, 0, 1, int(-1))],
        )
        .unwrap();
        let ideal = cone_equations(3, Some(&form)).unwrap();
        for a in -2..=2 {
            for b in -2..=2 {
                for c in -2..=2 {
                    let t = [int(a), int(b), int(c)];
                    let mut bracket_zero = true;
                    for i in 0..2 {
                        let mut acc = Scalar::zero();
                        for j in 0..3 {
                            for k in 0..3 {
                                acc += &t[j] * &t[k] * form.b(j, k, i);
                            }
                        }
                        bracket_zero &= acc.is_zero();
                    }
                    assert_eq!(ideal.vanishes_at(&t).unwrap(), bracket_zero);
                }
            }
        }
    }

    #[test]
    fn builtin_names_parse() {
        assert_eq!(SuperAlgebra::builtin("grassmann(2)").unwrap().dim1(), 2);
        assert_eq!(SuperAlgebra::builtin("sl2_natural_sum(2)").unwrap().dim1(), 4);
        assert_eq!(SuperAlgebra::builtin("sl2_adjoint").unwrap().dim1(), 3);
        assert!(SuperAlgebra::builtin("so3").is_err());
        assert!(SuperAlgebra::builtin("grassmann(x)").is_err());
    }
}
