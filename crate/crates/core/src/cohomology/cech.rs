use num_integer::binomial;

use crate::error::{Error, Result};
use crate::linalg::scalar::int;
use crate::linalg::Matrix;

use super::CohomologyTable;

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(pos) = (0..k).rev().find(|&p| c[p] < n - k + p) else {
            return out;
        };
        c[pos] += 1;
        for q in pos + 1..k {
            c[q] = c[q - 1] + 1;
        }
    }
}

/// Number of integer vectors of length `r + 1` with sum `d`, entries in
/// `[-bound, -1]` on `neg` and in `[0, bound]` elsewhere.
fn count_with_negative_set(r: usize, d: i64, neg: &[usize], bound: i64) -> u128 {
    // counts[s + offset] = number of partial vectors with sum s.
    let width = (2 * bound * (r as i64 + 1) + 1) as usize;
    let offset = bound * (r as i64 + 1);
    let mut counts = vec![0u128; width];
    counts[offset as usize] = 1;
    for k in 0..=r {
        let (lo, hi) = if neg.contains(&k) { (-bound, -1) } else { (0, bound) };
        let mut next = vec![0u128; width];
        for (idx, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for a in lo..=hi {
                let t = idx as i64 + a;
                if t >= 0 && (t as usize) < width {
                    next[t as usize] += c;
                }
            }
        }
        counts = next;
    }
    let target = d + offset;
    if target < 0 || target as usize >= width {
        0
    } else {
        counts[target as usize]
    }
}

/// Cohomology of the Čech complex of one Laurent monomial with negative set
/// `neg`: cochains on the faces `I ⊇ neg` of the simplex on `r + 1`
/// vertices, with `(δc)_I = sum_t (-1)^t c_{I \ i_t}`.
fn local_cohomology(r: usize, neg: &[usize]) -> Vec<usize> {
    let n = r + 1;
    let faces: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|p| subsets_of_size(n, p + 1).into_iter().filter(|i| neg.iter().all(|x| i.contains(x))).collect())
        .collect();
    let index = |p: usize, face: &[usize]| faces[p].iter().position(|f| f == face);
    let ranks: Vec<usize> = (0..n)
        .map(|p| {
            if p + 1 >= n {
                return 0;
            }
            let mut m = Matrix::zeros(faces[p + 1].len(), faces[p].len());
            for (row, face) in faces[p + 1].iter().enumerate() {
                for t in 0..face.len() {
                    let mut smaller = face.clone();
                    smaller.remove(t);
                    if let Some(col) = index(p, &smaller) {
                        m.set(row, col, int(if t % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
            m.rank()
        })
        .collect();
    (0..n).map(|p| faces[p].len() - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 }).collect()
}

/// `dim H^l(P^r, O(d))` for `0 <= l <= r`, by rank computations on the Čech
/// complex of the standard cover, one Laurent monomial class at a time.
/// Exponents are bounded by `|d| + r`, which contains every monomial that
/// contributes to cohomology.
pub fn cech_line_bundle(r: usize, d: i64) -> Result<CohomologyTable> {
    if r == 0 {
        return Err(Error::Precondition("projective space of dimension 0".into()));
    }
    let bound = d.abs() + r as i64;
    let mut dims = vec![0u128; r + 1];
    for size in 0..=r + 1 {
        for neg in subsets_of_size(r + 1, size) {
            let count = count_with_negative_set(r, d, &neg, bound);
            if count == 0 {
                continue;
            }
            for (l, h) in local_cohomology(r, &neg).into_iter().enumerate() {
                dims[l] += count * h as u128;
            }
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|x| x as usize).collect();
    Ok(CohomologyTable::from_dims(format!("cech P^{r} O({d})"), 0, &dims))
}

/// `binomial(d + r, r)` for `d >= 0`, else 0.
pub fn closed_form_h0(r: usize, d: i64) -> usize {
    if d < 0 {
        0
    } else {
        binomial(d as usize + r, r)
    }
}

/// `binomial(-d - 1, r)` for `d <= -r - 1`, else 0.
pub fn closed_form_top(r: usize, d: i64) -> usize {
    if d > -(r as i64) - 1 {
        0
    } else {
        binomial((-d - 1) as usize, r)
    }
}
