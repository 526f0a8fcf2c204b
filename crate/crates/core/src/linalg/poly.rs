use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{self, Scalar};
use crate::error::{Error, Result};

/// Multivariate polynomial in `t_1..t_nvars` with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

/// Graded lexicographic comparison: total degree first, then lexicographic.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate function `t_{i+1}` (0-based index `i`).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Polynomial::zero(nvars);
        p.add_term(exps, Scalar::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in a polynomial in {nvars} variables",
                    exps.len()
                )));
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms sorted by descending graded-lex order of exponents.
    pub fn terms_grlex(&self) -> Vec<(&Vec<u32>, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "polynomials in different rings");
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for a polynomial in {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Scalar::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(exps) {
                for _ in 0..k {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Largest term in graded-lex order.
    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.iter().max_by(|a, b| grlex(a.0, b.0)).map(|(_, c)| c)
    }

    /// Rescaled so that the leading coefficient is positive.
    pub fn sign_normalized(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => self.scale(&-Scalar::one()),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exps, c)) in self.terms_grlex().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("t{}", i + 1) } else { format!("t{}^{}", i + 1, e) })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A list of polynomial generators in `nvars` coordinates. Only membership of
/// points in the zero locus is ever computed; no Gröbner machinery.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyIdeal {
    pub nvars: usize,
    pub generators: Vec<Polynomial>,
}

impl PolyIdeal {
    /// Drops zero generators and exact duplicates, keeping first occurrence order.
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut gens = Vec::new();
        for g in generators {
            assert_eq!(g.nvars(), nvars, "generator in the wrong ring");
            if !g.is_zero() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        PolyIdeal { nvars, generators: gens }
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// True iff every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[Scalar]) -> Result<bool> {
        for g in &self.generators {
            if !g.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!("point of length {} in {} coordinates", point.len(), self.nvars)));
        }
        Ok(true)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exponents: Vec<u32>,
    #[serde(with = "scalar::serde_scalar")]
    coefficient: Scalar,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    nvars: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms_grlex()
            .into_iter()
            .map(|(e, c)| TermRepr { exponents: e.clone(), coefficient: c.clone() })
            .collect();
        PolyRepr { nvars: self.nvars, terms }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(de)?;
        Polynomial::from_terms(repr.nvars, repr.terms.into_iter().map(|t| (t.exponents, t.coefficient)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn eval_examples() {
        let five = Polynomial::constant(2, int(5));
        assert_eq!(five.eval(&[int(7), int(-1)]).unwrap(), int(5));

        let t1t2 = Polynomial::variable(2, 0).mul(&Polynomial::variable(2, 1));
        assert_eq!(t1t2.eval(&[int(1), int(0)]).unwrap(), int(0));

        let t1 = Polynomial::variable(2, 0);
        let p = t1.mul(&t1).sub(&Polynomial::variable(2, 1));
        assert_eq!(p.eval(&[int(3), int(4)]).unwrap(), int(5));
        assert!(matches!(p.eval(&[int(1)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn cancellation_removes_terms() {
        let t = Polynomial::variable(1, 0);
        assert!(t.sub(&t).is_zero());
        assert!(Polynomial::constant(3, int(0)).is_zero());
    }

    #[test]
    fn grlex_printing() {
        let t1 = Polynomial::variable(2, 0);
        let t2 = Polynomial::variable(2, 1);
        let p = t2.add(&t1.mul(&t1).scale(&int(-2))).add(&Polynomial::constant(2, int(3)));
        assert_eq!(p.to_string(), "-2*t1^2 + t2 + 3");
        let json = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
