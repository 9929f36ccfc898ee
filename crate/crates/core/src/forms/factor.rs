use rug::{Complete, Integer};
use serde::Serialize;

use super::BinaryForm;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::roots::{isolate_roots, split_irreducible, PrecisionConfig};

pub const MAX_FACTOR_DEGREE: usize = 12;

/// `F = content * prod factor^multiplicity`, factors primitive with positive
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "ser_int")]
    pub content: Integer,
    pub factors: Vec<(BinaryForm, u32)>,
}

fn ser_int<S: serde::Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn mul_forms(p: &BinaryForm, q: &BinaryForm) -> BinaryForm {
    let a = p.coeffs();
    let b = q.coeffs();
    let mut out = vec![Integer::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += (x * y).complete();
        }
    }
    BinaryForm::new(out).expect("product of nonzero forms")
}

impl Factorization {
    pub fn product(&self) -> BinaryForm {
        let mut acc: Option<BinaryForm> = None;
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = Some(match acc {
                    Some(a) => mul_forms(&a, f),
                    None => f.clone(),
                });
            }
        }
        let acc = acc.expect("at least one factor");
        BinaryForm::new(acc.coeffs().iter().map(|c| (c * &self.content).complete()).collect())
            .expect("nonzero content")
    }

    /// A single factor of multiplicity one.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn min_factor_degree(&self) -> usize {
        self.factors.iter().map(|(f, _)| f.degree()).min().unwrap_or(0)
    }

    /// Factors with repetition, content first when it is not 1.
    pub fn forms(&self) -> Vec<BinaryForm> {
        self.factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat(f.clone()).take(*m as usize))
            .collect()
    }
}

fn homogenize(p: &IntPoly) -> BinaryForm {
    BinaryForm::new(p.coeffs().to_vec()).expect("degree >= 1")
}

/// Irreducible factorization over Z by recombining numerically computed roots.
pub fn factor_over_z(f: &BinaryForm, cfg: &PrecisionConfig) -> Result<Factorization> {
    let n = f.degree();
    if n > MAX_FACTOR_DEGREE {
        return Err(Error::DegreeTooLarge(n, MAX_FACTOR_DEGREE));
    }
    let mut content = f.content();
    let lead_zeros = f.coeffs().iter().take_while(|c| **c == 0).count();
    let rest = IntPoly::new(f.coeffs()[lead_zeros..].to_vec());
    if rest.leading() < 0 {
        content = -content;
    }
    let mut factors: Vec<(BinaryForm, u32)> = Vec::new();
    if lead_zeros > 0 {
        factors.push((BinaryForm::from_i64(&[0, 1]).unwrap(), lead_zeros as u32));
    }
    let mut g = rest.primitive_part();
    if g.degree() > 0 {
        let sqf = g.squarefree_part();
        let mut bits = cfg.bits;
        let parts = loop {
            let rs = isolate_roots(&sqf, &cfg.with_bits(bits))?;
            match split_irreducible(&rs) {
                Ok(p) => break p,
                Err(Error::PrecisionExhausted(_)) if bits * 2 <= cfg.ceiling() => bits *= 2,
                Err(e) => return Err(e),
            }
        };
        let mut found: Vec<(IntPoly, u32)> = Vec::new();
        for (h, _) in parts {
            let mut m = 0;
            while let Some(q) = g.div_exact(&h) {
                g = q;
                m += 1;
            }
            found.push((h, m));
        }
        found.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.0.coeffs().cmp(b.0.coeffs())));
        factors.extend(found.into_iter().map(|(h, m)| (homogenize(&h), m)));
    }
    if factors.is_empty() {
        // a constant times y^0: only possible for degree 0, rejected by BinaryForm
        return Err(Error::ZeroForm);
    }
    Ok(Factorization { content, factors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn recovers_cyclotomic_split() {
        // (x - y)(x^2 + xy + y^2) = x^3 - y^3
        let fz = factor_over_z(&form(&[1, 0, 0, -1]), &PrecisionConfig::default()).unwrap();
        assert_eq!(fz.content, 1);
        assert_eq!(
            fz.factors,
            vec![(form(&[1, -1]), 1), (form(&[1, 1, 1]), 1)]
        );
        assert_eq!(fz.product(), form(&[1, 0, 0, -1]));
    }

    #[test]
    fn irreducible_cubic() {
        let f = form(&[1, 0, -1, -1]);
        let fz = factor_over_z(&f, &PrecisionConfig::default()).unwrap();
        assert!(fz.is_irreducible());
        assert_eq!(fz.forms(), vec![f]);
    }

    #[test]
    fn content_and_sum_of_cubes() {
        let fz = factor_over_z(&form(&[2, 0, 0, 2]), &PrecisionConfig::default()).unwrap();
        assert_eq!(fz.content, 2);
        assert_eq!(fz.factors, vec![(form(&[1, 1]), 1), (form(&[1, -1, 1]), 1)]);
    }

    #[test]
    fn powers_and_y_factors() {
        let fz = factor_over_z(&form(&[1, 0, 0, 0]), &PrecisionConfig::default()).unwrap();
        assert_eq!(fz.factors, vec![(form(&[1, 0]), 3)]);
        let f = form(&[0, -3, 3, 0]);
        let fz = factor_over_z(&f, &PrecisionConfig::default()).unwrap();
        assert_eq!(fz.product(), f);
        assert_eq!(fz.content, -3);
    }

    #[test]
    fn degree_cap() {
        let mut c = vec![0i64; 14];
        c[0] = 1;
        c[13] = 1;
        assert_eq!(
            factor_over_z(&form(&c), &PrecisionConfig::default()),
            Err(Error::DegreeTooLarge(13, 12))
        );
    }
}
