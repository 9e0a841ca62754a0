//! Point counts, L-polynomial and class number of the curve `y^p - y = D`.
//!
//! Everything here is exact integer arithmetic over brute-force enumeration of
//! `F_{q^k}`, so it serves as an independent check on the genus-theory side.

use serde::Serialize;
use thiserror::Error;

use crate::asnorm::{Classification, NormalizedAS};
use crate::gf::{ExtField, Field};
use crate::invariants::lambda1;
use crate::ratfunc::FunctionField;

/// Default cap on the size `q^k` of any field enumerated for point counting.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("enumerating F_(q^{k}) needs {size} elements, over the budget of {budget}")]
    BudgetExceeded { k: usize, size: u128, budget: u64 },
    #[error("point counts do not determine an integral L-polynomial with the functional equation")]
    FunctionalEquationViolated,
    #[error("class number is only computed for ramified imaginary extensions, not {}", .0.name())]
    UnsupportedClassification(Classification),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LPolynomial {
    pub q: u64,
    pub genus: usize,
    /// `a_0..a_{2g}` with `a_0 = 1`.
    pub coeffs: Vec<i128>,
}

impl LPolynomial {
    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &a| acc * x + a)
    }

    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus;
        self.coeffs.len() == 2 * g + 1
            && self.coeffs[0] == 1
            && (0..=g).all(|i| {
                self.coeffs[2 * g - i] == (self.q as i128).pow((g - i) as u32) * self.coeffs[i]
            })
    }

    /// Power sums `s_k` of the inverse roots, for `k = 1..=n`.
    pub fn power_sums(&self, n: usize) -> Vec<i128> {
        let a = |j: usize| self.coeffs.get(j).copied().unwrap_or(0);
        let mut s: Vec<i128> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut v = -(k as i128) * a(k);
            for i in 1..k {
                v -= s[i - 1] * a(k - i);
            }
            s.push(v);
        }
        s
    }

    /// `N_k = q^k + 1 - s_k` predicted from the polynomial.
    pub fn predicted_counts(&self, n: usize) -> Vec<i128> {
        self.power_sums(n)
            .into_iter()
            .enumerate()
            .map(|(i, s)| (self.q as i128).pow(i as u32 + 1) + 1 - s)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaData {
    pub genus: usize,
    /// `N_1..N_{2g}`.
    pub point_counts: Vec<u64>,
    pub l: LPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisibilityCheck {
    pub lambda1: usize,
    pub class_number: i128,
    pub modulus: i128,
    pub pass: bool,
}

/// Riemann–Hurwitz: `2g - 2 = -2p + (p - 1) Σ deg(P) (e_P + 1)` over the ramified places.
pub fn genus(kf: &FunctionField, norm: &NormalizedAS) -> usize {
    let p = kf.field().characteristic() as usize;
    let mut total: usize = norm
        .parts
        .iter()
        .map(|d| d.place.degree().unwrap() * (d.e + 1))
        .sum();
    if norm.classification == Classification::RamifiedImaginary {
        total += norm.poly.degree().unwrap() + 1;
    }
    (p - 1) * (total - 2) / 2
}

fn field_size(kf: &FunctionField, k: usize, budget: u64) -> Result<u64, ZetaError> {
    let size = (kf.field().q() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(ZetaError::BudgetExceeded { k, size, budget });
    }
    Ok(size as u64)
}

/// Number of `F_{q^k}`-rational points on the smooth projective model.
pub fn point_count(
    kf: &FunctionField,
    norm: &NormalizedAS,
    k: usize,
    budget: u64,
) -> Result<u64, ZetaError> {
    assert!(k >= 1, "point counts start at k = 1");
    field_size(kf, k, budget)?;
    let p = kf.field().characteristic();
    let ext = ExtField::with_degree(kf.field().clone(), k).expect("budget bounds the field size");
    let d = norm.value(kf);
    let mut count = 0u64;
    for x in ext.elements() {
        let den = ext.eval(d.den(), &x);
        let Some(inv) = ext.inv(&den) else {
            continue;
        };
        let value = ext.mul(&ext.eval(d.num(), &x), &inv);
        if ext.absolute_trace(&value) == 0 {
            count += p;
        }
    }
    for part in &norm.parts {
        let deg = part.place.degree().unwrap();
        if k.is_multiple_of(deg) {
            count += deg as u64;
        }
    }
    count += match norm.classification {
        Classification::RamifiedImaginary => 1,
        Classification::Real => p,
        // The place at infinity has residue field F_q and degree p over it.
        Classification::InertialImaginary => {
            if (k as u64).is_multiple_of(p) {
                p
            } else {
                0
            }
        }
    };
    Ok(count)
}

pub fn zeta_data(
    kf: &FunctionField,
    norm: &NormalizedAS,
    budget: u64,
) -> Result<ZetaData, ZetaError> {
    let g = genus(kf, norm);
    if g > 0 {
        field_size(kf, 2 * g, budget)?;
    }
    let point_counts = (1..=2 * g)
        .map(|k| point_count(kf, norm, k, budget))
        .collect::<Result<Vec<_>, _>>()?;
    let l = l_polynomial_from_counts(kf.field().q(), g, &point_counts)?;
    Ok(ZetaData {
        genus: g,
        point_counts,
        l,
    })
}

/// Newton's identities `k a_k = -Σ_{i=1}^{k} s_i a_{k-i}` with `s_k = q^k + 1 - N_k`.
pub fn l_polynomial_from_counts(
    q: u64,
    g: usize,
    counts: &[u64],
) -> Result<LPolynomial, ZetaError> {
    assert!(counts.len() >= 2 * g);
    let s: Vec<i128> = (0..2 * g)
        .map(|i| (q as i128).pow(i as u32 + 1) + 1 - counts[i] as i128)
        .collect();
    let mut a = vec![1i128];
    for k in 1..=2 * g {
        let sum: i128 = (1..=k).map(|i| s[i - 1] * a[k - i]).sum();
        if sum % k as i128 != 0 {
            return Err(ZetaError::FunctionalEquationViolated);
        }
        a.push(-sum / k as i128);
    }
    let l = LPolynomial {
        q,
        genus: g,
        coeffs: a,
    };
    if !l.satisfies_functional_equation() || l.eval(1) <= 0 {
        return Err(ZetaError::FunctionalEquationViolated);
    }
    Ok(l)
}

pub fn l_polynomial(
    kf: &FunctionField,
    norm: &NormalizedAS,
    budget: u64,
) -> Result<LPolynomial, ZetaError> {
    Ok(zeta_data(kf, norm, budget)?.l)
}

/// `h = L(1)`, the ideal class number of the integral closure of `F_q[t]`.
pub fn class_number(
    kf: &FunctionField,
    norm: &NormalizedAS,
    budget: u64,
) -> Result<i128, ZetaError> {
    if norm.classification != Classification::RamifiedImaginary {
        return Err(ZetaError::UnsupportedClassification(norm.classification));
    }
    Ok(l_polynomial(kf, norm, budget)?.eval(1))
}

pub fn divisibility_check(kf: &FunctionField, norm: &NormalizedAS, h: i128) -> DivisibilityCheck {
    let l1 = lambda1(norm);
    let modulus = (kf.field().characteristic() as i128).pow(l1 as u32);
    DivisibilityCheck {
        lambda1: l1,
        class_number: h,
        modulus,
        pass: h % modulus == 0,
    }
}

/// Checks `p^{λ₁} | h`.
pub fn genus_divisibility_check(
    kf: &FunctionField,
    norm: &NormalizedAS,
    budget: u64,
) -> Result<DivisibilityCheck, ZetaError> {
    let h = class_number(kf, norm, budget)?;
    Ok(divisibility_check(kf, norm, h))
}
