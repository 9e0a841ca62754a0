//! Normal form of an Artin–Schreier datum `D`.
//!
//! `D` and `D + (B^p - B)` define the same extension of `k = F_q(t)`. The
//! normalizer removes every pole of order divisible by `p`, every leading term of
//! the polynomial part of degree divisible by `p`, and a trace-zero constant term,
//! recording the accumulated `B` as a witness. The reduction order is fixed:
//! finite places in canonical order, then the infinite place, then the constant.

use serde::Serialize;
use thiserror::Error;

use crate::gf::{ExtField, Field};
use crate::ratfunc::{FqPoly, FunctionField, LocalPart, Place, RationalFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    /// The infinite place splits (`f = 0`).
    Real,
    /// The infinite place is inert (`f` a constant of nonzero trace).
    InertialImaginary,
    /// The infinite place ramifies (`f` non-constant).
    RamifiedImaginary,
}

impl Classification {
    pub fn is_imaginary(self) -> bool {
        self != Classification::Real
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Real => "real",
            Classification::InertialImaginary => "inertial imaginary",
            Classification::RamifiedImaginary => "ramified imaginary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormError {
    #[error("D is of the form B^p - B: the extension is trivial")]
    TrivialExtension,
    #[error("D is equivalent to a constant: constant-field extension, not geometric")]
    NonGeometric,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedAS {
    /// The `D_i = Q_i / P_i^{e_i}` with `p ∤ e_i`, in canonical place order.
    pub parts: Vec<LocalPart>,
    /// The polynomial part `f`.
    pub poly: FqPoly,
    pub classification: Classification,
    /// `B` with `D_input = D_normalized + (B^p - B)`.
    pub witness: RationalFunction,
}

impl NormalizedAS {
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// The normalized `D = Σ D_i + f` as a single fraction.
    pub fn value(&self, kf: &FunctionField) -> RationalFunction {
        kf.recombine(&self.parts, &self.poly)
    }

    pub fn ramified_places(&self) -> Vec<Place> {
        let mut out: Vec<Place> = self
            .parts
            .iter()
            .map(|d| Place::Finite(d.place.clone()))
            .collect();
        if self.classification == Classification::RamifiedImaginary {
            out.push(Place::Infinity);
        }
        out
    }
}

pub fn classify_infinity(kf: &FunctionField, f: &FqPoly) -> Classification {
    match f.degree() {
        None => Classification::Real,
        Some(0) if kf.field().absolute_trace(&f.coeffs()[0]) != 0 => {
            Classification::InertialImaginary
        }
        // A trace-zero constant is B^p - B for a constant B; normalize() removes it.
        Some(0) => Classification::Real,
        Some(_) => Classification::RamifiedImaginary,
    }
}

pub fn normalize(kf: &FunctionField, d: &RationalFunction) -> Result<NormalizedAS, NormError> {
    let r = kf.ring();
    let field = kf.field();
    let p = field.characteristic() as usize;
    let pf = kf.partial_fractions(d);
    let mut witness = kf.zero();

    let mut parts = Vec::with_capacity(pf.parts.len());
    for LocalPart {
        place,
        mut e,
        mut numer,
    } in pf.parts
    {
        let residue = ExtField::new_unchecked(field.clone(), place.clone());
        while e % p == 0 {
            let mu = e / p;
            let lead = residue.reduce(&numer);
            let root = r.from_coeffs(residue.pth_root(&lead));
            // numer/P^e - (root/P^mu)^p + root/P^mu
            let shifted = r.mul(&root, &r.pow(&place, (e - mu) as u64));
            numer = r.add(&r.sub(&numer, &r.pow(&root, p as u64)), &shifted);
            let step = kf
                .make(root, r.pow(&place, mu as u64))
                .expect("nonzero place");
            witness = kf.add(&witness, &step);
            while !numer.is_zero() && e > 0 {
                let (q, rem) = r.divmod(&numer, &place).expect("nonzero place");
                if !rem.is_zero() {
                    break;
                }
                numer = q;
                e -= 1;
            }
            if numer.is_zero() || e == 0 {
                e = 0;
                break;
            }
        }
        if e > 0 {
            parts.push(LocalPart { place, e, numer });
        }
    }

    let mut f = pf.poly;
    while let Some(deg) = f.degree().filter(|&n| n > 0 && n % p == 0) {
        let c = *r.lead(&f);
        let s = field.pth_root(&c);
        let mono = r.monomial(s, deg / p);
        f = r.add(&r.sub(&f, &r.monomial(c, deg)), &mono);
        witness = kf.add(&witness, &kf.from_poly(mono));
    }
    let c0 = r.coeff(&f, 0);
    if c0 != 0 && field.absolute_trace(&c0) == 0 {
        let x = field
            .elements()
            .find(|x| field.sub(&field.frobenius(x), x) == c0)
            .expect("trace-zero constants lie in the image of x^p - x");
        f = r.sub(&f, &r.constant(c0));
        witness = kf.add(&witness, &kf.constant(x));
    }

    if parts.is_empty() {
        match f.degree() {
            None => return Err(NormError::TrivialExtension),
            Some(0) => return Err(NormError::NonGeometric),
            Some(_) => {}
        }
    }
    let classification = classify_infinity(kf, &f);
    Ok(NormalizedAS {
        parts,
        poly: f,
        classification,
        witness,
    })
}
