//! Rational functions in `F_q(t)`: reduced fractions, pole orders and partial
//! fractions `D = Σ Q_i/P_i^{e_i} + f`.

use std::fmt;

use thiserror::Error;

use crate::gf::{Field, Fq};
use crate::poly::{Poly, PolyRing};

pub type FqPoly = Poly<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatFuncError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
}

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: FqPoly,
    den: FqPoly,
}

impl RationalFunction {
    pub fn num(&self) -> &FqPoly {
        &self.num
    }

    pub fn den(&self) -> &FqPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }
}

/// A place of `F_q(t)`: a monic irreducible `P`, or the infinite place `1/t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Place {
    Finite(FqPoly),
    Infinity,
}

/// `numer / place^e`, with `gcd(place, numer) = 1` and `deg numer < deg place^e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalPart {
    pub place: FqPoly,
    pub e: usize,
    pub numer: FqPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PFDecomposition {
    /// Sorted by the canonical order of their places.
    pub parts: Vec<LocalPart>,
    pub poly: FqPoly,
}

/// The rational function field `k = F_q(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionField {
    ring: PolyRing<Fq>,
}

impl FunctionField {
    pub fn new(field: Fq) -> Self {
        Self {
            ring: PolyRing::new(field),
        }
    }

    /// Uses `seed` for the factorization PRNG.
    pub fn with_seed(field: Fq, seed: u64) -> Self {
        Self {
            ring: PolyRing::with_seed(field, seed),
        }
    }

    pub fn ring(&self) -> &PolyRing<Fq> {
        &self.ring
    }

    pub fn field(&self) -> &Fq {
        self.ring.field()
    }

    pub fn make(&self, num: FqPoly, den: FqPoly) -> Result<RationalFunction, RatFuncError> {
        let r = &self.ring;
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let g = r.gcd(&num, &den);
        let (num, den) = (r.div_exact(&num, &g), r.div_exact(&den, &g));
        let inv = self.field().inv(r.lead(&den)).expect("nonzero");
        Ok(RationalFunction {
            num: r.scale(&num, &inv),
            den: r.scale(&den, &inv),
        })
    }

    pub fn from_poly(&self, p: FqPoly) -> RationalFunction {
        RationalFunction {
            num: p,
            den: self.ring.one(),
        }
    }

    pub fn zero(&self) -> RationalFunction {
        self.from_poly(self.ring.zero())
    }

    pub fn one(&self) -> RationalFunction {
        self.from_poly(self.ring.one())
    }

    pub fn constant(&self, c: u32) -> RationalFunction {
        self.from_poly(self.ring.constant(c))
    }

    pub fn t(&self) -> RationalFunction {
        self.from_poly(self.ring.t())
    }

    fn reduced(&self, num: FqPoly, den: FqPoly) -> RationalFunction {
        self.make(num, den).expect("nonzero denominator")
    }

    pub fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        let r = &self.ring;
        if a.den == b.den {
            return self.reduced(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.reduced(num, r.mul(&a.den, &b.den))
    }

    pub fn neg(&self, a: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: self.ring.neg(&a.num),
            den: a.den.clone(),
        }
    }

    pub fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        let r = &self.ring;
        self.reduced(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }

    pub fn inv(&self, a: &RationalFunction) -> Result<RationalFunction, RatFuncError> {
        if a.is_zero() {
            return Err(RatFuncError::DivisionByZero);
        }
        Ok(self.reduced(a.den.clone(), a.num.clone()))
    }

    pub fn div(
        &self,
        a: &RationalFunction,
        b: &RationalFunction,
    ) -> Result<RationalFunction, RatFuncError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &RationalFunction, e: i64) -> Result<RationalFunction, RatFuncError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunction {
            num: self.ring.pow(&base.num, k),
            den: self.ring.pow(&base.den, k),
        })
    }

    /// Multiplication by the image of an integer in `F_p`.
    pub fn scale_int(&self, a: &RationalFunction, x: i64) -> RationalFunction {
        let c = self.field().from_int(x);
        self.reduced(self.ring.scale(&a.num, &c), a.den.clone())
    }

    /// The Artin–Schreier operator `B ↦ B^p − B`.
    pub fn wp(&self, b: &RationalFunction) -> RationalFunction {
        let p = self.field().characteristic() as i64;
        self.sub(&self.pow(b, p).expect("nonnegative exponent"), b)
    }

    /// Multiplicity of the prime `place` in `a` (zero if `a` is divisible by none).
    fn multiplicity(&self, a: &FqPoly, place: &FqPoly) -> usize {
        let mut k = 0;
        let mut rest = a.clone();
        while !rest.is_zero() {
            let (q, r) = self.ring.divmod(&rest, place).expect("nonzero place");
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        k
    }

    /// `-v(D)` at the place when positive, else 0.
    pub fn pole_order(&self, d: &RationalFunction, place: &Place) -> usize {
        match place {
            Place::Finite(p) => self.multiplicity(&d.den, p),
            Place::Infinity => {
                if d.is_zero() {
                    return 0;
                }
                let (dn, dd) = (d.num.degree().unwrap(), d.den.degree().unwrap());
                dn.saturating_sub(dd)
            }
        }
    }

    pub fn partial_fractions(&self, d: &RationalFunction) -> PFDecomposition {
        let r = &self.ring;
        let (poly, rem) = r.divmod(&d.num, &d.den).expect("nonzero denominator");
        if d.is_polynomial() {
            return PFDecomposition {
                parts: Vec::new(),
                poly,
            };
        }
        let fac = r.factorize(&d.den).expect("nonzero denominator");
        let parts = fac
            .factors
            .into_iter()
            .map(|(place, e)| {
                let prime_power = r.pow(&place, e as u64);
                let cofactor = r.div_exact(&d.den, &prime_power);
                let inv = r
                    .inv_mod(&cofactor, &prime_power)
                    .expect("coprime cofactor");
                let numer = r.rem(&r.mul(&rem, &inv), &prime_power).unwrap();
                LocalPart { place, e, numer }
            })
            .collect();
        PFDecomposition { parts, poly }
    }

    pub fn local_value(&self, part: &LocalPart) -> RationalFunction {
        let den = self.ring.pow(&part.place, part.e as u64);
        RationalFunction {
            num: part.numer.clone(),
            den,
        }
    }

    pub fn recombine(&self, parts: &[LocalPart], poly: &FqPoly) -> RationalFunction {
        parts
            .iter()
            .fold(self.from_poly(poly.clone()), |acc, part| {
                self.add(&acc, &self.local_value(part))
            })
    }

    /// Digits `c_j` with `deg c_j < deg P` and `Q = Σ_{j<e} c_j P^j`.
    pub fn padic_digits(&self, numer: &FqPoly, place: &FqPoly, e: usize) -> Vec<FqPoly> {
        let mut rest = numer.clone();
        (0..e)
            .map(|_| {
                let (q, c) = self.ring.divmod(&rest, place).expect("nonzero place");
                rest = q;
                c
            })
            .collect()
    }

    pub fn format(&self, d: &RationalFunction) -> String {
        Shown { kf: self, d }.to_string()
    }
}

struct Shown<'a> {
    kf: &'a FunctionField,
    d: &'a RationalFunction,
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.kf.ring;
        let paren = |p: &FqPoly| {
            let s = r.format(p);
            let terms = p.coeffs().iter().filter(|c| **c != 0).count();
            let atomic = terms <= 1 && p.coeffs().last().is_none_or(|c| r.field().is_atomic(c));
            if atomic {
                s
            } else {
                format!("({s})")
            }
        };
        if self.d.is_polynomial() {
            write!(f, "{}", r.format(&self.d.num))
        } else {
            write!(f, "{}/{}", paren(&self.d.num), paren(&self.d.den))
        }
    }
}
