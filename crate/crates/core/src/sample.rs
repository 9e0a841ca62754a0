//! Random inputs for property tests and sweeps.

use rand::{Rng, RngCore};

use crate::gf::{Field, Fq};
use crate::poly::PolyRing;
use crate::ratfunc::{FqPoly, FunctionField, RationalFunction};

pub fn poly(ring: &PolyRing<Fq>, rng: &mut dyn RngCore, max_degree: usize) -> FqPoly {
    let deg = rng.gen_range(0..=max_degree);
    ring.from_coeffs((0..=deg).map(|_| ring.field().random(rng)).collect())
}

pub fn nonzero_poly(ring: &PolyRing<Fq>, rng: &mut dyn RngCore, max_degree: usize) -> FqPoly {
    loop {
        let f = poly(ring, rng, max_degree);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn monic(ring: &PolyRing<Fq>, rng: &mut dyn RngCore, degree: usize) -> FqPoly {
    let mut coeffs: Vec<u32> = (0..degree).map(|_| ring.field().random(rng)).collect();
    coeffs.push(1);
    ring.from_coeffs(coeffs)
}

/// A random monic denominator of degree at most `max_degree`, built from small
/// factors raised to powers so that repeated and `p`-divisible pole orders occur.
pub fn denominator(ring: &PolyRing<Fq>, rng: &mut dyn RngCore, max_degree: usize) -> FqPoly {
    let mut den = ring.one();
    let mut deg = 0;
    for _ in 0..rng.gen_range(0..=3) {
        let d = rng.gen_range(1..=3);
        let e = rng.gen_range(1..=4);
        if deg + d * e > max_degree {
            continue;
        }
        den = ring.mul(&den, &ring.pow(&monic(ring, rng, d), e as u64));
        deg += d * e;
    }
    den
}

/// Random nonzero `num/den` with degree bounds on numerator and denominator.
pub fn ratfunc(
    kf: &FunctionField,
    rng: &mut dyn RngCore,
    max_num_degree: usize,
    max_den_degree: usize,
) -> RationalFunction {
    let r = kf.ring();
    let num = nonzero_poly(r, rng, max_num_degree);
    let den = denominator(r, rng, max_den_degree);
    kf.make(num, den).expect("nonzero denominator")
}
