//! The Hasse symbol `{D/P}` at an unramified place and an explicit splitting test.

use serde::Serialize;
use thiserror::Error;

use crate::gf::{ExtField, Field, Fq};
use crate::poly::PolyError;
use crate::ratfunc::{FqPoly, FunctionField, Place, RationalFunction};

/// Default cap on the residue-field size searched by [`splitting_oracle`].
pub const DEFAULT_SEARCH_BOUND: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("D has a pole at the place")]
    RamifiedPlace,
    #[error("not a place: {0}")]
    NotAPlace(#[from] PolyError),
    #[error("residue field of size {size} exceeds the search bound {bound}")]
    ResidueFieldTooLarge { size: u128, bound: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Splitting {
    SplitsCompletely,
    Inert,
}

fn check_regular(
    kf: &FunctionField,
    d: &RationalFunction,
    place: &FqPoly,
) -> Result<(), SymbolError> {
    if kf.pole_order(d, &Place::Finite(place.clone())) > 0 {
        return Err(SymbolError::RamifiedPlace);
    }
    Ok(())
}

/// `D mod P` as an element of the residue field `F_q[t]/(P)`.
fn residue_value(d: &RationalFunction, residue: &ExtField<Fq>) -> Vec<u32> {
    let num = residue.reduce(d.num());
    let den = residue.reduce(d.den());
    let inv = residue.inv(&den).expect("D is regular at the place");
    residue.mul(&num, &inv)
}

/// `{D/P}` as an integer in `0..p`: the absolute trace of `D mod P`.
pub fn hasse_symbol(
    kf: &FunctionField,
    d: &RationalFunction,
    place: &FqPoly,
) -> Result<u64, SymbolError> {
    let residue = kf.ring().residue_field(place)?;
    hasse_symbol_in(kf, d, &residue)
}

/// [`hasse_symbol`] with a residue field already built for the place.
pub fn hasse_symbol_in(
    kf: &FunctionField,
    d: &RationalFunction,
    residue: &ExtField<Fq>,
) -> Result<u64, SymbolError> {
    check_regular(kf, d, residue.modulus())?;
    let x = residue_value(d, residue);
    Ok(residue.absolute_trace(&x))
}

/// The symbol from the congruence `{D/P} ≡ D + D^p + ... + D^{N(P)/p} (mod P)`,
/// computed by repeated `p`-th powering in `F_q[t]/(P)` without the residue-field tables.
pub fn hasse_symbol_powersum(
    kf: &FunctionField,
    d: &RationalFunction,
    place: &FqPoly,
) -> Result<u64, SymbolError> {
    let r = kf.ring();
    if !r.is_monic(place) {
        return Err(PolyError::NotMonic.into());
    }
    if !r.is_irreducible(place) {
        return Err(PolyError::Reducible.into());
    }
    check_regular(kf, d, place)?;
    let p = kf.field().characteristic();
    let steps = kf.field().prime_degree() * place.degree().unwrap_or(0);
    let inv = r
        .inv_mod(d.den(), place)
        .expect("D is regular at the place");
    let mut term = r.rem(&r.mul(d.num(), &inv), place).expect("nonzero place");
    let mut sum = term.clone();
    for _ in 1..steps {
        term = r.pow_mod(&term, p, place);
        sum = r.add(&sum, &term);
    }
    let c = r.coeff(&sum, 0);
    assert!(sum.degree().unwrap_or(0) == 0, "trace sum is a constant");
    Ok(kf.field().prime_value(&c).expect("trace sum lies in F_p"))
}

/// Decides splitting at `P` by searching the residue field for a root of
/// `T^p - T - (D mod P)`.
pub fn splitting_oracle(
    kf: &FunctionField,
    d: &RationalFunction,
    place: &FqPoly,
    bound: u64,
) -> Result<Splitting, SymbolError> {
    let residue = kf.ring().residue_field(place)?;
    check_regular(kf, d, place)?;
    let size = (kf.field().q() as u128).pow(residue.degree() as u32);
    if size > bound as u128 {
        return Err(SymbolError::ResidueFieldTooLarge { size, bound });
    }
    let c = residue_value(d, &residue);
    let found = residue
        .elements()
        .any(|x| residue.sub(&residue.frobenius(&x), &x) == c);
    Ok(if found {
        Splitting::SplitsCompletely
    } else {
        Splitting::Inert
    })
}
