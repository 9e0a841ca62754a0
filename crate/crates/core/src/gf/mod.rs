//! Finite fields and the two-level towers `F_p ⊆ F_q ⊆ F_{q^d}` used throughout
//! the crate.
//!
//! Fields are handle types implementing [`Field`]; elements are plain values that
//! only make sense relative to the handle that produced them. [`Fq`] is the base
//! field `F_p[u]/(m_u)` with table-driven arithmetic on packed elements, and
//! [`ExtField`] is `F[v]/(m_v)` over any base `F`, used for residue fields and
//! for point counting over `F_{q^k}`.

mod elem;
mod ext;
mod fq;

pub use elem::{arith, ArithOp, FieldElem};
pub use ext::ExtField;
pub use fq::{FieldDesc, Fq, MAX_FIELD_ORDER};

use std::fmt;
use std::hash::Hash;

use rand::RngCore;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must be monic of degree {expected}")]
    BadModulus { expected: usize },
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("field of order {p}^{n} exceeds the supported size")]
    TooLarge { p: u64, n: usize },
    #[error("coefficient {0} out of range")]
    CoefficientOutOfRange(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MismatchedFields,
    #[error("invalid field specification {0:?}: {1}")]
    BadSpec(String, String),
}

/// A finite field handle. Handles are cheap to clone and compare.
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn characteristic(&self) -> u64;

    /// Degree `N` of the field over its prime subfield.
    fn prime_degree(&self) -> usize;

    /// Number of elements, if it fits in a `u64`.
    fn order(&self) -> Option<u64> {
        self.characteristic()
            .checked_pow(self.prime_degree() as u32)
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of an integer under `Z -> F_p -> F`.
    fn from_int(&self, n: i64) -> Self::Elem;

    /// `x^p`.
    fn frobenius(&self, x: &Self::Elem) -> Self::Elem;

    /// `Tr_{F/F_p}(x)` as a residue in `[0, p)`.
    fn absolute_trace(&self, x: &Self::Elem) -> u64;

    /// Returns `Some(c)` when `x` lies in the prime field and equals `c mod p`.
    fn prime_value(&self, x: &Self::Elem) -> Option<u64>;

    /// The element with enumeration index `i`, for `i < order()`.
    fn element(&self, index: u64) -> Self::Elem;

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Human-readable rendering, parseable by the expression grammar.
    fn format(&self, x: &Self::Elem) -> String;

    /// Whether [`Field::format`] yields a single atom (no top-level `+`).
    fn is_atomic(&self, x: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, x: &Self::Elem) -> bool {
        *x == self.one()
    }

    fn pow(&self, x: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = x.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Unique `y` with `y^p = x`.
    fn pth_root(&self, x: &Self::Elem) -> Self::Elem {
        let mut y = x.clone();
        for _ in 1..self.prime_degree() {
            y = self.frobenius(&y);
        }
        y
    }

    /// `x + x^p + ... + x^{p^{N-1}}`, returned as a field element.
    fn conjugate_sum(&self, x: &Self::Elem) -> Self::Elem {
        let mut acc = x.clone();
        let mut y = x.clone();
        for _ in 1..self.prime_degree() {
            y = self.frobenius(&y);
            acc = self.add(&acc, &y);
        }
        acc
    }

    /// Iterates over all elements in enumeration order. Panics if the field
    /// order does not fit in a `u64`.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        let order = self.order().expect("field too large to enumerate");
        Box::new((0..order).map(move |i| self.element(i)))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fields() -> Vec<Fq> {
        [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 3),
            (5, 1),
            (5, 2),
            (7, 2),
        ]
        .into_iter()
        .map(|(p, n)| Fq::new(p, n).unwrap())
        .collect()
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        for f in fields() {
            for x in f.elements() {
                assert_eq!(f.frobenius(&f.pth_root(&x)), x);
                assert_eq!(f.pth_root(&f.frobenius(&x)), x);
            }
        }
    }

    #[test]
    fn trace_fibers_are_uniform() {
        for f in fields().into_iter().filter(|f| f.order().unwrap() <= 64) {
            let p = f.characteristic();
            let n = f.prime_degree() as u32;
            let mut counts = vec![0u64; p as usize];
            for x in f.elements() {
                let t = f.absolute_trace(&x);
                assert_eq!(f.prime_value(&f.conjugate_sum(&x)), Some(t));
                assert_eq!(f.absolute_trace(&f.frobenius(&x)), t);
                counts[t as usize] += 1;
            }
            assert!(
                counts.iter().all(|&c| c == p.pow(n - 1)),
                "{f:?}: {counts:?}"
            );
        }
    }

    #[test]
    fn additive_hilbert_90() {
        for f in fields().into_iter().filter(|f| f.order().unwrap() <= 64) {
            let image: std::collections::HashSet<_> =
                f.elements().map(|x| f.sub(&f.frobenius(&x), &x)).collect();
            for c in f.elements() {
                assert_eq!(image.contains(&c), f.absolute_trace(&c) == 0);
            }
        }
    }

    #[test]
    fn trace_is_linear() {
        for f in fields() {
            let p = f.characteristic();
            let elems: Vec<_> = f.elements().take(40).collect();
            for a in &elems {
                for b in &elems {
                    let lhs = f.absolute_trace(&f.add(a, b));
                    assert_eq!(lhs, (f.absolute_trace(a) + f.absolute_trace(b)) % p);
                }
                for c in 1..p {
                    let scaled = f.mul(&f.from_int(c as i64), a);
                    assert_eq!(f.absolute_trace(&scaled), c * f.absolute_trace(a) % p);
                }
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
