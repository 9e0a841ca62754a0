use std::fmt;
use std::sync::Arc;

use rand::RngCore;

use super::{Field, GfError};
use crate::poly::{Poly, PolyRing};

struct ExtInner<F: Field> {
    base: F,
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
    degree: usize,
    /// `v^{p i} mod m` for `i < d`; Frobenius is semilinear over the base.
    frob: Vec<Vec<F::Elem>>,
    /// `Tr_{E/F}(v^i)` for `i < d`.
    rel_trace: Vec<F::Elem>,
}

/// `E = F[v]/(m)` for a monic irreducible `m` of degree `d` over `F`.
/// Elements are coefficient vectors of length `d`, constant term first.
pub struct ExtField<F: Field>(Arc<ExtInner<F>>);

impl<F: Field> Clone for ExtField<F> {
    fn clone(&self) -> Self {
        ExtField(self.0.clone())
    }
}

impl<F: Field> PartialEq for ExtField<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base == other.0.base && self.0.modulus == other.0.modulus)
    }
}

impl<F: Field> fmt::Debug for ExtField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ExtField({:?}, {})",
            self.0.base,
            self.0.ring.format(&self.0.modulus)
        )
    }
}

impl<F: Field> ExtField<F> {
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self, GfError> {
        let ring = PolyRing::new(base.clone());
        let d = ring.degree(&modulus).ok_or(GfError::ZeroDegree)?;
        if d == 0 {
            return Err(GfError::ZeroDegree);
        }
        if !base.is_one(ring.lead(&modulus)) {
            return Err(GfError::BadModulus { expected: d });
        }
        if !ring.is_irreducible(&modulus) {
            return Err(GfError::ReducibleModulus);
        }
        Ok(Self::new_unchecked(base, modulus))
    }

    /// Skips the irreducibility test; the caller guarantees `modulus` is monic irreducible.
    pub(crate) fn new_unchecked(base: F, modulus: Poly<F::Elem>) -> Self {
        let ring = PolyRing::new(base.clone());
        let degree = ring.degree(&modulus).expect("nonzero modulus");
        let assemble = |frob, rel_trace| {
            ExtField(Arc::new(ExtInner {
                base: base.clone(),
                ring: ring.clone(),
                modulus: modulus.clone(),
                degree,
                frob,
                rel_trace,
            }))
        };
        let bare = assemble(Vec::new(), Vec::new());
        let vp = bare.pow(&bare.root(), base.characteristic());
        let mut frob = Vec::with_capacity(degree);
        let mut acc = bare.one();
        for _ in 0..degree {
            frob.push(acc.clone());
            acc = bare.mul(&acc, &vp);
        }
        let with_frob = assemble(frob.clone(), Vec::new());
        let rel_trace = (0..degree)
            .map(|i| {
                let mut x = with_frob.zero();
                x[i] = base.one();
                let tr = with_frob.relative_trace_by_conjugates(&x);
                with_frob
                    .as_base(&tr)
                    .expect("trace lies in the base field")
            })
            .collect();
        assemble(frob, rel_trace)
    }

    /// `F[v]/(m)` with `m` the lexicographically smallest monic irreducible of
    /// degree `d` over `F` (coefficients compared from the constant term up).
    pub fn with_degree(base: F, d: usize) -> Result<Self, GfError> {
        if d == 0 {
            return Err(GfError::ZeroDegree);
        }
        let ring = PolyRing::new(base.clone());
        let q = base.order().ok_or(GfError::TooLarge {
            p: base.characteristic(),
            n: base.prime_degree(),
        })?;
        let total = q.checked_pow(d as u32).ok_or(GfError::TooLarge {
            p: base.characteristic(),
            n: base.prime_degree() * d,
        })?;
        for i in 0..total {
            let mut coeffs = vec![base.zero(); d + 1];
            let mut x = i;
            for j in (0..d).rev() {
                coeffs[j] = base.element(x % q);
                x /= q;
            }
            coeffs[d] = base.one();
            let m = ring.from_coeffs(coeffs);
            if ring.is_irreducible(&m) {
                return Ok(Self::new_unchecked(base, m));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn base(&self) -> &F {
        &self.0.base
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.0.modulus
    }

    pub fn embed(&self, x: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.0.base.zero(); self.0.degree];
        v[0] = x.clone();
        v
    }

    /// Inverse of [`ExtField::embed`] on the image of the base field.
    pub fn as_base(&self, x: &[F::Elem]) -> Option<F::Elem> {
        x[1..]
            .iter()
            .all(|c| self.0.base.is_zero(c))
            .then(|| x[0].clone())
    }

    /// The class of `v`, a root of the modulus.
    pub fn root(&self) -> Vec<F::Elem> {
        let ring = &self.0.ring;
        self.reduce(&ring.t())
    }

    /// Image of a base-field polynomial in `F[v]/(m)`.
    pub fn reduce(&self, g: &Poly<F::Elem>) -> Vec<F::Elem> {
        let r = self
            .0
            .ring
            .rem(g, &self.0.modulus)
            .expect("nonzero modulus");
        let mut v = r.coeffs().to_vec();
        v.resize(self.0.degree, self.0.base.zero());
        v
    }

    /// Evaluates a base-field polynomial at `x` by Horner's rule.
    pub fn eval(&self, g: &Poly<F::Elem>, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = self.zero();
        for c in g.coeffs().iter().rev() {
            acc = self.mul_slices(&acc, x);
            acc[0] = self.0.base.add(&acc[0], c);
        }
        acc
    }

    pub fn relative_trace(&self, x: &[F::Elem]) -> F::Elem {
        let base = &self.0.base;
        x.iter()
            .zip(&self.0.rel_trace)
            .fold(base.zero(), |acc, (a, t)| base.add(&acc, &base.mul(a, t)))
    }

    /// `Tr_{E/F}` as the sum of the `|F|`-power conjugates.
    pub fn relative_trace_by_conjugates(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        let mut acc = x.to_vec();
        let mut y = x.to_vec();
        for _ in 1..self.0.degree {
            for _ in 0..self.0.base.prime_degree() {
                y = self.frobenius(&y);
            }
            acc = self.add(&acc, &y);
        }
        acc
    }

    fn mul_slices(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let base = &self.0.base;
        let d = self.0.degree;
        let mut prod = vec![base.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = base.add(&prod[i + j], &base.mul(x, y));
            }
        }
        let m = self.0.modulus.coeffs();
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[k], base.zero());
            if base.is_zero(&c) {
                continue;
            }
            for (j, mj) in m[..d].iter().enumerate() {
                prod[k - d + j] = base.sub(&prod[k - d + j], &base.mul(&c, mj));
            }
        }
        prod.truncate(d);
        prod
    }

    fn scale_into(&self, acc: &mut [F::Elem], c: &F::Elem, v: &[F::Elem]) {
        let base = &self.0.base;
        for (a, x) in acc.iter_mut().zip(v) {
            *a = base.add(a, &base.mul(c, x));
        }
    }
}

impl<F: Field> Field for ExtField<F> {
    type Elem = Vec<F::Elem>;

    fn characteristic(&self) -> u64 {
        self.0.base.characteristic()
    }

    fn prime_degree(&self) -> usize {
        self.0.base.prime_degree() * self.0.degree
    }

    fn zero(&self) -> Self::Elem {
        vec![self.0.base.zero(); self.0.degree]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.0.base.one())
    }

    fn is_zero(&self, x: &Self::Elem) -> bool {
        x.iter().all(|c| self.0.base.is_zero(c))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.0.base.add(x, y))
            .collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.0.base.neg(x)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter()
            .zip(b)
            .map(|(x, y)| self.0.base.sub(x, y))
            .collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul_slices(a, b)
    }

    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let ring = &self.0.ring;
        let x = ring.from_coeffs(a.clone());
        let (g, s, _) = ring.xgcd(&x, &self.0.modulus);
        debug_assert!(ring.is_one(&g));
        Some(self.reduce(&s))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.embed(&self.0.base.from_int(n))
    }

    fn frobenius(&self, x: &Self::Elem) -> Self::Elem {
        let base = &self.0.base;
        let mut acc = self.zero();
        for (a, vpi) in x.iter().zip(&self.0.frob) {
            if !base.is_zero(a) {
                self.scale_into(&mut acc, &base.frobenius(a), vpi);
            }
        }
        acc
    }

    fn absolute_trace(&self, x: &Self::Elem) -> u64 {
        self.0.base.absolute_trace(&self.relative_trace(x))
    }

    fn prime_value(&self, x: &Self::Elem) -> Option<u64> {
        self.as_base(x).and_then(|c| self.0.base.prime_value(&c))
    }

    fn element(&self, mut index: u64) -> Self::Elem {
        let q = self.0.base.order().expect("enumerable base");
        (0..self.0.degree)
            .map(|_| {
                let c = self.0.base.element(index % q);
                index /= q;
                c
            })
            .collect()
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (0..self.0.degree)
            .map(|_| self.0.base.random(rng))
            .collect()
    }

    fn format(&self, x: &Self::Elem) -> String {
        let ring = &self.0.ring;
        ring.format_in(&ring.from_coeffs(x.clone()), "v")
    }

    fn is_atomic(&self, x: &Self::Elem) -> bool {
        let nonzero: Vec<_> = x.iter().filter(|c| !self.0.base.is_zero(c)).collect();
        nonzero.len() <= 1 && nonzero.iter().all(|c| self.0.base.is_atomic(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Fq;

    fn exts() -> Vec<ExtField<Fq>> {
        [
            (2, 1, 2),
            (2, 1, 3),
            (2, 2, 2),
            (3, 1, 2),
            (2, 1, 1),
            (5, 1, 1),
        ]
        .into_iter()
        .map(|(p, n, d)| ExtField::with_degree(Fq::new(p, n).unwrap(), d).unwrap())
        .collect()
    }

    #[test]
    fn traces_agree_with_conjugate_sums() {
        for e in exts() {
            for x in e.elements() {
                let rel = e.relative_trace(&x);
                assert_eq!(e.relative_trace_by_conjugates(&x), e.embed(&rel));
                assert_eq!(
                    e.prime_value(&e.conjugate_sum(&x)),
                    Some(e.absolute_trace(&x))
                );
            }
        }
    }

    #[test]
    fn frobenius_matches_power() {
        for e in exts() {
            let p = e.characteristic();
            for x in e.elements() {
                assert_eq!(e.frobenius(&x), e.pow(&x, p));
                assert_eq!(e.frobenius(&e.pth_root(&x)), x);
            }
        }
    }

    #[test]
    fn inverses() {
        for e in exts() {
            for x in e.elements().filter(|x| !e.is_zero(x)) {
                assert_eq!(e.mul(&x, &e.inv(&x).unwrap()), e.one());
            }
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        for e in exts() {
            let b = e.base().clone();
            for x in b.elements() {
                for y in b.elements() {
                    assert_eq!(e.embed(&b.add(&x, &y)), e.add(&e.embed(&x), &e.embed(&y)));
                    assert_eq!(e.embed(&b.mul(&x, &y)), e.mul(&e.embed(&x), &e.embed(&y)));
                }
                assert_eq!(e.embed(&b.frobenius(&x)), e.frobenius(&e.embed(&x)));
            }
            assert!(e.is_zero(&e.embed(&b.zero())));
            assert_eq!(e.embed(&b.one()), e.one());
        }
    }

    #[test]
    fn root_of_modulus() {
        for e in exts() {
            let r = e.root();
            assert!(e.is_zero(&e.eval(e.modulus(), &r)));
        }
    }

    #[test]
    fn rejects_reducible_modulus() {
        let f2 = Fq::prime(2).unwrap();
        let ring = PolyRing::new(f2.clone());
        let m = ring.from_coeffs(vec![1, 0, 1]);
        assert_eq!(ExtField::new(f2, m).unwrap_err(), GfError::ReducibleModulus);
    }
}
