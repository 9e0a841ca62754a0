//! Dense univariate polynomials over a finite field, with factorization by
//! squarefree decomposition, distinct-degree splitting and Cantor–Zassenhaus.

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::gf::{ExtField, Field};

/// Seed of the splitting PRNG used by [`PolyRing::factorize`] unless overridden.
pub const DEFAULT_SEED: u64 = 0x0A5_6E05_2025;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not irreducible")]
    Reducible,
}

/// Coefficients constant term first, without trailing zeros; empty means zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    /// Monic irreducible factors with multiplicities, sorted by [`PolyRing::cmp`].
    pub factors: Vec<(Poly<E>, usize)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    seed: u64,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        Self {
            field,
            seed: DEFAULT_SEED,
        }
    }

    pub fn with_seed(field: F, seed: u64) -> Self {
        Self { field, seed }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn t(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = c;
        self.from_coeffs(coeffs)
    }

    pub fn degree(&self, a: &Poly<F::Elem>) -> Option<usize> {
        a.degree()
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lead<'a>(&self, a: &'a Poly<F::Elem>) -> &'a F::Elem {
        a.coeffs
            .last()
            .expect("leading coefficient of the zero polynomial")
    }

    pub fn coeff(&self, a: &Poly<F::Elem>, k: usize) -> F::Elem {
        a.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_one(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.len() == 1 && self.field.is_one(&a.coeffs[0])
    }

    pub fn is_constant(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.len() <= 1
    }

    pub fn is_monic(&self, a: &Poly<F::Elem>) -> bool {
        a.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => self.field.add(x, y),
                (Some(x), None) | (None, Some(x)) => x.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.field.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.field.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.field.add(&coeffs[i + j], &self.field.mul(x, y));
            }
        }
        self.from_coeffs(coeffs)
    }

    pub fn pow(&self, a: &Poly<F::Elem>, mut e: u64) -> Poly<F::Elem> {
        let mut base = a.clone();
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

    /// Multiplication by `t^k`.
    pub fn shift(&self, a: &Poly<F::Elem>, k: usize) -> Poly<F::Elem> {
        if a.is_zero() {
            return self.zero();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(a.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn divmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let inv_lead = self
            .field
            .inv(self.lead(b))
            .expect("nonzero leading coefficient");
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = self.field.mul(&rem[k], &inv_lead);
            if self.field.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = self.field.sub(&rem[idx], &self.field.mul(&c, bj));
            }
            quot[k - db] = c;
        }
        rem.truncate(db);
        Ok((self.from_coeffs(quot), self.from_coeffs(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>, PolyError> {
        Ok(self.divmod(a, b)?.1)
    }

    /// Quotient of an exact division; panics in debug builds if `b ∤ a`.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (q, r) = self.divmod(a, b).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, b: &Poly<F::Elem>, a: &Poly<F::Elem>) -> bool {
        match self.rem(a, b) {
            Ok(r) => r.is_zero(),
            Err(_) => a.is_zero(),
        }
    }

    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() {
            return self.zero();
        }
        let inv = self
            .field
            .inv(self.lead(a))
            .expect("nonzero leading coefficient");
        self.scale(a, &inv)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    /// Returns `(g, s, t)` with `g` the monic gcd and `s a + t b = g`.
    pub fn xgcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = self.field.inv(self.lead(&r0)).expect("nonzero");
        (
            self.scale(&r0, &inv),
            self.scale(&s0, &inv),
            self.scale(&t0, &inv),
        )
    }

    /// Inverse of `a` modulo `m`, if it exists.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Option<Poly<F::Elem>> {
        let (g, s, _) = self.xgcd(a, m);
        self.is_one(&g)
            .then(|| self.rem(&s, m).expect("nonzero modulus"))
    }

    pub fn pow_mod(&self, a: &Poly<F::Elem>, mut e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let mut base = self.rem(a, m).expect("nonzero modulus");
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = self.rem(&self.mul(&base, &base), m).unwrap();
            }
        }
        acc
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.mul(&self.field.from_int(i as i64), c))
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        a.coeffs.iter().rev().fold(self.field.zero(), |acc, c| {
            self.field.add(&self.field.mul(&acc, x), c)
        })
    }

    /// Canonical order: by degree, then coefficients from the constant term up.
    pub fn cmp(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    }

    fn field_order(&self) -> u64 {
        self.field.order().expect("field order fits in u64")
    }

    /// Ben-Or: `f` of degree `n` is irreducible iff `gcd(t^{q^i} - t, f) = 1` for `i <= n/2`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let q = self.field_order();
        let t = self.t();
        let mut h = self.rem(&t, f).unwrap();
        for _ in 1..=n / 2 {
            h = self.pow_mod(&h, q, f);
            if !self.is_one(&self.gcd(&self.sub(&h, &t), f)) {
                return false;
            }
        }
        true
    }

    /// `g` with `g^p = a`; requires `a' = 0`.
    fn pth_root_poly(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let p = self.field.characteristic() as usize;
        let coeffs = a
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| self.field.pth_root(c))
            .collect();
        self.from_coeffs(coeffs)
    }

    /// Squarefree decomposition of a monic polynomial: pairwise coprime
    /// squarefree `g_i` with `f = Π g_i^{m_i}`.
    pub fn squarefree_factorization(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.field.characteristic() as usize;
        let mut c = self.gcd(f, &self.derivative(f));
        let mut w = self.div_exact(f, &c);
        let mut i = 1;
        while !self.is_one(&w) {
            let y = self.gcd(&w, &c);
            let fac = self.div_exact(&w, &y);
            if !self.is_one(&fac) {
                out.push((fac, i));
            }
            w = y;
            c = self.div_exact(&c, &w);
            i += 1;
        }
        if !self.is_one(&c) {
            let root = self.pth_root_poly(&c);
            for (g, m) in self.squarefree_factorization(&root) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Splits a monic squarefree polynomial into products of irreducibles of equal degree.
    pub fn distinct_degree_factorization(&self, f: &Poly<F::Elem>) -> Vec<(Poly<F::Elem>, usize)> {
        let q = self.field_order();
        let t = self.t();
        let mut out = Vec::new();
        let mut rest = f.clone();
        let mut h = self.rem(&t, &rest).unwrap();
        let mut d = 1;
        while rest.degree().is_some_and(|n| n >= 2 * d) {
            h = self.pow_mod(&h, q, &rest);
            let g = self.gcd(&rest, &self.sub(&h, &t));
            if !self.is_one(&g) {
                rest = self.div_exact(&rest, &g);
                h = self.rem(&h, &rest).unwrap();
                out.push((g, d));
            }
            d += 1;
        }
        if let Some(n) = rest.degree().filter(|&n| n > 0) {
            out.push((rest, n));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a monic squarefree product of degree-`d` irreducibles.
    pub fn equal_degree_factorization(
        &self,
        f: &Poly<F::Elem>,
        d: usize,
        rng: &mut ChaCha8Rng,
    ) -> Vec<Poly<F::Elem>> {
        let n = f.degree().expect("nonzero");
        if n == d {
            return vec![f.clone()];
        }
        let q = self.field_order();
        loop {
            let a = self.from_coeffs((0..n).map(|_| self.field.random(rng)).collect());
            if self.is_constant(&a) {
                continue;
            }
            let b = if q.is_multiple_of(2) {
                // Trace map to F_2: Σ a^{2^j}, j < d·[F:F_2].
                let mut acc = a.clone();
                let mut y = a.clone();
                for _ in 1..d * self.field.prime_degree() {
                    y = self.rem(&self.mul(&y, &y), f).unwrap();
                    acc = self.add(&acc, &y);
                }
                acc
            } else {
                // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
                let mut norm = self.rem(&a, f).unwrap();
                let mut y = norm.clone();
                for _ in 1..d {
                    y = self.pow_mod(&y, q, f);
                    norm = self.rem(&self.mul(&norm, &y), f).unwrap();
                }
                self.sub(&self.pow_mod(&norm, (q - 1) / 2, f), &self.one())
            };
            let g = self.gcd(f, &b);
            if let Some(dg) = g.degree() {
                if dg > 0 && dg < n {
                    let h = self.div_exact(f, &g);
                    let mut out = self.equal_degree_factorization(&g, d, rng);
                    out.extend(self.equal_degree_factorization(&h, d, rng));
                    return out;
                }
            }
        }
    }

    pub fn factorize(&self, f: &Poly<F::Elem>) -> Result<Factorization<F::Elem>, PolyError> {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let unit = self.lead(f).clone();
        let monic = self.monic(f);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut factors = Vec::new();
        for (g, mult) in self.squarefree_factorization(&monic) {
            for (h, d) in self.distinct_degree_factorization(&g) {
                for irr in self.equal_degree_factorization(&h, d, &mut rng) {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| self.cmp(&a.0, &b.0));
        Ok(Factorization { unit, factors })
    }

    pub fn expand(&self, fac: &Factorization<F::Elem>) -> Poly<F::Elem> {
        fac.factors
            .iter()
            .fold(self.constant(fac.unit.clone()), |acc, (g, m)| {
                self.mul(&acc, &self.pow(g, *m as u64))
            })
    }

    /// All monic irreducibles of degree at most `max_degree`, in canonical order.
    pub fn irreducibles_up_to(&self, max_degree: usize) -> Vec<Poly<F::Elem>> {
        let q = self.field_order();
        let mut out = Vec::new();
        for d in 1..=max_degree {
            let mut level = Vec::new();
            for i in 0..q.pow(d as u32) {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut x = i;
                for _ in 0..d {
                    coeffs.push(self.field.element(x % q));
                    x /= q;
                }
                coeffs.push(self.field.one());
                let f = Poly { coeffs };
                if self.is_irreducible(&f) {
                    level.push(f);
                }
            }
            level.sort_by(|a, b| self.cmp(a, b));
            out.extend(level);
        }
        out
    }

    /// `F_q[t]/(P)` for a monic irreducible `P`.
    pub fn residue_field(&self, place: &Poly<F::Elem>) -> Result<ExtField<F>, PolyError> {
        if !self.is_monic(place) {
            return Err(PolyError::NotMonic);
        }
        if !self.is_irreducible(place) {
            return Err(PolyError::Reducible);
        }
        Ok(ExtField::new_unchecked(self.field.clone(), place.clone()))
    }

    pub fn format(&self, a: &Poly<F::Elem>) -> String {
        self.format_in(a, "t")
    }

    pub fn format_in(&self, a: &Poly<F::Elem>, var: &str) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(k, c)| {
                let mono = match k {
                    0 => return self.field.format(c),
                    1 => var.to_string(),
                    k => format!("{var}^{k}"),
                };
                if self.field.is_one(c) {
                    mono
                } else if self.field.is_atomic(c) {
                    format!("{}*{mono}", self.field.format(c))
                } else {
                    format!("({})*{mono}", self.field.format(c))
                }
            })
            .collect();
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Fq;

    fn ring(p: u64, n: usize) -> PolyRing<Fq> {
        PolyRing::new(Fq::new(p, n).unwrap())
    }

    fn poly(r: &PolyRing<Fq>, c: &[u32]) -> Poly<u32> {
        r.from_coeffs(c.to_vec())
    }

    #[test]
    fn basic_division_and_gcd() {
        let r = ring(2, 1);
        let t2t = poly(&r, &[0, 1, 1]);
        assert_eq!(r.gcd(&t2t, &r.t()), r.t());
        let (q, rem) = r.divmod(&poly(&r, &[1, 0, 0, 1]), &r.t()).unwrap();
        assert_eq!(q, poly(&r, &[0, 0, 1]));
        assert_eq!(rem, r.one());
        assert_eq!(r.gcd(&poly(&r, &[1, 1]), &r.zero()), poly(&r, &[1, 1]));
        assert_eq!(r.divmod(&r.t(), &r.zero()), Err(PolyError::DivisionByZero));

        let r3 = ring(3, 1);
        let a = poly(&r3, &[2, 0, 2]);
        assert_eq!(r3.gcd(&a, &r3.zero()), poly(&r3, &[1, 0, 1]));
    }

    #[test]
    fn xgcd_identity() {
        let r = ring(3, 2);
        let a = poly(&r, &[1, 4, 0, 7, 2]);
        let b = poly(&r, &[5, 1, 3]);
        let (g, s, t) = r.xgcd(&a, &b);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
        assert_eq!(g, r.gcd(&a, &b));
    }

    #[test]
    fn small_factorizations() {
        let r = ring(2, 1);
        let f = r.factorize(&poly(&r, &[0, 1, 1])).unwrap();
        assert_eq!(f.factors, vec![(r.t(), 1), (poly(&r, &[1, 1]), 1)]);
        let f = r.factorize(&poly(&r, &[1, 1, 1])).unwrap();
        assert_eq!(f.factors, vec![(poly(&r, &[1, 1, 1]), 1)]);
        let f = r.factorize(&poly(&r, &[0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(r.t(), 2)]);
        assert_eq!(r.factorize(&r.zero()), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn inseparable_factorization() {
        // (t^2 + t + 1)^4 (t + 1)^3 over F_2
        let r = ring(2, 1);
        let a = r.pow(&poly(&r, &[1, 1, 1]), 4);
        let b = r.pow(&poly(&r, &[1, 1]), 3);
        let f = r.factorize(&r.mul(&a, &b)).unwrap();
        assert_eq!(
            f.factors,
            vec![(poly(&r, &[1, 1]), 3), (poly(&r, &[1, 1, 1]), 4)]
        );
    }

    #[test]
    fn irreducible_enumeration() {
        let r = ring(2, 1);
        let irr = r.irreducibles_up_to(2);
        assert_eq!(irr, vec![r.t(), poly(&r, &[1, 1]), poly(&r, &[1, 1, 1])]);
        let deg3 = r
            .irreducibles_up_to(3)
            .into_iter()
            .filter(|f| f.degree() == Some(3))
            .count();
        assert_eq!(deg3, 2);
        let r3 = ring(3, 1);
        assert_eq!(
            r3.irreducibles_up_to(1),
            vec![r3.t(), poly(&r3, &[1, 1]), poly(&r3, &[2, 1])]
        );
    }

    fn mobius(n: u64) -> i64 {
        let (mut n, mut k, mut mu) = (n, 2, 1);
        while k * k <= n {
            if n % k == 0 {
                n /= k;
                if n % k == 0 {
                    return 0;
                }
                mu = -mu;
            }
            k += 1;
        }
        if n > 1 {
            mu = -mu;
        }
        mu
    }

    #[test]
    fn necklace_counts() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let r = ring(p, n);
            let q = r.field().q() as i64;
            let max = if q <= 3 { 5 } else { 4 };
            let irr = r.irreducibles_up_to(max);
            for d in 1..=max {
                let expected: i64 = (1..=d as u64)
                    .filter(|e| (d as u64).is_multiple_of(*e))
                    .map(|e| mobius(e) * q.pow((d as u64 / e) as u32))
                    .sum::<i64>()
                    / d as i64;
                let got = irr.iter().filter(|f| f.degree() == Some(d)).count() as i64;
                assert_eq!(got, expected, "q={q} d={d}");
            }
        }
    }

    #[test]
    fn residue_fields() {
        let r = ring(2, 1);
        let e = r.residue_field(&r.t()).unwrap();
        assert_eq!(e.reduce(&poly(&r, &[1, 1, 1])), vec![1]);
        let e = r.residue_field(&poly(&r, &[1, 1])).unwrap();
        assert_eq!(e.reduce(&poly(&r, &[1, 1, 1])), vec![1]);
        let p = poly(&r, &[1, 1, 1]);
        let e = r.residue_field(&p).unwrap();
        assert_eq!(e.order(), Some(4));
        assert!(e.is_zero(&e.eval(&p, &e.reduce(&r.t()))));
        assert!(e.is_zero(&e.reduce(&p)));
        assert_eq!(
            r.residue_field(&poly(&r, &[1, 0, 1])),
            Err(PolyError::Reducible)
        );
        let r3 = ring(3, 1);
        assert_eq!(
            r3.residue_field(&poly(&r3, &[1, 2])),
            Err(PolyError::NotMonic)
        );
    }

    #[test]
    fn formatting() {
        let r = ring(2, 2);
        let g = r.field().generator().unwrap();
        let a = r.from_coeffs(vec![1, 0, 3, g]);
        assert_eq!(r.format(&a), "g*t^3 + (g + 1)*t^2 + 1");
        assert_eq!(r.format(&r.zero()), "0");
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(1000))]
        #[test]
        fn factorization_round_trip(field in 0usize..6, seed in proptest::prelude::any::<u64>()) {
            let (p, n) = [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)][field];
            let r = ring(p, n);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = crate::sample::nonzero_poly(&r, &mut rng, 12);
            let fac = r.factorize(&f).unwrap();
            proptest::prop_assert_eq!(r.expand(&fac), f.clone());
            for (g, e) in &fac.factors {
                proptest::prop_assert!(*e >= 1);
                proptest::prop_assert!(r.is_monic(g) && r.is_irreducible(g));
            }
            for w in fac.factors.windows(2) {
                proptest::prop_assert_eq!(r.cmp(&w[0].0, &w[1].0), Ordering::Less);
            }
            proptest::prop_assert_eq!(r.factorize(&f).unwrap(), fac);
        }
    }
}
