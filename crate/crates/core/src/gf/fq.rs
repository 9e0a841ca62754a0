use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};
use serde::Serialize;

use super::{is_prime, Field, GfError};
use crate::poly::PolyRing;

/// Largest supported `q`; arithmetic is driven by log/antilog tables of this size.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Description of `F_q = F_p[u]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldDesc {
    pub p: u64,
    pub n: usize,
    /// Monic irreducible modulus over `F_p`, constant term first.
    pub modulus: Vec<u64>,
}

impl FieldDesc {
    pub fn q(&self) -> u64 {
        self.p.pow(self.n as u32)
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "{}^{}:{}", self.p, self.n, coeffs.join(","))
    }
}

/// Splits a prime power `q` into `(p, n)`.
fn prime_power(q: u64) -> Option<(u64, usize)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut n) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

struct Tables {
    desc: FieldDesc,
    q: u32,
    /// `p^i` for `i <= n`.
    radix: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    trace: Vec<u32>,
    /// Full addition table, only for small odd-characteristic fields.
    add: Option<Vec<u32>>,
}

/// The field `F_q`. Elements are packed as `Σ c_i p^i` where `Σ c_i u^i` is the
/// polynomial representative, so the prime field is `0..p` and `u` is `p`.
#[derive(Clone)]
pub struct Fq(Arc<Tables>);

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc == other.0.desc
    }
}

impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq({})", self.0.desc)
    }
}

impl Fq {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, GfError> {
        Self::with_modulus(p, vec![0, 1])
    }

    /// `F_{p^n}` with the lexicographically smallest monic irreducible modulus,
    /// coefficients compared from the constant term up.
    pub fn new(p: u64, n: usize) -> Result<Self, GfError> {
        if n == 0 {
            return Err(GfError::ZeroDegree);
        }
        if n == 1 {
            return Self::prime(p);
        }
        check_prime_and_size(p, n)?;
        let modulus = smallest_irreducible(p, n)?;
        Self::build(p, modulus)
    }

    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, GfError> {
        if modulus.len() < 2 {
            return Err(GfError::ZeroDegree);
        }
        let n = modulus.len() - 1;
        check_prime_and_size(p, n)?;
        if modulus[n] != 1 {
            return Err(GfError::BadModulus { expected: n });
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(GfError::CoefficientOutOfRange(c));
        }
        if n > 1 {
            let fp = Self::prime(p)?;
            let ring = PolyRing::new(fp.clone());
            let m = ring.from_coeffs(modulus.iter().map(|&c| c as u32).collect());
            if !ring.is_irreducible(&m) {
                return Err(GfError::ReducibleModulus);
            }
        }
        Self::build(p, modulus)
    }

    /// Parses `"q"` (a prime power), `"p^n"` or `"p^n:c0,c1,...,1"`.
    pub fn from_spec(spec: &str) -> Result<Self, GfError> {
        let bad = |msg: &str| GfError::BadSpec(spec.to_string(), msg.to_string());
        let spec_trim: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, modulus) = match spec_trim.split_once(':') {
            Some((h, m)) => (h, Some(m)),
            None => (spec_trim.as_str(), None),
        };
        let (p, n) = match head.split_once('^') {
            Some((p, n)) => (
                p.parse::<u64>()
                    .map_err(|_| bad("characteristic is not an integer"))?,
                n.parse::<usize>()
                    .map_err(|_| bad("degree is not an integer"))?,
            ),
            None => {
                let q = head
                    .parse::<u64>()
                    .map_err(|_| bad("expected q, p^n or p^n:modulus"))?;
                prime_power(q).ok_or(GfError::NotPrime(q))?
            }
        };
        match modulus {
            None => Self::new(p, n),
            Some(m) => {
                let coeffs = m
                    .split(',')
                    .map(|c| c.parse::<u64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad("modulus coefficients must be integers"))?;
                if coeffs.len() != n + 1 {
                    return Err(GfError::BadModulus { expected: n });
                }
                Self::with_modulus(p, coeffs)
            }
        }
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.0.desc
    }

    pub fn q(&self) -> u64 {
        self.0.q as u64
    }

    pub fn n(&self) -> usize {
        self.0.desc.n
    }

    /// The class of `u`, when `n > 1`.
    pub fn generator(&self) -> Option<u32> {
        (self.n() > 1).then(|| self.0.radix[1])
    }

    pub fn coeffs(&self, x: u32) -> Vec<u64> {
        let p = self.0.desc.p as u32;
        let mut x = x;
        (0..self.n())
            .map(|_| {
                let c = x % p;
                x /= p;
                c as u64
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<u32, GfError> {
        if coeffs.len() > self.n() {
            return Err(GfError::MismatchedFields);
        }
        let mut x = 0u32;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.0.desc.p {
                return Err(GfError::CoefficientOutOfRange(c));
            }
            x += c as u32 * self.0.radix[i];
        }
        Ok(x)
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.0.q
    }

    fn build(p: u64, modulus: Vec<u64>) -> Result<Self, GfError> {
        let n = modulus.len() - 1;
        let q = p.pow(n as u32) as u32;
        let radix: Vec<u32> = (0..=n).map(|i| p.pow(i as u32) as u32).collect();
        let pu = p as u32;
        let digits = |x: u32| -> Vec<u32> {
            let mut x = x;
            (0..n)
                .map(|_| {
                    let c = x % pu;
                    x /= pu;
                    c
                })
                .collect()
        };
        let pack = |d: &[u32]| -> u32 { d.iter().zip(&radix).map(|(c, r)| c * r).sum() };
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0u64; 2 * n];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
                }
            }
            for k in (n..2 * n - 1).rev() {
                let c = prod[k];
                if c != 0 {
                    for (j, &mj) in modulus.iter().take(n).enumerate() {
                        prod[k - n + j] = (prod[k - n + j] + (p - c) * mj) % p;
                    }
                    prod[k] = 0;
                }
            }
            let d: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
            pack(&d)
        };

        let group = q - 1;
        let mut exp = Vec::new();
        for g in 1..q {
            exp.clear();
            exp.push(1u32);
            let mut x = g;
            while x != 1 && (exp.len() as u32) < group {
                exp.push(x);
                x = slow_mul(x, g);
            }
            if x == 1 && exp.len() as u32 == group {
                break;
            }
        }
        // Unreachable for irreducible moduli: F_q^* is cyclic.
        if exp.len() as u32 != group {
            return Err(GfError::ReducibleModulus);
        }
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }

        let neg: Vec<u32> = (0..q)
            .map(|x| pack(&digits(x).iter().map(|&c| (pu - c) % pu).collect::<Vec<_>>()))
            .collect();

        let digit_add = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits(a), digits(b));
            pack(
                &da.iter()
                    .zip(&db)
                    .map(|(x, y)| (x + y) % pu)
                    .collect::<Vec<_>>(),
            )
        };
        let add = (p != 2 && q <= 256).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = digit_add(a, b);
                }
            }
            t
        });

        let frob = |x: u32| -> u32 {
            if x == 0 {
                0
            } else {
                exp[((log[x as usize] as u64 * p) % group as u64) as usize]
            }
        };
        let trace: Vec<u32> = (0..q)
            .map(|x| {
                let mut acc = x;
                let mut y = x;
                for _ in 1..n {
                    y = frob(y);
                    acc = digit_add(acc, y);
                }
                debug_assert!(acc < pu);
                acc
            })
            .collect();
        // For n = 1 the trace is the identity and needs no table.
        let trace = if n == 1 { Vec::new() } else { trace };

        Ok(Fq(Arc::new(Tables {
            desc: FieldDesc { p, n, modulus },
            q,
            radix,
            exp,
            log,
            neg,
            trace,
            add,
        })))
    }

    fn digit_add(&self, a: u32, b: u32) -> u32 {
        let t = &self.0;
        let p = t.desc.p as u32;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for r in &t.radix[..t.desc.n] {
            out += ((a % p + b % p) % p) * r;
            a /= p;
            b /= p;
        }
        out
    }
}

fn check_prime_and_size(p: u64, n: usize) -> Result<(), GfError> {
    if !is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    match p.checked_pow(n as u32) {
        Some(q) if q <= MAX_FIELD_ORDER => Ok(()),
        _ => Err(GfError::TooLarge { p, n }),
    }
}

/// Lexicographically smallest monic irreducible of degree `n` over `F_p`,
/// comparing coefficients from the constant term up.
fn smallest_irreducible(p: u64, n: usize) -> Result<Vec<u64>, GfError> {
    let fp = Fq::prime(p)?;
    let ring = PolyRing::new(fp);
    let count = p.pow(n as u32);
    for i in 0..count {
        // The constant term is the most significant digit of i.
        let mut coeffs = vec![0u32; n + 1];
        let mut x = i;
        for j in (0..n).rev() {
            coeffs[j] = (x % p) as u32;
            x /= p;
        }
        coeffs[n] = 1;
        let f = ring.from_coeffs(coeffs.clone());
        if ring.is_irreducible(&f) {
            return Ok(coeffs.into_iter().map(u64::from).collect());
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl Field for Fq {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.0.desc.p
    }

    fn prime_degree(&self) -> usize {
        self.0.desc.n
    }

    fn order(&self) -> Option<u64> {
        Some(self.0.q as u64)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let t = &self.0;
        if t.desc.p == 2 {
            a ^ b
        } else if t.desc.n == 1 {
            let s = a + b;
            if s >= t.q {
                s - t.q
            } else {
                s
            }
        } else if let Some(table) = &t.add {
            table[(a * t.q + b) as usize]
        } else {
            self.digit_add(*a, *b)
        }
    }

    fn neg(&self, a: &u32) -> u32 {
        self.0.neg[*a as usize]
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let t = &self.0;
        let s = t.log[*a as usize] + t.log[*b as usize];
        let group = t.q - 1;
        t.exp[(if s >= group { s - group } else { s }) as usize]
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let t = &self.0;
        let group = t.q - 1;
        Some(t.exp[((group - t.log[*a as usize]) % group) as usize])
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.desc.p as i64) as u32
    }

    fn frobenius(&self, x: &u32) -> u32 {
        self.pow(x, self.0.desc.p)
    }

    fn pow(&self, x: &u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if *x == 0 {
            return 0;
        }
        let t = &self.0;
        let group = (t.q - 1) as u64;
        let k = (t.log[*x as usize] as u64 * (e % group)) % group;
        t.exp[k as usize]
    }

    fn pth_root(&self, x: &u32) -> u32 {
        self.pow(x, self.q() / self.characteristic())
    }

    fn absolute_trace(&self, x: &u32) -> u64 {
        if self.0.desc.n == 1 {
            *x as u64
        } else {
            self.0.trace[*x as usize] as u64
        }
    }

    fn prime_value(&self, x: &u32) -> Option<u64> {
        (*x < self.0.desc.p as u32).then_some(*x as u64)
    }

    fn element(&self, index: u64) -> u32 {
        debug_assert!(index < self.q());
        index as u32
    }

    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        rng.gen_range(0..self.0.q)
    }

    fn format(&self, x: &u32) -> String {
        if self.n() == 1 {
            return x.to_string();
        }
        let coeffs = self.coeffs(*x);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "g".to_string(),
                (1, c) => format!("{c}*g"),
                (i, 1) => format!("g^{i}"),
                (i, c) => format!("{c}*g^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    fn is_atomic(&self, x: &u32) -> bool {
        self.n() == 1 || self.coeffs(*x).iter().filter(|&&c| c != 0).count() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_arithmetic() {
        let f = Fq::new(2, 2).unwrap();
        assert_eq!(f.desc().modulus, vec![1, 1, 1]);
        let u = f.generator().unwrap();
        assert_eq!(f.mul(&u, &u), f.add(&u, &1));
        assert_eq!(f.absolute_trace(&1), 0);
        assert_eq!(f.absolute_trace(&u), 1);
        assert_eq!(f.absolute_trace(&0), 0);
        assert_eq!(f.pth_root(&u), f.add(&u, &1));
        assert_eq!(f.pth_root(&1), 1);
        assert_eq!(f.pth_root(&0), 0);
    }

    #[test]
    fn f3_arithmetic() {
        let f = Fq::prime(3).unwrap();
        assert_eq!(f.mul(&2, &2), 1);
        assert_eq!(f.add(&2, &0), 2);
        assert_eq!(f.inv(&2), Some(2));
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.from_int(-1), 2);
    }

    #[test]
    fn default_moduli_are_lex_smallest() {
        assert_eq!(Fq::new(2, 3).unwrap().desc().modulus, vec![1, 0, 1, 1]);
        assert_eq!(Fq::new(3, 2).unwrap().desc().modulus, vec![1, 0, 1]);
        assert_eq!(Fq::new(2, 4).unwrap().desc().modulus, vec![1, 0, 0, 1, 1]);
        assert_eq!(Fq::new(5, 2).unwrap().desc().modulus, vec![1, 1, 1]);
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, n) in [(2, 3), (3, 2), (5, 1), (2, 1)] {
            let f = Fq::new(p, n).unwrap();
            let els: Vec<u32> = f.elements().collect();
            for a in &els {
                assert_eq!(f.add(a, &0), *a);
                assert_eq!(f.add(a, &f.neg(a)), 0);
                if *a != 0 {
                    assert_eq!(f.mul(a, &f.inv(a).unwrap()), 1);
                }
                for b in &els {
                    for c in &els {
                        let lhs = f.mul(a, &f.add(b, c));
                        let rhs = f.add(&f.mul(a, b), &f.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn spec_strings() {
        let f = Fq::from_spec("2").unwrap();
        assert_eq!(f.q(), 2);
        let f = Fq::from_spec("3^2").unwrap();
        assert_eq!(f.q(), 9);
        let f = Fq::from_spec("2^3:1,1,0,1").unwrap();
        assert_eq!(f.desc().modulus, vec![1, 1, 0, 1]);
        assert_eq!(Fq::from_spec("2^2:1,0,1"), Err(GfError::ReducibleModulus));
        assert_eq!(Fq::from_spec("4").unwrap().desc().modulus, vec![1, 1, 1]);
        assert_eq!(Fq::from_spec("27:1,2,0,1").unwrap().n(), 3);
        assert_eq!(Fq::from_spec("6"), Err(GfError::NotPrime(6)));
        assert_eq!(Fq::from_spec("1"), Err(GfError::NotPrime(1)));
        assert!(matches!(Fq::from_spec("x"), Err(GfError::BadSpec(..))));
        assert!(matches!(
            Fq::from_spec("2^2:1,1"),
            Err(GfError::BadModulus { .. })
        ));
        assert!(matches!(
            Fq::from_spec("2^30"),
            Err(GfError::TooLarge { .. })
        ));
    }

    #[test]
    fn formatting() {
        let f = Fq::new(3, 2).unwrap();
        let x = f.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(f.format(&x), "2*g + 1");
        assert!(!f.is_atomic(&x));
        assert_eq!(f.format(&f.generator().unwrap()), "g");
        assert_eq!(f.format(&0), "0");
    }
}
