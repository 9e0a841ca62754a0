//! Genus field, ambiguous-class rank `λ₁`, the Rédei matrix and `λ₂`.

use serde::Serialize;
use thiserror::Error;

use crate::asnorm::{Classification, NormalizedAS};
use crate::gf::{ExtField, Field};
use crate::ratfunc::{FqPoly, FunctionField, LocalPart};
use crate::symbols::hasse_symbol_in;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantsError {
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Right-hand side of one Artin–Schreier generator of the genus field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `α^p - α = D_i`.
    Local(LocalPart),
    /// `β^p - β = f`.
    Infinite(FqPoly),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusFieldDescription {
    pub generators: Vec<Generator>,
    /// `[G(K) : K]`.
    pub relative_degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedeiMatrix {
    pub p: u64,
    /// Row and column labels, in canonical place order.
    pub places: Vec<FqPoly>,
    pub entries: Vec<Vec<u64>>,
}

impl RedeiMatrix {
    pub fn m(&self) -> usize {
        self.places.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantsReport {
    pub lambda1: usize,
    pub rank: usize,
    pub lambda2: usize,
    pub classification: Classification,
    pub m: usize,
}

pub fn lambda1(norm: &NormalizedAS) -> usize {
    match norm.classification {
        Classification::Real => norm.m().saturating_sub(1),
        _ => norm.m(),
    }
}

pub fn genus_field(kf: &FunctionField, norm: &NormalizedAS) -> GenusFieldDescription {
    let mut generators: Vec<Generator> = norm.parts.iter().cloned().map(Generator::Local).collect();
    if norm.classification.is_imaginary() {
        generators.push(Generator::Infinite(norm.poly.clone()));
    }
    let p = kf.field().characteristic();
    GenusFieldDescription {
        generators,
        relative_degree: p.pow(lambda1(norm) as u32),
    }
}

pub fn redei_matrix(kf: &FunctionField, norm: &NormalizedAS) -> RedeiMatrix {
    let p = kf.field().characteristic();
    let m = norm.m();
    let locals: Vec<_> = norm.parts.iter().map(|d| kf.local_value(d)).collect();
    let f = kf.from_poly(norm.poly.clone());
    let mut entries = vec![vec![0u64; m]; m];
    for (i, row_part) in norm.parts.iter().enumerate() {
        let residue = ExtField::new_unchecked(kf.field().clone(), row_part.place.clone());
        let symbol =
            |d| hasse_symbol_in(kf, d, &residue).expect("D_j is regular at P_i for j != i");
        let mut off_diagonal = 0;
        for (j, dj) in locals.iter().enumerate() {
            if i != j {
                entries[i][j] = symbol(dj);
                off_diagonal += entries[i][j];
            }
        }
        let f_term = if norm.classification.is_imaginary() {
            symbol(&f)
        } else {
            0
        };
        entries[i][i] = (p - (off_diagonal + f_term) % p) % p;
    }
    RedeiMatrix {
        p,
        places: norm.parts.iter().map(|d| d.place.clone()).collect(),
        entries,
    }
}

/// Rank over `F_p` of a matrix with entries in `0..p`, by Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x % p).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][c], p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let k = a[r][c];
                for j in 0..cols {
                    a[r][j] = (a[r][j] + (p - k) * a[rank][j]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(x: u64, p: u64) -> u64 {
    let (mut result, mut base, mut e) = (1u64, x % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

pub fn lambda2(kf: &FunctionField, norm: &NormalizedAS) -> Result<usize, InvariantsError> {
    Ok(invariants(kf, norm)?.lambda2)
}

pub fn invariants(
    kf: &FunctionField,
    norm: &NormalizedAS,
) -> Result<InvariantsReport, InvariantsError> {
    let matrix = redei_matrix(kf, norm);
    invariants_from_matrix(norm, &matrix)
}

pub fn invariants_from_matrix(
    norm: &NormalizedAS,
    matrix: &RedeiMatrix,
) -> Result<InvariantsReport, InvariantsError> {
    let rank = rank_mod_p(&matrix.entries, matrix.p);
    let l1 = lambda1(norm);
    let lambda2 = l1.checked_sub(rank).ok_or_else(|| {
        InvariantsError::InternalInconsistency(format!("rank {rank} exceeds lambda1 = {l1}"))
    })?;
    Ok(InvariantsReport {
        lambda1: l1,
        rank,
        lambda2,
        classification: norm.classification,
        m: norm.m(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asnorm::normalize;
    use crate::gf::Fq;
    use crate::parse::parse_expression;
    use crate::symbols::hasse_symbol;

    fn setup(p: u64, n: usize, d: &str) -> (FunctionField, NormalizedAS) {
        let k = FunctionField::new(Fq::new(p, n).unwrap());
        let norm = normalize(&k, &parse_expression(d, &k).unwrap()).unwrap();
        (k, norm)
    }

    #[test]
    fn lambda1_examples() {
        assert_eq!(lambda1(&setup(2, 1, "1/(t^2+t)").1), 1);
        assert_eq!(lambda1(&setup(2, 1, "1/t + t").1), 1);
        assert_eq!(lambda1(&setup(2, 1, "t").1), 0);
    }

    #[test]
    fn genus_field_examples() {
        let (k, n) = setup(2, 1, "1/(t^2+t)");
        let g = genus_field(&k, &n);
        let r = k.ring();
        let local = |place: Vec<u32>| {
            Generator::Local(LocalPart {
                place: r.from_coeffs(place),
                e: 1,
                numer: r.one(),
            })
        };
        assert_eq!(g.generators, vec![local(vec![0, 1]), local(vec![1, 1])]);
        assert_eq!(g.relative_degree, 2);

        let (k, n) = setup(2, 1, "1/t + t");
        let g = genus_field(&k, &n);
        assert_eq!(
            g.generators,
            vec![local(vec![0, 1]), Generator::Infinite(k.ring().t())]
        );
        assert_eq!(g.relative_degree, 2);

        let (k, n) = setup(2, 1, "t");
        let g = genus_field(&k, &n);
        assert_eq!(g.generators, vec![Generator::Infinite(k.ring().t())]);
        assert_eq!(g.relative_degree, 1);
    }

    #[test]
    fn redei_examples() {
        let (k, n) = setup(2, 1, "1/(t^2+t)");
        assert_eq!(redei_matrix(&k, &n).entries, vec![vec![1, 1], vec![1, 1]]);
        let rep = invariants(&k, &n).unwrap();
        assert_eq!((rep.rank, rep.lambda2), (1, 0));

        let (k, n) = setup(2, 1, "1/t + 1/(t+1) + t");
        assert_eq!(redei_matrix(&k, &n).entries, vec![vec![1, 1], vec![1, 0]]);
        assert_eq!(lambda2(&k, &n).unwrap(), 0);

        let (k, n) = setup(2, 1, "1/t + t");
        assert_eq!(redei_matrix(&k, &n).entries, vec![vec![0]]);
        assert_eq!(lambda2(&k, &n).unwrap(), 1);

        let (k, n) = setup(2, 1, "t^3");
        assert!(redei_matrix(&k, &n).entries.is_empty());
        let rep = invariants(&k, &n).unwrap();
        assert_eq!((rep.lambda1, rep.lambda2), (0, 0));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 0]], 2), 2);
        assert_eq!(rank_mod_p(&[vec![0, 0], vec![0, 0]], 3), 0);
        assert_eq!(rank_mod_p(&[], 5), 0);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 5), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 2]], 3), 2);
        assert_eq!(
            rank_mod_p(&[vec![0, 3, 1], vec![0, 1, 6], vec![0, 0, 0]], 7),
            2
        );
    }

    #[test]
    fn row_sums_against_direct_symbols() {
        for (p, n, d) in [
            (3, 1, "1/t + 2/(t+1)^2 + t^2"),
            (2, 2, "g/t + 1/(t^2+t+g) + 1"),
            (5, 1, "1/(t^3+t+1) + 1/t"),
        ] {
            let (k, norm) = setup(p, n, d);
            let m = redei_matrix(&k, &norm);
            let f = k.from_poly(norm.poly.clone());
            for (i, place) in m.places.iter().enumerate() {
                let mut s: u64 = m.entries[i].iter().sum();
                if norm.classification.is_imaginary() {
                    s += hasse_symbol(&k, &f, place).unwrap();
                }
                assert_eq!(s % p, 0);
                for (j, part) in norm.parts.iter().enumerate() {
                    if i != j {
                        assert_eq!(
                            m.entries[i][j],
                            hasse_symbol(&k, &k.local_value(part), place).unwrap()
                        );
                    }
                }
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(300))]
        #[test]
        fn invariants_are_well_defined(field in 0usize..5, seed in proptest::prelude::any::<u64>()) {
            use rand::SeedableRng;
            let (p, n) = [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)][field];
            let k = FunctionField::new(Fq::new(p, n).unwrap());
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let d = crate::sample::ratfunc(&k, &mut rng, 6, 6);
            let Ok(norm) = normalize(&k, &d) else { return Ok(()) };
            let rep = invariants(&k, &norm).unwrap();
            let matrix = redei_matrix(&k, &norm);
            proptest::prop_assert!(rep.lambda2 <= rep.lambda1);
            if rep.classification == Classification::Real {
                proptest::prop_assert!(rep.rank + 1 <= rep.m);
            }
            for x in 2..p {
                let scaled = normalize(&k, &k.scale_int(&d, x as i64)).unwrap();
                proptest::prop_assert_eq!(invariants(&k, &scaled).unwrap(), rep);
                let expect: Vec<Vec<u64>> =
                    matrix.entries.iter().map(|r| r.iter().map(|e| e * x % p).collect()).collect();
                proptest::prop_assert_eq!(redei_matrix(&k, &scaled).entries, expect);
                proptest::prop_assert_eq!(genus_field(&k, &scaled).generators.len(), genus_field(&k, &norm).generators.len());
            }
            let b = crate::sample::ratfunc(&k, &mut rng, 4, 4);
            let shifted = normalize(&k, &k.add(&d, &k.wp(&b))).unwrap();
            proptest::prop_assert_eq!(invariants(&k, &shifted).unwrap(), rep);
        }
    }
}
