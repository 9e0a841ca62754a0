//! End-to-end pipeline from field and `D` specifications to a report.

use std::fmt::Write as _;

use serde::Serialize;

use crate::asnorm::{normalize, Classification, NormalizedAS};
use crate::error::Error;
use crate::gf::Fq;
use crate::invariants::{genus_field, invariants_from_matrix, redei_matrix, Generator};
use crate::parse::parse_expression;
use crate::poly::DEFAULT_SEED;
use crate::ratfunc::{FunctionField, LocalPart, Place};
use crate::zeta::{self, ZetaError, DEFAULT_BUDGET};

pub const SCHEMA: &str = "as-genus/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub zeta: bool,
    pub budget: u64,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            zeta: false,
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputEcho {
    pub field: String,
    pub modulus: Option<String>,
    pub d: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldReport {
    pub p: u64,
    pub n: usize,
    pub q: u64,
    pub modulus: Vec<u64>,
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartReport {
    pub place: String,
    pub e: usize,
    pub numerator: String,
    pub term: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedReport {
    pub parts: Vec<PartReport>,
    pub f: String,
    pub d: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusFieldReport {
    /// Right-hand sides `D_i` (and `f`) of the defining equations `x^p - x = ...`.
    pub generators: Vec<String>,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub modulus: i128,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaReport {
    pub genus: usize,
    pub point_counts: Vec<u64>,
    pub l_coefficients: Vec<i128>,
    pub class_number: Option<i128>,
    pub divisibility: Option<DivisibilityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub input: InputEcho,
    pub field: FieldReport,
    pub d: String,
    pub normalized: NormalizedReport,
    pub classification: Classification,
    pub m: usize,
    pub ramified_places: Vec<String>,
    pub genus_field: GenusFieldReport,
    pub lambda1: usize,
    pub redei_matrix: MatrixReport,
    pub rank: usize,
    pub lambda2: usize,
    pub zeta: Option<ZetaReport>,
}

/// Builds the field from a spec (`"q"`, `"p^n"` or `"p^n:c0,...,1"`) and an
/// optional comma-separated modulus override.
pub fn build_field(spec: &str, modulus: Option<&str>) -> Result<Fq, Error> {
    let field = match modulus {
        Some(m) => {
            let head = spec.split_once(':').map_or(spec, |(h, _)| h);
            Fq::from_spec(&format!("{head}:{m}"))?
        }
        None => Fq::from_spec(spec)?,
    };
    Ok(field)
}

pub fn run(
    field_spec: &str,
    modulus: Option<&str>,
    d_expr: &str,
    opts: &Options,
) -> Result<Report, Error> {
    let field = build_field(field_spec, modulus)?;
    let kf = FunctionField::with_seed(field, opts.seed);
    let d = parse_expression(d_expr, &kf)?;
    let norm = normalize(&kf, &d)?;
    let zeta = if opts.zeta {
        Some(zeta_report(&kf, &norm, opts.budget)?)
    } else {
        None
    };
    let matrix = redei_matrix(&kf, &norm);
    let inv = invariants_from_matrix(&norm, &matrix)?;
    let gf = genus_field(&kf, &norm);
    let r = kf.ring();
    let field = kf.field().desc();

    Ok(Report {
        schema: SCHEMA,
        input: InputEcho {
            field: field_spec.to_string(),
            modulus: modulus.map(str::to_string),
            d: d_expr.to_string(),
        },
        field: FieldReport {
            p: field.p,
            n: field.n,
            q: field.q(),
            modulus: field.modulus.clone(),
            spec: field.to_string(),
        },
        d: kf.format(&d),
        normalized: NormalizedReport {
            parts: norm
                .parts
                .iter()
                .map(|part| part_report(&kf, part))
                .collect(),
            f: r.format(&norm.poly),
            d: kf.format(&norm.value(&kf)),
            witness: kf.format(&norm.witness),
        },
        classification: norm.classification,
        m: norm.m(),
        ramified_places: norm
            .ramified_places()
            .iter()
            .map(|place| match place {
                Place::Finite(p) => r.format(p),
                Place::Infinity => "infinity".to_string(),
            })
            .collect(),
        genus_field: GenusFieldReport {
            generators: gf
                .generators
                .iter()
                .map(|g| match g {
                    Generator::Local(part) => kf.format(&kf.local_value(part)),
                    Generator::Infinite(f) => r.format(f),
                })
                .collect(),
            degree: gf.relative_degree,
        },
        lambda1: inv.lambda1,
        redei_matrix: MatrixReport {
            labels: matrix.places.iter().map(|p| r.format(p)).collect(),
            entries: matrix.entries,
        },
        rank: inv.rank,
        lambda2: inv.lambda2,
        zeta,
    })
}

fn part_report(kf: &FunctionField, part: &LocalPart) -> PartReport {
    PartReport {
        place: kf.ring().format(&part.place),
        e: part.e,
        numerator: kf.ring().format(&part.numer),
        term: kf.format(&kf.local_value(part)),
    }
}

fn zeta_report(
    kf: &FunctionField,
    norm: &NormalizedAS,
    budget: u64,
) -> Result<ZetaReport, ZetaError> {
    let data = zeta::zeta_data(kf, norm, budget)?;
    let (class_number, divisibility) = if norm.classification == Classification::RamifiedImaginary {
        let h = data.l.eval(1);
        let check = zeta::divisibility_check(kf, norm, h);
        (
            Some(h),
            Some(DivisibilityReport {
                modulus: check.modulus,
                pass: check.pass,
            }),
        )
    } else {
        (None, None)
    };
    Ok(ZetaReport {
        genus: data.genus,
        point_counts: data.point_counts,
        l_coefficients: data.l.coeffs,
        class_number,
        divisibility,
    })
}

impl Report {
    /// Pretty-printed JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "field        F_{} (p = {}, modulus {})",
            self.field.q, self.field.p, self.field.spec
        );
        let _ = writeln!(s, "D            {}", self.d);
        let _ = writeln!(s, "normalized   {}", self.normalized.d);
        let _ = writeln!(s, "witness B    {}", self.normalized.witness);
        for part in &self.normalized.parts {
            let _ = writeln!(s, "  at {:<12} e = {:<3} {}", part.place, part.e, part.term);
        }
        let _ = writeln!(s, "  polynomial part f = {}", self.normalized.f);
        let _ = writeln!(s, "class        {}", self.classification.name());
        let _ = writeln!(s, "m            {}", self.m);
        let _ = writeln!(s, "ramified     {}", self.ramified_places.join(", "));
        let _ = writeln!(
            s,
            "genus field  [G(K):K] = {}, generators x^p - x = {}",
            self.genus_field.degree,
            self.genus_field.generators.join(" ; ")
        );
        let _ = writeln!(s, "lambda1      {}", self.lambda1);
        if self.m > 0 {
            let _ = writeln!(s, "Redei matrix");
            let width = self
                .redei_matrix
                .labels
                .iter()
                .map(|l| l.len())
                .max()
                .unwrap_or(1);
            let _ = write!(s, "  {:width$} |", "");
            for label in &self.redei_matrix.labels {
                let _ = write!(s, " {label}");
            }
            s.push('\n');
            for (label, row) in self
                .redei_matrix
                .labels
                .iter()
                .zip(&self.redei_matrix.entries)
            {
                let _ = write!(s, "  {label:width$} |");
                for (entry, col) in row.iter().zip(&self.redei_matrix.labels) {
                    let _ = write!(s, " {entry:>w$}", w = col.len());
                }
                s.push('\n');
            }
        }
        let _ = writeln!(s, "rank         {}", self.rank);
        let _ = writeln!(s, "lambda2      {}", self.lambda2);
        if let Some(z) = &self.zeta {
            let _ = writeln!(s, "genus        {}", z.genus);
            let counts: Vec<String> = z.point_counts.iter().map(|n| n.to_string()).collect();
            let _ = writeln!(s, "N_k          [{}]", counts.join(", "));
            let _ = writeln!(s, "L(T)         {}", format_l(&z.l_coefficients));
            match (&z.class_number, &z.divisibility) {
                (Some(h), Some(div)) => {
                    let _ = writeln!(s, "h            {h}");
                    let verdict = if div.pass { "pass" } else { "FAIL" };
                    let _ = writeln!(s, "divisibility {} | {h}: {verdict}", div.modulus);
                }
                _ => {
                    let _ = writeln!(
                        s,
                        "h            not computed for {} extensions",
                        self.classification.name()
                    );
                }
            }
        }
        s
    }
}

fn format_l(coeffs: &[i128]) -> String {
    let mut out = String::new();
    for (i, &a) in coeffs.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let mag = a.unsigned_abs();
        if out.is_empty() {
            if a < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if a < 0 { " - " } else { " + " });
        }
        match (i, mag) {
            (0, _) => out.push_str(&mag.to_string()),
            (_, 1) => {}
            _ => out.push_str(&format!("{mag}*")),
        }
        match i {
            0 => {}
            1 => out.push('T'),
            _ => out.push_str(&format!("T^{i}")),
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
