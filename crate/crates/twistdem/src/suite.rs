//! Declarative verification suites: a JSON list of cases, expanded into
//! single-report units, run on a thread pool and collected in case-id
//! order.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use serde::{Deserialize, Serialize};

use twistdem_core::finite::BranchingCase;
use twistdem_core::matrices::MatrixCase;
use twistdem_core::verify::{self, VerificationReport, Witness};
use twistdem_core::weights::sigma_fiber;
use twistdem_core::{AffineTypeDescriptor, HalfInt, RootSystemData, TwistedFamily, Weight};

/// The suite the acceptance tests and `verify` run by default.
pub const DEFAULT_SUITE: &str = include_str!("../suites/default.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRef {
    #[serde(rename = "type")]
    pub family: String,
    pub n: usize,
    /// Ranks below the usual range of the family (A3(2), D3(2), D4(2) with n = 3).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub nonstandard: bool,
}

impl TypeRef {
    pub fn descriptor(&self) -> Result<AffineTypeDescriptor> {
        let family: TwistedFamily = self.family.parse().map_err(|e| anyhow!("{e}"))?;
        let ty = if self.nonstandard {
            AffineTypeDescriptor::new_nonstandard(family, self.n)
        } else {
            AffineTypeDescriptor::new(family, self.n)
        };
        ty.map_err(|e| anyhow!("{e}"))
    }

    pub fn root_data(&self) -> Result<RootSystemData> {
        RootSystemData::new(self.descriptor()?).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Case {
    Qsystem {
        #[serde(flatten)]
        ty: TypeRef,
        i: usize,
        levels: Vec<i64>,
    },
    Ses {
        #[serde(flatten)]
        ty: TypeRef,
        i: usize,
        levels: Vec<i64>,
    },
    Tensor {
        #[serde(flatten)]
        ty: TypeRef,
        level: i64,
        parts: Vec<Vec<i64>>,
        lambda0: Vec<i64>,
    },
    /// Every lift in the fiber of `lambda` when `lifts` is absent.
    Dims {
        #[serde(flatten)]
        ty: TypeRef,
        levels: Vec<i64>,
        lambda: Vec<i64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lifts: Option<Vec<Vec<i64>>>,
    },
    Fusion {
        #[serde(flatten)]
        ty: TypeRef,
        level: i64,
        lifts: Vec<Vec<i64>>,
        lambda0: Vec<i64>,
    },
    FusionSurjection {
        #[serde(flatten)]
        ty: TypeRef,
        level: i64,
        levels: Vec<i64>,
        lift: Vec<i64>,
    },
    Branching {
        case: String,
        #[serde(default)]
        n: usize,
        #[serde(default)]
        i: usize,
        levels: Vec<i64>,
    },
    Matrices {
        /// `m1` or `m2`.
        case: String,
        #[serde(default)]
        m: u32,
        cases: usize,
        max_size: u32,
        seed: u64,
    },
    Indexsets {
        rmax: u32,
        smax: u32,
        kmax: usize,
    },
    Presentation {
        #[serde(flatten)]
        ty: TypeRef,
        max_level: i64,
        max_coord: i64,
    },
    Idempotent {
        #[serde(flatten)]
        ty: TypeRef,
        samples: usize,
        seed: u64,
    },
    /// Over every dominant weight with coordinates at most `max_coord`.
    WordIndependence {
        #[serde(flatten)]
        ty: TypeRef,
        levels: Vec<i64>,
        max_coord: i64,
    },
    GradeZero {
        #[serde(flatten)]
        ty: TypeRef,
        levels: Vec<i64>,
        max_coord: i64,
    },
    LengthAdditivity {
        #[serde(flatten)]
        ty: TypeRef,
        samples: usize,
        seed: u64,
    },
    /// Optional probe, not an acceptance criterion.
    SemiInfinite {
        #[serde(flatten)]
        ty: TypeRef,
        level: i64,
        lambda: Vec<i64>,
        max_n: i64,
        grade_bound: String,
        height_bound: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suite {
    pub cases: Vec<Case>,
}

impl Suite {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn default_suite() -> Self {
        Self::parse(DEFAULT_SUITE).expect("the embedded suite parses")
    }

    /// Cases of one `verify` kind, or all of them for `"all"`.
    pub fn select(&self, kind: &str) -> Vec<Case> {
        self.cases.iter().filter(|c| kind == "all" || c.kind() == kind).cloned().collect()
    }
}

fn weight(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

fn weights_upto(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    for j in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |c| {
                    let mut w = w.clone();
                    w.coords_mut()[j] = c;
                    w
                })
            })
            .collect();
    }
    out
}

impl Case {
    /// The `verify` subcommand this case belongs to.
    pub fn kind(&self) -> &'static str {
        match self {
            Case::Qsystem { .. } => "qsystem",
            Case::Ses { .. } => "ses",
            Case::Tensor { .. } => "tensor",
            Case::Dims { .. } => "dims",
            Case::Fusion { .. } | Case::FusionSurjection { .. } => "fusion",
            Case::Branching { .. } => "branching",
            Case::Matrices { .. } => "matrices",
            Case::Indexsets { .. } => "indexsets",
            Case::Presentation { .. } => "presentation",
            Case::Idempotent { .. }
            | Case::WordIndependence { .. }
            | Case::GradeZero { .. }
            | Case::LengthAdditivity { .. } => "engine",
            Case::SemiInfinite { .. } => "probe",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Case::Qsystem { .. } => "qsystem",
            Case::Ses { .. } => "ses",
            Case::Tensor { .. } => "tensor",
            Case::Dims { .. } => "dims",
            Case::Fusion { .. } => "fusion",
            Case::FusionSurjection { .. } => "fusion_surjection",
            Case::Branching { .. } => "branching",
            Case::Matrices { .. } => "matrices",
            Case::Indexsets { .. } => "indexsets",
            Case::Presentation { .. } => "presentation",
            Case::Idempotent { .. } => "demazure_idempotent",
            Case::WordIndependence { .. } => "word_independence",
            Case::GradeZero { .. } => "grade_zero",
            Case::LengthAdditivity { .. } => "length_additivity",
            Case::SemiInfinite { .. } => "semi_infinite",
        }
    }

    /// Splits multi-level and multi-lift cases into cases that each
    /// produce one report.
    pub fn expand(&self) -> Result<Vec<Case>> {
        let per_level = |levels: &[i64], make: &dyn Fn(i64) -> Case| levels.iter().map(|&l| make(l)).collect();
        Ok(match self {
            Case::Qsystem { ty, i, levels } => {
                per_level(levels, &|l| Case::Qsystem { ty: ty.clone(), i: *i, levels: vec![l] })
            }
            Case::Ses { ty, i, levels } => {
                per_level(levels, &|l| Case::Ses { ty: ty.clone(), i: *i, levels: vec![l] })
            }
            Case::Dims { ty, levels, lambda, lifts } => {
                let lifts = match lifts {
                    Some(l) => l.clone(),
                    None => {
                        let rsd = ty.root_data()?;
                        sigma_fiber(rsd.folding(), &weight(lambda), None)
                            .map_err(|e| anyhow!("{e}"))?
                            .into_iter()
                            .map(|w| w.coords().to_vec())
                            .collect()
                    }
                };
                let mut out = Vec::new();
                for &l in levels {
                    for lift in &lifts {
                        out.push(Case::Dims {
                            ty: ty.clone(),
                            levels: vec![l],
                            lambda: lambda.clone(),
                            lifts: Some(vec![lift.clone()]),
                        });
                    }
                }
                out
            }
            Case::Branching { case, n, i, levels } => per_level(levels, &|l| Case::Branching {
                case: case.clone(),
                n: *n,
                i: *i,
                levels: vec![l],
            }),
            Case::WordIndependence { ty, levels, max_coord } => {
                per_level(levels, &|l| Case::WordIndependence { ty: ty.clone(), levels: vec![l], max_coord: *max_coord })
            }
            Case::GradeZero { ty, levels, max_coord } => {
                per_level(levels, &|l| Case::GradeZero { ty: ty.clone(), levels: vec![l], max_coord: *max_coord })
            }
            other => vec![other.clone()],
        })
    }

    /// One report per level, lift or grid point.
    pub fn run(&self) -> Result<Vec<VerificationReport>> {
        let err = |e: twistdem_core::Error| anyhow!("{e}");
        Ok(match self {
            Case::Qsystem { ty, i, levels } => {
                let rsd = ty.root_data()?;
                levels.iter().map(|&l| verify::verify_qsystem(&rsd, *i, l)).collect()
            }
            Case::Ses { ty, i, levels } => {
                let rsd = ty.root_data()?;
                levels.iter().map(|&l| verify::verify_qsystem_ses(&rsd, *i, l)).collect()
            }
            Case::Tensor { ty, level, parts, lambda0 } => {
                let rsd = ty.root_data()?;
                let parts: Vec<Weight> = parts.iter().map(|p| weight(p)).collect();
                vec![verify::verify_tensor_decomposition(&rsd, *level, &parts, &weight(lambda0))]
            }
            Case::Dims { ty, levels, lambda, lifts } => {
                let rsd = ty.root_data()?;
                let lifts = lifts.as_ref().ok_or_else(|| anyhow!("dims case without lifts; expand it first"))?;
                let mut out = Vec::new();
                for &l in levels {
                    for lift in lifts {
                        out.push(verify::verify_dim_equality(&rsd, l, &weight(lambda), &weight(lift)).map_err(err)?);
                    }
                }
                out
            }
            Case::Fusion { ty, level, lifts, lambda0 } => {
                let rsd = ty.root_data()?;
                let lifts: Vec<Weight> = lifts.iter().map(|p| weight(p)).collect();
                vec![verify::verify_fusion_dimension(&rsd, *level, &lifts, &weight(lambda0)).map_err(err)?]
            }
            Case::FusionSurjection { ty, level, levels, lift } => {
                let rsd = ty.root_data()?;
                vec![verify::verify_fusion_surjection(&rsd, *level, levels, &weight(lift)).map_err(err)?]
            }
            Case::Branching { case, n, i, levels } => {
                let case = BranchingCase::parse(case, *n, *i).map_err(err)?;
                levels.iter().map(|&l| verify::verify_branching(case, l)).collect()
            }
            Case::Matrices { case, m, cases, max_size, seed } => {
                let case = match case.as_str() {
                    "m1" => MatrixCase::First,
                    "m2" if *m == 2 || *m == 3 => MatrixCase::Second { m: *m },
                    other => bail!("unknown matrix case {other:?} (m = {m})"),
                };
                vec![verify::verify_matrices(case, *cases, *max_size, *seed)]
            }
            Case::Indexsets { rmax, smax, kmax } => vec![verify::verify_index_sets(*rmax, *smax, *kmax)],
            Case::Presentation { ty, max_level, max_coord } => {
                vec![verify::verify_presentation_grid(&ty.root_data()?, *max_level, *max_coord)]
            }
            Case::Idempotent { ty, samples, seed } => {
                vec![verify::verify_idempotence(&ty.root_data()?, *samples, *seed)]
            }
            Case::WordIndependence { ty, levels, max_coord } => {
                let rsd = ty.root_data()?;
                grid(&rsd, levels, *max_coord, "word_independence", verify::verify_word_independence)
            }
            Case::GradeZero { ty, levels, max_coord } => {
                let rsd = ty.root_data()?;
                grid(&rsd, levels, *max_coord, "grade_zero", verify::verify_grade_zero)
            }
            Case::LengthAdditivity { ty, samples, seed } => {
                vec![verify::verify_length_additivity(&ty.root_data()?, *samples, *seed)]
            }
            Case::SemiInfinite { ty, level, lambda, max_n, grade_bound, height_bound } => {
                let g: HalfInt = grade_bound.parse().map_err(err)?;
                vec![verify::verify_semi_infinite_stability(
                    &ty.root_data()?,
                    *level,
                    &weight(lambda),
                    *max_n,
                    g,
                    *height_bound,
                )]
            }
        })
    }
}

/// One folded report per level over the weight grid.
fn grid(
    rsd: &RootSystemData,
    levels: &[i64],
    max_coord: i64,
    check: &str,
    f: fn(&RootSystemData, i64, &Weight) -> VerificationReport,
) -> Vec<VerificationReport> {
    levels
        .iter()
        .map(|&l| {
            let mut rep = VerificationReport::new(check)
                .param("type", rsd.descriptor().label())
                .param("level", l)
                .param("max_coord", max_coord);
            let weights = weights_upto(rsd.rank(), max_coord);
            for w in &weights {
                let one = f(rsd, l, w);
                if one.failed() {
                    rep.detail(one.case_id());
                    rep.fail(one.witness.unwrap_or(Witness::Error("missing witness".into())));
                }
            }
            rep.detail(format!("{} weights", weights.len()));
            rep
        })
        .collect()
}

fn failed_case(case: &Case, e: anyhow::Error) -> VerificationReport {
    let label = serde_json::to_string(case).unwrap_or_default();
    VerificationReport::new(case.name()).param("case", label).error_message(&e.to_string())
}

trait ErrorMessage {
    fn error_message(self, msg: &str) -> Self;
}

impl ErrorMessage for VerificationReport {
    fn error_message(mut self, msg: &str) -> Self {
        self.fail(Witness::Error(msg.to_string()));
        self
    }
}

/// Expands and runs `cases` on `threads` workers. Reports carry their own
/// timing and come back sorted by case id; a case that cannot be set up
/// becomes a failed report.
pub fn run_cases(cases: &[Case], threads: usize) -> Vec<VerificationReport> {
    let mut units = Vec::new();
    let mut out = Vec::new();
    for c in cases {
        match c.expand() {
            Ok(u) => units.extend(u),
            Err(e) => out.push(failed_case(c, e)),
        }
    }
    let next = AtomicUsize::new(0);
    let results = Mutex::new(out);
    std::thread::scope(|s| {
        for _ in 0..threads.max(1) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(unit) = units.get(k) else { break };
                let start = Instant::now();
                let reports = match unit.run() {
                    Ok(r) => r,
                    Err(e) => vec![failed_case(unit, e)],
                };
                let elapsed = start.elapsed();
                let share = elapsed / reports.len().max(1) as u32;
                let mut guard = results.lock().expect("no worker panics while holding the lock");
                guard.extend(reports.into_iter().map(|mut r| {
                    r.timing = Some(share);
                    r
                }));
            });
        }
    });
    let mut out = results.into_inner().expect("workers joined");
    out.sort_by_key(|r| r.case_id());
    out
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_example_parses() {
        let s = Suite::parse(r#"{"cases":[{"check":"qsystem","type":"a2n_2","n":1,"i":1,"levels":[1,2,3]}]}"#).unwrap();
        assert_eq!(s.cases.len(), 1);
        assert_eq!(s.cases[0].expand().unwrap().len(), 3);
        let reports = run_cases(&s.cases, 2);
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.passed() && r.timing.is_some()));
    }

    #[test]
    fn default_suite_parses_and_round_trips() {
        let s = Suite::default_suite();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(Suite::parse(&text).unwrap(), s);
    }

    #[test]
    fn bad_type_becomes_a_failed_report() {
        let s = Suite::parse(r#"{"cases":[{"check":"qsystem","type":"b7_9","n":1,"i":1,"levels":[1]}]}"#).unwrap();
        let reports = run_cases(&s.cases, 1);
        assert_eq!(reports.len(), 1);
        assert!(reports[0].failed());
    }

    #[test]
    fn dims_expands_over_the_fiber() {
        let s = Suite::parse(r#"{"cases":[{"check":"dims","type":"a2n_2","n":1,"levels":[1,2],"lambda":[1]}]}"#).unwrap();
        assert_eq!(s.cases[0].expand().unwrap().len(), 4);
    }

    #[test]
    fn probes_stabilise() {
        let cases = Suite::default_suite().select("probe");
        assert!(!cases.is_empty());
        for r in run_cases(&cases, 2) {
            assert!(r.passed(), "{r}");
        }
    }
}
