//! Exhaustive scans comparing closed forms, transforms and conjectures with
//! the oracle. Every scan over a fixed `n` reads one shared [`BucketTable`].

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::class::ClassSpec;
use crate::closed_form::{alternating_formula, chessboard_formula, quotient_formula, unmixed_formula, AlternatingVariant};
use crate::error::Result;
use crate::laurent::SignedPoly;
use crate::oracle::{build_bucket_table_with_cap, BucketTable};
use crate::perm::Population;
use crate::transforms::{self, TransformResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// A conjecture survived every case; distinct from a proved `Pass`.
    ConjectureConsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: SignedPoly,
    pub actual: SignedPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub suite: String,
    /// The `n` scanned; for the unimodality check, the largest `n`.
    pub n: usize,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
    pub verdict: Verdict,
    /// Classes whose signed sum is zero although the zero condition fails.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub zero_without_predicate: Vec<ClassSpec>,
    /// Values of `n` whose odd-length distribution is not unimodal.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub non_unimodal: Vec<usize>,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ScanReport {
    fn new(suite: &str, n: usize, started: Instant, cases: u64, mut failures: Vec<Failure>, conjecture: bool) -> Self {
        failures.sort();
        let verdict = match (failures.is_empty(), conjecture) {
            (false, _) => Verdict::Fail,
            (true, false) => Verdict::Pass,
            (true, true) => Verdict::ConjectureConsistent,
        };
        Self {
            suite: suite.to_owned(),
            n,
            cases_checked: cases,
            failures,
            elapsed: started.elapsed(),
            verdict,
            zero_without_predicate: Vec::new(),
            non_unimodal: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// One human-readable summary line.
    pub fn summary(&self) -> String {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ConjectureConsistent => "CONJECTURE-CONSISTENT",
        };
        format!(
            "{:<22} n={:<3} cases={:<8} failures={:<4} {:>8.3}s  {}",
            self.suite,
            self.n,
            self.cases_checked,
            self.failures.len(),
            self.elapsed.as_secs_f64(),
            verdict
        )
    }
}

/// Accumulates checks for one scan.
#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, case: impl FnOnce() -> String, expected: SignedPoly, actual: SignedPoly) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                case: case(),
                expected,
                actual,
                error: None,
            });
        }
    }

    fn check_computed(&mut self, case: impl FnOnce() -> String, expected: Result<SignedPoly>, actual: SignedPoly) {
        match expected {
            Ok(e) => self.check(case, e, actual),
            Err(err) => {
                self.cases += 1;
                self.failures.push(Failure {
                    case: case(),
                    expected: SignedPoly::zero(),
                    actual,
                    error: Some(err.to_string()),
                });
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self
    }
}

fn gf(table: &BucketTable, c: &ClassSpec, pop: Population) -> SignedPoly {
    table.signed_poly(c, pop).expect("spec drawn from the table's n")
}

fn scan_specs(specs: Vec<ClassSpec>, per_spec: impl Fn(&ClassSpec, &mut Tally) + Sync) -> Tally {
    specs
        .par_iter()
        .map(|c| {
            let mut t = Tally::default();
            per_spec(c, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge)
}

fn disjoint_specs(n: usize) -> Vec<ClassSpec> {
    ClassSpec::all_disjoint(n).expect("table n is within enumeration range")
}

/// Unmixed product formula against the oracle over `S_n`, for every unmixed class.
pub fn scan_theorem_main(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let specs = ClassSpec::all_unmixed(n).expect("n within range");
    let t = scan_specs(specs, |c, t| {
        let oracle = gf(table, c, Population::FullSn);
        t.check_computed(|| c.to_string(), unmixed_formula(c), oracle);
    });
    ScanReport::new("theorem-main", n, start, t.cases, t.failures, false)
}

/// Chessboard product formulas against the oracle on `C_{n,+}` and `C_{n,−}`.
pub fn scan_theorem_chessboard(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let specs = ClassSpec::all_unmixed(n).expect("n within range");
    let t = scan_specs(specs, |c, t| {
        for pop in [Population::ChessEven, Population::ChessOdd] {
            let oracle = gf(table, c, pop);
            t.check_computed(|| format!("{c} {}", pop.flag()), chessboard_formula(c, pop), oracle);
        }
    });
    ScanReport::new("theorem-chessboard", n, start, t.cases, t.failures, false)
}

/// Quotient formulas (no forced descents) on both chessboard populations.
pub fn scan_quotients(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let specs: Vec<_> = disjoint_specs(n).into_iter().filter(|c| c.descents().is_empty()).collect();
    let t = scan_specs(specs, |c, t| {
        let pops: &[Population] = if n % 2 == 0 {
            &[Population::ChessEven, Population::ChessOdd]
        } else {
            &[Population::ChessEven]
        };
        for &pop in pops {
            let oracle = gf(table, c, pop);
            t.check_computed(|| format!("{c} {}", pop.flag()), quotient_formula(n, c.ascents(), pop), oracle);
        }
    });
    ScanReport::new("quotients", n, start, t.cases, t.failures, false)
}

/// The sum over `S_n` equals the sum over chessboard elements, for every disjoint pair.
pub fn scan_chessboard_reduction(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let t = scan_specs(disjoint_specs(n), |c, t| {
        t.check(|| c.to_string(), gf(table, c, Population::FullSn), gf(table, c, Population::ChessAll));
    });
    ScanReport::new("chessboard-reduction", n, start, t.cases, t.failures, false)
}

/// Every class satisfying the zero condition must have zero signed sum.
/// Classes with zero sum but a false predicate are recorded, not failed.
pub fn scan_zero_condition(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let specs = disjoint_specs(n);
    let outcomes: Vec<(bool, SignedPoly)> = specs
        .par_iter()
        .map(|c| (c.zero_condition(), gf(table, c, Population::FullSn)))
        .collect();
    let mut t = Tally::default();
    let mut unexplained = Vec::new();
    for (c, (predicate, sum)) in specs.iter().zip(outcomes) {
        if predicate {
            t.check(|| c.to_string(), SignedPoly::zero(), sum);
        } else if sum.is_zero() {
            unexplained.push(*c);
        }
    }
    let mut report = ScanReport::new("zero-condition", n, start, t.cases, t.failures, false);
    report.zero_without_predicate = unexplained;
    report
}

fn check_relation(table: &BucketTable, c: &ClassSpec, r: &TransformResult, label: &str, t: &mut Tally) {
    for old_pop in [Population::FullSn, Population::ChessEven, Population::ChessOdd] {
        let Some(new_pop) = r.corresponding_population(old_pop) else {
            continue;
        };
        let old = gf(table, c, old_pop);
        let new = gf(table, &r.new_spec, new_pop);
        t.check(|| format!("{label} {c} {}", old_pop.flag()), r.predict_old(&new), old.clone());
        if let Some(mid) = &r.intermediate {
            t.check(|| format!("{label} (intermediate) {c} {}", old_pop.flag()), gf(table, mid, new_pop), old);
        }
    }
}

/// All qualifying applications of the proved transforms, plus the
/// vanishing of classes with an ascent run closed by a descent.
pub fn scan_transforms(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let t = scan_specs(disjoint_specs(n), |c, t| {
        type Shift = fn(&ClassSpec, usize, usize) -> Result<TransformResult>;
        let shifts: [(&str, Shift); 4] = [
            ("shift-right-ascent", transforms::shift_right_ascent),
            ("shift-left-ascent", transforms::shift_left_ascent),
            ("shift-right-descent", transforms::shift_right_descent),
            ("shift-left-descent", transforms::shift_left_descent),
        ];
        for i in 1..n {
            for k in 0..=n / 2 {
                for (label, shift) in shifts {
                    if let Ok(r) = shift(c, i, k) {
                        check_relation(table, c, &r, &format!("{label}(i={i},k={k})"), t);
                    }
                }
            }
        }
        for comp in c.constrained().connected_components() {
            if let Ok(r) = transforms::reverse_descent_component(c, comp) {
                check_relation(table, c, &r, &format!("reverse{comp}"), t);
            }
        }
        check_relation(table, c, &transforms::complement(c), "complement", t);
        if transforms::ascent_run_ending_in_descent(c) {
            t.check(|| format!("zero-remark {c}"), SignedPoly::zero(), gf(table, c, Population::FullSn));
        }
    });
    ScanReport::new("transforms", n, start, t.cases, t.failures, false)
}

/// Alternating and reverse alternating permutations against their formulas.
pub fn scan_alternating(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let mut t = Tally::default();
    for variant in [AlternatingVariant::Alternating, AlternatingVariant::ReverseAlternating] {
        let c = variant.spec(n).expect("n within range");
        t.check_computed(|| format!("{variant:?} n={n}"), alternating_formula(n, variant), gf(table, &c, Population::FullSn));
    }
    ScanReport::new("alternating", n, start, t.cases, t.failures, false)
}

/// The conjectured shift of components mixing ascents and descents.
/// Components lying wholly in one set are proved cases and are skipped.
pub fn check_mixed_shift_conjecture(table: &BucketTable) -> ScanReport {
    let start = Instant::now();
    let n = table.n();
    let t = scan_specs(disjoint_specs(n), |c, t| {
        for comp in c.constrained().connected_components() {
            if comp.len() % 2 == 0 {
                continue;
            }
            let block = comp.to_set();
            if block.is_subset(c.ascents()) || block.is_subset(c.descents()) {
                continue;
            }
            if let Ok(r) = transforms::conjectured_mixed_shift(c, comp.lo, (comp.len() - 1) / 2) {
                let old = gf(table, c, Population::FullSn);
                let new = gf(table, &r.new_spec, Population::FullSn);
                t.check(|| format!("mixed-shift{comp} {c}"), r.predict_old(&new), old);
            }
        }
    });
    ScanReport::new("mixed-shift-conjecture", n, start, t.cases, t.failures, true)
}

/// Symmetry (proved) and unimodality (conjectured for `n ≥ 5`) of the
/// odd-length distribution for `3 ≤ n ≤ n_max`.
pub fn check_unimodality(n_max: usize, cap: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    let mut non_unimodal = Vec::new();
    for n in 3..=n_max {
        let dist = build_bucket_table_with_cap(n, cap)?.distribution();
        t.cases += 1;
        if !dist.is_symmetric() {
            t.failures.push(Failure {
                case: format!("symmetry n={n}"),
                expected: dist.reciprocal_substitute().shift(dist.degree().unwrap_or(0)),
                actual: dist.clone(),
                error: Some("distribution is not symmetric".into()),
            });
        }
        if !dist.is_unimodal()? {
            non_unimodal.push(n);
            if n >= 5 {
                t.failures.push(Failure {
                    case: format!("unimodality n={n}"),
                    expected: dist.clone(),
                    actual: dist,
                    error: Some("distribution is not unimodal".into()),
                });
            }
        }
    }
    let mut report = ScanReport::new("unimodality", n_max, start, t.cases, t.failures, true);
    report.non_unimodal = non_unimodal;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    TheoremMain,
    TheoremChessboard,
    Quotients,
    ChessboardReduction,
    ZeroCondition,
    Transforms,
    Alternating,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::TheoremMain,
        Suite::TheoremChessboard,
        Suite::Quotients,
        Suite::ChessboardReduction,
        Suite::ZeroCondition,
        Suite::Transforms,
        Suite::Alternating,
    ];

    pub fn run(self, table: &BucketTable) -> ScanReport {
        match self {
            Suite::TheoremMain => scan_theorem_main(table),
            Suite::TheoremChessboard => scan_theorem_chessboard(table),
            Suite::Quotients => scan_quotients(table),
            Suite::ChessboardReduction => scan_chessboard_reduction(table),
            Suite::ZeroCondition => scan_zero_condition(table),
            Suite::Transforms => scan_transforms(table),
            Suite::Alternating => scan_alternating(table),
        }
    }
}
