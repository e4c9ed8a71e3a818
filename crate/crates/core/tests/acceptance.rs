//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use oddinv::closed_form::{alternating_formula, AlternatingVariant};
use oddinv::oracle::{build_bucket_table, BucketTable};
use oddinv::perm::max_odd_length;
use oddinv::verify::{self, ScanReport, Verdict};
use oddinv::{cli, ClassSpec, Permutation, Population, SignedPoly};

type Outcome = Result<String, String>;

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Option<Duration>,
    run: fn(&Tables) -> Outcome,
}

/// Tables for n = 1..=10, built once and shared by every criterion.
struct Tables(Vec<BucketTable>);

impl Tables {
    fn get(&self, n: usize) -> &BucketTable {
        &self.0[n - 1]
    }
}

fn cli_stdout(args: &[&str]) -> Result<String, String> {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("oddinv").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{args:?} exited {code}: {}", String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap().trim_end().to_owned())
}

fn distributions(_: &Tables) -> Outcome {
    let expected = [
        (3, "1 + 4x + x^2"),
        (4, "1 + 8x + 6x^2 + 8x^3 + x^4"),
        (5, "1 + 12x + 23x^2 + 48x^3 + 23x^4 + 12x^5 + x^6"),
        (6, "1 + 16x + 59x^2 + 137x^3 + 147x^4 + 147x^5 + 137x^6 + 59x^7 + 16x^8 + x^9"),
    ];
    for (n, want) in expected {
        let got = cli_stdout(&["distribution", "--n", &n.to_string()])?;
        if got != want {
            return Err(format!("L_{n}: got {got}, want {want}"));
        }
    }
    Ok("L_3..L_6 exact".into())
}

fn counterexamples(_: &Tables) -> Outcome {
    let zero = cli_stdout(&["oracle", "--n", "8", "--ascents", "1,2,4", "--descents", "3,5,6"])?;
    let cubic = cli_stdout(&["oracle", "--n", "8", "--ascents", "1,2,4", "--descents", "3,5,6,7"])?;
    if zero != "0" || cubic != "-x^6 - x^8 - x^10" {
        return Err(format!("got `{zero}` and `{cubic}`"));
    }
    Ok("0 and -x^6 - x^8 - x^10".into())
}

fn all_pass(reports: &[ScanReport], want: Verdict) -> Outcome {
    let cases: u64 = reports.iter().map(|r| r.cases_checked).sum();
    match reports.iter().find(|r| r.verdict != want || !r.failures.is_empty()) {
        Some(r) => Err(format!("{} first failure: {:?}", r.summary(), r.failures.first())),
        None => Ok(format!("{} scans, {cases} cases", reports.len())),
    }
}

fn product_theorems(t: &Tables) -> Outcome {
    let reports: Vec<_> = (2..=10)
        .flat_map(|n| [verify::scan_theorem_main(t.get(n)), verify::scan_theorem_chessboard(t.get(n))])
        .collect();
    all_pass(&reports, Verdict::Pass).map(|s| format!("{s}, n = 2..10 exhaustive"))
}

fn quotients(t: &Tables) -> Outcome {
    let reports: Vec<_> = (2..=10).map(|n| verify::scan_quotients(t.get(n))).collect();
    all_pass(&reports, Verdict::Pass)
}

fn chessboard_reduction(t: &Tables) -> Outcome {
    let reports: Vec<_> = (2..=8).map(|n| verify::scan_chessboard_reduction(t.get(n))).collect();
    all_pass(&reports, Verdict::Pass)
}

fn zero_condition(t: &Tables) -> Outcome {
    let reports: Vec<_> = (2..=9).map(|n| verify::scan_zero_condition(t.get(n))).collect();
    let extra: usize = reports.iter().map(|r| r.zero_without_predicate.len()).sum();
    all_pass(&reports, Verdict::Pass).map(|s| format!("{s}; {extra} zero sums outside the predicate logged"))
}

fn alternating(t: &Tables) -> Outcome {
    for n in 2..=10 {
        let h = (n / 2) as i64;
        for variant in [AlternatingVariant::Alternating, AlternatingVariant::ReverseAlternating] {
            let c = variant.spec(n).map_err(|e| e.to_string())?;
            let oracle = t.get(n).signed_poly(&c, Population::FullSn).map_err(|e| e.to_string())?;
            let formula = alternating_formula(n, variant).map_err(|e| e.to_string())?;
            let literal = match (n % 2, variant) {
                (1, _) => SignedPoly::zero(),
                (_, AlternatingVariant::Alternating) => SignedPoly::monomial(if h % 2 == 0 { 1 } else { -1 }, h),
                (_, AlternatingVariant::ReverseAlternating) => SignedPoly::x_pow(h * (h - 1)),
            };
            if oracle != formula || formula != literal {
                return Err(format!("n={n} {variant:?}: oracle {oracle}, formula {formula}, expected {literal}"));
            }
        }
    }
    Ok("n = 2..10, both patterns".into())
}

fn transforms(t: &Tables) -> Outcome {
    let reports: Vec<_> = (2..=8).map(|n| verify::scan_transforms(t.get(n))).collect();
    all_pass(&reports, Verdict::Pass)
}

fn conjectures(t: &Tables) -> Outcome {
    let mixed: Vec<_> = (2..=9).map(|n| verify::check_mixed_shift_conjecture(t.get(n))).collect();
    let mixed_summary = all_pass(&mixed, Verdict::ConjectureConsistent)?;
    let uni = verify::check_unimodality(10, 10).map_err(|e| e.to_string())?;
    if uni.verdict != Verdict::ConjectureConsistent || !uni.failures.is_empty() {
        return Err(format!("unimodality: {} {:?}", uni.summary(), uni.failures.first()));
    }
    if uni.non_unimodal != [4] {
        return Err(format!("non-unimodal at {:?}, expected [4]", uni.non_unimodal));
    }
    Ok(format!("mixed shift: {mixed_summary}; symmetric for n <= 10, non-unimodal only at n = 4"))
}

fn odd_length_properties(_: &Tables) -> Outcome {
    let mut checked = 0u64;
    for n in 1..=8 {
        let top = max_odd_length(n);
        let w0 = Permutation::longest_element(n).unwrap();
        if w0.odd_length() != (n / 2) * n.div_ceil(2) {
            return Err(format!("L(w0) wrong for n={n}"));
        }
        if Permutation::identity(n).unwrap().odd_length() != 0 {
            return Err(format!("L(e) != 0 for n={n}"));
        }
        for i in 1..n {
            if Permutation::simple_transposition(n, i).unwrap().odd_length() != 1 {
                return Err(format!("L(s_{i}) != 1 for n={n}"));
            }
        }
        for p in Permutation::all(n).unwrap() {
            let l = p.odd_length();
            if w0.compose(&p).unwrap().odd_length() != top - l || p.compose(&w0).unwrap().odd_length() != top - l {
                return Err(format!("complementation fails at {:?}", p.values().collect::<Vec<_>>()));
            }
            if (l == 0) != p.is_identity() || (l == top) != (p == w0) {
                return Err(format!("extremes fail at {:?}", p.values().collect::<Vec<_>>()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} permutations, n = 1..8"))
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "distribution polynomials", budget: Some(Duration::from_secs(1)), run: distributions },
    Criterion { id: 2, title: "n = 8 counterexamples", budget: Some(Duration::from_secs(5)), run: counterexamples },
    Criterion { id: 3, title: "unmixed and chessboard product formulas", budget: Some(Duration::from_secs(600)), run: product_theorems },
    Criterion { id: 4, title: "quotient formulas", budget: Some(Duration::from_secs(300)), run: quotients },
    Criterion { id: 5, title: "reduction to chessboard elements", budget: None, run: chessboard_reduction },
    Criterion { id: 6, title: "zero condition", budget: None, run: zero_condition },
    Criterion { id: 7, title: "alternating permutations", budget: None, run: alternating },
    Criterion { id: 8, title: "transform relations", budget: None, run: transforms },
    Criterion { id: 9, title: "mixed shift and unimodality conjectures", budget: None, run: conjectures },
    Criterion { id: 10, title: "properties of the odd length", budget: None, run: odd_length_properties },
];

fn main() -> ExitCode {
    let start = Instant::now();
    let tables = Tables((1..=10).map(|n| build_bucket_table(n).expect("n within cap")).collect());
    println!("built oracle tables for n = 1..10 in {:.2}s", start.elapsed().as_secs_f64());
    // Sanity: the tables are what every criterion reads.
    assert_eq!(tables.get(10).cardinality(&ClassSpec::unrestricted(10).unwrap()).unwrap(), 3_628_800);

    let mut failed = 0;
    for c in &CRITERIA {
        let t0 = Instant::now();
        let outcome = (c.run)(&tables);
        let elapsed = t0.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {:.2}s, budget {:.0}s", elapsed.as_secs_f64(), b.as_secs_f64())),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("[{tag}] criterion {:>2}: {:<42} {:>8.3}s  {detail}", c.id, c.title, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
