//! Command-line front end. [`run`] takes the argument list and two writers so
//! the binary stays a one-liner and tests can capture output.
//!
//! Exit status: 0 on success or match, 1 on mismatch or counterexample,
//! 2 on usage error.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::class::{ClassSpec, Interval, PositionSet};
use crate::closed_form::chessboard_formula;
use crate::error::Error;
use crate::laurent::SignedPoly;
use crate::oracle::{self, build_bucket_table_with_cap, DEFAULT_CAP};
use crate::perm::Population;
use crate::transforms::{self, PopulationMap, TransformResult};
use crate::verify::{self, ScanReport, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "oddinv", version, about = "Signed odd-length generating functions over descent classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a class by closed form, oracle, or both.
    Eval {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        common: Common,
    },
    /// Brute-force signed sum over a class.
    Oracle {
        #[command(flatten)]
        class: ClassArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Odd-length distribution `Σ x^L(σ)` over all of S_n.
    Distribution {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Rewrite a class and print the relation between the two sums.
    Transform {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        which: TransformName,
        /// Left end of the shifted component.
        #[arg(long)]
        i: Option<usize>,
        /// The shifted component is `[i, i+2k]`.
        #[arg(long)]
        k: Option<usize>,
        /// Descent component to reverse.
        #[arg(long)]
        lo: Option<usize>,
        #[arg(long)]
        hi: Option<usize>,
        /// Also evaluate both sides with the oracle.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive scans of the proved formulas.
    Scan {
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
        #[command(flatten)]
        range: NRange,
        #[command(flatten)]
        common: Common,
    },
    /// Checks of the open conjectures.
    Conjecture {
        #[arg(long, value_enum)]
        which: ConjectureName,
        #[command(flatten)]
        range: NRange,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long)]
    n: usize,
    /// Forced ascents, e.g. `1,2,4`.
    #[arg(long, default_value = "", value_parser = parse_positions)]
    ascents: PositionSet,
    /// Forced descents, e.g. `3,5`.
    #[arg(long, default_value = "", value_parser = parse_positions)]
    descents: PositionSet,
    #[arg(long, default_value = "sn", value_parser = parse_population)]
    population: Population,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Largest n the oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct NRange {
    #[arg(long, default_value_t = 2)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TransformName {
    ShiftRightAscent,
    ShiftLeftAscent,
    ShiftRightDescent,
    ShiftLeftDescent,
    ReverseDescentComponent,
    Complement,
    MixedShift,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteName {
    TheoremMain,
    TheoremChessboard,
    Quotients,
    ChessboardReduction,
    ZeroCondition,
    Transforms,
    Alternating,
    All,
}

impl SuiteName {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteName::TheoremMain => vec![Suite::TheoremMain],
            SuiteName::TheoremChessboard => vec![Suite::TheoremChessboard],
            SuiteName::Quotients => vec![Suite::Quotients],
            SuiteName::ChessboardReduction => vec![Suite::ChessboardReduction],
            SuiteName::ZeroCondition => vec![Suite::ZeroCondition],
            SuiteName::Transforms => vec![Suite::Transforms],
            SuiteName::Alternating => vec![Suite::Alternating],
            SuiteName::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ConjectureName {
    MixedShift,
    Unimodality,
}

fn parse_positions(s: &str) -> Result<PositionSet, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_population(s: &str) -> Result<Population, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A request that could not be carried out.
enum Failure {
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Usage(format!("--cap: {e} (raise it with --cap)")),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

impl ClassArgs {
    fn spec(&self) -> Result<ClassSpec, Failure> {
        if self.n == 0 || self.n >= crate::perm::MAX_N {
            return Err(Failure::Usage(format!("--n: {}", Error::UnsupportedSize { n: self.n, max: crate::perm::MAX_N - 1 })));
        }
        for (flag, set) in [("--ascents", self.ascents), ("--descents", self.descents)] {
            if let Some(bad) = set.difference(PositionSet::full(self.n)).iter().next() {
                return Err(Failure::Usage(format!(
                    "{flag}: {}",
                    Error::PositionOutOfRange { position: bad, n: self.n }
                )));
            }
        }
        ClassSpec::new(self.n, self.ascents, self.descents).map_err(|e| Failure::Usage(format!("--ascents/--descents: {e}")))
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_MISMATCH,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Eval { class, method, common } => eval(&class, method, &common, out),
        Command::Oracle { class, common } => {
            let c = class.spec()?;
            let value = oracle_value(&c, class.population, common.cap)?;
            emit(out, common.output, &value, || json!({ "spec": c, "population": class.population.flag(), "oracle": value }));
            Ok(true)
        }
        Command::Distribution { n, common } => {
            let value = oracle::distribution_with_cap(n, common.cap)?;
            emit(out, common.output, &value, || json!({ "n": n, "distribution": value }));
            Ok(true)
        }
        Command::Transform { class, which, i, k, lo, hi, check, common } => {
            let c = class.spec()?;
            let r = apply_transform(&c, which, i, k, lo, hi)?;
            transform_report(&c, &r, class.population, check, &common, out)
        }
        Command::Scan { suite, range, common } => {
            let mut reports = Vec::new();
            for n in range.values()? {
                let table = build_bucket_table_with_cap(n, common.cap)?;
                for s in suite.suites() {
                    reports.push(s.run(&table));
                }
            }
            emit_reports(out, common.output, &reports)
        }
        Command::Conjecture { which, range, common } => {
            let reports = match which {
                ConjectureName::MixedShift => range
                    .values()?
                    .map(|n| Ok(verify::check_mixed_shift_conjecture(&build_bucket_table_with_cap(n, common.cap)?)))
                    .collect::<Result<Vec<_>, Error>>()?,
                ConjectureName::Unimodality => vec![verify::check_unimodality(range.n_max, common.cap)?],
            };
            emit_reports(out, common.output, &reports)
        }
    }
}

impl NRange {
    fn values(&self) -> Result<std::ops::RangeInclusive<usize>, Failure> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Failure::Usage(format!("--n-min {} / --n-max {}: empty range", self.n_min, self.n_max)));
        }
        Ok(self.n_min..=self.n_max)
    }
}

fn oracle_value(c: &ClassSpec, pop: Population, cap: usize) -> Result<SignedPoly, Error> {
    let table = build_bucket_table_with_cap(c.n(), cap)?;
    table.signed_poly(c, pop)
}

fn closed_value(c: &ClassSpec, pop: Population) -> Result<SignedPoly, Failure> {
    if let Some(clause) = c.unmixed_violation() {
        return Err(Failure::Usage(format!("--method closed: {}", Error::NotUnmixed(clause))));
    }
    Ok(chessboard_formula(c, pop)?)
}

fn eval(class: &ClassArgs, method: Method, common: &Common, out: &mut dyn Write) -> CmdResult {
    let c = class.spec()?;
    let pop = class.population;
    let closed = match method {
        Method::Closed | Method::Both => Some(closed_value(&c, pop)?),
        Method::Oracle => None,
    };
    let oracle = match method {
        Method::Oracle | Method::Both => Some(oracle_value(&c, pop, common.cap)?),
        Method::Closed => None,
    };
    let verdict = match (&closed, &oracle) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let verdict_str = verdict.map(|ok| if ok { "MATCH" } else { "MISMATCH" });
    match common.output {
        Output::Json => {
            let mut v = json!({ "spec": c, "population": pop.flag() });
            if let Some(p) = &closed {
                v["closed"] = json!(p);
            }
            if let Some(p) = &oracle {
                v["oracle"] = json!(p);
            }
            if let Some(s) = verdict_str {
                v["verdict"] = json!(s);
            }
            let _ = writeln!(out, "{v}");
        }
        Output::Text => match (&closed, &oracle, verdict_str) {
            (Some(a), Some(b), Some(s)) => {
                let _ = writeln!(out, "closed: {a}");
                let _ = writeln!(out, "oracle: {b}");
                let _ = writeln!(out, "{s}");
            }
            (Some(p), None, _) | (None, Some(p), _) => {
                let _ = writeln!(out, "{p}");
            }
            _ => unreachable!("at least one method runs"),
        },
    }
    Ok(verdict.unwrap_or(true))
}

fn emit(out: &mut dyn Write, output: Output, text: &SignedPoly, json: impl FnOnce() -> serde_json::Value) {
    let _ = match output {
        Output::Text => writeln!(out, "{text}"),
        Output::Json => writeln!(out, "{}", json()),
    };
}

fn emit_reports(out: &mut dyn Write, output: Output, reports: &[ScanReport]) -> CmdResult {
    match output {
        Output::Text => {
            for r in reports {
                let _ = writeln!(out, "{}", r.summary());
                for f in r.failures.iter().take(5) {
                    let _ = writeln!(out, "  {}: expected {} got {}", f.case, f.expected, f.actual);
                }
                if !r.zero_without_predicate.is_empty() {
                    let _ = writeln!(out, "  zero sums without the predicate: {}", r.zero_without_predicate.len());
                }
                if !r.non_unimodal.is_empty() {
                    let list: Vec<String> = r.non_unimodal.iter().map(usize::to_string).collect();
                    let _ = writeln!(out, "  not unimodal at n = {}", list.join(", "));
                }
            }
        }
        Output::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(reports).expect("reports serialize"));
        }
    }
    Ok(reports.iter().all(ScanReport::passed))
}

fn require(flag: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{flag} is required for this transform")))
}

fn apply_transform(
    c: &ClassSpec,
    which: TransformName,
    i: Option<usize>,
    k: Option<usize>,
    lo: Option<usize>,
    hi: Option<usize>,
) -> Result<TransformResult, Failure> {
    let shift = |f: fn(&ClassSpec, usize, usize) -> crate::Result<TransformResult>| -> Result<TransformResult, Failure> {
        Ok(f(c, require("--i", i)?, require("--k", k)?)?)
    };
    match which {
        TransformName::ShiftRightAscent => shift(transforms::shift_right_ascent),
        TransformName::ShiftLeftAscent => shift(transforms::shift_left_ascent),
        TransformName::ShiftRightDescent => shift(transforms::shift_right_descent),
        TransformName::ShiftLeftDescent => shift(transforms::shift_left_descent),
        TransformName::MixedShift => shift(transforms::conjectured_mixed_shift),
        TransformName::ReverseDescentComponent => {
            let comp = Interval::new(require("--lo", lo)?, require("--hi", hi)?)?;
            Ok(transforms::reverse_descent_component(c, comp)?)
        }
        TransformName::Complement => Ok(transforms::complement(c)),
    }
}

#[derive(Serialize)]
struct TransformCheck {
    population: &'static str,
    new_population: &'static str,
    old: SignedPoly,
    predicted: SignedPoly,
    verdict: &'static str,
}

fn transform_report(
    c: &ClassSpec,
    r: &TransformResult,
    pop: Population,
    check: bool,
    common: &Common,
    out: &mut dyn Write,
) -> CmdResult {
    let checked = if check {
        let new_pop = r.corresponding_population(pop).ok_or_else(|| {
            Failure::Usage(format!("--population {}: this relation is only claimed over sn", pop.flag()))
        })?;
        let table = build_bucket_table_with_cap(c.n(), common.cap)?;
        let old = table.signed_poly(c, pop)?;
        let predicted = r.predict_old(&table.signed_poly(&r.new_spec, new_pop)?);
        let verdict = if old == predicted { "MATCH" } else { "MISMATCH" };
        Some(TransformCheck { population: pop.flag(), new_population: new_pop.flag(), old, predicted, verdict })
    } else {
        None
    };
    match common.output {
        Output::Json => {
            let mut v = json!({ "spec": c, "result": r });
            if let Some(ch) = &checked {
                v["check"] = json!(ch);
            }
            let _ = writeln!(out, "{v}");
        }
        Output::Text => {
            let _ = writeln!(out, "new class: {}", r.new_spec);
            let rhs = if r.reciprocal { "new(1/x)" } else { "new" };
            let _ = writeln!(out, "relation: old = ({}) * {rhs}", r.factor);
            let map = match r.population_map {
                PopulationMap::FullSnOnly => "sn only",
                PopulationMap::Preserved => "each population preserved",
                PopulationMap::SwapChessboard => "cn+ and cn- swapped",
            };
            let _ = writeln!(out, "populations: {map}");
            if let Some(mid) = &r.intermediate {
                let _ = writeln!(out, "intermediate: {mid}");
            }
            if r.conjectural {
                let _ = writeln!(out, "status: conjectural");
            }
            if let Some(ch) = &checked {
                let _ = writeln!(out, "old ({}): {}", ch.population, ch.old);
                let _ = writeln!(out, "predicted from new ({}): {}", ch.new_population, ch.predicted);
                let _ = writeln!(out, "{}", ch.verdict);
            }
        }
    }
    Ok(checked.is_none_or(|ch| ch.verdict == "MATCH"))
}
