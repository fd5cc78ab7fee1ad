//! Command-line front end: exact computation and verification for
//! generalized parking functions.
//!
//! Output is JSON on stdout, deterministic byte-for-byte for identical
//! arguments. Rationals serialize as `"num"` or `"num/den"` strings and
//! partitions as dot-joined part strings, so every value survives the trip
//! exactly. Exit status: 0 on success or a verified identity, 1 on a
//! verification failure, 2 on a usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use parkfun::closed_forms::{frobenius_expansion, mixed_scalar_product_formula};
use parkfun::dual::{count_orbit_matches, enumerate_dual_set, shift_orbit};
use parkfun::error::Error;
use parkfun::fbasis::{express_in_parking_basis, transition_to_h};
use parkfun::input::{
    parse_partition, parse_pref_seq, parse_symfn, pref_seq_to_json, qsymfn_to_json, series_to_json,
    symfn_to_json,
};
use parkfun::parking::{count_parking_functions, enumerate_wipf, parking_frobenius_q, PrefSeq};
use parkfun::partition::Partition;
use parkfun::rational::{format_rat, Rat};
use parkfun::series::{lagrange_inverse_check, parking_series};
use parkfun::symfun::{Basis, SymFn};
use parkfun::verify::{run_all, run_suite, SUITE_NAMES};
use parkfun::{bijection, Result};

#[derive(Parser)]
#[command(
    name = "parkfun",
    version,
    about = "Exact computation and machine verification for generalized parking functions",
    after_help = "Sequences are comma-joined (`1,2,2,10`, `-` for empty), partitions are \
                  dot-joined (`2.1`), rationals are `num` or `num/den`. All output is JSON."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of (r,k)-parking functions of length n
    Count { n: u32, r: u32, k: u32 },
    /// List the weakly increasing representatives of a family
    Enumerate {
        /// `wipf` for parking functions, `dual` for the dual set
        family: String,
        n: u32,
        r: u32,
        k: u32,
    },
    /// Frobenius characteristic of length-n parking functions in a basis;
    /// negative k selects the dual-side coefficients
    Frobenius {
        n: u32,
        r: u32,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// target basis: m, e, h, p, or s
        #[arg(long, default_value = "h")]
        basis: String,
    },
    /// q-refined Frobenius characteristic, graded by the sum statistic
    Qfrobenius { n: u32, r: u32, k: u32 },
    /// Integer power of the base (k = 1) generating series
    SeriesPow {
        r: u32,
        #[arg(allow_negative_numbers = true)]
        k_exponent: i64,
        /// truncation degree
        #[arg(long, env = "PARKFUN_DEFAULT_DEGREE", default_value_t = 8)]
        deg: usize,
    },
    /// Formal logarithm of the k = r generating series
    SeriesLog {
        r: u32,
        #[arg(long, env = "PARKFUN_DEFAULT_DEGREE", default_value_t = 8)]
        deg: usize,
    },
    /// Check the compositional-inverse identity through a degree
    LagrangeCheck {
        r: u32,
        #[arg(long, env = "PARKFUN_DEFAULT_DEGREE", default_value_t = 8)]
        deg: usize,
    },
    /// Merge a tuple of weakly increasing (r,1)-parking functions
    Psi {
        #[arg(long)]
        r: u32,
        /// components, comma-joined entries, `-` for the empty component
        components: Vec<String>,
    },
    /// Split a weakly increasing (r,k)-parking function into its k-tuple
    PsiInv {
        sequence: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        k: u32,
    },
    /// Per-orbit rotation table: period and matching dual-set count
    DualCount { n: u32, r: u32, k: u32 },
    /// Parking-function basis operations
    Basis {
        #[command(subcommand)]
        action: BasisCommand,
    },
    /// Scalar product of a parking Frobenius characteristic against a
    /// product of per-part ones: exact value from both routes
    Scalar {
        n: u32,
        r: u32,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// partition of n, dot-joined
        #[arg(long)]
        lambda: String,
        /// per-part r parameters, comma-joined
        #[arg(long)]
        rs: String,
        /// per-part k parameters, comma-joined (negatives allowed)
        #[arg(long)]
        ks: String,
    },
    /// Run a verification suite (or `all`)
    Verify { suite: String },
}

#[derive(Subcommand)]
enum BasisCommand {
    /// Transition matrix from the parking-function basis to h in one degree
    Transition {
        n: u32,
        r: u32,
        /// `json` or `csv`
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Express a symmetric function on the parking-function basis
    Express {
        r: u32,
        /// JSON symmetric function, e.g. '{"h": {"2.1": "1"}}'
        #[arg(long)]
        input: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn require(condition: bool, message: &str) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::BadParameter(message.into()))
    }
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer {piece:?}")))
        })
        .collect()
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid integer {piece:?}")))
        })
        .collect()
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Count { n, r, k } => {
            require(n >= 1, "count requires n >= 1")?;
            require(r >= 1 && k >= 1, "count requires r >= 1 and k >= 1")?;
            println!("{}", count_parking_functions(n, r, k));
        }
        Command::Enumerate { family, n, r, k } => {
            require(r >= 1 && k >= 1, "enumeration requires r >= 1 and k >= 1")?;
            let rows: Vec<PrefSeq> = match family.as_str() {
                "wipf" => enumerate_wipf(n, r, k),
                "dual" => enumerate_dual_set(n, r, k)?,
                other => {
                    return Err(Error::BadParameter(format!(
                        "unknown family {other:?}, expected wipf or dual"
                    )))
                }
            };
            emit(&Value::Array(rows.iter().map(pref_seq_to_json).collect()));
        }
        Command::Frobenius { n, r, k, basis } => {
            require(r >= 1, "frobenius requires r >= 1")?;
            let basis: Basis = basis.parse()?;
            let f = frobenius_expansion(n, r, k, basis)?;
            emit(&symfn_to_json(&f));
        }
        Command::Qfrobenius { n, r, k } => {
            require(r >= 1 && k >= 1, "qfrobenius requires r >= 1 and k >= 1")?;
            emit(&qsymfn_to_json(&parking_frobenius_q(n, r, k)));
        }
        Command::SeriesPow { r, k_exponent, deg } => {
            require(r >= 1, "series-pow requires r >= 1")?;
            let series = parking_series(r, 1, deg).pow(k_exponent, deg)?;
            emit(&series_to_json(&series));
        }
        Command::SeriesLog { r, deg } => {
            require(r >= 1, "series-log requires r >= 1")?;
            let series = parking_series(r, r, deg).log(deg)?;
            emit(&series_to_json(&series));
        }
        Command::LagrangeCheck { r, deg } => {
            require(r >= 1, "lagrange-check requires r >= 1")?;
            let ok = lagrange_inverse_check(r, deg)?;
            emit(&json!({
                "identity": "compositional-inverse",
                "r": r,
                "degree": deg,
                "ok": ok,
            }));
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Psi { r, components } => {
            require(r >= 1, "psi requires r >= 1")?;
            require(!components.is_empty(), "psi needs at least one component")?;
            let parsed: Vec<PrefSeq> = components
                .iter()
                .map(|c| parse_pref_seq(c))
                .collect::<Result<_>>()?;
            let tuple = bijection::WipfTuple::new(r, parsed)?;
            emit(&pref_seq_to_json(&bijection::psi(&tuple)));
        }
        Command::PsiInv { sequence, r, k } => {
            require(r >= 1 && k >= 1, "psi-inv requires r >= 1 and k >= 1")?;
            let beta = parse_pref_seq(&sequence)?;
            let tuple = bijection::psi_inv(&beta, r, k)?;
            emit(&Value::Array(
                tuple.components().iter().map(pref_seq_to_json).collect(),
            ));
        }
        Command::DualCount { n, r, k } => {
            require(r >= 1 && k >= 1, "dual-count requires r >= 1 and k >= 1")?;
            let side = r as i64 * n as i64 - k as i64;
            require(n >= 1 && side > 0, "dual-count requires rn-k > 0")?;
            emit(&dual_count_table(n, r, k, side)?);
        }
        Command::Basis { action } => match action {
            BasisCommand::Transition { n, r, format } => {
                require(r >= 1, "transition requires r >= 1")?;
                let matrix = transition_to_h(n, r)?;
                match format.as_str() {
                    "json" => emit(&transition_json(&matrix)),
                    "csv" => print!("{}", transition_csv(&matrix)),
                    other => {
                        return Err(Error::BadParameter(format!(
                            "unknown format {other:?}, expected json or csv"
                        )))
                    }
                }
            }
            BasisCommand::Express { r, input } => {
                require(r >= 1, "express requires r >= 1")?;
                let f = parse_symfn(&input)?;
                let coeffs = express_in_parking_basis(&f, r)?;
                let mut map = Map::new();
                for (lambda, c) in &coeffs {
                    map.insert(lambda.to_string(), Value::String(format_rat(c)));
                }
                emit(&json!({ "r": r, "coefficients": Value::Object(map) }));
            }
        },
        Command::Scalar {
            n,
            r,
            k,
            lambda,
            rs,
            ks,
        } => {
            require(r >= 1, "scalar requires r >= 1")?;
            let lambda = parse_partition(&lambda)?;
            let rs = parse_u32_list(&rs)?;
            let ks = parse_i64_list(&ks)?;
            let rhs = mixed_scalar_product_formula(n, r, k, &lambda, &rs, &ks)?;
            let lhs = scalar_product_direct(n, r, k, &lambda, &rs, &ks)?;
            emit(&json!({
                "lhs": format_rat(&lhs),
                "rhs": format_rat(&rhs),
                "equal": lhs == rhs,
            }));
        }
        Command::Verify { suite } => return verify(&suite),
    }
    Ok(ExitCode::SUCCESS)
}

/// The scalar product computed through the power-sum basis, independently of
/// the closed formula.
fn scalar_product_direct(
    n: u32,
    r: u32,
    k: i64,
    lambda: &Partition,
    rs: &[u32],
    ks: &[i64],
) -> Result<Rat> {
    if rs.len() != lambda.len() || ks.len() != lambda.len() {
        return Err(Error::LengthMismatch {
            seq: lambda.len(),
            bound: rs.len().min(ks.len()),
        });
    }
    let left = frobenius_expansion(n, r, k, Basis::PowerSum)?;
    let mut product = SymFn::one(Basis::PowerSum);
    for ((&part, &ri), &ki) in lambda.parts().iter().zip(rs).zip(ks) {
        if ri == 0 {
            return Err(Error::BadParameter("per-part r values must be >= 1".into()));
        }
        let factor = frobenius_expansion(part, ri, ki, Basis::PowerSum)?;
        product = product.multiply(&factor)?;
    }
    left.hall_scalar(&product)
}

fn dual_count_table(n: u32, r: u32, k: u32, side: i64) -> Result<Value> {
    let mut rows = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut total = 0usize;
    let mut stack: Vec<Vec<u32>> = Vec::new();
    // weakly increasing vectors in [side]^n, lexicographic
    fn rec(n: usize, hi: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for v in lo..=hi {
            prefix.push(v);
            rec(n, hi, prefix, out);
            prefix.pop();
        }
    }
    rec(n as usize, side as u32, &mut Vec::new(), &mut stack);
    for v in stack {
        let a = PrefSeq::new(v)?;
        let orbit = shift_orbit(&a, side as u32)?;
        if !seen.insert(orbit.canonical_key().clone()) {
            continue;
        }
        let matches = count_orbit_matches(&a, n, r, k)?;
        total += matches;
        let expected = Rat::new((orbit.period() as i64 * k as i64).into(), side.into());
        rows.push(json!({
            "orbit": orbit.canonical_key().iter().map(|&e| Value::Number(e.into())).collect::<Vec<_>>(),
            "period": orbit.period(),
            "matches": matches,
            "expected": format_rat(&expected),
        }));
    }
    Ok(json!({
        "n": n,
        "r": r,
        "k": k,
        "modulus": side,
        "rows": rows,
        "total_matches": total,
    }))
}

fn transition_json(matrix: &parkfun::fbasis::TransitionMatrix) -> Value {
    let order: Vec<Value> = matrix
        .order()
        .iter()
        .map(|p| Value::String(p.to_string()))
        .collect();
    let mut rows = Map::new();
    for (col, lambda) in matrix.order().iter().enumerate() {
        let coeffs: Vec<Value> = matrix
            .column(col)
            .iter()
            .map(|c| Value::String(format_rat(c)))
            .collect();
        rows.insert(lambda.to_string(), Value::Array(coeffs));
    }
    json!({
        "n": matrix.degree(),
        "r": matrix.r(),
        "order": order,
        "rows": Value::Object(rows),
    })
}

fn transition_csv(matrix: &parkfun::fbasis::TransitionMatrix) -> String {
    let mut out = String::from("element");
    for p in matrix.order() {
        out.push(',');
        out.push_str(&format!("h[{p}]"));
    }
    out.push('\n');
    for (col, lambda) in matrix.order().iter().enumerate() {
        out.push_str(&lambda.to_string());
        for c in matrix.column(col) {
            out.push(',');
            out.push_str(&format_rat(&c));
        }
        out.push('\n');
    }
    out
}

fn verify(suite: &str) -> Result<ExitCode> {
    let reports = if suite == "all" {
        run_all()
    } else {
        match run_suite(suite) {
            Some(report) => vec![report],
            None => {
                return Err(Error::BadParameter(format!(
                    "unknown suite {suite:?}; available: all, {}",
                    SUITE_NAMES.join(", ")
                )))
            }
        }
    };
    let mut all_passed = true;
    for report in &reports {
        all_passed &= report.passed();
        emit(&json!({
            "suite": report.name,
            "checked": report.checked,
            "failures": report.failures,
            "ok": report.passed(),
        }));
    }
    if reports.len() > 1 {
        emit(&json!({
            "suites": reports.len(),
            "ok": all_passed,
        }));
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
