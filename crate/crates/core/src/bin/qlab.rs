use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qlab::finite::{
    measured_stabilization, stabilization_order, Family, LimitFamily, Rk1Reading, Variant,
};
use qlab::labcli::{self, Filter, Recipe, EXIT_OK, EXIT_USAGE};
use qlab::oracle::{count_gap_partitions, list_gap_partitions, GapConditionSpec};
use qlab::report::VerificationReport;
use qlab::ring::{CoefficientJson, DynSeries};
use qlab::sums::{reduce_to_basis, SumSpec};

/// println! that exits quietly once the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(name = "qlab", version, about = "Exact q-series identity lab")]
struct Cli {
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the coefficients of a named series.
    Expand {
        /// S(a,b), KR1..KR5, F0, G2*, RK1:0, RK4:2 or bracket:c1,c2,c3,c4
        #[arg(long)]
        series: String,
        #[arg(long)]
        order: i64,
        #[arg(long)]
        json: bool,
    },
    /// Check one catalog identity.
    Verify {
        #[arg(long)]
        id: String,
        #[arg(long)]
        order: Option<i64>,
        #[arg(long)]
        json: bool,
        /// Report elapsed_ms as 0.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check the whole catalog.
    VerifyAll {
        #[arg(long, default_value = "all")]
        filter: Filter,
        #[arg(long)]
        order: i64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
    },
    /// List catalog ids.
    List,
    /// Reflect a finite version and report how far it has stabilized.
    Reflect {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        residue: u8,
        #[arg(long = "M")]
        m: i64,
        #[arg(long)]
        order: i64,
    },
    /// Express S(a,b) over the 3x3 box S(0..2, 0..2).
    Reduce {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, default_value_t = 10000)]
        budget: usize,
        #[arg(long)]
        order: i64,
    },
    /// Count partitions obeying a variant's gap conditions.
    Partitions {
        #[arg(long, allow_hyphen_values = true)]
        variant: Variant,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        max_part: Option<i64>,
        #[arg(long)]
        list: bool,
    },
}

fn parse_series(s: &str) -> Result<Recipe, String> {
    let t = s.trim();
    if let Some(rest) = t.strip_prefix("bracket:") {
        let c: Vec<i64> = rest
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("bad bracket `{rest}`: {e}"))?;
        let c: [i64; 4] = c
            .try_into()
            .map_err(|_| format!("a bracket has four entries, got `{rest}`"))?;
        return Ok(Recipe::Brackets(vec![(1, 0, c)]));
    }
    if let Some(inner) = t.strip_prefix("S(").and_then(|x| x.strip_suffix(')')) {
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| format!("expected S(a,b), got `{t}`"))?;
        let a = a.trim().parse().map_err(|e| format!("bad a in `{t}`: {e}"))?;
        let b = b.trim().parse().map_err(|e| format!("bad b in `{t}`: {e}"))?;
        return Ok(Recipe::S(a, b));
    }
    let upper = t.to_ascii_uppercase();
    if let Some(i) = upper.strip_prefix("KR") {
        let i: usize = i.parse().map_err(|e| format!("bad KR index in `{t}`: {e}"))?;
        if !(1..=5).contains(&i) {
            return Err(format!("KR index must be 1..=5, got {i}"));
        }
        return Ok(Recipe::Kr(i));
    }
    for (prefix, fam) in [("RK1:", Family::Rk1), ("RK4:", Family::Rk4)] {
        if let Some(r) = upper.strip_prefix(prefix) {
            let r: u8 = r.parse().map_err(|e| format!("bad residue in `{t}`: {e}"))?;
            let lf = LimitFamily::new(fam, r).map_err(|e| e.to_string())?;
            return Ok(if fam == Family::Rk4 {
                Recipe::Reflected { fam: lf, m: None }
            } else {
                Recipe::Limit(lf, Rk1Reading::Corrected)
            });
        }
    }
    let (body, star) = match t.strip_suffix('*') {
        Some(b) => (b, true),
        None => (t, false),
    };
    let mut chars = body.chars();
    let fam = match (chars.next(), star) {
        (Some('F'), false) => Family::F,
        (Some('G'), false) => Family::G,
        (Some('F'), true) => Family::FStar,
        (Some('G'), true) => Family::GStar,
        _ => return Err(format!("unknown series `{t}`")),
    };
    let r: u8 = chars
        .as_str()
        .parse()
        .map_err(|e| format!("bad residue in `{t}`: {e}"))?;
    let lf = LimitFamily::new(fam, r).map_err(|e| e.to_string())?;
    Ok(Recipe::Limit(lf, Rk1Reading::Corrected))
}

fn print_reports(reports: &[VerificationReport], json: bool) {
    if json {
        out!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
        return;
    }
    for r in reports {
        print_report(r);
    }
}

fn print_report(r: &VerificationReport) {
    let verdict = if r.full_agreement() { "ok" } else { "MISMATCH" };
    let mut line = format!(
        "{:<24} {verdict:<8} agreement {}/{}",
        r.id, r.agreement_order, r.requested_order
    );
    if let Some(m) = &r.first_mismatch {
        line += &format!(
            "  first mismatch q^{}: {} vs {}",
            m.exponent,
            json_coeff(&m.lhs),
            json_coeff(&m.rhs)
        );
    }
    if let Some(reading) = &r.reading {
        line += &format!("  [{reading} reading]");
    }
    line += &format!("  {} ms", r.elapsed_ms);
    out!("{line}");
}

fn json_coeff(c: &CoefficientJson) -> String {
    serde_json::to_string(c).expect("serializable")
}

fn run(cli: Cli) -> Result<i32, qlab::Error> {
    qlab::par::set_sequential(cli.sequential);
    match cli.cmd {
        Cmd::Expand {
            series,
            order,
            json,
        } => {
            let recipe = parse_series(&series).map_err(qlab::Error::InvalidArgument)?;
            let s = recipe.eval(order)?.truncate(order);
            let top = s.order().unwrap_or(order).min(order);
            let lo = match &s {
                DynSeries::Int(x) => x.min_exp().min(0),
                DynSeries::Eis(x) => x.min_exp().min(0),
            };
            if json {
                let coeffs: Vec<CoefficientJson> = (lo..=top).map(|e| (&s.coeff(e)).into()).collect();
                out!("{}", serde_json::to_string(&coeffs).expect("serializable"));
            } else {
                for e in lo..=top {
                    out!("{e} {}", s.coeff(e));
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Verify {
            id,
            order,
            json,
            no_timing,
        } => {
            let entry = labcli::lookup(&id)?;
            let mut r = labcli::verify_entry(&entry, order.unwrap_or(entry.default_order))?;
            if no_timing {
                r.elapsed_ms = 0;
            }
            if json {
                out!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
            } else {
                print_report(&r);
            }
            Ok(match (r.full_agreement(), entry.status) {
                (true, _) => EXIT_OK,
                (false, labcli::Status::Proved) => labcli::EXIT_PROVED_MISMATCH,
                (false, labcli::Status::Conjectural) => labcli::EXIT_CONJECTURE_MISMATCH,
            })
        }
        Cmd::VerifyAll {
            filter,
            order,
            json,
            no_timing,
        } => {
            let out = labcli::run_all(order, filter);
            let mut reports: Vec<VerificationReport> = out.reports().into_iter().cloned().collect();
            if no_timing {
                reports.iter_mut().for_each(|r| r.elapsed_ms = 0);
            }
            print_reports(&reports, json);
            for item in &out.items {
                if let Err(e) = &item.outcome {
                    eprintln!("{}: {e}", item.id);
                }
            }
            Ok(out.exit_code)
        }
        Cmd::List => {
            for e in labcli::catalog() {
                out!("{:<24} {:<12} {:<11} {}", e.id, e.status.name(), e.ring.name(), e.description);
            }
            Ok(EXIT_OK)
        }
        Cmd::Reflect {
            family,
            residue,
            m,
            order,
        } => {
            let fam = LimitFamily::new(family, residue)?;
            let poly = fam.reflect(m, Some(order))?;
            let stable = measured_stabilization(fam, m, order)?;
            for e in 0..stable.min(order + 1) {
                out!("{e} {}", poly.coeff(e));
            }
            out!("stabilization order (M vs M+1): {stable}");
            out!(
                "agreement with reference limit: {}",
                stabilization_order(fam, m, order)?
            );
            Ok(EXIT_OK)
        }
        Cmd::Reduce {
            a,
            b,
            budget,
            order,
        } => {
            let c = reduce_to_basis(SumSpec::new(a, b), budget, order)?;
            out!("S({a},{b}) after {} steps:", c.steps);
            for (k, coeff) in &c.terms {
                out!("  {k}: {coeff}");
            }
            out!("certificate: agrees through q^{}", c.certified_order);
            Ok(EXIT_OK)
        }
        Cmd::Partitions {
            variant,
            n,
            max_part,
            list,
        } => {
            let spec = GapConditionSpec::for_variant(variant, max_part);
            out!("{}", count_gap_partitions(&spec, n)?);
            if list {
                for p in list_gap_partitions(&spec, n)? {
                    let parts: Vec<String> = p.iter().map(i64::to_string).collect();
                    out!("{}", parts.join(" + "));
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(
                e,
                qlab::Error::UnknownId(_) | qlab::Error::InvalidArgument(_) | qlab::Error::UnknownVariant(_)
            );
            ExitCode::from(if usage { EXIT_USAGE as u8 } else { 1 })
        }
    }
}
