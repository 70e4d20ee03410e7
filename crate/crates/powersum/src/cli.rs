//! Argument parsing and subcommand dispatch.

use std::collections::BTreeSet;

use clap::{Args, Parser, Subcommand};
use powersum_core::elliptic::{
    deg8_base, deg9_base, deg9_bridge, generate_parameters, Bridge, Deg8Bridge, QuarticPoint,
};
use powersum_core::families::{
    deg2_family, deg3_shift_family, deg3_symmetric_family, deg4_family, deg5_66_family, deg5_half_identity,
    deg6_family, deg7_conditions, deg7_family, deg8_family, deg8_solve_ab, deg9_family, ratio_to_ab,
    Deg5Base, DEG3_SHIFT_BASE, DEG5_BASE_1, DEG5_BASE_2,
};
use powersum_core::oracle::{SearchSpec, DEFAULT_CEILING};
use powersum_core::{Error, PowerSumPair, Rational};

use crate::audit;
use crate::pool::{default_workers, parallel_search};
use crate::report::{Record, RunReport};

#[derive(Debug, Parser)]
#[command(name = "powersum", version, about = "Equal sums of like powers: verify, generate, extend, search, audit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a pair at the given degrees by exact summation.
    Verify {
        #[arg(long, value_parser = parse_degrees)]
        degrees: Degrees,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        lhs: List,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list)]
        rhs: List,
    },
    /// Instantiate one of the parametric families.
    #[command(subcommand)]
    Gen(Gen),
    /// Walk the elliptic curve behind the degree-8 or degree-9 family.
    Extend {
        #[arg(long, value_parser = clap::value_parser!(u32).range(8..=9))]
        degree: u32,
        #[arg(long, default_value_t = 3)]
        steps: usize,
    },
    /// Exhaustive bounded search for pairs with equal power sums.
    Search(SearchArgs),
    /// Reproduce the per-degree table; `--audit` adds the worked examples and errata.
    TableA {
        #[arg(long)]
        audit: bool,
    },
}

#[derive(Debug, Subcommand)]
enum Gen {
    Deg2 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
    },
    /// Defaults to the built-in cubic base.
    Deg3Shift {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list, requires = "rhs")]
        lhs: Option<Ints>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list, requires = "lhs")]
        rhs: Option<Ints>,
    },
    Deg3Sym {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_int_list)]
        coeffs: Ints,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        x: Rational,
    },
    Deg4 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        k: Rational,
    },
    /// The six-versus-six family, or with `--base` one half identity.
    Deg5 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        m: Rational,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        base: Option<u8>,
    },
    Deg6 {
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, allow_hyphen_values = true)]
        b2: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Either one `(a, b)`, or every `1 ≤ a, b ≤ height` that is representable.
    Deg7 {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "height", requires = "b")]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<i64>,
        #[arg(long, conflicts_with_all = ["a", "b"])]
        height: Option<i64>,
    },
    /// Without `--a/--b` the rational roots of the condition are used.
    Deg8 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        x: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "b")]
        a: Option<Rational>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "a")]
        b: Option<Rational>,
    },
    Deg9 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        t: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        w: Option<Rational>,
    },
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, value_parser = parse_degrees)]
    degrees: Degrees,
    #[arg(long)]
    height: u32,
    /// Defaults to `POWERSUM_WORKERS`, else 1.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    side_len: Option<usize>,
    /// Allow negative entries (default when any degree is odd).
    #[arg(long, conflicts_with = "unsigned")]
    signed: bool,
    #[arg(long)]
    unsigned: bool,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u128,
}

type Degrees = BTreeSet<u32>;
// Aliases keep clap from treating these as repeated single-value options.
type List = Vec<Rational>;
type Ints = Vec<i64>;

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',').map(parse_rational).collect()
}

fn parse_int_list(s: &str) -> Result<Ints, String> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("`{x}`: {e}"))).collect()
}

fn parse_degrees(s: &str) -> Result<Degrees, String> {
    let ks = s
        .split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("`{x}`: {e}")))
        .collect::<Result<Degrees, _>>()?;
    if ks.is_empty() || ks.contains(&0) {
        return Err("degrees must be positive".into());
    }
    Ok(ks)
}

/// Errors that describe a malformed request rather than a mathematical
/// failure of valid input.
fn is_usage(e: &Error) -> bool {
    matches!(e, Error::InvalidInput(_) | Error::ParseRational(_) | Error::WorkCeiling { .. } | Error::KeyOverflow)
}

/// Parses `args` (without the program name) and runs the subcommand.
pub fn run<S: AsRef<str>>(args: &[S]) -> RunReport {
    let command = args.iter().map(|a| a.as_ref()).collect::<Vec<_>>().join(" ");
    let argv = std::iter::once("powersum").chain(args.iter().map(|a| a.as_ref()));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let mut r = RunReport::usage_error(command, e.render().to_string());
            if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                r.help = r.diagnostics.pop();
                r.exit_code = if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 };
            }
            return r;
        }
    };
    let mut report = RunReport::new(command);
    if let Err(e) = dispatch(cli.command, &mut report) {
        report.exit_code = if is_usage(&e) { 2 } else { 1 };
        report.diagnostics.push(e.to_string());
    }
    report.finish()
}

fn dispatch(cmd: Command, out: &mut RunReport) -> Result<(), Error> {
    match cmd {
        Command::Verify { degrees, lhs, rhs } => {
            let p = PowerSumPair::new(lhs, rhs, degrees, "verify")?;
            out.records.push(Record::new(&p, "verify"));
        }
        Command::Gen(g) => generate(g, out)?,
        Command::Extend { degree, steps } => extend(degree, steps, out)?,
        Command::Search(s) => {
            let mut spec = SearchSpec::new(s.degrees, s.height)?.with_ceiling(s.ceiling);
            if let Some(n) = s.side_len {
                spec = spec.with_side_len(n)?;
            }
            if s.signed || s.unsigned {
                spec = spec.with_signed(s.signed);
            }
            let workers = s.workers.unwrap_or_else(default_workers);
            for p in parallel_search(&spec, workers)? {
                out.records.push(Record::new(&p, format!("search height={}", spec.height)));
            }
        }
        Command::TableA { audit: full } => {
            out.records.extend(audit::table_records());
            if full {
                out.records.extend(audit::example_records());
                out.errata.extend(audit::errata());
            } else {
                out.errata.extend(audit::table_notes());
            }
        }
    }
    Ok(())
}

fn generate(g: Gen, out: &mut RunReport) -> Result<(), Error> {
    let mut push = |p: PowerSumPair| out.records.push(Record::new(&p, p.source.clone()));
    match g {
        Gen::Deg2 { k } => push(deg2_family(&k)),
        Gen::Deg3Shift { lhs, rhs } => {
            let (a, p) = match (lhs, rhs) {
                (Some(a), Some(p)) => (a, p),
                _ => (DEG3_SHIFT_BASE.0.to_vec(), DEG3_SHIFT_BASE.1.to_vec()),
            };
            let s = deg3_shift_family(&a, &p)?;
            if s.degenerate {
                out.diagnostics.push("base fixes no shift; the pair is trivial".into());
            }
            out.records.push(Record::new(&s.pair, s.pair.source.clone()));
        }
        Gen::Deg3Sym { coeffs, x } => {
            let c: [i64; 6] = coeffs
                .try_into()
                .map_err(|v: Vec<i64>| Error::InvalidInput(format!("--coeffs needs 6 values, got {}", v.len())))?;
            push(deg3_symmetric_family(c, &x)?)
        }
        Gen::Deg4 { k } => push(deg4_family(&k)),
        Gen::Deg5 { m, base } => match base {
            None => push(deg5_66_family(&m)),
            Some(i) => {
                let b: Deg5Base = if i == 1 { DEG5_BASE_1 } else { DEG5_BASE_2 };
                let (u, v, w) = b.uvw();
                let p = deg5_half_identity(&b, &m)?;
                let src = format!("{} (U,V,W)=({u},{v},{w})", p.source);
                out.records.push(Record::new(&p, src));
            }
        },
        Gen::Deg6 { a1, b2, k } => push(deg6_family(a1, b2, k)?),
        Gen::Deg7 { p, q, a, b, height } => match (a, b, height) {
            (Some(a), Some(b), _) => push(deg7_family(p, q, a, b)?),
            (_, _, Some(h)) => {
                for a in 1..=h {
                    for b in 1..=h {
                        if deg7_conditions(p, q, a, b).is_ok() {
                            let pair = deg7_family(p, q, a, b)?;
                            if !pair.is_trivial() {
                                push(pair);
                            }
                        }
                    }
                }
            }
            _ => return Err(Error::InvalidInput("deg7 needs --a and --b, or --height".into())),
        },
        Gen::Deg8 { x, a, b } => match (a, b) {
            (Some(a), Some(b)) => push(deg8_family(&x, &a, &b)?),
            _ => deg8_from_x(&x, "gen deg8", out)?,
        },
        Gen::Deg9 { a, b, t, w } => {
            let s = deg9_family(&a, &b, &t, w.as_ref())?;
            let src = format!("{} m={} n={} w={}", s.vectors.source, s.params.m, s.params.n, s.params.w);
            out.records.push(Record::new(&s.vectors, src));
        }
    }
    Ok(())
}

/// One record per rational root `a/b` of the degree-8 condition at `x` that
/// gives a nontrivial pair.
fn deg8_from_x(x: &Rational, label: &str, out: &mut RunReport) -> Result<(), Error> {
    let before = out.records.len();
    for r in deg8_solve_ab(x)? {
        if r.is_zero() {
            continue;
        }
        let (a, b) = ratio_to_ab(&r);
        let (a, b) = (Rational::from_int(a), Rational::from_int(b));
        match deg8_family(x, &a, &b) {
            Ok(p) if !p.is_trivial() => {
                let src = format!("{label} {}", p.source);
                out.records.push(Record::new(&p, src));
            }
            Ok(_) => out.diagnostics.push(format!("x={x} a={a} b={b}: trivial pair")),
            Err(e) => out.diagnostics.push(format!("x={x} a={a} b={b}: {e}")),
        }
    }
    if out.records.len() == before {
        return Err(Error::InvalidInput(format!("x={x}: no root gives a nontrivial pair")));
    }
    Ok(())
}

fn extend(degree: u32, steps: usize, out: &mut RunReport) -> Result<(), Error> {
    let label = |i: usize, p: &QuarticPoint| format!("extend deg{degree} step={} t={}", i + 1, p.u);
    if degree == 8 {
        let bridge = Deg8Bridge::default();
        for (i, p) in generate_parameters(&bridge, &deg8_base(), steps)?.iter().enumerate() {
            debug_assert!(bridge.model().on_model(p));
            deg8_from_x(&p.u, &label(i, p), out)?;
        }
    } else {
        let bridge = deg9_bridge()?;
        let (a, b) = (Rational::from(3), Rational::from(4));
        for (i, p) in generate_parameters(&bridge, &deg9_base(), steps)?.iter().enumerate() {
            let s = deg9_family(&a, &b, &p.u, None)?;
            out.records.push(Record::new(&s.vectors, label(i, p)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("1,-2, 3/4").unwrap(), vec![1.into(), (-2).into(), Rational::frac(3, 4)]);
        assert!(parse_list("1,,2").is_err());
        assert!(parse_degrees("1,0").is_err());
        assert_eq!(parse_degrees("3,1,3").unwrap(), [1, 3].into());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&["verify", "--degrees", "2"]).exit_code, 2);
        assert_eq!(run(&["frobnicate"]).exit_code, 2);
        assert_eq!(run(&["gen", "deg3-sym", "--coeffs", "1,2", "--x", "1"]).exit_code, 2);
        let h = run(&["--help"]);
        assert_eq!(h.exit_code, 0);
        assert!(h.help.unwrap().contains("table-a"));
    }
}
