//! The `farey` command line.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 usage or domain error, 2 enumeration cap exceeded, 3 verification
//! failure.

pub mod bench;
pub mod verify;

use std::fmt;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use farey_core::{
    cf_expand, enumerate_capped, exceeds_cap, reduce_chain, triple_by_scan_capped,
    ContinuedFraction, FareyError, FareyIter, FareyOrder, Fraction, DEFAULT_CAP,
};
use serde::{Deserialize, Serialize};

use crate::verify::{Methods, VerifyFailure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "farey", version, about = "Exact Farey sequence triples and neighbors")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum number of terms any enumeration may produce.
    #[arg(long, global = true, env = "FAREY_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Chain,
    Cf,
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_N.
    List {
        order: u64,
        /// One term per line.
        #[arg(long)]
        lines: bool,
    },
    /// Print the three consecutive terms of F_N around n/N.
    Triple {
        n: u64,
        order: u64,
        #[arg(long, value_enum, default_value_t = Method::Chain)]
        method: Method,
    },
    /// Term after a fraction in F_N.
    Next { fraction: Fraction, order: u64 },
    /// Term before a fraction in F_N.
    Prev { fraction: Fraction, order: u64 },
    /// Canonical continued fraction.
    Cf { fraction: Fraction },
    /// Euclidean reduction chain of a center n/N.
    Chain { fraction: Fraction },
    /// Cross-check every fast path against enumeration for orders 2..=max_order.
    Verify {
        max_order: u64,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Time triple queries per order, e.g. `bench 10^3,10^6,10^12`.
    Bench {
        #[arg(value_parser = parse_order_list)]
        orders: OrderList,
        #[arg(long, default_value_t = 100)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone)]
pub struct OrderList(pub Vec<u64>);

/// Parses `10^3,1000000,10^12`.
pub fn parse_order_list(s: &str) -> Result<OrderList, String> {
    s.split(',')
        .map(|item| {
            let item = item.trim();
            match item.split_once('^') {
                Some((base, exp)) => {
                    let base: u64 = base.parse().map_err(|_| format!("bad base in {item:?}"))?;
                    let exp: u32 = exp.parse().map_err(|_| format!("bad exponent in {item:?}"))?;
                    base.checked_pow(exp).ok_or_else(|| format!("{item} overflows u64"))
                }
                None => item.parse().map_err(|_| format!("bad order {item:?}")),
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(OrderList)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CfOutput {
    pub fraction: Fraction,
    pub cf: ContinuedFraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOutput {
    pub start: Fraction,
    pub quotients: Vec<u64>,
    pub terminal: u64,
    pub k: u64,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(FareyError),
    Verify(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(FareyError::CapExceeded { .. }) => EXIT_CAP,
            CliError::Verify(_) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Verify(m) => f.write_str(m),
            CliError::Domain(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

impl From<FareyError> for CliError {
    fn from(e: FareyError) -> Self {
        CliError::Domain(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// `1,234,567`
pub fn group_thousands(n: u64) -> String {
    let digits = n.to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (i, ch) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let s = serde_json::to_string(value).expect("payloads serialize");
    writeln!(out, "{s}")?;
    Ok(())
}

fn order_arg(n: u64) -> Result<FareyOrder, CliError> {
    FareyOrder::new(n).map_err(|_| CliError::Usage("order must be at least 1".into()))
}

/// Runs one parsed command with the given implementations.
pub fn execute(cli: &Cli, methods: &Methods, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::List { order, lines } => {
            let order = order_arg(*order)?;
            if *lines && !cli.json {
                if exceeds_cap(order, cli.cap) {
                    return Err(FareyError::CapExceeded {
                        order: order.get(),
                        cap: cli.cap,
                    }
                    .into());
                }
                for term in FareyIter::new(order) {
                    writeln!(out, "{term}")?;
                }
                return Ok(());
            }
            let seq = enumerate_capped(order, cli.cap)?;
            if cli.json {
                print_json(out, &seq.terms)?;
            } else {
                let text: Vec<String> = seq.terms.iter().map(|f| f.to_string()).collect();
                writeln!(out, "{}", text.join(" "))?;
            }
        }
        Command::Triple { n, order, method } => {
            let order = order_arg(*order)?;
            let t = match method {
                Method::Chain => (methods.chain)(*n, order)?,
                Method::Cf => (methods.cf)(*n, order)?,
                Method::Oracle => triple_by_scan_capped(*n, order, cli.cap)?,
            };
            if cli.json {
                print_json(out, &t)?;
            } else {
                writeln!(out, "{t}")?;
            }
        }
        Command::Next { fraction, order } | Command::Prev { fraction, order } => {
            let order = order_arg(*order)?;
            let r = if matches!(cli.command, Command::Next { .. }) {
                (methods.right)(*fraction, order)?
            } else {
                (methods.left)(*fraction, order)?
            };
            if cli.json {
                print_json(out, &r)?;
            } else {
                writeln!(out, "{} (l={})", r.neighbor, r.steps)?;
            }
        }
        Command::Cf { fraction } => {
            let cf = cf_expand(*fraction);
            if cli.json {
                print_json(
                    out,
                    &CfOutput {
                        fraction: *fraction,
                        cf,
                    },
                )?;
            } else {
                writeln!(out, "{cf}")?;
            }
        }
        Command::Chain { fraction } => {
            let chain = reduce_chain(*fraction)?;
            let payload = ChainOutput {
                start: chain.start(),
                quotients: chain.quotients().to_vec(),
                terminal: chain.terminal(),
                k: chain.len() as u64,
            };
            if cli.json {
                print_json(out, &payload)?;
            } else {
                let rho: Vec<String> = payload.quotients.iter().map(|q| q.to_string()).collect();
                writeln!(
                    out,
                    "rho=[{}] terminal={} k={}",
                    rho.join(","),
                    payload.terminal,
                    payload.k
                )?;
            }
        }
        Command::Verify { max_order, jobs } => {
            if *max_order < 2 {
                return Err(CliError::Usage("verify needs max_order >= 2".into()));
            }
            let report = match verify::verify(*max_order, cli.cap, *jobs, methods) {
                Ok(r) => r,
                Err(VerifyFailure::Domain(e)) => return Err(e.into()),
                Err(failure) => return Err(CliError::Verify(failure.to_string())),
            };
            if cli.json {
                print_json(out, &report)?;
            } else {
                writeln!(
                    out,
                    "OK: {} orders, {} triples, {} neighbor queries, {} mismatches",
                    group_thousands(report.orders),
                    group_thousands(report.triples),
                    group_thousands(report.neighbor_queries),
                    report.mismatches
                )?;
            }
        }
        Command::Bench { orders, reps, seed } => {
            if orders.0.iter().any(|&n| n < 2) {
                return Err(CliError::Usage("bench orders must be at least 2".into()));
            }
            let rows = bench::run(&orders.0, *reps, cli.cap, *seed)?;
            if cli.json {
                print_json(out, &rows)?;
            } else {
                write!(out, "{}", bench::render_table(&rows))?;
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs, returning the exit code.
pub fn run<I, T>(args: I, methods: &Methods, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli, methods, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Convenience for the default implementations.
pub fn run_default<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run(args, &Methods::default(), out, err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use farey_core::{triple, FareyTriple, NeighborResult};

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["farey"];
        full.extend_from_slice(args);
        let code = run_default(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn order_list_parsing() {
        assert_eq!(parse_order_list("10^3,10^6,10^12").unwrap().0, vec![1_000, 1_000_000, 1_000_000_000_000]);
        assert_eq!(parse_order_list("5").unwrap().0, vec![5]);
        assert!(parse_order_list("10^30").is_err());
        assert!(parse_order_list("x").is_err());
    }

    #[test]
    fn thousands() {
        assert_eq!(group_thousands(0), "0");
        assert_eq!(group_thousands(999), "999");
        assert_eq!(group_thousands(4385), "4,385");
        assert_eq!(group_thousands(1234567), "1,234,567");
    }

    #[test]
    fn text_outputs() {
        assert_eq!(run_capture(&["list", "1"]).1, "0/1 1/1\n");
        assert_eq!(run_capture(&["list", "3", "--lines"]).1, "0/1\n1/3\n1/2\n2/3\n1/1\n");
        assert_eq!(run_capture(&["triple", "5", "39"]).1, "1/8 5/39 4/31\n");
        assert_eq!(run_capture(&["triple", "9", "25", "--method", "cf"]).1, "5/14 9/25 4/11\n");
        assert_eq!(run_capture(&["triple", "9", "25", "--method", "oracle"]).1, "5/14 9/25 4/11\n");
        assert_eq!(run_capture(&["next", "9/25", "100"]).1, "31/86 (l=3)\n");
        assert_eq!(run_capture(&["prev", "9/25", "25"]).1, "5/14 (l=0)\n");
        assert_eq!(run_capture(&["cf", "9/25"]).1, "[0,2,1,3,2]\n");
        assert_eq!(run_capture(&["cf", "0/1"]).1, "[0]\n");
        assert_eq!(run_capture(&["chain", "5/39"]).1, "rho=[7,1] terminal=4 k=2\n");
        assert_eq!(run_capture(&["chain", "1/7"]).1, "rho=[] terminal=7 k=0\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["list", "0"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["list"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["bogus"]).0, EXIT_USAGE);
        let (code, _, err) = run_capture(&["triple", "2", "4"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("2/4 not irreducible"), "{err}");
        assert_eq!(run_capture(&["next", "1/1", "10"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["prev", "0/1", "10"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["next", "9/25", "20"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["cf", "3/2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["chain", "0/1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["list", "100", "--cap", "50"]).0, EXIT_CAP);
        assert_eq!(run_capture(&["list", "100", "--lines", "--cap", "50"]).0, EXIT_CAP);
        assert_eq!(run_capture(&["triple", "99", "100", "--method", "oracle", "--cap", "50"]).0, EXIT_CAP);
        assert_eq!(run_capture(&["verify", "1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["bench", "1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn verify_reports_counts() {
        let (code, out, _) = run_capture(&["verify", "2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out, "OK: 1 orders, 1 triples, 4 neighbor queries, 0 mismatches\n");
    }

    #[test]
    fn verify_failure_exits_three() {
        fn off_by_one(n: u64, order: FareyOrder) -> farey_core::Result<FareyTriple> {
            if (n, order.get()) == (3, 7) {
                return triple(2, order);
            }
            triple(n, order)
        }
        let methods = Methods {
            chain: off_by_one,
            ..Methods::default()
        };
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["farey", "verify", "20"], &methods, &mut out, &mut err);
        assert_eq!(code, EXIT_VERIFY);
        let err = String::from_utf8(err).unwrap();
        assert!(err.contains("farey triple 3 7 --method chain"), "{err}");
    }

    #[test]
    fn json_outputs_round_trip() {
        let (_, out, _) = run_capture(&["--json", "triple", "5", "39"]);
        assert_eq!(out.trim(), r#"{"left":"1/8","center":"5/39","right":"4/31","order":39}"#);
        let t: FareyTriple = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&t).unwrap(), out.trim());

        let (_, out, _) = run_capture(&["list", "2", "--json"]);
        assert_eq!(out.trim(), r#"["0/1","1/2","1/1"]"#);

        let (_, out, _) = run_capture(&["--json", "next", "9/25", "100"]);
        let r: NeighborResult = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), out.trim());
        assert_eq!(
            out.trim(),
            r#"{"query":"9/25","order":100,"neighbor":"31/86","steps":3,"side":"right"}"#
        );

        let (_, out, _) = run_capture(&["--json", "cf", "9/25"]);
        assert_eq!(out.trim(), r#"{"fraction":"9/25","cf":[0,2,1,3,2]}"#);
        let c: CfOutput = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), out.trim());

        let (_, out, _) = run_capture(&["--json", "chain", "5/39"]);
        assert_eq!(out.trim(), r#"{"start":"5/39","quotients":[7,1],"terminal":4,"k":2}"#);
        let c: ChainOutput = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), out.trim());

        let (_, out, _) = run_capture(&["--json", "verify", "5"]);
        let v: verify::VerifyReport = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), out.trim());
    }
}
