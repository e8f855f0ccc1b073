//! Command-line front end.
//!
//! Exit codes: 0 when the identity holds or no witness is found, 1 when it
//! fails or a witness is found, 2 on usage, parse, or budget errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::algebra::Ring;
use crate::identities::{IdentityId, Params};
use crate::report;
use crate::spec::AlgebraSpec;
use crate::verifier::{self, Bridge, WitnessPool};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ringcheck", version, about = "Exact checks of commutator and 2x2 trace identities over finite-dimensional rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Sizes {
    /// k of lie_solv_k (2^k arguments).
    #[arg(long = "k", default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=4))]
    solv_k: u32,
    /// m of lie_nilp_m (m+1 arguments).
    #[arg(long = "m", default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..=6))]
    nilp_m: u64,
    /// Depth of ck_vanish.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(0..=3))]
    depth: u64,
}

impl Sizes {
    fn params(&self) -> Params {
        Params { solv_k: self.solv_k, nilp_m: self.nilp_m as usize, ck_depth: self.depth as usize }
    }
}

#[derive(Args, Debug)]
struct SearchOpts {
    /// Candidate pool: `basis` or `sums:2`.
    #[arg(long, default_value = "basis")]
    pool: String,
    /// Maximum number of tuples to try.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    limit: u64,
    /// Worker threads for the search.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    jobs: u64,
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: crate::identities::IdentityError| {
        let names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an identity at generic elements.
    Verify {
        #[arg(long, value_parser = parse_identity)]
        identity: IdentityId,
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        sizes: Sizes,
        #[command(flatten)]
        output: Output,
    },
    /// Look for pool tuples at which an expression is nonzero.
    Search {
        #[arg(long, value_parser = parse_identity)]
        expr: IdentityId,
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        sizes: Sizes,
        #[command(flatten)]
        output: Output,
    },
    /// Test whether [[x,y],[x,z]] = 0 forces [[x,y],[u,v]] = 0 on a ring.
    ProbeQuestion {
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        search: SearchOpts,
        #[command(flatten)]
        output: Output,
    },
    /// Check [x,y][u,v] = 0 and [[x,y],z] = 0 on S and [[x,y],[u,v]] = 0 on U3*(S).
    Thm21 {
        /// The ring S.
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        output: Output,
    },
    /// Check that C_k vanishes along C_{i+1} = C_i^2 - 1/2 tr(C_i^2) I.
    Ck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=3))]
        k: u64,
        #[arg(long)]
        algebra: String,
        #[command(flatten)]
        output: Output,
    },
    /// Associativity, unit and embedding checks on the standard algebras.
    Selftest {
        /// Also check the identities that hold over every ring.
        #[arg(long)]
        bridges: bool,
        #[command(flatten)]
        output: Output,
    },
}

struct Emitter {
    format: Format,
    text: String,
    json: Vec<Value>,
}

impl Emitter {
    fn new(format: Format) -> Self {
        Emitter { format, text: String::new(), json: Vec::new() }
    }

    fn push(&mut self, text: String, json: Value) {
        self.text += &text;
        self.json.push(json);
    }

    fn write(self, out: &mut dyn Write) -> std::io::Result<()> {
        match self.format {
            Format::Text => write!(out, "{}", self.text),
            Format::Json => {
                let v = report::bundle(self.json);
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"))
            }
        }
    }
}

fn ring_of(text: &str) -> Result<Ring, String> {
    let spec = AlgebraSpec::parse(text).map_err(|e| format!("invalid algebra `{text}`: {e}"))?;
    spec.build().map_err(|e| format!("invalid algebra `{text}`: {e}"))
}

fn code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_VIOLATED
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, String> {
    let fail = |e: verifier::VerifyError| e.to_string();
    let (emitter, exit) = match cmd {
        Command::Verify { identity, algebra, sizes, output } => {
            let ring = ring_of(&algebra)?;
            let r = verifier::verify_generic(identity, &sizes.params(), &ring).map_err(fail)?;
            let mut em = Emitter::new(output.format);
            em.push(report::verify_text("verify", &r), report::verify_json("verify", &r));
            (em, code(r.holds))
        }
        Command::Search { expr, algebra, search, sizes, output } => {
            let ring = ring_of(&algebra)?;
            let pool = WitnessPool::parse(&search.pool, &ring).map_err(fail)?;
            let r = verifier::search_witness(expr, &sizes.params(), &ring, &pool, search.limit, search.jobs as usize)
                .map_err(fail)?;
            let mut em = Emitter::new(output.format);
            em.push(report::verify_text("search", &r), report::verify_json("search", &r));
            (em, code(r.holds))
        }
        Command::ProbeQuestion { algebra, search, output } => {
            let ring = ring_of(&algebra)?;
            let pool = WitnessPool::parse(&search.pool, &ring).map_err(fail)?;
            let p = verifier::probe_question(&ring, &pool, search.limit, search.jobs as usize).map_err(fail)?;
            let mut em = Emitter::new(output.format);
            em.text += &format!("probe-question over {}: {}\n", ring.name(), p.status.as_str());
            for r in p.reports() {
                let mut j = report::verify_json("probe-question", r);
                j["status"] = Value::String(p.status.as_str().into());
                em.push(report::verify_text("probe-question", r), j);
            }
            (em, code(p.status != verifier::ProbeStatus::Counterexample))
        }
        Command::Thm21 { algebra, output } => {
            let ring = ring_of(&algebra)?;
            let t = verifier::verify_thm21_hypotheses(&ring).map_err(fail)?;
            let mut em = Emitter::new(output.format);
            let verdict = if t.refuted() {
                "refuted"
            } else if t.vacuous() {
                "vacuous"
            } else {
                "confirmed"
            };
            em.text += &format!("thm21 over S = {}: implication {verdict}\n", ring.name());
            for r in t.reports() {
                em.push(report::verify_text("thm21", r), report::verify_json("thm21", r));
            }
            (em, code(!t.refuted()))
        }
        Command::Ck { k, algebra, output } => {
            let ring = ring_of(&algebra)?;
            let (r, traceless) = verifier::verify_ck(&ring, k as usize).map_err(fail)?;
            let mut em = Emitter::new(output.format);
            em.push(report::verify_text("ck", &r), report::verify_json("ck", &r));
            (em, code(r.holds && traceless))
        }
        Command::Selftest { bridges, output } => {
            let mut em = Emitter::new(output.format);
            let mut all_ok = true;
            for name in verifier::STANDARD_ALGEBRAS {
                let ring = ring_of(name)?;
                let k = verifier::kernel_checks(&ring);
                all_ok &= k.ok();
                em.push(report::kernel_text(&k), report::kernel_json(&k));
                if bridges {
                    for b in Bridge::ALL {
                        let r = verifier::check_bridge(b, &ring).map_err(fail)?;
                        all_ok &= r.holds;
                        em.push(report::bridge_text(&r), report::bridge_json(&r));
                    }
                }
            }
            (em, code(all_ok))
        }
    };
    emitter.write(out).map_err(|e| e.to_string())?;
    Ok(exit)
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let exit = e.exit_code();
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{rendered}");
            return exit;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("ringcheck").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out, _) = call(&["verify", "--identity", "prop31", "--algebra", "full:3"]);
        assert_eq!(code, 0);
        assert!(out.contains("holds: true"));
        let (code, _, _) = call(&["verify", "--identity", "domokos", "--algebra", "full:2"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["verify", "--identity", "thm99", "--algebra", "rat"]);
        assert_eq!(code, 2);
        assert!(err.contains("thm99"));
        let (code, _, err) = call(&["verify", "--identity", "prop31", "--algebra", "u3star(grassmann:9"]);
        assert_eq!(code, 2);
        assert!(err.contains("unbalanced parenthesis at column 18"), "{err}");
        let (code, _, _) = call(&["ck", "--k", "4", "--algebra", "rat"]);
        assert_eq!(code, 2);
        let (code, _, _) = call(&["frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn budget_error_is_usage() {
        let (code, _, err) = call(&["ck", "--k", "3", "--algebra", "full:4"]);
        assert_eq!(code, 2);
        assert!(err.contains("budget"), "{err}");
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        for sub in ["verify", "search", "probe-question", "thm21", "ck", "selftest"] {
            assert!(out.contains(sub), "{sub}");
        }
    }

    #[test]
    fn json_output_parses() {
        let (code, out, _) = call(&["thm21", "--algebra", "rat", "--format", "json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 3);
        assert!(v.as_array().unwrap().iter().all(|r| r["holds"] == true));
    }
}
