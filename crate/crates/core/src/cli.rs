//! The `seq` command-line interface.
//!
//! Grammar: `seq <group> <verb> [--a FILE] [--b FILE] [--u FILE] [-n LEN]
//! [--ring DESC] [--transform SPEC] [--exp M] [--online|--offline]`.
//! Sequences are exchanged as JSON documents (see [`crate::io`]); results go
//! to stdout, diagnostics to stderr. Exit codes: 0 on success, 2 for usage
//! and parse problems, 1 for every other failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::binomial::{
    self, a_from_binomial, binomial_from_u, family, is_binomial_type, pa_polynomials,
    u_from_binomial, u_from_binomial_unchecked, Family, PolySeq,
};
use crate::error::{Error, Result};
use crate::inversion;
use crate::io::{read_seq_file, serialize_seq};
use crate::oeis::{self, OeisMode};
use crate::ring::Ring;
use crate::series::Seq;
use crate::tau::{tau_forward, tau_inverse, UnitSeq};
use crate::transforms::TransformSpec;

#[derive(Parser)]
#[command(
    name = "seq",
    version,
    about = "Exact sequence algebra over commutative rings",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Products, sums, compositions, shifts, and named sequences
    Op(OpArgs),
    /// Hurwitz-product and compositional inverses
    Inverse(InverseArgs),
    /// Apply or invert a named transform
    Transform(TransformArgs),
    /// The exponent-sequence isomorphism and its inverse
    Tau(TauArgs),
    /// Binomial-type polynomial families
    Binom(BinomArgs),
    /// Prefix search against the sequence catalog
    Oeis(OeisArgs),
}

#[derive(Args)]
struct OpArgs {
    /// One of: add, hadamard, hurwitz, cauchy, compose-egf, compose-ogf,
    /// neg, gamma, gamma-inv, shift-minus, truncate, power, ones, identity,
    /// comp-identity, factorials
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    b: Option<PathBuf>,
    #[arg(short = 'n', long = "length", value_name = "LEN")]
    n: Option<usize>,
    #[arg(long, value_name = "DESC")]
    ring: Option<String>,
    /// Exponent for `power`
    #[arg(long, value_name = "M")]
    exp: Option<u64>,
}

#[derive(Args)]
struct InverseArgs {
    /// One of: hurwitz, hurwitz-bell, hurwitz-relinv, comp, comp-closed,
    /// comp-cinv
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// One of: apply, invert
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
    /// Transform spec: altsign, stirling, stirling-inv, beta:<value>,
    /// mu:<term,term,...>
    #[arg(long, value_name = "SPEC")]
    transform: Option<String>,
    /// Ring for parsing the spec when no input sequence provides one
    #[arg(long, value_name = "DESC")]
    ring: Option<String>,
}

#[derive(Args)]
struct TauArgs {
    /// One of: forward, inverse
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
    /// Output length for `forward` (defaults to one more than the input)
    #[arg(short = 'n', long = "length", value_name = "LEN")]
    n: Option<usize>,
}

#[derive(Args)]
struct BinomArgs {
    /// One of: from-u, u-from, pa, check, a-from, powers, laguerre,
    /// touchard, abel, pochhammer
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    u: Option<PathBuf>,
    #[arg(short = 'n', long = "length", value_name = "LEN")]
    n: Option<usize>,
    /// Skip the regeneration check in `u-from`
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct OeisArgs {
    /// Only `lookup`
    verb: String,
    #[arg(long, value_name = "FILE")]
    a: Option<PathBuf>,
    #[arg(short = 'n', long = "length", value_name = "LEN")]
    n: Option<usize>,
    /// Allow a live network query
    #[arg(long)]
    online: bool,
    /// Search the bundled snapshot instead of the network
    #[arg(long)]
    offline: bool,
}

/// Parse and run one invocation; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                // --help and --version land here
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn usage(message: impl Into<String>) -> Error {
    Error::Usage {
        message: message.into(),
    }
}

fn require_file(path: &Option<PathBuf>, flag: &str) -> Result<Seq> {
    let path = path
        .as_ref()
        .ok_or_else(|| usage(format!("--{flag} <FILE> is required for this verb")))?;
    read_seq_file(path)
}

fn require_poly(path: &Option<PathBuf>, flag: &str) -> Result<PolySeq> {
    PolySeq::new(require_file(path, flag)?)
}

fn require_ring(ring: &Option<String>) -> Result<Ring> {
    let desc = ring
        .as_ref()
        .ok_or_else(|| usage("--ring <DESC> is required for this verb"))?;
    Ring::parse(desc)
}

fn require_n(n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| usage("-n <LEN> is required for this verb"))
}

fn emit_seq(out: &mut dyn Write, a: &Seq) -> Result<()> {
    writeln!(out, "{}", serialize_seq(a))?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.group {
        Group::Op(args) => run_op(args, out),
        Group::Inverse(args) => run_inverse(args, out),
        Group::Transform(args) => run_transform(args, out),
        Group::Tau(args) => run_tau(args, out),
        Group::Binom(args) => run_binom(args, out),
        Group::Oeis(args) => run_oeis(args, out),
    }
}

fn run_op(args: OpArgs, out: &mut dyn Write) -> Result<()> {
    let verb = args.verb.as_str();
    // generators take --ring and -n instead of input files
    if let "ones" | "identity" | "comp-identity" | "factorials" = verb {
        let ring = require_ring(&args.ring)?;
        let n = require_n(args.n)?;
        if n == 0 {
            return Err(usage("-n must be at least 1"));
        }
        let result = match verb {
            "ones" => Seq::ones(&ring, n),
            "identity" => Seq::hurwitz_identity(&ring, n),
            "comp-identity" => {
                if n < 2 {
                    return Err(Error::LengthTooShort { needed: 2, got: n });
                }
                Seq::composition_identity(&ring, n)
            }
            "factorials" => Seq::factorials(&ring, n),
            _ => unreachable!(),
        };
        return emit_seq(out, &result);
    }

    let a = require_file(&args.a, "a")?;
    let result = match verb {
        "add" | "hadamard" | "hurwitz" | "cauchy" | "compose-egf" | "compose-ogf" => {
            let b = require_file(&args.b, "b")?;
            match verb {
                "add" => a.add(&b)?,
                "hadamard" => a.hadamard(&b)?,
                "hurwitz" => a.hurwitz(&b)?,
                "cauchy" => a.cauchy(&b)?,
                "compose-egf" => a.compose_egf(&b)?,
                "compose-ogf" => a.compose_ogf(&b)?,
                _ => unreachable!(),
            }
        }
        "neg" => a.neg(),
        "gamma" => a.gamma(),
        "gamma-inv" => a.gamma_inv()?,
        "shift-minus" => a.shift_minus()?,
        "truncate" => a.truncate(require_n(args.n)?)?,
        "power" => {
            let m = args
                .exp
                .ok_or_else(|| usage("--exp <M> is required for power"))?;
            a.hurwitz_power(m)
        }
        other => return Err(usage(format!("unknown op verb {other:?}"))),
    };
    emit_seq(out, &result)
}

fn run_inverse(args: InverseArgs, out: &mut dyn Write) -> Result<()> {
    let a = require_file(&args.a, "a")?;
    let result = match args.verb.as_str() {
        "hurwitz" => inversion::hurwitz_inverse(&a)?,
        "hurwitz-bell" => inversion::hurwitz_inverse_bell(&a)?,
        "hurwitz-relinv" => inversion::hurwitz_inverse_via_relinv(&a)?,
        "comp" => inversion::comp_inverse(&a)?,
        "comp-closed" => inversion::comp_inverse_closed(&a)?,
        "comp-cinv" => inversion::comp_inverse_via_cinv(&a)?,
        other => return Err(usage(format!("unknown inverse verb {other:?}"))),
    };
    emit_seq(out, &result)
}

fn run_transform(args: TransformArgs, out: &mut dyn Write) -> Result<()> {
    let spec_text = args
        .transform
        .as_ref()
        .ok_or_else(|| usage("--transform <SPEC> is required"))?;
    match args.verb.as_str() {
        "apply" => {
            let a = require_file(&args.a, "a")?;
            let spec = TransformSpec::parse(spec_text, a.ring())?;
            emit_seq(out, &spec.apply(&a)?)
        }
        "invert" => {
            let ring = match &args.ring {
                Some(desc) => Ring::parse(desc)?,
                None => Ring::integers(),
            };
            let spec = TransformSpec::parse(spec_text, &ring)?;
            writeln!(out, "{}", spec.inverted()?)?;
            Ok(())
        }
        other => Err(usage(format!("unknown transform verb {other:?}"))),
    }
}

fn run_tau(args: TauArgs, out: &mut dyn Write) -> Result<()> {
    let a = require_file(&args.a, "a")?;
    match args.verb.as_str() {
        "forward" => {
            let n = args.n.unwrap_or(a.len() + 1);
            let image = tau_forward(&a, n)?;
            emit_seq(out, image.seq())
        }
        "inverse" => {
            let unit = UnitSeq::new(a)?;
            emit_seq(out, &tau_inverse(&unit)?)
        }
        other => Err(usage(format!("unknown tau verb {other:?}"))),
    }
}

fn run_binom(args: BinomArgs, out: &mut dyn Write) -> Result<()> {
    let verb = args.verb.as_str();
    if let Ok(f) = verb.parse::<Family>() {
        let n = args.n.unwrap_or(8);
        if n == 0 {
            return Err(usage("-n must be at least 1"));
        }
        return emit_seq(out, family(f, n)?.seq());
    }
    match verb {
        "from-u" => {
            let u = require_file(&args.u, "u")?;
            let n = args.n.unwrap_or(u.len() + 1);
            emit_seq(out, binomial_from_u(&u, n)?.seq())
        }
        "u-from" => {
            let q = require_poly(&args.a, "a")?;
            let u = if args.no_verify {
                u_from_binomial_unchecked(&q)?
            } else {
                u_from_binomial(&q)?
            };
            emit_seq(out, &u)
        }
        "pa" => {
            let a = UnitSeq::new(require_file(&args.a, "a")?)?;
            let n = args.n.unwrap_or(a.len());
            emit_seq(out, pa_polynomials(&a, n)?.seq())
        }
        "check" => {
            let q = require_poly(&args.a, "a")?;
            let report = is_binomial_type(&q)?;
            let json = match report.failure {
                None => serde_json::json!({ "binomial_type": report.holds }),
                Some(f) => serde_json::json!({
                    "binomial_type": false,
                    "index": f.index,
                    "q_of_sum": f.q_of_sum.to_string(),
                    "convolution": f.convolution.to_string(),
                }),
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json).expect("plain data")
            )?;
            Ok(())
        }
        "a-from" => {
            let q = require_poly(&args.a, "a")?;
            emit_seq(out, a_from_binomial(&q)?.seq())
        }
        other => Err(usage(format!(
            "unknown binom verb {other:?} (families: {})",
            binomial_family_names()
        ))),
    }
}

fn binomial_family_names() -> String {
    [
        Family::Powers,
        Family::Laguerre,
        Family::Touchard,
        Family::Abel,
        Family::Pochhammer,
    ]
    .iter()
    .map(|f| binomial::Family::name(f))
    .collect::<Vec<_>>()
    .join(", ")
}

fn run_oeis(args: OeisArgs, out: &mut dyn Write) -> Result<()> {
    if args.verb != "lookup" {
        return Err(usage(format!("unknown oeis verb {:?}", args.verb)));
    }
    if args.online && args.offline {
        return Err(usage("--online and --offline are mutually exclusive"));
    }
    let a = require_file(&args.a, "a")?;
    let a = match args.n {
        Some(n) => a.truncate(n)?,
        None => a,
    };
    let prefix = a
        .terms()
        .iter()
        .map(|t| {
            t.as_integer()
                .cloned()
                .ok_or_else(|| usage("oeis lookup expects a sequence over the ring Z"))
        })
        .collect::<Result<Vec<_>>>()?;
    let mode = if args.online {
        OeisMode::Online
    } else if args.offline {
        OeisMode::Fixture
    } else {
        OeisMode::Disabled
    };
    let hits = oeis::lookup(&prefix, mode)?;
    let json = serde_json::json!({
        "hits": hits
            .iter()
            .map(|h| serde_json::json!({
                "id": h.id,
                "name": h.name,
                "offset": h.offset,
            }))
            .collect::<Vec<_>>(),
    });
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&json).expect("plain data")
    )?;
    Ok(())
}
