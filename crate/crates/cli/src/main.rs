//! `plabic`: build rec-plabic graphs, compute flow polynomials and point sets,
//! and run verification suites.
//!
//! Exit codes: 0 success, 1 verification failure or computation error, 2 usage error.

mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use plabic::flows::FlowModel;
use plabic::io::{rec_to_json, to_dot, to_svg, to_tikz};
use plabic::polyhedra::lattice_points;
use plabic::poset::GridPoset;
use plabic::rec::{apply_w0, build_rec, dualize, RecGraph};
use plabic::valuation::{no_level_r, ValuationContext};
use plabic::{Error, Subset};

#[derive(Parser, Debug)]
#[command(
    name = "plabic",
    version,
    about = "Rec-plabic graphs, flow polynomials and Newton-Okounkov point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Copy)]
struct Size {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build rec(k,n), its dual or its w0 relabelling and print it.
    Rec {
        #[command(flatten)]
        size: Size,
        #[arg(long, conflicts_with = "w0")]
        dual: bool,
        #[arg(long)]
        w0: bool,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Trip permutation and trip endpoints.
    Trips {
        #[command(flatten)]
        size: Size,
        #[arg(long)]
        dual: bool,
    },
    /// Face labels, face count and F_∅.
    Faces {
        #[command(flatten)]
        size: Size,
        #[arg(long, conflicts_with = "w0")]
        dual: bool,
        #[arg(long)]
        w0: bool,
    },
    /// Flow polynomial P_J.
    Plucker {
        #[command(flatten)]
        size: Size,
        #[arg(long = "J", value_name = "a,b,c")]
        j: String,
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        json: bool,
    },
    /// Newton-Okounkov points at level r (Minkowski sums of level 1).
    NoBody {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        dual: bool,
        #[arg(long, value_enum, default_value_t = Table::Csv)]
        format: Table,
    },
    /// Order (Gelfand-Tsetlin) or chain (FFLV) polytope of the grid poset.
    Poset {
        #[command(flatten)]
        size: Size,
        #[arg(long = "type", value_enum)]
        kind: PolytopeKind,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, conflicts_with = "hrep")]
        points: bool,
        #[arg(long)]
        hrep: bool,
    },
    /// Run a verification suite; prints a JSON report.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where the fflv suite writes its certificate.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Emit {
    Json,
    Dot,
    Svg,
    Tikz,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Table {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolytopeKind {
    Order,
    Chain,
}

pub(crate) fn verbose() -> bool {
    std::env::var_os("PLABIC_VERBOSE").is_some_and(|v| !v.is_empty() && v != "0")
}

fn rec_variant(size: Size, dual: bool, w0: bool) -> plabic::Result<RecGraph> {
    let rec = build_rec(size.k, size.n)?;
    if dual {
        dualize(&rec)
    } else if w0 {
        apply_w0(&rec)
    } else {
        Ok(rec)
    }
}

fn write_or_print(text: &str, output: Option<&PathBuf>) -> plabic::Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Format(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn run(cli: Cli) -> plabic::Result<bool> {
    match cli.command {
        Command::Rec {
            size,
            dual,
            w0,
            emit,
            output,
        } => {
            let rec = rec_variant(size, dual, w0)?;
            let (g, o, labels) = (
                rec.graph(),
                Some(&rec.net.orientation),
                Some(rec.net.labels()),
            );
            let text = match emit {
                Emit::Json => pretty(&rec_to_json(&rec)),
                Emit::Dot => to_dot(g, o, labels),
                Emit::Svg => to_svg(g, o, labels),
                Emit::Tikz => to_tikz(g, o, labels),
            };
            write_or_print(&text, output.as_ref())?;
        }
        Command::Trips { size, dual } => {
            let rec = rec_variant(size, dual, false)?;
            let g = rec.graph();
            let perm = g.trip_permutation()?;
            let trips: Vec<_> = (1..=g.n())
                .map(|i| {
                    let t = g.trip(i)?;
                    Ok(json!({ "start": t.start, "end": t.end, "steps": t.steps.len() }))
                })
                .collect::<plabic::Result<_>>()?;
            print!(
                "{}",
                pretty(&json!({ "permutation": perm, "trips": trips }))
            );
        }
        Command::Faces { size, dual, w0 } => {
            let rec = rec_variant(size, dual, w0)?;
            let ctx = ValuationContext::new(&rec.net)?;
            let faces: Vec<_> = rec
                .net
                .labels()
                .iter()
                .enumerate()
                .map(|(f, l)| {
                    let c = rec.graph().face_centroid(f);
                    json!({ "face": f, "label": l.to_string(), "centroid": [c.x.to_string(), c.y.to_string()] })
                })
                .collect();
            print!(
                "{}",
                pretty(&json!({
                    "count": faces.len(),
                    "sources": rec.net.sources().to_vec(),
                    "empty_face": ctx.empty_face_label().to_string(),
                    "faces": faces,
                }))
            );
        }
        Command::Plucker {
            size,
            j,
            dual,
            json: as_json,
        } => {
            let rec = rec_variant(size, dual, false)?;
            let j = Subset::parse(&j)
                .ok_or_else(|| Error::Parameter(format!("cannot parse J = {j:?}")))?;
            let p = FlowModel::new(&rec.net)?.polynomial(j)?;
            if as_json {
                print!("{}", pretty(&p.to_json(rec.net.basis())));
            } else {
                println!("{}", p.display(rec.net.basis()));
            }
        }
        Command::NoBody {
            size,
            level,
            dual,
            format,
        } => {
            if level == 0 {
                return Err(Error::Parameter("level must be at least 1".into()));
            }
            let rec = rec_variant(size, dual, false)?;
            let ctx = ValuationContext::new(&rec.net)?;
            let pts = no_level_r(&ctx, level)?;
            match format {
                Table::Csv => print!("{}", pts.to_csv()),
                Table::Json => print!("{}", pretty(&pts.to_json())),
            }
        }
        Command::Poset {
            size,
            kind,
            r,
            points,
            hrep,
        } => {
            if r < 0 {
                return Err(Error::Parameter("r must be nonnegative".into()));
            }
            let poset = GridPoset::new(size.k, size.n)?;
            let h = match kind {
                PolytopeKind::Order => poset.order_polytope_h(r),
                PolytopeKind::Chain => poset.chain_polytope_h(r),
            };
            if points && !hrep {
                print!("{}", lattice_points(&h)?.to_csv());
            } else {
                print!("{}", pretty(&h.to_json()));
            }
        }
        Command::Verify {
            suite,
            size,
            seed,
            output,
        } => {
            let report = verify::run_suite(suite, size.k, size.n, seed, output.as_deref())?;
            print!("{}", pretty(&report.to_json()));
            if verbose() {
                eprint!("{}", report.summary());
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Error::Parameter(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
