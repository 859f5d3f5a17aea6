//! Thin command-line front end over the `lcr` library.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lcr::construct::{
    case_maxima_report, construct_five_part, construct_three_arcs, five_part_with_exponent,
    three_arcs_with_exponent, PartitionedPointSet,
};
use lcr::crossing::crossing_profile;
use lcr::fileio::{format_rational, parse_pointset, serialize_pointset, Report};
use lcr::formula::lcr_formula;
use lcr::geom::PointSet;
use lcr::search::{grid_crossing_profile, random_grid_set, search_witness, SearchConfig};
use lcr::separation::{find_separation_witness, lemma_lower_bound};
use lcr::svg::emit_svg;
use lcr::DEFAULT_SEED;

/// Exact computation of rectilinear local crossing numbers of complete graphs.
#[derive(Parser)]
#[command(name = "lcr", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form lcr(K_n), with the two exceptional values marked.
    Formula {
        /// Single n to evaluate.
        n: Option<u64>,
        /// Print a table for an inclusive range instead.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"], conflicts_with = "n")]
        table: Option<Vec<u64>>,
    },
    /// Analyze a point-set file: lcr, totals, and optional extras, as JSON.
    Analyze {
        file: String,
        /// Include the full per-edge crossing profile.
        #[arg(long)]
        profile: bool,
        /// Include a separation witness and its lower-bound certificate.
        #[arg(long)]
        witness: bool,
    },
    /// Build a calibrated low-lcr construction.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Separation witnesses: certify one file or fuzz random sets.
    Lemma {
        /// Point-set file to certify.
        file: Option<String>,
        /// Fuzz this many random general-position sets instead.
        #[arg(long, conflicts_with = "file")]
        fuzz: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Inclusive range of set sizes for fuzzing.
        #[arg(long, num_args = 2, value_names = ["FROM", "TO"], default_values_t = [3, 15])]
        n_range: Vec<usize>,
    },
    /// Hill-climb for a drawing of K_n with lcr at most the target.
    Search {
        n: usize,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 20_000)]
        moves: usize,
        /// Write the best point set found to this file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Render a point-set file as SVG.
    Svg {
        file: String,
        /// Write the SVG here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct ConstructCommon {
    /// Force epsilon = 1/2^E instead of calibrating.
    #[arg(long)]
    eps_exponent: Option<u32>,
    /// Write the point set to this file.
    #[arg(long)]
    out: Option<String>,
    /// Print a full JSON analysis report.
    #[arg(long)]
    report: bool,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Three clusters on shallow concave arcs; n points total.
    ThreeArcs {
        n: usize,
        #[command(flatten)]
        common: ConstructCommon,
    },
    /// The 3k+8-point five-part arrangement, including its case maxima.
    FivePart {
        k: usize,
        #[command(flatten)]
        common: ConstructCommon,
    },
}

fn write_or_print(out: &Option<String>, content: &str) -> lcr::Result<()> {
    match out {
        Some(path) => fs::write(path, content).map_err(Into::into),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn finish_construct(built: &PartitionedPointSet, common: &ConstructCommon) -> lcr::Result<()> {
    if let Some(path) = &common.out {
        fs::write(path, serialize_pointset(&built.base))?;
    }
    if common.report {
        let report = Report::analyze(&built.base, true);
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    }
    Ok(())
}

fn run(cli: Cli) -> lcr::Result<()> {
    match cli.command {
        Command::Formula { n, table } => {
            let print_one = |n: u64| {
                let v = lcr_formula(n);
                if v.exceptional {
                    println!("{} (exceptional)", v.value);
                } else {
                    println!("{}", v.value);
                }
            };
            match (n, table) {
                (Some(n), None) => print_one(n),
                (None, Some(range)) => {
                    for n in range[0]..=range[1] {
                        let v = lcr_formula(n);
                        let mark = if v.exceptional { " (exceptional)" } else { "" };
                        println!("{n}\t{}{mark}", v.value);
                    }
                }
                _ => {
                    return Err(lcr::Error::InvalidParameter(
                        "formula needs either N or --table FROM TO".into(),
                    ))
                }
            }
        }
        Command::Analyze {
            file,
            profile,
            witness,
        } => {
            let ps = parse_pointset(&fs::read_to_string(file)?)?;
            let mut report = Report::analyze(&ps, profile);
            if witness {
                report.witness = Some(find_separation_witness(&ps)?);
                report.certificate = Some(lemma_lower_bound(&ps)?);
            }
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Command::Construct { kind } => match kind {
            ConstructKind::ThreeArcs { n, common } => {
                let built = match common.eps_exponent {
                    Some(t) => three_arcs_with_exponent(n, t)?,
                    None => construct_three_arcs(n)?,
                };
                let lcr_value = lcr::local_crossing_number(&built.base);
                println!(
                    "three-arcs n={n}: lcr {lcr_value}, epsilon 1/2^{}",
                    built.eps_exponent()
                );
                finish_construct(&built, &common)?;
            }
            ConstructKind::FivePart { k, common } => {
                let built = match common.eps_exponent {
                    Some(t) => five_part_with_exponent(k, t)?,
                    None => construct_five_part(k)?,
                };
                let lcr_value = lcr::local_crossing_number(&built.base);
                println!(
                    "five-part k={k} (n={}): lcr {lcr_value}, epsilon 1/2^{}",
                    built.base.len(),
                    built.eps_exponent()
                );
                for ((a, b), max) in case_maxima_report(&built)? {
                    println!("  ({a},{b}) max {max}");
                }
                finish_construct(&built, &common)?;
            }
        },
        Command::Lemma {
            file,
            fuzz,
            seed,
            n_range,
        } => match (file, fuzz) {
            (Some(path), None) => {
                let ps = parse_pointset(&fs::read_to_string(path)?)?;
                let witness = find_separation_witness(&ps)?;
                let certificate = lemma_lower_bound(&ps)?;
                let out = serde_json::json!({
                    "witness": witness,
                    "certificate": certificate,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            (None, Some(count)) => {
                use rand::{Rng, SeedableRng};
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let (lo, hi) = (n_range[0].max(3), n_range[1]);
                let mut missing = 0usize;
                let mut unsound = 0usize;
                for _ in 0..count {
                    let n = rng.gen_range(lo..=hi);
                    let grid = random_grid_set(n, 1 << 20, &mut rng);
                    let ps = PointSet::from_int_coords(&grid);
                    match lemma_lower_bound(&ps) {
                        Ok(cert) => {
                            if cert.edge_bound > grid_crossing_profile(&grid).lcr() {
                                unsound += 1;
                            }
                        }
                        Err(lcr::Error::LemmaViolated) => missing += 1,
                        Err(e) => return Err(e),
                    }
                }
                println!(
                    "fuzz: {count} sets, n in {lo}..={hi}: {} with witnesses, \
                     {missing} without, {unsound} unsound bounds",
                    count - missing
                );
                if missing + unsound > 0 {
                    return Err(lcr::Error::LemmaViolated);
                }
            }
            _ => {
                return Err(lcr::Error::InvalidParameter(
                    "lemma needs either FILE or --fuzz N".into(),
                ))
            }
        },
        Command::Search {
            n,
            target,
            seed,
            restarts,
            moves,
            out,
        } => {
            let target = target.unwrap_or_else(|| lcr_formula(n as u64).value as usize);
            let cfg = SearchConfig {
                restarts,
                moves_per_restart: moves,
                ..SearchConfig::new(n, target, seed)
            };
            let result = search_witness(&cfg);
            let points: Vec<[String; 2]> = result
                .best
                .iter()
                .map(|p| [format_rational(&p.x), format_rational(&p.y)])
                .collect();
            let log = serde_json::json!({
                "config": cfg,
                "best_lcr": result.best_lcr,
                "achieved_target": result.achieved_target,
                "iterations_used": result.iterations_used,
                "points": points,
            });
            println!("{}", serde_json::to_string_pretty(&log).unwrap());
            if let Some(path) = out {
                fs::write(path, serialize_pointset(&result.best))?;
            }
        }
        Command::Svg { file, out } => {
            let ps = parse_pointset(&fs::read_to_string(file)?)?;
            let svg = emit_svg(&ps, &crossing_profile(&ps), None);
            write_or_print(&out, &svg)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}
