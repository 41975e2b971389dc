use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use penta::json::{self, DirectionJson, OracleJson, OrbitsJson, StripsJson};
use penta::suite::{run_suite, SuiteConfig, SuiteReport};
use penta::{svg, OrbitCache};
use penta_core::surface::build_surface;
use penta_core::tracer::{strips_for_direction, StripOptions, TracePoint, Tracer};
use penta_core::tree::MAX_PATH_LEN;
use penta_core::verify::{ConcatPattern, TheoremId};
use penta_core::{ArcVertex, GoldenNum};

#[derive(Parser)]
#[command(name = "penta", version, about = "Periodic directions and symbolic orbits of the double pentagon")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact boundary coordinate of an arc vertex (`-` is alpha, `far` the other end).
    Direction {
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Short and long orbit of an arc vertex.
    Orbits {
        path: String,
        /// Also trace both strips on the surface and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Trace the strips of a direction, or one trajectory with --side/--t.
    Trace {
        path: String,
        #[arg(long, requires = "t")]
        side: Option<usize>,
        /// Start parameter along the side, e.g. `1/3` or `1/2+1/7*phi`.
        #[arg(long, requires = "side")]
        t: Option<String>,
        #[arg(long, default_value_t = 200_000)]
        max_steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the period and word laws over all cases up to a depth.
    Verify {
        /// `1`, `2`, `3`, `4`, `all`, `oracle`, `conjecture`, or a comma list.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Neighbors per side in the progression check.
        #[arg(long, default_value_t = 4)]
        range: usize,
        /// Largest power in the splitting check.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Share of vertices traced on the surface as a cross-check.
        #[arg(long, default_value_t = 0.0)]
        oracle_fraction: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Pattern::Statement)]
        pattern: Pattern,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Common beginnings of the split long words around each center.
    Conjecture {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// SVG of the pentagon tiling in the disk.
    RenderTiling {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// SVG of both strips of a direction on the double pentagon.
    RenderStrips {
        path: String,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Pattern {
    Statement,
    Induction,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] penta_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

fn vertex(path: &str) -> Result<ArcVertex, CliError> {
    path.parse().map_err(|e| CliError::Usage(format!("{e}")))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn theorems(list: &str, oracle_fraction: f64) -> Result<Vec<TheoremId>, CliError> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim) {
        if part == "all" {
            out.extend(TheoremId::THEOREMS);
            if oracle_fraction > 0.0 {
                out.push(TheoremId::Oracle);
            }
        } else {
            out.push(part.parse().map_err(|_| CliError::Usage(format!("unknown theorem `{part}`")))?);
        }
    }
    out.dedup();
    Ok(out)
}

fn table(reports: &[SuiteReport]) -> String {
    let mut s = format!("{:<12}{:>7}{:>8}{:>10}{:>12}\n", "theorem", "depth", "cases", "failures", "elapsed_ms");
    for r in reports {
        let rep = &r.report;
        s += &format!("{:<12}{:>7}{:>8}{:>10}{:>12}\n", rep.theorem.name(), rep.depth, rep.cases, rep.failures.len(), r.elapsed_ms);
        for f in &rep.failures {
            s += &format!("  {}: {}\n", f.case, f.detail);
        }
    }
    s
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Direction { path, json } => {
            let v = vertex(&path)?;
            let x = v.direction();
            if json {
                print_json(&DirectionJson::new(&v, &x))?;
            } else {
                println!("{v}\t{x}\t{:.15}", x.to_f64());
            }
        }
        Command::Orbits { path, oracle, json } => {
            let v = vertex(&path)?;
            let x = v.direction();
            let mut cache = OrbitCache::from_env();
            let o = cache.get_or_compute(&v);
            cache.save()?;
            let traced = if oracle { Some(strips_for_direction(&build_surface(), &x, StripOptions::default())?) } else { None };
            let matches = traced.as_ref().map(|r| r.orbit_pair == o);
            if json {
                print_json(&OrbitsJson {
                    direction: DirectionJson::new(&v, &x),
                    orbits: (&o).into(),
                    oracle: traced.as_ref().map(|r| OracleJson {
                        traced: (&r.orbit_pair).into(),
                        matches: r.orbit_pair == o,
                        traces: r.traces,
                    }),
                })?;
            } else {
                let (a, b) = o.periods();
                println!("short {}\nlong  {}\nperiods ({a}, {b}){}", o.short.canonical(), o.long.canonical(), if o.is_tie() { " tie" } else { "" });
                if let Some(r) = &traced {
                    println!("oracle {} {}", r.orbit_pair, if r.orbit_pair == o { "match" } else { "MISMATCH" });
                }
            }
            if matches == Some(false) {
                return Err(CliError::Failed("tracer and rewriting disagree".into()));
            }
        }
        Command::Trace { path, side, t, max_steps, json } => {
            let v = vertex(&path)?;
            let x = v.direction();
            let surface = build_surface();
            match (side, t) {
                (Some(side), Some(t)) => {
                    if side > 4 {
                        return Err(CliError::Usage("side must be 0..=4".into()));
                    }
                    let t: GoldenNum = t.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
                    let r = Tracer::new(&surface, &x).trace(&TracePoint { side, t }, max_steps)?;
                    if json {
                        print_json(&serde_json::json!({
                            "direction": DirectionJson::new(&v, &x),
                            "word": json::WordJson::from(&r.word),
                            "closed": r.closed,
                            "combinatorial_period": r.combinatorial_period,
                            "steps_used": r.steps_used,
                        }))?;
                    } else {
                        println!("{} closed={} period={}", r.word.representative(), r.closed, r.combinatorial_period);
                    }
                }
                _ => {
                    let opts = StripOptions { max_steps, ..StripOptions::default() };
                    let r = strips_for_direction(&surface, &x, opts)?;
                    if json {
                        print_json(&StripsJson::new(&v, &x, &r))?;
                    } else {
                        for (name, w, p) in [("short", &r.orbit_pair.short, &r.sample_points[0]), ("long", &r.orbit_pair.long, &r.sample_points[1])] {
                            println!("{name:<5} {} period {} from side {} t={}", w.canonical(), w.len(), p.side, p.t);
                        }
                    }
                }
            }
        }
        Command::Verify { theorem, depth, range, max_n, oracle_fraction, seed, jobs, pattern, json, out } => {
            if !(0.0..=1.0).contains(&oracle_fraction) {
                return Err(CliError::Usage("--oracle-fraction must lie in [0, 1]".into()));
            }
            if depth + range.max(max_n) + 1 > MAX_PATH_LEN {
                return Err(CliError::Usage(format!("depth plus range must stay below {MAX_PATH_LEN}")));
            }
            let cfg = SuiteConfig {
                depth,
                theorems: theorems(&theorem, oracle_fraction)?,
                range,
                max_n,
                oracle_fraction: if theorem.contains("oracle") && oracle_fraction == 0.0 { 1.0 } else { oracle_fraction },
                seed,
                pattern: match pattern {
                    Pattern::Statement => ConcatPattern::Statement,
                    Pattern::Induction => ConcatPattern::Induction,
                },
            };
            let mut cache = OrbitCache::from_env();
            let reports = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| CliError::Usage(format!("{e}")))?
                    .install(|| run_suite(&cfg, &mut cache)),
                None => run_suite(&cfg, &mut cache),
            };
            cache.save()?;
            let body = json::reports(&reports);
            if let Some(path) = out {
                fs::write(path, serde_json::to_string_pretty(&body)? + "\n")?;
            }
            if json {
                print_json(&body)?;
            } else {
                print!("{}", table(&reports));
            }
            let failed: usize = reports.iter().filter(|r| r.gating()).map(|r| r.report.failures.len()).sum();
            if failed > 0 {
                return Err(CliError::Failed(format!("{failed} failing cases")));
            }
        }
        Command::Conjecture { depth, max_n, json } => {
            let cfg = SuiteConfig { depth, theorems: vec![TheoremId::Conjecture], max_n, ..SuiteConfig::default() };
            let mut cache = OrbitCache::from_env();
            let reports = run_suite(&cfg, &mut cache);
            cache.save()?;
            if json {
                print_json(&json::reports(&reports))?;
            } else {
                let data = reports[0].data.clone().unwrap_or_default();
                println!("fans {}", reports[0].report.cases);
                println!("prefix length histogram {}", data["histogram"]);
                println!("without common prefix {}", data["without_common_prefix"]);
            }
        }
        Command::RenderTiling { depth, out } => {
            if depth > 7 {
                return Err(CliError::Usage("--depth above 7 draws too many arcs".into()));
            }
            fs::write(out, svg::render_tiling(depth))?;
        }
        Command::RenderStrips { path, out } => {
            let v = vertex(&path)?;
            fs::write(out, svg::render_strips(&build_surface(), &v)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("penta: {e}");
            ExitCode::from(e.code())
        }
    }
}
