//! `postgroup-lab`: command-line access to the post-group library.
//!
//! Exit status: 0 on success, 1 when a check fails (a witness is printed),
//! 2 for unreadable or malformed input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use postgroup_core::action_postgroup::DEFAULT_SIZE_CAP;
use postgroup_core::finite_postgroup::{full_check, PostGroupTable};
use postgroup_core::free_postgroup::FreePostGroup;
use postgroup_core::io::{
    self, ActionFile, BraceFile, BraidingFile, GroupFile, IoError, MagmaFile, PostGroupFile,
};
use postgroup_core::magma::MagmaTable;
use postgroup_core::magnus::magnus_report;
use postgroup_core::report::CheckLine;
use postgroup_core::selftest::{run_all, Level};
use postgroup_core::tensor::checks::{kmap_suite, posthopf_suite};
use postgroup_core::tensor::{kmap_tensor, kmap_tensor_inverse, Generators, TensorPoly, TensorWord, DEFAULT_DEGREE_CAP};
use postgroup_core::words::{ReducedWord, WordError};

#[derive(Parser)]
#[command(name = "postgroup-lab", version, about = "Exact computations with post-groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a magma file is left-regular and diagonal.
    ValidateMagma { file: PathBuf },
    /// Free post-group action `u ▷ v` (or `u ▷⁻¹ v` with --inverse).
    Act {
        #[arg(long)]
        magma: PathBuf,
        u: String,
        v: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Grossman–Larson product `u * v`.
    Star {
        #[arg(long)]
        magma: PathBuf,
        u: String,
        v: String,
    },
    /// Grossman–Larson inverse of `u`.
    StarInv {
        #[arg(long)]
        magma: PathBuf,
        u: String,
    },
    /// The isomorphism from the free group onto its Grossman–Larson group.
    Jmap {
        #[arg(long)]
        magma: PathBuf,
        u: String,
    },
    /// The inverse of `jmap`.
    Kmap {
        #[arg(long)]
        magma: PathBuf,
        u: String,
    },
    /// Exhaustive checks on a finite post-group table.
    CheckPostgroup { file: PathBuf },
    /// Print (and optionally save) the braiding of a post-group.
    Braiding {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Braid equation and Yang–Baxter equation for a braiding or post-group file.
    Ybe { file: PathBuf },
    /// Convert a post-group to its skew brace.
    ToBrace {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a skew brace to its post-group.
    FromBrace {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The opposite post-group.
    Opposite {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The post-group with trivial triangle on a group.
    MakeTrivial {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The conjugation post-group on a group.
    MakeConjugation {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The gauge post-group of maps from a set into a group acting on it.
    FromAction {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The K-map on the tensor algebra, on a polynomial or on every basis word of a degree.
    KmapTensor {
        #[arg(long, default_value_t = 2)]
        generators: usize,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        inverse: bool,
        /// A polynomial such as `x1.x2 - (x1>x2)`.
        poly: Option<String>,
    },
    /// Post-Hopf, post-Lie and K-map identity suites up to a degree.
    CheckPosthopf {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 2)]
        generators: usize,
    },
    /// Series α(tx), the flow and the Grossman–Larson Magnus expansion.
    Magnus {
        #[arg(long, default_value_t = 5)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        generators: usize,
    },
    /// Run the acceptance battery.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

/// Why a command did not succeed.
enum Failure {
    /// A check failed; exit 1.
    Check(String),
    /// Bad input; exit 2.
    Input(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Check(e.to_string())
        }
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::ValidateMagma { file } => {
            let m = load_magma(&file)?;
            println!("{} elements", m.len());
            println!("diagonal left-regular: OK");
            Ok(())
        }
        Command::Act { magma, u, v, inverse } => {
            let (g, u, v) = free_pair(&magma, &u, &v)?;
            let r = if inverse { g.inverse_act(&u, &v)? } else { g.act(&u, &v)? };
            print_word(&g, &r);
            Ok(())
        }
        Command::Star { magma, u, v } => {
            let (g, u, v) = free_pair(&magma, &u, &v)?;
            print_word(&g, &g.gl_product(&u, &v)?);
            Ok(())
        }
        Command::StarInv { magma, u } => {
            let (g, u) = free_one(&magma, &u)?;
            print_word(&g, &g.gl_inverse(&u)?);
            Ok(())
        }
        Command::Jmap { magma, u } => {
            let (g, u) = free_one(&magma, &u)?;
            print_word(&g, &g.jmap(&u)?);
            Ok(())
        }
        Command::Kmap { magma, u } => {
            let (g, u) = free_one(&magma, &u)?;
            print_word(&g, &g.kmap(&u)?);
            Ok(())
        }
        Command::CheckPostgroup { file } => {
            let pg = load_postgroup(&file)?;
            println!("post-group on {} elements: OK", pg.len());
            println!("pre-group: {}", if pg.is_pregroup() { "yes" } else { "no" });
            report_lines(&full_check(&pg))
        }
        Command::Braiding { file, out } => {
            let pg = load_postgroup(&file)?;
            let sigma = pg.braiding();
            save(out.as_deref(), &BraidingFile::from_braiding(&sigma), false)?;
            let names = pg.names();
            for g in 0..pg.len() {
                for h in 0..pg.len() {
                    let (a, b) = sigma.apply(g, h);
                    println!("σ({}, {}) = ({}, {})", names[g], names[h], names[a], names[b]);
                }
            }
            Ok(())
        }
        Command::Ybe { file } => {
            let value: serde_json::Value = io::read_json(&file)?;
            let sigma = if value.get("sigma").is_some() {
                let f: BraidingFile = serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))?;
                f.into_braiding()?
            } else {
                let f: PostGroupFile = serde_json::from_value(value).map_err(|e| Failure::Input(e.to_string()))?;
                f.into_postgroup()?.braiding()
            };
            report_lines(&[
                CheckLine::new("σ bijective", sigma.check_bijective().map_err(|e| e.to_string())),
                CheckLine::new("braid equation", sigma.check_braid_equation().map_err(|w| w.to_string())),
                CheckLine::new("Yang-Baxter (R = P∘σ)", sigma.check_ybe().map_err(|w| w.to_string())),
            ])
        }
        Command::ToBrace { file, out } => {
            let pg = load_postgroup(&file)?;
            save(out.as_deref(), &BraceFile::from_brace(&pg.to_skew_brace()), true)
        }
        Command::FromBrace { file, out } => {
            let brace = io::read_json::<BraceFile>(&file)?.into_brace()?;
            let pg = brace.to_postgroup().map_err(IoError::from)?;
            save(out.as_deref(), &PostGroupFile::from_postgroup(&pg), true)
        }
        Command::Opposite { file, out } => {
            let pg = load_postgroup(&file)?;
            save(out.as_deref(), &PostGroupFile::from_postgroup(&pg.opposite()), true)
        }
        Command::MakeTrivial { group, out } => {
            let g = io::read_json::<GroupFile>(&group)?.into_group()?;
            save(out.as_deref(), &PostGroupFile::from_postgroup(&PostGroupTable::trivial(&g)), true)
        }
        Command::MakeConjugation { group, out } => {
            let g = io::read_json::<GroupFile>(&group)?.into_group()?;
            save(out.as_deref(), &PostGroupFile::from_postgroup(&PostGroupTable::conjugation(&g)), true)
        }
        Command::FromAction { file, out } => {
            let action = io::read_json::<ActionFile>(&file)?.into_action()?;
            let pg = action.build_gauge_postgroup(DEFAULT_SIZE_CAP).map_err(IoError::from)?;
            save(out.as_deref(), &PostGroupFile::from_postgroup(&pg), true)
        }
        Command::KmapTensor { generators, degree, inverse, poly } => {
            let gens = generators_or_input(generators)?;
            let apply = |p: &TensorPoly| if inverse { kmap_tensor_inverse(p) } else { kmap_tensor(p) };
            let label = if inverse { "K⁻¹" } else { "K" };
            match (poly, degree) {
                (Some(text), None) => {
                    let p = gens.parse_poly(&text).map_err(|e| Failure::Input(e.to_string()))?;
                    println!("{}", gens.format_poly(&apply(&p)));
                }
                (None, Some(d)) => {
                    check_cap(d)?;
                    for w in TensorWord::all_of_degree(gens.len(), d) {
                        let image = apply(&TensorPoly::word(w.clone()));
                        println!("{label}({}) = {}", gens.format_word(&w), gens.format_poly(&image));
                    }
                }
                _ => return Err(Failure::Input("give either a polynomial or --degree".into())),
            }
            Ok(())
        }
        Command::CheckPosthopf { degree, generators } => {
            let gens = generators_or_input(generators)?;
            check_cap(degree)?;
            let mut lines = posthopf_suite(&gens, degree).map_err(|e| Failure::Input(e.to_string()))?;
            lines.extend(kmap_suite(&gens, degree).map_err(|e| Failure::Input(e.to_string()))?);
            report_lines(&lines)
        }
        Command::Magnus { order, generators } => {
            if generators != 1 {
                return Err(Failure::Input("the Magnus series are defined for a single generator x".into()));
            }
            if order + 1 > DEFAULT_DEGREE_CAP {
                return Err(Failure::Input(format!(
                    "order {order} needs leaf degree {} above the cap {DEFAULT_DEGREE_CAP}",
                    order + 1
                )));
            }
            let gens = generators_or_input(1)?;
            let r = magnus_report(order).map_err(|e| Failure::Check(e.to_string()))?;
            for (label, series) in [("α(tx)", &r.alpha), ("Y = K(exp(tx))", &r.flow), ("Ω_*(α(tx))", &r.omega_star)] {
                println!("{label}:");
                for line in series.format(&gens) {
                    println!("  {line}");
                }
            }
            report_lines(&r.checks)
        }
        Command::Selftest { seed, level } => {
            let level: Level = level.parse().map_err(Failure::Input)?;
            let seed = match std::env::var("POSTGROUP_LAB_SEED") {
                Ok(s) => s.parse().map_err(|_| Failure::Input(format!("POSTGROUP_LAB_SEED=`{s}` is not an integer")))?,
                Err(_) => seed,
            };
            println!("seed {seed}");
            let results = run_all(seed, level);
            let mut failed = Vec::new();
            for c in &results {
                println!("{c}");
                for line in c.failures() {
                    println!("    {line}");
                }
                if !c.passed() {
                    failed.push(c.id.to_string());
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Check(format!("criteria failing: {}", failed.join(", "))))
            }
        }
    }
}

fn load_magma(path: &Path) -> Result<MagmaTable, Failure> {
    Ok(io::read_json::<MagmaFile>(path)?.into_magma()?)
}

fn load_postgroup(path: &Path) -> Result<PostGroupTable, Failure> {
    Ok(io::read_json::<PostGroupFile>(path)?.into_postgroup()?)
}

fn free_one(magma: &Path, u: &str) -> Result<(FreePostGroup, ReducedWord), Failure> {
    let g = FreePostGroup::new(load_magma(magma)?);
    let u = g.magma().alphabet().parse_word(u)?;
    Ok((g, u))
}

fn free_pair(magma: &Path, u: &str, v: &str) -> Result<(FreePostGroup, ReducedWord, ReducedWord), Failure> {
    let (g, u) = free_one(magma, u)?;
    let v = g.magma().alphabet().parse_word(v)?;
    Ok((g, u, v))
}

fn print_word(g: &FreePostGroup, w: &ReducedWord) {
    println!("{}", g.magma().alphabet().format_word(w));
}

fn generators_or_input(n: usize) -> Result<Generators, Failure> {
    Generators::standard(n).map_err(|e| Failure::Input(e.to_string()))
}

fn check_cap(degree: usize) -> Outcome {
    if degree > DEFAULT_DEGREE_CAP {
        return Err(Failure::Input(format!("degree {degree} exceeds the cap {DEFAULT_DEGREE_CAP}")));
    }
    Ok(())
}

/// Writes JSON to `out`, or to stdout when `echo` is set and no path is given.
fn save<T: serde::Serialize>(out: Option<&Path>, value: &T, echo: bool) -> Outcome {
    match out {
        Some(path) => {
            io::write_json(path, value)?;
            println!("wrote {}", path.display());
        }
        None if echo => print!("{}", io::to_json(value)),
        None => {}
    }
    Ok(())
}

fn report_lines(lines: &[CheckLine]) -> Outcome {
    for line in lines {
        println!("{line}");
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.passed()).map(|l| l.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failed.join("; ")))
    }
}
