//! The `subtrans` command line: solve, verify, recognize, generate, bench.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use subtrans::format::{parse_instance, serialize_instance};
use subtrans::oracle::{oracle_transversal, ORACLE_CAP};
use subtrans::recognition::witnesses;
use subtrans::reduction::three_colouring;
use subtrans::{
    classify, random_hfree, solve_with, vc3_to_wsoct, ClassLabel, Error, GeneratorConfig, Instance, Problem,
    SolveOptions, Solved,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "subtrans",
    version,
    about = "Exact subset odd cycle transversal and feedback vertex set"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve one instance and print a key/value report.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ProblemArg::Oct)]
        problem: ProblemArg,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve and compare against the brute-force oracle. Directories are
    /// expanded to their `.wst` files.
    Verify {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        /// Check only this problem (default: both).
        #[arg(long, value_enum)]
        problem: Option<ProblemArg>,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Print the class label and any forbidden-pattern witnesses.
    Recognize { input: PathBuf },
    /// Write generated instances.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Time the solver on every `.wst` file of a directory.
    Bench {
        dir: PathBuf,
        #[arg(long, value_enum)]
        problem: Option<ProblemArg>,
        #[arg(long, default_value_t = ORACLE_CAP)]
        oracle_cap: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenerateKind {
    /// Seeded random instances from a graph class.
    Random(RandomArgs),
    /// The vertex cover construction applied to a 3-colourable graph.
    Reduction {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct RandomArgs {
    #[arg(long)]
    pub class: ClassLabel,
    #[arg(short = 'n', long, default_value_t = 10)]
    pub vertices: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub max_weight: u64,
    #[arg(long, default_value_t = 0.4)]
    pub terminal_density: f64,
    #[arg(long, default_value_t = 100_000)]
    pub budget: u64,
    /// Require the exact class label, not just membership.
    #[arg(long)]
    pub strict: bool,
    /// Number of instances, with consecutive seeds. Above one, `--out`
    /// names a directory.
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Oct,
    Fvs,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Oct => Problem::Oct,
            ProblemArg::Fvs => Problem::Fvs,
        }
    }
}

fn problems(p: Option<ProblemArg>) -> Vec<Problem> {
    match p {
        Some(p) => vec![p.into()],
        None => vec![Problem::Oct, Problem::Fvs],
    }
}

#[derive(Debug)]
enum Failure {
    Usage(anyhow::Error),
    Parse(String),
    Unsupported(String),
    Mismatch(usize),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Unsupported(_) => EXIT_UNSUPPORTED,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(e) => format!("{e:#}"),
            Failure::Parse(m) | Failure::Unsupported(m) => m.clone(),
            Failure::Mismatch(k) => format!("{k} mismatch(es) against the oracle"),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported { .. } | Error::ClassViolation { .. } | Error::OracleCap { .. } => {
                Failure::Unsupported(e.to_string())
            }
            Error::GenerationBudget { .. } => Failure::Unsupported(e.to_string()),
            other => Failure::Usage(anyhow!(other)),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve {
            input,
            problem,
            oracle_cap,
            out: path,
        } => {
            let inst = load(&input)?;
            let solved = solve_with(&inst, problem.into(), &SolveOptions { oracle_cap })?;
            emit(out, path.as_deref(), &report(&inst, &solved))
        }
        Command::Verify {
            inputs,
            problem,
            oracle_cap,
        } => verify(&inputs, &problems(problem), oracle_cap, out),
        Command::Recognize { input } => {
            let inst = load(&input)?;
            emit(out, None, &recognize(&inst))
        }
        Command::Generate { kind } => generate(kind, out),
        Command::Bench {
            dir,
            problem,
            oracle_cap,
            jobs,
        } => bench(&dir, &problems(problem), oracle_cap, jobs, out),
    }
}

fn load(path: &Path) -> std::result::Result<Instance, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => out.write_all(text.as_bytes()).context("writing output")?,
    }
    Ok(())
}

fn vertex_list(vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| format!(" {}", v + 1)).collect()
}

/// The line-oriented solve report; vertices are 1-indexed.
pub fn report(inst: &Instance, solved: &Solved) -> String {
    let s = &solved.solution;
    let mut text = String::new();
    writeln!(text, "problem {}", s.problem).unwrap();
    writeln!(text, "class {}", solved.class).unwrap();
    writeln!(text, "route {}", solved.route).unwrap();
    writeln!(text, "n {}", inst.n()).unwrap();
    writeln!(text, "weight {}", s.weight).unwrap();
    writeln!(text, "removed{}", vertex_list(s.removed.iter())).unwrap();
    text
}

pub fn recognize(inst: &Instance) -> String {
    let mut text = format!("class {}\n", classify(inst));
    for (kind, w) in witnesses(inst) {
        writeln!(text, "witness {kind}{}", vertex_list(w)).unwrap();
    }
    text
}

fn wst_files(inputs: &[PathBuf]) -> std::result::Result<Vec<PathBuf>, Failure> {
    let mut files = Vec::new();
    for p in inputs {
        if p.is_dir() {
            let mut found: Vec<PathBuf> = fs::read_dir(p)
                .with_context(|| format!("listing {}", p.display()))?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|f| f.extension().is_some_and(|x| x == "wst"))
                .collect();
            found.sort();
            files.extend(found);
        } else {
            files.push(p.clone());
        }
    }
    Ok(files)
}

fn verify(inputs: &[PathBuf], problems: &[Problem], oracle_cap: usize, out: &mut dyn Write) -> Outcome {
    let files = wst_files(inputs)?;
    let insts = files
        .iter()
        .map(|f| load(f))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let cap = oracle_cap.min(ORACLE_CAP);
    let rows: Vec<(String, bool)> = files
        .par_iter()
        .zip(insts.par_iter())
        .flat_map_iter(|(f, inst)| {
            problems.iter().map(move |&p| {
                let name = f.display();
                let solved = match solve_with(inst, p, &SolveOptions { oracle_cap }) {
                    Ok(s) => s,
                    Err(e) => return (format!("{name} {p} error {e}\n"), false),
                };
                let got = &solved.solution;
                if inst.n() > cap {
                    return (format!("{name} {p} solver={} oracle=- skipped\n", got.weight), true);
                }
                let want = oracle_transversal(inst, p).expect("within cap");
                let ok = got.weight == want.weight && got.verify(inst);
                let verdict = if ok { "match" } else { "mismatch" };
                (
                    format!("{name} {p} solver={} oracle={} {verdict}\n", got.weight, want.weight),
                    ok,
                )
            })
        })
        .collect();
    let mut bad = 0;
    for (line, ok) in &rows {
        out.write_all(line.as_bytes()).context("writing output")?;
        bad += usize::from(!ok);
    }
    writeln!(out, "checked {} mismatched {bad}", rows.len()).context("writing output")?;
    if bad > 0 {
        return Err(Failure::Mismatch(bad));
    }
    Ok(())
}

fn generate(kind: GenerateKind, out: &mut dyn Write) -> Outcome {
    match kind {
        GenerateKind::Reduction { input, out: path } => {
            let g = load(&input)?;
            let parts = three_colouring(&g)
                .ok_or_else(|| Failure::Unsupported(format!("{} is not 3-colourable", input.display())))?;
            let red = vc3_to_wsoct(&g, &parts)?;
            emit(out, path.as_deref(), &serialize_instance(&red.instance))
        }
        GenerateKind::Random(a) => {
            if a.vertices > subtrans::reduction::MAX_GENERATED {
                return Err(Failure::Usage(anyhow!(
                    "at most {} vertices can be generated",
                    subtrans::reduction::MAX_GENERATED
                )));
            }
            if !(0.0..=1.0).contains(&a.terminal_density) {
                return Err(Failure::Usage(anyhow!("terminal density must lie in [0, 1]")));
            }
            let cfg = GeneratorConfig {
                weights: 0..=a.max_weight.min(subtrans::MAX_WEIGHT),
                terminal_density: a.terminal_density,
                budget: a.budget,
                strict: a.strict,
            };
            if a.count <= 1 {
                let inst = random_hfree(a.vertices, a.class, a.seed, &cfg)?;
                return emit(out, a.out.as_deref(), &serialize_instance(&inst));
            }
            let dir = a
                .out
                .ok_or_else(|| Failure::Usage(anyhow!("--count above one needs --out DIR")))?;
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            for seed in a.seed..a.seed + a.count {
                let inst = random_hfree(a.vertices, a.class, seed, &cfg)?;
                let file = dir.join(format!("{}-n{}-s{seed}.wst", a.class, a.vertices));
                emit(out, Some(&file), &serialize_instance(&inst))?;
            }
            Ok(())
        }
    }
}

fn bench(dir: &Path, problems: &[Problem], oracle_cap: usize, jobs: usize, out: &mut dyn Write) -> Outcome {
    let files = wst_files(&[dir.to_path_buf()])?;
    let insts = files
        .iter()
        .map(|f| load(f))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .context("starting worker pool")?;
    let rows: Vec<String> = pool.install(|| {
        files
            .par_iter()
            .zip(insts.par_iter())
            .flat_map_iter(|(f, inst)| {
                problems.iter().map(move |&p| {
                    let name = f
                        .file_name()
                        .map_or_else(|| f.display().to_string(), |s| s.to_string_lossy().into());
                    let start = Instant::now();
                    let res = solve_with(inst, p, &SolveOptions { oracle_cap });
                    let ms = start.elapsed().as_secs_f64() * 1e3;
                    match res {
                        Ok(s) => format!(
                            "{name:<32} {:>3} {p:<4} {:<16} {:<10} {:>8} {ms:>10.3}\n",
                            inst.n(),
                            s.class.to_string(),
                            s.route.to_string(),
                            s.solution.weight
                        ),
                        Err(_) => format!(
                            "{name:<32} {:>3} {p:<4} {:<16} {:<10} {:>8} {ms:>10.3}\n",
                            inst.n(),
                            "-",
                            "rejected",
                            "-"
                        ),
                    }
                })
            })
            .collect()
    });
    let mut text = format!(
        "{:<32} {:>3} {:<4} {:<16} {:<10} {:>8} {:>10}\n",
        "file", "n", "prob", "class", "route", "weight", "ms"
    );
    for r in rows {
        text.push_str(&r);
    }
    emit(out, None, &text)
}
