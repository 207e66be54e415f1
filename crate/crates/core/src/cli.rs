//! Command-line front end. Every command reads JSON from a path or stdin and
//! writes canonical JSON (or CSV/text for reports) to stdout.
//!
//! Exit codes: 0 when every report matches (or the command produces no
//! reports), 1 on a mismatch, 2 when something is flagged, 64 for usage
//! errors, 65 for malformed input, 66 for unreadable input, 67 when a size cap
//! is exceeded and 68 when the time budget runs out.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::complex::total_cut_complex;
use crate::error::{Error, Result};
use crate::graph::{
    build_square_sequence, grid_sequence, make_grid, random_edge_sequence,
    random_square_sequence, SquareSequence,
};
use crate::harness::{
    gamma_recurrence, overall_verdict, reports_to_csv, reports_to_jsonl, scan_conjecture,
    scan_grid_alpha, verify_clique_lemma, verify_decomposition, verify_edge_corollary,
    verify_example_26, verify_koenig, verify_main2, verify_thm_main, verify_total_cut, Caps,
    Expected, ScanMode, Source, Verdict, VerificationReport,
};
use crate::homology::{duality_comparison, reduced_homology};
use crate::io::{complex_from_json, complex_to_json, graph_from_json, graph_to_json, script_from_json};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_FLAGGED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_MALFORMED: i32 = 65;
pub const EXIT_IO: i32 = 66;
pub const EXIT_CAP: i32 = 67;
pub const EXIT_BUDGET: i32 = 68;

#[derive(Parser, Debug)]
#[command(
    name = "rcc",
    version,
    about = "Robust clique complexes, total cut complexes and their homology"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Seed for sampled commands.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,

    /// Largest vertex universe for robust clique complexes.
    #[arg(long, default_value_t = 20, value_parser = positive, global = true)]
    cap_universe: usize,

    /// Largest vertex universe for direct total cut complexes.
    #[arg(long, default_value_t = 14, value_parser = positive, global = true)]
    cap_total_cut: usize,

    /// Largest face count per complex.
    #[arg(long, default_value_t = 2_000_000, value_parser = positive, global = true)]
    cap_faces: usize,

    /// Wall-clock budget per instance, in seconds.
    #[arg(long, default_value_t = 600, value_parser = positive_u64, global = true)]
    budget_secs: u64,

    /// Report a runtime of 0 ms so output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Log to stderr (repeat for more detail).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the m x n grid graph.
    Grid { m: usize, n: usize },
    /// Square sequence graphs.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Build a complex from a graph.
    Complex {
        #[arg(value_enum)]
        kind: ComplexKind,
        #[arg(short)]
        k: usize,
        /// Graph JSON; stdin when omitted or `-`.
        graph: Option<PathBuf>,
    },
    /// Reduced integral homology of a complex.
    Homology {
        /// Complex JSON; stdin when omitted or `-`.
        complex: Option<PathBuf>,
    },
    /// Check a stated result and emit verification reports.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Sampled or swept checks that record rather than assert.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Compare the total cut complex with the duality prediction.
    Dual {
        /// Graph JSON; stdin when omitted or `-`.
        graph: Option<PathBuf>,
        #[arg(short)]
        k: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Robust,
    Cut,
}

#[derive(Subcommand, Debug)]
enum SeqCommand {
    /// Build a sequence and print its recurrence trace and final graph.
    Build {
        #[command(flatten)]
        source: SeqSource,
    },
}

/// A square sequence from a gluing script, a grid, or a seeded random draw.
#[derive(Args, Debug)]
struct SeqSource {
    /// Gluing script JSON; stdin when omitted or `-`.
    script: Option<PathBuf>,
    /// Use the canonical sequence of the m x n grid.
    #[arg(long, num_args = 2, value_names = ["M", "N"], conflicts_with_all = ["script", "random"])]
    grid: Option<Vec<usize>>,
    /// Draw a random sequence of this length with `--seed`.
    #[arg(long, value_name = "LEN", conflicts_with = "script")]
    random: Option<usize>,
    /// Restrict `--random` to edge gluing.
    #[arg(long, requires = "random")]
    edge_only: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Grid closed form for Cliq_k(G_{m,n}), k in {2, 3}.
    ThmMain { m: usize, n: usize, k: usize },
    /// Cliq_3 of a square sequence against the recurrence.
    Main2 {
        #[command(flatten)]
        source: SeqSource,
    },
    /// Edge-only sequences against both closed-form counts.
    EdgeCor {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        source: SeqSource,
    },
    /// Total cut complex of a grid, k in {2, 3}.
    TotalCut { m: usize, n: usize, k: usize },
    /// Union and intersection decomposition at one step, or every step.
    Decomposition {
        #[arg(short)]
        k: usize,
        /// Step index (2..=length); all steps when omitted.
        #[arg(long)]
        step: Option<usize>,
        #[command(flatten)]
        source: SeqSource,
    },
    /// Independence drop along maximum matching edges.
    Koenig {
        #[arg(short)]
        k: usize,
        /// Graph JSON; stdin when omitted or `-`.
        graph: Option<PathBuf>,
        /// Sampled vertex sets for graphs above 12 vertices.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
    },
    /// Cliq_2 of a square sequence is a wedge of circles.
    Clique {
        #[command(flatten)]
        source: SeqSource,
    },
    /// Audit of the G_{5,3} example at k = 6.
    Example26,
}

#[derive(Subcommand, Debug)]
enum ScanCommand {
    /// Sample square sequences and test for a wedge of (2k-3)-spheres.
    Conjecture {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Mode::Mixed)]
        mode: Mode,
    },
    /// Grids at k = alpha: count maximum independent sets and spheres.
    GridAlpha {
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Mixed,
    EdgeOnly,
}

fn positive(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_u64(s: &str) -> std::result::Result<u64, String> {
    positive(s).map(|v| v as u64)
}

/// Runs one invocation and returns the process exit code. `args` includes
/// the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
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
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let msg = e.render().to_string();
                    let _ = write!(stderr, "usage error: {}", msg.trim_start_matches("error: "));
                    EXIT_USAGE
                }
            };
        }
    };
    init_logging(cli.verbose);
    let mut ctx = Context {
        stdin,
        stdout,
        format: cli.format,
        seed: cli.seed,
        caps: Caps {
            universe: cli.cap_universe,
            total_cut_universe: cli.cap_total_cut,
            faces: cli.cap_faces,
            budget_secs: cli.budget_secs,
        },
        no_timing: cli.no_timing,
    };
    match ctx.dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let (prefix, code) = classify(&e);
            let _ = writeln!(stderr, "{prefix}: {e}");
            code
        }
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    let _ = env_logger::Builder::new().filter_level(level).try_init();
}

/// Message prefix and exit code for an error.
pub fn classify(e: &Error) -> (&'static str, i32) {
    match e {
        Error::Json(_)
        | Error::Malformed(_)
        | Error::VertexOutOfRange { .. }
        | Error::Loop(_)
        | Error::OddCycle(_)
        | Error::InvalidAttachment { .. }
        | Error::NotClosed(_)
        | Error::UniverseMismatch(..) => ("malformed input", EXIT_MALFORMED),
        Error::Io(_) => ("io error", EXIT_IO),
        Error::SizeCap { .. } | Error::UniverseTooLarge(_) => ("cap exceeded", EXIT_CAP),
        Error::BudgetExceeded { .. } => ("budget exceeded", EXIT_BUDGET),
        Error::GridTooSmall { .. }
        | Error::InvalidK(_)
        | Error::InvalidParameter(_)
        | Error::ApexCollision(_)
        | Error::VoidComplex => ("usage error", EXIT_USAGE),
    }
}

struct Context<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    format: Format,
    seed: u64,
    caps: Caps,
    no_timing: bool,
}

impl Context<'_> {
    fn dispatch(&mut self, command: Command) -> Result<i32> {
        match command {
            Command::Grid { m, n } => {
                let g = make_grid(m, n)?;
                self.emit_line(&graph_to_json(&g))
            }
            Command::Seq(SeqCommand::Build { source }) => {
                let seq = self.sequence(&source)?;
                let trace = gamma_recurrence(&seq);
                let graph: Value = serde_json::from_str(&graph_to_json(seq.last()))?;
                let doc = json!({
                    "length": seq.len(),
                    "edge_only": seq.is_edge_only(),
                    "vertices": seq.last().vertex_count(),
                    "edges": seq.last().edge_count(),
                    "gamma": trace.gamma(),
                    "trace": trace.steps,
                    "steps": seq.steps(),
                    "graph": graph,
                });
                self.emit_line(&doc.to_string())
            }
            Command::Complex { kind, k, graph } => {
                let g = graph_from_json(&self.read(graph.as_ref())?)?;
                let c = match kind {
                    ComplexKind::Robust => self.caps.robust_clique(&g, k)?,
                    ComplexKind::Cut => total_cut_complex(&g, k, self.caps.total_cut_universe)?,
                };
                if c.face_count() > self.caps.faces {
                    return Err(Error::SizeCap {
                        what: "face count",
                        actual: c.face_count(),
                        cap: self.caps.faces,
                    });
                }
                self.emit_line(&complex_to_json(&c))
            }
            Command::Homology { complex } => {
                let c = complex_from_json(&self.read(complex.as_ref())?)?;
                let h = reduced_homology(&c);
                match self.format {
                    Format::Text => self.emit_line(&h.summary()),
                    _ => self.emit_line(&serde_json::to_string(&h)?),
                }
            }
            Command::Verify(v) => {
                let reports = self.verify(v)?;
                self.emit_reports(reports)
            }
            Command::Scan(ScanCommand::Conjecture {
                k,
                max_len,
                samples,
                mode,
            }) => {
                let mode = match mode {
                    Mode::Mixed => ScanMode::Mixed,
                    Mode::EdgeOnly => ScanMode::EdgeOnly,
                };
                let reports = scan_conjecture(k, max_len, samples, self.seed, mode, &self.caps)?;
                self.emit_reports(reports)
            }
            Command::Scan(ScanCommand::GridAlpha { max_vertices }) => {
                let reports = scan_grid_alpha(max_vertices, &self.caps)?;
                self.emit_reports(reports)
            }
            Command::Dual { graph, k } => {
                let g = graph_from_json(&self.read(graph.as_ref())?)?;
                let report = self.dual(&g, k)?;
                self.emit_reports(vec![report])
            }
        }
    }

    fn verify(&mut self, command: VerifyCommand) -> Result<Vec<VerificationReport>> {
        let caps = self.caps;
        Ok(match command {
            VerifyCommand::ThmMain { m, n, k } => vec![verify_thm_main(m, n, k, &caps)?],
            VerifyCommand::Main2 { source } => vec![verify_main2(&self.sequence(&source)?, &caps)?],
            VerifyCommand::EdgeCor { k, source } => {
                vec![verify_edge_corollary(&self.sequence(&source)?, k, &caps)?]
            }
            VerifyCommand::TotalCut { m, n, k } => vec![verify_total_cut(m, n, k, &caps)?],
            VerifyCommand::Decomposition { k, step, source } => {
                let seq = self.sequence(&source)?;
                let steps = match step {
                    Some(s) => vec![s],
                    None => (2..=seq.len()).collect(),
                };
                if steps.is_empty() {
                    return Err(Error::InvalidParameter(
                        "a sequence of length 1 has no gluing steps".into(),
                    ));
                }
                steps
                    .into_iter()
                    .map(|s| verify_decomposition(&seq, s, k, &caps))
                    .collect::<Result<_>>()?
            }
            VerifyCommand::Koenig { k, graph, samples } => {
                let g = graph_from_json(&self.read(graph.as_ref())?)?;
                vec![verify_koenig(&g, k, samples, self.seed)?]
            }
            VerifyCommand::Clique { source } => {
                vec![verify_clique_lemma(&self.sequence(&source)?, &caps)?]
            }
            VerifyCommand::Example26 => vec![verify_example_26(&caps)?],
        })
    }

    fn dual(&self, g: &crate::graph::Graph, k: usize) -> Result<VerificationReport> {
        let clock = self.caps.clock();
        let cmp = duality_comparison(g, k, self.caps.total_cut_universe)?;
        clock.check("comparing total cut homology with its dual")?;
        Ok(VerificationReport {
            claim: "duality".to_string(),
            params: json!({"vertices": g.vertex_count(), "k": k}),
            expected: vec![Expected::new(
                "agrees",
                true,
                Source::Identity,
                "betti~_i(total cut) = betti~_{d-i-3}(robust clique), torsion-free",
            )],
            computed: serde_json::to_value(&cmp)?,
            verdict: Verdict::from_bool(cmp.agrees),
            runtime_ms: clock.millis(),
            notes: Vec::new(),
        })
    }

    fn sequence(&mut self, source: &SeqSource) -> Result<SquareSequence> {
        if let Some(grid) = &source.grid {
            return grid_sequence(grid[0], grid[1]);
        }
        if let Some(len) = source.random {
            if len == 0 {
                return Err(Error::InvalidParameter("sequence length must be at least 1".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            return Ok(if source.edge_only {
                random_edge_sequence(len, &mut rng)
            } else {
                random_square_sequence(len, &mut rng)
            });
        }
        let script = script_from_json(&self.read(source.script.as_ref())?)?;
        build_square_sequence(&script)
    }

    fn read(&mut self, path: Option<&PathBuf>) -> Result<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    fn emit_line(&mut self, s: &str) -> Result<i32> {
        writeln!(self.stdout, "{s}")?;
        Ok(0)
    }

    fn emit_reports(&mut self, mut reports: Vec<VerificationReport>) -> Result<i32> {
        if self.no_timing {
            reports = reports.into_iter().map(VerificationReport::without_timing).collect();
        }
        let out = match self.format {
            Format::Json => reports_to_jsonl(&reports),
            Format::Csv => reports_to_csv(&reports),
            Format::Text => reports
                .iter()
                .map(|r| {
                    let mut s = r.text_line() + "\n";
                    for note in &r.notes {
                        s += &format!("    note: {note}\n");
                    }
                    s
                })
                .collect(),
        };
        self.stdout.write_all(out.as_bytes())?;
        Ok(match overall_verdict(&reports) {
            Verdict::Match => 0,
            Verdict::Mismatch => EXIT_MISMATCH,
            Verdict::Flagged => EXIT_FLAGGED,
        })
    }
}
