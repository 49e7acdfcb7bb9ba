//! `fcomplex`: batch verification of simplicial-complex properties.

mod report;
mod sweep;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fcomplex::cm::depth;
use fcomplex::fideal::{
    homogeneous_complement_probe, is_f_complex_pure, is_f_ideal_general, main_theorem_probe, mayer_vietoris_check,
};
use fcomplex::io::{emit_complex, emit_shelled_over, emit_shelling, parse_complex, parse_sections, parse_shelled_over};
use fcomplex::shelling::{extend_core, find_shelling, shelled_over_decompose, verify_shelled_over, verify_shelling};
use fcomplex::suite::{run_suite, ExampleData, Status};
use fcomplex::{is_cm, is_minimal_cm, reduced_homology, Clutter, Complex, Error, FieldSpec, SearchOutcome};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use report::{sha256_hex, Exit, RunReport};

#[derive(Parser, Debug)]
#[command(name = "fcomplex", version, about = "Exact checks for simplicial complexes and f-ideals")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Coefficient field: `q` or `gf:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: FieldSpec,
    /// Node budget for backtracking searches.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for random sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Append wall-clock time to the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced homology over the chosen field.
    Homology { file: PathBuf },
    /// Cohen-Macaulay test with a Reisner witness on failure.
    Cm { file: PathBuf },
    /// Largest i + 1 such that the i-skeleton is CM.
    Depth { file: PathBuf },
    /// CM, and every facet deletion is non-CM.
    MinimalCm { file: PathBuf },
    /// Verify or search for a shelling order.
    #[command(subcommand)]
    Shelling(ShellingCmd),
    /// Build or verify a shelled-over certificate (CM-preserving facet sequence on a core).
    #[command(subcommand)]
    ShelledOver(ShelledOverCmd),
    /// f-ideal check of the facet ideal's Stanley-Reisner dual.
    FCheck { file: PathBuf },
    /// Complement, Alexander and Newton duals.
    #[command(subcommand)]
    Dual(DualCmd),
    /// Falsification probes for theorems and open questions.
    #[command(subcommand)]
    Probe(ProbeCmd),
    /// Reproduces every worked example on the bundled data.
    PaperSuite {
        /// Read the example files from this directory instead.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ShellingCmd {
    /// Check a facet order, one facet per line.
    Verify { file: PathBuf, order: PathBuf },
    /// Backtracking search within the node budget.
    Find { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ShelledOverCmd {
    /// Greedy decomposition, or a search on top of a given core.
    Find {
        file: PathBuf,
        /// Facet file of the core to extend.
        #[arg(long)]
        core: Option<PathBuf>,
    },
    /// Replay a certificate: core, then facets added one at a time.
    Verify { file: PathBuf, certificate: PathBuf },
}

#[derive(Subcommand, Debug)]
enum DualCmd {
    /// Complement complex: facets `[n] \ F`.
    C { file: PathBuf },
    /// Alexander dual: complements of the nonfaces.
    Alexander { file: PathBuf },
    /// Newton complementary dual of the facet clutter.
    Newton { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ProbeCmd {
    /// Minimal CM f-complex: dim >= 2, n <= 2(dim + 1), and acyclic exactly when equal.
    MainTheorem { file: PathBuf },
    /// Minimal CM f-complex with n = 2(d + 1): each facet deletion against its intersection with the facet.
    MayerVietoris { file: PathBuf },
    /// Shellability of the homogeneous complement of f-complexes.
    ComplementQuestion {
        /// Probe this complex; otherwise run a random sweep.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Restrict the sweep to this dimension.
        #[arg(long)]
        dim: Option<usize>,
    },
}

/// Failure before a verdict could be reached.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Run<T = ()> = Result<T, InputError>;

struct Ctx {
    field: FieldSpec,
    budget: u64,
    seed: u64,
    report: RunReport,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Run<(String, String)> {
        let bytes = std::fs::read(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        let name = path.display().to_string();
        self.report.inputs.push((name.clone(), sha256_hex(&bytes)));
        let text = String::from_utf8(bytes).map_err(|_| InputError(format!("{name}: not UTF-8")))?;
        Ok((name, text))
    }

    fn complex(&mut self, path: &Path) -> Run<(String, Complex)> {
        let (name, text) = self.read(path)?;
        let parsed = parse_complex(&text).map_err(|e| InputError(format!("{name}: {e}")))?;
        for w in &parsed.warnings {
            eprintln!("warning: {name}: {w}");
        }
        Ok((name, parsed.complex))
    }

    fn record(&mut self, check: &str, input: &str, verdict: impl Into<String>, detail: impl Into<String>, exit: Exit) {
        self.report.record(check, input, verdict, detail, exit);
    }
}

fn yes_no(ok: bool, yes: &str, no: &str) -> (String, Exit) {
    if ok {
        (yes.to_string(), Exit::Ok)
    } else {
        (no.to_string(), Exit::Negative)
    }
}

fn run(ctx: &mut Ctx, cmd: &Command) -> Run {
    let field = ctx.field;
    match cmd {
        Command::Homology { file } => {
            let (name, c) = ctx.complex(file)?;
            let h = reduced_homology(&c, field);
            let verdict = if h.is_zero() { "acyclic" } else { "not-acyclic" };
            ctx.record("homology", &name, verdict, h.to_string(), Exit::Ok);
        }
        Command::Cm { file } => {
            let (name, c) = ctx.complex(file)?;
            let r = is_cm(&c, field);
            let (v, exit) = yes_no(r.is_cm, "cm", "not-cm");
            let detail = r.witness.map(|w| format!("witness: {w}")).unwrap_or_default();
            ctx.record("cm", &name, v, detail, exit);
        }
        Command::Depth { file } => {
            let (name, c) = ctx.complex(file)?;
            let d = depth(&c, field);
            ctx.record("depth", &name, d.to_string(), format!("dim + 1 = {}", c.dim() + 1), Exit::Ok);
        }
        Command::MinimalCm { file } => {
            let (name, c) = ctx.complex(file)?;
            match is_minimal_cm(&c, field) {
                Ok(ok) => {
                    let (v, exit) = yes_no(ok, "minimal-cm", "not-minimal");
                    let detail = if ok { "" } else { "some facet deletion is still CM" };
                    ctx.record("minimal-cm", &name, v, detail, exit);
                }
                Err(Error::NotCohenMacaulay) => ctx.record("minimal-cm", &name, "not-cm", "", Exit::Negative),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Shelling(ShellingCmd::Verify { file, order }) => {
            let (name, c) = ctx.complex(file)?;
            let (oname, text) = ctx.read(order)?;
            let order = parse_sections(&text).map_err(|e| InputError(format!("{oname}: {e}")))?.order;
            match verify_shelling(&c, &order) {
                Ok(v) => {
                    let (verdict, exit) = yes_no(v.is_valid(), "valid", "invalid");
                    let detail = if v.is_valid() { String::new() } else { v.to_string() };
                    ctx.record("shelling", &name, verdict, detail, exit);
                }
                Err(Error::NotAPermutation(m) | Error::FacetMismatch(m)) => {
                    ctx.record("shelling", &name, "invalid", m, Exit::Negative)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Shelling(ShellingCmd::Find { file }) => {
            let (name, c) = ctx.complex(file)?;
            match find_shelling(&c, ctx.budget) {
                Err(Error::NotPure) => ctx.record("shelling", &name, "not-shellable", "not pure", Exit::Negative),
                Err(e) => return Err(e.into()),
                Ok(SearchOutcome::Found(cert)) => {
                    ctx.record("shelling", &name, "shellable", format!("{} facets", cert.order.len()), Exit::Ok);
                    ctx.report.certificate("shelling", emit_shelling(&cert));
                }
                Ok(SearchOutcome::None) => {
                    ctx.record("shelling", &name, "not-shellable", "search exhausted", Exit::Negative)
                }
                Ok(SearchOutcome::BudgetExhausted { nodes }) => {
                    ctx.record("shelling", &name, "unknown", format!("budget exhausted after {nodes} nodes"), Exit::BudgetExhausted)
                }
            }
        }
        Command::ShelledOver(ShelledOverCmd::Find { file, core }) => {
            let (name, c) = ctx.complex(file)?;
            let outcome = match core {
                None => match shelled_over_decompose(&c, field) {
                    Err(Error::NotCohenMacaulay) => {
                        ctx.record("shelled-over", &name, "not-cm", "only CM complexes are shelled over a core", Exit::Negative);
                        return Ok(());
                    }
                    r => SearchOutcome::Found(r?),
                },
                Some(path) => {
                    let (_, core) = ctx.complex(path)?;
                    if core.n() != c.n() {
                        return Err(InputError("core and complex have different n".into()));
                    }
                    extend_core(&c, &core, field, ctx.budget)?
                }
            };
            match outcome {
                SearchOutcome::Found(cert) => {
                    let v = verify_shelled_over(&c, &cert, field)?;
                    let (verdict, exit) = yes_no(v.is_valid(), "shelled-over", "invalid-core");
                    let detail = format!("core of {} facets, {} steps; {v}", cert.core.num_facets(), cert.added.len());
                    ctx.record("shelled-over", &name, verdict, detail, exit);
                    ctx.report.certificate("shelled-over", emit_shelled_over(&cert));
                }
                SearchOutcome::None => ctx.record("shelled-over", &name, "none", "no order extends the core", Exit::Negative),
                SearchOutcome::BudgetExhausted { nodes } => ctx.record(
                    "shelled-over",
                    &name,
                    "unknown",
                    format!("budget exhausted after {nodes} nodes"),
                    Exit::BudgetExhausted,
                ),
            }
        }
        Command::ShelledOver(ShelledOverCmd::Verify { file, certificate }) => {
            let (name, c) = ctx.complex(file)?;
            let (cname, text) = ctx.read(certificate)?;
            let cert = parse_shelled_over(&text, c.n(), field).map_err(|e| InputError(format!("{cname}: {e}")))?;
            match verify_shelled_over(&c, &cert, field) {
                Ok(v) => {
                    let (verdict, exit) = yes_no(v.is_valid(), "valid", "invalid");
                    let detail = if v.is_valid() { String::new() } else { v.to_string() };
                    ctx.record("shelled-over", &name, verdict, detail, exit);
                }
                Err(Error::FacetMismatch(m)) => ctx.record("shelled-over", &name, "invalid", m, Exit::Negative),
                Err(e) => return Err(e.into()),
            }
        }
        Command::FCheck { file } => {
            let (name, c) = ctx.complex(file)?;
            let r = if c.is_pure() { is_f_complex_pure(&c)? } else { is_f_ideal_general(&Clutter::from_complex(&c)?) };
            let (v, exit) = yes_no(r.is_f, "f-complex", "not-f-complex");
            ctx.record("f-check", &name, v, r.to_string(), exit);
        }
        Command::Dual(d) => {
            let (kind, file) = match d {
                DualCmd::C { file } => ("c", file),
                DualCmd::Alexander { file } => ("alexander", file),
                DualCmd::Newton { file } => ("newton", file),
            };
            let (name, c) = ctx.complex(file)?;
            let out = match d {
                DualCmd::C { .. } => c.complement_complex(),
                DualCmd::Alexander { .. } => c.alexander_dual()?,
                DualCmd::Newton { .. } => {
                    let dual = Clutter::from_complex(&c)?.newton_dual()?;
                    Complex::from_facets(dual.n(), dual.members().iter().copied())?
                }
            };
            ctx.record(&format!("dual.{kind}"), &name, "ok", format!("{} facets", out.num_facets()), Exit::Ok);
            ctx.report.certificate("complex", emit_complex(&out));
        }
        Command::Probe(ProbeCmd::MainTheorem { file }) => {
            let (name, c) = ctx.complex(file)?;
            let p = main_theorem_probe(&c, field);
            let (v, exit) = if p.falsified() {
                ("falsified", Exit::Falsified)
            } else if p.applicable() {
                ("consistent", Exit::Ok)
            } else {
                ("not-applicable", Exit::Ok)
            };
            ctx.record("probe.main-theorem", &name, v, p.to_string(), exit);
        }
        Command::Probe(ProbeCmd::MayerVietoris { file }) => {
            let (name, c) = ctx.complex(file)?;
            match mayer_vietoris_check(&c, field) {
                Err(Error::Precondition(m)) => {
                    ctx.record("probe.mayer-vietoris", &name, "not-applicable", m, Exit::Negative)
                }
                Err(e) => return Err(e.into()),
                Ok(r) => {
                    let detail: Vec<String> = r
                        .facets
                        .iter()
                        .map(|f| format!("{}: homology-equal={} intersection-pure={}", f.facet, f.homology_equal, f.intersection_pure))
                        .collect();
                    let (v, exit) = if r.all_ok() { ("consistent", Exit::Ok) } else { ("falsified", Exit::Falsified) };
                    ctx.record("probe.mayer-vietoris", &name, v, detail.join("\n"), exit);
                }
            }
        }
        Command::Probe(ProbeCmd::ComplementQuestion { file: Some(file), .. }) => {
            let (name, c) = ctx.complex(file)?;
            complement_probe(ctx, &name, &c)?;
        }
        Command::Probe(ProbeCmd::ComplementQuestion { file: None, samples, max_n, dim }) => {
            if !(4..=10).contains(max_n) {
                return Err(InputError("--max-n must lie in 4..=10".into()));
            }
            let shapes = sweep::shapes(*max_n, *dim);
            if shapes.is_empty() {
                return Err(InputError("no (n, d) with C(n, d) even in range".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            for i in 0..*samples {
                let (n, d) = shapes[rng.gen_range(0..shapes.len())];
                let label = format!("sample-{i} n={n} d={d}");
                match sweep::random_f_complex(&mut rng, n, d, 20_000) {
                    Some(c) => complement_probe(ctx, &label, &c)?,
                    None => ctx.record("probe.complement-question", &label, "skipped", "no f-complex sampled", Exit::Ok),
                }
            }
        }
        Command::PaperSuite { data_dir } => {
            let data = match data_dir {
                Some(dir) => ExampleData::from_dir(dir, field)?,
                None => ExampleData::bundled(field),
            };
            let suite = run_suite(&data, field);
            for c in &suite.checks {
                let exit = if c.status == Status::Fail { Exit::Negative } else { Exit::Ok };
                ctx.record(&c.name, c.input, c.status.to_string().to_lowercase(), c.detail.clone(), exit);
            }
            for n in &suite.notes {
                ctx.record("note", "", "info", n.clone(), Exit::Ok);
            }
            let summary = format!(
                "{} pass, {} fail, {} flagged",
                suite.count(Status::Pass),
                suite.count(Status::Fail),
                suite.count(Status::Flagged)
            );
            let verdict = if suite.passed() { "pass" } else { "fail" };
            ctx.record("summary", "", verdict, summary, Exit::Ok);
        }
    }
    Ok(())
}

fn complement_probe(ctx: &mut Ctx, name: &str, c: &Complex) -> Run {
    let probe = match homogeneous_complement_probe(c, ctx.budget) {
        Err(Error::Precondition(m)) => {
            ctx.record("probe.complement-question", name, "not-applicable", m, Exit::Negative);
            return Ok(());
        }
        r => r?,
    };
    let facets = probe.complement.facets().iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ");
    let (v, exit) = match probe.outcome {
        SearchOutcome::Found(_) => ("complement-shellable", Exit::Ok),
        SearchOutcome::None => ("complement-not-shellable", Exit::Ok),
        SearchOutcome::BudgetExhausted { .. } => ("unknown", Exit::BudgetExhausted),
    };
    ctx.record("probe.complement-question", name, v, format!("complement: {facets}"), exit);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let mut ctx = Ctx {
        field: cli.common.field,
        budget: cli.common.budget,
        seed: cli.common.seed,
        report: RunReport::new(command, cli.common.field),
    };
    let start = Instant::now();
    if let Err(InputError(msg)) = run(&mut ctx, &cli.command) {
        eprintln!("error: {msg}");
        return ExitCode::from(Exit::InputError as u8);
    }
    let mut report = ctx.report;
    if cli.common.timing {
        report.timing = Some(start.elapsed());
    }
    let out = match cli.common.format {
        Format::Text => report.render_text(),
        Format::JsonLines => report.render_json_lines(),
    };
    print!("{out}");
    ExitCode::from(report.exit as u8)
}
