use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use matchcut::generate::{generate, Family};
use matchcut::hardness::{reduce_vc_to_3p3free, reduce_vc_to_bipartite, VertexCoverInstance};
use matchcut::pattern::{recognize, ClassLabel};
use matchcut::selftest::{run_suite, Fault, SelftestConfig, SUITES};
use matchcut::{load_graph, solve_with, verify_matching_cut, Certificate, Graph, Outcome, SolverChoice};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NO_CUT: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "matchcut", version, about = "Exact minimum matching cuts")]
struct Cli {
    /// Emit the report as one JSON object instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a minimum matching cut.
    ///
    /// `auto` tries, in order: the S_{1,1,2}-free solver; the (P6+P4)-free
    /// solver when the graph contains an induced P6; the P7-free solver; a
    /// dominating set of at most 6 vertices (graphs up to 64 vertices);
    /// brute force (up to 25 vertices).
    Solve {
        graph: PathBuf,
        #[arg(long, default_value = "auto")]
        solver: SolverChoice,
        /// Write the colouring and cut edges here.
        #[arg(long)]
        emit_certificate: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        /// Claimed size; defaults to the certificate's `value` line, then to
        /// its number of cut edges.
        #[arg(long)]
        value: Option<usize>,
    },
    /// Report which graph classes the input belongs to.
    Recognize { graph: PathBuf },
    /// Radius, diameter and eccentricities.
    Metrics { graph: PathBuf },
    /// Build the matching-cut gadget for a Vertex Cover instance.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        bipartite: bool,
        /// Gadget output file; without it the gadget goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a graph family, e.g. `gen cycle 6` or `gen gnp 10 0.3`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        family: Vec<String>,
        /// Seed for random families that omit one (MATCHCUT_SEED overrides).
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the oracle suites.
    Selftest {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// MATCHCUT_SEED overrides.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run only these suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Deliberately break a solver, e.g. `off-by-one:p7`.
        #[arg(long)]
        inject_fault: Option<Fault>,
        /// Write each suite's counterexample to `<dir>/<suite>.txt`.
        #[arg(long)]
        counterexample_dir: Option<PathBuf>,
    },
}

/// Ordered key/value report.
struct Report {
    fields: Vec<(&'static str, Value)>,
    json: bool,
}

impl Report {
    fn new(json: bool, command: String) -> Self {
        Report { fields: vec![("command", Value::String(command))], json }
    }

    fn add(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    fn print(&self) {
        if self.json {
            let map: Map<String, Value> = self.fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            println!("{}", Value::Object(map));
        } else {
            for (k, v) in &self.fields {
                match v {
                    Value::String(s) => println!("{k}: {s}"),
                    other => println!("{k}: {other}"),
                }
            }
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure { code: EXIT_INPUT, message: message.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<(Graph, String), Failure> {
    let text = read(path)?;
    let g = load_graph(&text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    Ok((g, digest(&text)))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn digest(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn seed_override(seed: u64) -> Result<u64, Failure> {
    match std::env::var("MATCHCUT_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure { code: EXIT_USAGE, message: format!("MATCHCUT_SEED `{s}` is not an integer") }),
        Err(_) => Ok(seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(cli, echo) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli, echo: String) -> Result<u8, Failure> {
    let mut rep = Report::new(cli.json, echo);
    let start = Instant::now();
    let code = match cli.command {
        Command::Solve { graph, solver, emit_certificate } => cmd_solve(&mut rep, &graph, solver, emit_certificate.as_deref())?,
        Command::Verify { graph, certificate, value } => cmd_verify(&mut rep, &graph, &certificate, value)?,
        Command::Recognize { graph } => {
            let (g, sum) = read_graph(&graph)?;
            rep.add("input_sha256", sum);
            let labels = recognize(&g);
            for l in ClassLabel::ALL {
                rep.add(l.as_str(), labels.contains(&l));
            }
            EXIT_OK
        }
        Command::Metrics { graph } => {
            let (g, sum) = read_graph(&graph)?;
            let m = g.metrics().map_err(input_error)?;
            rep.add("input_sha256", sum);
            rep.add("n", g.n());
            rep.add("m", g.m());
            rep.add("radius", m.radius);
            rep.add("diameter", m.diameter);
            if cli.json {
                rep.add("eccentricity", m.eccentricity);
            } else {
                let e: Vec<String> = m.eccentricity.iter().map(ToString::to_string).collect();
                rep.add("eccentricity", e.join(" "));
            }
            EXIT_OK
        }
        Command::Reduce { graph, k, bipartite, out } => {
            let (h, sum) = read_graph(&graph)?;
            let inst = VertexCoverInstance::new(h, k).map_err(input_error)?;
            let gadget = if bipartite { reduce_vc_to_bipartite(&inst) } else { reduce_vc_to_3p3free(&inst) }
                .map_err(input_error)?;
            let text = gadget.to_text();
            match &out {
                Some(p) => write(p, &text)?,
                None => {
                    print!("{text}");
                    return Ok(EXIT_OK);
                }
            }
            rep.add("input_sha256", sum);
            rep.add("output", out.expect("checked above").display().to_string());
            rep.add("bipartite", bipartite);
            rep.add("n", gadget.graph.n());
            rep.add("m", gadget.graph.m());
            rep.add("interval", format!("{} {}", gadget.lo, gadget.hi));
            EXIT_OK
        }
        Command::Gen { family, seed, out } => {
            let fam = parse_family(&family, seed_override(seed)?)?;
            let graphs = generate(&fam).map_err(|e| Failure { code: EXIT_USAGE, message: e.to_string() })?;
            let mut text = String::new();
            if graphs.len() == 1 {
                text.push_str(&graphs[0].to_edge_list());
            } else {
                for (i, g) in graphs.iter().enumerate() {
                    text.push_str(&format!("# graph {i}\n{}", g.to_edge_list()));
                }
            }
            match out {
                Some(p) => {
                    write(&p, &text)?;
                    rep.add("family", fam.to_string());
                    rep.add("graphs", graphs.len());
                    rep.add("output", p.display().to_string());
                }
                None => {
                    print!("{text}");
                    return Ok(EXIT_OK);
                }
            }
            EXIT_OK
        }
        Command::Selftest { max_n, samples, seed, suites, inject_fault, counterexample_dir } => {
            let cfg = SelftestConfig { max_n, samples, seed: seed_override(seed)?, fault: inject_fault, ..SelftestConfig::default() };
            let names: Vec<String> = if suites.is_empty() { SUITES.iter().map(|s| s.to_string()).collect() } else { suites };
            let mut failed = false;
            rep.add("seed", cfg.seed);
            for name in &names {
                let r = run_suite(name, &cfg).ok_or_else(|| Failure {
                    code: EXIT_USAGE,
                    message: format!("unknown suite `{name}` (known: {})", SUITES.join(", ")),
                })?;
                failed |= !r.passed();
                rep.add(r.name, format!("{} checked={} failures={}", if r.passed() { "pass" } else { "FAIL" }, r.checked, r.failures));
                if let Some(ce) = &r.counterexample {
                    match &counterexample_dir {
                        Some(dir) => {
                            fs::create_dir_all(dir).map_err(|e| input_error(format!("{}: {e}", dir.display())))?;
                            write(&dir.join(format!("{}.txt", r.name)), &ce.to_string())?;
                        }
                        None => eprint!("counterexample for {}:\n{ce}", r.name),
                    }
                }
            }
            rep.add("result", if failed { "FAIL" } else { "pass" });
            if failed {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            }
        }
    };
    rep.add("wall_time_ms", start.elapsed().as_millis() as u64);
    rep.print();
    Ok(code)
}

/// Random families may omit their trailing seed.
fn parse_family(tokens: &[String], seed: u64) -> Result<Family, Failure> {
    let mut toks = tokens.join(" ");
    let needs_seed = match tokens.first().map(String::as_str) {
        Some("gnp") => tokens.len() == 3,
        Some("cograph") => tokens.len() == 2,
        _ => false,
    };
    if needs_seed {
        toks.push_str(&format!(" {seed}"));
    }
    toks.parse().map_err(|e: matchcut::GraphError| Failure { code: EXIT_USAGE, message: e.to_string() })
}

fn cmd_solve(rep: &mut Report, path: &Path, solver: SolverChoice, cert: Option<&Path>) -> Result<u8, Failure> {
    let (g, sum) = read_graph(path)?;
    rep.add("input_sha256", sum);
    let r = solve_with(&g, solver).map_err(input_error)?;
    rep.add("solver", r.solver.clone());
    let code = match &r.outcome {
        Outcome::NoCut => {
            rep.add("outcome", "no matching cut");
            EXIT_NO_CUT
        }
        Outcome::Cut { value, colouring, .. } => {
            rep.add("outcome", "cut");
            rep.add("value", *value);
            if let Some(p) = cert {
                let c = Certificate::from_colouring(&g, colouring).map_err(input_error)?;
                write(p, &c.to_text())?;
                rep.add("certificate", p.display().to_string());
            }
            EXIT_OK
        }
    };
    rep.add("branches", r.stats.branches);
    rep.add("propagations", r.stats.propagations);
    rep.add("firings", r.stats.firings);
    rep.add("claim_violations", r.stats.claim_violations);
    rep.add("fallbacks", r.stats.fallbacks);
    Ok(code)
}

fn cmd_verify(rep: &mut Report, graph: &Path, cert: &Path, value: Option<usize>) -> Result<u8, Failure> {
    let (g, sum) = read_graph(graph)?;
    rep.add("input_sha256", sum);
    let c = Certificate::parse(&read(cert)?).map_err(|e| input_error(format!("{}: {e}", cert.display())))?;
    let claimed = value.or(c.value).unwrap_or(c.cut.len());
    rep.add("claimed", claimed);
    let verdict = match c.matching_cut() {
        Ok(m) if c.colouring.len() == g.n() => verify_matching_cut(&g, &m, claimed),
        Ok(_) => matchcut::Verdict::Reject(format!("certificate has {} vertices, graph {}", c.colouring.len(), g.n())),
        Err(e) => matchcut::Verdict::Reject(e.to_string()),
    };
    rep.add("verdict", verdict.to_string());
    Ok(if verdict.is_accept() { EXIT_OK } else { EXIT_CHECK_FAILED })
}
