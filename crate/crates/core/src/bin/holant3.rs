use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use holant3::arith::{QuadExt, Rat};
use holant3::classify::conditions::SolutionCheck;
use holant3::classify::falsify::DEFAULT_HEIGHT;
use holant3::classify::{dichotomy, falsify_emptiness, verify_paper_solutions, FalsifySystem};
use holant3::gadget::{closed_form, gadget_by_name, needs_parameter, GADGET_NAMES};
use holant3::grid::{cover_value, eval_brute, eval_dp};
use holant3::interp::{direct_with_d, interp_fixture, vandermonde_recover, INTERP_FIXTURE_IDS};
use holant3::io::{parse_rat, parse_signature, GridFile, SetSystemFile, SCHEMA_VERSION};
use holant3::planar::{count_pm, family_params, planar_family_eval, PlanarGraph};
use holant3::verify::{run_criterion, AcceptanceConfig, CriterionReport};

#[derive(Parser)]
#[command(name = "holant3", version, about = "Exact tools for bipartite 3-regular Holant problems Holant(f | =3)")]
struct Cli {
    /// Print a machine-readable run report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the complexity of Holant([f0, f1, f2, f3] | =3) and print the certificate.
    Classify {
        #[command(flatten)]
        signature: SigArgs,
    },
    /// Evaluate the Holant of a grid file exactly.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Leafless-cover value of a set-system file.
    Cover {
        file: PathBuf,
        /// Use the planar algorithm; the file must carry a rotation system.
        #[arg(long)]
        planar: bool,
    },
    /// Contract a named gadget with f and compare against its closed form.
    Gadget {
        name: String,
        #[command(flatten)]
        signature: SigArgs,
        /// The x or y parameter of nonlin and the absorption gadgets.
        #[arg(long, allow_hyphen_values = true)]
        param: Option<String>,
    },
    /// Recover a Holant by Vandermonde interpolation on a built-in fixture.
    InterpDemo {
        #[arg(default_value = "cycle4-2")]
        fixture: String,
    },
    /// Planar family evaluation and perfect-matching count of a planar grid file.
    PlanarCount {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true, requires = "b")]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "a")]
        b: Option<String>,
    },
    /// Run the acceptance suite or one of its parts.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Reduced sample counts.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Seeded search for solutions of a polynomial condition system.
    Falsify {
        /// One of absorb-lhs, absorb-lhs-printed, absorb-rhs, r-s, r-t-u, r-t-v, con1-con2a, con1-con2b.
        system: String,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        #[arg(long, default_value_t = holant3::classify::falsify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_HEIGHT)]
        height: i64,
    },
}

/// Entries of a symmetric ternary signature, as integers or `p/q`.
#[derive(Args)]
struct SigArgs {
    #[arg(allow_hyphen_values = true)]
    f0: String,
    #[arg(allow_hyphen_values = true)]
    f1: String,
    #[arg(allow_hyphen_values = true)]
    f2: String,
    #[arg(allow_hyphen_values = true)]
    f3: String,
}

impl SigArgs {
    fn entries(&self) -> [String; 4] {
        [self.f0.clone(), self.f1.clone(), self.f2.clone(), self.f3.clone()]
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Dp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
    Conditions,
    Gadgets,
    Solutions,
}

#[derive(Serialize)]
struct Versions {
    holant3: &'static str,
    schema: u32,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs_digest: String,
    outputs: Value,
    seconds: f64,
    versions: Versions,
}

/// What a command produced: text for the terminal, JSON for the report,
/// and whether every check it ran passed.
struct Outcome {
    text: String,
    outputs: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, outputs: Value) -> Self {
        Outcome { text, outputs, ok: true }
    }
}

/// Errors in the user's input, mapped to exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct InputError(String);

fn input<E: std::fmt::Display>(e: E) -> anyhow::Error {
    anyhow!(InputError(e.to_string()))
}

struct Digest256(Sha256);

impl Digest256 {
    fn new(command: &str) -> Self {
        let mut h = Sha256::new();
        h.update(command.as_bytes());
        Digest256(h)
    }

    fn add(&mut self, bytes: &[u8]) {
        self.0.update((bytes.len() as u64).to_le_bytes());
        self.0.update(bytes);
    }

    fn hex(self) -> String {
        self.0.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn read(path: &Path, digest: &mut Digest256) -> Result<String> {
    let s = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    digest.add(s.as_bytes());
    Ok(s)
}

fn quad_str(v: &QuadExt) -> String {
    v.to_string()
}

fn signature(args: &[String], digest: &mut Digest256) -> Result<holant3::signature::SymSig3> {
    for a in args {
        digest.add(a.as_bytes());
    }
    parse_signature(args).map_err(input)
}

fn rational(s: &str, digest: &mut Digest256) -> Result<Rat> {
    digest.add(s.as_bytes());
    parse_rat(s).map_err(input)
}

fn classify(args: &[String], d: &mut Digest256) -> Result<Outcome> {
    let f = signature(args, d)?;
    let v = dichotomy(&f);
    let mut text = format!("{v}\n");
    if let Some(cert) = v.certificate() {
        text.push_str(&cert.to_string());
    }
    Ok(Outcome::ok(text, json!({ "signature": f.to_string(), "verdict": v })))
}

fn eval(file: &Path, method: Method, d: &mut Digest256) -> Result<Outcome> {
    let src = read(file, d)?;
    let (f, g) = GridFile::from_json(&src).and_then(|g| g.to_grid()).map_err(input)?;
    let v = match method {
        Method::Brute => eval_brute(&g),
        Method::Dp => eval_dp(&g),
    }
    .map_err(input)?;
    Ok(Outcome::ok(
        format!("{v}\n"),
        json!({ "signature": f.to_string(), "edges": g.edges.len(), "value": quad_str(&v) }),
    ))
}

fn cover(file: &Path, planar: bool, d: &mut Digest256) -> Result<Outcome> {
    let src = read(file, d)?;
    let sf = SetSystemFile::from_json(&src).map_err(input)?;
    let s = sf.to_system().map_err(input)?;
    if !planar {
        let v = cover_value(&s).map_err(input)?;
        return Ok(Outcome::ok(format!("{v}\n"), json!({ "sets": s.sets.len(), "value": v.to_string() })));
    }
    if sf.rotation.is_none() {
        return Err(input("--planar needs a \"rotation\" field in the set-system file"));
    }
    let g = sf.to_grid().map_err(input)?;
    let (a, b) = family_params(&holant3::grid::cover_signature()).expect("cover signature is in the planar family");
    let e = planar_family_eval(&a, &b, &g).map_err(input)?;
    Ok(Outcome::ok(
        format!("{}\n", e.value),
        json!({ "sets": s.sets.len(), "value": e.value.to_string(), "planar": e }),
    ))
}

fn gadget(name: &str, args: &[String], param: Option<&str>, d: &mut Digest256) -> Result<Outcome> {
    d.add(name.as_bytes());
    if !GADGET_NAMES.contains(&name) {
        return Err(input(format!("unknown gadget '{name}'; known: {}", GADGET_NAMES.join(", "))));
    }
    let f = signature(args, d)?;
    let p = match (needs_parameter(name), param) {
        (true, Some(s)) => Some(QuadExt::from(rational(s, d)?)),
        (true, None) => return Err(input(format!("gadget {name} needs --param"))),
        (false, Some(_)) => return Err(input(format!("gadget {name} takes no parameter"))),
        (false, None) => None,
    };
    let sig = gadget_by_name(name, p.as_ref())
        .and_then(|g| g.contract(&f))
        .map_err(input)?;
    let closed = closed_form(name, &f, p.as_ref()).map_err(input)?;
    let agrees = sig.dense.values == closed.values;
    let shown = if let Some(s) = sig.as_sym3() {
        s.to_string()
    } else if let Some(m) = sig.as_matrix() {
        m.to_string()
    } else if let Some(u) = sig.as_unary() {
        format!("[{}, {}]", u.0[0], u.0[1])
    } else {
        sig.dense.to_string()
    };
    let mut text = format!("{shown}\n");
    if !agrees {
        text.push_str(&format!("closed form disagrees: {closed}\n"));
    }
    Ok(Outcome {
        text,
        outputs: json!({
            "gadget": name,
            "signature": f.to_string(),
            "output": shown,
            "values": sig.dense.values.iter().map(quad_str).collect::<Vec<_>>(),
            "closed_form_agrees": agrees,
        }),
        ok: agrees,
    })
}

fn interp_demo(id: &str, d: &mut Digest256) -> Result<Outcome> {
    d.add(id.as_bytes());
    let fx = interp_fixture(id)
        .ok_or_else(|| input(format!("unknown fixture '{id}'; known: {}", INTERP_FIXTURE_IDS.join(", "))))?;
    let rec = vandermonde_recover(&fx.grid, &fx.slots, &fx.f)?;
    let direct = direct_with_d(&fx.grid, &fx.slots, &fx.f)?;
    let ok = rec.recovered == direct;
    let mut text = format!("fixture {id}: f = {}, {} slots\n", fx.f, fx.slots.len());
    for (i, x) in rec.nodes.iter().enumerate() {
        text.push_str(&format!("  node {i}: {x}\n"));
    }
    let n = fx.slots.len();
    for (i, c) in rec.coefficients.iter().enumerate() {
        text.push_str(&format!("  c[{i},{}] = {c}\n", n - i));
    }
    text.push_str(&format!("recovered {}\ndirect    {direct}\n", rec.recovered));
    text.push_str(if ok { "equal\n" } else { "NOT equal\n" });
    Ok(Outcome {
        text,
        outputs: json!({ "fixture": id, "recovery": rec, "direct": quad_str(&direct), "equal": ok }),
        ok,
    })
}

fn planar_count(file: &Path, a: Option<&str>, b: Option<&str>, d: &mut Digest256) -> Result<Outcome> {
    let src = read(file, d)?;
    let gf = GridFile::from_json(&src).map_err(input)?;
    if gf.rotation.is_none() {
        return Err(input("planar-count needs a grid file with a \"rotation\" field"));
    }
    let (f, g) = gf.to_grid().map_err(input)?;
    let (a, b) = match (a, b) {
        (Some(a), Some(b)) => (rational(a, d)?, rational(b, d)?),
        _ => family_params(&f).ok_or_else(|| {
            input(format!("{f} is not of the form [3a+b, -a-b, -a+b, 3a-b]; pass --a and --b"))
        })?,
    };
    let graph = PlanarGraph::from_grid(&g).map_err(input)?;
    let pm = count_pm(&graph).map_err(input)?;
    let e = planar_family_eval(&a, &b, &g).map_err(input)?;
    Ok(Outcome::ok(
        format!("{}\nperfect matchings: {pm}\n", e.value),
        json!({ "a": a.to_string(), "b": b.to_string(), "evaluation": e }),
    ))
}

fn print_criterion(r: &CriterionReport, text: &mut String) {
    text.push_str(&r.summary());
    text.push('\n');
    for f in r.failures.iter().take(10) {
        text.push_str(&format!("    failure: {f}\n"));
    }
    for n in &r.notes {
        text.push_str(&format!("    note: {n}\n"));
    }
}

fn solution_line(c: &SolutionCheck) -> String {
    format!(
        "{} {} at {}: satisfied = {}, expected {}",
        if c.passed() { "ok  " } else { "FAIL" },
        c.system,
        c.point,
        c.satisfied,
        c.expected
    )
}

fn verify(suite: Suite, quick: bool, seed: Option<u64>, d: &mut Digest256) -> Result<Outcome> {
    let mut cfg = if quick { AcceptanceConfig::quick() } else { AcceptanceConfig::default() };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    d.add(serde_json::to_string(&cfg)?.as_bytes());
    if let Suite::Solutions = suite {
        let report = verify_paper_solutions();
        let text: String = report.checks.iter().map(|c| solution_line(c) + "\n").collect();
        return Ok(Outcome {
            text,
            ok: report.passed(),
            outputs: json!({ "checks": report.checks, "passed": report.passed() }),
        });
    }
    let ids: &[u8] = match suite {
        Suite::All => &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        Suite::Conditions => &[8],
        Suite::Gadgets => &[1, 2],
        Suite::Solutions => unreachable!(),
    };
    let mut text = format!("seed {}\n", cfg.seed);
    let mut reports = Vec::new();
    for &id in ids {
        let r = run_criterion(id, &cfg).expect("known criterion");
        print_criterion(&r, &mut text);
        reports.push(r);
    }
    let ok = reports.iter().all(|r| r.passed);
    Ok(Outcome {
        text,
        outputs: json!({ "config": cfg, "criteria": reports, "passed": ok }),
        ok,
    })
}

fn falsify(system: &str, samples: usize, seed: u64, height: i64, d: &mut Digest256) -> Result<Outcome> {
    let sys = FalsifySystem::from_name(system).ok_or_else(|| {
        let names: Vec<&str> = FalsifySystem::ALL.iter().map(|s| s.name()).collect();
        input(format!("unknown system '{system}'; known: {}", names.join(", ")))
    })?;
    if height < 1 {
        bail!(InputError("--height must be at least 1".into()));
    }
    d.add(format!("{system} {samples} {seed} {height}").as_bytes());
    let r = falsify_emptiness(sys, samples, height, seed);
    let mut text = format!(
        "{}: {} samples, seed {}, height {}\nstrategy: {}\nsatisfying samples: {} ({} on expected solutions)\n",
        r.system, r.samples, r.seed, r.height, r.strategy, r.hit_samples, r.expected_hit_samples
    );
    for h in &r.hits {
        let tag = if h.expected { "expected" } else { "NEW" };
        text.push_str(&format!("  {tag} {}: {}\n", h.point, h.detail));
    }
    if r.encoding_mismatches > 0 {
        text.push_str(&format!("encoding mismatches: {}\n", r.encoding_mismatches));
    }
    let ok = r.clean();
    Ok(Outcome {
        text,
        outputs: serde_json::to_value(&r)?,
        ok,
    })
}

fn run(cli: &Cli) -> Result<(String, Outcome)> {
    let (name, mut d) = match &cli.command {
        Command::Classify { .. } => ("classify", Digest256::new("classify")),
        Command::Eval { .. } => ("eval", Digest256::new("eval")),
        Command::Cover { .. } => ("cover", Digest256::new("cover")),
        Command::Gadget { .. } => ("gadget", Digest256::new("gadget")),
        Command::InterpDemo { .. } => ("interp-demo", Digest256::new("interp-demo")),
        Command::PlanarCount { .. } => ("planar-count", Digest256::new("planar-count")),
        Command::Verify { .. } => ("verify", Digest256::new("verify")),
        Command::Falsify { .. } => ("falsify", Digest256::new("falsify")),
    };
    let out = match &cli.command {
        Command::Classify { signature } => classify(&signature.entries(), &mut d),
        Command::Eval { file, method } => eval(file, *method, &mut d),
        Command::Cover { file, planar } => cover(file, *planar, &mut d),
        Command::Gadget { name, signature, param } => gadget(name, &signature.entries(), param.as_deref(), &mut d),
        Command::InterpDemo { fixture } => interp_demo(fixture, &mut d),
        Command::PlanarCount { file, a, b } => planar_count(file, a.as_deref(), b.as_deref(), &mut d),
        Command::Verify { suite, quick, seed } => verify(*suite, *quick, *seed, &mut d),
        Command::Falsify {
            system,
            samples,
            seed,
            height,
        } => falsify(system, *samples, *seed, *height, &mut d),
    }
    .with_context(|| format!("holant3 {name}"))?;
    Ok((d.hex(), out))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t0 = Instant::now();
    match run(&cli) {
        Ok((digest, out)) => {
            if cli.json {
                let report = RunReport {
                    command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
                    inputs_digest: digest,
                    outputs: out.outputs,
                    seconds: t0.elapsed().as_secs_f64(),
                    versions: Versions {
                        holant3: env!("CARGO_PKG_VERSION"),
                        schema: SCHEMA_VERSION,
                    },
                };
                emit(&(serde_json::to_string_pretty(&report).expect("serializable report") + "\n"));
            } else {
                emit(&out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.chain().any(|c| c.downcast_ref::<InputError>().is_some()) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
