mod cache;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hopf_brauer::e2::{kernel_witness, not_subgroup_demo, theorem61_check, with_rn};
use hopf_brauer::error::Error;
use hopf_brauer::io::{Definition, NamedDefinition};
use hopf_brauer::rational::Rational;
use hopf_brauer::report::Status;
use hopf_brauer::suites::{self, DEFAULT_SAMPLES};
use hopf_brauer::sweedler::{
    aut_conjugate, build_c, c_canonical, c_membership, c_product, classify_bm0, intersection_report, phi_inverse,
    phi_transport, psi_inverse, psi_transport, CDescriptor, ImageMembership,
};
use hopf_brauer::yd::{is_h_azumaya, sharp_product, YdAlgebra};

#[derive(Parser)]
#[command(name = "hopf-brauer", version, about = "Exact checks for Hopf algebras, YD algebras and their Brauer classes")]
struct Cli {
    /// Also write the machine-readable result to this file
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Seed for sampled parameters
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Minimum number of samples per randomized check
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load an algebra, Hopf or YD definition, check its axioms and cache it
    Define {
        file: PathBuf,
        /// Cache name (defaults to the file's "name" field, then its stem)
        #[arg(long)]
        name: Option<String>,
    },
    /// Run verification suites
    Verify {
        /// Suite id, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Azumaya status, normal form, image membership and BM_0 invariant of C(a;t,s)
    Classify {
        #[command(flatten)]
        d: Triple,
    },
    /// Quaternion presentation of C(a;t,s) # C(a';t',s')
    Product {
        #[command(flatten)]
        left: Triple,
        #[arg(allow_hyphen_values = true)]
        a2: Rational,
        #[arg(allow_hyphen_values = true)]
        t2: Rational,
        #[arg(allow_hyphen_values = true)]
        s2: Rational,
    },
    /// Twist C(a;t,s) by the Hopf automorphism g ↦ g, h ↦ αh
    Conjugate {
        #[command(flatten)]
        d: Triple,
        #[arg(allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// Ψ_s on (a,0,1) or Φ on (a,1,t)
    Transport {
        kind: TransportKind,
        #[command(flatten)]
        d: Triple,
        /// The parameter s of Ψ_s
        #[arg(long, allow_hyphen_values = true)]
        by: Option<Rational>,
        /// Apply the inverse transport
        #[arg(long)]
        inverse: bool,
    },
    /// Which images of i and ι meet, for the parameters t and s
    Intersect {
        #[arg(allow_hyphen_values = true)]
        t: Rational,
        #[arg(allow_hyphen_values = true)]
        s: Rational,
    },
    /// Build and verify the D(H4)-module P and End(P)
    KernelWitness,
    /// C(1;t,2) # C(1;1,q): Azumaya, not graded central simple
    Counterexample {
        #[arg(allow_hyphen_values = true)]
        t: Rational,
        #[arg(allow_hyphen_values = true)]
        q: Rational,
    },
    /// Inner x1, x2 actions versus graded central simplicity for an E(2)-algebra
    Theorem61 {
        /// A definition file, or the name of a cached definition
        algebra: String,
    },
}

#[derive(clap::Args)]
struct Triple {
    #[arg(allow_hyphen_values = true)]
    a: Rational,
    #[arg(allow_hyphen_values = true)]
    t: Rational,
    #[arg(allow_hyphen_values = true)]
    s: Rational,
}

impl Triple {
    fn descriptor(&self) -> CDescriptor {
        CDescriptor::new(self.a.clone(), self.t.clone(), self.s.clone())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TransportKind {
    Psi,
    Phi,
}

/// Text for the terminal, JSON for `--json`, and whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

enum Failure {
    /// bad input or usage: exit 2
    Input(String),
    /// a mathematical check failed: exit 1
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) | Error::Axioms(_) => Failure::Check(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn membership_text(m: &ImageMembership, name: &str) -> String {
    match m {
        ImageMembership::Never => format!("not in any Im({name}_l)"),
        ImageMembership::Unique(l) => format!("Im({name}_{l})"),
        ImageMembership::All => format!("Im({name}_l) for every l"),
    }
}

fn classify(d: &CDescriptor) -> CmdResult {
    let azumaya = is_h_azumaya(&build_c(d));
    let canonical = c_canonical(d);
    let mut text = String::new();
    let mut out = json!({"descriptor": d, "azumaya": azumaya, "canonical": canonical});
    if !azumaya {
        writeln!(text, "{d} is not H4-Azumaya: 2a = st").ok();
        return Ok(Outcome { text, json: out, ok: true });
    }
    writeln!(text, "{d}: azumaya, canonical form {canonical}").ok();
    let m = c_membership(d)?;
    writeln!(text, "images: {}, {}", membership_text(&m.i, "i"), membership_text(&m.iota, "ι")).ok();
    out["membership"] = serde_json::to_value(&m).unwrap_or(Value::Null);
    if d.s.is_zero() && d.t.is_zero() {
        writeln!(text, "BW-type: β = 0, square class {}", d.a.square_class().map(|k| k.to_string()).unwrap_or_default()).ok();
        out["bm0"] = json!({"beta": "0", "square_class": d.a.square_class().map(|k| k.to_string())});
    } else if d.s.is_zero() {
        let inv = classify_bm0(d)?;
        writeln!(text, "BM_0 invariant: β = {}, square class {}", inv.beta, inv.square_class).ok();
        out["bm0"] = serde_json::to_value(&inv).unwrap_or(Value::Null);
    }
    Ok(Outcome { text, json: out, ok: true })
}

fn product(d1: &CDescriptor, d2: &CDescriptor) -> CmdResult {
    let p = c_product(d1, d2)?;
    let built = sharp_product(&build_c(d1), &build_c(d2))?;
    let mut text = String::new();
    writeln!(text, "{d1} # {d2}, X = x#1, Y = 1#y").ok();
    writeln!(text, "X² = {}, Y² = {}, XY + YX = {}", p.x_squared, p.y_squared, p.anticommutator).ok();
    writeln!(text, "h·X = {}, h·Y = {}", p.h_on_x, p.h_on_y).ok();
    writeln!(text, "ρ(X) = X⊗g + {}·1⊗h, ρ(Y) = Y⊗g + {}·1⊗h", p.rho_x, p.rho_y).ok();
    let alg = &built.alg;
    let table: Vec<Vec<Vec<String>>> = (0..alg.dim())
        .map(|i| {
            (0..alg.dim())
                .map(|j| alg.basis_product_vec(i, j).iter().map(|c| c.to_string()).collect())
                .collect()
        })
        .collect();
    let json = json!({
        "left": d1, "right": d2, "presentation": p,
        "basis": alg.labels(), "mult": table,
    });
    Ok(Outcome { text, json, ok: true })
}

fn conjugate(d: &CDescriptor, alpha: &Rational) -> CmdResult {
    let out = aut_conjugate(d, alpha)?;
    Ok(Outcome {
        text: format!("{d} twisted by α = {alpha} is {out}\n"),
        json: json!({"input": d, "alpha": alpha, "output": out}),
        ok: true,
    })
}

fn transport(kind: TransportKind, d: &CDescriptor, by: Option<&Rational>, inverse: bool) -> CmdResult {
    let (name, out) = match (kind, inverse) {
        (TransportKind::Psi, inv) => {
            let s = by.ok_or_else(|| Failure::Input("transport psi needs --by <s>".into()))?;
            let out = if inv { psi_inverse(d, s)? } else { psi_transport(d, s)? };
            (format!("Ψ_{s}"), out)
        }
        (TransportKind::Phi, false) => ("Φ".to_string(), phi_transport(d)?),
        (TransportKind::Phi, true) => ("Φ".to_string(), phi_inverse(d)?),
    };
    let arrow = if inverse { "⁻¹" } else { "" };
    Ok(Outcome {
        text: format!("{name}{arrow}: {d} ↦ {out}\n"),
        json: json!({"transport": name, "inverse": inverse, "input": d, "output": out}),
        ok: true,
    })
}

fn intersect(t: &Rational, s: &Rational) -> CmdResult {
    let r = intersection_report(t, s)?;
    let mut text = String::new();
    for (what, v) in [
        ("Im(i_t) ∩ Im(ι_s)", &r.i_vs_iota),
        ("Im(i_t) ∩ Im(i_s)", &r.i_vs_i),
        ("Im(ι_t) ∩ Im(ι_s)", &r.iota_vs_iota),
    ] {
        let verdict = match &v.witness {
            Some(w) => format!("nontrivial, contains [{w}]"),
            None => "only BW classes".to_string(),
        };
        writeln!(text, "{what} ({}): {verdict}", v.predicate).ok();
    }
    Ok(Outcome {
        text,
        json: serde_json::to_value(&r).unwrap_or(Value::Null),
        ok: true,
    })
}

fn kernel() -> CmdResult {
    let k = kernel_witness()?;
    let text = format!(
        "P: u = {:?}, w = {:?}, U = {:?}, W = {:?}\n{}",
        k.u.to_rows(),
        k.w.to_rows(),
        k.big_u.to_rows(),
        k.big_w.to_rows(),
        k.report
    );
    Ok(Outcome {
        text,
        json: serde_json::to_value(&k).unwrap_or(Value::Null),
        ok: k.report.passed(),
    })
}

fn counterexample(t: &Rational, q: &Rational) -> CmdResult {
    let r = not_subgroup_demo(t, q)?;
    let mut text = format!("C(1;{t},2) # C(1;1,{q}) over (E(2), R_N)\n{}", r.report);
    let verdict = if r.closure_fails { "closure fails" } else { "inconclusive" };
    writeln!(text, "odd super-central witness: X − Y\nverdict: {verdict}\n{}", r.justification).ok();
    Ok(Outcome {
        ok: r.closure_fails,
        json: serde_json::to_value(&r).unwrap_or(Value::Null),
        text,
    })
}

fn e2_algebra(def: NamedDefinition) -> Result<YdAlgebra, Failure> {
    let e2 = hopf_brauer::e2::e2_arc();
    let module = match &def.definition {
        Definition::ModuleAlgebra(m) => m.clone(),
        Definition::Yd(y) => y.module(),
        other => return Err(Failure::Input(format!("expected a module_algebra or yd definition, got {}", other.kind()))),
    };
    if *module.hopf != *e2 {
        return Err(Failure::Input("theorem61 needs an algebra over E2".into()));
    }
    let yd = with_rn(&module);
    if let Definition::Yd(given) = &def.definition {
        if given.coaction != yd.coaction {
            return Err(Failure::Input("the coaction is not the one induced by R_N".into()));
        }
    }
    let report = yd.check();
    if !report.passed() {
        return Err(Failure::Check(format!("not a YD algebra over (E(2), R_N):\n{report}")));
    }
    Ok(yd)
}

fn theorem61(algebra: &str) -> CmdResult {
    let def = cache::load(algebra)?;
    let yd = e2_algebra(def)?;
    let r = theorem61_check(&yd)?;
    if !r.azumaya {
        return Err(Failure::Input("the algebra is not (E(2), R_N)-Azumaya".into()));
    }
    let yes = |b: bool| if b { "yes" } else { "no" };
    let opt = |b: Option<bool>| b.map(yes).unwrap_or("undecided");
    let mut text = String::new();
    writeln!(text, "x1-action inner:            {}", yes(r.x1_inner)).ok();
    writeln!(text, "x2-action inner:            {}", yes(r.x2_inner)).ok();
    writeln!(text, "graded central simple:      {}", yes(r.graded_central_simple)).ok();
    writeln!(text, "the three agree:            {}", yes(r.equivalent)).ok();
    writeln!(text, "E(2)-action inner:          {}", opt(r.e2_inner)).ok();
    writeln!(text, "central simple:             {}", yes(r.central_simple)).ok();
    writeln!(text, "strongly inner:             {}", opt(r.strongly_inner)).ok();
    Ok(Outcome {
        ok: r.equivalent && r.addendum_consistent != Some(false),
        json: serde_json::to_value(&r).unwrap_or(Value::Null),
        text,
    })
}

fn define(file: &PathBuf, name: Option<&str>) -> CmdResult {
    let text = std::fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let def = hopf_brauer::io::parse_definition(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let report = def.definition.validate();
    let name = name
        .map(str::to_string)
        .or_else(|| def.name.clone())
        .or_else(|| file.file_stem().map(|s| s.to_string_lossy().into_owned()))
        .unwrap_or_else(|| "unnamed".into());
    let mut out = format!("{} ({}-dimensional {})\n{report}", name, dim(&def.definition), def.definition.kind());
    let ok = report.passed();
    if ok {
        let path = cache::store(&name, &def)?;
        writeln!(out, "cached as {name} at {}", path.display()).ok();
    }
    Ok(Outcome {
        text: out,
        json: json!({"name": name, "kind": def.definition.kind(), "report": report}),
        ok,
    })
}

fn dim(d: &Definition) -> usize {
    match d {
        Definition::Algebra(a) => a.dim(),
        Definition::Hopf(h) => h.dim(),
        Definition::ModuleAlgebra(m) => m.dim(),
        Definition::Yd(y) => y.dim(),
    }
}

fn verify(suite: &str, seed: u64, samples: usize) -> CmdResult {
    let report = suites::run(suite, seed, samples)?;
    let mut text = String::new();
    for s in &report.suites {
        let status = if s.passed() { "pass" } else { "FAIL" };
        writeln!(
            text,
            "{:<12} {status}  {}/{} checks  ({} ms)",
            s.suite, s.summary.passed, s.summary.total, s.elapsed_ms
        )
        .ok();
        for r in s.records.iter().filter(|r| r.status == Status::Fail) {
            writeln!(text, "    {} {:?}: {}", r.check_id, r.parameters, r.payload).ok();
        }
    }
    writeln!(text, "seed {seed}, {} of {} checks passed", report.summary.passed, report.summary.total).ok();
    Ok(Outcome {
        ok: report.passed(),
        json: serde_json::to_value(&report).unwrap_or(Value::Null),
        text,
    })
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Define { file, name } => define(file, name.as_deref()),
        Command::Verify { suite } => verify(suite, cli.seed, cli.samples),
        Command::Classify { d } => classify(&d.descriptor()),
        Command::Product { left, a2, t2, s2 } => {
            product(&left.descriptor(), &CDescriptor::new(a2.clone(), t2.clone(), s2.clone()))
        }
        Command::Conjugate { d, alpha } => conjugate(&d.descriptor(), alpha),
        Command::Transport { kind, d, by, inverse } => transport(*kind, &d.descriptor(), by.as_ref(), *inverse),
        Command::Intersect { t, s } => intersect(t, s),
        Command::KernelWitness => kernel(),
        Command::Counterexample { t, q } => counterexample(t, q),
        Command::Theorem61 { algebra } => theorem61(algebra),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if let Some(path) = &cli.json {
                let body = serde_json::to_string_pretty(&outcome.json).expect("values serialize");
                if let Err(e) = std::fs::write(path, body + "\n") {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
    }
}
