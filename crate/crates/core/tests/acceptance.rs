//! Acceptance criteria: one PASS/FAIL line per criterion, exact arithmetic
//! throughout, each criterion timed against a 60 s budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hopf_brauer::report::{CheckRecord, Status, SuiteReport};
use hopf_brauer::suites::{run, run_suite};

const SEED: u64 = 20_240_611;
const SAMPLES: usize = 20;
const BUDGET: Duration = Duration::from_secs(60);

fn suite(id: &str) -> SuiteReport {
    run_suite(id, SEED, SAMPLES).expect("known suite")
}

fn count(r: &SuiteReport, prefix: &str) -> usize {
    r.records.iter().filter(|x| x.check_id.starts_with(prefix)).count()
}

fn first_failure(r: &SuiteReport) -> Option<String> {
    r.records
        .iter()
        .find(|x| x.status == Status::Fail)
        .map(|x| format!("{} {:?}: {}", x.check_id, x.parameters, x.payload))
}

/// All records pass and each `(prefix, minimum)` is met.
fn judge(r: &SuiteReport, minimums: &[(&str, usize)]) -> Result<String, String> {
    if let Some(f) = first_failure(r) {
        return Err(f);
    }
    let mut counts = Vec::new();
    for (prefix, min) in minimums {
        let c = count(r, prefix);
        if c < *min {
            return Err(format!("{prefix}: {c} checks, need {min}"));
        }
        counts.push(format!("{prefix}={c}"));
    }
    Ok(format!("{} records; {}", r.summary.total, counts.join(", ")))
}

fn strip(records: Vec<&CheckRecord>) -> Vec<String> {
    records
        .into_iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect()
}

type Criterion = (&'static str, Box<dyn Fn() -> Result<String, String>>);

fn criteria() -> Vec<Criterion> {
    vec![
        (
            "Hopf axioms for H4, H4*, E(2), D(H4) and the ten double relations",
            Box::new(|| {
                let r = suite("hopf");
                judge(
                    &r,
                    &[("hopf/H4/", 1), ("hopf/H4dual/", 1), ("hopf/E2/", 1), ("hopf/DH4/axioms", 1), ("hopf/DH4/relation/", 10)],
                )
            }),
        ),
        (
            "R_t quasitriangular and triangular, r_t cotriangular, (φ⊗φ)(R_t) = r_t table",
            Box::new(|| {
                let r = suite("triangular");
                judge(
                    &r,
                    &[
                        ("triangular/R_t/triangular", 20),
                        ("triangular/r_t/cotriangular", 20),
                        ("triangular/phi-push/table", 20),
                    ],
                )
            }),
        ),
        (
            "C(a;t,s): YD, det F = −(st−2a)², det G = (st−2a)², Azumaya iff 2a ≠ st, opposite, isomorphism and induced-structure biconditionals",
            Box::new(|| {
                let r = suite("c-family");
                judge(
                    &r,
                    &[
                        ("c-family/yd", 20),
                        ("c-family/determinants", 20),
                        ("c-family/azumaya-criterion", 20),
                        ("c-family/opposite", 20),
                        ("c-family/equivalence", 20),
                        ("c-family/induced-coaction", 20),
                        ("c-family/induced-action", 20),
                    ],
                )
            }),
        ),
        (
            "# products of two C's match the quaternion presentation",
            Box::new(|| judge(&suite("products"), &[("products/quaternion", 20)])),
        ),
        (
            "β = t²/(4a) in closed form and by the strongly inner witness",
            Box::new(|| judge(&suite("bm0"), &[("bm0/beta", 20)])),
        ),
        (
            "Ψ_s: (a,0,1) ↦ (a+s/2,s,1) and Φ_t: (a,1,t) ↦ (a,t,1) with structural validation",
            Box::new(|| judge(&suite("transports"), &[("transports/psi", 10), ("transports/phi", 10)])),
        ),
        (
            "automorphism twist of C(a;t,s) is C(a;αt,sα⁻¹)",
            Box::new(|| judge(&suite("aut"), &[("aut/conjugate", 20)])),
        ),
        (
            "kernel witness P: all six steps, R_N-Azumaya End(P), both strongly-inner branches fail",
            Box::new(|| {
                let r = suite("kernel");
                judge(
                    &r,
                    &[
                        ("kernel/P is a D(H4)-module", 1),
                        ("kernel/P is not an E(2)-module", 1),
                        ("kernel/End(P) over E(2)", 1),
                        ("kernel/End(P) is (E(2), R_N)-Azumaya", 1),
                        ("kernel/no strongly inner", 1),
                        ("kernel/strongly-inner-branches", 1),
                        ("kernel/g and φ(g) act alike on P ⊗ P", 1),
                    ],
                )
            }),
        ),
        (
            "(T⊗T)(ℛ) = R_N and (θ⊗θ)(R_N) = R_{λμ}",
            Box::new(|| judge(&suite("rn"), &[("rn/pushforward", 1), ("rn/theta/push", 10)])),
        ),
        (
            "ψ/F/G decompositions, inner ⇔ graded central simple corpus, non-closure demos",
            Box::new(|| {
                let r = suite("appendix");
                judge(
                    &r,
                    &[
                        ("appendix/decompositions", 50),
                        ("appendix/inner-gcs-equivalence", 10),
                        ("appendix/corpus-mixed", 1),
                        ("appendix/non-closure", 5),
                    ],
                )
            }),
        ),
        (
            "verify --suite all is deterministic",
            Box::new(|| {
                let a = run("all", SEED, SAMPLES).map_err(|e| e.to_string())?;
                let b = run("all", SEED, SAMPLES).map_err(|e| e.to_string())?;
                let (ra, rb) = (strip(a.records().collect()), strip(b.records().collect()));
                if ra != rb {
                    let i = ra.iter().zip(&rb).position(|(x, y)| x != y).unwrap_or(ra.len().min(rb.len()));
                    return Err(format!("records differ at index {i}"));
                }
                if !a.passed() {
                    return Err(format!("{} failing records", a.summary.failed));
                }
                Ok(format!("{} identical records", ra.len()))
            }),
        ),
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for (i, (name, check)) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let ok = outcome.is_ok() && elapsed < BUDGET;
        all_ok &= ok;
        let detail = match outcome {
            Ok(d) => d,
            Err(e) => e,
        };
        println!(
            "{} {:>2}. {name} [{:.2} s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
