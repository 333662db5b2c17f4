//! One line per acceptance criterion: exhaustive oracle checks at the stated
//! scales, each within its time budget. Lines go straight to stderr so they
//! show up without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use multitree::verify::{run_suite, Suite, VerifyConfig};

struct Criterion {
    id: u32,
    name: &'static str,
    suite: Suite,
    max_vertices: usize,
    max_d: usize,
    budget: Duration,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, name: "unitype baseline, n <= 7", suite: Suite::Unitype, max_vertices: 7, max_d: 1, budget: Duration::from_secs(5) },
    Criterion { id: 2, name: "multitype gf equals tree monomial sum, sum n_t <= 8, d <= 3", suite: Suite::Gf, max_vertices: 8, max_d: 3, budget: Duration::from_secs(120) },
    Criterion { id: 3, name: "Laplacian minor equals skeleton sum, d in 2..=5", suite: Suite::Determinant, max_vertices: 0, max_d: 5, budget: Duration::from_secs(5) },
    Criterion { id: 4, name: "forest gf equals forest count, sum n_t <= 6, d <= 2", suite: Suite::Forests, max_vertices: 6, max_d: 2, budget: Duration::from_secs(30) },
    Criterion { id: 5, name: "count formulas equal filtered counts, sum n_t <= 7, d <= 3", suite: Suite::Counts, max_vertices: 7, max_d: 3, budget: Duration::from_secs(300) },
    Criterion { id: 6, name: "marked-edge bijections and class sizes, sum n_t <= 7", suite: Suite::Bijections, max_vertices: 7, max_d: 3, budget: Duration::from_secs(120) },
    Criterion { id: 7, name: "Lagrange routes agree to degree 6, d <= 3", suite: Suite::Lagrange, max_vertices: 0, max_d: 3, budget: Duration::from_secs(60) },
    Criterion { id: 8, name: "cacti counts and bijections", suite: Suite::Cacti, max_vertices: 0, max_d: 3, budget: Duration::from_secs(120) },
    Criterion { id: 9, name: "plane trees by degree distribution, n <= 8", suite: Suite::Plane, max_vertices: 8, max_d: 1, budget: Duration::from_secs(30) },
];

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for c in &CRITERIA {
        let config = VerifyConfig {
            max_vertices: c.max_vertices,
            max_d: c.max_d,
            ..VerifyConfig::default()
        };
        let start = Instant::now();
        let outcome = run_suite(c.suite, &config);
        let elapsed = start.elapsed();
        let (ok, detail) = match &outcome {
            Ok(r) if r.passed() && elapsed <= c.budget => (true, format!("{} cases", r.cases)),
            Ok(r) if r.passed() => (false, format!("{} cases, over the {:?} budget", r.cases, c.budget)),
            Ok(r) => (false, format!("{} of {} cases failed, first: {:?}", r.failure_count, r.cases, r.failures.first())),
            Err(e) => (false, format!("error: {e}")),
        };
        let mut err = std::io::stderr().lock();
        writeln!(
            err,
            "criterion {} [PRIMARY] {}: {} ({detail}, {:.2?})",
            c.id,
            c.name,
            if ok { "PASS" } else { "FAIL" },
            elapsed
        )
        .unwrap();
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
