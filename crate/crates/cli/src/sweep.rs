//! Theorem sweeps over `F_p`: every selected check evaluated on every
//! non-collinear triangle of an enumeration.
//!
//! The triangle space is cut into chunks that are evaluated independently
//! and merged by chunk index, so the summary does not depend on the number
//! of worker threads.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use chromogeometry::affine::{brackets, collinear};
use chromogeometry::centers::{circumcenter_from, orthocenter_from};
use chromogeometry::verify::{check_names, verify_triangle};
use chromogeometry::{CheckFamily, Colour, FieldSpec, Point, Triangle, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

/// Counterexamples kept in a summary; the failure counts are always complete.
pub const MAX_COUNTEREXAMPLES: usize = 50;
const RANDOM_CHUNK: u64 = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random(u64),
}

impl FromStr for Mode {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s == "exhaustive" {
            return Ok(Mode::Exhaustive);
        }
        s.strip_prefix("random:")
            .and_then(|n| n.parse().ok())
            .map(Mode::Random)
            .ok_or_else(|| {
                CliError::Input(format!(
                    "mode must be `exhaustive` or `random:N`, got `{s}`"
                ))
            })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => f.write_str("exhaustive"),
            Mode::Random(n) => write!(f, "random:{n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub field: FieldSpec,
    pub mode: Mode,
    pub families: Vec<CheckFamily>,
    pub jobs: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(prime: u64, mode: Mode) -> Result<Self, CliError> {
        let field = FieldSpec::prime(prime).map_err(|e| CliError::Field(e.to_string()))?;
        Ok(SweepConfig {
            field,
            mode,
            families: CheckFamily::ALL.to_vec(),
            jobs: 1,
            seed: 0,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckCounts {
    pub passed: u64,
    pub null_skipped: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCounts {
    pub check: String,
    #[serde(flatten)]
    pub counts: CheckCounts,
}

/// Triangles whose coloured orthocenters are collinear, or whose Euler line
/// of a colour is undefined because `O = C`. Counted, not interpreted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SpecialConfigurations {
    pub omega_degenerate: u64,
    pub euler_degenerate_blue: u64,
    pub euler_degenerate_red: u64,
    pub euler_degenerate_green: u64,
}

impl SpecialConfigurations {
    fn of(t: &Triangle) -> Self {
        let b = brackets(t);
        let orthos = Colour::ALL.map(|c| orthocenter_from(c, &b));
        let euler = Colour::ALL.map(|c| u64::from(orthos[c as usize] == circumcenter_from(c, &b)));
        let [ob, or, og] = &orthos;
        SpecialConfigurations {
            omega_degenerate: u64::from(collinear(ob, or, og).unwrap_or(true)),
            euler_degenerate_blue: euler[0],
            euler_degenerate_red: euler[1],
            euler_degenerate_green: euler[2],
        }
    }

    fn add(&mut self, o: &Self) {
        self.omega_degenerate += o.omega_degenerate;
        self.euler_degenerate_blue += o.euler_degenerate_blue;
        self.euler_degenerate_red += o.euler_degenerate_red;
        self.euler_degenerate_green += o.euler_degenerate_green;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub triangle: [Point; 3],
    pub failed_checks: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub modulus: u64,
    pub enumeration: String,
    pub families: Vec<CheckFamily>,
    pub total_enumerated: u64,
    pub triangles_checked: u64,
    pub collinear_skipped: u64,
    pub total_failures: u64,
    pub special_configurations: SpecialConfigurations,
    pub checks: Vec<NamedCounts>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; kept out of the JSON so output is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "F_{} {}: {} triangles checked, {} collinear skipped ({} enumerated) in {:.2?}\n",
            self.modulus,
            self.enumeration,
            self.triangles_checked,
            self.collinear_skipped,
            self.total_enumerated,
            self.elapsed
        );
        let sc = &self.special_configurations;
        s += &format!(
            "  orthocenter triangle degenerate: {}; Euler line undefined: blue {}, red {}, green {}\n",
            sc.omega_degenerate, sc.euler_degenerate_blue, sc.euler_degenerate_red, sc.euler_degenerate_green
        );
        let width = self.checks.iter().map(|c| c.check.len()).max().unwrap_or(0);
        for c in &self.checks {
            s += &format!(
                "  {:<width$}  passed {:>8}  null-skipped {:>8}  failed {:>4}\n",
                c.check, c.counts.passed, c.counts.null_skipped, c.counts.failed
            );
        }
        s += &format!("total failures: {}\n", self.total_failures);
        for ce in &self.counterexamples {
            let [a, b, c] = &ce.triangle;
            s += &format!(
                "  counterexample {a} {b} {c}: {}\n",
                ce.failed_checks.join("; ")
            );
        }
        s
    }
}

/// Partial result of one chunk.
#[derive(Default)]
struct Tally {
    enumerated: u64,
    checked: u64,
    collinear: u64,
    special: SpecialConfigurations,
    counts: Vec<CheckCounts>,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn new(n_checks: usize) -> Self {
        Tally {
            counts: vec![CheckCounts::default(); n_checks],
            ..Tally::default()
        }
    }

    fn visit(&mut self, pts: [Point; 3], families: &[CheckFamily], names: &[String]) {
        self.enumerated += 1;
        let [a, b, c] = pts;
        let Ok(t) = Triangle::new(a, b, c) else {
            self.collinear += 1;
            return;
        };
        self.checked += 1;
        self.special.add(&SpecialConfigurations::of(&t));
        let record = verify_triangle(&t, families, false);
        let mut failed = Vec::new();
        for (i, v) in record.verdicts().iter().enumerate() {
            let c = &mut self.counts[i];
            match v {
                Verdict::Pass => c.passed += 1,
                Verdict::Skip => c.null_skipped += 1,
                Verdict::Fail => {
                    c.failed += 1;
                    failed.push(names[i].clone());
                }
            }
        }
        if !failed.is_empty() && self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample {
                triangle: t.points().clone(),
                failed_checks: failed,
            });
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.enumerated += other.enumerated;
        self.checked += other.checked;
        self.collinear += other.collinear;
        self.special.add(&other.special);
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            a.passed += b.passed;
            a.null_skipped += b.null_skipped;
            a.failed += b.failed;
        }
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }
}

fn point(x: u64, y: u64, field: FieldSpec) -> Point {
    Point::from_i64(x as i64, y as i64, field)
}

/// Exhaustive chunk `k` fixes the first point to `(k / p, k % p)`.
fn exhaustive_chunk(cfg: &SweepConfig, names: &[String], k: u64) -> Tally {
    let p = cfg.field.modulus().expect("prime field");
    let mut tally = Tally::new(names.len());
    let a = point(k / p, k % p, cfg.field);
    for bx in 0..p {
        for by in 0..p {
            let b = point(bx, by, cfg.field);
            for cx in 0..p {
                for cy in 0..p {
                    let c = point(cx, cy, cfg.field);
                    tally.visit([a.clone(), b.clone(), c], &cfg.families, names);
                }
            }
        }
    }
    tally
}

/// Random chunk `k` draws its triangles from stream `k` of a generator seeded by `seed`.
fn random_chunk(cfg: &SweepConfig, names: &[String], k: u64, count: u64) -> Tally {
    let p = cfg.field.modulus().expect("prime field");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(k);
    let mut tally = Tally::new(names.len());
    for _ in 0..count {
        let pts = [(); 3].map(|_| point(rng.gen_range(0..p), rng.gen_range(0..p), cfg.field));
        tally.visit(pts, &cfg.families, names);
    }
    tally
}

pub fn run(cfg: &SweepConfig) -> Result<SweepSummary, CliError> {
    let p = cfg
        .field
        .modulus()
        .ok_or_else(|| CliError::Field("sweeps run over a prime field".into()))?;
    let names = check_names(&cfg.families);
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(format!("cannot start worker pool: {e}")))?;
    let tallies: Vec<Tally> = pool.install(|| match cfg.mode {
        Mode::Exhaustive => (0..p * p)
            .into_par_iter()
            .map(|k| exhaustive_chunk(cfg, &names, k))
            .collect(),
        Mode::Random(n) => {
            let chunks = n.div_ceil(RANDOM_CHUNK);
            (0..chunks)
                .into_par_iter()
                .map(|k| {
                    let count = RANDOM_CHUNK.min(n - k * RANDOM_CHUNK);
                    random_chunk(cfg, &names, k, count)
                })
                .collect()
        }
    });
    let mut total = Tally::new(names.len());
    for t in tallies {
        total.absorb(t);
    }
    let checks: Vec<NamedCounts> = names
        .into_iter()
        .zip(total.counts)
        .map(|(check, counts)| NamedCounts { check, counts })
        .collect();
    let enumeration = match cfg.mode {
        Mode::Exhaustive => format!("exhaustive over all {p}^6 ordered coordinate triples"),
        Mode::Random(n) => format!("{n} uniformly random ordered triples, seed {}", cfg.seed),
    };
    Ok(SweepSummary {
        modulus: p,
        enumeration,
        families: cfg.families.clone(),
        total_enumerated: total.enumerated,
        triangles_checked: total.checked,
        collinear_skipped: total.collinear,
        total_failures: checks.iter().map(|c| c.counts.failed).sum(),
        special_configurations: total.special,
        checks,
        counterexamples: total.counterexamples,
        elapsed: start.elapsed(),
    })
}
