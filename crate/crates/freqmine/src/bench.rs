//! Workload generation and backend measurement. Timings are reported but
//! never asserted anywhere — the testable claims are structural: final
//! tree heights and comparison counts, which are deterministic functions
//! of the workload.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

use freqmine_core::{BackendKind, FrequencyCounter, Item};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WorkloadKind {
    /// Uniformly chosen keys in shuffled order.
    Random,
    /// Keys in sorted order — the adversarial case for an unbalanced tree.
    Ascending,
    /// Key frequency proportional to 1/rank, shuffled order.
    Zipf,
}

impl WorkloadKind {
    pub const ALL: [WorkloadKind; 3] = [
        WorkloadKind::Random,
        WorkloadKind::Ascending,
        WorkloadKind::Zipf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WorkloadKind::Random => "random",
            WorkloadKind::Ascending => "ascending",
            WorkloadKind::Zipf => "zipf",
        }
    }
}

impl fmt::Display for WorkloadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WorkloadKind {
    type Err = WorkloadError;

    fn from_str(s: &str) -> Result<WorkloadKind, WorkloadError> {
        WorkloadKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| WorkloadError::UnknownKind(s.to_string()))
    }
}

/// A deterministic insert sequence: `n` tokens over `distinct` keys.
/// Every one of the keys appears at least once, so after the insert phase
/// any backend holds exactly `distinct` entries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Workload {
    kind: WorkloadKind,
    n: usize,
    distinct: usize,
    seed: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WorkloadError {
    UnknownKind(String),
    ZeroOps,
    ZeroKeys,
    MoreKeysThanOps { n: usize, distinct: usize },
}

impl fmt::Display for WorkloadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WorkloadError::UnknownKind(name) => {
                write!(
                    f,
                    "unknown workload kind '{name}' (expected random, ascending, or zipf)"
                )
            }
            WorkloadError::ZeroOps => {
                f.write_str("workload needs at least one operation (--n >= 1)")
            }
            WorkloadError::ZeroKeys => {
                f.write_str("workload needs at least one key (--distinct >= 1)")
            }
            WorkloadError::MoreKeysThanOps { n, distinct } => {
                write!(
                    f,
                    "--distinct {distinct} exceeds --n {n}; every key must be insertable"
                )
            }
        }
    }
}

impl std::error::Error for WorkloadError {}

impl Workload {
    pub fn new(
        kind: WorkloadKind,
        n: usize,
        distinct: usize,
        seed: u64,
    ) -> Result<Workload, WorkloadError> {
        if n == 0 {
            return Err(WorkloadError::ZeroOps);
        }
        if distinct == 0 {
            return Err(WorkloadError::ZeroKeys);
        }
        if distinct > n {
            return Err(WorkloadError::MoreKeysThanOps { n, distinct });
        }
        Ok(Workload {
            kind,
            n,
            distinct,
            seed,
        })
    }

    pub fn kind(&self) -> WorkloadKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distinct(&self) -> usize {
        self.distinct
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Zero-padded so lexicographic order equals numeric order: `k000`,
/// `k001`, … — at least three digits, more when `distinct` needs them.
fn key_width(distinct: usize) -> usize {
    let digits = distinct.saturating_sub(1).to_string().len();
    digits.max(3)
}

fn keys(distinct: usize) -> Vec<Item> {
    let width = key_width(distinct);
    (0..distinct)
        .map(|index| Item::new(&format!("k{index:0width$}")).expect("synthetic keys are clean"))
        .collect()
}

/// The token sequence for a workload. The PRNG is ChaCha8 seeded from the
/// workload seed, so the same parameters always yield the same sequence.
///
/// `ascending` walks the sorted keys and cycles. `random` and `zipf` start
/// from one occurrence of every key — guaranteeing full coverage — top up
/// to `n` with uniform or rank-weighted draws, then shuffle.
pub fn generate_workload(workload: &Workload) -> Vec<Item> {
    let keys = keys(workload.distinct);
    match workload.kind {
        WorkloadKind::Ascending => (0..workload.n)
            .map(|i| keys[i % workload.distinct].clone())
            .collect(),
        WorkloadKind::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(workload.seed);
            let mut tokens: Vec<Item> = keys.to_vec();
            tokens.extend(
                (workload.distinct..workload.n)
                    .map(|_| keys[rng.random_range(0..workload.distinct)].clone()),
            );
            tokens.shuffle(&mut rng);
            tokens
        }
        WorkloadKind::Zipf => {
            let mut rng = ChaCha8Rng::seed_from_u64(workload.seed);
            let zipf = Zipf::new(workload.distinct as f64, 1.0).expect("distinct >= 1");
            let mut tokens: Vec<Item> = keys.to_vec();
            tokens.extend((workload.distinct..workload.n).map(|_| {
                let rank = zipf.sample(&mut rng) as usize;
                keys[rank - 1].clone()
            }));
            tokens.shuffle(&mut rng);
            tokens
        }
    }
}

/// One measured (backend, workload) run.
#[derive(Clone, Debug)]
pub struct BenchReport {
    pub backend: BackendKind,
    pub workload: Workload,
    pub insert_ns: u128,
    pub lookup_ns: u128,
    pub inorder_ns: u128,
    /// Final tree height; `None` for backends without one.
    pub height: Option<usize>,
    /// Key comparisons across all inserts.
    pub comparisons: u64,
}

const REPETITIONS: usize = 3;

/// Runs insert / lookup-every-key / inorder phases [`REPETITIONS`] times
/// on a fresh counter each and keeps the minimum wall time per phase.
/// Height and comparison counts are identical across repetitions, being
/// functions of the insert sequence alone.
pub fn run_benchmark(backend: BackendKind, workload: &Workload) -> BenchReport {
    let tokens = generate_workload(workload);
    let keys = keys(workload.distinct);

    let mut insert_ns = u128::MAX;
    let mut lookup_ns = u128::MAX;
    let mut inorder_ns = u128::MAX;
    let mut height = None;
    let mut comparisons = 0;

    for _ in 0..REPETITIONS {
        let mut counter = FrequencyCounter::new(backend);

        let started = Instant::now();
        for token in &tokens {
            counter.insert(token.clone());
        }
        insert_ns = insert_ns.min(started.elapsed().as_nanos());

        let started = Instant::now();
        let mut found = 0u64;
        for key in &keys {
            found += counter.lookup(black_box(key.as_str()));
        }
        lookup_ns = lookup_ns.min(started.elapsed().as_nanos());
        black_box(found);

        let started = Instant::now();
        let entries = counter.inorder();
        inorder_ns = inorder_ns.min(started.elapsed().as_nanos());
        assert_eq!(
            entries.len(),
            workload.distinct,
            "every key appears at least once"
        );
        black_box(&entries);

        height = counter.height();
        comparisons = counter.comparisons();
    }

    BenchReport {
        backend,
        workload: *workload,
        insert_ns,
        lookup_ns,
        inorder_ns,
        height,
        comparisons,
    }
}
