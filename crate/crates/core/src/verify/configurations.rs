//! Randomised witnesses for the structural configurations used in the
//! negative-energy induction: each family of graphs is claimed to satisfy
//! `ℰ_3⁻(G) >= n`. Sampling is deterministic for a fixed seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumeration::canonical_form;
use crate::graph::Graph;
use crate::spectral::{eigenvalues, energy};

use super::report::{Exceptional, SLACK};
use super::VerifyError;

pub const DEFAULT_SEED: u64 = 0x5eed_0001;
pub const DEFAULT_SAMPLES: usize = 240;
/// Largest witness order.
pub const WITNESS_MAX_ORDER: usize = 14;

/// The configurations, named by their defining structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Configuration {
    /// A vertex `v` with `G − v` a disjoint union of cliques.
    ApexOverCliques,
    /// `V − u` splits into an induced `P_3` and a clique containing a
    /// neighbour `v` of `u` with no neighbour in the `P_3`.
    P3AndClique,
    /// `G − u` is exactly one `P_3` plus one clique.
    P3PlusClique,
    /// A vertex `v` with `G − v` a disjoint union of `P_3`s and cliques.
    ApexOverP3sAndCliques,
    /// A vertex adjacent to all others.
    DominatingVertex,
    /// Three disjoint cliques of order >= 2 joined by a triangle on one
    /// vertex of each.
    TriangleOfCliques,
}

impl Configuration {
    pub const ALL: [Configuration; 6] = [
        Configuration::ApexOverCliques,
        Configuration::P3AndClique,
        Configuration::P3PlusClique,
        Configuration::ApexOverP3sAndCliques,
        Configuration::DominatingVertex,
        Configuration::TriangleOfCliques,
    ];

    /// Whether `K_n` and `P_3` must be excluded from the claim.
    fn excludes_exceptions(self) -> bool {
        matches!(
            self,
            Configuration::ApexOverCliques
                | Configuration::DominatingVertex
                | Configuration::TriangleOfCliques
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub n: usize,
    pub e3_minus: f64,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationSummary {
    pub configuration: Configuration,
    pub samples: usize,
    /// Samples dropped because they were `K_n` or `P_3`.
    pub excluded: usize,
    pub tightest: Option<Witness>,
    pub violations: Vec<Witness>,
}

impl ConfigurationSummary {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigurationReport {
    pub seed: u64,
    pub summaries: Vec<ConfigurationSummary>,
}

impl ConfigurationReport {
    pub fn holds(&self) -> bool {
        self.summaries.iter().all(ConfigurationSummary::holds)
    }
}

/// Incremental edge-list builder for witnesses.
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            n: 0,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn clique(&mut self, k: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..k).map(|_| self.vertex()).collect();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.edges.push((a, b));
            }
        }
        vs
    }

    fn path3(&mut self) -> [usize; 3] {
        let [a, b, c] = [self.vertex(), self.vertex(), self.vertex()];
        self.edges.extend([(a, b), (b, c)]);
        [a, b, c]
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// Joins `v` to a uniformly random non-empty subset of `targets`.
    fn join_some(&mut self, rng: &mut ChaCha8Rng, v: usize, targets: &[usize]) {
        let k = targets.len();
        let mask: u64 = rng.gen_range(1..1u64 << k);
        for (i, &t) in targets.iter().enumerate() {
            if mask >> i & 1 == 1 {
                self.edges.push((v, t));
            }
        }
    }

    /// Builds the graph with vertex labels shuffled, so nothing depends on
    /// the construction order.
    fn finish(self, rng: &mut ChaCha8Rng) -> Graph {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.shuffle(rng);
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges(self.n, &edges).expect("witness edges are in range")
    }
}

/// Random composition of parts with sizes in `lo..=hi` and total at most `budget`.
fn random_parts(rng: &mut ChaCha8Rng, count: usize, lo: usize, hi: usize, budget: usize) -> Vec<usize> {
    let mut parts = Vec::with_capacity(count);
    let mut left = budget;
    for _ in 0..count {
        if left < lo {
            break;
        }
        let k = rng.gen_range(lo..=hi.min(left));
        parts.push(k);
        left -= k;
    }
    parts
}

/// The five ways `u` can see the induced path `a-b-c`, up to symmetry.
const P3_SHAPES: [&[usize]; 5] = [&[0], &[1], &[0, 1], &[0, 2], &[0, 1, 2]];

/// One random witness; `index` cycles deterministic sub-cases.
pub fn witness(config: Configuration, rng: &mut ChaCha8Rng, index: usize) -> Graph {
    let max = WITNESS_MAX_ORDER;
    let mut b = Builder::new();
    match config {
        Configuration::ApexOverCliques => {
            let v = b.vertex();
            let count = rng.gen_range(1..=5);
            for k in random_parts(rng, count, 1, 6, max - 1) {
                let c = b.clique(k);
                b.join_some(rng, v, &c);
            }
        }
        Configuration::P3AndClique => {
            let u = b.vertex();
            let x1 = b.path3();
            let k = rng.gen_range(1..=max - 4);
            let x2 = b.clique(k);
            let v = x2[0];
            for &i in P3_SHAPES[index % P3_SHAPES.len()] {
                b.edge(u, x1[i]);
            }
            b.edge(u, v);
            for &w in &x2[1..] {
                if rng.gen_bool(0.5) {
                    b.edge(u, w);
                }
                for &x in &x1 {
                    if rng.gen_bool(0.3) {
                        b.edge(w, x);
                    }
                }
            }
        }
        Configuration::P3PlusClique => {
            let u = b.vertex();
            let x1 = b.path3();
            let k = rng.gen_range(1..=max - 4);
            let x2 = b.clique(k);
            b.join_some(rng, u, &x1);
            b.join_some(rng, u, &x2);
        }
        Configuration::ApexOverP3sAndCliques => {
            let v = b.vertex();
            let p3s = rng.gen_range(1..=3);
            let mut left = max - 1;
            for _ in 0..p3s {
                let p = b.path3();
                b.join_some(rng, v, &p);
                left -= 3;
            }
            let count = rng.gen_range(0..=3);
            for k in random_parts(rng, count, 1, 5, left) {
                let c = b.clique(k);
                b.join_some(rng, v, &c);
            }
        }
        Configuration::DominatingVertex => {
            let n = rng.gen_range(2..=max);
            let density: f64 = rng.gen_range(0.0..=1.0);
            let v = b.vertex();
            let rest: Vec<usize> = (1..n).map(|_| b.vertex()).collect();
            for (i, &x) in rest.iter().enumerate() {
                b.edge(v, x);
                for &y in &rest[i + 1..] {
                    if rng.gen_bool(density) {
                        b.edge(x, y);
                    }
                }
            }
        }
        Configuration::TriangleOfCliques => {
            let sizes = loop {
                let s = [0; 3].map(|_| rng.gen_range(2..=6usize));
                if s.iter().sum::<usize>() <= max {
                    break s;
                }
            };
            let heads: Vec<usize> = sizes.iter().map(|&k| b.clique(k)[0]).collect();
            b.edge(heads[0], heads[1]);
            b.edge(heads[1], heads[2]);
            b.edge(heads[0], heads[2]);
        }
    }
    b.finish(rng)
}

/// Samples every configuration until `samples` admissible witnesses have
/// been checked against `ℰ_3⁻ >= n`.
pub fn verify_configurations(seed: u64, samples: usize) -> Result<ConfigurationReport, VerifyError> {
    let mut summaries = Vec::new();
    for (ci, config) in Configuration::ALL.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(ci as u64));
        let mut summary = ConfigurationSummary {
            configuration: config,
            samples: 0,
            excluded: 0,
            tightest: None,
            violations: Vec::new(),
        };
        // excluded draws do not count towards the sample target
        let mut i = 0;
        while summary.samples < samples {
            let g = witness(config, &mut rng, i);
            i += 1;
            debug_assert!(g.is_connected(), "{config:?} witness must be connected");
            let exc = Exceptional::classify(g.order(), g.size());
            if config.excludes_exceptions() && (exc.is_complete() || exc == Exceptional::P3) {
                summary.excluded += 1;
                continue;
            }
            summary.samples += 1;
            let e = energy(&eigenvalues(&g)?, 3.0).e_minus;
            let margin = e - g.order() as f64;
            let make = || Witness {
                graph6: canonical_form(&g),
                n: g.order(),
                e3_minus: e,
                margin,
            };
            if margin < -SLACK {
                summary.violations.push(make());
            }
            let tighter = match &summary.tightest {
                None => true,
                Some(t) => margin < t.margin || (margin == t.margin && make().graph6 < t.graph6),
            };
            if tighter {
                summary.tightest = Some(make());
            }
        }
        summaries.push(summary);
    }
    Ok(ConfigurationReport { seed, summaries })
}

/// [`verify_configurations`] with the default seed and sample count.
pub fn verify_configuration_lemmas() -> Result<ConfigurationReport, VerifyError> {
    verify_configurations(DEFAULT_SEED, DEFAULT_SAMPLES)
}
