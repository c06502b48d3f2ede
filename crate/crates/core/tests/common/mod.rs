//! Property checks shared by the property suite and the acceptance target.
//! Every expected value comes from an identity or a brute-force count, not
//! from the library under test.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_lab::enumeration::enumerate_connected;
use spectral_lab::graph6;
use spectral_lab::{eigenvalues, energy, Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with a random density.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Triangles by brute force over vertex triples.
pub fn triangles_brute(g: &Graph) -> usize {
    let n = g.order();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Outcome of one property run: how many cases, and the worst error seen.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub worst: f64,
    pub failures: Vec<String>,
}

impl Tally {
    fn record(&mut self, err: f64, tol: f64, what: impl FnOnce() -> String) {
        self.cases += 1;
        self.worst = self.worst.max(err);
        if err > tol {
            self.failures.push(what());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `Σλ⁰ = n`, `Σλ = 0`, `Σλ² = 2m`, `Σλ³ = 6·triangles`.
pub fn moment_identities(graphs: usize, max_n: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for _ in 0..graphs {
        let n = rng.gen_range(1..=max_n);
        let g = random_graph(&mut rng, n);
        let s = eigenvalues(&g).unwrap();
        let expect = [n as f64, 0.0, 2.0 * g.size() as f64, 6.0 * triangles_brute(&g) as f64];
        let err = (0..4).map(|k| (s.moment(k) - expect[k as usize]).abs()).fold(0.0, f64::max);
        t.record(err, 1e-6, || graph6::encode(&g));
    }
    t
}

/// `λ_i(G) >= λ_i(G − v) >= λ_{i+1}(G)` with descending spectra.
pub fn interlacing(pairs: usize, max_n: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for _ in 0..pairs {
        let n = rng.gen_range(2..=max_n);
        let g = random_graph(&mut rng, n);
        let v = rng.gen_range(0..n);
        let big = eigenvalues(&g).unwrap();
        let small = eigenvalues(&g.remove_vertex(v)).unwrap();
        let (l, m) = (big.values(), small.values());
        let err = (0..n - 1)
            .map(|i| (m[i] - l[i]).max(l[i + 1] - m[i]).max(0.0))
            .fold(0.0, f64::max);
        t.record(err, 1e-9, || format!("{} - {v}", graph6::encode(&g)));
    }
    t
}

/// `ℰ_r^±(G) >= Σ ℰ_r^±(G[B_i])` over a random partition into 2..=4 blocks.
pub fn block_superadditivity(partitions: usize, max_n: usize, seed: u64) -> Tally {
    let mut rng = rng(seed);
    let mut t = Tally::default();
    for _ in 0..partitions {
        let n = rng.gen_range(2..=max_n);
        let g = random_graph(&mut rng, n);
        let k = rng.gen_range(2..=4usize.min(n));
        // every block non-empty: seed one vertex per block, then scatter
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let mut blocks = vec![Vec::new(); k];
        for (i, &v) in order.iter().enumerate() {
            let b = if i < k { i } else { rng.gen_range(0..k) };
            blocks[b].push(v);
        }
        let whole = eigenvalues(&g).unwrap();
        let parts: Vec<_> = blocks
            .iter()
            .map(|b| eigenvalues(&g.induced_subgraph(VertexSet::from_vertices(b.iter().copied())).unwrap()).unwrap())
            .collect();
        for r in [2.0, 3.0, 4.0] {
            let e = energy(&whole, r);
            let (mut plus, mut minus) = (0.0, 0.0);
            for s in &parts {
                let pe = energy(s, r);
                plus += pe.e_plus;
                minus += pe.e_minus;
            }
            let err = (plus - e.e_plus).max(minus - e.e_minus).max(0.0);
            t.record(err, 1e-6, || format!("{} r={r} blocks={blocks:?}", graph6::encode(&g)));
        }
    }
    t
}

/// Exhaustively over connected graphs with `2 <= n <= max_n`: if
/// `ℰ_r⁻ >= n − 1` then `ℰ_{r'}⁻ >= n − 1` for `r <= r'` in the grid.
pub fn holder_monotonicity(max_n: usize) -> Tally {
    const GRID: [f64; 4] = [2.0, 2.5, 3.0, 4.0];
    let mut t = Tally::default();
    for n in 2..=max_n {
        enumerate_connected(n, |g| {
            let s = eigenvalues(g).unwrap();
            let target = n as f64 - 1.0;
            for (i, &r) in GRID.iter().enumerate() {
                if energy(&s, r).e_minus < target - 1e-9 {
                    continue;
                }
                for &r2 in &GRID[i..] {
                    let shortfall = (target - energy(&s, r2).e_minus).max(0.0);
                    t.record(shortfall, 1e-6, || format!("{} r={r} r'={r2}", graph6::encode(g)));
                }
            }
        })
        .unwrap();
    }
    t
}

/// Every labelled graph with `n <= max_n` survives encode/decode unchanged.
pub fn graph6_round_trip(max_n: usize) -> Tally {
    let mut t = Tally::default();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let back = graph6::decode(&graph6::encode(&g)).unwrap();
            t.record(if back == g { 0.0 } else { 1.0 }, 0.0, || graph6::encode(&g));
        }
    }
    t
}
