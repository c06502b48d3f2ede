//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use crate::graph::Graph;

use super::SpectralError;

/// Upper bound on full sweeps. Quadratic convergence means small adjacency
/// matrices finish in well under 20.
pub const MAX_SWEEPS: usize = 100;

/// Reusable scratch space for repeated eigenvalue computations.
#[derive(Debug, Default, Clone)]
pub struct JacobiWorkspace {
    a: Vec<f64>,
}

impl JacobiWorkspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Eigenvalues of the adjacency matrix of `g`, written to `out` in
    /// descending order.
    pub fn adjacency_eigenvalues(
        &mut self,
        g: &Graph,
        out: &mut Vec<f64>,
    ) -> Result<(), SpectralError> {
        let n = g.order();
        self.a.clear();
        self.a.resize(n * n, 0.0);
        for (i, &row) in g.rows().iter().enumerate() {
            for j in crate::graph::BitIter(row) {
                self.a[i * n + j] = 1.0;
            }
        }
        self.solve(n, out)
    }

    /// Eigenvalues of the symmetric `n × n` row-major matrix `m`, descending.
    pub fn symmetric_eigenvalues(
        &mut self,
        m: &[f64],
        n: usize,
        out: &mut Vec<f64>,
    ) -> Result<(), SpectralError> {
        assert_eq!(m.len(), n * n, "matrix is not n × n");
        self.a.clear();
        self.a.extend_from_slice(m);
        self.solve(n, out)
    }

    fn solve(&mut self, n: usize, out: &mut Vec<f64>) -> Result<(), SpectralError> {
        let a = &mut self.a;
        let tol = 1e-12 * n as f64;
        let mut sweeps = 0;
        loop {
            let off = off_diagonal_norm(a, n);
            if off < tol {
                break;
            }
            if sweeps == MAX_SWEEPS {
                return Err(SpectralError::NoConvergence { sweeps, off });
            }
            sweeps += 1;
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    rotate(a, n, p, q, apq);
                }
            }
        }
        out.clear();
        out.extend((0..n).map(|i| a[i * n + i]));
        out.sort_by(|x, y| y.total_cmp(x));
        Ok(())
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            s += x * x;
        }
    }
    (2.0 * s).sqrt()
}

/// Zeroes `a[p][q]` with a Givens rotation applied on both sides.
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, apq: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    // theta.signum() is 1.0 for +0.0, so t = 1 when app == aqq
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let tau = s / (1.0 + c);

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = arp - s * (arq + tau * arp);
        let new_rq = arq + s * (arp - tau * arq);
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eig(g: &Graph) -> Vec<f64> {
        let mut out = Vec::new();
        JacobiWorkspace::new()
            .adjacency_eigenvalues(g, &mut out)
            .unwrap();
        out
    }

    #[test]
    fn single_vertex() {
        assert_eq!(eig(&Graph::empty(1).unwrap()), vec![0.0]);
    }

    #[test]
    fn complete_graph() {
        let ev = eig(&Graph::complete(4).unwrap());
        let expect = [3.0, -1.0, -1.0, -1.0];
        for (a, b) in ev.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn general_symmetric_matrix() {
        // [[2,1],[1,2]] has eigenvalues 3 and 1
        let mut out = Vec::new();
        JacobiWorkspace::new()
            .symmetric_eigenvalues(&[2.0, 1.0, 1.0, 2.0], 2, &mut out)
            .unwrap();
        assert!((out[0] - 3.0).abs() < 1e-14 && (out[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn large_complete_graph_converges() {
        let ev = eig(&Graph::complete(62).unwrap());
        assert!((ev[0] - 61.0).abs() < 1e-9);
        assert!(ev[1..].iter().all(|x| (x + 1.0).abs() < 1e-9));
    }
}
