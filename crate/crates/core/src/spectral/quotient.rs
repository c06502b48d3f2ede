//! Quotient matrices of equitable partitions for the clique-like families and
//! their characteristic polynomials.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::family::{FamilyError, FamilySpec};

use super::{SpectralError, EPS_ZERO};

/// Characteristic polynomial `det(λI − M_P)` of a quotient matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientPoly {
    /// Monic coefficients, highest degree first.
    pub coeffs: Vec<f64>,
    /// Roots of the polynomial itself that are forced analytically.
    pub known_roots: Vec<(f64, usize)>,
    /// Eigenvalues of the graph outside the quotient, with multiplicities.
    pub residual: Vec<(f64, usize)>,
}

impl QuotientPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative_at(&self, x: f64) -> f64 {
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (i, &c)| acc * x + c * (d - i) as f64)
    }

    /// The polynomial with every known root divided out.
    pub fn deflated(&self) -> QuotientPoly {
        let mut coeffs = self.coeffs.clone();
        for &(r, mult) in &self.known_roots {
            for _ in 0..mult {
                coeffs = deflate(&coeffs, r);
            }
        }
        QuotientPoly {
            coeffs,
            known_roots: Vec::new(),
            residual: self.residual.clone(),
        }
    }

    /// All roots, assuming they are real (true for quotients of symmetric
    /// adjacency matrices). Degrees 1 to 4 with at most one non-cubic factor
    /// removed through `known_roots`.
    pub fn real_roots(&self) -> Vec<f64> {
        let coeffs = self.deflated().coeffs;
        let mut roots = Vec::new();
        for &(r, mult) in &self.known_roots {
            roots.extend(std::iter::repeat_n(r, mult));
        }
        match coeffs.len() - 1 {
            0 => {}
            1 => roots.push(-coeffs[1]),
            2 => roots.extend(quadratic_roots(coeffs[1], coeffs[2])),
            3 => roots.extend(real_cubic_roots(coeffs[1], coeffs[2], coeffs[3])),
            4 if coeffs[1] == 0.0 && coeffs[3] == 0.0 => {
                // biquadratic in λ²
                for x in quadratic_roots(coeffs[2], coeffs[4]) {
                    let s = x.max(0.0).sqrt();
                    roots.extend([s, -s]);
                }
            }
            d => panic!("unsupported residual degree {d}"),
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        roots
    }
}

/// Synthetic division by `(λ − r)`, dropping the remainder.
fn deflate(coeffs: &[f64], r: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(coeffs.len() - 1);
    let mut acc = 0.0;
    for &c in &coeffs[..coeffs.len() - 1] {
        acc = acc * r + c;
        out.push(acc);
    }
    out
}

/// Roots of `x² + b x + c`, descending; assumes a non-negative discriminant.
fn quadratic_roots(b: f64, c: f64) -> [f64; 2] {
    let disc = (b * b - 4.0 * c).max(0.0).sqrt();
    // avoid cancellation in the smaller-magnitude root
    let q = -0.5 * (b + b.signum() * disc);
    let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q, c / q) };
    if r1 >= r2 {
        [r1, r2]
    } else {
        [r2, r1]
    }
}

/// Real roots of the monic cubic `x³ + a x² + b x + c` with three real roots,
/// descending. Trigonometric form followed by Newton polishing.
pub fn real_cubic_roots(a: f64, b: f64, c: f64) -> [f64; 3] {
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let shift = -a / 3.0;
    let mut roots = if p.abs() < 1e-300 {
        let t = (-q).cbrt();
        [t + shift; 3]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        [0, 1, 2].map(|k| m * (phi - 2.0 * PI * k as f64 / 3.0).cos() + shift)
    };
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let f = ((*r + a) * *r + b) * *r + c;
            let df = (3.0 * *r + 2.0 * a) * *r + b;
            if df.abs() < 1e-12 {
                break;
            }
            *r -= f / df;
        }
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}

/// Quotient matrix of the family's equitable partition, row-major, with the
/// cell order used for the characteristic polynomials below.
///
/// * `CompleteMinusEdge(n)`: `{v1}, {v2}, rest`
/// * `CompletePlusPendant(n)`: `{pendant}, {attachment}, rest of the clique`
/// * `CliqueK2Gadget(n)`: `{u}, {v}, {y}, rest of the clique`
/// * `SubdividedStar{n,t}`: `{centre}, far ends, subdivision vertices, intact leaves`
pub fn quotient_matrix(spec: FamilySpec) -> Result<Vec<Vec<f64>>, FamilyError> {
    spec.validate_parameters()?;
    let m = match spec {
        FamilySpec::CompleteMinusEdge(n) => {
            let n = n as f64;
            vec![
                vec![0.0, 0.0, n - 2.0],
                vec![0.0, 0.0, n - 2.0],
                vec![1.0, 1.0, n - 3.0],
            ]
        }
        FamilySpec::CompletePlusPendant(n) => {
            let n = n as f64;
            vec![
                vec![0.0, 1.0, 0.0],
                vec![1.0, 0.0, n - 2.0],
                vec![0.0, 1.0, n - 3.0],
            ]
        }
        FamilySpec::CliqueK2Gadget(n) => {
            let n = n as f64;
            vec![
                vec![0.0, 1.0, 1.0, 0.0],
                vec![1.0, 0.0, 1.0, 0.0],
                vec![1.0, 1.0, 0.0, n - 3.0],
                vec![0.0, 0.0, 1.0, n - 4.0],
            ]
        }
        FamilySpec::SubdividedStar { n, t } => {
            let (n, t) = (n as f64, t as f64);
            vec![
                vec![0.0, t, 0.0, n - t],
                vec![1.0, 0.0, 1.0, 0.0],
                vec![0.0, 1.0, 0.0, 0.0],
                vec![1.0, 0.0, 0.0, 0.0],
            ]
        }
        other => return Err(FamilyError::Unsupported(other)),
    };
    Ok(m)
}

/// `det(λI − M_P)` for the quotient of [`quotient_matrix`], with the roots and
/// residual eigenvalues that are known in closed form.
pub fn quotient_char_poly(spec: FamilySpec) -> Result<QuotientPoly, FamilyError> {
    spec.validate_parameters()?;
    let poly = match spec {
        FamilySpec::CompleteMinusEdge(n) => {
            let nf = n as f64;
            QuotientPoly {
                coeffs: vec![1.0, -(nf - 3.0), -(2.0 * nf - 4.0), 0.0],
                known_roots: vec![(0.0, 1)],
                residual: vec![(-1.0, n - 3)],
            }
        }
        FamilySpec::CompletePlusPendant(n) => {
            let nf = n as f64;
            QuotientPoly {
                coeffs: vec![1.0, -(nf - 3.0), -(nf - 1.0), nf - 3.0],
                known_roots: vec![],
                residual: vec![(-1.0, n - 3)],
            }
        }
        FamilySpec::CliqueK2Gadget(n) => {
            let nf = n as f64;
            QuotientPoly {
                coeffs: vec![
                    1.0,
                    -(nf - 4.0),
                    -nf,
                    3.0 * nf - 14.0,
                    3.0 * nf - 11.0,
                ],
                known_roots: vec![(-1.0, 1)],
                residual: vec![(-1.0, n - 4)],
            }
        }
        FamilySpec::SubdividedStar { n, t } => {
            let (nf, tf) = (n as f64, t as f64);
            QuotientPoly {
                coeffs: vec![1.0, 0.0, -(nf + 1.0), 0.0, nf - tf],
                known_roots: vec![],
                residual: vec![(0.0, n - t - 1), (1.0, t - 1), (-1.0, t - 1)],
            }
        }
        other => return Err(FamilyError::Unsupported(other)),
    };
    Ok(poly)
}

/// The unique root of `p` in `bracket`, by bisection to absolute width 1e-12.
pub fn poly_negative_root(p: &QuotientPoly, bracket: (f64, f64)) -> Result<f64, SpectralError> {
    let (mut lo, mut hi) = bracket;
    let mut flo = p.eval(lo);
    let fhi = p.eval(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(SpectralError::NoSignChange { lo, hi });
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        let fm = p.eval(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bracket `[−n, −EPS_ZERO]` for the negative root of a family of order `n`:
/// no adjacency eigenvalue lies below `−(n−1)`.
pub fn negative_bracket(order: usize) -> (f64, f64) {
    (-(order as f64), -EPS_ZERO)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Faddeev–LeVerrier: characteristic polynomial coefficients of a small
    /// dense matrix, highest degree first. Independent of the hand-derived
    /// formulas in `quotient_char_poly`.
    fn leverrier(m: &[Vec<f64>]) -> Vec<f64> {
        let k = m.len();
        let mul = |a: &Vec<Vec<f64>>, b: &[Vec<f64>]| -> Vec<Vec<f64>> {
            (0..k)
                .map(|i| {
                    (0..k)
                        .map(|j| (0..k).map(|l| a[i][l] * b[l][j]).sum())
                        .collect()
                })
                .collect()
        };
        let mut coeffs = vec![1.0];
        let mut mk: Vec<Vec<f64>> = vec![vec![0.0; k]; k];
        let mut c = 1.0;
        for step in 1..=k {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = mul(&m.to_vec(), &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += c;
            }
            mk = next;
            let am = mul(&m.to_vec(), &mk);
            let trace: f64 = (0..k).map(|i| am[i][i]).sum();
            c = -trace / step as f64;
            coeffs.push(c);
        }
        coeffs
    }

    #[test]
    fn closed_form_polynomials_match_leverrier() {
        let mut specs = Vec::new();
        for n in 5..=30 {
            specs.push(FamilySpec::CompleteMinusEdge(n));
            specs.push(FamilySpec::CompletePlusPendant(n));
            specs.push(FamilySpec::CliqueK2Gadget(n));
        }
        for n in 2..=15 {
            for t in 1..n {
                specs.push(FamilySpec::SubdividedStar { n, t });
            }
        }
        for spec in specs {
            let poly = quotient_char_poly(spec).unwrap();
            let oracle = leverrier(&quotient_matrix(spec).unwrap());
            assert_eq!(poly.coeffs.len(), oracle.len());
            for (a, b) in poly.coeffs.iter().zip(&oracle) {
                assert!((a - b).abs() < 1e-9, "{spec}: {:?} vs {oracle:?}", poly.coeffs);
            }
        }
    }

    #[test]
    fn tabulated_coefficients() {
        let p = quotient_char_poly(FamilySpec::CompleteMinusEdge(5)).unwrap();
        assert_eq!(p.coeffs, vec![1.0, -2.0, -6.0, 0.0]);
        for n in 4..=12 {
            let p = quotient_char_poly(FamilySpec::CompletePlusPendant(n)).unwrap();
            let nf = n as f64;
            assert_eq!(p.coeffs, vec![1.0, -(nf - 3.0), -(nf - 1.0), nf - 3.0]);
        }
        let p = quotient_char_poly(FamilySpec::CliqueK2Gadget(6)).unwrap();
        assert_eq!(p.eval(-1.0), 0.0);
        assert_eq!(p.derivative_at(-1.0), 6.0);
    }

    #[test]
    fn known_roots_are_roots() {
        for n in 5..=40 {
            for spec in [
                FamilySpec::CompleteMinusEdge(n),
                FamilySpec::CliqueK2Gadget(n),
            ] {
                let p = quotient_char_poly(spec).unwrap();
                for &(r, _) in &p.known_roots {
                    assert!(p.eval(r).abs() <= 1e-9);
                }
                assert_eq!(p.coeffs[0], 1.0);
            }
        }
    }

    #[test]
    fn bisection_roots() {
        let pendant = quotient_char_poly(FamilySpec::CompletePlusPendant(4)).unwrap();
        let c3 = 3f64.cbrt();
        let r = poly_negative_root(&pendant, (-2.0, -c3)).unwrap();
        assert!(r < -c3 && r.abs().powi(3) > 3.0);
        assert!(pendant.eval(r).abs() < 1e-10);

        let gadget = quotient_char_poly(FamilySpec::CliqueK2Gadget(6)).unwrap();
        let c4 = 4f64.cbrt();
        let r = poly_negative_root(&gadget, (-3.0, -c4)).unwrap();
        assert!(r < -c4);

        let sq = QuotientPoly {
            coeffs: vec![1.0, 0.0, -1.0],
            known_roots: vec![],
            residual: vec![],
        };
        assert!((poly_negative_root(&sq, (-2.0, 0.0)).unwrap() + 1.0).abs() < 1e-12);
        assert!(matches!(
            poly_negative_root(&sq, (-0.5, 0.0)),
            Err(SpectralError::NoSignChange { .. })
        ));
    }

    #[test]
    fn deflation_leaves_one_negative_root() {
        for n in 6..=40 {
            for spec in [
                FamilySpec::CompleteMinusEdge(n),
                FamilySpec::CompletePlusPendant(n),
                FamilySpec::CliqueK2Gadget(n),
            ] {
                let d = quotient_char_poly(spec).unwrap().deflated();
                let r = poly_negative_root(&d, negative_bracket(spec.order())).unwrap();
                let negatives = d.real_roots().into_iter().filter(|&x| x < -EPS_ZERO).count();
                assert_eq!(negatives, 1, "{spec}");
                assert!(d.eval(r).abs() < 1e-6 * (n * n) as f64);
            }
        }
    }

    #[test]
    fn cubic_roots_of_known_polynomial() {
        // (x-1)(x+2)(x-3) = x³ - 2x² - 5x + 6
        let r = real_cubic_roots(-2.0, -5.0, 6.0);
        for (a, b) in r.iter().zip([3.0, 1.0, -2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        // triple root
        let r = real_cubic_roots(-3.0, 3.0, -1.0);
        assert!(r.iter().all(|x| (x - 1.0).abs() < 1e-5));
    }

    #[test]
    fn unsupported_kinds() {
        assert!(matches!(
            quotient_char_poly(FamilySpec::Path(4)),
            Err(FamilyError::Unsupported(_))
        ));
        assert!(quotient_char_poly(FamilySpec::CliqueK2Gadget(4)).is_err());
    }
}
