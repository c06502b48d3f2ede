//! Sign claims about the quotient polynomials that locate the extreme
//! negative eigenvalue of the clique-like families.

use serde::{Deserialize, Serialize};

use crate::family::FamilySpec;
use crate::spectral::{negative_bracket, poly_negative_root, quotient_char_poly};

use super::VerifyError;

/// Upper end of the checked order ranges.
pub const SIGN_MAX_ORDER: usize = 1000;
/// Agreement required with the printed anchor values.
pub const ANCHOR_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Anchor {
    pub n: usize,
    pub value: f64,
    pub paper_value: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignClaim {
    pub name: String,
    pub n_lo: usize,
    pub n_hi: usize,
    pub checked: usize,
    /// Orders at which the claim fails.
    pub failures: Vec<usize>,
    /// The value closest to violating the claim.
    pub tightest: f64,
    pub anchor: Option<Anchor>,
}

impl SignClaim {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.anchor.as_ref().is_none_or(|a| a.pass)
    }
}

fn claim(
    name: &str,
    n_lo: usize,
    n_hi: usize,
    value: impl Fn(usize) -> Result<f64, VerifyError>,
    ok: impl Fn(f64) -> bool,
    tighter: impl Fn(f64, f64) -> bool,
    anchor: Option<(usize, f64)>,
) -> Result<SignClaim, VerifyError> {
    let mut failures = Vec::new();
    let mut tightest: Option<f64> = None;
    for n in n_lo..=n_hi {
        let v = value(n)?;
        if !ok(v) {
            failures.push(n);
        }
        if tightest.is_none_or(|t| tighter(v, t)) {
            tightest = Some(v);
        }
    }
    let anchor = anchor
        .map(|(n, paper_value)| -> Result<Anchor, VerifyError> {
            let value = value(n)?;
            Ok(Anchor {
                n,
                value,
                paper_value,
                pass: (value - paper_value).abs() <= ANCHOR_TOL,
            })
        })
        .transpose()?;
    Ok(SignClaim {
        name: name.to_string(),
        n_lo,
        n_hi,
        checked: n_hi + 1 - n_lo,
        failures,
        tightest: tightest.unwrap_or(f64::NAN),
        anchor,
    })
}

/// Value of the pendant cubic at `−∛3`.
pub fn pendant_cubic_at_cbrt3(n: usize) -> Result<f64, VerifyError> {
    Ok(quotient_char_poly(FamilySpec::CompletePlusPendant(n))?.eval(-3f64.cbrt()))
}

/// Value of the clique-plus-edge quartic at `−∛4`.
pub fn gadget_quartic_at_cbrt4(n: usize) -> Result<f64, VerifyError> {
    Ok(quotient_char_poly(FamilySpec::CliqueK2Gadget(n))?.eval(-4f64.cbrt()))
}

/// `|λ_2|³` for the smallest eigenvalue `λ_2 = ((n−3) − √(n²+2n−7))/2` of
/// `K_n − e`, cross-checked against a bisection root of the quotient.
pub fn complete_minus_edge_cube(n: usize) -> Result<f64, VerifyError> {
    let nf = n as f64;
    let l2 = (nf - 3.0 - (nf * nf + 2.0 * nf - 7.0).sqrt()) / 2.0;
    let poly = quotient_char_poly(FamilySpec::CompleteMinusEdge(n))?.deflated();
    let root = poly_negative_root(&poly, negative_bracket(n))?;
    if (root - l2).abs() > 1e-9 * nf {
        return Err(VerifyError::Inconsistent(format!(
            "K_{n}-e: bisection root {root} differs from closed form {l2}"
        )));
    }
    Ok(l2.abs().powi(3))
}

/// The three sign claims over their full ranges.
pub fn appendix_sign_claims(n_hi: usize) -> Result<Vec<SignClaim>, VerifyError> {
    Ok(vec![
        claim(
            "pendant cubic positive at -cbrt(3)",
            4,
            n_hi,
            pendant_cubic_at_cbrt3,
            |v| v > 0.0,
            |v, t| v < t,
            Some((4, 0.246)),
        )?,
        claim(
            "clique-plus-edge quartic negative at -cbrt(4)",
            6,
            n_hi,
            gadget_quartic_at_cbrt4,
            |v| v < 0.0,
            |v, t| v > t,
            Some((6, -0.118)),
        )?,
        claim(
            "|lambda_2(K_n - e)|^3 > 4",
            5,
            n_hi,
            complete_minus_edge_cube,
            |v| v > 4.0,
            |v, t| v < t,
            None,
        )?,
    ])
}
