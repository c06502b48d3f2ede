use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumeration::canonical_form;
use crate::graph::Graph;
use crate::spectral::{path_positive_energy, EnergyPair};

/// A graph passes a bound when `margin >= -SLACK`.
pub const SLACK: f64 = 1e-6;
/// `|margin| <= EQUALITY_TOL` is reported as an equality case.
pub const EQUALITY_TOL: f64 = 1e-6;
/// Smallest-margin graphs kept per order and bound.
pub const MINIMIZERS_PER_BOUND: usize = 3;

/// Which half of the spectrum an exhaustive run checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Negative,
    Positive,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Negative => "neg",
            Side::Positive => "pos",
        })
    }
}

/// Connected graphs that are uniquely determined by `(n, m)` and excluded
/// from some bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Exceptional {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "K_1")]
    K1,
    #[serde(rename = "K_2")]
    K2,
    #[serde(rename = "P_3")]
    P3,
    #[serde(rename = "K_n")]
    Complete,
}

impl Exceptional {
    /// Classification of a connected graph with `n` vertices and `m` edges.
    pub fn classify(n: usize, m: usize) -> Exceptional {
        match (n, m) {
            (1, _) => Exceptional::K1,
            (2, 1) => Exceptional::K2,
            (3, 2) => Exceptional::P3,
            _ if m == n * (n - 1) / 2 => Exceptional::Complete,
            _ => Exceptional::None,
        }
    }

    /// `K_1` and `K_2` are complete graphs too.
    pub fn is_complete(self) -> bool {
        matches!(self, Exceptional::K1 | Exceptional::K2 | Exceptional::Complete)
    }
}

impl fmt::Display for Exceptional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exceptional::None => "none",
            Exceptional::K1 => "K_1",
            Exceptional::K2 => "K_2",
            Exceptional::P3 => "P_3",
            Exceptional::Complete => "K_n",
        })
    }
}

/// The lower bounds checked by the exhaustive runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bound {
    /// `ℰ_p⁻ >= n - 1`, the value at `K_n`.
    Neg,
    /// `ℰ_p⁻ >= n` unless complete or `P_3`; only claimed for `p >= 3`.
    NegStrict,
    /// `ℰ_p⁺ >= ℰ_p⁺(P_n)`.
    PosPath,
    /// `ℰ_3⁺ >= (√5/2) n` unless `K_1`, `K_2` or `P_3`; only for `p = 3`.
    PosLinear,
    /// `min(ℰ_2⁺, ℰ_2⁻) >= n - 1`; the `p = 2` extension run.
    MinPair,
}

impl Bound {
    /// Bounds checked for a side and exponent.
    pub fn active(side: Side, p: f64) -> Vec<Bound> {
        match side {
            Side::Negative => {
                let mut v = vec![Bound::Neg];
                if p >= 3.0 {
                    v.push(Bound::NegStrict);
                }
                if p == 2.0 {
                    v.push(Bound::MinPair);
                }
                v
            }
            Side::Positive => {
                let mut v = vec![Bound::PosPath];
                if p == 3.0 {
                    v.push(Bound::PosLinear);
                }
                v
            }
        }
    }

    pub fn exempt(self, exc: Exceptional) -> bool {
        match self {
            Bound::NegStrict => exc.is_complete() || exc == Exceptional::P3,
            Bound::PosLinear => matches!(exc, Exceptional::K1 | Exceptional::K2 | Exceptional::P3),
            Bound::Neg | Bound::PosPath | Bound::MinPair => false,
        }
    }

    pub fn margin(self, r: &EnergyReport) -> f64 {
        match self {
            Bound::Neg => r.margin_neg,
            Bound::NegStrict => r.margin_neg_strict,
            Bound::PosPath => r.margin_pos_path,
            Bound::PosLinear => r.margin_pos_linear,
            Bound::MinPair => r.margin_min_pair,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Neg => "neg",
            Bound::NegStrict => "neg-strict",
            Bound::PosPath => "pos-path",
            Bound::PosLinear => "pos-linear",
            Bound::MinPair => "min-pair",
        })
    }
}

/// Raw margins of one graph, cheap to compute in the hot loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margins {
    pub neg: f64,
    pub neg_strict: f64,
    pub pos_path: f64,
    pub pos_linear: f64,
    pub min_pair: f64,
}

impl Margins {
    /// `path_plus` is `ℰ_p⁺(P_n)`; `shift` is added to every bound.
    pub fn new(n: usize, e: &EnergyPair, path_plus: f64, shift: f64) -> Margins {
        let nf = n as f64;
        Margins {
            neg: e.e_minus - (nf - 1.0) - shift,
            neg_strict: e.e_minus - nf - shift,
            pos_path: e.e_plus - path_plus - shift,
            pos_linear: e.e_plus - 5f64.sqrt() / 2.0 * nf - shift,
            min_pair: e.min() - (nf - 1.0) - shift,
        }
    }

    pub fn get(&self, b: Bound) -> f64 {
        match b {
            Bound::Neg => self.neg,
            Bound::NegStrict => self.neg_strict,
            Bound::PosPath => self.pos_path,
            Bound::PosLinear => self.pos_linear,
            Bound::MinPair => self.min_pair,
        }
    }
}

/// Per-graph record: energies and the margin against every bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    /// Canonical graph6 string.
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub exponent: f64,
    pub e_plus: f64,
    pub e_minus: f64,
    pub margin_neg: f64,
    pub margin_neg_strict: f64,
    pub margin_pos_path: f64,
    pub margin_pos_linear: f64,
    pub margin_min_pair: f64,
    pub exceptional: Exceptional,
}

impl EnergyReport {
    pub fn new(g: &Graph, e: &EnergyPair, shift: f64) -> EnergyReport {
        let n = g.order();
        let margins = Margins::new(n, e, path_positive_energy(n, e.exponent), shift);
        Self::with_margins(g, e, &margins)
    }

    pub fn with_margins(g: &Graph, e: &EnergyPair, margins: &Margins) -> EnergyReport {
        let (n, m) = (g.order(), g.size());
        EnergyReport {
            graph6: canonical_form(g),
            n,
            m,
            exponent: e.exponent,
            e_plus: e.e_plus,
            e_minus: e.e_minus,
            margin_neg: margins.neg,
            margin_neg_strict: margins.neg_strict,
            margin_pos_path: margins.pos_path,
            margin_pos_linear: margins.pos_linear,
            margin_min_pair: margins.min_pair,
            exceptional: Exceptional::classify(n, m),
        }
    }
}

/// One graph singled out for one bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub bound: Bound,
    pub margin: f64,
    pub report: EnergyReport,
}

impl Finding {
    fn key(&self) -> (usize, Bound) {
        (self.report.n, self.bound)
    }

    /// Total order used everywhere findings are sorted: by order, bound,
    /// margin, then canonical string.
    fn cmp_total(&self, other: &Finding) -> std::cmp::Ordering {
        self.key()
            .cmp(&other.key())
            .then(self.margin.total_cmp(&other.margin))
            .then_with(|| self.report.graph6.cmp(&other.report.graph6))
    }
}

/// Number of classes checked at one order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCount {
    pub n: usize,
    pub classes: u64,
}

/// Aggregate result of an exhaustive run over a range of orders.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub side: Side,
    pub exponent: f64,
    pub n_lo: usize,
    pub n_hi: usize,
    /// True for runs outside the exponents the exhaustive claims cover (`p = 2`).
    pub extension: bool,
    pub bounds: Vec<Bound>,
    /// Added to every bound; non-zero only when exercising the failure path.
    pub bound_shift: f64,
    pub graphs_checked: u64,
    pub counts: Vec<OrderCount>,
    pub violations: Vec<Finding>,
    pub equalities: Vec<Finding>,
    pub minimizers: Vec<Finding>,
    pub wall_time: Option<f64>,
}

impl VerificationReport {
    pub fn empty(side: Side, exponent: f64, n_lo: usize, n_hi: usize, bound_shift: f64) -> Self {
        VerificationReport {
            side,
            exponent,
            n_lo,
            n_hi,
            extension: exponent != 3.0,
            bounds: Bound::active(side, exponent),
            bound_shift,
            graphs_checked: 0,
            counts: Vec::new(),
            violations: Vec::new(),
            equalities: Vec::new(),
            minimizers: Vec::new(),
            wall_time: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn classes_at(&self, n: usize) -> u64 {
        self.counts.iter().find(|c| c.n == n).map_or(0, |c| c.classes)
    }

    pub fn minimizers_for(&self, n: usize, bound: Bound) -> impl Iterator<Item = &Finding> {
        self.minimizers
            .iter()
            .filter(move |f| f.report.n == n && f.bound == bound)
    }

    pub fn equalities_for(&self, n: usize, bound: Bound) -> impl Iterator<Item = &Finding> {
        self.equalities
            .iter()
            .filter(move |f| f.report.n == n && f.bound == bound)
    }

    /// Folds `other` into `self`. Counts are summed, findings concatenated,
    /// and minimizers re-minimized; the result does not depend on the order
    /// in which partial reports are merged.
    ///
    /// # Panics
    /// If the two reports check different claims.
    pub fn merge(&mut self, other: VerificationReport) {
        assert!(
            self.side == other.side
                && self.exponent == other.exponent
                && self.bound_shift == other.bound_shift,
            "merging reports of different runs"
        );
        self.n_lo = self.n_lo.min(other.n_lo);
        self.n_hi = self.n_hi.max(other.n_hi);
        self.graphs_checked += other.graphs_checked;
        let mut counts: BTreeMap<usize, u64> = self.counts.iter().map(|c| (c.n, c.classes)).collect();
        for c in other.counts {
            *counts.entry(c.n).or_default() += c.classes;
        }
        self.counts = counts
            .into_iter()
            .map(|(n, classes)| OrderCount { n, classes })
            .collect();
        self.violations.extend(other.violations);
        self.equalities.extend(other.equalities);
        self.minimizers.extend(other.minimizers);
        self.wall_time = match (self.wall_time, other.wall_time) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
        self.normalize();
    }

    /// Sorts findings into their canonical order and trims minimizers.
    pub fn normalize(&mut self) {
        self.violations.sort_by(Finding::cmp_total);
        self.equalities.sort_by(Finding::cmp_total);
        self.equalities.dedup_by(|a, b| a.key() == b.key() && a.report.graph6 == b.report.graph6);
        self.minimizers.sort_by(Finding::cmp_total);
        let mut kept: Vec<Finding> = Vec::with_capacity(self.minimizers.len());
        for f in self.minimizers.drain(..) {
            let same_key = kept.iter().rev().take_while(|k| k.key() == f.key()).count();
            let duplicate = kept
                .iter()
                .rev()
                .take(same_key)
                .any(|k| k.report.graph6 == f.report.graph6);
            if same_key < MINIMIZERS_PER_BOUND && !duplicate {
                kept.push(f);
            }
        }
        self.minimizers = kept;
    }
}

/// Keeps the `MINIMIZERS_PER_BOUND` smallest margins for one (order, bound).
#[derive(Debug, Default, Clone)]
pub(crate) struct TopMargins {
    entries: Vec<Finding>,
}

impl TopMargins {
    /// Whether a graph with this margin could enter the list.
    pub(crate) fn admits(&self, margin: f64) -> bool {
        self.entries.len() < MINIMIZERS_PER_BOUND
            || margin <= self.entries[self.entries.len() - 1].margin
    }

    pub(crate) fn insert(&mut self, f: Finding) {
        self.entries.push(f);
        self.entries.sort_by(Finding::cmp_total);
        self.entries.truncate(MINIMIZERS_PER_BOUND);
    }

    pub(crate) fn into_vec(self) -> Vec<Finding> {
        self.entries
    }
}
