//! The small reference graphs of the negative 3-energy table: six named
//! graphs (`P_3`, `P_4`, `P_5`, `K_{1,3}`, `C_4`, `C_5`) and the gadgets
//! `H_1`..`H_17`, with their tabulated spectra and negative 3-energies.
//!
//! Each gadget is fixed only up to isomorphism by its drawing; the edge
//! lists below commit to one labeling.

use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;

use crate::graph::Graph;

/// One row of the reference table.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub name: &'static str,
    pub order: usize,
    pub edges: &'static [(usize, usize)],
    /// Tabulated spectrum, descending, as printed (3 or 4 decimals).
    pub spectrum: &'static [f64],
    /// Tabulated negative 3-energy.
    pub e3_minus: f64,
}

impl TableEntry {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.order, self.edges).expect("static table edges are valid")
    }
}

const TWO_SQRT_2: f64 = 2.0 * SQRT_2;

pub static TABLE: [TableEntry; 23] = [
    TableEntry {
        name: "P_3",
        order: 3,
        edges: &[(0, 1), (1, 2)],
        spectrum: &[SQRT_2, 0.0, -SQRT_2],
        e3_minus: TWO_SQRT_2,
    },
    TableEntry {
        name: "P_4",
        order: 4,
        edges: &[(0, 1), (1, 2), (2, 3)],
        spectrum: &[1.618, 0.618, -0.618, -1.618],
        e3_minus: 4.472,
    },
    TableEntry {
        name: "P_5",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4)],
        spectrum: &[1.732, 1.0, 0.0, -1.0, -1.732],
        e3_minus: 6.196,
    },
    TableEntry {
        name: "K_1,3",
        order: 4,
        edges: &[(0, 1), (1, 2), (1, 3)],
        spectrum: &[1.732, 0.0, 0.0, -1.732],
        e3_minus: 5.196,
    },
    TableEntry {
        name: "C_4",
        order: 4,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0)],
        spectrum: &[2.0, 0.0, 0.0, -2.0],
        e3_minus: 8.0,
    },
    TableEntry {
        name: "C_5",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        spectrum: &[2.0, 0.618, 0.618, -1.618, -1.618],
        e3_minus: 8.472,
    },
    TableEntry {
        name: "H_1",
        order: 4,
        edges: &[(0, 1), (1, 2), (2, 0), (1, 3)],
        spectrum: &[2.170, 0.311, -1.0, -1.481],
        e3_minus: 4.249,
    },
    TableEntry {
        name: "H_2",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 0), (1, 3), (3, 4)],
        spectrum: &[2.214, 1.0, -0.539, -1.0, -1.675],
        e3_minus: 5.857,
    },
    TableEntry {
        name: "H_3",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 4), (1, 3)],
        spectrum: &[1.848, 0.765, 0.0, -0.765, -1.848],
        e3_minus: 6.757,
    },
    TableEntry {
        name: "H_4",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)],
        spectrum: &[2.303, 0.618, 0.0, -1.303, -1.618],
        e3_minus: 6.447,
    },
    TableEntry {
        name: "H_5",
        order: 6,
        edges: &[(0, 1), (1, 2), (2, 0), (1, 3), (1, 4), (4, 3), (3, 5)],
        spectrum: &[2.629, 1.230, 0.140, -1.0, -1.320, -1.678],
        e3_minus: 8.026,
    },
    TableEntry {
        name: "H_6",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)],
        spectrum: &[2.136, 0.662, 0.0, -0.662, -2.136],
        e3_minus: 10.032,
    },
    TableEntry {
        name: "H_7",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 1)],
        spectrum: &[2.481, 0.688, 0.0, -1.170, -2.0],
        e3_minus: 9.602,
    },
    TableEntry {
        name: "H_8",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 4)],
        spectrum: &[2.641, 0.724, -0.589, -1.0, -1.776],
        e3_minus: 6.804,
    },
    TableEntry {
        name: "H_9",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4)],
        spectrum: &[2.686, 0.335, 0.0, -1.271, -1.749],
        e3_minus: 7.406,
    },
    TableEntry {
        name: "H_10",
        order: 5,
        edges: &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4), (4, 1)],
        spectrum: &[2.935, 0.618, -0.463, -1.473, -1.618],
        e3_minus: 7.530,
    },
    TableEntry {
        name: "H_11",
        order: 6,
        edges: &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 2),
            (1, 4),
            (1, 3),
            (1, 5),
            (5, 4),
        ],
        spectrum: &[3.262, 1.340, -1.0, -1.0, -1.0, -1.602],
        e3_minus: 7.109,
    },
    TableEntry {
        name: "H_12",
        order: 8,
        edges: &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (3, 0),
            (4, 0),
            (5, 6),
            (5, 1),
            (6, 1),
            (7, 2),
        ],
        spectrum: &[2.866, 1.732, 1.0, -0.211, -1.0, -1.0, -1.655, -1.732],
        e3_minus: 11.742,
    },
    TableEntry {
        name: "H_13",
        order: 6,
        edges: &[(0, 1), (1, 3), (3, 0), (0, 2), (1, 4), (4, 5)],
        spectrum: &[2.334, 1.100, 0.274, -0.595, -1.374, -1.740],
        e3_minus: 8.068,
    },
    TableEntry {
        name: "H_14",
        order: 6,
        edges: &[(0, 1), (1, 3), (3, 0), (0, 2), (2, 3), (1, 4), (4, 5)],
        spectrum: &[2.655, 1.211, 0.0, -1.0, -1.0, -1.866],
        e3_minus: 8.499,
    },
    TableEntry {
        name: "H_15",
        order: 7,
        edges: &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (4, 5), (2, 6)],
        spectrum: &[2.438, 1.139, 0.618, 0.0, -0.820, -1.618, -1.757],
        e3_minus: 10.679,
    },
    TableEntry {
        name: "H_16",
        order: 7,
        edges: &[
            (0, 1),
            (1, 3),
            (3, 0),
            (0, 2),
            (2, 3),
            (1, 4),
            (4, 5),
            (3, 6),
        ],
        spectrum: &[2.765, 1.239, 0.326, 0.0, -1.0, -1.375, -1.955],
        e3_minus: 11.074,
    },
    TableEntry {
        name: "H_17",
        order: 6,
        edges: &[(0, 1), (1, 2), (2, 0), (3, 1), (1, 4), (2, 5)],
        spectrum: &[2.445, 0.796, 0.0, 0.0, -1.370, -1.872],
        e3_minus: 9.136,
    },
];

/// Table rows that are gadgets `H_i` start at this offset.
const GADGET_OFFSET: usize = 5;

/// Table entry for gadget `H_i`.
pub fn gadget_entry(i: usize) -> Option<&'static TableEntry> {
    (1..=17).contains(&i).then(|| &TABLE[GADGET_OFFSET + i])
}

pub fn gadget(i: usize) -> Option<Graph> {
    gadget_entry(i).map(TableEntry::graph)
}

pub fn gadget_order(i: usize) -> Option<usize> {
    gadget_entry(i).map(|e| e.order)
}

/// Named table entry (`"P_3"`, `"C_5"`, `"H_12"`, ...).
pub fn table_entry(name: &str) -> Option<&'static TableEntry> {
    TABLE.iter().find(|e| e.name == name)
}

/// All 17 gadgets keyed by index.
pub fn gadget_catalog() -> BTreeMap<usize, Graph> {
    (1..=17).map(|i| (i, gadget(i).unwrap())).collect()
}

/// Every table row in table order: the six named graphs, then `H_1..H_17`.
pub fn table_entries() -> impl Iterator<Item = &'static TableEntry> {
    TABLE.iter()
}
