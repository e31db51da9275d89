//! Dessins d'enfants: the bipartite map drawn on the covering surface.
//!
//! Black vertices are the cycles of `g1`, white vertices the cycles of `g2`,
//! edges the points `1..=d` (edge `i` joins the black and white vertex whose
//! cycles contain `i`), and regions the cycles of `g1·g2`.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::constellation::Constellation;
use crate::equivalence::weak_count;
use crate::error::Result;
use crate::partition::BranchDatum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dessin {
    pub degree: usize,
    pub genus: usize,
    /// Black vertices as cyclically ordered edge labels, 1-based.
    pub black: Vec<Vec<usize>>,
    pub white: Vec<Vec<usize>>,
    /// Each region as the cyclic sequence of its edges.
    pub regions: Vec<Vec<usize>>,
}

fn one_based(cycles: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    cycles.into_iter().map(|c| c.into_iter().map(|i| i + 1).collect()).collect()
}

fn lengths(cycles: &[Vec<usize>]) -> Vec<usize> {
    let mut v: Vec<usize> = cycles.iter().map(Vec::len).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

impl Dessin {
    pub fn from_constellation(c: &Constellation) -> Result<Self> {
        let [g1, g2, _] = c.perms();
        Ok(Self {
            degree: c.degree(),
            genus: c.genus()?,
            black: one_based(g1.cycles()),
            white: one_based(g2.cycles()),
            regions: one_based(g1.then(g2).cycles()),
        })
    }

    pub fn black_valences(&self) -> Vec<usize> {
        lengths(&self.black)
    }

    pub fn white_valences(&self) -> Vec<usize> {
        lengths(&self.white)
    }

    pub fn region_lengths(&self) -> Vec<usize> {
        lengths(&self.regions)
    }

    /// `(black vertex, white vertex)` of each edge, in edge order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut ends = vec![(0, 0); self.degree];
        for (b, cycle) in self.black.iter().enumerate() {
            for &e in cycle {
                ends[e - 1].0 = b;
            }
        }
        for (w, cycle) in self.white.iter().enumerate() {
            for &e in cycle {
                ends[e - 1].1 = w;
            }
        }
        ends
    }

    /// Undirected Graphviz graph; regions go to the JSON sidecar.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for (i, c) in self.black.iter().enumerate() {
            let _ = writeln!(s, "  b{i} [color=black, style=filled, fontcolor=white, label=\"{}\"];", c.len());
        }
        for (i, c) in self.white.iter().enumerate() {
            let _ = writeln!(s, "  w{i} [color=white, label=\"{}\"];", c.len());
        }
        for (e, (b, w)) in self.edges().into_iter().enumerate() {
            let _ = writeln!(s, "  b{b} -- w{w} [label=\"{}\"];", e + 1);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// One dessin per weak class of the datum.
pub fn dessins_for(datum: &BranchDatum) -> Result<Vec<Dessin>> {
    weak_count(datum)?
        .representatives
        .iter()
        .map(Dessin::from_constellation)
        .collect()
}
