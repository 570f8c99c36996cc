//! Proper colorings: validation, exact search, explicit constructions and bounds for
//! exact distance graphs of hypercubes.

mod bounds;
mod certificates;
mod grid;
mod kneser;
mod layered;
mod solver;
mod table1;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use bounds::{chi_bound_formulas, BoundRecord, Sourced};
pub use certificates::j841_five_coloring;
pub use grid::grid_pattern_coloring;
pub use kneser::{k831_case, k831_coloring, kneser_min_coloring};
pub use layered::{default_sub_colorings, layered_coloring, level_adjacent, LayeredReport, LayeredVariant, RuleConflict, SubColorings};
pub use solver::{
    dsatur, dsatur_extend, exact_chromatic, extend_with_fewest_fresh, k_coloring, max_clique, ChromaticOutcome, Decision,
    DEFAULT_COLOR_BUDGET,
};
pub use table1::{table1_report, table1_text, Table1Cell, Table1Options, Table1Report, PRINTED_TABLE1};

/// Total map from vertices to positive colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Coloring {
    colors: Vec<u32>,
    count: usize,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::PartialColoring(v));
        }
        let count = colors.iter().collect::<BTreeSet<_>>().len();
        Ok(Coloring { colors, count })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Number of distinct colors.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Renumbers colors `1..=count` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors, count: self.count }
    }
}

impl TryFrom<Vec<u32>> for Coloring {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Coloring::new(v)
    }
}

impl From<Coloring> for Vec<u32> {
    fn from(c: Coloring) -> Self {
        c.colors
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringVerdict {
    pub proper: bool,
    pub colors_used: usize,
    /// Monochromatic edges `(u, v)` with `u <= v`; a loop shows up as `(v, v)`.
    pub violations: Vec<(usize, usize)>,
}

pub fn validate_coloring(g: &Graph, c: &Coloring) -> Result<ColoringVerdict> {
    if c.len() != g.order() {
        return Err(Error::PartialColoring(c.len().min(g.order())));
    }
    let violations: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| c.color(u) == c.color(v)).collect();
    Ok(ColoringVerdict {
        proper: violations.is_empty(),
        colors_used: c.count(),
        violations,
    })
}
