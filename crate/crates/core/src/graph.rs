//! `T_p` read as the weighted adjacency matrix of a directed circulant graph
//! on `p − 1` vertices (self-loops included, no symmetrization).

use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::arith::PrimitiveRoot;
use crate::circulant::build_tp;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct GraphSpectrumSummary {
    pub p: u64,
    pub g: u64,
    pub num_vertices: usize,
    pub nonzero_eigenvalues: usize,
    pub zero_multiplicity: usize,
    pub spectrum: Vec<Complex64>,
}

impl Serialize for GraphSpectrumSummary {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.spectrum.iter().map(|z| [z.re, z.im]).collect();
        let mut st = s.serialize_struct("GraphSpectrumSummary", 6)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("g", &self.g)?;
        st.serialize_field("num_vertices", &self.num_vertices)?;
        st.serialize_field("nonzero_eigenvalues", &self.nonzero_eigenvalues)?;
        st.serialize_field("zero_multiplicity", &self.zero_multiplicity)?;
        st.serialize_field("spectrum", &pairs)?;
        st.end()
    }
}

pub fn graph_spectrum_summary(root: PrimitiveRoot) -> GraphSpectrumSummary {
    let t = build_tp(root);
    let s = t.eigenvalues();
    GraphSpectrumSummary {
        p: root.p(),
        g: root.g(),
        num_vertices: t.order(),
        nonzero_eigenvalues: s.nonzero_count,
        zero_multiplicity: s.zero_multiplicity(),
        spectrum: s.eigenvalues,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// One `i j w` line per edge.
    EdgeList,
    /// The full weight matrix, one row per line.
    Adjacency,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "edge_list" | "edge-list" => Ok(GraphFormat::EdgeList),
            "adjacency" => Ok(GraphFormat::Adjacency),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Edge `i → j` carries weight `first_row[(j − i) mod (p−1)]`.
pub fn export_graph(root: PrimitiveRoot, format: GraphFormat) -> String {
    let t = build_tp(root);
    match format {
        GraphFormat::Adjacency => t.to_text(),
        GraphFormat::EdgeList => {
            let n = t.order();
            let mut out = String::with_capacity(n * n * 8);
            for i in 0..n {
                for j in 0..n {
                    writeln!(out, "{i} {j} {}", t.entry(i, j)).expect("write to String");
                }
            }
            out
        }
    }
}
