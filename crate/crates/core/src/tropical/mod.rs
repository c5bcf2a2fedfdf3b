//! Combinatorial types of tropical curves and their exact realizations.
//!
//! A combinatorial type is the discrete data of a curve: a multigraph with
//! a face assignment per vertex, an integral derivative per internal edge,
//! contracted labeled ends, and (in plane mode) unbounded rays. Positions
//! and lengths live in [`Realization`]s produced by [`realize`].

mod aut;
mod realize;

pub use aut::{aut_order, canonical_form};
pub use realize::{is_rigid, realize, RealizeOutcome, Realization};

use crate::complex::{Domain, Face};
use crate::error::Error;
use crate::lattice::IntVec2;
use crate::Result;

/// A vertex of a combinatorial type: the face of the dual complex it maps
/// to, and its degree over the base (only consulted under a nonzero twist).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub face: Face,
    pub base_degree: u64,
}

impl VertexData {
    pub fn interior() -> Self {
        VertexData {
            face: Face::Int,
            base_degree: 0,
        }
    }

    pub fn on(face: Face) -> Self {
        VertexData {
            face,
            base_degree: 0,
        }
    }
}

/// An internal edge with its integral derivative in the tail→head
/// orientation. The stored orientation is arbitrary bookkeeping; reversing
/// it while negating the derivative describes the same edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub tail: usize,
    pub head: usize,
    pub derivative: IntVec2,
}

/// The combinatorial type of a tropical curve.
///
/// `ends[i]` is the vertex carrying the contracted end with label `i + 1`;
/// contracted ends always have derivative zero. `rays` are the unbounded
/// non-contracted edges of a plane tropical curve and stay empty in
/// triangle mode (the complex is compact).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialType {
    pub vertices: Vec<VertexData>,
    pub edges: Vec<EdgeData>,
    pub ends: Vec<usize>,
    pub rays: Vec<(usize, IntVec2)>,
}

impl CombinatorialType {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Basic well-formedness: nonempty, all indices valid.
    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidCurve("no vertices".into()));
        }
        let n = self.n_vertices();
        for e in &self.edges {
            if e.tail >= n || e.head >= n {
                return Err(Error::InvalidCurve(format!(
                    "edge {}→{} references a missing vertex",
                    e.tail, e.head
                )));
            }
        }
        for (&v, label) in self.ends.iter().zip(1..) {
            if v >= n {
                return Err(Error::InvalidCurve(format!(
                    "end {label} references a missing vertex"
                )));
            }
        }
        for &(v, _) in &self.rays {
            if v >= n {
                return Err(Error::InvalidCurve("ray references a missing vertex".into()));
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n_vertices();
        if n == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// First Betti number of a connected type.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.n_vertices())
    }

    /// Derivatives of all non-contracted edges oriented away from `v`
    /// (internal edges and rays; a loop contributes both orientations).
    pub fn away_derivatives(&self, v: usize) -> Vec<IntVec2> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.tail == v {
                out.push(e.derivative);
            }
            if e.head == v {
                out.push(-e.derivative);
            }
        }
        for &(w, dir) in &self.rays {
            if w == v {
                out.push(dir);
            }
        }
        out
    }

    /// Labels (1-based) of the contracted ends at `v`.
    pub fn ends_at(&self, v: usize) -> Vec<usize> {
        self.ends
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == v)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Sum of away-derivatives at `v` minus the twist contribution. Zero
    /// means the vertex is (twisted-)balanced; meaningful for interior
    /// vertices.
    pub fn balancing_defect(&self, domain: &Domain, v: usize) -> IntVec2 {
        let mut sum = IntVec2::ZERO;
        for u in self.away_derivatives(v) {
            sum = sum + u;
        }
        let deg = self.vertices[v].base_degree as i64;
        sum - domain.twist.scale(deg)
    }
}
