//! Disjoint unions kept as a multiset of parts.
//!
//! Extremal graphs such as `aK_{r+1} ∪ C(b)` outgrow the 63-vertex
//! capacity for small `r` and large `m`, while their parts stay tiny. An
//! [`Assembly`] answers edge, degree, clique and isomorphism questions from
//! the parts and only materializes a [`Graph`] on request.

use crate::canon::{canonical_form, Certificate, ComponentCert};
use crate::cliques::{clique_profile, CliqueProfile};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Debug, Default)]
pub struct Assembly {
    parts: Vec<(Graph, usize)>,
}

impl Assembly {
    pub fn new() -> Self {
        Assembly::default()
    }

    /// Appends `copies` copies of `part` (isolated vertices in `part` are kept).
    pub fn push(mut self, part: Graph, copies: usize) -> Self {
        if copies > 0 {
            self.parts.push((part, copies));
        }
        self
    }

    pub fn parts(&self) -> &[(Graph, usize)] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.iter().map(|(g, c)| g.vertex_count() * c).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.parts.iter().map(|(g, c)| g.edge_count() * c).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.parts
            .iter()
            .map(|(g, _)| g.max_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn profile(&self) -> CliqueProfile {
        self.parts
            .iter()
            .fold(CliqueProfile::default(), |acc, (g, c)| {
                acc.add(&clique_profile(g).scaled(*c as u64))
            })
    }

    pub fn k_total(&self) -> u64 {
        self.profile().total()
    }

    /// Certificate of the union with isolated vertices stripped; equal to
    /// `canonical_form(&self.to_graph()?.strip_isolated())` whenever the
    /// union fits.
    pub fn certificate(&self) -> Certificate {
        let mut comps: Vec<ComponentCert> = Vec::new();
        for (g, copies) in &self.parts {
            let stripped = g.strip_isolated();
            for c in stripped.components() {
                let cert = crate::canon::labeling(&stripped.induced(c)).certificate();
                comps.extend(std::iter::repeat_n(cert, *copies));
            }
        }
        Certificate::from_components(comps)
    }

    /// Parts laid out consecutively in insertion order.
    pub fn to_graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for (part, copies) in &self.parts {
            for _ in 0..*copies {
                g = g.disjoint_union(part)?;
            }
        }
        Ok(g)
    }

    /// Union with another assembly.
    pub fn join(&self, other: &Assembly) -> Assembly {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        Assembly { parts }
    }
}

impl From<Graph> for Assembly {
    fn from(g: Graph) -> Self {
        Assembly::new().push(g, 1)
    }
}

/// Stripped certificate of a plain graph, for comparison with
/// [`Assembly::certificate`].
pub fn stripped_certificate(g: &Graph) -> Certificate {
    canonical_form(&g.strip_isolated())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn certificate_matches_materialized_union() {
        let k4 = Graph::complete(4).unwrap();
        let p3 = Graph::path(3).unwrap();
        let a = Assembly::new().push(k4.clone(), 2).push(p3.clone(), 1);
        let g = a.to_graph().unwrap();
        assert_eq!(a.certificate(), stripped_certificate(&g));
        assert_eq!(a.edge_count(), 14);
        assert_eq!(a.k_total(), 2 * 11 + 2);
        let b = Assembly::new().push(p3, 1).push(k4, 2);
        assert_eq!(a.certificate(), b.certificate());
    }

    #[test]
    fn large_unions_stay_abstract() {
        let a = Assembly::new().push(Graph::complete(2).unwrap(), 60);
        assert_eq!(a.edge_count(), 60);
        assert_eq!(a.k_total(), 60);
        assert!(a.to_graph().is_err());
        let with_isolated = Graph::with_vertices(4, &[Edge::new(0, 1)]).unwrap();
        let b = Assembly::new().push(with_isolated, 60);
        assert_eq!(a.certificate(), b.certificate());
    }
}
