//! Component classification and structure reports.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::graph::{Dist, NTotalGraph};
use crate::Error;

/// Shape of one connected component.
///
/// Normalized so that `K_1` is always `Isolated` and `K_2` is always
/// `CompleteBipartite(1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentClass {
    Isolated,
    Complete(u32),
    /// Part sizes with `a <= b`.
    CompleteBipartite(u32, u32),
    Other { size: u32, edges: u32 },
}

impl ComponentClass {
    pub fn normalized(self) -> ComponentClass {
        match self {
            ComponentClass::Complete(0 | 1) => ComponentClass::Isolated,
            ComponentClass::Complete(2) => ComponentClass::CompleteBipartite(1, 1),
            ComponentClass::CompleteBipartite(a, b) if a.min(b) == 0 && a.max(b) <= 1 => {
                ComponentClass::Isolated
            }
            ComponentClass::CompleteBipartite(a, b) if a > b => {
                ComponentClass::CompleteBipartite(b, a)
            }
            c => c,
        }
    }

    pub fn size(self) -> u32 {
        match self {
            ComponentClass::Isolated => 1,
            ComponentClass::Complete(d) => d,
            ComponentClass::CompleteBipartite(a, b) => a + b,
            ComponentClass::Other { size, .. } => size,
        }
    }

    pub fn edge_count(self) -> u64 {
        match self {
            ComponentClass::Isolated => 0,
            ComponentClass::Complete(d) => d as u64 * (d as u64).saturating_sub(1) / 2,
            ComponentClass::CompleteBipartite(a, b) => a as u64 * b as u64,
            ComponentClass::Other { edges, .. } => edges as u64,
        }
    }

    /// Diameter implied by the shape; unknown for `Other`.
    pub fn diameter(self) -> Option<u32> {
        match self.normalized() {
            ComponentClass::Isolated => Some(0),
            ComponentClass::Complete(_) => Some(1),
            ComponentClass::CompleteBipartite(1, 1) => Some(1),
            ComponentClass::CompleteBipartite(_, _) => Some(2),
            ComponentClass::Other { .. } => None,
        }
    }

    /// Girth implied by the shape; unknown for `Other`.
    pub fn girth(self) -> Option<Dist> {
        match self.normalized() {
            ComponentClass::Complete(d) if d >= 3 => Some(Dist::Finite(3)),
            ComponentClass::CompleteBipartite(a, _) if a >= 2 => Some(Dist::Finite(4)),
            ComponentClass::Other { .. } => None,
            _ => Some(Dist::Infinite),
        }
    }

    /// Short kind tag for serialized reports.
    pub fn kind(self) -> &'static str {
        match self {
            ComponentClass::Isolated => "isolated",
            ComponentClass::Complete(_) => "complete",
            ComponentClass::CompleteBipartite(..) => "complete_bipartite",
            ComponentClass::Other { .. } => "other",
        }
    }

    /// Size parameters: `[d]`, `[a, b]`, `[size, edges]`, or empty.
    pub fn sizes(self) -> Vec<u32> {
        match self {
            ComponentClass::Isolated => Vec::new(),
            ComponentClass::Complete(d) => vec![d],
            ComponentClass::CompleteBipartite(a, b) => vec![a, b],
            ComponentClass::Other { size, edges } => vec![size, edges],
        }
    }
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::Isolated => f.write_str("K_1"),
            ComponentClass::Complete(d) if *d < 10 => write!(f, "K_{d}"),
            ComponentClass::Complete(d) => write!(f, "K_{{{d}}}"),
            ComponentClass::CompleteBipartite(a, b) => write!(f, "K_{{{a},{b}}}"),
            ComponentClass::Other { size, edges } => write!(f, "G({size},{edges})"),
        }
    }
}

/// Canonical description of a graph's component structure and metrics.
#[derive(Clone, Debug)]
pub struct StructureReport {
    /// Sorted multiset of component classes with counts.
    pub classes: Vec<(ComponentClass, usize)>,
    pub connected: bool,
    pub totally_disconnected: bool,
    pub diameter: Dist,
    pub girth: Dist,
    pub component_diameters: Vec<u32>,
}

/// Reports compare by class multiset, connectivity flags, diameter and girth.
impl PartialEq for StructureReport {
    fn eq(&self, other: &Self) -> bool {
        self.classes == other.classes
            && self.connected == other.connected
            && self.totally_disconnected == other.totally_disconnected
            && self.diameter == other.diameter
            && self.girth == other.girth
    }
}

impl Eq for StructureReport {}

fn tally(classes: impl IntoIterator<Item = ComponentClass>) -> Vec<(ComponentClass, usize)> {
    let mut counts: BTreeMap<ComponentClass, usize> = BTreeMap::new();
    for c in classes {
        *counts.entry(c.normalized()).or_default() += 1;
    }
    counts.into_iter().collect()
}

impl StructureReport {
    /// The report a graph with exactly these components must have. Returns
    /// `None` when an `Other` class makes the metrics unknowable.
    pub fn from_classes(
        classes: impl IntoIterator<Item = (ComponentClass, usize)>,
    ) -> Option<StructureReport> {
        let expanded: Vec<ComponentClass> = classes
            .into_iter()
            .flat_map(|(c, k)| core::iter::repeat_n(c.normalized(), k))
            .collect();
        let components = expanded.len();
        let vertices: u32 = expanded.iter().map(|c| c.size()).sum();
        let component_diameters = expanded
            .iter()
            .map(|c| c.diameter())
            .collect::<Option<Vec<_>>>()?;
        let mut girth = Dist::Infinite;
        for c in &expanded {
            girth = girth.min(c.girth()?);
        }
        let connected = components <= 1;
        let diameter = if vertices <= 1 {
            Dist::Finite(0)
        } else if connected {
            Dist::Finite(component_diameters[0])
        } else {
            Dist::Infinite
        };
        Some(StructureReport {
            classes: tally(expanded.iter().copied()),
            connected,
            totally_disconnected: expanded.iter().all(|c| *c == ComponentClass::Isolated),
            diameter,
            girth,
            component_diameters,
        })
    }

    pub fn vertex_count(&self) -> u64 {
        self.classes
            .iter()
            .map(|(c, k)| c.size() as u64 * *k as u64)
            .sum()
    }

    pub fn component_count(&self) -> usize {
        self.classes.iter().map(|(_, k)| k).sum()
    }

    /// Compact form such as `K_3 ⊕ K_1` or `4×K_{1,1}`.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        if self.classes.is_empty() {
            out.push_str("empty");
        }
        // larger shapes first reads more naturally
        for (i, (c, k)) in self.classes.iter().rev().enumerate() {
            if i > 0 {
                out.push_str(" ⊕ ");
            }
            if *k > 1 {
                let _ = write!(out, "{k}×");
            }
            let _ = write!(out, "{c}");
        }
        out
    }
}

/// Classifies a connected component given by local vertex indices.
pub fn classify_component(g: &NTotalGraph, vertices: &[u32]) -> Result<ComponentClass, Error> {
    if vertices.is_empty() {
        return Err(Error::NotAComponent("empty vertex set".into()));
    }
    let mut inside = vec![false; g.order()];
    for &v in vertices {
        inside[v as usize] = true;
    }
    let mut degree_sum = 0usize;
    for &v in vertices {
        for &w in g.neighbors(v as usize) {
            if !inside[w as usize] {
                return Err(Error::NotAComponent(alloc::format!(
                    "edge {}-{} leaves the set",
                    g.ring().label(g.vertex(v as usize)),
                    g.ring().label(g.vertex(w as usize))
                )));
            }
        }
        degree_sum += g.degree(v as usize);
    }
    let size = vertices.len();
    let edges = degree_sum / 2;

    // BFS 2-coloring doubles as the connectivity check
    let mut color = vec![u8::MAX; g.order()];
    color[vertices[0] as usize] = 0;
    let mut queue = VecDeque::from([vertices[0]]);
    let mut reached = 1;
    let mut bipartite = true;
    while let Some(u) = queue.pop_front() {
        let cu = color[u as usize];
        for &w in g.neighbors(u as usize) {
            match color[w as usize] {
                u8::MAX => {
                    color[w as usize] = 1 - cu;
                    reached += 1;
                    queue.push_back(w);
                }
                cw if cw == cu => bipartite = false,
                _ => {}
            }
        }
    }
    if reached != size {
        return Err(Error::NotAComponent(alloc::format!(
            "only {reached} of {size} vertices are connected"
        )));
    }
    if size == 1 {
        return Ok(ComponentClass::Isolated);
    }
    if edges == size * (size - 1) / 2 {
        return Ok(ComponentClass::Complete(size as u32).normalized());
    }
    if bipartite {
        let a = vertices.iter().filter(|&&v| color[v as usize] == 0).count();
        let b = size - a;
        if edges == a * b {
            return Ok(ComponentClass::CompleteBipartite(a as u32, b as u32).normalized());
        }
    }
    Ok(ComponentClass::Other {
        size: size as u32,
        edges: edges as u32,
    })
}

/// Full structure report of a graph.
pub fn decompose(g: &NTotalGraph) -> StructureReport {
    let comps = g.components();
    let classes = tally(
        comps
            .iter()
            .map(|c| classify_component(g, c).expect("components are closed and connected")),
    );
    StructureReport {
        classes,
        connected: comps.len() <= 1,
        totally_disconnected: g.edge_count() == 0,
        diameter: g.diameter(),
        girth: g.girth(),
        component_diameters: g.component_diameters(),
    }
}

pub fn is_totally_disconnected(g: &NTotalGraph) -> bool {
    g.edge_count() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, Side};
    use crate::ideal::IdealUnion;
    use crate::ring::{Ring, RingDescriptor};

    fn graph(ring: &str, ideal: &str, n: u32) -> NTotalGraph {
        let r = Ring::from_descriptor(&ring.parse::<RingDescriptor>().unwrap()).unwrap();
        let d = IdealUnion::parse(&r, ideal).unwrap();
        build_graph(&r, &d, n).unwrap()
    }

    #[test]
    fn f4_triangle_plus_point() {
        let g = graph("Fq:2:2", "zero", 3);
        assert_eq!(
            classify_component(&g, &[1, 2, 3]).unwrap(),
            ComponentClass::Complete(3)
        );
        let r = decompose(&g);
        assert_eq!(
            r.classes,
            vec![(ComponentClass::Isolated, 1), (ComponentClass::Complete(3), 1)]
        );
        assert_eq!(r.summary(), "K_3 ⊕ K_1");
    }

    #[test]
    fn z7_complement_is_k33() {
        let g = graph("Fp:7", "zero", 3).induced_subgraph(Side::Complement);
        let all: Vec<u32> = (0..6).collect();
        assert_eq!(
            classify_component(&g, &all).unwrap(),
            ComponentClass::CompleteBipartite(3, 3)
        );
        assert!(!is_totally_disconnected(&g));
    }

    #[test]
    fn f9_pairs() {
        let g = graph("Fq:3:2:1,0,1", "zero", 5).induced_subgraph(Side::Complement);
        // local 0 and 1 are ring elements 1 and 2
        assert_eq!(
            classify_component(&g, &[0, 1]).unwrap(),
            ComponentClass::CompleteBipartite(1, 1)
        );
        let r = decompose(&g);
        assert_eq!(r.classes, vec![(ComponentClass::CompleteBipartite(1, 1), 4)]);
        assert_eq!(r.summary(), "4×K_{1,1}");
    }

    #[test]
    fn totally_disconnected_cases() {
        let g = graph("Fq:2:2", "zero", 5).induced_subgraph(Side::Complement);
        let r = decompose(&g);
        assert_eq!(r.classes, vec![(ComponentClass::Isolated, 3)]);
        assert!(r.totally_disconnected);
        let single = graph("Fp:5", "zero", 1).induced_subgraph(Side::D);
        assert!(is_totally_disconnected(&single));
    }

    #[test]
    fn non_components_rejected() {
        let g = graph("Fp:7", "zero", 3);
        assert!(matches!(
            classify_component(&g, &[1, 3]),
            Err(Error::NotAComponent(_))
        ));
        let c = graph("Fq:2:2", "zero", 5).induced_subgraph(Side::Complement);
        assert!(matches!(
            classify_component(&c, &[0, 1]),
            Err(Error::NotAComponent(_))
        ));
    }

    #[test]
    fn normalization() {
        assert_eq!(
            ComponentClass::Complete(1).normalized(),
            ComponentClass::Isolated
        );
        assert_eq!(
            ComponentClass::Complete(2).normalized(),
            ComponentClass::CompleteBipartite(1, 1)
        );
        assert_eq!(
            ComponentClass::CompleteBipartite(1, 0).normalized(),
            ComponentClass::Isolated
        );
        assert_eq!(
            ComponentClass::CompleteBipartite(4, 2).normalized(),
            ComponentClass::CompleteBipartite(2, 4)
        );
    }

    #[test]
    fn reports_from_classes_match_decomposition() {
        for (ring, n) in [("Fp:7", 3), ("Fq:3:2", 5), ("Fp:13", 4), ("Fq:2:3", 7)] {
            let g = graph(ring, "zero", n);
            let r = decompose(&g);
            let expected = StructureReport::from_classes(r.classes.clone()).unwrap();
            assert_eq!(r, expected, "{ring} n={n}");
        }
    }
}
