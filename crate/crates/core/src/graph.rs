//! The n-total graph and its metric invariants.
//!
//! Vertices are stored by local index `0..order`, each mapped back to a ring
//! element; for a whole graph the two coincide. Small graphs (up to
//! [`BITSET_LIMIT`] vertices) also keep a dense adjacency bitset, which speeds
//! up BFS and short-cycle detection.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::ideal::{IdealDescriptor, IdealUnion};
use crate::ring::{Elem, Ring};
use crate::{Error, MAX_GRAPH_ORDER};

/// Graphs up to this many vertices keep a dense adjacency bitset.
pub const BITSET_LIMIT: usize = 8192;

/// Distance or girth; `Infinite` when no path or cycle exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("inf"),
        }
    }
}

/// Which vertices a graph covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Whole,
    /// Induced on `D`.
    D,
    /// Induced on `R \ D`.
    Complement,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Whole => "R",
            Side::D => "D",
            Side::Complement => "R\\D",
        })
    }
}

/// Shortest path between two ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathResult {
    pub from: Elem,
    pub to: Elem,
    pub length: Dist,
    /// Ring elements along the path, empty when unreachable.
    pub path: Vec<Elem>,
}

/// Simple undirected graph on (a subset of) the elements of a ring.
#[derive(Clone, Debug)]
pub struct NTotalGraph {
    ring: Ring,
    ideal: IdealDescriptor,
    n: u32,
    side: Side,
    vertices: Vec<Elem>,
    in_d: Vec<bool>,
    neighbors: Vec<Vec<u32>>,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

/// Builds the n-total graph of `ring` with respect to `d`.
///
/// `x^n` is computed once per vertex; vertices are then bucketed by that
/// power, so each vertex only scans the distinct power values.
pub fn build_graph(ring: &Ring, d: &IdealUnion, n: u32) -> Result<NTotalGraph, Error> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if ring.order() > MAX_GRAPH_ORDER {
        return Err(Error::TooLarge {
            order: ring.order() as u64,
            limit: MAX_GRAPH_ORDER as u64,
        });
    }
    let powers: Vec<Elem> = ring.elements().map(|x| ring.pow_positive(x, n)).collect();
    let mut buckets: BTreeMap<Elem, Vec<u32>> = BTreeMap::new();
    for (x, &p) in powers.iter().enumerate() {
        buckets.entry(p).or_default().push(x as u32);
    }
    let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); ring.order() as usize];
    for (x, &px) in powers.iter().enumerate() {
        for (&py, ys) in &buckets {
            if d.contains(ring.add(px, py)) {
                neighbors[x].extend(ys.iter().copied().filter(|&y| y as usize != x));
            }
        }
        neighbors[x].sort_unstable();
    }
    let vertices: Vec<Elem> = ring.elements().collect();
    let in_d = vertices.iter().map(|&x| d.contains(x)).collect();
    Ok(NTotalGraph::assemble(
        ring.clone(),
        d.descriptor().clone(),
        n,
        Side::Whole,
        vertices,
        in_d,
        neighbors,
    ))
}

impl NTotalGraph {
    fn assemble(
        ring: Ring,
        ideal: IdealDescriptor,
        n: u32,
        side: Side,
        vertices: Vec<Elem>,
        in_d: Vec<bool>,
        neighbors: Vec<Vec<u32>>,
    ) -> NTotalGraph {
        let v = vertices.len();
        let edges = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        let (words, bits) = if v <= BITSET_LIMIT {
            let words = v.div_ceil(64).max(1);
            let mut bits = vec![0u64; words * v];
            for (i, ns) in neighbors.iter().enumerate() {
                for &j in ns {
                    bits[i * words + j as usize / 64] |= 1 << (j % 64);
                }
            }
            (words, bits)
        } else {
            (0, Vec::new())
        };
        NTotalGraph {
            ring,
            ideal,
            n,
            side,
            vertices,
            in_d,
            neighbors,
            words,
            bits,
            edges,
        }
    }

    /// Subgraph induced on `D` or on its complement. Whole returns a copy.
    pub fn induced_subgraph(&self, which: Side) -> NTotalGraph {
        let keep: Vec<bool> = match which {
            Side::Whole => vec![true; self.order()],
            Side::D => self.in_d.clone(),
            Side::Complement => self.in_d.iter().map(|b| !b).collect(),
        };
        let mut local = vec![u32::MAX; self.order()];
        let mut vertices = Vec::new();
        let mut in_d = Vec::new();
        for i in 0..self.order() {
            if keep[i] {
                local[i] = vertices.len() as u32;
                vertices.push(self.vertices[i]);
                in_d.push(self.in_d[i]);
            }
        }
        let neighbors = (0..self.order())
            .filter(|&i| keep[i])
            .map(|i| {
                self.neighbors[i]
                    .iter()
                    .filter(|&&j| keep[j as usize])
                    .map(|&j| local[j as usize])
                    .collect()
            })
            .collect();
        let side = match (self.side, which) {
            (s, Side::Whole) => s,
            (_, w) => w,
        };
        NTotalGraph::assemble(
            self.ring.clone(),
            self.ideal.clone(),
            self.n,
            side,
            vertices,
            in_d,
            neighbors,
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self) -> &IdealDescriptor {
        &self.ideal
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Local index to ring element.
    pub fn vertices(&self) -> &[Elem] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Elem {
        self.vertices[i]
    }

    pub fn local_index(&self, x: Elem) -> Option<usize> {
        self.vertices.binary_search(&x).ok()
    }

    pub fn in_d(&self, i: usize) -> bool {
        self.in_d[i]
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    #[inline]
    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        if self.words > 0 {
            self.bits[i * self.words + j / 64] & (1 << (j % 64)) != 0
        } else {
            self.neighbors[i].binary_search(&(j as u32)).is_ok()
        }
    }

    /// Edges as local index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edges);
        for (i, ns) in self.neighbors.iter().enumerate() {
            for &j in ns {
                if (i as u32) < j {
                    out.push((i as u32, j));
                }
            }
        }
        out
    }

    /// Edges as ring-element pairs `(x, y)` with `x < y`, sorted.
    pub fn element_edges(&self) -> Vec<(Elem, Elem)> {
        self.edges()
            .into_iter()
            .map(|(i, j)| (self.vertices[i as usize], self.vertices[j as usize]))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let v = self.order();
        self.edges == v * v.saturating_sub(1) / 2
    }

    /// Connected components as sorted local index lists, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let v = self.order();
        let mut seen = vec![false; v];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..v {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s as u32);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.neighbors[u as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// BFS distances from local vertex `src`; `u32::MAX` marks unreachable.
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let v = self.order();
        let mut dist = vec![u32::MAX; v];
        dist[src] = 0;
        if self.words > 0 {
            let w = self.words;
            let mut unvisited = vec![u64::MAX; w];
            let tail = v % 64;
            if tail != 0 {
                unvisited[w - 1] = (1u64 << tail) - 1;
            }
            if v == 0 {
                return dist;
            }
            unvisited[src / 64] &= !(1 << (src % 64));
            let mut frontier = vec![src as u32];
            let mut level = 0;
            let mut next_bits = vec![0u64; w];
            while !frontier.is_empty() {
                level += 1;
                next_bits.iter_mut().for_each(|b| *b = 0);
                for &u in &frontier {
                    let row = &self.bits[u as usize * w..(u as usize + 1) * w];
                    for k in 0..w {
                        next_bits[k] |= row[k] & unvisited[k];
                    }
                }
                frontier.clear();
                for k in 0..w {
                    let mut word = next_bits[k];
                    unvisited[k] &= !word;
                    while word != 0 {
                        let b = word.trailing_zeros() as usize;
                        word &= word - 1;
                        let x = k * 64 + b;
                        dist[x] = level;
                        frontier.push(x as u32);
                    }
                }
            }
        } else {
            let mut queue = VecDeque::from([src as u32]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                for &x in &self.neighbors[u as usize] {
                    if dist[x as usize] == u32::MAX {
                        dist[x as usize] = du + 1;
                        queue.push_back(x);
                    }
                }
            }
        }
        dist
    }

    /// Eccentricity of each vertex within its own component.
    pub fn eccentricities(&self) -> Vec<u32> {
        (0..self.order())
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .filter(|&d| d != u32::MAX)
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Whole-graph diameter: 0 for at most one vertex, infinite when
    /// disconnected, else the largest BFS distance.
    pub fn diameter(&self) -> Dist {
        if self.order() <= 1 {
            return Dist::Finite(0);
        }
        if !self.is_connected() {
            return Dist::Infinite;
        }
        Dist::Finite(self.eccentricities().into_iter().max().unwrap_or(0))
    }

    /// Diameter of each component, in [`NTotalGraph::components`] order.
    pub fn component_diameters(&self) -> Vec<u32> {
        let ecc = self.eccentricities();
        self.components()
            .iter()
            .map(|c| c.iter().map(|&i| ecc[i as usize]).max().unwrap_or(0))
            .collect()
    }

    fn has_triangle(&self) -> bool {
        let w = self.words;
        self.edges().iter().any(|&(i, j)| {
            let (a, b) = (i as usize * w, j as usize * w);
            (0..w).any(|k| self.bits[a + k] & self.bits[b + k] != 0)
        })
    }

    fn has_four_cycle(&self) -> bool {
        let w = self.words;
        let v = self.order();
        (0..v).any(|i| {
            (i + 1..v).any(|j| {
                let mut common = 0;
                for k in 0..w {
                    common += (self.bits[i * w + k] & self.bits[j * w + k]).count_ones();
                    if common >= 2 {
                        return true;
                    }
                }
                false
            })
        })
    }

    /// Length of a shortest cycle, infinite for forests.
    pub fn girth(&self) -> Dist {
        if self.edges == 0 {
            return Dist::Infinite;
        }
        if self.words > 0 {
            if self.has_triangle() {
                return Dist::Finite(3);
            }
            if self.order() <= 2048 && self.has_four_cycle() {
                return Dist::Finite(4);
            }
        }
        // per-root BFS; a non-tree edge closes a cycle through the root's tree
        let v = self.order();
        let mut best = u32::MAX;
        let mut dist = vec![u32::MAX; v];
        let mut parent = vec![u32::MAX; v];
        let mut queue = VecDeque::new();
        for s in 0..v {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            parent.iter_mut().for_each(|p| *p = u32::MAX);
            dist[s] = 0;
            queue.clear();
            queue.push_back(s as u32);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if 2 * du + 1 >= best {
                    break;
                }
                for &x in &self.neighbors[u as usize] {
                    if dist[x as usize] == u32::MAX {
                        dist[x as usize] = du + 1;
                        parent[x as usize] = u;
                        queue.push_back(x);
                    } else if parent[u as usize] != x {
                        best = best.min(du + dist[x as usize] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Dist::Infinite
        } else {
            Dist::Finite(best)
        }
    }

    /// BFS shortest path between ring elements, ties broken by ascending
    /// vertex index.
    pub fn shortest_path(&self, from: Elem, to: Elem) -> Result<PathResult, Error> {
        let missing = |x: Elem| {
            Error::OutOfDomain(alloc::format!(
                "{} is not a vertex of this graph",
                self.ring.label(x)
            ))
        };
        let s = self.local_index(from).ok_or_else(|| missing(from))?;
        let t = self.local_index(to).ok_or_else(|| missing(to))?;
        let v = self.order();
        let mut parent = vec![u32::MAX; v];
        let mut seen = vec![false; v];
        seen[s] = true;
        let mut queue = VecDeque::from([s as u32]);
        while let Some(u) = queue.pop_front() {
            if u as usize == t {
                break;
            }
            for &x in &self.neighbors[u as usize] {
                if !seen[x as usize] {
                    seen[x as usize] = true;
                    parent[x as usize] = u;
                    queue.push_back(x);
                }
            }
        }
        if !seen[t] {
            return Ok(PathResult {
                from,
                to,
                length: Dist::Infinite,
                path: Vec::new(),
            });
        }
        let mut path = vec![self.vertices[t]];
        let mut cur = t;
        while cur != s {
            cur = parent[cur] as usize;
            path.push(self.vertices[cur]);
        }
        path.reverse();
        Ok(PathResult {
            from,
            to,
            length: Dist::Finite(path.len() as u32 - 1),
            path,
        })
    }

    /// Graph name such as `3-TG(Fq:2:2)` or `3-TG(Fp:7 \ D)`.
    pub fn title(&self) -> String {
        match self.side {
            Side::Whole => alloc::format!("{}-TG({})", self.n, self.ring),
            Side::D => alloc::format!("{}-TG(D in {})", self.n, self.ring),
            Side::Complement => alloc::format!("{}-TG({} \\ D)", self.n, self.ring),
        }
    }

    /// Graphviz DOT text. `notes` become `//` comment lines.
    pub fn export_dot(&self, notes: &[String]) -> String {
        let mut out = String::new();
        let _ = self.write_dot(&mut out, notes);
        out
    }

    fn write_dot(&self, out: &mut String, notes: &[String]) -> fmt::Result {
        writeln!(out, "graph \"{}\" {{", self.title())?;
        writeln!(out, "  // D = {}, n = {}", self.ideal, self.n)?;
        for note in notes {
            writeln!(out, "  // {note}")?;
        }
        for (i, &x) in self.vertices.iter().enumerate() {
            write!(out, "  v{i} [label=\"")?;
            self.ring.write_label(out, x)?;
            writeln!(out, "\"];")?;
        }
        for (i, j) in self.edges() {
            writeln!(out, "  v{i} -- v{j};")?;
        }
        out.write_str("}\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn setup(ring: &str, ideal: &str, n: u32) -> NTotalGraph {
        let r = Ring::from_descriptor(&ring.parse::<RingDescriptor>().unwrap()).unwrap();
        let d = IdealUnion::parse(&r, ideal).unwrap();
        build_graph(&r, &d, n).unwrap()
    }

    #[test]
    fn f4_cube_graph() {
        let g = setup("Fq:2:2:1,1,1", "zero", 3);
        assert_eq!(g.element_edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.components(), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(g.girth(), Dist::Finite(3));
        assert_eq!(g.diameter(), Dist::Infinite);
    }

    #[test]
    fn z7_cube_graph() {
        let g = setup("Fp:7", "zero", 3);
        let c = g.induced_subgraph(Side::Complement);
        assert_eq!(c.order(), 6);
        assert_eq!(c.edge_count(), 9);
        for (x, y) in c.element_edges() {
            let low = [1, 2, 4];
            assert!(low.contains(&x) != low.contains(&y));
        }
        assert_eq!(c.diameter(), Dist::Finite(2));
        assert_eq!(c.component_diameters(), vec![2]);
        assert_eq!(c.girth(), Dist::Finite(4));
        let d = g.induced_subgraph(Side::D);
        assert_eq!(d.order(), 1);
        assert_eq!(d.diameter(), Dist::Finite(0));
    }

    #[test]
    fn klein_four_cycle() {
        let g = setup("prod(Fp:2,Fp:2)", "zero@1|zero@2", 3);
        assert_eq!(g.element_edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(g.diameter(), Dist::Finite(2));
        assert_eq!(g.girth(), Dist::Finite(4));
        let p = g.shortest_path(0, 3).unwrap();
        assert_eq!(p.length, Dist::Finite(2));
        assert_eq!(p.path, vec![0, 1, 3]);
        assert_eq!(g.shortest_path(2, 2).unwrap().length, Dist::Finite(0));
    }

    #[test]
    fn f9_fifth_powers() {
        let g = setup("Fq:3:2:1,0,1", "zero", 5).induced_subgraph(Side::Complement);
        assert_eq!(g.components().len(), 4);
        assert_eq!(g.diameter(), Dist::Infinite);
        assert_eq!(g.component_diameters(), vec![1, 1, 1, 1]);
        assert_eq!(g.girth(), Dist::Infinite);
        let f4 = setup("Fq:2:2", "zero", 5).induced_subgraph(Side::Complement);
        assert_eq!(f4.edge_count(), 0);
        assert_eq!(f4.diameter(), Dist::Infinite);
    }

    #[test]
    fn unreachable_path() {
        let g = setup("prod(Fp:3,Fp:7)", "zero@1|zero@2", 2);
        let r = g.ring().clone();
        let one = r.from_coordinates(&[1, 1]).unwrap();
        assert_eq!(g.shortest_path(0, one).unwrap().length, Dist::Infinite);
    }

    #[test]
    fn dot_export() {
        let g = setup("Fq:2:2", "zero", 3);
        let dot = g.export_dot(&[]);
        assert_eq!(dot.matches("[label=").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("label=\"1+x\""));
        assert_eq!(dot, g.export_dot(&[]));
    }

    #[test]
    fn zero_exponent_rejected() {
        let r = Ring::prime_field(5).unwrap();
        let d = IdealUnion::parse(&r, "zero").unwrap();
        assert_eq!(build_graph(&r, &d, 0).unwrap_err(), Error::ZeroExponent);
    }

    #[test]
    fn girth_paths_agree_with_plain_bfs() {
        // the sparse fallback is exercised by stripping the bitset
        for (ring, ideal, n) in [
            ("Fp:7", "zero", 3),
            ("prod(Fp:2,Fp:2)", "zero@1|zero@2", 3),
            ("prod(Fp:3,Fp:3)", "zero@1|zero@2", 3),
            ("Fp:13", "zero", 2),
        ] {
            let g = setup(ring, ideal, n);
            let mut sparse = g.clone();
            sparse.words = 0;
            sparse.bits.clear();
            assert_eq!(g.girth(), sparse.girth(), "{ring} n={n}");
            assert_eq!(g.diameter(), sparse.diameter());
            for s in 0..g.order() {
                assert_eq!(g.bfs(s), sparse.bfs(s));
            }
        }
    }
}
