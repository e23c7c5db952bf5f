//! Reference drawings of small graphs, compared edge by edge with brute force.
//!
//! Each drawing lists its edges by element label together with the structure
//! it claims. A drawing can agree with the recomputed graph at the structure
//! level while individual edges are wrong; both results are reported.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{build_graph, NTotalGraph, Side};
use crate::ideal::IdealUnion;
use crate::ring::{Elem, Ring, RingDescriptor};
use crate::structure::decompose;
use crate::Error;

/// What a drawing claims about the whole picture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimedStructure {
    /// A component summary such as `K_3 ⊕ K_1`.
    Summary(&'static str),
    /// Only that the graph is connected.
    Connected,
}

#[derive(Clone, Copy, Debug)]
pub struct Drawing {
    pub id: &'static str,
    pub ring: &'static str,
    pub ideal: &'static str,
    pub n: u32,
    pub side: Side,
    pub edges: &'static [(&'static str, &'static str)],
    pub structure: ClaimedStructure,
}

const F4_CUBES: Drawing = Drawing {
    id: "3-TG(F4)",
    ring: "Fq:2:2:1,1,1",
    ideal: "zero",
    n: 3,
    side: Side::Whole,
    edges: &[("1", "x"), ("1", "1+x"), ("x", "1+x")],
    structure: ClaimedStructure::Summary("K_3 ⊕ K_1"),
};

const Z7_CUBES: Drawing = Drawing {
    id: "3-TG(Z7 \\ D)",
    ring: "Fp:7",
    ideal: "zero",
    n: 3,
    side: Side::Complement,
    edges: &[
        ("1", "3"),
        ("1", "5"),
        ("1", "6"),
        ("2", "3"),
        ("2", "5"),
        ("2", "6"),
        ("4", "3"),
        ("4", "5"),
        ("4", "6"),
    ],
    structure: ClaimedStructure::Summary("K_{3,3}"),
};

const F9_FIFTHS: Drawing = Drawing {
    id: "5-TG(F9 \\ D)",
    ring: "Fq:3:2:1,0,1",
    ideal: "zero",
    n: 5,
    side: Side::Complement,
    edges: &[("1", "x"), ("2", "2x"), ("1+x", "2+2x"), ("1+2x", "2+x")],
    structure: ClaimedStructure::Summary("4×K_{1,1}"),
};

const KLEIN_CUBES: Drawing = Drawing {
    id: "3-TG(Z2 x Z2)",
    ring: "prod(Fp:2,Fp:2)",
    ideal: "zero@1|zero@2",
    n: 3,
    side: Side::Whole,
    edges: &[
        ("(0,0)", "(1,0)"),
        ("(1,0)", "(1,1)"),
        ("(1,1)", "(0,1)"),
        ("(0,1)", "(0,0)"),
    ],
    structure: ClaimedStructure::Summary("K_{2,2}"),
};

const Z2Z3_SQUARES: Drawing = Drawing {
    id: "2-TG(Z2 x Z3)",
    ring: "prod(Fp:2,Fp:3)",
    ideal: "zero@2|zero@1",
    n: 2,
    side: Side::Whole,
    edges: &[
        ("(0,0)", "(0,1)"),
        ("(0,1)", "(0,2)"),
        ("(0,0)", "(1,0)"),
        ("(0,1)", "(1,1)"),
        ("(0,2)", "(1,2)"),
        ("(1,0)", "(1,1)"),
        ("(1,1)", "(1,2)"),
    ],
    structure: ClaimedStructure::Connected,
};

pub const DRAWINGS: [Drawing; 5] = [F4_CUBES, Z7_CUBES, F9_FIFTHS, KLEIN_CUBES, Z2Z3_SQUARES];

/// A cycle stated in the text, by element labels (first vertex not repeated).
#[derive(Clone, Copy, Debug)]
pub struct CycleClaim {
    pub id: &'static str,
    pub ring: &'static str,
    pub ideal: &'static str,
    pub n: u32,
    pub side: Side,
    pub cycle: &'static [&'static str],
}

pub const CYCLE_CLAIMS: [CycleClaim; 2] = [
    CycleClaim {
        id: "triangle in 2-TG(D), Z2 x Z3",
        ring: "prod(Fp:2,Fp:3)",
        ideal: "zero@1|zero@2",
        n: 2,
        side: Side::D,
        cycle: &["(0,0)", "(1,0)", "(0,2)"],
    },
    CycleClaim {
        id: "triangle in 3-TG(Z3 x Z3 \\ D)",
        ring: "prod(Fp:3,Fp:3)",
        ideal: "zero@1|zero@2",
        n: 3,
        side: Side::Complement,
        cycle: &["(1,1)", "(1,2)", "(2,2)"],
    },
];

fn graph_for(ring: &str, ideal: &str, n: u32, side: Side) -> Result<NTotalGraph, Error> {
    let ring = Ring::from_descriptor(&ring.parse::<RingDescriptor>()?)?;
    let d = IdealUnion::parse(&ring, ideal)?;
    Ok(build_graph(&ring, &d, n)?.induced_subgraph(side))
}

fn element(g: &NTotalGraph, label: &str) -> Result<Elem, Error> {
    g.ring()
        .parse_label(label)
        .ok_or_else(|| Error::Parse(alloc::format!("no element labelled `{label}`")))
}

fn ordered(a: Elem, b: Elem) -> (Elem, Elem) {
    (a.min(b), a.max(b))
}

/// Outcome of comparing one drawing against the recomputed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrawingCheck {
    pub id: &'static str,
    pub drawn_edges: usize,
    pub actual_edges: usize,
    /// Drawn but not edges of the graph.
    pub spurious: Vec<(String, String)>,
    /// Edges of the graph the drawing omits.
    pub missing: Vec<(String, String)>,
    pub actual_summary: String,
    pub structure_match: bool,
}

impl DrawingCheck {
    pub fn edges_match(&self) -> bool {
        self.spurious.is_empty() && self.missing.is_empty()
    }
}

pub fn compare(d: &Drawing) -> Result<DrawingCheck, Error> {
    let g = graph_for(d.ring, d.ideal, d.n, d.side)?;
    let mut drawn = BTreeSet::new();
    for (a, b) in d.edges {
        drawn.insert(ordered(element(&g, a)?, element(&g, b)?));
    }
    let actual: BTreeSet<(Elem, Elem)> = g.element_edges().into_iter().collect();
    let label = |&(a, b): &(Elem, Elem)| (g.ring().label(a), g.ring().label(b));
    let report = decompose(&g);
    let summary = report.summary();
    let structure_match = match d.structure {
        ClaimedStructure::Summary(s) => summary == s,
        ClaimedStructure::Connected => report.connected,
    };
    Ok(DrawingCheck {
        id: d.id,
        drawn_edges: drawn.len(),
        actual_edges: actual.len(),
        spurious: drawn.difference(&actual).map(label).collect(),
        missing: actual.difference(&drawn).map(label).collect(),
        actual_summary: summary,
        structure_match,
    })
}

/// Outcome of checking a claimed cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleCheck {
    pub id: &'static str,
    /// Consecutive pairs that are not edges.
    pub broken: Vec<(String, String)>,
}

impl CycleCheck {
    pub fn holds(&self) -> bool {
        self.broken.is_empty()
    }
}

pub fn check_cycle(c: &CycleClaim) -> Result<CycleCheck, Error> {
    let g = graph_for(c.ring, c.ideal, c.n, c.side)?;
    let mut broken = Vec::new();
    for i in 0..c.cycle.len() {
        let (a, b) = (c.cycle[i], c.cycle[(i + 1) % c.cycle.len()]);
        let (x, y) = (element(&g, a)?, element(&g, b)?);
        let adjacent = match (g.local_index(x), g.local_index(y)) {
            (Some(i), Some(j)) => g.is_adjacent(i, j),
            _ => false,
        };
        if !adjacent {
            broken.push((a.into(), b.into()));
        }
    }
    Ok(CycleCheck { id: c.id, broken })
}

fn join(pairs: &[(String, String)]) -> String {
    let parts: Vec<String> = pairs.iter().map(|(a, b)| alloc::format!("{a}-{b}")).collect();
    parts.join(", ")
}

fn drawing_note(c: &DrawingCheck) -> Option<String> {
    if c.edges_match() && c.structure_match {
        return None;
    }
    let mut line = alloc::format!("drawing {}:", c.id);
    if !c.spurious.is_empty() {
        line.push_str(&alloc::format!(" drawn non-edges {};", join(&c.spurious)));
    }
    if !c.missing.is_empty() {
        line.push_str(&alloc::format!(" missing edges {};", join(&c.missing)));
    }
    line.push_str(if c.structure_match {
        " claimed structure still holds"
    } else {
        " claimed structure fails"
    });
    line.push_str(&alloc::format!(" (recomputed: {})", c.actual_summary));
    Some(line)
}

/// One line per drawing or cycle claim that disagrees with brute force.
pub fn errata_notes() -> Result<Vec<String>, Error> {
    let mut notes = Vec::new();
    for d in &DRAWINGS {
        notes.extend(drawing_note(&compare(d)?));
    }
    for claim in &CYCLE_CLAIMS {
        let c = check_cycle(claim)?;
        if !c.holds() {
            notes.push(alloc::format!(
                "cycle claim {}: {} not adjacent",
                c.id,
                join(&c.broken)
            ));
        }
    }
    Ok(notes)
}

/// Errata of the drawings showing exactly this graph.
pub fn notes_for(ring: &Ring, ideal: &IdealUnion, n: u32, side: Side) -> Result<Vec<String>, Error> {
    let mut notes = Vec::new();
    for d in DRAWINGS.iter().filter(|d| d.n == n && d.side == side) {
        let r = Ring::from_descriptor(&d.ring.parse::<RingDescriptor>()?)?;
        if r != *ring || IdealUnion::parse(&r, d.ideal)?.mask() != ideal.mask() {
            continue;
        }
        notes.extend(drawing_note(&compare(d)?));
    }
    Ok(notes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn pairs(p: &[(&str, &str)]) -> Vec<(String, String)> {
        p.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn exact_drawings() {
        for d in [&F4_CUBES, &Z7_CUBES, &KLEIN_CUBES] {
            let c = compare(d).unwrap();
            assert!(c.edges_match(), "{c:?}");
            assert!(c.structure_match, "{c:?}");
        }
    }

    #[test]
    fn f9_drawing_errata() {
        let c = compare(&F9_FIFTHS).unwrap();
        assert!(c.structure_match);
        assert_eq!(c.spurious, pairs(&[("1", "x"), ("2", "2x")]));
        assert_eq!(c.missing, pairs(&[("1", "2"), ("x", "2x")]));
    }

    #[test]
    fn z2z3_drawing_errata() {
        let c = compare(&Z2Z3_SQUARES).unwrap();
        assert!(c.structure_match);
        assert_eq!(c.actual_edges, 7);
        assert_eq!(c.spurious, pairs(&[("(0,1)", "(1,1)"), ("(0,2)", "(1,2)")]));
        assert_eq!(c.missing, pairs(&[("(0,0)", "(0,2)"), ("(1,0)", "(1,2)")]));
    }

    #[test]
    fn cycle_claims() {
        let bad = check_cycle(&CYCLE_CLAIMS[0]).unwrap();
        assert_eq!(bad.broken, pairs(&[("(1,0)", "(0,2)")]));
        assert!(check_cycle(&CYCLE_CLAIMS[1]).unwrap().holds());
    }

    #[test]
    fn notes_cover_the_errata() {
        let notes = errata_notes().unwrap();
        assert_eq!(notes.len(), 3);
        assert!(notes[0].contains("1-x"));
        assert!(notes[1].contains("(0,1)-(1,1)"));
        assert!(notes[2].starts_with("cycle claim"));
    }

    #[test]
    fn notes_for_matching_configuration() {
        let ring = Ring::from_descriptor(&"prod(Fp:2,Fp:3)".parse().unwrap()).unwrap();
        let d = IdealUnion::parse(&ring, "zero@1|zero@2").unwrap();
        let notes = notes_for(&ring, &d, 2, Side::Whole).unwrap();
        assert_eq!(notes.len(), 1);
        assert!(notes[0].contains("2-TG(Z2 x Z3)"));
        assert!(notes_for(&ring, &d, 3, Side::Whole).unwrap().is_empty());
        let f4 = Ring::from_descriptor(&"Fq:2:2".parse().unwrap()).unwrap();
        let zero = IdealUnion::parse(&f4, "zero").unwrap();
        assert!(notes_for(&f4, &zero, 3, Side::Whole).unwrap().is_empty());
    }
}
