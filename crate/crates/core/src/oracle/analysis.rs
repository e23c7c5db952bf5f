//! Everything the theorem checks need about one configuration, computed once.

use alloc::vec::Vec;

use crate::graph::{build_graph, Dist, NTotalGraph, Side};
use crate::ideal::{IdealUnion, PrimeIdealSpec};
use crate::ring::{has_nth_root_of_minus_one, Elem, FieldParams, Ring};
use crate::structure::{decompose, StructureReport};
use crate::Error;

use super::Config;

pub struct Analysis<'a> {
    pub config: &'a Config,
    pub ring: &'a Ring,
    pub ideal: &'a IdealUnion,
    pub whole: NTotalGraph,
    pub d_graph: NTotalGraph,
    pub complement: NTotalGraph,
    pub whole_report: StructureReport,
    pub d_report: StructureReport,
    pub complement_report: StructureReport,
    pub is_ideal: bool,
    /// Some `u` in `R` with `u^n = -1`.
    pub u_ring: Option<Elem>,
    /// Per factor, some `u` with `u^n = -1` in that factor.
    pub u_factor: Vec<Option<Elem>>,
    pub dist01: Dist,
    pub field: Option<FieldParams>,
    /// `R` is a field and `D = {0}`.
    pub zero_ideal_of_field: bool,
    /// Edges with one end in `D` and the other outside.
    pub cross_edges: usize,
}

impl<'a> Analysis<'a> {
    pub fn new(config: &'a Config, ring: &'a Ring, ideal: &'a IdealUnion) -> Result<Self, Error> {
        let n = config.n;
        let whole = build_graph(ring, ideal, n)?;
        let d_graph = whole.induced_subgraph(Side::D);
        let complement = whole.induced_subgraph(Side::Complement);
        let whole_report = decompose(&whole);
        let d_report = decompose(&d_graph);
        let complement_report = decompose(&complement);
        let is_ideal = ideal.is_ideal(ring);
        let u_ring = has_nth_root_of_minus_one(ring, n);
        let u_factor = ring
            .factors()
            .iter()
            .map(|f| has_nth_root_of_minus_one(f, n))
            .collect();
        let dist01 = whole.shortest_path(ring.zero(), ring.one())?.length;
        let field = if ring.is_field() {
            Some(FieldParams::new(ring.order() as u64, n)?)
        } else {
            None
        };
        let zero_ideal_of_field = ring.is_field()
            && ideal
                .members()
                .iter()
                .all(|m| *m.spec() == PrimeIdealSpec::Zero);
        let cross_edges = whole
            .edges()
            .iter()
            .filter(|&&(i, j)| whole.in_d(i as usize) != whole.in_d(j as usize))
            .count();
        Ok(Analysis {
            config,
            ring,
            ideal,
            whole,
            d_graph,
            complement,
            whole_report,
            d_report,
            complement_report,
            is_ideal,
            u_ring,
            u_factor,
            dist01,
            field,
            zero_ideal_of_field,
            cross_edges,
        })
    }

    pub fn n(&self) -> u32 {
        self.config.n
    }

    /// `n` odd, or a `u` with `u^n = -1` exists in `R`.
    pub fn odd_or_unit_root(&self) -> bool {
        self.config.n % 2 == 1 || self.u_ring.is_some()
    }

    pub fn member_count(&self) -> usize {
        self.ideal.members().len()
    }
}
