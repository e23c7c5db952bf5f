//! Per-theorem checks against a brute-force [`Analysis`].

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Dist;
use crate::ideal::{IdealUnion, PrimeIdealSpec};
use crate::ring::{Elem, Ring};
use crate::structure::StructureReport;

use super::analysis::Analysis;
use super::predict;

/// Stable identifiers of the checked statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Char2FieldDecomposition,
    OddFieldDecomposition,
    OddFieldConnectivity,
    FieldDiameterGirthRange,
    SingleCylinderDisconnected,
    TwoCylinderDiameter,
    CoprimeDiameter,
    ComplementConnectedImpliesConnected,
    GeneratorDiameter,
    GirthClasses,
    ComplementDiameterBound,
    DSubgraphConnected,
    ZeroOnePath,
    DCompleteIffIdeal,
    CrossEdgesIffNotIdeal,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::Char2FieldDecomposition,
        TheoremId::OddFieldDecomposition,
        TheoremId::OddFieldConnectivity,
        TheoremId::FieldDiameterGirthRange,
        TheoremId::SingleCylinderDisconnected,
        TheoremId::TwoCylinderDiameter,
        TheoremId::CoprimeDiameter,
        TheoremId::ComplementConnectedImpliesConnected,
        TheoremId::GeneratorDiameter,
        TheoremId::GirthClasses,
        TheoremId::ComplementDiameterBound,
        TheoremId::DSubgraphConnected,
        TheoremId::ZeroOnePath,
        TheoremId::DCompleteIffIdeal,
        TheoremId::CrossEdgesIffNotIdeal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Char2FieldDecomposition => "char2-field-decomposition",
            TheoremId::OddFieldDecomposition => "odd-field-decomposition",
            TheoremId::OddFieldConnectivity => "odd-field-connectivity",
            TheoremId::FieldDiameterGirthRange => "field-diameter-girth-range",
            TheoremId::SingleCylinderDisconnected => "single-cylinder-disconnected",
            TheoremId::TwoCylinderDiameter => "two-cylinder-diameter",
            TheoremId::CoprimeDiameter => "coprime-diameter",
            TheoremId::ComplementConnectedImpliesConnected => {
                "complement-connected-implies-connected"
            }
            TheoremId::GeneratorDiameter => "generator-diameter",
            TheoremId::GirthClasses => "girth-classes",
            TheoremId::ComplementDiameterBound => "complement-diameter-bound",
            TheoremId::DSubgraphConnected => "d-subgraph-connected",
            TheoremId::ZeroOnePath => "zero-one-path",
            TheoremId::DCompleteIffIdeal => "d-complete-iff-ideal",
            TheoremId::CrossEdgesIffNotIdeal => "cross-edges-iff-not-ideal",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
    Inapplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one theorem on one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub predicted: String,
    pub observed: String,
}

impl Outcome {
    fn inapplicable(reason: &str) -> Outcome {
        Outcome {
            verdict: Verdict::Inapplicable,
            predicted: reason.to_string(),
            observed: String::new(),
        }
    }

    fn compare(ok: bool, predicted: String, observed: String) -> Outcome {
        Outcome {
            verdict: if ok { Verdict::Match } else { Verdict::Mismatch },
            predicted,
            observed,
        }
    }
}

fn describe(r: &StructureReport) -> String {
    format!(
        "{}; connected={} diam={} girth={}",
        r.summary(),
        r.connected,
        r.diameter,
        r.girth
    )
}

fn connectivity(r: &StructureReport) -> String {
    format!("connected={} diam={}", r.connected, r.diameter)
}

/// Outcome of the minimal generating-set search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSearch {
    /// `m` elements of `D` generate `R`; one such set is given.
    Found(usize, Vec<Elem>),
    /// Elements of `D` do not generate `R` at all.
    NotGenerating,
    /// `D` generates `R` but needs more elements than the search cap.
    Exceeded(usize),
}

fn ideal_mask(ring: &Ring, x: Elem) -> Vec<bool> {
    let mut mask = vec![false; ring.order() as usize];
    for r in ring.elements() {
        mask[ring.mul(x, r) as usize] = true;
    }
    mask
}

fn sum_into(ring: &Ring, acc: &[bool], ideal: &[Elem]) -> Vec<bool> {
    let mut out = vec![false; acc.len()];
    for (a, _) in acc.iter().enumerate().filter(|(_, &b)| b) {
        for &t in ideal {
            out[ring.add(a as Elem, t) as usize] = true;
        }
    }
    out
}

/// Smallest `m` such that some `x_1..x_m` in `D` generate `R`.
///
/// Only maximal principal ideals `xR` with `x` in `D` need to be tried, one
/// representative each.
pub fn minimal_generator_count(ring: &Ring, ideal: &IdealUnion, cap: usize) -> GeneratorSearch {
    let mut reps: Vec<(Elem, Vec<bool>)> = Vec::new();
    for x in ideal.elements() {
        let mask = ideal_mask(ring, x);
        if reps.iter().any(|(_, m)| *m == mask) {
            continue;
        }
        reps.push((x, mask));
    }
    let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&x, &y)| !x || y);
    let maximal: Vec<(Elem, Vec<Elem>)> = reps
        .iter()
        .filter(|(_, m)| !reps.iter().any(|(_, o)| o != m && subset(m, o)))
        .map(|(x, m)| {
            let elems = m
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i as Elem)
                .collect();
            (*x, elems)
        })
        .collect();

    let one = ring.one();
    let zero_only = {
        let mut z = vec![false; ring.order() as usize];
        z[0] = true;
        z
    };
    let mut total = zero_only.clone();
    for (_, elems) in &maximal {
        total = sum_into(ring, &total, elems);
    }
    if !total[one as usize] {
        return GeneratorSearch::NotGenerating;
    }

    // 1 lies in S + I exactly when 1 - t lies in S for some t in I
    let reaches_one = |acc: &[bool], elems: &[Elem]| {
        elems.iter().any(|&t| acc[ring.sub(one, t) as usize])
    };
    fn search(
        ring: &Ring,
        maximal: &[(Elem, Vec<Elem>)],
        acc: &[bool],
        start: usize,
        left: usize,
        chosen: &mut Vec<Elem>,
        reaches_one: &dyn Fn(&[bool], &[Elem]) -> bool,
    ) -> bool {
        for i in start..maximal.len() {
            let (x, elems) = &maximal[i];
            chosen.push(*x);
            if left == 1 {
                if reaches_one(acc, elems) {
                    return true;
                }
            } else {
                let next = sum_into(ring, acc, elems);
                if search(ring, maximal, &next, i + 1, left - 1, chosen, reaches_one) {
                    return true;
                }
            }
            chosen.pop();
        }
        false
    }
    for k in 1..=cap.min(maximal.len()) {
        let mut chosen = Vec::new();
        if search(ring, &maximal, &zero_only, 0, k, &mut chosen, &reaches_one) {
            return GeneratorSearch::Found(k, chosen);
        }
    }
    GeneratorSearch::Exceeded(cap)
}

/// Largest subset size tried by [`minimal_generator_count`] in the sweep.
pub const GENERATOR_SEARCH_CAP: usize = 6;

pub fn check(theorem: TheoremId, a: &Analysis<'_>) -> Outcome {
    match theorem {
        TheoremId::Char2FieldDecomposition => char2_field(a),
        TheoremId::OddFieldDecomposition => odd_field(a),
        TheoremId::OddFieldConnectivity => odd_connectivity(a),
        TheoremId::FieldDiameterGirthRange => field_ranges(a),
        TheoremId::SingleCylinderDisconnected => single_cylinder(a),
        TheoremId::TwoCylinderDiameter => two_cylinder(a),
        TheoremId::CoprimeDiameter => coprime(a),
        TheoremId::ComplementConnectedImpliesConnected => complement_implies(a),
        TheoremId::GeneratorDiameter => generator_diameter(a),
        TheoremId::GirthClasses => girth_classes(a),
        TheoremId::ComplementDiameterBound => complement_bound(a),
        TheoremId::DSubgraphConnected => d_connected(a),
        TheoremId::ZeroOnePath => zero_one(a),
        TheoremId::DCompleteIffIdeal => d_complete(a),
        TheoremId::CrossEdgesIffNotIdeal => cross_edges(a),
    }
}

fn char2_field(a: &Analysis<'_>) -> Outcome {
    let Some(fp) = a.field.filter(|_| a.zero_ideal_of_field && a.ring.characteristic() == 2)
    else {
        return Outcome::inapplicable("needs a field of characteristic 2 with D = {0}");
    };
    match predict::predict_field_char2(fp.m, a.n()) {
        Ok(p) => Outcome::compare(
            p == a.whole_report,
            describe(&p),
            describe(&a.whole_report),
        ),
        Err(e) => Outcome::inapplicable(&e.to_string()),
    }
}

fn odd_field(a: &Analysis<'_>) -> Outcome {
    let Some(fp) = a.field.filter(|_| a.zero_ideal_of_field && a.ring.characteristic() != 2)
    else {
        return Outcome::inapplicable("needs a field of odd characteristic with D = {0}");
    };
    match predict::predict_field_odd_char(fp.m, a.n()) {
        Ok(p) => Outcome::compare(
            p == a.complement_report,
            format!("d={} alpha={}: {}", fp.d, fp.alpha, describe(&p)),
            describe(&a.complement_report),
        ),
        Err(e) => Outcome::inapplicable(&e.to_string()),
    }
}

fn odd_connectivity(a: &Analysis<'_>) -> Outcome {
    let Some(fp) = a.field.filter(|_| a.zero_ideal_of_field && a.ring.characteristic() != 2)
    else {
        return Outcome::inapplicable("needs a field of odd characteristic with D = {0}");
    };
    match predict::predict_connectivity_corollary(fp.m, a.n()) {
        Ok(p) => Outcome::compare(
            p == a.complement_report.connected,
            format!("d={} (m-1)/2={}: connected={p}", fp.d, (fp.m - 1) / 2),
            format!("connected={}", a.complement_report.connected),
        ),
        Err(e) => Outcome::inapplicable(&e.to_string()),
    }
}

fn field_ranges(a: &Analysis<'_>) -> Outcome {
    if !a.zero_ideal_of_field {
        return Outcome::inapplicable("needs a field with D = {0}");
    }
    let r = &a.complement_report;
    let c = predict::predict_diam_girth_ranges(r);
    Outcome::compare(
        c.holds(),
        "component diam in {0,1,2}, diam in {0,1,2,inf}, girth in {3,4,inf}".into(),
        format!(
            "component diam max={} diam={} girth={}",
            r.component_diameters.iter().max().copied().unwrap_or(0),
            r.diameter,
            r.girth
        ),
    )
}

fn is_product(a: &Analysis<'_>) -> bool {
    a.ring.factors().len() >= 2
}

fn single_cylinder(a: &Analysis<'_>) -> Outcome {
    let single = a.member_count() == 1
        && matches!(a.ideal.members()[0].spec(), PrimeIdealSpec::Cylinder { .. });
    if !is_product(a) || !single {
        return Outcome::inapplicable("needs a product ring with D a single cylinder ideal");
    }
    Outcome::compare(
        !a.whole_report.connected,
        "disconnected".into(),
        connectivity(&a.whole_report),
    )
}

fn diameter_two(a: &Analysis<'_>) -> bool {
    let r = &a.whole_report;
    r.connected
        && (r.diameter == Dist::Finite(2) || (r.diameter == Dist::Finite(1) && a.whole.is_complete()))
}

fn two_cylinder(a: &Analysis<'_>) -> Outcome {
    let positions = a.ideal.cylinder_positions();
    if !is_product(a) || positions.len() < 2 {
        return Outcome::inapplicable("needs cylinder ideals over at least two coordinates");
    }
    let observed = format!("{} d(0,1)={}", connectivity(&a.whole_report), a.dist01);
    if a.odd_or_unit_root() {
        return Outcome::compare(diameter_two(a), "connected, diam 2".into(), observed);
    }
    let witness = positions.iter().find_map(|&p| a.u_factor[p].map(|u| (p, u)));
    match witness {
        Some((p, u)) => Outcome::compare(
            a.whole_report.connected && a.dist01 == Dist::Finite(2),
            format!(
                "connected, d(0,1)=2 (u={} in factor {})",
                a.ring.factors()[p].label(u),
                p + 1
            ),
            observed,
        ),
        None => Outcome::compare(
            !a.whole_report.connected,
            "disconnected (no u^n=-1 in any cylinder coordinate)".into(),
            observed,
        ),
    }
}

fn coprime(a: &Analysis<'_>) -> Outcome {
    if a.member_count() < 2 {
        return Outcome::inapplicable("needs at least two members");
    }
    if !a.odd_or_unit_root() {
        return Outcome::inapplicable("needs n odd or u^n=-1 in R");
    }
    let Some((i, j, p, q)) = a.ideal.coprime_pair(a.ring) else {
        return Outcome::inapplicable("no coprime pair of members");
    };
    Outcome::compare(
        diameter_two(a),
        format!(
            "connected, diam 2 (members {} and {} coprime: {} + {} = 1)",
            i + 1,
            j + 1,
            a.ring.label(p),
            a.ring.label(q)
        ),
        connectivity(&a.whole_report),
    )
}

fn complement_implies(a: &Analysis<'_>) -> Outcome {
    if a.is_ideal {
        return Outcome::inapplicable("D is an ideal");
    }
    if !a.odd_or_unit_root() {
        return Outcome::inapplicable("needs n odd or u^n=-1 in R");
    }
    if !a.complement_report.connected {
        return Outcome::inapplicable("R\\D graph is disconnected");
    }
    Outcome::compare(
        a.whole_report.connected,
        "connected".into(),
        connectivity(&a.whole_report),
    )
}

fn generator_diameter(a: &Analysis<'_>) -> Outcome {
    if a.is_ideal || a.member_count() < 2 {
        return Outcome::inapplicable("needs D a non-ideal union of at least two primes");
    }
    if !a.odd_or_unit_root() {
        return Outcome::inapplicable("needs n odd or u^n=-1 in R");
    }
    let observed = format!("{} d(0,1)={}", connectivity(&a.whole_report), a.dist01);
    match minimal_generator_count(a.ring, a.ideal, GENERATOR_SEARCH_CAP) {
        GeneratorSearch::Found(m, gens) => {
            let labels: Vec<String> = gens.iter().map(|&g| a.ring.label(g)).collect();
            let m = Dist::Finite(m as u32);
            Outcome::compare(
                a.whole_report.diameter == m && a.dist01 == m,
                format!("diam = d(0,1) = {m} (generators {})", labels.join(", ")),
                observed,
            )
        }
        GeneratorSearch::NotGenerating => Outcome::compare(
            !a.whole_report.connected,
            "disconnected (D does not generate R)".into(),
            observed,
        ),
        GeneratorSearch::Exceeded(cap) => {
            Outcome::inapplicable(&format!("more than {cap} generators needed"))
        }
    }
}

fn girth_classes(a: &Analysis<'_>) -> Outcome {
    if a.is_ideal || a.member_count() < 2 {
        return Outcome::inapplicable("needs D a non-ideal union of at least two primes");
    }
    let dg = a.d_report.girth;
    let d_ok = matches!(dg, Dist::Finite(3) | Dist::Infinite);
    let cg = a.complement_report.girth;
    if a.odd_or_unit_root() {
        let c_ok = matches!(cg, Dist::Finite(3) | Dist::Finite(4) | Dist::Infinite);
        Outcome::compare(
            d_ok && c_ok,
            "gr(D) in {3,inf}, gr(R\\D) in {3,4,inf}".into(),
            format!("gr(D)={dg} gr(R\\D)={cg}"),
        )
    } else {
        Outcome::compare(
            d_ok,
            "gr(D) in {3,inf}".into(),
            format!("gr(D)={dg} gr(R\\D)={cg} (unconstrained)"),
        )
    }
}

fn complement_bound(a: &Analysis<'_>) -> Outcome {
    if a.is_ideal || a.member_count() < 2 || !a.odd_or_unit_root() {
        return Outcome::inapplicable("generator-diameter hypotheses fail");
    }
    let m = match minimal_generator_count(a.ring, a.ideal, GENERATOR_SEARCH_CAP) {
        GeneratorSearch::Found(m, _) => m as u32,
        _ => return Outcome::inapplicable("no generating set within the search cap"),
    };
    if a.whole_report.diameter != Dist::Finite(m) {
        return Outcome::inapplicable("diam(R) differs from the generator count");
    }
    let bound = m.saturating_sub(2);
    Outcome::compare(
        a.complement_report.diameter >= Dist::Finite(bound),
        format!("diam(R\\D) >= {bound}"),
        format!("diam(R\\D)={}", a.complement_report.diameter),
    )
}

fn d_connected(a: &Analysis<'_>) -> Outcome {
    Outcome::compare(
        a.d_report.connected,
        "connected".into(),
        connectivity(&a.d_report),
    )
}

fn zero_one(a: &Analysis<'_>) -> Outcome {
    if a.is_ideal || a.member_count() < 2 {
        return Outcome::inapplicable("needs D a non-ideal union of at least two primes");
    }
    Outcome::compare(
        a.whole_report.connected == a.dist01.is_finite(),
        "connected iff d(0,1) finite".into(),
        format!("connected={} d(0,1)={}", a.whole_report.connected, a.dist01),
    )
}

fn d_complete(a: &Analysis<'_>) -> Outcome {
    let complete = a.d_graph.is_complete();
    Outcome::compare(
        complete == a.is_ideal,
        format!("complete={}", a.is_ideal),
        format!("complete={complete} ideal={}", a.is_ideal),
    )
}

fn cross_edges(a: &Analysis<'_>) -> Outcome {
    let observed = format!("cross edges={} ideal={}", a.cross_edges, a.is_ideal);
    if a.is_ideal {
        return Outcome::compare(a.cross_edges == 0, "no cross edges".into(), observed);
    }
    if !a.odd_or_unit_root() {
        return Outcome {
            verdict: Verdict::Inapplicable,
            predicted: "needs n odd or u^n=-1 in R".into(),
            observed,
        };
    }
    Outcome::compare(a.cross_edges > 0, "some cross edge".into(), observed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    fn setup(ring: &str, ideal: &str) -> (Ring, IdealUnion) {
        let r = Ring::from_descriptor(&ring.parse::<RingDescriptor>().unwrap()).unwrap();
        let d = IdealUnion::parse(&r, ideal).unwrap();
        (r, d)
    }

    #[test]
    fn generator_counts() {
        let (r, d) = setup("prod(Fp:2,Fp:3)", "zero@1|zero@2");
        match minimal_generator_count(&r, &d, 6) {
            GeneratorSearch::Found(2, gens) => {
                assert_eq!(gens.len(), 2);
            }
            other => panic!("{other:?}"),
        }
        let (r, d) = setup("prod(Fp:2,Fp:2)", "zero@1|zero@2");
        assert!(matches!(
            minimal_generator_count(&r, &d, 6),
            GeneratorSearch::Found(2, _)
        ));
        let (r, d) = setup("prod(Fp:3,Fp:5)", "zero@1");
        assert_eq!(
            minimal_generator_count(&r, &d, 6),
            GeneratorSearch::NotGenerating
        );
        let (r, d) = setup("prod(Fp:2,Fp:3,Fp:5)", "zero@1|zero@2|zero@3");
        assert!(matches!(
            minimal_generator_count(&r, &d, 1),
            GeneratorSearch::Exceeded(1)
        ));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.as_str()), Some(t));
        }
    }
}
