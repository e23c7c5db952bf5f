//! Prime ideals of finite rings and unions of them.
//!
//! Ideals are described structurally: the zero ideal of a field, a cylinder
//! `P x prod R_s` over one factor of a product, or a whole factor embedded as
//! `{0} x .. x R_i x .. x {0}`. A raw element set is accepted for experiments
//! and is always validated exhaustively.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::ring::{Elem, Ring};
use crate::{Error, EXHAUSTIVE_VALIDATION_LIMIT};

/// Structural description of a prime ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PrimeIdealSpec {
    /// `{0}` in a field.
    Zero,
    /// `inner` in factor `position` (0-based), everything in the other factors.
    Cylinder {
        position: usize,
        inner: Box<PrimeIdealSpec>,
    },
    /// Factor `position` embedded with zeros elsewhere.
    FullFactor { position: usize },
    /// Explicit element indices.
    Raw(Vec<Elem>),
}

impl PrimeIdealSpec {
    pub fn zero_at(position: usize) -> Self {
        PrimeIdealSpec::Cylinder {
            position,
            inner: Box::new(PrimeIdealSpec::Zero),
        }
    }

    /// Rewrites a cylinder at position 0 of a non-product ring to its inner ideal.
    fn normalize(self, ring: &Ring) -> Self {
        match self {
            PrimeIdealSpec::Cylinder { position: 0, inner } if !ring.is_product() => {
                inner.normalize(ring)
            }
            PrimeIdealSpec::Cylinder { position, inner } if position < ring.factors().len() => {
                let factor = &ring.factors()[position];
                PrimeIdealSpec::Cylinder {
                    position,
                    inner: Box::new(inner.normalize(factor)),
                }
            }
            other => other,
        }
    }

    fn check_shape(&self, ring: &Ring) -> Result<(), Error> {
        match self {
            PrimeIdealSpec::Zero => Ok(()),
            PrimeIdealSpec::Cylinder { position, inner } => {
                let factors = ring.factors();
                if !ring.is_product() || *position >= factors.len() {
                    return Err(Error::InvalidIdeal(alloc::format!(
                        "position {} out of range for {ring}",
                        position + 1
                    )));
                }
                inner.check_shape(&factors[*position])
            }
            PrimeIdealSpec::FullFactor { position } => {
                if !ring.is_product() || *position >= ring.factors().len() {
                    return Err(Error::InvalidIdeal(alloc::format!(
                        "position {} out of range for {ring}",
                        position + 1
                    )));
                }
                Ok(())
            }
            PrimeIdealSpec::Raw(elems) => match elems.iter().find(|&&e| e >= ring.order()) {
                Some(e) => Err(Error::InvalidIdeal(alloc::format!(
                    "element {e} out of range for {ring}"
                ))),
                None => Ok(()),
            },
        }
    }

    /// Sufficient conditions for primality that hold without enumeration.
    fn structurally_prime(&self, ring: &Ring) -> Result<(), Error> {
        match self {
            PrimeIdealSpec::Zero if ring.is_field() => Ok(()),
            PrimeIdealSpec::Zero => Err(Error::InvalidIdeal(alloc::format!(
                "zero ideal of {ring} is not prime"
            ))),
            PrimeIdealSpec::Cylinder { position, inner } => {
                inner.structurally_prime(&ring.factors()[*position])
            }
            PrimeIdealSpec::FullFactor { position } => {
                let f = ring.factors();
                if f.len() == 2 && f[1 - position].is_field() {
                    Ok(())
                } else {
                    Err(Error::InvalidIdeal(alloc::format!(
                        "full@{} is prime only in a product of two fields",
                        position + 1
                    )))
                }
            }
            PrimeIdealSpec::Raw(_) => Err(Error::InvalidIdeal(alloc::format!(
                "raw element sets need exhaustive validation (order <= {EXHAUSTIVE_VALIDATION_LIMIT})"
            ))),
        }
    }

    pub fn contains(&self, ring: &Ring, x: Elem) -> bool {
        match self {
            PrimeIdealSpec::Zero => x == 0,
            PrimeIdealSpec::Cylinder { position, inner } => {
                inner.contains(&ring.factors()[*position], ring.coordinate(x, *position))
            }
            PrimeIdealSpec::FullFactor { position } => (0..ring.factors().len())
                .filter(|&i| i != *position)
                .all(|i| ring.coordinate(x, i) == 0),
            PrimeIdealSpec::Raw(elems) => elems.contains(&x),
        }
    }
}

impl fmt::Display for PrimeIdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeIdealSpec::Zero => f.write_str("zero"),
            PrimeIdealSpec::Cylinder { position, inner } => write!(f, "{inner}@{}", position + 1),
            PrimeIdealSpec::FullFactor { position } => write!(f, "full@{}", position + 1),
            PrimeIdealSpec::Raw(elems) => {
                f.write_str("set:")?;
                for (i, e) in elems.iter().enumerate() {
                    if i > 0 {
                        f.write_char(',')?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PrimeIdealSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(list) = s.strip_prefix("set:") {
            let mut elems = list
                .split(',')
                .map(|e| {
                    e.trim()
                        .parse::<Elem>()
                        .map_err(|_| Error::Parse(alloc::format!("bad element `{e}` in `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            elems.sort_unstable();
            elems.dedup();
            return Ok(PrimeIdealSpec::Raw(elems));
        }
        if s == "zero" {
            return Ok(PrimeIdealSpec::Zero);
        }
        let (head, pos) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Parse(alloc::format!("unknown ideal `{s}`")))?;
        let position: usize = pos
            .trim()
            .parse()
            .ok()
            .filter(|&p| p >= 1)
            .ok_or_else(|| Error::Parse(alloc::format!("positions are 1-based, found `{pos}`")))?;
        let position = position - 1;
        if head.trim() == "full" {
            return Ok(PrimeIdealSpec::FullFactor { position });
        }
        Ok(PrimeIdealSpec::Cylinder {
            position,
            inner: Box::new(head.parse()?),
        })
    }
}

/// Union of prime ideals, written `zero@1|zero@2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealDescriptor(pub Vec<PrimeIdealSpec>);

impl IdealDescriptor {
    /// `zero@1|...|zero@k` restricted to the given 0-based positions.
    pub fn coordinate_zeros(positions: &[usize]) -> Self {
        IdealDescriptor(positions.iter().map(|&p| PrimeIdealSpec::zero_at(p)).collect())
    }

    /// Every nonempty union of coordinate zero cylinders over `k` factors,
    /// ordered by size and then lexicographically.
    pub fn all_coordinate_unions(k: usize) -> Vec<Self> {
        let mut subsets: Vec<Vec<usize>> = (1u32..(1 << k))
            .map(|mask| (0..k).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        subsets.iter().map(|s| Self::coordinate_zeros(s)).collect()
    }
}

impl fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char('|')?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for IdealDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().is_empty() {
            return Err(Error::InvalidIdeal("empty union".into()));
        }
        Ok(IdealDescriptor(
            s.split('|').map(str::parse).collect::<Result<_, _>>()?,
        ))
    }
}

/// A prime ideal with its membership mask materialized.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    spec: PrimeIdealSpec,
    mask: Vec<bool>,
    size: usize,
}

impl PrimeIdeal {
    pub fn new(ring: &Ring, spec: PrimeIdealSpec) -> Result<PrimeIdeal, Error> {
        let spec = spec.normalize(ring);
        spec.check_shape(ring)?;
        let mask: Vec<bool> = ring.elements().map(|x| spec.contains(ring, x)).collect();
        let size = mask.iter().filter(|&&b| b).count();
        Ok(PrimeIdeal { spec, mask, size })
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x as usize]
    }

    pub fn spec(&self) -> &PrimeIdealSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as Elem)
    }

    pub fn is_subset_of(&self, other: &PrimeIdeal) -> bool {
        self.elements().all(|x| other.contains(x))
    }

    /// First failure of the ideal axioms, described with a witness.
    pub fn ideal_violation(&self, ring: &Ring) -> Option<String> {
        if !self.contains(0) {
            return Some("does not contain 0".into());
        }
        let members: Vec<Elem> = self.elements().collect();
        for &a in &members {
            for &b in &members {
                let s = ring.add(a, b);
                if !self.contains(s) {
                    return Some(alloc::format!(
                        "{} + {} = {} is outside",
                        ring.label(a),
                        ring.label(b),
                        ring.label(s)
                    ));
                }
            }
            for r in ring.elements() {
                let t = ring.mul(r, a);
                if !self.contains(t) {
                    return Some(alloc::format!(
                        "{} * {} = {} is outside",
                        ring.label(r),
                        ring.label(a),
                        ring.label(t)
                    ));
                }
            }
        }
        None
    }

    /// First failure of primality (or properness), described with a witness.
    pub fn prime_violation(&self, ring: &Ring) -> Option<String> {
        if self.contains(ring.one()) {
            return Some("contains 1, so it is not proper".into());
        }
        let outside: Vec<Elem> = ring.elements().filter(|&x| !self.contains(x)).collect();
        for (i, &x) in outside.iter().enumerate() {
            for &y in &outside[i..] {
                let p = ring.mul(x, y);
                if self.contains(p) {
                    return Some(alloc::format!(
                        "{} * {} = {} is inside but neither factor is",
                        ring.label(x),
                        ring.label(y),
                        ring.label(p)
                    ));
                }
            }
        }
        None
    }
}

/// Per-member validation outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberReport {
    pub spec: PrimeIdealSpec,
    pub ideal: Result<(), String>,
    pub prime: Result<(), String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub members: Vec<MemberReport>,
    pub incomparable: Result<(), String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.incomparable.is_ok()
            && self
                .members
                .iter()
                .all(|m| m.ideal.is_ok() && m.prime.is_ok())
    }

    pub fn first_failure(&self) -> Option<String> {
        for m in &self.members {
            if let Err(e) = &m.ideal {
                return Some(alloc::format!("{} is not an ideal: {e}", m.spec));
            }
            if let Err(e) = &m.prime {
                return Some(alloc::format!("{} is not prime: {e}", m.spec));
            }
        }
        self.incomparable.clone().err()
    }
}

fn incomparability(members: &[PrimeIdeal]) -> Result<(), String> {
    for (i, p) in members.iter().enumerate() {
        for (j, q) in members.iter().enumerate() {
            if i != j && p.is_subset_of(q) {
                return Err(alloc::format!(
                    "members {} ({}) and {} ({}) are comparable: {} is contained in {}",
                    i + 1,
                    p.spec,
                    j + 1,
                    q.spec,
                    p.spec,
                    q.spec
                ));
            }
        }
    }
    Ok(())
}

/// Exhaustive check of ideal axioms, primality and pairwise incomparability.
pub fn validate_union(ring: &Ring, desc: &IdealDescriptor) -> Result<ValidationReport, Error> {
    let members = desc
        .0
        .iter()
        .map(|s| PrimeIdeal::new(ring, s.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = members
        .iter()
        .map(|m| MemberReport {
            spec: m.spec.clone(),
            ideal: m.ideal_violation(ring).map_or(Ok(()), Err),
            prime: m.prime_violation(ring).map_or(Ok(()), Err),
        })
        .collect();
    Ok(ValidationReport {
        members: reports,
        incomparable: incomparability(&members),
    })
}

/// `D`: a nonempty union of pairwise incomparable prime ideals.
#[derive(Clone, Debug)]
pub struct IdealUnion {
    members: Vec<PrimeIdeal>,
    mask: Vec<bool>,
    descriptor: IdealDescriptor,
}

impl IdealUnion {
    /// Builds and validates `D`. Rings up to the exhaustive limit are checked
    /// element by element; above it only structural kinds are accepted.
    pub fn new(ring: &Ring, desc: &IdealDescriptor) -> Result<IdealUnion, Error> {
        if desc.0.is_empty() {
            return Err(Error::InvalidIdeal("empty union".into()));
        }
        let members = desc
            .0
            .iter()
            .map(|s| PrimeIdeal::new(ring, s.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        if ring.order() <= EXHAUSTIVE_VALIDATION_LIMIT {
            for m in &members {
                if let Some(e) = m.ideal_violation(ring) {
                    return Err(Error::Validation(alloc::format!(
                        "{} is not an ideal: {e}",
                        m.spec
                    )));
                }
                if let Some(e) = m.prime_violation(ring) {
                    return Err(Error::Validation(alloc::format!(
                        "{} is not prime: {e}",
                        m.spec
                    )));
                }
            }
        } else {
            for m in &members {
                m.spec.structurally_prime(ring)?;
            }
        }
        incomparability(&members).map_err(Error::Validation)?;
        let mut mask = vec![false; ring.order() as usize];
        for m in &members {
            for x in m.elements() {
                mask[x as usize] = true;
            }
        }
        let descriptor = IdealDescriptor(members.iter().map(|m| m.spec.clone()).collect());
        Ok(IdealUnion {
            members,
            mask,
            descriptor,
        })
    }

    /// Parses `desc` and builds the union over `ring`.
    pub fn parse(ring: &Ring, desc: &str) -> Result<IdealUnion, Error> {
        IdealUnion::new(ring, &desc.parse()?)
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.mask[x as usize]
    }

    pub fn members(&self) -> &[PrimeIdeal] {
        &self.members
    }

    pub fn descriptor(&self) -> &IdealDescriptor {
        &self.descriptor
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as Elem)
    }

    /// Distinct factor positions carrying a top-level cylinder member.
    pub fn cylinder_positions(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .members
            .iter()
            .filter_map(|m| match m.spec {
                PrimeIdealSpec::Cylinder { position, .. } => Some(position),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A pair `a, b` in `D` with `a + b` outside `D`, if `D` is not closed
    /// under addition.
    pub fn ideal_witness(&self, ring: &Ring) -> Option<(Elem, Elem)> {
        let elems: Vec<Elem> = self.elements().collect();
        for (i, &a) in elems.iter().enumerate() {
            for &b in &elems[i + 1..] {
                if !self.contains(ring.add(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Whether `D` itself is an ideal. Members are ideals, so absorption holds
    /// and only additive closure can fail.
    pub fn is_ideal(&self, ring: &Ring) -> bool {
        self.members.len() == 1 || self.ideal_witness(ring).is_none()
    }

    /// First pair of coprime members with a witness `p + q = 1`.
    pub fn coprime_pair(&self, ring: &Ring) -> Option<(usize, usize, Elem, Elem)> {
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if let Some((p, q)) = are_coprime(ring, &self.members[i], &self.members[j]) {
                    return Some((i, j, p, q));
                }
            }
        }
        None
    }
}

impl fmt::Display for IdealUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.descriptor.fmt(f)
    }
}

/// Some `p` in `P` and `q` in `Q` with `p + q = 1`.
pub fn are_coprime(ring: &Ring, p: &PrimeIdeal, q: &PrimeIdeal) -> Option<(Elem, Elem)> {
    let one = ring.one();
    p.elements()
        .map(|a| (a, ring.sub(one, a)))
        .find(|&(_, b)| q.contains(b))
}
