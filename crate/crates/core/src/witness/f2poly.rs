//! Polynomials over F2 in a fixed number of variables, membership in the
//! principal primes `(X_i)` and `(1 + X_1 + .. + X_k)`, and the chain
//! `0 - F_1 - .. - F_k - 1` with `F_i = X_1 + .. + X_i` in `F2[X_1..X_k]`.
//!
//! Adjacency through a principal prime `(h)` only depends on residues mod `h`:
//! `R/(h)` is again a polynomial ring over F2, whose fraction field has no
//! roots of unity other than 1, so `a^n = b^n` there forces `a = b`. Windows
//! therefore bucket vertices by residue instead of testing pairs.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::RangeInclusive;

use crate::graph::Dist;
use crate::Error;

pub const MAX_VARS: usize = 8;

/// Exponent vector, ordered by total degree and then with `X_1` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `F2[X_1..X_vars]` as its set of monomials.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Poly {
    vars: usize,
    terms: BTreeSet<Monomial>,
}

impl F2Poly {
    pub fn zero(vars: usize) -> Self {
        F2Poly { vars, terms: BTreeSet::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::from_monomials(vars, [Monomial::one(vars)])
    }

    /// `X_i`, 1-based.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!((1..=vars).contains(&i), "variable X{i} out of range");
        let mut e = vec![0; vars];
        e[i - 1] = 1;
        Self::from_monomials(vars, [Monomial(e)])
    }

    /// `X_1 + .. + X_i`.
    pub fn partial_sum(vars: usize, i: usize) -> Self {
        (1..=i).fold(Self::zero(vars), |acc, j| acc.add(&Self::var(vars, j)))
    }

    /// Sum of the given monomials; repeated monomials cancel.
    pub fn from_monomials(vars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero(vars);
        for m in monomials {
            assert_eq!(m.0.len(), vars, "monomial arity");
            p.toggle(m);
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(Monomial::degree).max()
    }

    pub fn constant_term(&self) -> bool {
        self.terms.contains(&Monomial::one(self.vars))
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        assert_eq!(self.vars, other.vars);
        F2Poly {
            vars: self.vars,
            terms: self.terms.symmetric_difference(&other.terms).cloned().collect(),
        }
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        assert_eq!(self.vars, other.vars);
        let mut p = Self::zero(self.vars);
        for a in &self.terms {
            for b in &other.terms {
                p.toggle(a.times(b));
            }
        }
        p
    }

    pub fn pow(&self, mut n: u32) -> F2Poly {
        let mut base = self.clone();
        let mut acc = Self::one(self.vars);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Value at a point of `F2^vars`.
    pub fn eval(&self, point: &[bool]) -> bool {
        let hits = self
            .terms
            .iter()
            .filter(|m| m.0.iter().zip(point).all(|(&e, &x)| e == 0 || x))
            .count();
        hits % 2 == 1
    }

    /// Drop every monomial containing `X_i`, i.e. set `X_i = 0`.
    pub fn set_zero(&self, i: usize) -> F2Poly {
        F2Poly {
            vars: self.vars,
            terms: self.terms.iter().filter(|m| m.0[i - 1] == 0).cloned().collect(),
        }
    }

    /// Substitute `X_k <- 1 + X_1 + .. + X_{k-1}`, where `k = vars`.
    pub fn substitute_sum(&self) -> F2Poly {
        let k = self.vars;
        let s = Self::one(k).add(&Self::partial_sum(k, k - 1));
        let mut powers = vec![Self::one(k)];
        let mut out = Self::zero(k);
        for m in &self.terms {
            let e = m.0[k - 1] as usize;
            while powers.len() <= e {
                let next = powers[powers.len() - 1].mul(&s);
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[k - 1] = 0;
            let part = Self::from_monomials(k, [rest]).mul(&powers[e]);
            out = out.add(&part);
        }
        out
    }

    /// Parse `0`, `1`, `X1^3+X1X2`, `x1*x2 + 1` and similar.
    pub fn parse(vars: usize, s: &str) -> Result<F2Poly, Error> {
        let bad = |why: &str| Error::Parse(format!("polynomial `{s}`: {why}"));
        let mut p = Self::zero(vars);
        for term in s.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            match term.as_str() {
                "" => return Err(bad("empty term")),
                "0" => continue,
                "1" => {
                    p.toggle(Monomial::one(vars));
                    continue;
                }
                _ => {}
            }
            let mut e = vec![0u16; vars];
            let bytes = term.as_bytes();
            let mut at = 0;
            let number = |at: &mut usize| -> Option<u32> {
                let start = *at;
                while *at < bytes.len() && bytes[*at].is_ascii_digit() {
                    *at += 1;
                }
                term[start..*at].parse().ok()
            };
            while at < bytes.len() {
                match bytes[at] {
                    b'*' => at += 1,
                    b'X' | b'x' => {
                        at += 1;
                        let i = number(&mut at).ok_or_else(|| bad("missing variable index"))? as usize;
                        if !(1..=vars).contains(&i) {
                            return Err(bad("variable index out of range"));
                        }
                        let mut power = 1;
                        if at < bytes.len() && bytes[at] == b'^' {
                            at += 1;
                            power = number(&mut at).ok_or_else(|| bad("missing exponent"))?;
                        }
                        let total = e[i - 1] as u32 + power;
                        e[i - 1] = u16::try_from(total).map_err(|_| bad("exponent too large"))?;
                    }
                    _ => return Err(bad("unexpected character")),
                }
            }
            p.toggle(Monomial(e));
        }
        Ok(p)
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (t, m) in self.terms.iter().enumerate() {
            if t > 0 {
                f.write_str("+")?;
            }
            if m.degree() == 0 {
                f.write_str("1")?;
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "X{}", i + 1)?,
                    _ => write!(f, "X{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// Generator of one of the principal primes making up `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `X_i`, 1-based.
    Var(usize),
    /// `1 + X_1 + .. + X_k`.
    OnePlusSum,
}

impl Generator {
    /// `X_1, .., X_k, 1 + X_1 + .. + X_k`.
    pub fn all(vars: usize) -> Vec<Generator> {
        (1..=vars).map(Generator::Var).chain([Generator::OnePlusSum]).collect()
    }

    pub fn poly(self, vars: usize) -> F2Poly {
        match self {
            Generator::Var(i) => F2Poly::var(vars, i),
            Generator::OnePlusSum => F2Poly::one(vars).add(&F2Poly::partial_sum(vars, vars)),
        }
    }

    /// Canonical representative of `f` modulo this generator.
    pub fn residue(self, f: &F2Poly) -> F2Poly {
        match self {
            Generator::Var(i) => f.set_zero(i),
            Generator::OnePlusSum => f.substitute_sum(),
        }
    }

    pub fn describe(self, vars: usize) -> String {
        format!("{}", self.poly(vars))
    }
}

pub fn f2_membership_principal(f: &F2Poly, generator: Generator) -> bool {
    generator.residue(f).is_zero()
}

/// First generator whose ideal contains `f`.
pub fn ideal_containing(f: &F2Poly) -> Option<Generator> {
    Generator::all(f.vars())
        .into_iter()
        .find(|&g| f2_membership_principal(f, g))
}

/// `0, F_1, .., F_k, 1` in `k` variables.
pub fn diameter_chain(vars: usize) -> Vec<F2Poly> {
    let mut chain: Vec<F2Poly> = (0..=vars).map(|i| F2Poly::partial_sum(vars, i)).collect();
    chain.push(F2Poly::one(vars));
    chain
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWitness {
    pub from: F2Poly,
    pub to: F2Poly,
    /// Generator whose ideal contains `from^n + to^n`.
    pub generator: Option<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCheck {
    pub n: u32,
    pub edges: Vec<EdgeWitness>,
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        self.edges.iter().all(|e| e.generator.is_some())
    }

    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn path(&self) -> Vec<F2Poly> {
        let mut p: Vec<F2Poly> = self.edges.iter().map(|e| e.from.clone()).collect();
        p.extend(self.edges.last().map(|e| e.to.clone()));
        p
    }
}

/// Symbolic membership check of every edge of the chain for exponent `n`.
pub fn check_chain(vars: usize, n: u32) -> ChainCheck {
    let chain = diameter_chain(vars);
    let edges = chain
        .windows(2)
        .map(|w| {
            let sum = w[0].pow(n).add(&w[1].pow(n));
            EdgeWitness {
                from: w[0].clone(),
                to: w[1].clone(),
                generator: ideal_containing(&sum),
            }
        })
        .collect();
    ChainCheck { n, edges }
}

/// Every set of `k` of the `k + 1` generators has a common zero in `F2^k`.
///
/// An edge through `(h)` keeps the value at any zero of `h` fixed, and 0 and 1
/// differ everywhere, so a path from 0 to 1 uses every generator and has at
/// least `k + 1` edges.
pub fn common_zero_certificate(vars: usize) -> bool {
    let gens: Vec<(Generator, F2Poly)> = Generator::all(vars)
        .into_iter()
        .map(|g| (g, g.poly(vars)))
        .collect();
    gens.iter().all(|(omitted, _)| {
        (0u32..1 << vars).any(|bits| {
            let point: Vec<bool> = (0..vars).map(|i| bits >> i & 1 == 1).collect();
            gens.iter()
                .filter(|(g, _)| g != omitted)
                .all(|(_, h)| !h.eval(&point))
        })
    })
}

/// Window parameters: all polynomials of degree at most `deg_cap` with at most
/// `max_terms` monomials. Without `max_terms` the largest count fitting in
/// `vertex_limit` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct F2WindowSpec {
    pub deg_cap: u32,
    pub max_terms: Option<usize>,
    pub vertex_limit: usize,
}

impl Default for F2WindowSpec {
    fn default() -> Self {
        F2WindowSpec { deg_cap: 2, max_terms: None, vertex_limit: 1 << 16 }
    }
}

fn monomials_up_to(vars: usize, deg: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, deg, &mut vec![0; vars], &mut out);
    out.sort();
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets_up_to(m: usize, t: usize) -> u64 {
    (0..=t.min(m) as u64).fold(0u64, |acc, i| acc.saturating_add(binomial(m as u64, i)))
}

/// Finite window of `F2[X_1..X_k]` with `D` the union of the `k + 1`
/// generator ideals.
pub struct F2Window {
    vars: usize,
    polys: Vec<F2Poly>,
    index: BTreeMap<F2Poly, u32>,
    /// Per generator: residue bucket of each vertex.
    bucket_of: Vec<Vec<u32>>,
    /// Per generator: members of each bucket.
    members: Vec<Vec<Vec<u32>>>,
    /// Per generator: the bucket of residue 0, if present.
    zero_bucket: Vec<Option<u32>>,
}

impl F2Window {
    pub fn new(vars: usize, spec: &F2WindowSpec) -> Result<Self, Error> {
        if !(1..=MAX_VARS).contains(&vars) {
            return Err(Error::InvalidWindow(format!(
                "{vars} variables; supported range is 1..={MAX_VARS}"
            )));
        }
        let monos = monomials_up_to(vars, spec.deg_cap);
        let m = monos.len();
        let limit = spec.vertex_limit as u64;
        let t = match spec.max_terms {
            Some(t) => {
                let count = subsets_up_to(m, t);
                if count > limit {
                    return Err(Error::TooLarge { order: count, limit });
                }
                t.min(m)
            }
            None => (0..=m).take_while(|&t| subsets_up_to(m, t) <= limit).last().unwrap_or(0),
        };
        if t == 0 {
            return Err(Error::InvalidWindow("window holds no nonzero polynomial".into()));
        }
        let mut polys = Vec::new();
        let mut chosen = Vec::new();
        for size in 0..=t {
            combinations(m, size, 0, &mut chosen, &mut |c| {
                polys.push(F2Poly::from_monomials(vars, c.iter().map(|&i| monos[i].clone())));
            });
        }
        let index = polys
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let gens = Generator::all(vars);
        let mut bucket_of = Vec::with_capacity(gens.len());
        let mut members = Vec::with_capacity(gens.len());
        let mut zero_bucket = Vec::with_capacity(gens.len());
        for g in gens {
            let mut ids: BTreeMap<F2Poly, u32> = BTreeMap::new();
            let mut of = Vec::with_capacity(polys.len());
            let mut mem: Vec<Vec<u32>> = Vec::new();
            for (v, p) in polys.iter().enumerate() {
                let key = g.residue(p);
                let next = ids.len() as u32;
                let id = *ids.entry(key).or_insert(next);
                if id == next {
                    mem.push(Vec::new());
                }
                mem[id as usize].push(v as u32);
                of.push(id);
            }
            zero_bucket.push(ids.get(&F2Poly::zero(vars)).copied());
            bucket_of.push(of);
            members.push(mem);
        }
        Ok(F2Window { vars, polys, index, bucket_of, members, zero_bucket })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.polys.len()
    }

    pub fn vertex(&self, v: u32) -> &F2Poly {
        &self.polys[v as usize]
    }

    pub fn index_of(&self, p: &F2Poly) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn in_d(&self, v: u32) -> bool {
        (0..self.members.len()).any(|g| Some(self.bucket_of[g][v as usize]) == self.zero_bucket[g])
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        u != v && (0..self.members.len()).any(|g| self.bucket_of[g][u as usize] == self.bucket_of[g][v as usize])
    }

    fn bfs(&self, from: u32, to: u32, avoid_d: bool) -> Option<Vec<u32>> {
        let mut parent = vec![u32::MAX; self.order()];
        parent[from as usize] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = parent[x as usize];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for g in 0..self.members.len() {
                for &v in &self.members[g][self.bucket_of[g][u as usize] as usize] {
                    if parent[v as usize] == u32::MAX && !(avoid_d && self.in_d(v)) {
                        parent[v as usize] = u;
                        queue.push_back(v);
                    }
                }
            }
        }
        None
    }

    /// Shortest path inside the window, optionally avoiding `D`.
    pub fn shortest_path(&self, from: &F2Poly, to: &F2Poly, avoid_d: bool) -> Option<Vec<F2Poly>> {
        let (a, b) = (self.index_of(from)?, self.index_of(to)?);
        let path = self.bfs(a, b, avoid_d)?;
        Some(path.into_iter().map(|v| self.polys[v as usize].clone()).collect())
    }

    pub fn distance(&self, from: &F2Poly, to: &F2Poly, avoid_d: bool) -> Dist {
        match self.shortest_path(from, to, avoid_d) {
            Some(p) => Dist::Finite(p.len() as u32 - 1),
            None => Dist::Infinite,
        }
    }
}

fn combinations(m: usize, size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == size {
        f(cur);
        return;
    }
    for i in start..m {
        if m - i < size - cur.len() {
            break;
        }
        cur.push(i);
        combinations(m, size, i + 1, cur, f);
        cur.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBound {
    /// No path shorter than `m` inside the window.
    WindowConfirmed { distance: u32 },
    /// The window could not settle the bound.
    UpperBoundOnly { reason: String },
    /// A path shorter than `m` exists in the window.
    Violated { distance: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiameterReport {
    pub m: usize,
    pub chains: Vec<ChainCheck>,
    pub certificate: bool,
    pub window_vertices: usize,
    pub lower_bound: LowerBound,
    /// A shortest path from 0 to 1 found in the window.
    pub window_path: Option<Vec<F2Poly>>,
}

impl DiameterReport {
    pub fn upper_bound_holds(&self) -> bool {
        self.chains.iter().all(|c| c.holds() && c.length() == self.m)
    }

    pub fn window_confirmed(&self) -> bool {
        matches!(self.lower_bound, LowerBound::WindowConfirmed { .. })
    }

    pub fn confirmed(&self) -> bool {
        self.upper_bound_holds() && self.certificate && self.window_confirmed()
    }
}

fn check_m(m: usize) -> Result<usize, Error> {
    if !(2..=6).contains(&m) {
        return Err(Error::OutOfDomain(format!("m = {m}; supported range is 2..=6")));
    }
    Ok(m - 1)
}

fn diameter_with_window(
    m: usize,
    ns: RangeInclusive<u32>,
    spec: &F2WindowSpec,
) -> Result<(DiameterReport, Option<F2Window>), Error> {
    let vars = check_m(m)?;
    if *ns.start() == 0 {
        return Err(Error::ZeroExponent);
    }
    let chains = ns.map(|n| check_chain(vars, n)).collect();
    let certificate = common_zero_certificate(vars);
    let mut report = DiameterReport {
        m,
        chains,
        certificate,
        window_vertices: 0,
        lower_bound: LowerBound::UpperBoundOnly { reason: String::new() },
        window_path: None,
    };
    let window = match F2Window::new(vars, spec) {
        Ok(w) => w,
        Err(e @ Error::TooLarge { .. }) => {
            report.lower_bound = LowerBound::UpperBoundOnly { reason: format!("{e}") };
            return Ok((report, None));
        }
        Err(e) => return Err(e),
    };
    report.window_vertices = window.order();
    let path = window.shortest_path(&F2Poly::zero(vars), &F2Poly::one(vars), false);
    report.lower_bound = match &path {
        None => LowerBound::UpperBoundOnly { reason: "window does not connect 0 and 1".into() },
        Some(p) if p.len() - 1 < m => LowerBound::Violated { distance: p.len() as u32 - 1 },
        Some(p) => LowerBound::WindowConfirmed { distance: p.len() as u32 - 1 },
    };
    report.window_path = path;
    Ok((report, Some(window)))
}

/// Chain checks for every `n` in `ns`, the common-zero certificate, and a
/// window search for shorter paths from 0 to 1 in `F2[X_1..X_{m-1}]`.
pub fn verify_diameter_m_construction(
    m: usize,
    ns: RangeInclusive<u32>,
    spec: &F2WindowSpec,
) -> Result<DiameterReport, Error> {
    Ok(diameter_with_window(m, ns, spec)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorollaryVerdict {
    /// `m = 2`: the bound is 0.
    Trivial,
    Holds { distance: u32 },
    Violated { distance: u32 },
    /// The parent diameter check was not window-confirmed.
    UpperBoundOnly { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub m: usize,
    pub bound: u32,
    pub verdict: CorollaryVerdict,
}

/// In the window with `D` removed, the distance from `F_2` to 1 is at least
/// `m - 2`.
pub fn verify_corollary_rminusd(m: usize, spec: &F2WindowSpec) -> Result<CorollaryReport, Error> {
    let (parent, window) = diameter_with_window(m, 1..=1, spec)?;
    let bound = m as u32 - 2;
    let verdict = match (&parent.lower_bound, window) {
        (LowerBound::WindowConfirmed { .. }, _) if m == 2 => CorollaryVerdict::Trivial,
        (LowerBound::WindowConfirmed { .. }, Some(w)) => {
            let vars = m - 1;
            let start = F2Poly::partial_sum(vars, 2);
            match w.distance(&start, &F2Poly::one(vars), true) {
                Dist::Finite(d) if d >= bound => CorollaryVerdict::Holds { distance: d },
                Dist::Finite(d) => CorollaryVerdict::Violated { distance: d },
                Dist::Infinite => CorollaryVerdict::UpperBoundOnly {
                    reason: "window does not connect F_2 and 1 outside D".into(),
                },
            }
        }
        (LowerBound::UpperBoundOnly { reason }, _) => CorollaryVerdict::UpperBoundOnly { reason: reason.clone() },
        (other, _) => CorollaryVerdict::UpperBoundOnly { reason: format!("parent check: {other:?}") },
    };
    Ok(CorollaryReport { m, bound, verdict })
}
