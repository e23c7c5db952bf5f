//! Finite commutative rings with dense element indices.
//!
//! Every ring enumerates its elements as `0..order`. Index `0` is the additive
//! identity. Extension-field elements are coefficient vectors read as base-`p`
//! digits (constant term least significant), so in `F_4 = F_2[x]/(x^2+x+1)`
//! the elements `0, 1, x, 1+x` have indices `0, 1, 2, 3`. Product elements use
//! a mixed-radix encoding with the first factor most significant.
//!
//! Rings of order at most 256 carry precomputed addition, negation and
//! multiplication tables; larger rings evaluate on the fly. Both paths are
//! available through [`Ring::without_tables`] so they can be compared.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write};
use core::ops::{Range, RangeInclusive};
use core::str::FromStr;

use crate::arith;
use crate::Error;

/// Dense element index, `0..order`.
pub type Elem = u32;

/// Rings up to this order get arithmetic tables.
pub const TABLE_LIMIT: u32 = 256;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;
/// Largest supported ring order.
pub const MAX_RING_ORDER: u64 = 1 << 24;

/// Monic modulus over `F_p`, coefficients low-degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionFieldSpec {
    pub p: u32,
    pub modulus: Vec<u32>,
}

impl ExtensionFieldSpec {
    pub fn new(p: u32, modulus: Vec<u32>) -> Self {
        ExtensionFieldSpec { p, modulus }
    }

    pub fn degree(&self) -> usize {
        self.modulus.len().saturating_sub(1)
    }
}

/// Textual ring description: `Fp:p`, `Fq:p:k[:c0,..,ck]`, `prod(desc,...)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Prime(u32),
    Extension {
        p: u32,
        k: u32,
        modulus: Option<Vec<u32>>,
    },
    Product(Vec<RingDescriptor>),
}

impl RingDescriptor {
    /// The field of order `m`: `Fp:m` for primes, `Fq:p:k` otherwise.
    pub fn field(m: u64) -> Result<Self, Error> {
        let (p, k) = arith::prime_power(m)
            .ok_or_else(|| Error::OutOfDomain(alloc::format!("{m} is not a prime power")))?;
        let p = u32::try_from(p).map_err(|_| Error::TooLarge {
            order: m,
            limit: MAX_RING_ORDER,
        })?;
        Ok(if k == 1 {
            RingDescriptor::Prime(p)
        } else {
            RingDescriptor::Extension {
                p,
                k,
                modulus: None,
            }
        })
    }

    /// Every product `Z_{p1} x ... x Z_{pk}` with `k` in `factors` and
    /// `p1 <= ... <= pk` drawn from `primes`.
    pub fn products_of_primes(primes: &[u32], factors: RangeInclusive<usize>) -> Vec<Self> {
        let mut sorted: Vec<u32> = primes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut out = Vec::new();
        for k in factors {
            if k == 0 {
                continue;
            }
            let mut idx = vec![0usize; k];
            loop {
                out.push(RingDescriptor::Product(
                    idx.iter().map(|&i| RingDescriptor::Prime(sorted[i])).collect(),
                ));
                // next nondecreasing index tuple
                let mut pos = k;
                while pos > 0 && idx[pos - 1] + 1 == sorted.len() {
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
                idx[pos - 1] += 1;
                let v = idx[pos - 1];
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
            }
        }
        out
    }

    pub fn factor_count(&self) -> usize {
        match self {
            RingDescriptor::Product(fs) => fs.len(),
            _ => 1,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Prime(p) => write!(f, "Fp:{p}"),
            RingDescriptor::Extension { p, k, modulus } => {
                write!(f, "Fq:{p}:{k}")?;
                if let Some(m) = modulus {
                    f.write_char(':')?;
                    for (i, c) in m.iter().enumerate() {
                        if i > 0 {
                            f.write_char(',')?;
                        }
                        write!(f, "{c}")?;
                    }
                }
                Ok(())
            }
            RingDescriptor::Product(fs) => {
                f.write_str("prod(")?;
                for (i, d) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_char(',')?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_char(')')
            }
        }
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32, Error> {
    s.trim()
        .parse::<u32>()
        .map_err(|_| Error::Parse(alloc::format!("expected {what}, found `{s}`")))
}

/// Splits on commas at parenthesis depth zero. Pieces that are bare numbers
/// are modulus coefficients and get glued back onto the preceding piece.
fn split_factors(s: &str) -> Result<Vec<String>, Error> {
    let mut raw = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(alloc::format!("unbalanced `)` in `{s}`")));
                }
            }
            ',' if depth == 0 => {
                raw.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(alloc::format!("unbalanced `(` in `{s}`")));
    }
    raw.push(&s[start..]);
    let mut out: Vec<String> = Vec::new();
    for piece in raw {
        let t = piece.trim();
        let numeric = !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        match out.last_mut() {
            Some(prev) if numeric => {
                prev.push(',');
                prev.push_str(t);
            }
            _ => out.push(t.to_string()),
        }
    }
    Ok(out)
}

impl FromStr for RingDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("prod(") {
            let inner = inner
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(alloc::format!("missing `)` in `{s}`")))?;
            if inner.trim().is_empty() {
                return Err(Error::EmptyProduct);
            }
            let factors = split_factors(inner)?
                .iter()
                .map(|p| p.parse())
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(RingDescriptor::Product(factors));
        }
        let mut parts = s.splitn(4, ':');
        match parts.next() {
            Some("Fp") => {
                let p = parse_u32(parts.next().unwrap_or(""), "a prime after `Fp:`")?;
                if parts.next().is_some() {
                    return Err(Error::Parse(alloc::format!("trailing fields in `{s}`")));
                }
                Ok(RingDescriptor::Prime(p))
            }
            Some("Fq") => {
                let p = parse_u32(parts.next().unwrap_or(""), "a prime after `Fq:`")?;
                let k = parse_u32(parts.next().unwrap_or(""), "a degree after `Fq:p:`")?;
                let modulus = match parts.next() {
                    None => None,
                    Some(list) => Some(
                        list.split(',')
                            .map(|c| parse_u32(c, "a modulus coefficient"))
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                };
                Ok(RingDescriptor::Extension { p, k, modulus })
            }
            _ => Err(Error::Parse(alloc::format!(
                "unknown ring `{s}`; expected Fp:p, Fq:p:k[:coeffs] or prod(...)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
struct Tables {
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Prime { p: u32 },
    Extension { p: u32, modulus: Vec<u32> },
    Product { factors: Vec<Ring>, strides: Vec<u32> },
}

/// A finite commutative ring with unity, elements indexed `0..order`.
#[derive(Clone, Debug)]
pub struct Ring {
    kind: Kind,
    order: u32,
    characteristic: u32,
    one: Elem,
    tables: Option<Tables>,
    descriptor: RingDescriptor,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.descriptor.fmt(f)
    }
}

fn not_prime(p: u64) -> Error {
    let factor = match arith::smallest_divisor(p) {
        Some(d) if d != p => d,
        _ => p,
    };
    Error::NotPrime { value: p, factor }
}

impl Ring {
    /// `Z_p` for a prime `p`.
    pub fn prime_field(p: u32) -> Result<Ring, Error> {
        if !arith::is_prime(p as u64) {
            return Err(not_prime(p as u64));
        }
        Ok(Ring {
            kind: Kind::Prime { p },
            order: p,
            characteristic: p,
            one: 1,
            tables: None,
            descriptor: RingDescriptor::Prime(p),
        }
        .with_tables())
    }

    /// `F_p[x]/(f)` for a monic irreducible `f`.
    pub fn extension_field(spec: &ExtensionFieldSpec) -> Result<Ring, Error> {
        let ExtensionFieldSpec { p, modulus } = spec;
        let p = *p;
        if !arith::is_prime(p as u64) {
            return Err(not_prime(p as u64));
        }
        let k = spec.degree();
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if let Some(c) = modulus.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidModulus(alloc::format!(
                "coefficient {c} is not reduced mod {p}"
            )));
        }
        if k > MAX_DEGREE {
            return Err(Error::InvalidModulus(alloc::format!(
                "degree {k} exceeds {MAX_DEGREE}"
            )));
        }
        let order = (p as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
        if order > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                order,
                limit: MAX_RING_ORDER,
            });
        }
        if let Some(factor) = irreducible_factor(p, modulus) {
            return Err(Error::ReducibleModulus { factor });
        }
        Ok(Ring {
            kind: Kind::Extension {
                p,
                modulus: modulus.clone(),
            },
            order: order as u32,
            characteristic: p,
            one: 1,
            tables: None,
            descriptor: RingDescriptor::Extension {
                p,
                k: k as u32,
                modulus: Some(modulus.clone()),
            },
        }
        .with_tables())
    }

    /// `F_{p^k}` with the default modulus from [`find_irreducible`].
    pub fn extension_field_default(p: u32, k: u32) -> Result<Ring, Error> {
        let modulus = find_irreducible(p, k)?;
        let mut ring = Ring::extension_field(&ExtensionFieldSpec::new(p, modulus))?;
        ring.descriptor = RingDescriptor::Extension {
            p,
            k,
            modulus: None,
        };
        Ok(ring)
    }

    /// The field of order `m` (prime field or default-modulus extension).
    pub fn field_of_order(m: u64) -> Result<Ring, Error> {
        Ring::from_descriptor(&RingDescriptor::field(m)?)
    }

    /// Componentwise product; first factor is the most significant digit.
    pub fn product(factors: Vec<Ring>) -> Result<Ring, Error> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        let mut order: u64 = 1;
        for f in &factors {
            order = order.saturating_mul(f.order as u64);
        }
        if order > MAX_RING_ORDER {
            return Err(Error::TooLarge {
                order,
                limit: MAX_RING_ORDER,
            });
        }
        let mut strides = vec![1u32; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1].order;
        }
        let characteristic = factors
            .iter()
            .fold(1u64, |acc, f| arith::lcm(acc, f.characteristic as u64))
            as u32;
        let one = factors
            .iter()
            .zip(&strides)
            .map(|(f, s)| f.one * s)
            .sum();
        let descriptor =
            RingDescriptor::Product(factors.iter().map(|f| f.descriptor.clone()).collect());
        Ok(Ring {
            kind: Kind::Product { factors, strides },
            order: order as u32,
            characteristic,
            one,
            tables: None,
            descriptor,
        }
        .with_tables())
    }

    pub fn from_descriptor(desc: &RingDescriptor) -> Result<Ring, Error> {
        match desc {
            RingDescriptor::Prime(p) => Ring::prime_field(*p),
            RingDescriptor::Extension { p, k, modulus: None } => {
                Ring::extension_field_default(*p, *k)
            }
            RingDescriptor::Extension {
                p,
                k,
                modulus: Some(m),
            } => {
                if m.len() != *k as usize + 1 {
                    return Err(Error::InvalidModulus(alloc::format!(
                        "expected {} coefficients for degree {k}, found {}",
                        *k as usize + 1,
                        m.len()
                    )));
                }
                Ring::extension_field(&ExtensionFieldSpec::new(*p, m.clone()))
            }
            RingDescriptor::Product(fs) => Ring::product(
                fs.iter()
                    .map(Ring::from_descriptor)
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        }
    }

    fn with_tables(mut self) -> Ring {
        if self.order <= TABLE_LIMIT {
            let m = self.order as usize;
            let mut add = vec![0u8; m * m];
            let mut mul = vec![0u8; m * m];
            let mut neg = vec![0u8; m];
            for a in 0..m {
                neg[a] = self.neg_direct(a as Elem) as u8;
                for b in 0..m {
                    add[a * m + b] = self.add_direct(a as Elem, b as Elem) as u8;
                    mul[a * m + b] = self.mul_direct(a as Elem, b as Elem) as u8;
                }
            }
            self.tables = Some(Tables { add, mul, neg });
        }
        self
    }

    /// Same ring with every arithmetic table dropped, factors included.
    pub fn without_tables(&self) -> Ring {
        let mut r = self.clone();
        r.tables = None;
        if let Kind::Product { factors, .. } = &mut r.kind {
            for f in factors.iter_mut() {
                *f = f.without_tables();
            }
        }
        r
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn minus_one(&self) -> Elem {
        self.neg(self.one)
    }

    pub fn elements(&self) -> Range<Elem> {
        0..self.order
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn is_field(&self) -> bool {
        match &self.kind {
            Kind::Prime { .. } | Kind::Extension { .. } => true,
            Kind::Product { factors, .. } => factors.len() == 1 && factors[0].is_field(),
        }
    }

    /// Factors of a product ring; a non-product ring is its own single factor.
    pub fn factors(&self) -> &[Ring] {
        match &self.kind {
            Kind::Product { factors, .. } => factors,
            _ => core::slice::from_ref(self),
        }
    }

    pub fn is_product(&self) -> bool {
        matches!(self.kind, Kind::Product { .. })
    }

    /// Coordinates of `a` in each factor (a single coordinate for non-products).
    pub fn coordinates(&self, a: Elem) -> Vec<Elem> {
        match &self.kind {
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| (a / s) % f.order)
                .collect(),
            _ => vec![a],
        }
    }

    #[inline]
    pub fn coordinate(&self, a: Elem, position: usize) -> Elem {
        match &self.kind {
            Kind::Product { factors, strides } => (a / strides[position]) % factors[position].order,
            _ => a,
        }
    }

    /// Inverse of [`Ring::coordinates`].
    pub fn from_coordinates(&self, coords: &[Elem]) -> Result<Elem, Error> {
        let factors = self.factors();
        if coords.len() != factors.len() {
            return Err(Error::Parse(alloc::format!(
                "expected {} coordinates, found {}",
                factors.len(),
                coords.len()
            )));
        }
        match &self.kind {
            Kind::Product { factors, strides } => {
                let mut acc = 0;
                for ((c, f), s) in coords.iter().zip(factors).zip(strides) {
                    if *c >= f.order {
                        return Err(Error::Parse(alloc::format!(
                            "coordinate {c} out of range for {f}"
                        )));
                    }
                    acc += c * s;
                }
                Ok(acc)
            }
            _ if coords[0] < self.order => Ok(coords[0]),
            _ => Err(Error::Parse(alloc::format!(
                "element {} out of range",
                coords[0]
            ))),
        }
    }

    /// Coefficients of a field element, constant term first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        match &self.kind {
            Kind::Prime { .. } => vec![a],
            Kind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let mut out = vec![0; k];
                let mut rest = a;
                for c in out.iter_mut() {
                    *c = rest % p;
                    rest /= p;
                }
                out
            }
            Kind::Product { .. } => self.coordinates(a),
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.add[(a * self.order + b) as usize] as Elem,
            None => self.add_direct(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.neg[a as usize] as Elem,
            None => self.neg_direct(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => t.mul[(a * self.order + b) as usize] as Elem,
            None => self.mul_direct(a, b),
        }
    }

    /// `a^n` by square-and-multiply. `n = 0` is rejected.
    pub fn pow(&self, a: Elem, n: u32) -> Result<Elem, Error> {
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        Ok(self.pow_positive(a, n))
    }

    pub(crate) fn pow_positive(&self, a: Elem, n: u32) -> Elem {
        debug_assert!(n >= 1);
        let mut acc = self.one;
        let mut base = a;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Multiplicative inverse, when it exists.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        match &self.kind {
            Kind::Prime { .. } | Kind::Extension { .. } => {
                if a == 0 {
                    None
                } else if self.order == 2 {
                    Some(1)
                } else {
                    Some(self.pow_positive(a, self.order - 2))
                }
            }
            Kind::Product { factors, .. } => {
                let coords = self.coordinates(a);
                let inv = coords
                    .iter()
                    .zip(factors)
                    .map(|(&c, f)| f.inverse(c))
                    .collect::<Option<Vec<_>>>()?;
                self.from_coordinates(&inv).ok()
            }
        }
    }

    fn add_direct(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            Kind::Prime { p } => (a + b) % p,
            Kind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let (mut x, mut y, mut place, mut out) = (a, b, 1u32, 0u32);
                for _ in 0..k {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place = place.wrapping_mul(*p);
                }
                out
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.add((a / s) % f.order, (b / s) % f.order) * s)
                .sum(),
        }
    }

    fn neg_direct(&self, a: Elem) -> Elem {
        match &self.kind {
            Kind::Prime { p } => (p - a % p) % p,
            Kind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let (mut x, mut place, mut out) = (a, 1u32, 0u32);
                for _ in 0..k {
                    out += ((p - x % p) % p) * place;
                    x /= p;
                    place = place.wrapping_mul(*p);
                }
                out
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.neg((a / s) % f.order) * s)
                .sum(),
        }
    }

    fn mul_direct(&self, a: Elem, b: Elem) -> Elem {
        match &self.kind {
            Kind::Prime { p } => ((a as u64 * b as u64) % *p as u64) as Elem,
            Kind::Extension { p, modulus } => {
                let p64 = *p as u64;
                let k = modulus.len() - 1;
                let mut x = [0u64; MAX_DEGREE];
                let mut y = [0u64; MAX_DEGREE];
                let (mut ra, mut rb) = (a, b);
                for i in 0..k {
                    x[i] = (ra % p) as u64;
                    y[i] = (rb % p) as u64;
                    ra /= p;
                    rb /= p;
                }
                let mut prod = [0u64; 2 * MAX_DEGREE];
                for i in 0..k {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + x[i] * y[j]) % p64;
                    }
                }
                // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
                for deg in (k..2 * k - 1).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for j in 0..k {
                        let t = c * modulus[j] as u64 % p64;
                        let slot = &mut prod[deg - k + j];
                        *slot = (*slot + p64 - t) % p64;
                    }
                }
                let mut out = 0u32;
                let mut place = 1u32;
                for c in prod.iter().take(k) {
                    out += *c as u32 * place;
                    place = place.wrapping_mul(*p);
                }
                out
            }
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.mul((a / s) % f.order, (b / s) % f.order) * s)
                .sum(),
        }
    }

    /// Human-readable label: `3`, `1+2x`, `(1,x)`.
    pub fn label(&self, a: Elem) -> String {
        let mut s = String::new();
        let _ = self.write_label(&mut s, a);
        s
    }

    pub fn write_label<W: Write>(&self, out: &mut W, a: Elem) -> fmt::Result {
        match &self.kind {
            Kind::Prime { .. } => write!(out, "{a}"),
            Kind::Extension { .. } => write_poly(out, &self.coefficients(a)),
            Kind::Product { factors, .. } => {
                out.write_char('(')?;
                for (i, (f, c)) in factors.iter().zip(self.coordinates(a)).enumerate() {
                    if i > 0 {
                        out.write_char(',')?;
                    }
                    f.write_label(out, c)?;
                }
                out.write_char(')')
            }
        }
    }

    /// Element whose label is `label`, by scanning all elements.
    pub fn parse_label(&self, label: &str) -> Option<Elem> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        let wanted = wanted.to_lowercase();
        self.elements().find(|&a| self.label(a) == wanted)
    }
}

/// Writes coefficients as an ascending polynomial in `x`: `1+2x+x^2`.
pub fn write_poly<W: Write>(out: &mut W, coeffs: &[u32]) -> fmt::Result {
    let mut first = true;
    for (e, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if !first {
            out.write_char('+')?;
        }
        first = false;
        match (e, c) {
            (0, c) => write!(out, "{c}")?,
            (1, 1) => out.write_char('x')?,
            (1, c) => write!(out, "{c}x")?,
            (e, 1) => write!(out, "x^{e}")?,
            (e, c) => write!(out, "{c}x^{e}")?,
        }
    }
    if first {
        out.write_char('0')?;
    }
    Ok(())
}

fn trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.len() > 1 && *f.last().unwrap() == 0 {
        f.pop();
    }
    f
}

/// Remainder of `f` modulo a monic `g` over `F_p`.
fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r.pop().unwrap();
        if lead == 0 {
            continue;
        }
        let base = r.len() - dg;
        for j in 0..dg {
            let t = lead * g[j] as u64 % p64;
            r[base + j] = (r[base + j] + p64 - t) % p64;
        }
    }
    trim(r.into_iter().map(|c| c as u32).collect())
}

/// A monic factor of degree `1..=deg/2` of `f` over `F_p`, if any.
///
/// Exhaustive over monic candidates; degree-1 candidates are the root check.
pub fn irreducible_factor(p: u32, f: &[u32]) -> Option<Vec<u32>> {
    let k = f.len().checked_sub(1)?;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for t in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut rest = t;
            for c in g.iter_mut().take(d) {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            g[d] = 1;
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return Some(g);
            }
        }
    }
    None
}

/// Lexicographically smallest monic irreducible polynomial of degree `k` over
/// `F_p`, comparing coefficient vectors constant term first.
pub fn find_irreducible(p: u32, k: u32) -> Result<Vec<u32>, Error> {
    if !arith::is_prime(p as u64) {
        return Err(not_prime(p as u64));
    }
    if k == 0 || k as usize > MAX_DEGREE {
        return Err(Error::InvalidModulus(alloc::format!(
            "degree must be in 1..={MAX_DEGREE}"
        )));
    }
    let k = k as usize;
    let total = (p as u64).pow(k as u32);
    for t in 0..total {
        let mut f = vec![0u32; k + 1];
        let mut rest = t;
        // c_0 is the most significant digit of t
        for i in (0..k).rev() {
            f[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        f[k] = 1;
        if irreducible_factor(p, &f).is_none() {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Field order, exponent and the derived `d = gcd(n, m-1)`, `alpha = (m-1)/d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldParams {
    pub m: u64,
    pub n: u32,
    pub d: u64,
    pub alpha: u64,
}

impl FieldParams {
    pub fn new(m: u64, n: u32) -> Result<FieldParams, Error> {
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        if m < 2 {
            return Err(Error::OutOfDomain(alloc::format!("field order {m} < 2")));
        }
        let d = arith::gcd(n as u64, m - 1);
        Ok(FieldParams {
            m,
            n,
            d,
            alpha: (m - 1) / d,
        })
    }
}

/// Nonzero `n`-th powers of a field, sorted.
pub fn nth_power_subgroup(ring: &Ring, n: u32) -> Result<Vec<Elem>, Error> {
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    let set: BTreeSet<Elem> = (1..ring.order()).map(|a| ring.pow_positive(a, n)).collect();
    Ok(set.into_iter().collect())
}

/// Number of solutions of `x^n = a` in a field, for nonzero `a`.
pub fn nth_root_count(ring: &Ring, a: Elem, n: u32) -> Result<usize, Error> {
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if a == 0 {
        return Err(Error::ZeroElement);
    }
    Ok(ring
        .elements()
        .filter(|&x| ring.pow_positive(x, n) == a)
        .count())
}

/// Some `u` with `u^n = -1`: `-1` itself for odd `n`, otherwise the smallest
/// index that works.
pub fn has_nth_root_of_minus_one(ring: &Ring, n: u32) -> Option<Elem> {
    if n == 0 {
        return None;
    }
    let minus_one = ring.minus_one();
    if n % 2 == 1 {
        return Some(minus_one);
    }
    ring.elements().find(|&u| ring.pow_positive(u, n) == minus_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Ring {
        Ring::extension_field(&ExtensionFieldSpec::new(2, vec![1, 1, 1])).unwrap()
    }

    fn f9() -> Ring {
        Ring::extension_field(&ExtensionFieldSpec::new(3, vec![1, 0, 1])).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let z7 = Ring::prime_field(7).unwrap();
        assert_eq!(z7.order(), 7);
        assert_eq!(z7.add(3, 5), 1);
        assert_eq!(z7.mul(3, 5), 1);
        let z2 = Ring::prime_field(2).unwrap();
        assert_eq!(z2.add(1, 1), 0);
    }

    #[test]
    fn composite_rejected_with_factor() {
        assert_eq!(
            Ring::prime_field(6).unwrap_err(),
            Error::NotPrime {
                value: 6,
                factor: 2
            }
        );
        assert!(matches!(
            Ring::prime_field(1),
            Err(Error::NotPrime { value: 1, .. })
        ));
    }

    #[test]
    fn f4_elements_and_labels() {
        let f = f4();
        assert_eq!(f.order(), 4);
        let labels: Vec<String> = f.elements().map(|a| f.label(a)).collect();
        assert_eq!(labels, ["0", "1", "x", "1+x"]);
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn f9_x_squared_is_two() {
        let f = f9();
        let x = f.parse_label("x").unwrap();
        assert_eq!(f.mul(x, x), 2);
        assert_eq!(f.label(f.mul(x, x)), "2");
    }

    #[test]
    fn reducible_modulus_rejected() {
        let err = Ring::extension_field(&ExtensionFieldSpec::new(2, vec![1, 0, 1])).unwrap_err();
        assert_eq!(err, Error::ReducibleModulus { factor: vec![1, 1] });
    }

    #[test]
    fn non_monic_modulus_rejected() {
        assert!(matches!(
            Ring::extension_field(&ExtensionFieldSpec::new(3, vec![1, 0, 2])),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn smallest_irreducibles() {
        // scan of the four monic quadratics over F_2: x^2, x^2+x, x^2+1, x^2+x+1
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn product_encoding() {
        let r = Ring::product(vec![Ring::prime_field(2).unwrap(), Ring::prime_field(3).unwrap()])
            .unwrap();
        assert_eq!(r.order(), 6);
        let a = r.from_coordinates(&[1, 2]).unwrap();
        assert_eq!(a, 5);
        assert_eq!(r.coordinates(r.mul(a, a)), vec![1, 1]);
        assert_eq!(r.label(a), "(1,2)");
        assert_eq!(r.one(), r.from_coordinates(&[1, 1]).unwrap());
        assert_eq!(r.characteristic(), 6);
        let z2z2 = Ring::product(vec![Ring::prime_field(2).unwrap(); 2]).unwrap();
        let s = z2z2.add(
            z2z2.from_coordinates(&[1, 0]).unwrap(),
            z2z2.from_coordinates(&[0, 1]).unwrap(),
        );
        assert_eq!(z2z2.coordinates(s), vec![1, 1]);
    }

    #[test]
    fn product_of_f9_and_f25() {
        let r: RingDescriptor = "prod(Fq:3:2,Fq:5:2)".parse().unwrap();
        assert_eq!(Ring::from_descriptor(&r).unwrap().order(), 225);
        assert!(Ring::product(Vec::new()).is_err());
    }

    #[test]
    fn pow_examples() {
        let z7 = Ring::prime_field(7).unwrap();
        assert_eq!(z7.pow(3, 3).unwrap(), 6);
        assert_eq!(z7.pow(1, 11).unwrap(), 1);
        assert_eq!(z7.pow(3, 0), Err(Error::ZeroExponent));
        let f = f9();
        let x = f.parse_label("x").unwrap();
        assert_eq!(f.pow(x, 5).unwrap(), x);
    }

    #[test]
    fn nth_powers_and_roots() {
        let z7 = Ring::prime_field(7).unwrap();
        assert_eq!(nth_power_subgroup(&z7, 3).unwrap(), vec![1, 6]);
        assert_eq!(nth_power_subgroup(&z7, 1).unwrap(), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(nth_power_subgroup(&f4(), 3).unwrap(), vec![1]);
        assert_eq!(nth_root_count(&z7, 1, 3).unwrap(), 3);
        assert_eq!(nth_root_count(&z7, 3, 3).unwrap(), 0);
        assert_eq!(nth_root_count(&z7, 5, 1).unwrap(), 1);
        assert_eq!(nth_root_count(&z7, 0, 3), Err(Error::ZeroElement));
        let prod = Ring::from_descriptor(&"prod(Fp:2,Fp:3)".parse().unwrap()).unwrap();
        assert_eq!(nth_power_subgroup(&prod, 2), Err(Error::NotAField));
    }

    #[test]
    fn roots_of_minus_one() {
        let z2 = Ring::prime_field(2).unwrap();
        assert_eq!(has_nth_root_of_minus_one(&z2, 2), Some(1));
        let z3 = Ring::prime_field(3).unwrap();
        assert_eq!(has_nth_root_of_minus_one(&z3, 2), None);
        let z7 = Ring::prime_field(7).unwrap();
        assert_eq!(has_nth_root_of_minus_one(&z7, 3), Some(6));
        let z5 = Ring::prime_field(5).unwrap();
        assert_eq!(has_nth_root_of_minus_one(&z5, 2), Some(2));
    }

    #[test]
    fn descriptor_round_trip() {
        for s in [
            "Fp:7",
            "Fq:2:2",
            "Fq:3:2:1,0,1",
            "prod(Fp:2,Fp:3)",
            "prod(Fq:2:2:1,1,1,Fp:3,prod(Fp:2,Fp:2))",
        ] {
            let d: RingDescriptor = s.parse().unwrap();
            assert_eq!(alloc::format!("{d}"), s);
        }
        assert!("Zp:3".parse::<RingDescriptor>().is_err());
        assert!("prod(Fp:2".parse::<RingDescriptor>().is_err());
        assert!(matches!(
            "prod()".parse::<RingDescriptor>(),
            Err(Error::EmptyProduct)
        ));
    }

    #[test]
    fn product_enumeration() {
        let all = RingDescriptor::products_of_primes(&[2, 3, 5, 7], 2..=3);
        assert_eq!(all.len(), 10 + 20);
        assert_eq!(alloc::format!("{}", all[0]), "prod(Fp:2,Fp:2)");
    }

    #[test]
    fn tables_match_direct_evaluation() {
        for m in [4u64, 8, 9, 25, 27, 49] {
            let r = Ring::field_of_order(m).unwrap();
            let raw = r.without_tables();
            assert!(r.has_tables() && !raw.has_tables());
            for a in r.elements() {
                assert_eq!(r.neg(a), raw.neg(a));
                for b in r.elements() {
                    assert_eq!(r.add(a, b), raw.add(a, b));
                    assert_eq!(r.mul(a, b), raw.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn field_inverses() {
        for m in [2u64, 4, 7, 9, 16, 289] {
            let r = Ring::field_of_order(m).unwrap();
            for a in 1..r.order() {
                let inv = r.inverse(a).unwrap();
                assert_eq!(r.mul(a, inv), r.one(), "m={m} a={a}");
            }
        }
    }
}
