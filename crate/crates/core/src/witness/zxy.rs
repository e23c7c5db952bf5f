//! Windows of the n-total graph of `Z[X,Y]` with `D = XR ∪ YR`.
//!
//! The window holds every polynomial of total degree at most `deg_cap` with
//! coefficients in `[-coef_cap, coef_cap]`. With `a = f(0,Y)` and
//! `b = g(0,Y)`, `f^n + g^n` lies in `XR` iff `a^n + b^n = 0` in `Z[Y]`: for
//! odd `n` that means `b = -a`, for even `n` it means `a = b = 0`. `YR` is the
//! same with the roles of `X` and `Y` swapped, so neighbours come straight out
//! of buckets keyed by `f(0,Y)` and `f(X,0)`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::Error;

pub const ZXY_VERTEX_LIMIT: u64 = 1 << 20;
pub const MAX_DEG_CAP: u32 = 4;
pub const MAX_LEN_CAP: u32 = 6;

struct Window {
    n: u32,
    base: u32,
    coef_cap: i32,
    /// `(deg_X, deg_Y)` per coefficient slot.
    monomials: Vec<(u32, u32)>,
    count: usize,
    /// Slots of the monomials with no `X` (resp. no `Y`).
    y_only: Vec<usize>,
    x_only: Vec<usize>,
}

impl Window {
    fn digits(&self, mut v: usize) -> Vec<u32> {
        let mut out = vec![0; self.monomials.len()];
        for d in out.iter_mut() {
            *d = (v % self.base as usize) as u32;
            v /= self.base as usize;
        }
        out
    }

    fn encode(&self, coeffs: &[i32]) -> usize {
        coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.base as usize + (c + self.coef_cap) as usize)
    }

    fn key(&self, digits: &[u32], slots: &[usize], negate: bool) -> usize {
        slots.iter().rev().fold(0, |acc, &s| {
            let d = if negate { self.base - 1 - digits[s] } else { digits[s] };
            acc * self.base as usize + d as usize
        })
    }

    fn zero_key(&self, slots: &[usize]) -> usize {
        slots.iter().fold(0, |acc, _| acc * self.base as usize + self.coef_cap as usize)
    }

    fn render(&self, v: usize) -> String {
        let coeffs: Vec<i32> = self.digits(v).iter().map(|&d| d as i32 - self.coef_cap).collect();
        let mut s = String::new();
        for (&c, &(i, j)) in coeffs.iter().zip(&self.monomials) {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            let unit = i + j > 0 && c.abs() == 1;
            if !unit {
                let _ = write!(s, "{}", c.abs());
            }
            for (name, e) in [("X", i), ("Y", j)] {
                match e {
                    0 => {}
                    1 => s.push_str(name),
                    _ => {
                        let _ = write!(s, "{name}^{e}");
                    }
                }
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZxyReport {
    pub n: u32,
    pub deg_cap: u32,
    pub coef_cap: u32,
    pub len_cap: u32,
    pub vertices: usize,
    /// Newly reached vertices at each distance `0..=len_cap` from 0.
    pub levels: Vec<usize>,
    /// A reached vertex with nonzero constant term.
    pub constant_term_violation: Option<String>,
    pub one_reached: bool,
    /// The neighbours of 0 are exactly the nonzero window elements of `XR ∪ YR`.
    pub zero_neighbors_in_d: bool,
}

impl ZxyReport {
    pub fn reached(&self) -> usize {
        self.levels.iter().sum()
    }

    pub fn confirmed(&self) -> bool {
        self.constant_term_violation.is_none() && !self.one_reached && self.zero_neighbors_in_d
    }
}

/// Breadth-first search from 0 up to `len_cap` steps, checking that every
/// reached vertex has zero constant term and that 1 is never reached.
pub fn verify_zxy_nonconnectivity(n: u32, deg_cap: u32, coef_cap: u32, len_cap: u32) -> Result<ZxyReport, Error> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if deg_cap > MAX_DEG_CAP || len_cap > MAX_LEN_CAP || coef_cap == 0 {
        return Err(Error::InvalidWindow(format!(
            "need degree <= {MAX_DEG_CAP}, path length <= {MAX_LEN_CAP}, coefficient bound >= 1"
        )));
    }
    let mut monomials = Vec::new();
    for deg in 0..=deg_cap {
        for i in (0..=deg).rev() {
            monomials.push((i, deg - i));
        }
    }
    let base = 2 * coef_cap + 1;
    let count = (base as u64).saturating_pow(monomials.len() as u32);
    if count > ZXY_VERTEX_LIMIT {
        return Err(Error::TooLarge { order: count, limit: ZXY_VERTEX_LIMIT });
    }
    let count = count as usize;
    let slots = |pred: fn(&(u32, u32)) -> bool| -> Vec<usize> {
        monomials.iter().enumerate().filter(|(_, m)| pred(m)).map(|(s, _)| s).collect()
    };
    let w = Window {
        n,
        base,
        coef_cap: coef_cap as i32,
        y_only: slots(|m| m.0 == 0),
        x_only: slots(|m| m.1 == 0),
        monomials,
        count,
    };

    let key_space = |s: &[usize]| (base as usize).pow(s.len() as u32);
    let mut bucket_x = vec![Vec::new(); key_space(&w.y_only)];
    let mut bucket_y = vec![Vec::new(); key_space(&w.x_only)];
    let mut keys = Vec::with_capacity(w.count);
    for v in 0..w.count {
        let d = w.digits(v);
        let (kx, ky) = (w.key(&d, &w.y_only, false), w.key(&d, &w.x_only, false));
        let (nx, ny) = (w.key(&d, &w.y_only, true), w.key(&d, &w.x_only, true));
        bucket_x[kx].push(v as u32);
        bucket_y[ky].push(v as u32);
        keys.push([kx, ky, nx, ny]);
    }
    let (zx, zy) = (w.zero_key(&w.y_only), w.zero_key(&w.x_only));
    let targets = |v: usize| -> [Option<usize>; 2] {
        let [kx, ky, nx, ny] = keys[v];
        if w.n % 2 == 1 {
            [Some(nx), Some(ny)]
        } else {
            [(kx == zx).then_some(zx), (ky == zy).then_some(zy)]
        }
    };
    let neighbors = |v: usize| {
        let [tx, ty] = targets(v);
        let xs = tx.map(|t| bucket_x[t].as_slice()).unwrap_or(&[]);
        let ys = ty.map(|t| bucket_y[t].as_slice()).unwrap_or(&[]);
        xs.iter().chain(ys).map(|&u| u as usize).filter(move |&u| u != v)
    };

    let zero = w.encode(&vec![0; w.monomials.len()]);
    let mut one_coeffs = vec![0; w.monomials.len()];
    one_coeffs[0] = 1;
    let one = w.encode(&one_coeffs);

    let mut expected: Vec<usize> = (0..w.count)
        .filter(|&v| v != zero && (keys[v][0] == zx || keys[v][1] == zy))
        .collect();
    let mut actual: Vec<usize> = neighbors(zero).collect();
    actual.sort_unstable();
    actual.dedup();
    expected.sort_unstable();
    let zero_neighbors_in_d = actual == expected;

    let mut seen = vec![false; w.count];
    seen[zero] = true;
    let mut frontier = VecDeque::from([zero]);
    let mut levels = vec![1];
    let mut violation = None;
    for _ in 0..len_cap {
        let mut next = VecDeque::new();
        for &u in &frontier {
            for v in neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    next.push_back(v);
                }
            }
        }
        if violation.is_none() {
            violation = next.iter().find(|&&v| w.digits(v)[0] != coef_cap).map(|&v| w.render(v));
        }
        levels.push(next.len());
        frontier = next;
    }
    Ok(ZxyReport {
        n,
        deg_cap,
        coef_cap,
        len_cap,
        vertices: w.count,
        levels,
        constant_term_violation: violation,
        one_reached: seen[one],
        zero_neighbors_in_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    type ZPoly = BTreeMap<(u32, u32), i64>;

    fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut out = ZPoly::new();
        for (&(i, j), &c) in a {
            for (&(k, l), &d) in b {
                *out.entry((i + k, j + l)).or_default() += c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn pow(a: &ZPoly, n: u32) -> ZPoly {
        (0..n).fold(ZPoly::from([((0, 0), 1)]), |acc, _| mul(&acc, a))
    }

    fn add(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut out = a.clone();
        for (&m, &c) in b {
            *out.entry(m).or_default() += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Every term has an `X` (`x = true`) or a `Y`.
    fn in_ideal(f: &ZPoly, x: bool) -> bool {
        f.keys().all(|&(i, j)| if x { i > 0 } else { j > 0 })
    }

    #[test]
    fn bucketed_adjacency_matches_direct_arithmetic() {
        // degree <= 1, coefficients in {-1,0,1}: 27 polynomials
        let monos = [(0, 0), (1, 0), (0, 1)];
        let polys: Vec<ZPoly> = (0..27)
            .map(|mut v| {
                let mut p = ZPoly::new();
                for &m in &monos {
                    let c = (v % 3) as i64 - 1;
                    v /= 3;
                    if c != 0 {
                        p.insert(m, c);
                    }
                }
                p
            })
            .collect();
        for n in 1..=3 {
            let r = verify_zxy_nonconnectivity(n, 1, 1, 6).unwrap();
            let zero = ZPoly::new();
            let direct: Vec<&ZPoly> = polys
                .iter()
                .filter(|g| **g != zero)
                .filter(|g| {
                    let s = add(&pow(&zero, n), &pow(g, n));
                    in_ideal(&s, true) || in_ideal(&s, false)
                })
                .collect();
            assert!(r.zero_neighbors_in_d);
            assert_eq!(r.levels[1], direct.len(), "n={n}");
            // reachable set by direct BFS
            let mut seen = [false; 27];
            let zi = polys.iter().position(|p| p.is_empty()).unwrap();
            seen[zi] = true;
            let mut frontier = vec![zi];
            let mut levels = vec![1];
            for _ in 0..6 {
                let mut next = Vec::new();
                for &u in &frontier {
                    for v in 0..27 {
                        if seen[v] {
                            continue;
                        }
                        let s = add(&pow(&polys[u], n), &pow(&polys[v], n));
                        if in_ideal(&s, true) || in_ideal(&s, false) {
                            seen[v] = true;
                            next.push(v);
                        }
                    }
                }
                levels.push(next.len());
                frontier = next;
            }
            assert_eq!(r.levels, levels, "n={n}");
        }
    }

    #[test]
    fn examples() {
        let r = verify_zxy_nonconnectivity(3, 2, 1, 3).unwrap();
        assert!(r.confirmed());
        let r = verify_zxy_nonconnectivity(1, 2, 1, 1).unwrap();
        assert!(r.zero_neighbors_in_d);
        for n in 1..=3 {
            let r = verify_zxy_nonconnectivity(n, 3, 1, 6).unwrap();
            assert_eq!(r.vertices, 59049);
            assert!(r.confirmed(), "{r:?}");
            assert!(r.reached() > 1);
        }
    }

    #[test]
    fn limits() {
        assert!(verify_zxy_nonconnectivity(0, 2, 1, 3).is_err());
        assert!(verify_zxy_nonconnectivity(1, 5, 1, 3).is_err());
        assert!(verify_zxy_nonconnectivity(1, 2, 1, 7).is_err());
        assert!(matches!(verify_zxy_nonconnectivity(1, 4, 1, 3), Err(Error::TooLarge { .. })));
    }
}
