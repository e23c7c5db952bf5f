//! Windows `[-radius, radius]` of the n-total graph of `Z` with
//! `D = p_1 Z ∪ .. ∪ p_r Z`.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{is_prime, pow_mod};
use crate::graph::Dist;
use crate::Error;

pub const MAX_RADIUS: i64 = 1 << 14;

#[derive(Clone, Debug)]
pub struct IntWindowGraph {
    primes: Vec<u64>,
    n: u32,
    radius: i64,
    /// `x^n mod p` for every vertex and prime, vertex-major.
    powers: Vec<u64>,
}

fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

/// Vertex `w` on a path `0 - w - 1`: `w` lies in some `p_j Z` and
/// `w^n + 1` in some `p_i Z`.
///
/// When `n` is odd, or `p_i = 2`, this is the Bezout point `c p_i - 1` with
/// `c = p_i^{-1} mod p_j`. Otherwise `w` is the least positive solution of
/// `w = 0 mod p_j`, `w^n = -1 mod p_i`, if one exists.
pub fn witness_vertex(primes: &[u64], n: u32) -> Option<i64> {
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    let bezout = |pi: u64, pj: u64| (inverse_mod(pi, pj) * pi) as i64 - 1;
    if n % 2 == 1 {
        return Some(bezout(sorted[0], sorted[1]));
    }
    if sorted[0] == 2 {
        return Some(bezout(2, sorted[1]));
    }
    let mut best: Option<i64> = None;
    for &pi in &sorted {
        for &pj in sorted.iter().filter(|&&q| q != pi) {
            for r in 1..pi {
                if !(pow_mod(r, n as u64, pi) + 1).is_multiple_of(pi) {
                    continue;
                }
                // w = pj * t with pj * t = r mod pi
                let t = r * inverse_mod(pj, pi) % pi;
                let w = (pj * t) as i64;
                if best.is_none_or(|b| w < b) {
                    best = Some(w);
                }
            }
        }
    }
    best
}

pub fn z_window_graph(primes: &[u64], n: u32, radius: i64) -> Result<IntWindowGraph, Error> {
    if n == 0 {
        return Err(Error::ZeroExponent);
    }
    if primes.len() < 2 {
        return Err(Error::InvalidWindow("need at least two primes".into()));
    }
    for (i, &p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(Error::InvalidWindow(format!("{p} is not prime")));
        }
        if primes[..i].contains(&p) {
            return Err(Error::InvalidWindow(format!("prime {p} repeated")));
        }
    }
    if radius > MAX_RADIUS {
        return Err(Error::TooLarge { order: 2 * radius as u64 + 1, limit: 2 * MAX_RADIUS as u64 + 1 });
    }
    let max_p = *primes.iter().max().expect("nonempty") as i64;
    let needed = max_p.max(witness_vertex(primes, n).map_or(0, i64::abs));
    if radius < needed {
        return Err(Error::WindowTooSmall { radius, suggested: needed });
    }
    let mut powers = Vec::with_capacity((2 * radius as usize + 1) * primes.len());
    for x in -radius..=radius {
        for &p in primes {
            powers.push(pow_mod(residue(x, p), n as u64, p));
        }
    }
    Ok(IntWindowGraph { primes: primes.to_vec(), n, radius, powers })
}

impl IntWindowGraph {
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn order(&self) -> usize {
        2 * self.radius as usize + 1
    }

    pub fn contains(&self, x: i64) -> bool {
        x.abs() <= self.radius
    }

    pub fn vertices(&self) -> impl Iterator<Item = i64> {
        -self.radius..=self.radius
    }

    fn slot(&self, x: i64) -> usize {
        (x + self.radius) as usize
    }

    fn adjacent_slots(&self, a: usize, b: usize) -> bool {
        let k = self.primes.len();
        a != b
            && self.primes.iter().enumerate().any(|(i, &p)| {
                (self.powers[a * k + i] + self.powers[b * k + i]).is_multiple_of(p)
            })
    }

    /// Both in the window, distinct, and `x^n + y^n` in some `p_i Z`.
    pub fn is_adjacent(&self, x: i64, y: i64) -> bool {
        self.contains(x) && self.contains(y) && self.adjacent_slots(self.slot(x), self.slot(y))
    }

    pub fn neighbors(&self, x: i64) -> Vec<i64> {
        self.vertices().filter(|&y| self.is_adjacent(x, y)).collect()
    }

    /// Shortest path inside the window; ties go to the smaller `|y|`, then
    /// positive `y`.
    pub fn shortest_path(&self, from: i64, to: i64) -> Option<Vec<i64>> {
        if !self.contains(from) || !self.contains(to) {
            return None;
        }
        let order: Vec<i64> = (0..=self.radius)
            .flat_map(|a| if a == 0 { vec![0] } else { vec![a, -a] })
            .collect();
        let mut parent = vec![usize::MAX; self.order()];
        let (s, t) = (self.slot(from), self.slot(to));
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![to];
                let mut x = t;
                while x != s {
                    x = parent[x];
                    path.push(x as i64 - self.radius);
                }
                path.reverse();
                return Some(path);
            }
            for &y in &order {
                let v = self.slot(y);
                if parent[v] == usize::MAX && self.adjacent_slots(u, v) {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    pub fn distance(&self, from: i64, to: i64) -> Dist {
        match self.shortest_path(from, to) {
            Some(p) => Dist::Finite(p.len() as u32 - 1),
            None => Dist::Infinite,
        }
    }

    /// The path `0 - w - 1` through [`witness_vertex`], if it exists and both
    /// edges check out.
    pub fn witness_path(&self) -> Option<[i64; 3]> {
        let w = witness_vertex(&self.primes, self.n)?;
        (self.is_adjacent(0, w) && self.is_adjacent(w, 1)).then_some([0, w, 1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZWindowReport {
    pub primes: Vec<u64>,
    pub n: u32,
    pub radius: i64,
    pub distance: Dist,
    pub path: Option<Vec<i64>>,
    pub witness: Option<[i64; 3]>,
}

impl ZWindowReport {
    /// `d(0,1) = 2` inside the window, with the witness path verified.
    pub fn confirms_distance_two(&self) -> bool {
        self.distance == Dist::Finite(2) && self.witness.is_some()
    }
}

pub fn verify_z_window(primes: &[u64], n: u32, radius: i64) -> Result<ZWindowReport, Error> {
    let g = z_window_graph(primes, n, radius)?;
    let path = g.shortest_path(0, 1);
    Ok(ZWindowReport {
        primes: primes.to_vec(),
        n,
        radius,
        distance: path.as_ref().map_or(Dist::Infinite, |p| Dist::Finite(p.len() as u32 - 1)),
        witness: g.witness_path(),
        path,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g = z_window_graph(&[2, 3], 3, 6).unwrap();
        assert_eq!(g.distance(0, 1), Dist::Finite(2));
        assert_eq!(g.witness_path(), Some([0, 3, 1]));

        let g = z_window_graph(&[2, 3], 1, 3).unwrap();
        assert_eq!(g.neighbors(0), [-3, -2, 2, 3]);

        let g = z_window_graph(&[5, 7], 3, 40).unwrap();
        assert_eq!(g.distance(0, 1), Dist::Finite(2));
        assert_eq!(g.witness_path(), Some([0, 14, 1]));
    }

    #[test]
    fn acceptance_exponents() {
        for n in [1, 3, 5] {
            let r = verify_z_window(&[2, 3], n, 12).unwrap();
            assert!(r.confirms_distance_two(), "{r:?}");
        }
    }

    #[test]
    fn radius_errors() {
        assert_eq!(
            z_window_graph(&[5, 7], 3, 10).unwrap_err(),
            Error::WindowTooSmall { radius: 10, suggested: 14 }
        );
        assert_eq!(
            z_window_graph(&[2, 3], 1, 2).unwrap_err(),
            Error::WindowTooSmall { radius: 2, suggested: 3 }
        );
        assert!(z_window_graph(&[2], 1, 5).is_err());
        assert!(z_window_graph(&[2, 4], 1, 5).is_err());
        assert!(z_window_graph(&[3, 3], 1, 5).is_err());
        assert!(z_window_graph(&[2, 3], 0, 5).is_err());
        assert!(z_window_graph(&[2, 3], 1, MAX_RADIUS + 1).is_err());
    }

    #[test]
    fn even_exponent_witnesses() {
        // 2 in D: the Bezout point works for every n
        let g = z_window_graph(&[2, 3], 2, 6).unwrap();
        assert_eq!(g.witness_path(), Some([0, 3, 1]));
        // -1 is a square mod 5: 3^2 + 1 = 10
        assert_eq!(witness_vertex(&[3, 5], 2), Some(3));
        // -1 is a square mod neither 3 nor 7: 1 is out of reach
        assert_eq!(witness_vertex(&[3, 7], 2), None);
        let g = z_window_graph(&[3, 7], 2, 30).unwrap();
        assert_eq!(g.distance(0, 1), Dist::Infinite);
    }

    #[test]
    fn adjacency_matches_divisibility() {
        for primes in [[2u64, 3], [3, 5], [5, 7]] {
            for n in 1..=5 {
                let g = z_window_graph(&primes, n, 12).unwrap_or_else(|_| z_window_graph(&primes, n, 30).unwrap());
                for x in -12i64..=12 {
                    for y in -12i64..=12 {
                        let s = (x as i128).pow(n) + (y as i128).pow(n);
                        let direct = x != y && primes.iter().any(|&p| s % p as i128 == 0);
                        assert_eq!(g.is_adjacent(x, y), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn window_monotone_in_radius() {
        for n in 1..=4 {
            let mut last = Dist::Infinite;
            for radius in [7, 10, 20, 40] {
                let d = z_window_graph(&[3, 5], n, radius).unwrap().distance(0, 1);
                assert!(d <= last);
                last = d;
            }
        }
    }
}
