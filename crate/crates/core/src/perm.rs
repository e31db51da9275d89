//! Permutations of `{0, ..., d-1}` (printed 1-based in cycle notation).
//!
//! Composition is left to right: `a.compose(&b)` applies `a` first, then `b`,
//! so `(a·b)(x) = b(a(x))`. A constellation `(g1, g2, g3)` therefore means
//! "apply g1, then g2, then g3, and land on the identity". Every module uses
//! this convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::union_find::UnionFind;

/// A permutation stored by its image array: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self {
            images: (0..d as u32).collect(),
        }
    }

    /// From a 0-based image array; rejects non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&i| i as usize).collect()).is_ok());
        Self { images }
    }

    /// From disjoint cycles written with 1-based points.
    pub fn from_cycles(d: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut touched = vec![false; d];
        for cycle in cycles {
            for (pos, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > d || touched[pt - 1] {
                    return Err(Error::NotAPermutation(format!(
                        "bad or repeated point {pt} in cycles {cycles:?} (degree {d})"
                    )));
                }
                touched[pt - 1] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[pt - 1] = next - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, d: usize) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let end = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
            let cycle = body[..end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(d, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked [`Permutation::compose`]; panics on a degree mismatch.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self { images: inv }
    }

    /// `h^-1 · self · h`: if `self` sends `i` to `j`, the result sends
    /// `h(i)` to `h(j)`.
    pub fn conjugate(&self, h: &Self) -> Self {
        assert_eq!(self.degree(), h.degree(), "degree mismatch");
        let mut out = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            out[h.images[i] as usize] = h.images[j as usize];
        }
        Self { images: out }
    }

    /// Disjoint cycles (0-based), each starting at its least point, ordered
    /// by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        cycle_lengths(&self.images).len()
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(cycle_lengths(&self.images)).expect("cycle lengths are positive")
    }

    /// Sign of the permutation as `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycles on consecutive blocks of points, longest cycle first:
    /// `[3,2]` gives `(1 2 3)(4 5)`.
    pub fn canonical_of_type(t: &Partition) -> Self {
        let d = t.degree();
        let mut images = vec![0u32; d];
        let mut start = 0;
        for &m in t.parts() {
            for j in 0..m {
                images[start + j] = (start + (j + 1) % m) as u32;
            }
            start += m;
        }
        Self { images }
    }

    /// Generators of the centralizer of a canonical representative: one
    /// rotation per non-trivial cycle and one block swap per pair of adjacent
    /// equal-length cycles. They generate a group of order
    /// `prod_m m^{c_m} c_m!`.
    pub fn centralizer_generators(&self) -> Result<Vec<Self>> {
        let t = self.cycle_type();
        if *self != Self::canonical_of_type(&t) {
            return Err(Error::NonCanonical);
        }
        let d = self.degree();
        let mut gens = Vec::new();
        let mut start = 0;
        let parts = t.parts();
        for (idx, &m) in parts.iter().enumerate() {
            if m > 1 {
                let mut images: Vec<u32> = (0..d as u32).collect();
                for j in 0..m {
                    images[start + j] = (start + (j + 1) % m) as u32;
                }
                gens.push(Self { images });
            }
            if idx + 1 < parts.len() && parts[idx + 1] == m {
                let mut images: Vec<u32> = (0..d as u32).collect();
                for j in 0..m {
                    images[start + j] = (start + m + j) as u32;
                    images[start + m + j] = (start + j) as u32;
                }
                gens.push(Self { images });
            }
            start += m;
        }
        Ok(gens)
    }

    /// 1-based cycle notation with fixed points omitted.
    pub fn to_cycle_string(&self) -> String {
        let mut s = String::new();
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            s.push('(');
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&(p + 1).to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.to_cycle_string(), self.degree())
    }
}

/// Cycle lengths of an image array, unsorted.
pub(crate) fn cycle_lengths(images: &[u32]) -> Vec<usize> {
    let d = images.len();
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for start in 0..d {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            x = images[x] as usize;
        }
        out.push(len);
    }
    out
}

/// Whether the group generated by `gens` acts transitively on `degree`
/// points. An empty generating set is transitive only on one point.
pub fn is_transitive(degree: usize, gens: &[Permutation]) -> Result<bool> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    if degree == 0 {
        return Ok(false);
    }
    let mut uf = UnionFind::new(degree);
    for g in gens {
        for (i, &j) in g.images().iter().enumerate() {
            uf.union(i, j as usize);
        }
    }
    Ok(uf.components() == 1)
}

/// Orbit-of-zero transitivity test on raw image arrays (hot path).
pub(crate) fn transitive_pair(a: &[u32], b: &[u32], stack: &mut Vec<u32>, seen: &mut [bool]) -> bool {
    let d = a.len();
    seen.iter_mut().for_each(|s| *s = false);
    stack.clear();
    stack.push(0);
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for y in [a[x as usize], b[x as usize]] {
            if !seen[y as usize] {
                seen[y as usize] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == d
}
