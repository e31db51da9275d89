//! Constellations: transitive triples `(g1, g2, g3)` with `g1·g2·g3 = 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{is_transitive, Permutation};

/// Monodromy of a branched cover of the sphere over three points.
///
/// Read as a dessin: cycles of `g1` are black vertices, cycles of `g2` white
/// vertices and cycles of `g3` regions; points are edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constellation {
    perms: [Permutation; 3],
}

/// Complete invariant of a transitive triple up to simultaneous conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl Constellation {
    /// Validates equal degrees, product identity and transitivity.
    pub fn new(g1: Permutation, g2: Permutation, g3: Permutation) -> Result<Self> {
        let product = g1.compose(&g2)?.compose(&g3)?;
        if !product.is_identity() {
            return Err(Error::Inconsistent(format!(
                "product {g1}·{g2}·{g3} is not the identity"
            )));
        }
        if !is_transitive(g1.degree(), &[g1.clone(), g2.clone()])? {
            return Err(Error::Inconsistent(format!(
                "<{g1}, {g2}> is not transitive"
            )));
        }
        Ok(Self { perms: [g1, g2, g3] })
    }

    /// Completes `(g1, g2)` with `g3 = (g1·g2)^-1`.
    pub fn from_pair(g1: Permutation, g2: Permutation) -> Result<Self> {
        let g3 = g1.compose(&g2)?.inverse();
        Self::new(g1, g2, g3)
    }

    pub(crate) fn from_parts_unchecked(perms: [Permutation; 3]) -> Self {
        debug_assert!(Self::new(perms[0].clone(), perms[1].clone(), perms[2].clone()).is_ok());
        Self { perms }
    }

    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn perms(&self) -> &[Permutation; 3] {
        &self.perms
    }

    pub fn get(&self, slot: usize) -> &Permutation {
        &self.perms[slot]
    }

    pub fn cycle_types(&self) -> [Partition; 3] {
        [
            self.perms[0].cycle_type(),
            self.perms[1].cycle_type(),
            self.perms[2].cycle_type(),
        ]
    }

    /// `c(g1) + c(g2) + c(g3) - d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.perms.iter().map(|p| p.cycle_count() as i64).sum::<i64>() - self.degree() as i64
    }

    /// Genus of the covering surface, `1 - chi/2`.
    pub fn genus(&self) -> Result<usize> {
        let chi = self.euler_characteristic();
        if chi % 2 != 0 || chi > 2 {
            return Err(Error::Inconsistent(format!(
                "Euler characteristic {chi} does not come from a closed orientable surface"
            )));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// Image arrays of the three slots concatenated; the order used to pick
    /// deterministic representatives.
    pub fn image_key(&self) -> Vec<u32> {
        self.perms.iter().flat_map(|p| p.images().iter().copied()).collect()
    }

    /// Conjugates all three permutations by `h`.
    pub fn conjugate(&self, h: &Permutation) -> Self {
        Self {
            perms: [
                self.perms[0].conjugate(h),
                self.perms[1].conjugate(h),
                self.perms[2].conjugate(h),
            ],
        }
    }

    /// The relabelling produced by a breadth-first walk from `start` along
    /// `g1` and `g2`. Requires transitivity.
    fn bfs_labels(&self, start: usize, labels: &mut [u32], queue: &mut Vec<u32>) {
        const UNSET: u32 = u32::MAX;
        labels.iter_mut().for_each(|l| *l = UNSET);
        queue.clear();
        labels[start] = 0;
        queue.push(start as u32);
        let mut head = 0;
        let (a, b) = (self.perms[0].images(), self.perms[1].images());
        while head < queue.len() {
            let x = queue[head] as usize;
            head += 1;
            for y in [a[x], b[x]] {
                if labels[y as usize] == UNSET {
                    labels[y as usize] = queue.len() as u32;
                    queue.push(y);
                }
            }
        }
        debug_assert_eq!(queue.len(), labels.len());
    }

    /// Relabelling `h` (as images) that maps this triple to its canonical
    /// form, together with the relabelled `(g1, g2)` images. The canonical
    /// form is the lexicographically least relabelling over all
    /// breadth-first starting points.
    fn canonical_search(&self) -> (Vec<u32>, Vec<u32>) {
        let d = self.degree();
        let (a, b) = (self.perms[0].images(), self.perms[1].images());
        let mut labels = vec![0u32; d];
        let mut queue = Vec::with_capacity(d);
        let mut best_labels: Vec<u32> = Vec::new();
        let mut best: Vec<u32> = Vec::new();
        let mut cand = vec![0u32; 2 * d];
        for start in 0..d {
            self.bfs_labels(start, &mut labels, &mut queue);
            for i in 0..d {
                cand[labels[i] as usize] = labels[a[i] as usize];
                cand[d + labels[i] as usize] = labels[b[i] as usize];
            }
            if best.is_empty() || cand < best {
                best.clone_from(&cand);
                best_labels.clone_from(&labels);
            }
        }
        (best_labels, best)
    }

    /// Canonical form key for conjugacy of transitive triples.
    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey(self.canonical_search().1)
    }

    /// The canonical conjugate of this triple.
    pub fn canonical(&self) -> Self {
        let h = Permutation::from_raw(self.canonical_search().0);
        self.conjugate(&h)
    }
}

impl fmt::Display for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.perms[0], self.perms[1], self.perms[2])
    }
}

impl fmt::Debug for Constellation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Constellation{self} on {}", self.degree())
    }
}

/// Genus of the cover encoded by a constellation.
pub fn genus_of(c: &Constellation) -> Result<usize> {
    c.genus()
}
