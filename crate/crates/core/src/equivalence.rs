//! Weak equivalence: strong classes closed under branch-point braiding and
//! orientation reversal.
//!
//! States are conjugacy classes of constellations whose cycle types are some
//! ordering of the datum's partition multiset. Two moves braid adjacent
//! branching points and a third reverses orientation:
//!
//! - `Braid1`: `(g1, g2, g3) -> (g1·g2·g1^-1, g1, g3)`
//! - `Braid2`: `(g1, g2, g3) -> (g1, g2·g3·g2^-1, g2)`
//! - `Reverse`: `(g1, g2, g3) -> (g3^-1, g2^-1, g1^-1)`
//!
//! The braids realize the colour swap and duality moves on dessins,
//! conjugation realizes automorphisms of the covering surface, and `Reverse`
//! realizes orientation-reversing homeomorphisms. The weak Hurwitz number is
//! the number of orbits.

use std::collections::HashMap;
use std::fmt;

use crate::constellation::{CanonicalKey, Constellation};
use crate::enumerate::{enumerate_strong, require_three_point, StrongClassSet};
use crate::error::{Error, Result};
use crate::partition::BranchDatum;
use crate::union_find::UnionFind;

/// A single generating move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Braid1,
    Braid2,
    Reverse,
}

impl Move {
    pub const ALL: [Move; 3] = [Move::Braid1, Move::Braid2, Move::Reverse];
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Move::Braid1 => "braid1",
            Move::Braid2 => "braid2",
            Move::Reverse => "reverse",
        };
        f.write_str(s)
    }
}

/// A sequence of moves applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveWord(pub Vec<Move>);

impl MoveWord {
    pub fn apply(&self, c: &Constellation) -> Constellation {
        self.0.iter().fold(c.clone(), |acc, &m| apply_move(m, &acc))
    }
}

pub fn apply_move(m: Move, c: &Constellation) -> Constellation {
    let [g1, g2, g3] = c.perms();
    let perms = match m {
        Move::Braid1 => [g1.then(g2).then(&g1.inverse()), g1.clone(), g3.clone()],
        Move::Braid2 => [g1.clone(), g2.then(g3).then(&g2.inverse()), g2.clone()],
        Move::Reverse => [g3.inverse(), g2.inverse(), g1.inverse()],
    };
    Constellation::from_parts_unchecked(perms)
}

/// Inverse of [`Move::Braid1`]: `(g1, g2, g3) -> (g2, g2^-1·g1·g2, g3)`.
pub fn unbraid1(c: &Constellation) -> Constellation {
    let [g1, g2, g3] = c.perms();
    Constellation::from_parts_unchecked([g2.clone(), g2.inverse().then(g1).then(g2), g3.clone()])
}

/// Inverse of [`Move::Braid2`]: `(g1, g2, g3) -> (g1, g3, g3^-1·g2·g3)`.
pub fn unbraid2(c: &Constellation) -> Constellation {
    let [g1, g2, g3] = c.perms();
    Constellation::from_parts_unchecked([g1.clone(), g3.clone(), g3.inverse().then(g2).then(g3)])
}

/// Orientation reversal that keeps every slot's cycle type in place:
/// `(g1, g2, g3) -> (g1^-1, g2^-1, g2·g1)`. Equal, up to conjugation, to
/// `Reverse` followed by `Braid1·Braid2·Braid1`.
pub fn mirror(c: &Constellation) -> Constellation {
    let [g1, g2, _] = c.perms();
    Constellation::from_parts_unchecked([g1.inverse(), g2.inverse(), g2.then(g1)])
}

/// The dual dessin: the `Braid2` image (second and third slots exchange
/// roles) in canonical form.
pub fn duality_partner(c: &Constellation) -> Constellation {
    apply_move(Move::Braid2, c).canonical()
}

/// Weak equivalence classes of a datum.
#[derive(Clone, Debug)]
pub struct WeakClassSet {
    /// Strong classes of the datum in its given order.
    pub strong: StrongClassSet,
    /// Weak Hurwitz number.
    pub nu: usize,
    /// One representative per weak class, in datum order.
    pub representatives: Vec<Constellation>,
    /// Weak class index of each strong class in `strong.classes`.
    pub provenance: Vec<usize>,
    /// Strong classes of the given order up to orientation reversal only.
    pub mirror_classes: usize,
    /// Number of distinct orderings of the partitions that were enumerated.
    pub orderings: usize,
    /// Total strong classes over all orderings.
    pub states: usize,
}

impl WeakClassSet {
    pub fn strong_count(&self) -> usize {
        self.strong.len()
    }

    /// Strong classes identified by orientation reversal alone.
    pub fn reverse_merges(&self) -> usize {
        self.strong_count() - self.mirror_classes
    }

    /// Further identifications from exchanging equal partitions (colour swap
    /// and duality).
    pub fn role_merges(&self) -> usize {
        self.mirror_classes - self.nu
    }
}

/// Distinct orderings of three partitions, identity first.
fn distinct_orderings(datum: &BranchDatum) -> Vec<[usize; 3]> {
    const ALL: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let ps = datum.partitions();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for o in ALL {
        let seq: Vec<_> = o.iter().map(|&i| ps[i].clone()).collect();
        if !seen.contains(&seq) {
            seen.push(seq);
            out.push(o);
        }
    }
    out
}

/// Computes the weak Hurwitz number by orbit closure over all orderings.
pub fn weak_count(datum: &BranchDatum) -> Result<WeakClassSet> {
    require_three_point(datum)?;
    let orderings = distinct_orderings(datum);
    let mut sets = Vec::with_capacity(orderings.len());
    for o in &orderings {
        sets.push(enumerate_strong(&datum.with_order(o))?);
    }

    let mut states: Vec<&Constellation> = Vec::new();
    let mut index: HashMap<CanonicalKey, usize> = HashMap::new();
    for set in &sets {
        for class in &set.classes {
            index.insert(class.representative.canonical_key(), states.len());
            states.push(&class.representative);
        }
    }
    let base_count = sets[0].len();

    let mut uf = UnionFind::new(states.len());
    for (i, c) in states.iter().enumerate() {
        for m in Move::ALL {
            let key = apply_move(m, c).canonical_key();
            let j = *index.get(&key).ok_or_else(|| {
                Error::Inconsistent(format!("{m} image of state {i} is not an enumerated class"))
            })?;
            uf.union(i, j);
        }
    }
    let labels = uf.labels();

    // Renumber weak classes by their first strong class in datum order.
    let mut weak_of_label: HashMap<usize, usize> = HashMap::new();
    let mut representatives = Vec::new();
    let mut provenance = Vec::with_capacity(base_count);
    for (i, &l) in labels.iter().enumerate().take(base_count) {
        let next = weak_of_label.len();
        let w = *weak_of_label.entry(l).or_insert_with(|| {
            representatives.push(states[i].clone());
            next
        });
        provenance.push(w);
    }
    let nu = uf.components();
    if weak_of_label.len() != nu {
        return Err(Error::Inconsistent(
            "a weak class contains no strong class of the datum's own ordering".into(),
        ));
    }

    let mut mirror_uf = UnionFind::new(base_count);
    for (i, c) in states.iter().enumerate().take(base_count) {
        let j = *index
            .get(&mirror(c).canonical_key())
            .ok_or_else(|| Error::Inconsistent("mirror image is not an enumerated class".into()))?;
        if j >= base_count {
            return Err(Error::Inconsistent("mirror changed the slot order".into()));
        }
        mirror_uf.union(i, j);
    }

    let total_states = states.len();
    let strong = sets.swap_remove(0);
    Ok(WeakClassSet {
        strong,
        nu,
        representatives,
        provenance,
        mirror_classes: mirror_uf.components(),
        orderings: orderings.len(),
        states: total_states,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{heart_datum, HeartParams, Partition};
    use crate::perm::Permutation;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cyc(s: &str, d: usize) -> Permutation {
        Permutation::parse_cycles(s, d).unwrap()
    }

    fn heart(k: usize, h: usize, pi: &[usize]) -> BranchDatum {
        heart_datum(&HeartParams::new(k, h, p(pi))).unwrap()
    }

    fn sample() -> Constellation {
        Constellation::from_pair(cyc("(1 2)(3 4)", 5), cyc("(2 3 5)", 5)).unwrap()
    }

    #[test]
    fn reverse_inverts_equal_three_cycles() {
        let t = cyc("(1 2 3)", 3);
        let c = Constellation::new(t.clone(), t.clone(), t).unwrap();
        let r = apply_move(Move::Reverse, &c);
        let inv = cyc("(1 3 2)", 3);
        assert_eq!(r.perms(), &[inv.clone(), inv.clone(), inv]);
    }

    #[test]
    fn braids_invert() {
        let c = sample();
        assert_eq!(unbraid2(&apply_move(Move::Braid2, &c)), c);
        assert_eq!(apply_move(Move::Braid2, &unbraid2(&c)), c);
        assert_eq!(unbraid1(&apply_move(Move::Braid1, &c)), c);
    }

    #[test]
    fn moves_permute_slot_types() {
        let c = sample();
        let [a, b, t] = c.cycle_types();
        assert_eq!(apply_move(Move::Braid1, &c).cycle_types(), [b.clone(), a.clone(), t.clone()]);
        assert_eq!(apply_move(Move::Braid2, &c).cycle_types(), [a.clone(), t.clone(), b.clone()]);
        assert_eq!(apply_move(Move::Reverse, &c).cycle_types(), [t.clone(), b.clone(), a.clone()]);
        assert_eq!(mirror(&c).cycle_types(), [a, b, t]);
    }

    #[test]
    fn mirror_is_a_move_word_up_to_conjugacy() {
        let c = sample();
        let word = MoveWord(vec![Move::Reverse, Move::Braid1, Move::Braid2, Move::Braid1]);
        assert_eq!(word.apply(&c).canonical_key(), mirror(&c).canonical_key());
    }

    #[test]
    fn duality_is_an_involution_on_classes() {
        let c = sample();
        assert_eq!(duality_partner(&duality_partner(&c)), c.canonical());
        let one = Permutation::identity(1);
        let trivial = Constellation::new(one.clone(), one.clone(), one).unwrap();
        assert_eq!(duality_partner(&trivial), trivial);
    }

    #[test]
    fn small_weak_counts() {
        assert_eq!(weak_count(&heart(1, 0, &[3])).unwrap().nu, 1);
        assert_eq!(weak_count(&heart(2, 2, &[5])).unwrap().nu, 1);
        assert_eq!(weak_count(&heart(4, 2, &[3, 3, 3])).unwrap().nu, 0);
    }

    #[test]
    fn weak_count_ignores_partition_order() {
        let d = heart(3, 2, &[4, 2, 1]);
        let a = weak_count(&d).unwrap().nu;
        for o in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            assert_eq!(weak_count(&d.with_order(&o)).unwrap().nu, a);
        }
    }
}
