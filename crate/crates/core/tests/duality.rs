//! Which classes of `[2,2,2,2,1],[7,2],[7,2]` are identified by exchanging
//! the two equal partitions.

use std::collections::HashMap;

use hurwitz::constellation::CanonicalKey;
use hurwitz::equivalence::mirror;
use hurwitz::union_find::UnionFind;
use hurwitz::*;

fn datum() -> BranchDatum {
    heart_datum(&HeartParams::new(4, 3, Partition::new(vec![7, 2]).unwrap())).unwrap()
}

/// White 2-valent vertices met walking from the black leaf to the 7-valent
/// white vertex.
fn tail_length(c: &Constellation) -> usize {
    let [g1, g2, _] = c.perms();
    let leaf = (0..c.degree()).find(|&i| g1.apply(i) == i).unwrap();
    let cycle_len = |x: usize| g2.cycles().into_iter().find(|cy| cy.contains(&x)).unwrap().len();
    let mut edge = leaf;
    let mut tail = 0;
    while cycle_len(edge) != 7 {
        tail += 1;
        edge = g1.apply(g2.apply(edge));
    }
    tail
}

#[test]
fn duality_merges_exactly_one_pair() {
    let w = weak_count(&datum()).unwrap();
    let reps: Vec<&Constellation> = w.strong.classes.iter().map(|c| &c.representative).collect();
    let index: HashMap<CanonicalKey, usize> = reps.iter().enumerate().map(|(i, c)| (c.canonical_key(), i)).collect();

    let mut uf = UnionFind::new(reps.len());
    for (i, c) in reps.iter().enumerate() {
        uf.union(i, index[&mirror(c).canonical_key()]);
    }
    let labels = uf.labels();
    assert_eq!(uf.components(), 6);

    // Mirror classes by tail length: one with a tail, five without.
    let mut tails: HashMap<usize, usize> = HashMap::new();
    for (i, c) in reps.iter().enumerate() {
        let t = tail_length(c);
        assert!(reps.iter().enumerate().all(|(j, d)| labels[j] != labels[i] || tail_length(d) == t));
        tails.insert(labels[i], t);
    }
    let with_tail: Vec<usize> = tails.iter().filter(|(_, &t)| t == 1).map(|(&l, _)| l).collect();
    assert_eq!(with_tail.len(), 1);
    assert_eq!(tails.values().filter(|&&t| t == 0).count(), 5);

    let mut self_dual = 0;
    let mut merged = Vec::new();
    for (&label, _) in &tails {
        let i = labels.iter().position(|&l| l == label).unwrap();
        let partner = labels[index[&duality_partner(reps[i]).canonical_key()]];
        if partner == label {
            self_dual += 1;
        } else {
            merged.push((label, partner));
        }
    }
    assert_eq!(self_dual, 4);
    assert_eq!(merged.len(), 2);
    let (a, b) = merged[0];
    assert!(with_tail.contains(&a) || with_tail.contains(&b));
    assert_eq!(tails[&a] + tails[&b], 1);
    assert_eq!(w.nu, 5);
}

#[test]
fn genus_two_duality_pairs() {
    let d = heart_datum(&HeartParams::new(4, 4, Partition::new(vec![9]).unwrap())).unwrap();
    let w = weak_count(&d).unwrap();
    assert_eq!((w.strong_count(), w.mirror_classes, w.nu), (21, 13, 10));
    assert_eq!(w.role_merges(), 3);
}
