use std::collections::{HashMap, HashSet};

use hurwitz::scanner::{compatible_data, ScanConfig};
use hurwitz::*;

fn symmetric_group(d: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, d: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == d {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for i in 0..d {
            if !prefix.contains(&i) {
                prefix.push(i);
                rec(prefix, d, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), d, &mut out);
    out
}

/// Strong classes by the definition: all transitive pairs of S_d x S_d with
/// the right types, grouped into orbits of simultaneous conjugation.
fn naive_strong(datum: &BranchDatum, group: &[Permutation]) -> (usize, u128, Vec<u128>) {
    let ps = datum.partitions();
    let a_class: Vec<&Permutation> = group.iter().filter(|g| g.cycle_type() == ps[0]).collect();
    let b_class: Vec<&Permutation> = group.iter().filter(|g| g.cycle_type() == ps[1]).collect();
    let mut tuples = Vec::new();
    for a in &a_class {
        for b in &b_class {
            let c = a.then(b).inverse();
            if c.cycle_type() == ps[2] && is_transitive(datum.degree(), &[(*a).clone(), (*b).clone()]).unwrap() {
                tuples.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    let mut seen: HashSet<(Permutation, Permutation)> = HashSet::new();
    let mut stabilizers = Vec::new();
    for t in &tuples {
        if seen.contains(t) {
            continue;
        }
        let mut orbit = HashSet::new();
        for h in group {
            orbit.insert((t.0.conjugate(h), t.1.conjugate(h)));
        }
        stabilizers.push(group.len() as u128 / orbit.len() as u128);
        seen.extend(orbit);
    }
    stabilizers.sort_unstable();
    (stabilizers.len(), tuples.len() as u128, stabilizers)
}

#[test]
fn enumerator_matches_naive_search_up_to_degree_five() {
    for d in 1..=5 {
        let group = symmetric_group(d);
        for datum in compatible_data(d, &ScanConfig::default()) {
            for order in [[0, 1, 2], [2, 0, 1], [1, 0, 2]] {
                let datum = datum.with_order(&order);
                let set = enumerate_strong(&datum).unwrap();
                let (classes, tuples, mut auts) = naive_strong(&datum, &group);
                let mut got: Vec<u128> = set.classes.iter().map(|c| c.automorphism_order).collect();
                got.sort_unstable();
                auts.sort_unstable();
                assert_eq!(set.len(), classes, "{datum}");
                assert_eq!(set.tuple_count, tuples, "{datum}");
                assert_eq!(got, auts, "{datum}");
            }
        }
    }
}

#[test]
fn orbit_sum_and_frobenius_up_to_degree_seven() {
    for d in 2..=7 {
        let table = CharacterTable::new(d);
        for datum in compatible_data(d, &ScanConfig::default()) {
            let set = enumerate_strong(&datum).unwrap();
            let ps = datum.partitions();
            // An orbit of simultaneous conjugation has d!/|Aut| triples.
            let sum: u128 = set.classes.iter().map(|c| ps[0].centralizer_order() / c.automorphism_order).sum();
            assert_eq!(set.orbit_sum(), set.tuple_count, "{datum}");
            assert_eq!(sum * ps[0].class_size(), set.tuple_count, "{datum}");
            assert!(set.tuple_count <= set.raw_tuple_count);
            assert_eq!(table.product_one_triples([&ps[0], &ps[1], &ps[2]]).unwrap(), set.raw_tuple_count, "{datum}");
        }
    }
}

#[test]
fn canonical_key_separates_conjugacy_classes() {
    let group = symmetric_group(5);
    for datum in compatible_data(5, &ScanConfig::default()) {
        let set = enumerate_strong(&datum).unwrap();
        let mut keys = HashMap::new();
        for class in &set.classes {
            let key = class.representative.canonical_key();
            assert!(keys.insert(key.clone(), ()).is_none(), "{datum}: two classes share a key");
            for h in group.iter().step_by(7) {
                assert_eq!(class.representative.conjugate(h).canonical_key(), key);
            }
        }
    }
}
