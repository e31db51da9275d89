//! Integer partitions, branch data over the sphere and the Riemann–Hurwitz
//! compatibility test.

use std::fmt;

use num::rational::Ratio;
use num::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a positive integer, parts stored in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in any order. Zero parts and the empty
    /// list are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::MalformedDatum("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::MalformedDatum(format!(
                "partition {parts:?} has a zero part"
            )));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(parts))
    }

    /// `[m, m, ..., m]` with `count` copies followed by `tail` (if non-zero).
    pub fn repeated_with_tail(m: usize, count: usize, tail: usize) -> Result<Self> {
        let mut parts = vec![m; count];
        if tail > 0 {
            parts.push(tail);
        }
        Self::new(parts)
    }

    /// `[1, 1, ..., 1]`.
    pub fn ones(d: usize) -> Result<Self> {
        Self::new(vec![1; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0[0]
    }

    pub fn gcd(&self) -> usize {
        self.0.iter().fold(0, |g, &p| g.gcd(&p))
    }

    pub fn lcm(&self) -> usize {
        self.0.iter().fold(1, |l, &p| l.lcm(&p))
    }

    /// Multiplicity of each part size: `(m, c_m)` pairs, `m` descending.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((m, c)) if *m == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// `prod_m m^{c_m} c_m!`.
    pub fn centralizer_order(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(m, c)| (m as u128).pow(c as u32) * factorial(c))
            .product()
    }

    /// Size of the conjugacy class of this cycle type in `S_d`.
    pub fn class_size(&self) -> u128 {
        factorial(self.degree()) / self.centralizer_order()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// A branch datum over the sphere: covering genus, degree and an ordered
/// list of partitions (one per branching point).
///
/// The order matters for strong counts (labelled branching points); weak
/// counts only look at the multiset, see [`BranchDatum::multiset_key`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchDatum {
    cover_genus: usize,
    degree: usize,
    partitions: Vec<Partition>,
}

impl BranchDatum {
    /// Checks that every partition sums to `degree`. Compatibility is not
    /// required here; see [`is_compatible`].
    pub fn new(cover_genus: usize, degree: usize, partitions: Vec<Partition>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::MalformedDatum("degree must be positive".into()));
        }
        if partitions.is_empty() {
            return Err(Error::MalformedDatum("no partitions".into()));
        }
        for p in &partitions {
            if p.degree() != degree {
                return Err(Error::MalformedDatum(format!(
                    "partition {p} sums to {} instead of {degree}",
                    p.degree()
                )));
            }
        }
        Ok(Self {
            cover_genus,
            degree,
            partitions,
        })
    }

    /// Infers the degree from the partition sums and the covering genus from
    /// Riemann–Hurwitz. Fails with [`Error::Incompatible`] when no
    /// non-negative integer genus fits.
    pub fn from_partitions(partitions: Vec<Partition>) -> Result<Self> {
        let degree = partitions
            .first()
            .ok_or_else(|| Error::MalformedDatum("no partitions".into()))?
            .degree();
        let probe = Self::new(0, degree, partitions)?;
        let genus = probe.riemann_hurwitz_genus().ok_or_else(|| {
            Error::Incompatible(format!(
                "{probe} admits no covering surface of non-negative genus"
            ))
        })?;
        Ok(Self {
            cover_genus: genus,
            ..probe
        })
    }

    pub fn cover_genus(&self) -> usize {
        self.cover_genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Number of branching points.
    pub fn branch_points(&self) -> usize {
        self.partitions.len()
    }

    /// Euler characteristic of the covering surface forced by
    /// Riemann–Hurwitz: `sum l_j + d (2 - n)`.
    pub fn forced_euler_characteristic(&self) -> i64 {
        let lengths: i64 = self.partitions.iter().map(|p| p.len() as i64).sum();
        lengths + self.degree as i64 * (2 - self.partitions.len() as i64)
    }

    fn riemann_hurwitz_genus(&self) -> Option<usize> {
        let chi = self.forced_euler_characteristic();
        if chi > 2 || chi % 2 != 0 {
            None
        } else {
            Some(((2 - chi) / 2) as usize)
        }
    }

    /// Same datum with the partitions reordered.
    pub fn with_order(&self, order: &[usize]) -> Self {
        Self {
            cover_genus: self.cover_genus,
            degree: self.degree,
            partitions: order.iter().map(|&i| self.partitions[i].clone()).collect(),
        }
    }

    /// Partitions sorted descending, i.e. the view seen by weak equivalence.
    pub fn sorted_partitions(&self) -> Vec<Partition> {
        let mut ps = self.partitions.clone();
        ps.sort_by(|a, b| b.cmp(a));
        ps
    }

    /// The datum with partitions in canonical multiset order.
    pub fn canonical_multiset(&self) -> Self {
        Self {
            cover_genus: self.cover_genus,
            degree: self.degree,
            partitions: self.sorted_partitions(),
        }
    }

    /// Text form of [`BranchDatum::canonical_multiset`].
    pub fn multiset_key(&self) -> String {
        self.canonical_multiset().to_string()
    }

    /// Whether all partitions are pairwise distinct.
    pub fn partitions_distinct(&self) -> bool {
        let ps = self.sorted_partitions();
        ps.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for BranchDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.partitions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Riemann–Hurwitz over the sphere: `2 - 2g - sum l_j = d (2 - n)`.
pub fn is_compatible(datum: &BranchDatum) -> bool {
    let chi = 2 - 2 * datum.cover_genus as i64;
    chi == datum.forced_euler_characteristic()
}

/// Like [`is_compatible`] but starting from raw, unchecked pieces; reports
/// partitions with the wrong sum as a malformed datum.
pub fn check_compatible(cover_genus: usize, degree: usize, partitions: Vec<Partition>) -> Result<bool> {
    BranchDatum::new(cover_genus, degree, partitions).map(|d| is_compatible(&d))
}

/// Parameters of the family `[2,...,2,1], [2,...,2,2h+1], pi` in odd degree
/// `2k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeartParams {
    pub k: usize,
    pub h: usize,
    pub pi: Partition,
}

impl HeartParams {
    pub fn new(k: usize, h: usize, pi: Partition) -> Self {
        Self { k, h, pi }
    }

    pub fn degree(&self) -> usize {
        2 * self.k + 1
    }
}

/// Builds the datum `(g, 2k+1, [2^k,1], [2^(k-h),2h+1], pi)` with
/// `g = (h - l + 1)/2`.
pub fn heart_datum(params: &HeartParams) -> Result<BranchDatum> {
    let HeartParams { k, h, pi } = params;
    let (k, h) = (*k, *h);
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    let d = 2 * k + 1;
    if pi.degree() != d {
        return Err(Error::MalformedDatum(format!(
            "{pi} does not partition {d}"
        )));
    }
    if h > k {
        return Err(Error::InvalidParams(format!(
            "2h+1 = {} exceeds the degree {d}",
            2 * h + 1
        )));
    }
    let diff = h as i64 - pi.len() as i64;
    if diff < -1 || diff.rem_euclid(2) != 1 {
        return Err(Error::Incompatible(format!(
            "h - l = {diff} must be odd and at least -1"
        )));
    }
    let genus = ((diff + 1) / 2) as usize;
    let black = Partition::repeated_with_tail(2, k, 1)?;
    let white = Partition::repeated_with_tail(2, k - h, 2 * h + 1)?;
    let datum = BranchDatum::new(genus, d, vec![black, white, pi.clone()])?;
    debug_assert!(is_compatible(&datum));
    Ok(datum)
}

/// Classification of a compatible datum against Zieve's realizability
/// criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZieveStatus {
    /// Every partition has GCD 1 and the lcm sum differs from 2: the datum is
    /// predicted realizable.
    Applicable,
    /// Some partition has a common divisor greater than 1.
    GcdObstruction,
    /// All GCDs are 1 but `sum (1 - 1/lcm(pi_j)) = 2`.
    Euclidean,
}

impl ZieveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ZieveStatus::Applicable => "applicable",
            ZieveStatus::GcdObstruction => "gcd_obstruction",
            ZieveStatus::Euclidean => "euclidean",
        }
    }
}

impl fmt::Display for ZieveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `sum_j (1 - 1/lcm(pi_j))` as an exact rational.
pub fn orbifold_lcm_sum(datum: &BranchDatum) -> Ratio<i64> {
    datum
        .partitions()
        .iter()
        .map(|p| Ratio::from_integer(1) - Ratio::new(1, p.lcm() as i64))
        .sum()
}

pub fn zieve_status(datum: &BranchDatum) -> ZieveStatus {
    if datum.partitions().iter().any(|p| p.gcd() > 1) {
        ZieveStatus::GcdObstruction
    } else if orbifold_lcm_sum(datum) == Ratio::from_integer(2) {
        ZieveStatus::Euclidean
    } else {
        ZieveStatus::Applicable
    }
}

/// Partitions of `d` in descending lexicographic order, optionally limited to
/// at most `max_len` parts.
pub fn partitions_of(d: usize, max_len: Option<usize>) -> Partitions {
    Partitions {
        current: if d == 0 { None } else { Some(vec![d]) },
        max_len,
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    max_len: Option<usize>,
}

impl Partitions {
    fn step(parts: &[usize]) -> Option<Vec<usize>> {
        let pos = parts.iter().rposition(|&p| p > 1)?;
        let value = parts[pos] - 1;
        let mut rest = parts[pos + 1..].iter().sum::<usize>() + 1;
        let mut next = parts[..pos].to_vec();
        next.push(value);
        while rest > 0 {
            let take = rest.min(value);
            next.push(take);
            rest -= take;
        }
        Some(next)
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let parts = self.current.take()?;
            self.current = Self::step(&parts);
            if self.max_len.map_or(true, |m| parts.len() <= m) {
                return Some(Partition(parts));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn datum(g: usize, d: usize, ps: &[&[usize]]) -> BranchDatum {
        BranchDatum::new(g, d, ps.iter().map(|x| p(x)).collect()).unwrap()
    }

    #[test]
    fn partition_is_sorted_descending() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[2, 2, 1]).to_string(), "[2,2,1]");
    }

    #[test]
    fn compatibility_examples() {
        assert!(is_compatible(&datum(0, 5, &[&[2, 2, 1], &[2, 3], &[2, 3]])));
        assert!(!is_compatible(&datum(0, 3, &[&[3]])));
        let bad = check_compatible(2, 9, vec![p(&[2, 2, 2, 2, 1]), p(&[2, 2, 9])]);
        assert!(matches!(bad, Err(Error::MalformedDatum(_))));
    }

    #[test]
    fn genus_inference() {
        let d = BranchDatum::from_partitions(vec![p(&[2, 2, 2, 2, 1]), p(&[9]), p(&[9])]).unwrap();
        assert_eq!(d.cover_genus(), 2);
        assert!(matches!(
            BranchDatum::from_partitions(vec![p(&[3])]),
            Err(Error::Incompatible(_))
        ));
    }

    #[test]
    fn heart_examples() {
        let d = heart_datum(&HeartParams::new(4, 2, p(&[3, 3, 3]))).unwrap();
        assert_eq!(d, datum(0, 9, &[&[2, 2, 2, 2, 1], &[2, 2, 5], &[3, 3, 3]]));
        let d = heart_datum(&HeartParams::new(2, 2, p(&[5]))).unwrap();
        assert_eq!(d, datum(1, 5, &[&[2, 2, 1], &[5], &[5]]));
        assert!(matches!(
            heart_datum(&HeartParams::new(3, 2, p(&[4, 3]))),
            Err(Error::Incompatible(_))
        ));
        assert!(heart_datum(&HeartParams::new(2, 3, p(&[5]))).is_err());
        assert!(heart_datum(&HeartParams::new(2, 0, p(&[4]))).is_err());
    }

    #[test]
    fn zieve_examples() {
        let d = heart_datum(&HeartParams::new(4, 2, p(&[3, 3, 3]))).unwrap();
        assert_eq!(zieve_status(&d), ZieveStatus::GcdObstruction);
        let d = datum(1, 6, &[&[3, 3], &[3, 3], &[3, 3]]);
        assert!(is_compatible(&d));
        // GCD 3 wins over the Euclidean lcm sum.
        assert_eq!(zieve_status(&d), ZieveStatus::GcdObstruction);
        let d = datum(0, 4, &[&[3, 1], &[3, 1], &[3, 1]]);
        assert!(is_compatible(&d));
        assert_eq!(orbifold_lcm_sum(&d), Ratio::from_integer(2));
        assert_eq!(zieve_status(&d), ZieveStatus::Euclidean);
        let d = heart_datum(&HeartParams::new(4, 2, p(&[4, 3, 2]))).unwrap();
        assert_eq!(zieve_status(&d), ZieveStatus::Applicable);
    }

    #[test]
    fn partitions_of_four_in_order() {
        let got: Vec<String> = partitions_of(4, None).map(|p| p.to_string()).collect();
        assert_eq!(got, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        assert_eq!(partitions_of(1, None).count(), 1);
        assert_eq!(partitions_of(9, Some(3)).count(), 12);
    }

    #[test]
    fn class_sizes() {
        assert_eq!(p(&[2, 1]).class_size(), 3);
        assert_eq!(p(&[2, 2, 1]).class_size(), 15);
        assert_eq!(p(&[9, 2]).class_size(), 2_217_600);
        assert_eq!(p(&[2, 2, 1]).centralizer_order(), 8);
    }

    /// Partition numbers from Euler's pentagonal recurrence.
    fn partition_numbers(n: usize) -> Vec<i64> {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut j = 1i64;
            loop {
                let sign = if j % 2 == 1 { 1 } else { -1 };
                let mut any = false;
                for g in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
                    if g as usize <= m {
                        p[m] += sign * p[m - g as usize];
                        any = true;
                    }
                }
                if !any {
                    break;
                }
                j += 1;
            }
        }
        p
    }

    #[test]
    fn partition_counts_match_recurrence() {
        let expected = partition_numbers(14);
        assert_eq!(expected[9], 30);
        assert_eq!(expected[11], 56);
        for d in 1..=14 {
            let all: Vec<_> = partitions_of(d, None).collect();
            assert_eq!(all.len() as i64, expected[d], "d={d}");
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
        }
    }

    #[test]
    fn compatibility_ignores_order() {
        let d = datum(1, 9, &[&[2, 2, 2, 2, 1], &[7, 2], &[7, 2]]);
        assert!(is_compatible(&d));
        for d in 3..=7 {
            let ps: Vec<_> = partitions_of(d, None).collect();
            for a in &ps {
                for b in &ps {
                    for c in &ps {
                        let base = BranchDatum::from_partitions(vec![a.clone(), b.clone(), c.clone()]);
                        let swapped = BranchDatum::from_partitions(vec![c.clone(), a.clone(), b.clone()]);
                        assert_eq!(base.is_ok(), swapped.is_ok());
                        if let (Ok(x), Ok(y)) = (base, swapped) {
                            assert_eq!(x.cover_genus(), y.cover_genus());
                        }
                    }
                }
            }
        }
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn heart_data_are_compatible(k in 1usize..12, h_frac in 0.0f64..1.0, seed in any::<u64>()) {
            let h = ((k + 1) as f64 * h_frac) as usize;
            let h = h.min(k);
            let d = 2 * k + 1;
            let all: Vec<_> = partitions_of(d, None).collect();
            let pi = all[(seed % all.len() as u64) as usize].clone();
            if let Ok(datum) = heart_datum(&HeartParams::new(k, h, pi)) {
                prop_assert!(is_compatible(&datum));
                prop_assert_eq!(datum.degree(), d);
            }
        }
    }
}
