//! Irreducible characters of the symmetric group (Murnaghan–Nakayama) and
//! the Frobenius count of product-one triples with prescribed cycle types.
//!
//! This is an independent oracle for the enumerator: it never looks at a
//! permutation.

use std::collections::HashMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_of, Partition};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// Removes a border strip of length `m` in every possible way. Works on the
/// beta-set `{lambda_i + (l - 1 - i)}`: a strip removal moves one bead from
/// `b` to `b - m`, with sign `(-1)^(beads strictly between)`.
fn strip_removals(lambda: &[usize], m: usize) -> Vec<(Vec<usize>, i64)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let target = b - m;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((shape, sign));
    }
    out
}

fn mn(lambda: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let value = strip_removals(lambda, mu[0])
        .into_iter()
        .map(|(shape, sign)| sign * mn(&shape, &mu[1..], memo))
        .sum();
    memo.insert(key, value);
    value
}

/// `chi_lambda(mu)`: the irreducible character indexed by `lambda` on the
/// class of cycle type `mu`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.degree() != mu.degree() {
        return Err(Error::DegreeMismatch {
            left: lambda.degree(),
            right: mu.degree(),
        });
    }
    Ok(mn(lambda.parts(), mu.parts(), &mut Memo::new()))
}

/// Full character table of `S_d`, rows and columns in descending-lex
/// partition order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    degree: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: usize) -> Self {
        let partitions: Vec<Partition> = partitions_of(d, None).collect();
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| mn(lambda.parts(), mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self {
            degree: d,
            partitions,
            values,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn index(&self, p: &Partition) -> Result<usize> {
        self.partitions.iter().position(|q| q == p).ok_or(Error::DegreeMismatch {
            left: self.degree,
            right: p.degree(),
        })
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.index(lambda)?][self.index(mu)?])
    }

    /// Dimension of the irreducible indexed by `lambda`.
    pub fn dimension(&self, lambda: &Partition) -> Result<i64> {
        let identity = Partition::ones(self.degree)?;
        self.value(lambda, &identity)
    }

    /// `sum_lambda chi_lambda(mu)^2`, which must equal the centralizer order.
    pub fn column_norm(&self, mu: &Partition) -> Result<i128> {
        let j = self.index(mu)?;
        Ok(self.values.iter().map(|row| (row[j] as i128).pow(2)).sum())
    }

    /// Number of triples `(g1, g2, g3)` with `g_i` of cycle type `types[i]`
    /// and `g1·g2·g3 = 1`, transitive or not:
    /// `|C1||C2||C3| / d! * sum_lambda chi(C1) chi(C2) chi(C3) / dim`.
    pub fn product_one_triples(&self, types: [&Partition; 3]) -> Result<u128> {
        let cols = [self.index(types[0])?, self.index(types[1])?, self.index(types[2])?];
        let id = self.index(&Partition::ones(self.degree)?)?;
        let mut sum = BigRational::zero();
        for row in &self.values {
            let numerator: BigInt = cols.iter().map(|&c| BigInt::from(row[c])).product();
            sum += BigRational::new(numerator, BigInt::from(row[id]));
        }
        let sizes: BigInt = types.iter().map(|t| BigInt::from(t.class_size())).product();
        let total = sum * BigRational::new(sizes, BigInt::from(factorial(self.degree)));
        if !total.denom().is_one() {
            return Err(Error::Inconsistent(format!(
                "Frobenius count {total} is not an integer"
            )));
        }
        total
            .to_integer()
            .to_u128()
            .ok_or_else(|| Error::Inconsistent(format!("Frobenius count {total} is negative")))
    }
}

/// Frobenius product-one triple count for three cycle types of `d`.
pub fn frobenius_tuple_count(types: [&Partition; 3], d: usize) -> Result<u128> {
    for t in types {
        if t.degree() != d {
            return Err(Error::DegreeMismatch {
                left: d,
                right: t.degree(),
            });
        }
    }
    CharacterTable::new(d).product_one_triples(types)
}
