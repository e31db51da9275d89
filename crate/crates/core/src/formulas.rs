//! Closed-form weak Hurwitz numbers for the odd-degree family
//! `[2,...,2,1], [2,...,2,2h+1], pi` in degree `2k+1`, together with the
//! per-embedding counts they are assembled from.
//!
//! Everything is exact integer arithmetic. `[x]` (integer part) only ever
//! meets non-negative arguments in range, so it is plain floor division.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `[n/2]` for `n >= 0`.
fn half(n: i64) -> i64 {
    debug_assert!(n >= 0);
    n / 2
}

/// `[(n/2)^2] = [n^2/4]`; the square makes the sign of `n` irrelevant.
fn quarter_square(n: i64) -> i64 {
    n * n / 4
}

fn exact_half(n: i64) -> i64 {
    assert!(n % 2 == 0, "{n} is odd where an even value is forced");
    n / 2
}

/// Binomial coefficient, 0 when `r > n`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The two constant cases of genus 0: `h = 0, l = 1` and `h = 1, l = 2` both
/// have a unique realization.
pub fn nu_g0_h0(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    Ok(1)
}

pub fn nu_g0_h1(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    Ok(1)
}

/// Classification of `[p,q,r]` (sorted `p >= q >= r`) by equalities among
/// the parts and by `p` against `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    /// `p = q = r`
    EE,
    /// `p = q > r`
    EG,
    /// `p > q = r`, `p > k`
    GeG,
    /// `p > q = r`, `p <= k`
    GeL,
    /// `p > q > r`, `p > k`
    GgG,
    /// `p > q > r`, `p <= k`
    GgL,
}

fn sorted_triple(k: u64, p: u64, q: u64, r: u64) -> Result<(u64, u64, u64)> {
    let mut v = [p, q, r];
    v.sort_unstable_by(|a, b| b.cmp(a));
    if v[2] == 0 {
        return Err(Error::InvalidParams("parts must be positive".into()));
    }
    if v.iter().sum::<u64>() != 2 * k + 1 {
        return Err(Error::InvalidParams(format!(
            "[{p},{q},{r}] does not partition {}",
            2 * k + 1
        )));
    }
    Ok((v[0], v[1], v[2]))
}

pub fn case_tag(k: u64, p: u64, q: u64, r: u64) -> Result<CaseTag> {
    let (p, q, r) = sorted_triple(k, p, q, r)?;
    Ok(match (p == q, q == r) {
        (true, true) => CaseTag::EE,
        (true, false) => CaseTag::EG,
        (false, true) if p > k => CaseTag::GeG,
        (false, true) => CaseTag::GeL,
        (false, false) if p > k => CaseTag::GgG,
        (false, false) => CaseTag::GgL,
    })
}

/// Realizations of `[p,q,r]` through the two genus-0 embeddings `I` and `II`.
pub fn claim_counts_g0_h2(k: u64, p: u64, q: u64, r: u64) -> Result<(u64, u64)> {
    Ok(match case_tag(k, p, q, r)? {
        CaseTag::EE => (0, 0),
        CaseTag::EG => (0, 1),
        CaseTag::GeG => (1, 0),
        CaseTag::GeL => (0, 1),
        CaseTag::GgG => (1, 1),
        CaseTag::GgL => (0, 3),
    })
}

/// `g = 0, h = 2, l = 3`.
pub fn nu_g0_h2(k: u64, p: u64, q: u64, r: u64) -> Result<u64> {
    let (p, q, r) = sorted_triple(k, p, q, r)?;
    Ok(if p == q && q == r {
        0
    } else if p == q || q == r {
        1
    } else if p > k {
        2
    } else {
        3
    })
}

/// `g = 1, h = 2, l = 1`: `[(k/2)^2]`.
pub fn nu_g1_h2(k: u64) -> Result<u64> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("k = {k} < 2")));
    }
    Ok(k * k / 4)
}

fn check_g1_h3(k: u64, p: u64) -> Result<(i64, i64)> {
    if k < 3 {
        return Err(Error::InvalidParams(format!("k = {k} < 3")));
    }
    if p <= k || p > 2 * k {
        return Err(Error::InvalidParams(format!(
            "p = {p} outside {}..={}",
            k + 1,
            2 * k
        )));
    }
    Ok((k as i64, p as i64))
}

/// Per-embedding counts for `g = 1, h = 3, l = 2`, indexed `I` to `VII`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusOneClaims {
    pub i: u64,
    pub ii: u64,
    pub iii: u64,
    pub iv: u64,
    pub v: u64,
    pub vi: u64,
    pub vii: u64,
}

impl GenusOneClaims {
    pub fn as_array(&self) -> [u64; 7] {
        [self.i, self.ii, self.iii, self.iv, self.v, self.vi, self.vii]
    }

    pub fn total(&self) -> u64 {
        self.as_array().iter().sum()
    }
}

/// Intermediate counts inside the `g = 1, h = 3` claims. Each has a direct
/// summation form (see the tests) and stays valid at the range boundaries.
pub mod parts {
    use super::{exact_half, half, quarter_square};

    /// First system of embedding `I`:
    /// `[((k-2-[(p+1)/2])/2)^2] + k - 1 - [(p+1)/2]`, zero for `p > 2k-4`.
    pub fn embedding_i_first(k: i64, p: i64) -> i64 {
        let m = k - 2 - half(p + 1);
        quarter_square(m) + k - 1 - half(p + 1)
    }

    /// Second system of embedding `I` at `p = k+1`: `[([k/2]/2)^2]`.
    pub fn embedding_i_second_at_lower_end(k: i64) -> i64 {
        quarter_square(half(k))
    }

    /// Second system of embedding `I` for `k+1 <= p <= 2k`:
    /// `[([(p-1)/2]/2 - 1)^2] - [((p-k-3)/2)^2] + [(p-1)/2] - p + k + 1`.
    pub fn embedding_i_second(k: i64, p: i64) -> i64 {
        let u = half(p - 1);
        quarter_square(u - 2) - quarter_square(p - k - 3) + u - p + k + 1
    }

    /// First system of embedding `V`:
    /// `([(p-1)/2]^2 - [(p-1)/2](2p-2k-1) + (p-k-1)(p-k)) / 2`.
    pub fn embedding_v_first(k: i64, p: i64) -> i64 {
        let u = half(p - 1);
        exact_half(u * u - u * (2 * p - 2 * k - 1) + (p - k - 1) * (p - k))
    }

    /// Second system of embedding `V`:
    /// `([p/2]^2 - [p/2](2p-2k-1) + (p-k-1)(p-k)) / 2`.
    pub fn embedding_v_second(k: i64, p: i64) -> i64 {
        let u = half(p);
        exact_half(u * u - u * (2 * p - 2 * k - 1) + (p - k - 1) * (p - k))
    }
}

fn non_negative(v: i64, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Inconsistent(format!("{what} evaluated to {v}")))
}

/// Per-embedding realization counts of `[p, 2k+1-p]` for `g = 1, h = 3`.
pub fn claim_counts_g1_h3(k: u64, p: u64) -> Result<GenusOneClaims> {
    let (k, p) = check_g1_h3(k, p)?;
    let i = quarter_square(k - half(p + 1)) + quarter_square(half(p - 1)) - quarter_square(p - k - 1);
    let ii = exact_half((p - k - 1) * (p - k - 2));
    let iv = quarter_square(p - k - 1);
    let v = half(p) * half(p) - (p - 1) * half(p) - k * (p - k) + exact_half(p * (p - 1));
    let vi = (2 * k - p) * (p - k - 1);
    let vii = quarter_square(p) - k * (p - k);
    Ok(GenusOneClaims {
        i: non_negative(i, "claim I")?,
        ii: non_negative(ii, "claim II")?,
        iii: non_negative(ii, "claim III")?,
        iv: non_negative(iv, "claim IV")?,
        v: non_negative(v, "claim V")?,
        vi: non_negative(vi, "claim VI")?,
        vii: non_negative(vii, "claim VII")?,
    })
}

/// The closed formula for `g = 1, h = 3, l = 2` without the duality
/// correction at `(k, p) = (4, 7)`.
pub fn nu_g1_h3_uncorrected(k: u64, p: u64) -> Result<u64> {
    let (k, p) = check_g1_h3(k, p)?;
    let value = quarter_square(k - half(p + 1)) + quarter_square(half(p - 1)) + half(p) * half(p)
        - (p - 1) * half(p)
        + quarter_square(p)
        + k * k
        - k * (p - 1)
        + exact_half((p - 1) * (p - 4));
    non_negative(value, "genus-1 h=3 formula")
}

/// `g = 1, h = 3, l = 2`, `p > q = 2k+1-p`. At `(4, 7)` the datum has two
/// equal partitions and one pair of realizations is dual, giving 5.
pub fn nu_g1_h3(k: u64, p: u64) -> Result<u64> {
    let value = nu_g1_h3_uncorrected(k, p)?;
    Ok(if (k, p) == (4, 7) { 5 } else { value })
}

/// The genus-2 polynomial
/// `k(7k^3 - 42k^2 + 72k - 37)/16 + 5(2k-3)[k/2]/8`, without the `k = 4`
/// correction.
pub fn nu_g2_h4_uncorrected(k: u64) -> Result<u64> {
    if k < 4 {
        return Err(Error::InvalidParams(format!("k = {k} < 4")));
    }
    let k = k as i64;
    let numerator = k * (7 * k * k * k - 42 * k * k + 72 * k - 37) + 10 * (2 * k - 3) * half(k);
    if numerator % 16 != 0 {
        return Err(Error::Inconsistent(format!(
            "genus-2 numerator {numerator} is not divisible by 16"
        )));
    }
    non_negative(numerator / 16, "genus-2 formula")
}

/// `g = 2, h = 4, l = 1`; 10 at `k = 4`, where three pairs of the thirteen
/// embeddings are dual to each other.
pub fn nu_g2_h4(k: u64) -> Result<u64> {
    let value = nu_g2_h4_uncorrected(k)?;
    Ok(if k == 4 { 10 } else { value })
}

/// Non-negative 5-tuples summing to `n`, up to
/// `(a,b,c,d,e) <-> (b,a,d,c,e)`; Burnside over the two-element group.
pub fn symmetric_five_tuples(n: u64) -> u64 {
    let all = binomial(n + 4, 4);
    // Fixed tuples: a = b, c = d, so 2(a + c) + e = n.
    let fixed: u64 = (0..=n / 2).map(|s| s + 1).sum();
    (all + fixed) / 2
}

/// `(8 * C(k,4), 5 * sym(k))`: the eight asymmetric embeddings each take
/// every composition of `k+1` into five positive parts, the five symmetric
/// ones take them up to the swap.
pub fn nu_g2_decomposition(k: u64) -> (u64, u64) {
    if k < 4 {
        return (0, 0);
    }
    (8 * binomial(k, 4), 5 * symmetric_five_tuples(k - 4))
}

/// Named closed-form family, used by the command-line front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G0h0,
    G0h1,
    G0h2,
    G1h2,
    G1h3,
    G2h4,
}
