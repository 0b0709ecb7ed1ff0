//! Closed-form critical synergy factors for graph families whose symmetry
//! collapses the coalescence system to a handful of pair types.
//!
//! Polynomials are stored as integer coefficients and evaluated in exact
//! rational arithmetic, so a transcription slip shows up as an exact mismatch
//! against the generic engine rather than hiding in floating-point noise.
//! Every finite-size form has a companion `*_limit` giving its value as the
//! family grows without bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::theory::{PayoffScheme, UpdateRule};

/// Whether an oracle value is an exact finite-size result or a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    /// Exact for the requested family instance.
    FiniteSize,
    /// Asymptotic value only (no finite-size form is provided).
    Limit,
}

/// An exact oracle value.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// The threshold as an exact rational.
    pub value: BigRational,
    /// Domain of validity.
    pub validity: Validity,
}

impl OracleResult {
    fn finite(value: BigRational) -> Self {
        OracleResult { value, validity: Validity::FiniteSize }
    }

    fn limit(value: BigRational) -> Self {
        OracleResult { value, validity: Validity::Limit }
    }

    /// Nearest `f64`.
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Horner evaluation; coefficients run from the highest power down.
fn poly(coeffs: &[i64], x: &BigInt) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * x + c)
}

/// Bivariate polynomial given as `(coefficient, power of m, power of n)` terms.
fn poly2(terms: &[(i64, u32, u32)], m: &BigInt, n: &BigInt) -> BigInt {
    terms
        .iter()
        .map(|&(c, pm, pn)| {
            BigInt::from(c) * num_traits::pow(m.clone(), pm as usize) * num_traits::pow(n.clone(), pn as usize)
        })
        .sum()
}

fn quotient(num: BigInt, den: BigInt, what: &str) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::DomainError(format!("{what}: denominator vanishes")));
    }
    Ok(BigRational::new(num, den))
}

/// Regular graphs with `n_nodes` nodes and group size `g = k + 1`.
///
/// `p3` is the three-step return probability of the random walk. Pairwise
/// comparison and birth–death give `(N−1)G/(N−G)`; death–birth gives
/// `(N−2)G² / (N(G−1)²p3 + N(G+2) − 2G²)`, which equals the clustering form
/// `(N−2)G² / (N(G−2)C + N(G+2) − 2G²)` with `C = k²p3/(k−1)`. Both payoff
/// schemes coincide on regular graphs.
pub fn regular_r(
    n_nodes: u64,
    g: u64,
    p3: &BigRational,
    rule: UpdateRule,
    _scheme: PayoffScheme,
) -> Result<OracleResult> {
    if g < 3 {
        return Err(Error::DomainError(format!("group size G = {g} must be at least 3")));
    }
    if n_nodes <= g {
        return Err(Error::DomainError(format!("need N > G, got N = {n_nodes}, G = {g}")));
    }
    let n = BigRational::from_integer(big(n_nodes));
    let g = BigRational::from_integer(big(g));
    let one = BigRational::from_integer(1.into());
    let two = BigRational::from_integer(2.into());
    let value = match rule {
        UpdateRule::Pc | UpdateRule::Bd => (&n - &one) * &g / (&n - &g),
        UpdateRule::Db => {
            let den = &n * (&g - &one) * (&g - &one) * p3 + &n * (&g + &two) - &two * &g * &g;
            if den.is_zero() {
                return Err(Error::DomainError("death-birth regular form: denominator vanishes".into()));
            }
            (&n - &two) * &g * &g / den
        }
    };
    Ok(OracleResult::finite(value))
}

/// Star with one hub and `n` leaves (`n ≥ 2`).
pub fn star_r(n: u64, rule: UpdateRule, scheme: PayoffScheme) -> Result<OracleResult> {
    if n < 2 {
        return Err(Error::DomainError(format!("star needs n >= 2 leaves, got {n}")));
    }
    let x = &big(n);
    let value = match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => {
            quotient(4 * poly(&[3, -1], x) * poly(&[1, 1], x), poly(&[3, -2, -1], x), "star")?
        }
        (UpdateRule::Db, _) => frac(4, 1),
        (UpdateRule::Bd, PayoffScheme::Averaged) => quotient(poly(&[4, 0, 4, 8], x), poly(&[1, -2, 5, -4], x), "star")?,
        (UpdateRule::Pc, PayoffScheme::Accumulated) => {
            quotient(poly(&[3, -1], x) * poly(&[1, 3], x), 2 * x * poly(&[1, -1], x), "star")?
        }
        (UpdateRule::Bd, PayoffScheme::Accumulated) => {
            quotient(2 * poly(&[1, 3], x) * poly(&[1, -1, 2], x), poly(&[1, -1, 3, -3], x), "star")?
        }
    };
    Ok(OracleResult::finite(value))
}

/// Large-`n` limit of [`star_r`].
pub fn star_limit(rule: UpdateRule, scheme: PayoffScheme) -> BigRational {
    match (rule, scheme) {
        (_, PayoffScheme::Averaged) | (UpdateRule::Db, _) => frac(4, 1),
        (UpdateRule::Pc, PayoffScheme::Accumulated) => frac(3, 2),
        (UpdateRule::Bd, PayoffScheme::Accumulated) => frac(2, 1),
    }
}

/// Two interconnected hubs, each with `n` private leaves (`n ≥ 1`).
pub fn hub2hub_r(n: u64, rule: UpdateRule, scheme: PayoffScheme) -> Result<OracleResult> {
    if n < 1 {
        return Err(Error::DomainError("hub-to-hub star needs n >= 1".into()));
    }
    let x = &big(n);
    let sq = |c: &[i64]| {
        let p = poly(c, x);
        &p * &p
    };
    let value = match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => {
            quotient(2 * sq(&[1, 2]) * poly(&[24, 50, 27, 5], x), x * poly(&[18, 79, 131, 98, 20], x), "hub-to-hub")?
        }
        (UpdateRule::Db, PayoffScheme::Averaged) => {
            quotient(4 * sq(&[1, 2]) * poly(&[10, 27, 22, 5], x), poly(&[22, 131, 287, 296, 148, 20], x), "hub-to-hub")?
        }
        (UpdateRule::Bd, PayoffScheme::Averaged) => quotient(
            2 * sq(&[1, 2]) * poly(&[4, 11, 26, 32, 30, 19, 5], x),
            x * poly(&[2, 9, 32, 69, 101, 107, 66, 20], x),
            "hub-to-hub",
        )?,
        (UpdateRule::Pc, PayoffScheme::Accumulated) => {
            quotient(poly(&[14, 111, 288, 303, 128, 20], x), x * poly(&[10, 43, 70, 49, 10], x), "hub-to-hub")?
        }
        (UpdateRule::Db, PayoffScheme::Accumulated) => {
            quotient(poly(&[4, 70, 260, 370, 216, 40], x), poly(&[4, 40, 115, 141, 74, 10], x), "hub-to-hub")?
        }
        (UpdateRule::Bd, PayoffScheme::Accumulated) => quotient(
            poly(&[2, 18, 66, 149, 231, 244, 191, 96, 20], x),
            x * poly(&[1, 5, 18, 39, 56, 56, 33, 10], x),
            "hub-to-hub",
        )?,
    };
    Ok(OracleResult::finite(value))
}

/// Large-`n` limit of [`hub2hub_r`].
pub fn hub2hub_limit(rule: UpdateRule, scheme: PayoffScheme) -> BigRational {
    match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => frac(8, 3),
        (UpdateRule::Db, PayoffScheme::Averaged) => frac(20, 11),
        (UpdateRule::Bd, PayoffScheme::Averaged) => frac(4, 1),
        (UpdateRule::Pc, PayoffScheme::Accumulated) => frac(7, 5),
        (UpdateRule::Db, PayoffScheme::Accumulated) => frac(1, 1),
        (UpdateRule::Bd, PayoffScheme::Accumulated) => frac(2, 1),
    }
}

// Common factor 2m² + 4mn − 2m + 2n² − n + 1 of the m-hub forms.
const MHUB_BASE: &[(i64, u32, u32)] = &[(2, 2, 0), (4, 1, 1), (-2, 1, 0), (2, 0, 2), (-1, 0, 1), (1, 0, 0)];

const MHUB_PC_AVG_NUM: &[(i64, u32, u32)] = &[
    (2, 4, 0),
    (11, 3, 1),
    (-6, 3, 0),
    (20, 2, 2),
    (-17, 2, 1),
    (7, 2, 0),
    (12, 1, 3),
    (-12, 1, 2),
    (3, 1, 1),
    (-4, 1, 0),
    (-6, 0, 2),
    (1, 0, 1),
    (1, 0, 0),
];
const MHUB_PC_AVG_DEN: &[(i64, u32, u32)] = &[
    (3, 5, 0),
    (18, 4, 1),
    (-5, 4, 0),
    (39, 3, 2),
    (-28, 3, 1),
    (6, 3, 0),
    (36, 2, 3),
    (-51, 2, 2),
    (19, 2, 1),
    (-19, 2, 0),
    (12, 1, 4),
    (-34, 1, 3),
    (16, 1, 2),
    (-28, 1, 1),
    (18, 1, 0),
    (-6, 0, 4),
    (3, 0, 3),
    (-9, 0, 2),
    (14, 0, 1),
    (-4, 0, 0),
];
const MHUB_DB_AVG_NUM_A: &[(i64, u32, u32)] =
    &[(2, 3, 0), (6, 2, 1), (-4, 2, 0), (6, 1, 2), (-7, 1, 1), (3, 1, 0), (2, 0, 3), (-3, 0, 2), (2, 0, 1), (-1, 0, 0)];
const MHUB_DB_AVG_NUM_B: &[(i64, u32, u32)] = &[
    (2, 4, 0),
    (11, 3, 1),
    (-8, 3, 0),
    (20, 2, 2),
    (-25, 2, 1),
    (11, 2, 0),
    (12, 1, 3),
    (-22, 1, 2),
    (12, 1, 1),
    (-7, 1, 0),
    (-4, 0, 3),
    (-2, 0, 2),
    (-2, 0, 1),
    (2, 0, 0),
];
const MHUB_DB_AVG_DEN: &[(i64, u32, u32)] = &[
    (9, 6, 0),
    (63, 5, 1),
    (-30, 5, 0),
    (171, 4, 2),
    (-185, 4, 1),
    (54, 4, 0),
    (225, 3, 3),
    (-414, 3, 2),
    (246, 3, 1),
    (-99, 3, 0),
    (144, 2, 4),
    (-413, 2, 3),
    (384, 2, 2),
    (-256, 2, 1),
    (114, 2, 0),
    (36, 1, 5),
    (-182, 1, 4),
    (242, 1, 3),
    (-215, 1, 2),
    (168, 1, 1),
    (-56, 1, 0),
    (-28, 0, 5),
    (50, 0, 4),
    (-58, 0, 3),
    (62, 0, 2),
    (-40, 0, 1),
    (8, 0, 0),
];
const MHUB_PC_ACC_NUM_A: &[(i64, u32, u32)] =
    &[(2, 3, 0), (6, 2, 1), (-2, 2, 0), (6, 1, 2), (-3, 1, 1), (1, 1, 0), (2, 0, 3), (-1, 0, 2), (1, 0, 1)];
const MHUB_PC_ACC_NUM_B: &[(i64, u32, u32)] = &[
    (2, 5, 0),
    (12, 4, 1),
    (-6, 4, 0),
    (26, 3, 2),
    (-22, 3, 1),
    (7, 3, 0),
    (24, 2, 3),
    (-24, 2, 2),
    (16, 2, 1),
    (-4, 2, 0),
    (8, 1, 4),
    (-8, 1, 3),
    (10, 1, 2),
    (-12, 1, 1),
    (1, 1, 0),
    (-2, 0, 4),
    (3, 0, 3),
    (-10, 0, 2),
    (3, 0, 1),
];
const MHUB_PC_ACC_DEN: &[(i64, u32, u32)] = &[
    (3, 5, 0),
    (18, 4, 1),
    (-2, 4, 0),
    (39, 3, 2),
    (-17, 3, 1),
    (-8, 3, 0),
    (36, 2, 3),
    (-37, 2, 2),
    (-18, 2, 1),
    (1, 2, 0),
    (12, 1, 4),
    (-26, 1, 3),
    (-14, 1, 2),
    (5, 1, 1),
    (10, 1, 0),
    (-4, 0, 4),
    (-6, 0, 3),
    (4, 0, 2),
    (8, 0, 1),
    (-4, 0, 0),
];
const MHUB_DB_ACC_NUM_A: &[(i64, u32, u32)] = &[
    (2, 4, 0),
    (8, 3, 1),
    (-4, 3, 0),
    (12, 2, 2),
    (-11, 2, 1),
    (3, 2, 0),
    (8, 1, 3),
    (-10, 1, 2),
    (5, 1, 1),
    (-1, 1, 0),
    (2, 0, 4),
    (-3, 0, 3),
    (2, 0, 2),
    (-1, 0, 1),
];
const MHUB_DB_ACC_NUM_B: &[(i64, u32, u32)] = &[
    (2, 5, 0),
    (11, 4, 1),
    (-8, 4, 0),
    (21, 3, 2),
    (-27, 3, 1),
    (11, 3, 0),
    (16, 2, 3),
    (-25, 2, 2),
    (23, 2, 1),
    (-7, 2, 0),
    (4, 1, 4),
    (-6, 1, 3),
    (14, 1, 2),
    (-17, 1, 1),
    (2, 1, 0),
    (-4, 0, 4),
    (6, 0, 3),
    (-18, 0, 2),
    (2, 0, 1),
];
const MHUB_DB_ACC_DEN: &[(i64, u32, u32)] = &[
    (3, 6, 0),
    (20, 5, 1),
    (-4, 5, 0),
    (51, 4, 2),
    (-33, 4, 1),
    (-5, 4, 0),
    (62, 3, 3),
    (-81, 3, 2),
    (7, 3, 1),
    (-3, 3, 0),
    (36, 2, 4),
    (-80, 2, 3),
    (38, 2, 2),
    (-15, 2, 1),
    (23, 2, 0),
    (8, 1, 5),
    (-36, 1, 4),
    (32, 1, 3),
    (-22, 1, 2),
    (23, 1, 1),
    (-18, 1, 0),
    (-8, 0, 5),
    (8, 0, 4),
    (-10, 0, 3),
    (6, 0, 2),
    (-6, 0, 1),
    (4, 0, 0),
];

/// `m ≥ 2` fully interconnected hubs, each with `n ≥ 1` private leaves.
///
/// Pairwise comparison and death–birth are exact for every size; birth–death
/// is returned as its large-`n` limit only.
pub fn mhub_r(m: u64, n: u64, rule: UpdateRule, scheme: PayoffScheme) -> Result<OracleResult> {
    if m < 2 || n < 1 {
        return Err(Error::DomainError(format!("m-hub star needs m >= 2, n >= 1; got m = {m}, n = {n}")));
    }
    let (bm, bn) = (&big(m), &big(n));
    let p = |terms: &[(i64, u32, u32)]| poly2(terms, bm, bn);
    let mn = bm + bn;
    let mn2 = &mn * &mn;
    let value = match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => {
            quotient(2 * &mn2 * p(MHUB_PC_AVG_NUM), bn * p(MHUB_PC_AVG_DEN), "m-hub")?
        }
        (UpdateRule::Db, PayoffScheme::Averaged) => quotient(
            4 * &mn2 * p(MHUB_DB_AVG_NUM_A) * p(MHUB_DB_AVG_NUM_B),
            bn * p(MHUB_BASE) * p(MHUB_DB_AVG_DEN),
            "m-hub",
        )?,
        (UpdateRule::Pc, PayoffScheme::Accumulated) => {
            quotient(2 * p(MHUB_PC_ACC_NUM_A) * p(MHUB_PC_ACC_NUM_B), bn * p(MHUB_BASE) * p(MHUB_PC_ACC_DEN), "m-hub")?
        }
        (UpdateRule::Db, PayoffScheme::Accumulated) => {
            quotient(2 * p(MHUB_DB_ACC_NUM_A) * p(MHUB_DB_ACC_NUM_B), bn * p(MHUB_BASE) * p(MHUB_DB_ACC_DEN), "m-hub")?
        }
        (UpdateRule::Bd, _) => return Ok(OracleResult::limit(mhub_limit(m, rule, scheme)?)),
    };
    Ok(OracleResult::finite(value))
}

/// Large-`n` limit of [`mhub_r`] for a fixed hub count `m ≥ 2`.
pub fn mhub_limit(m: u64, rule: UpdateRule, scheme: PayoffScheme) -> Result<BigRational> {
    if m < 2 {
        return Err(Error::DomainError(format!("m-hub star needs m >= 2, got {m}")));
    }
    let m = m as i64;
    Ok(match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => frac(4 * m, 2 * m - 1),
        (UpdateRule::Db, PayoffScheme::Averaged) => frac(12 * m - 4, 9 * m - 7),
        (UpdateRule::Pc, PayoffScheme::Accumulated) => frac(4 * m - 1, 3 * m - 1),
        (UpdateRule::Db, PayoffScheme::Accumulated) => frac(1, 1),
        (UpdateRule::Bd, PayoffScheme::Averaged) => frac(4, 1),
        (UpdateRule::Bd, PayoffScheme::Accumulated) => frac(2, 1),
    })
}

/// Hub joined to `n ≥ 2` pairs of mutually linked leaves.
pub fn ceiling_fan_r(n: u64, rule: UpdateRule, scheme: PayoffScheme) -> Result<OracleResult> {
    if n < 2 {
        return Err(Error::DomainError(format!("ceiling fan needs n >= 2 fans, got {n}")));
    }
    let x = &big(n);
    let front = || {
        let p = poly(&[2, 1], x);
        9 * &p * &p
    };
    let value = match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => {
            quotient(front() * poly(&[7, -2], x), 2 * poly(&[24, -7, -13, -4], x), "ceiling fan")?
        }
        (UpdateRule::Db, PayoffScheme::Averaged) => {
            quotient(front() * poly(&[12, -7], x), 2 * poly(&[64, -7, -43, -14], x), "ceiling fan")?
        }
        (UpdateRule::Bd, PayoffScheme::Averaged) => {
            quotient(front() * poly(&[6, 0, 5, 4], x), 2 * poly(&[20, 0, 16, 10, -33, -13], x), "ceiling fan")?
        }
        (UpdateRule::Pc, PayoffScheme::Accumulated) => {
            quotient(poly(&[16, 41, -12], x), 2 * poly(&[4, -3, -1], x), "ceiling fan")?
        }
        (UpdateRule::Db, PayoffScheme::Accumulated) => {
            quotient(poly(&[16, 86, -57], x), 2 * poly(&[4, 7, -11], x), "ceiling fan")?
        }
        (UpdateRule::Bd, PayoffScheme::Accumulated) => {
            quotient(3 * poly(&[4, 14, 2, 17, 8], x), 2 * poly(&[2, 2, 1, -1, -4], x), "ceiling fan")?
        }
    };
    Ok(OracleResult::finite(value))
}

/// Large-`n` limit of [`ceiling_fan_r`].
pub fn ceiling_fan_limit(rule: UpdateRule, scheme: PayoffScheme) -> BigRational {
    match (rule, scheme) {
        (UpdateRule::Pc, PayoffScheme::Averaged) => frac(21, 4),
        (UpdateRule::Db, PayoffScheme::Averaged) => frac(27, 8),
        (UpdateRule::Bd, PayoffScheme::Averaged) => frac(27, 5),
        (UpdateRule::Pc, PayoffScheme::Accumulated) | (UpdateRule::Db, PayoffScheme::Accumulated) => frac(2, 1),
        (UpdateRule::Bd, PayoffScheme::Accumulated) => frac(3, 1),
    }
}
