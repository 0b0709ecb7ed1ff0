//! The weak-selection engine: coalescence-time tables, the Υ pairing and
//! the critical thresholds r* (public goods game) and (b/c)* (donation game).
//!
//! Every threshold has the shape `Σ W_ij τ_ij / Σ W_ij D_ij`, where `W` is a
//! rule- and scheme-specific symmetric pair weight and `D` is either the Υ
//! table (public goods) or the one-step payoff gradient
//! `Σ_l p_il (τ_jl − τ_il)` (donation game). The assembly is generic over the
//! scalar type so the same code runs in `f64` and in exact rationals.

mod critical;
mod exact;
mod scalar;
mod solve;
mod upsilon;

pub use critical::{
    critical_bc, critical_bc_exact, critical_r, critical_r_exact, critical_value, critical_value_exact,
    critical_values, critical_values_for, pair_weights, tau_weighted, threshold_parts, Condition,
};
pub use exact::{solve_tau_bd_exact, solve_tau_exact, MAX_EXACT_N};
pub use scalar::Scalar;
pub use solve::{
    max_defect, solve_tau, solve_tau_bd, solve_tau_bd_with, solve_tau_with, SolverConfig, SolverMethod, DENSE_MAX_N,
};
pub use upsilon::{upsilon_table, PayoffWeights};

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Strategy-revision rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UpdateRule {
    /// Pairwise comparison: imitate a random neighbour with a Fermi probability.
    Pc,
    /// Death–birth: a random node dies, neighbours compete for the slot.
    Db,
    /// Birth–death: a fitness-proportional parent replaces a random neighbour.
    Bd,
}

impl UpdateRule {
    /// All rules in canonical order.
    pub const ALL: [UpdateRule; 3] = [UpdateRule::Pc, UpdateRule::Db, UpdateRule::Bd];

    /// Short lowercase label used in files and flags.
    pub fn label(self) -> &'static str {
        match self {
            UpdateRule::Pc => "pc",
            UpdateRule::Db => "db",
            UpdateRule::Bd => "bd",
        }
    }
}

/// How an agent combines the payoffs of the games it takes part in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PayoffScheme {
    /// Payoff divided by the number of games played.
    Averaged,
    /// Raw sum over all games played.
    Accumulated,
}

impl PayoffScheme {
    /// Both schemes in canonical order.
    pub const ALL: [PayoffScheme; 2] = [PayoffScheme::Averaged, PayoffScheme::Accumulated];

    /// Short lowercase label used in files and flags.
    pub fn label(self) -> &'static str {
        match self {
            PayoffScheme::Averaged => "avg",
            PayoffScheme::Accumulated => "acc",
        }
    }
}

/// The social dilemma being played.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GameKind {
    /// Spatial public goods game; threshold is the synergy factor r*.
    Pgg,
    /// Pairwise donation game; threshold is the benefit-to-cost ratio (b/c)*.
    Dg,
}

impl GameKind {
    /// Both games in canonical order.
    pub const ALL: [GameKind; 2] = [GameKind::Pgg, GameKind::Dg];

    /// Short lowercase label used in files and flags.
    pub fn label(self) -> &'static str {
        match self {
            GameKind::Pgg => "pgg",
            GameKind::Dg => "dg",
        }
    }
}

macro_rules! label_enum {
    ($ty:ty, $what:literal, $( $($name:literal)|+ => $variant:expr ),+ $(,)?) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.label())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s.to_ascii_lowercase().as_str() {
                    $( $($name)|+ => Ok($variant), )+
                    other => Err(Error::InvalidParameter(format!(
                        concat!("unknown ", $what, " '{}'"),
                        other
                    ))),
                }
            }
        }
    };
}

label_enum!(UpdateRule, "update rule",
    "pc" => UpdateRule::Pc, "db" => UpdateRule::Db, "bd" => UpdateRule::Bd);
label_enum!(PayoffScheme, "payoff scheme",
    "avg" | "averaged" => PayoffScheme::Averaged,
    "acc" | "accumulated" => PayoffScheme::Accumulated);
label_enum!(GameKind, "game", "pgg" => GameKind::Pgg, "dg" => GameKind::Dg);

/// Which coalescence system a table solves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TauVariant {
    /// τ: shared by pairwise comparison and death–birth.
    Plain,
    /// τ̃: the birth–death system.
    BirthDeath,
}

impl TauVariant {
    /// The variant a given update rule consumes.
    pub fn for_rule(rule: UpdateRule) -> Self {
        match rule {
            UpdateRule::Pc | UpdateRule::Db => TauVariant::Plain,
            UpdateRule::Bd => TauVariant::BirthDeath,
        }
    }
}

/// Symmetric pair table with zero diagonal, stored densely row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalescenceTable<T = f64> {
    n: usize,
    variant: TauVariant,
    values: Vec<T>,
    residual: f64,
}

impl<T> CoalescenceTable<T> {
    pub(crate) fn from_parts(n: usize, variant: TauVariant, values: Vec<T>, residual: f64) -> Self {
        debug_assert_eq!(values.len(), n * n);
        CoalescenceTable { n, variant, values, residual }
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Which system the table solves.
    pub fn variant(&self) -> TauVariant {
        self.variant
    }

    /// Entry for the pair (i, j).
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.values[i * self.n + j]
    }

    /// Row-major view of all N² entries.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// Maximum defect of the defining equations (zero for exact tables).
    pub fn residual(&self) -> f64 {
        self.residual
    }
}

impl CoalescenceTable<f64> {
    /// Entry for the pair (i, j) by value.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.n + j]
    }

    /// Multiplies every entry by `factor` (used to check scale invariance).
    pub fn scaled(&self, factor: f64) -> Self {
        CoalescenceTable {
            n: self.n,
            variant: self.variant,
            values: self.values.iter().map(|v| v * factor).collect(),
            residual: self.residual * factor.abs(),
        }
    }
}

impl CoalescenceTable<BigRational> {
    /// Converts an exact table to floating point.
    pub fn to_f64(&self) -> CoalescenceTable<f64> {
        CoalescenceTable {
            n: self.n,
            variant: self.variant,
            values: self.values.iter().map(|v| v.to_f64().unwrap_or(f64::NAN)).collect(),
            residual: 0.0,
        }
    }
}

/// Classification band of a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    /// 0 < v ≤ 30: cooperation is favoured at realistic parameters.
    Supports,
    /// 30 < v ≤ 1000: favoured only under strict conditions.
    Strict,
    /// v ≤ 0, v > 1000 or infinite: effectively never favoured.
    Never,
}

impl Category {
    /// All categories in canonical order.
    pub const ALL: [Category; 3] = [Category::Supports, Category::Strict, Category::Never];

    /// Lowercase label used in files.
    pub fn label(self) -> &'static str {
        match self {
            Category::Supports => "supports",
            Category::Strict => "strict",
            Category::Never => "never",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "supports" => Ok(Category::Supports),
            "strict" => Ok(Category::Strict),
            "never" => Ok(Category::Never),
            other => Err(Error::InvalidParameter(format!("unknown category '{other}'"))),
        }
    }
}

/// Upper edge of the "supports" band.
pub const SUPPORT_LIMIT: i64 = 30;
/// Values above this are treated as infinite.
pub const INFINITY_PROXY: i64 = 1000;

/// Classifies a threshold value.
pub fn classify(value: f64) -> Category {
    if value.is_nan() || value <= 0.0 || value > INFINITY_PROXY as f64 {
        Category::Never
    } else if value <= SUPPORT_LIMIT as f64 {
        Category::Supports
    } else {
        Category::Strict
    }
}

/// Classifies an exact ratio `numerator / denominator` without rounding.
pub fn classify_exact(numerator: &BigRational, denominator: &BigRational) -> Category {
    if denominator.is_zero() {
        return Category::Never;
    }
    let value = numerator / denominator;
    if !value.is_positive() || value > BigRational::from_integer(INFINITY_PROXY.into()) {
        Category::Never
    } else if value <= BigRational::from_integer(SUPPORT_LIMIT.into()) {
        Category::Supports
    } else {
        Category::Strict
    }
}

/// A computed threshold together with its numerator, denominator and band.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalValue {
    /// Weighted τ sum.
    pub numerator: f64,
    /// Weighted Υ (or payoff-gradient) sum.
    pub denominator: f64,
    /// numerator / denominator, or a signed infinity when the denominator is zero.
    pub value: f64,
    /// Classification of `value`.
    pub category: Category,
    /// Exact value when computed in rational arithmetic.
    pub exact: Option<BigRational>,
}

impl CriticalValue {
    /// Builds a value from floating-point parts.
    pub fn from_parts(numerator: f64, denominator: f64) -> Self {
        let value = ratio_or_infinity(numerator, denominator);
        CriticalValue { numerator, denominator, value, category: classify(value), exact: None }
    }

    /// Builds a value from exact parts; the category is decided exactly.
    pub fn from_exact(numerator: &BigRational, denominator: &BigRational) -> Self {
        let category = classify_exact(numerator, denominator);
        let num = numerator.to_f64().unwrap_or(f64::NAN);
        let den = denominator.to_f64().unwrap_or(f64::NAN);
        let (value, exact) = if denominator.is_zero() {
            (ratio_or_infinity(num, 0.0), None)
        } else {
            let q = numerator / denominator;
            (q.to_f64().unwrap_or(f64::NAN), Some(q))
        };
        CriticalValue { numerator: num, denominator: den, value, category, exact }
    }
}

fn ratio_or_infinity(numerator: f64, denominator: f64) -> f64 {
    if denominator == 0.0 {
        if numerator >= 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    } else {
        numerator / denominator
    }
}
