//! Exact evaluation of the length, diameter, and dimension bounds this crate
//! is built around, with every comparison done in arbitrary-precision
//! integers or rationals — no floating point anywhere.
//!
//! The centerpiece is the anti-Griesmer length bound: a linear code whose
//! dual distance is at least 2 (equivalently, whose generator matrix has no
//! zero column) satisfies
//!
//! ```text
//! n <= sum_{i=0}^{k-1} floor(delta / q^i)
//! ```
//!
//! where `delta` is the diameter, the maximum codeword weight. Around it sit
//! the classical Griesmer lower bound (the two form a sandwich on `n`), a
//! family of diameter lower bounds, length and dimension consequences of the
//! anti-Griesmer inequality, the Erdős–Kleitman anticode size bound, and the
//! code–anticode product bound.
//!
//! Every evaluation is wrapped in a [`BoundReport`] that states the exact
//! comparison, whether it holds, whether it is tight, and whether the
//! theorem's hypotheses were actually verified — a bound whose hypotheses
//! fail is reported as such rather than silently skipped or asserted.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::codes::{CodeError, CodeMetrics, LinearCode};
use crate::gf;

/// Report names, one constant per bound.
pub const GRIESMER_LENGTH: &str = "griesmer_length";
pub const ANTI_GRIESMER_LENGTH: &str = "anti_griesmer_length";
pub const DIAMETER_LOWER: &str = "diameter_lower";
pub const DIAMETER_LOWER_FRACTIONAL: &str = "diameter_lower_fractional";
pub const DIAMETER_LOWER_BINARY: &str = "diameter_lower_binary";
pub const SMALL_DIAMETER_FULL_SUPPORT: &str = "small_diameter_full_support";
pub const SMALL_DIAMETER_LENGTH_CAP: &str = "small_diameter_length_cap";
pub const LENGTH_UPPER: &str = "length_upper";
pub const DIMENSION_LOWER: &str = "dimension_lower";
pub const LENGTH_WITH_MIN_WEIGHT: &str = "length_with_min_weight";
pub const LENGTH_WITH_KNOWN_WEIGHT: &str = "length_with_known_weight";
pub const ERDOS_KLEITMAN_SIZE: &str = "erdos_kleitman_size";
pub const CODE_ANTICODE_PRODUCT: &str = "code_anticode_product";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("q = {q} is not a prime power")]
    NotAPrimePower { q: u64 },
    #[error("need 1 <= k <= n, got k={k}, n={n}")]
    DimensionOutOfRange { k: u64, n: u64 },
    #[error("need 1 <= delta <= n, got delta={delta}, n={n}")]
    DiameterOutOfRange { delta: u64, n: u64 },
    #[error("need 1 <= d <= delta, got d={d}, delta={delta}")]
    DistanceOutOfRange { d: u64, delta: u64 },
    #[error("need 1 <= w <= n, got w={w}, n={n}")]
    WeightOutOfRange { w: u64, n: u64 },
    #[error(
        "dimension bound undefined: need delta*q > n*(q-1), got delta={delta}, n={n}, q={q}"
    )]
    DimensionBoundUndefined { n: u64, q: u64, delta: u64 },
}

/// An exact number: an arbitrary-precision integer or rational.
///
/// Rationals are normalized on construction — a ratio with denominator 1
/// becomes an `Int` — so equality is structural.
#[derive(Clone, PartialEq, Eq)]
pub enum Exact {
    Int(BigInt),
    Ratio(BigRational),
}

impl Exact {
    pub fn int(v: impl Into<BigInt>) -> Exact {
        Exact::Int(v.into())
    }

    /// `numer / denom`, normalized. Panics on a zero denominator.
    pub fn ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Exact {
        Exact::from_rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(r: BigRational) -> Exact {
        if r.is_integer() {
            Exact::Int(r.to_integer())
        } else {
            Exact::Ratio(r)
        }
    }

    pub fn as_rational(&self) -> BigRational {
        match self {
            Exact::Int(i) => BigRational::from_integer(i.clone()),
            Exact::Ratio(r) => r.clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Exact::Int(_))
    }

    pub fn ceil(&self) -> BigInt {
        match self {
            Exact::Int(i) => i.clone(),
            Exact::Ratio(r) => r.ceil().to_integer(),
        }
    }

    pub fn floor(&self) -> BigInt {
        match self {
            Exact::Int(i) => i.clone(),
            Exact::Ratio(r) => r.floor().to_integer(),
        }
    }
}

impl From<u64> for Exact {
    fn from(v: u64) -> Exact {
        Exact::Int(BigInt::from(v))
    }
}

impl From<BigInt> for Exact {
    fn from(v: BigInt) -> Exact {
        Exact::Int(v)
    }
}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exact::Int(a), Exact::Int(b)) => a.cmp(b),
            _ => self.as_rational().cmp(&other.as_rational()),
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Int(i) => write!(f, "{i}"),
            Exact::Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One evaluated bound: the exact comparison `lhs <= rhs`, its verdict, and
/// the status of the theorem's hypotheses.
///
/// `holds` states whether the bound's claim is satisfied; for the
/// implication-style bounds a failed antecedent makes the claim vacuously
/// true, which the notes spell out. `tight` means the comparison was actually
/// asserted and `lhs = rhs`. `hypotheses_met` records whether the theorem's
/// preconditions were verified (or assumed, for parameter-only input) — when
/// false, `lhs` and `rhs` are still reported but the bound is not asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub lhs: Exact,
    pub rhs: Exact,
    pub holds: bool,
    pub tight: bool,
    pub hypotheses_met: bool,
    pub notes: String,
}

impl BoundReport {
    fn comparison(
        name: &str,
        lhs: Exact,
        rhs: Exact,
        hypotheses_met: bool,
        notes: impl Into<String>,
    ) -> BoundReport {
        let holds = lhs <= rhs;
        let tight = lhs == rhs;
        BoundReport { name: name.to_string(), lhs, rhs, holds, tight, hypotheses_met, notes: notes.into() }
    }

    fn vacuous(
        name: &str,
        lhs: Exact,
        rhs: Exact,
        hypotheses_met: bool,
        notes: impl Into<String>,
    ) -> BoundReport {
        BoundReport {
            name: name.to_string(),
            lhs,
            rhs,
            holds: true,
            tight: false,
            hypotheses_met,
            notes: notes.into(),
        }
    }
}

/// Code parameters for bound evaluation without a generator matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamTuple {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub delta: u64,
    pub d: Option<u64>,
    pub w: Option<u64>,
}

impl ParamTuple {
    pub fn validate(&self) -> Result<(), BoundError> {
        if gf::prime_power(self.q).is_err() {
            return Err(BoundError::NotAPrimePower { q: self.q });
        }
        if self.k == 0 || self.k > self.n {
            return Err(BoundError::DimensionOutOfRange { k: self.k, n: self.n });
        }
        if self.delta == 0 || self.delta > self.n {
            return Err(BoundError::DiameterOutOfRange { delta: self.delta, n: self.n });
        }
        if let Some(d) = self.d {
            if d == 0 || d > self.delta {
                return Err(BoundError::DistanceOutOfRange { d, delta: self.delta });
            }
        }
        if let Some(w) = self.w {
            if w == 0 || w > self.n {
                return Err(BoundError::WeightOutOfRange { w, n: self.n });
            }
        }
        Ok(())
    }
}

/// `sum_{i=0}^{k-1} floor(delta / q^i)` — the anti-Griesmer right-hand side.
pub fn anti_griesmer_rhs(q: u64, k: u64, delta: u64) -> BigInt {
    let mut sum: u128 = 0;
    let mut power: u128 = 1;
    let delta = delta as u128;
    for _ in 0..k {
        if power > delta {
            break; // all remaining terms floor to zero
        }
        sum += delta / power;
        power = power.saturating_mul(q as u128);
    }
    BigInt::from(sum)
}

/// `sum_{i=0}^{k-1} ceil(d / q^i)` — the Griesmer lower bound on length.
pub fn griesmer_lhs(q: u64, k: u64, d: u64) -> BigInt {
    let mut sum: u128 = 0;
    let mut remaining = k;
    let mut power: u128 = 1;
    let d = d as u128;
    while remaining > 0 {
        if power >= d {
            // Every remaining term is ceil of something in (0, 1].
            sum += remaining as u128;
            break;
        }
        sum += d.div_ceil(power);
        power = power.saturating_mul(q as u128);
        remaining -= 1;
    }
    BigInt::from(sum)
}

/// `ceil(n * q^{k-1} * (q-1) / (q^k - 1))` — the diameter lower bound that
/// holds for any `[n, k]` code whose generator has no zero column.
pub fn diameter_lower_bound(n: u64, k: u64, q: u64) -> BigInt {
    assert!(k >= 1 && q >= 2);
    let qk1 = num::pow::pow(BigInt::from(q), (k - 1) as usize);
    let numer = BigInt::from(n) * &qk1 * BigInt::from(q - 1);
    let denom = qk1 * BigInt::from(q) - BigInt::one();
    ceil_div(&numer, &denom)
}

/// The older fractional diameter bound `n (q-1) / q`, kept exact.
pub fn old_diameter_bound(n: u64, q: u64) -> Exact {
    Exact::ratio(BigInt::from(n) * BigInt::from(q - 1), BigInt::from(q))
}

/// Farrell's bound for binary projective codes: `delta >= 2^{k-1} n / (2^k - 1)`,
/// kept exact. (This is the same rational as the general diameter lower
/// bound at q = 2, before the ceiling.)
pub fn farrell_bound(n: u64, k: u64) -> Exact {
    assert!(k >= 1);
    let p = num::pow::pow(BigInt::from(2), (k - 1) as usize);
    let numer = &p * BigInt::from(n);
    let denom = p * BigInt::from(2) - BigInt::one();
    Exact::ratio(numer, denom)
}

/// Length cap from the anti-Griesmer bound via the geometric series:
/// `q*delta/(q-1) - 1` when `(q-1) | delta`, else `floor(q*delta/(q-1))`.
pub fn length_upper_bound(q: u64, delta: u64) -> BigInt {
    assert!(q >= 2 && delta >= 1);
    let (q, delta) = (q as u128, delta as u128);
    let v = if delta % (q - 1) == 0 {
        q * delta / (q - 1) - 1
    } else {
        q * delta / (q - 1)
    };
    BigInt::from(v)
}

/// Least `k` with `q^k (delta*q - n(q-1)) >= delta*q` — the integer form of
/// the dimension bound `k >= log_q(delta / (delta - n(1 - 1/q)))`, evaluated
/// without logarithms so equality cases land exactly.
///
/// Undefined (error) when `delta*q <= n(q-1)`; the diameter lower bound rules
/// that out for genuine codes with no zero generator column.
pub fn dimension_lower_bound(n: u64, q: u64, delta: u64) -> Result<u64, BoundError> {
    let margin = BigInt::from(delta as u128 * q as u128) - BigInt::from(n as u128 * (q - 1) as u128);
    if !margin.is_positive() {
        return Err(BoundError::DimensionBoundUndefined { n, q, delta });
    }
    let target = BigInt::from(delta as u128 * q as u128);
    let mut k: u64 = 1;
    let mut power = BigInt::from(q);
    while &power * &margin < target {
        k += 1;
        power *= q;
    }
    Ok(k)
}

/// `w + sum_{i=0}^{k-2} floor(delta / q^i)`: the length bound available once
/// some codeword weight `w` is known (the residual-code argument). With
/// `w = d` this is the minimum-weight instance.
pub fn weighted_length_bound(q: u64, k: u64, delta: u64, w: u64) -> BigInt {
    assert!(k >= 1);
    BigInt::from(w) + anti_griesmer_rhs(q, k - 1, delta)
}

/// The ceiling-free companion of [`weighted_length_bound`]:
/// `w + q(1 - q^{-(k-1)}) delta / (q-1)`, exact. The termwise-floored form
/// never exceeds this.
pub fn weighted_length_bound_fractional(q: u64, k: u64, delta: u64, w: u64) -> Exact {
    assert!(k >= 1);
    let qk1 = num::pow::pow(BigInt::from(q), (k - 1) as usize);
    let numer = BigInt::from(q) * BigInt::from(delta) * (&qk1 - BigInt::one());
    let denom = qk1 * BigInt::from(q - 1);
    Exact::from_rational(
        BigRational::from_integer(BigInt::from(w)) + BigRational::new(numer, denom),
    )
}

/// `sum_{i=0}^{floor(delta/2)} C(n, i)` — the Erdős–Kleitman size bound for
/// binary anticodes of even diameter `delta < n`. The sum itself is defined
/// for any inputs; the report layer records when the theorem actually
/// applies.
pub fn erdos_kleitman_rhs(n: u64, delta: u64) -> BigInt {
    let mut sum = BigInt::one(); // C(n, 0)
    let mut binom = BigInt::one();
    let top = (delta / 2).min(n);
    for i in 1..=top {
        binom = binom * BigInt::from(n - i + 1) / BigInt::from(i);
        sum += &binom;
    }
    sum
}

/// The two nonexistence clauses for small diameters, given `d(dual) >= 2`:
/// a code with `delta < n` must have `delta >= q`, and one with `delta <= q`
/// must have `n <= q + 1`. A violated clause marks the parameters infeasible.
pub fn small_diameter_check(tuple: &ParamTuple) -> Result<Vec<BoundReport>, BoundError> {
    tuple.validate()?;
    let dual2 = Hypothesis::assumed();
    Ok(vec![
        small_diameter_full_support(tuple.q, tuple.n, tuple.delta, &dual2),
        small_diameter_length_cap(tuple.q, tuple.n, tuple.delta, &dual2),
    ])
}

fn small_diameter_full_support(q: u64, n: u64, delta: u64, dual2: &Hypothesis) -> BoundReport {
    if delta >= n {
        BoundReport::vacuous(
            SMALL_DIAMETER_FULL_SUPPORT,
            Exact::from(q),
            Exact::from(delta),
            dual2.met,
            format!("delta = n: some codeword has full support; clause is vacuous. {}", dual2.note),
        )
    } else {
        BoundReport::comparison(
            SMALL_DIAMETER_FULL_SUPPORT,
            Exact::from(q),
            Exact::from(delta),
            dual2.met,
            format!("delta < n forces delta >= q. {}", dual2.note),
        )
    }
}

fn small_diameter_length_cap(q: u64, n: u64, delta: u64, dual2: &Hypothesis) -> BoundReport {
    if delta > q {
        BoundReport::vacuous(
            SMALL_DIAMETER_LENGTH_CAP,
            Exact::from(n),
            Exact::from(q + 1),
            dual2.met,
            format!("delta > q; clause is vacuous. {}", dual2.note),
        )
    } else {
        BoundReport::comparison(
            SMALL_DIAMETER_LENGTH_CAP,
            Exact::from(n),
            Exact::from(q + 1),
            dual2.met,
            format!("delta <= q forces n <= q + 1. {}", dual2.note),
        )
    }
}

/// The code–anticode product bound: when `d(code) >= diameter(anticode) + 1`
/// and both live in the same space, `|code| * |anticode| <= q^n`.
pub fn code_anticode_check(code: &CodeMetrics, anticode: &CodeMetrics, q: u64) -> BoundReport {
    let mut met = true;
    let mut notes = Vec::new();
    if code.n != anticode.n {
        met = false;
        notes.push(format!("length mismatch: {} vs {}", code.n, anticode.n));
    }
    if code.min_distance < anticode.diameter + 1 {
        met = false;
        notes.push(format!(
            "needs d(code) >= diameter(anticode) + 1, got {} < {}",
            code.min_distance,
            anticode.diameter + 1
        ));
    }
    if notes.is_empty() {
        notes.push("d(code) exceeds the anticode diameter; sizes verified".to_string());
    }
    let lhs = num::pow::pow(BigInt::from(q), (code.k + anticode.k) as usize);
    let rhs = num::pow::pow(BigInt::from(q), code.n as usize);
    BoundReport::comparison(
        CODE_ANTICODE_PRODUCT,
        Exact::Int(lhs),
        Exact::Int(rhs),
        met,
        notes.join("; "),
    )
}

/// Status of a theorem precondition: whether it is satisfied and how we know.
struct Hypothesis {
    met: bool,
    note: String,
}

impl Hypothesis {
    fn verified(met: bool, what: &str, detail: String) -> Hypothesis {
        let note = if met {
            format!("hypothesis {what} verified")
        } else {
            format!("hypothesis {what} VIOLATED: {detail}; bound not asserted")
        };
        Hypothesis { met, note }
    }

    fn assumed() -> Hypothesis {
        Hypothesis { met: true, note: "hypothesis d(dual) >= 2 assumed for parameter input".into() }
    }

    fn unknown(what: &str) -> Hypothesis {
        Hypothesis {
            met: false,
            note: format!("hypothesis {what} not verifiable from parameters alone; bound not asserted"),
        }
    }
}

/// Evaluates every applicable bound against a concrete code, enumerating its
/// metrics (or falling back to structural facts when enumeration is over
/// `limit`). Hypotheses are verified on the generator matrix itself.
pub fn verify_all(code: &LinearCode, limit: u64) -> Result<Vec<BoundReport>, CodeError> {
    let m = code.metrics(limit)?;
    let q = code.field().order();
    let dual2 = match code.zero_column() {
        None => Hypothesis::verified(true, "d(dual) >= 2", String::new()),
        Some(i) => {
            Hypothesis::verified(false, "d(dual) >= 2", format!("generator column {i} is zero"))
        }
    };
    let projective = code.dual_distance_at_least(3)?;
    let dual3 = Hypothesis::verified(
        projective,
        "d(dual) >= 3",
        "two generator columns are dependent".to_string(),
    );
    Ok(build_reports(
        q,
        m.n,
        m.k,
        m.diameter,
        Some(m.min_distance),
        None,
        &dual2,
        &dual3,
    ))
}

/// Evaluates the same battery as [`verify_all`] from bare parameters. The
/// `d(dual) >= 2` hypothesis is taken on trust (and so marked); projectivity
/// cannot be checked from parameters, so the binary projective bound is
/// reported as unverified.
pub fn evaluate_param_tuple(tuple: &ParamTuple) -> Result<Vec<BoundReport>, BoundError> {
    tuple.validate()?;
    let dual2 = Hypothesis::assumed();
    let dual3 = Hypothesis::unknown("d(dual) >= 3");
    Ok(build_reports(tuple.q, tuple.n, tuple.k, tuple.delta, tuple.d, tuple.w, &dual2, &dual3))
}

#[allow(clippy::too_many_arguments)]
fn build_reports(
    q: u64,
    n: u64,
    k: u64,
    delta: u64,
    d: Option<u64>,
    w: Option<u64>,
    dual2: &Hypothesis,
    dual3: &Hypothesis,
) -> Vec<BoundReport> {
    let mut reports = Vec::new();

    if let Some(d) = d {
        reports.push(BoundReport::comparison(
            GRIESMER_LENGTH,
            Exact::Int(griesmer_lhs(q, k, d)),
            Exact::from(n),
            true,
            "holds for every linear code",
        ));
    }

    reports.push(BoundReport::comparison(
        ANTI_GRIESMER_LENGTH,
        Exact::from(n),
        Exact::Int(anti_griesmer_rhs(q, k, delta)),
        dual2.met,
        dual2.note.clone(),
    ));

    reports.push(BoundReport::comparison(
        DIAMETER_LOWER,
        Exact::Int(diameter_lower_bound(n, k, q)),
        Exact::from(delta),
        dual2.met,
        dual2.note.clone(),
    ));

    reports.push(BoundReport::comparison(
        DIAMETER_LOWER_FRACTIONAL,
        old_diameter_bound(n, q),
        Exact::from(delta),
        dual2.met,
        format!("fractional form n(q-1)/q. {}", dual2.note),
    ));

    if q == 2 {
        reports.push(BoundReport::comparison(
            DIAMETER_LOWER_BINARY,
            farrell_bound(n, k),
            Exact::from(delta),
            dual3.met,
            format!("binary projective codes only. {}", dual3.note),
        ));
    }

    reports.push(small_diameter_full_support(q, n, delta, dual2));
    reports.push(small_diameter_length_cap(q, n, delta, dual2));

    reports.push(BoundReport::comparison(
        LENGTH_UPPER,
        Exact::from(n),
        Exact::Int(length_upper_bound(q, delta)),
        dual2.met,
        dual2.note.clone(),
    ));

    match dimension_lower_bound(n, q, delta) {
        Ok(kmin) => reports.push(BoundReport::comparison(
            DIMENSION_LOWER,
            Exact::from(kmin),
            Exact::from(k),
            dual2.met,
            dual2.note.clone(),
        )),
        Err(_) => reports.push(BoundReport::vacuous(
            DIMENSION_LOWER,
            Exact::from(0u64),
            Exact::from(k),
            false,
            format!(
                "undefined here: delta*q <= n*(q-1); for a code with no zero generator \
                 column the diameter bound makes this impossible. {}",
                dual2.note
            ),
        )),
    }

    if let Some(d) = d {
        reports.push(BoundReport::comparison(
            LENGTH_WITH_MIN_WEIGHT,
            Exact::from(n),
            Exact::Int(weighted_length_bound(q, k, delta, d)),
            dual2.met,
            format!(
                "w = d = {d}; ceiling-free form gives {}. {}",
                weighted_length_bound_fractional(q, k, delta, d),
                dual2.note
            ),
        ));
    }

    if let Some(w) = w {
        reports.push(BoundReport::comparison(
            LENGTH_WITH_KNOWN_WEIGHT,
            Exact::from(n),
            Exact::Int(weighted_length_bound(q, k, delta, w)),
            dual2.met,
            format!(
                "known weight w = {w}; ceiling-free form gives {}. {}",
                weighted_length_bound_fractional(q, k, delta, w),
                dual2.note
            ),
        ));
    }

    if q == 2 {
        let applicable = delta % 2 == 0 && delta < n;
        let note = if applicable {
            "delta even and below n; anticode size bound applies".to_string()
        } else {
            format!(
                "requires even delta strictly below n (got delta={delta}, n={n}); bound not asserted"
            )
        };
        reports.push(BoundReport::comparison(
            ERDOS_KLEITMAN_SIZE,
            Exact::Int(num::pow::pow(BigInt::from(2), k as usize)),
            Exact::Int(erdos_kleitman_rhs(n, delta)),
            applicable,
            note,
        ));
    }

    reports
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive() && !a.is_negative());
    (a + b - BigInt::one()) / b
}
