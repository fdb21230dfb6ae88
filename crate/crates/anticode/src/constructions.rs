//! Standard code families with parameters known by construction: generalized
//! Reed–Solomon codes, their one-point extensions, simplex codes, and the
//! identity-pair codes `(I | I)`.
//!
//! Each constructor attaches `StructuralFacts` that the rest of the crate can
//! lean on when exhaustive enumeration is out of reach. The facts recorded
//! here are classical theorems, and `LinearCode::metrics` re-verifies them by
//! enumeration whenever the code is small enough, so a wrong fact cannot hide
//! in the feasible range.

use std::sync::Arc;

use thiserror::Error;

use crate::codes::{CodeError, LinearCode, StructuralFacts};
use crate::gf::{Field, FieldElement};
use crate::matrix::{projective_point_count, projective_points, MatrixGF};

/// Hard cap on generator-matrix size (`k * n` entries) for the constructors
/// that derive their length from field parameters.
pub const MAX_GENERATOR_ENTRIES: u64 = 1 << 26;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("need 1 <= k <= n, got k={k}, n={n}")]
    DimensionOutOfRange { k: usize, n: usize },
    #[error("evaluation points must be distinct")]
    RepeatedEvaluationPoint,
    #[error("expected {expected} column multipliers, got {found}")]
    MultiplierCount { expected: usize, found: usize },
    #[error("column multipliers must be nonzero")]
    ZeroMultiplier,
    #[error("length {n} needs {points} distinct evaluation points, but GF({q}) has only {q}")]
    NotEnoughPoints { n: usize, points: usize, q: u64 },
    #[error("simplex codes need dimension at least 2, got {k}")]
    SimplexDimension { k: usize },
    #[error("identity pair needs at least one block row")]
    EmptyPair,
    #[error("code length overflows a u64 for this field and dimension")]
    LengthOverflow,
    #[error("generator would need {entries} entries (cap {cap})")]
    TooLarge { entries: u128, cap: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Generalized Reed–Solomon code: codewords `(v_0 f(a_0), ..., v_{n-1}
/// f(a_{n-1}))` over all polynomials `f` of degree below `k`.
///
/// The evaluation points must be distinct and the multipliers nonzero. The
/// resulting `[n, k]` code is MDS with minimum distance `n - k + 1`; its
/// diameter is `n` (the constant polynomial 1 vanishes nowhere), and for
/// `k < n` the dual is again MDS with minimum distance `k + 1`.
pub fn grs(
    field: &Arc<Field>,
    k: usize,
    alphas: &[FieldElement],
    v: &[FieldElement],
) -> Result<LinearCode, ConstructionError> {
    let n = alphas.len();
    validate_grs_inputs(field, k, n, alphas, v)?;
    let mut g = MatrixGF::zeros(field.clone(), k, n);
    for (j, (&a, &vj)) in alphas.iter().zip(v).enumerate() {
        let mut power = field.one();
        for i in 0..k {
            g.set(i, j, field.mul(vj, power));
            power = field.mul(power, a);
        }
    }
    let facts = StructuralFacts {
        min_distance: (n - k + 1) as u64,
        diameter: n as u64,
        dual_distance: if k < n { Some(k as u64 + 1) } else { None },
    };
    Ok(LinearCode::with_facts(g, facts)?)
}

/// `grs` with the first `n` field elements in encoding order as evaluation
/// points and all multipliers 1.
pub fn grs_default(field: &Arc<Field>, n: usize, k: usize) -> Result<LinearCode, ConstructionError> {
    if n as u64 > field.order() {
        return Err(ConstructionError::NotEnoughPoints { n, points: n, q: field.order() });
    }
    let alphas: Vec<FieldElement> = field.elements().take(n).collect();
    let v = vec![field.one(); n];
    grs(field, k, &alphas, &v)
}

/// One-point extension of a GRS code: to the evaluation columns a final
/// coordinate `v_last * f_{k-1}` is appended, where `f_{k-1}` is the leading
/// coefficient slot of the message polynomial.
///
/// With `m` evaluation points the code has length `n = m + 1` and is MDS
/// (`d = n - k + 1`): a word from a nonzero `f` vanishes on at most
/// `deg f <= k - 1` points, plus the last coordinate only when
/// `deg f < k - 1`, never more than `k - 1` zeros in total.
///
/// The diameter is `n`, except in one case: full-weight words need an `f` of
/// degree exactly `k - 1` with no roots among the evaluation points, and when
/// `k = 2` and the points exhaust the field every degree-1 polynomial has its
/// root in play, so the diameter drops to `n - 1`. (For `k - 1 >= 2` products
/// of irreducible quadratics and cubics give rootless polynomials of every
/// degree, and for `k = 1` constants work.)
pub fn extended_grs(
    field: &Arc<Field>,
    k: usize,
    alphas: &[FieldElement],
    v: &[FieldElement],
) -> Result<LinearCode, ConstructionError> {
    let m = alphas.len();
    let n = m + 1;
    if v.len() != n {
        return Err(ConstructionError::MultiplierCount { expected: n, found: v.len() });
    }
    validate_grs_inputs(field, k, n, alphas, &v[..m])?;
    if v[m].is_zero() {
        return Err(ConstructionError::ZeroMultiplier);
    }
    let mut g = MatrixGF::zeros(field.clone(), k, n);
    for (j, (&a, &vj)) in alphas.iter().zip(v).enumerate() {
        let mut power = field.one();
        for i in 0..k {
            g.set(i, j, field.mul(vj, power));
            power = field.mul(power, a);
        }
    }
    g.set(k - 1, m, v[m]);
    let diameter = if k == 2 && m as u64 == field.order() { n - 1 } else { n };
    let facts = StructuralFacts {
        min_distance: (n - k + 1) as u64,
        diameter: diameter as u64,
        dual_distance: if k < n { Some(k as u64 + 1) } else { None },
    };
    Ok(LinearCode::with_facts(g, facts)?)
}

/// `extended_grs` over the first `n - 1` field elements with all multipliers
/// 1, producing a code of total length `n`.
pub fn extended_grs_default(
    field: &Arc<Field>,
    n: usize,
    k: usize,
) -> Result<LinearCode, ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::DimensionOutOfRange { k, n });
    }
    if (n - 1) as u64 > field.order() {
        return Err(ConstructionError::NotEnoughPoints { n, points: n - 1, q: field.order() });
    }
    let alphas: Vec<FieldElement> = field.elements().take(n - 1).collect();
    let v = vec![field.one(); n];
    extended_grs(field, k, &alphas, &v)
}

fn validate_grs_inputs(
    field: &Arc<Field>,
    k: usize,
    n: usize,
    alphas: &[FieldElement],
    v: &[FieldElement],
) -> Result<(), ConstructionError> {
    if k == 0 || k > n {
        return Err(ConstructionError::DimensionOutOfRange { k, n });
    }
    if v.len() != alphas.len() {
        return Err(ConstructionError::MultiplierCount { expected: alphas.len(), found: v.len() });
    }
    let mut seen: Vec<u64> = alphas.iter().map(|a| a.encoding()).collect();
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructionError::RepeatedEvaluationPoint);
    }
    if let Some(&hi) = seen.last() {
        if hi >= field.order() {
            // A foreign element slipped in; reuse the field's own validation.
            field.element(hi).map_err(CodeError::from)?;
        }
    }
    if v.iter().any(|e| e.is_zero()) {
        return Err(ConstructionError::ZeroMultiplier);
    }
    Ok(())
}

/// Simplex code of dimension `k >= 2`: one generator column per point of the
/// projective space PG(k-1, q), so `n = (q^k - 1)/(q - 1)`.
///
/// Every nonzero codeword `xG` is the incidence vector of the complement of
/// the hyperplane `x^perp` and has weight exactly `q^{k-1}`, so minimum
/// distance and diameter coincide. The dual (a Hamming code) has minimum
/// distance 3: columns are pairwise independent, while `e_1, e_2, e_1 + e_2`
/// are three dependent points.
pub fn simplex(field: &Arc<Field>, k: usize) -> Result<LinearCode, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::SimplexDimension { k });
    }
    let q = field.order();
    let n = projective_point_count(q, k).ok_or(ConstructionError::LengthOverflow)?;
    let entries = n as u128 * k as u128;
    if entries > MAX_GENERATOR_ENTRIES as u128 {
        return Err(ConstructionError::TooLarge { entries, cap: MAX_GENERATOR_ENTRIES });
    }
    let mut g = MatrixGF::zeros(field.clone(), k, n as usize);
    for (j, point) in projective_points(field, k).enumerate() {
        for (i, &e) in point.iter().enumerate() {
            g.set(i, j, e);
        }
    }
    let w = q.pow(k as u32 - 1);
    let facts = StructuralFacts { min_distance: w, diameter: w, dual_distance: Some(3) };
    Ok(LinearCode::with_facts(g, facts)?)
}

/// The `[2m, m]` code generated by `(I_m | I_m)`: codewords are pairs
/// `(x, x)`, of weight twice the weight of `x`.
///
/// Minimum distance 2, diameter `2m`, and dual distance 2 — the dual contains
/// `(e_i, -e_i)` but no weight-1 word, since no generator column is zero.
pub fn identity_pair(field: &Arc<Field>, m: usize) -> Result<LinearCode, ConstructionError> {
    if m == 0 {
        return Err(ConstructionError::EmptyPair);
    }
    let mut g = MatrixGF::zeros(field.clone(), m, 2 * m);
    for i in 0..m {
        g.set(i, i, field.one());
        g.set(i, m + i, field.one());
    }
    let facts =
        StructuralFacts { min_distance: 2, diameter: 2 * m as u64, dual_distance: Some(2) };
    Ok(LinearCode::with_facts(g, facts)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{DualDistanceBound, DEFAULT_ENUMERATION_LIMIT};

    fn gf(q: u64) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    fn dist(code: &LinearCode) -> Vec<u64> {
        code.enumerated_weight_distribution(DEFAULT_ENUMERATION_LIMIT).unwrap()
    }

    /// Enumerated extremes must reproduce the recorded facts.
    fn assert_facts_exact(code: &LinearCode) {
        let m = code.metrics(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert!(m.enumerated);
        let f = code.facts().expect("constructors attach facts");
        assert_eq!(m.min_distance, f.min_distance);
        assert_eq!(m.diameter, f.diameter);
    }

    #[test]
    fn grs_over_gf4_matches_mds_weight_table() {
        let f = gf(4);
        let c = grs_default(&f, 4, 2).unwrap();
        assert_eq!((c.length(), c.dimension()), (4, 2));
        // MDS [4,2,3] over GF(4): A_3 = 12, A_4 = 3.
        assert_eq!(dist(&c), vec![1, 0, 0, 12, 3]);
        assert_facts_exact(&c);
        assert_eq!(c.facts().unwrap().dual_distance, Some(3));
        assert_eq!(c.dual_distance(3, 1_000_000), DualDistanceBound::Exact(3));
    }

    #[test]
    fn grs_with_custom_multipliers_keeps_the_same_weights() {
        // Column scaling never moves weights, so the distribution must match
        // the all-ones multiplier version.
        let f = gf(5);
        let alphas: Vec<_> = f.elements().take(5).collect();
        let v: Vec<_> = [1u64, 2, 3, 4, 2].iter().map(|&x| f.element(x).unwrap()).collect();
        let plain = grs_default(&f, 5, 3).unwrap();
        let scaled = grs(&f, 3, &alphas, &v).unwrap();
        assert_eq!(dist(&plain), dist(&scaled));
        assert_facts_exact(&scaled);
    }

    #[test]
    fn full_dimension_grs_has_no_dual_facts() {
        let f = gf(3);
        let c = grs_default(&f, 3, 3).unwrap();
        assert_eq!(c.facts().unwrap().dual_distance, None);
        assert_eq!(c.facts().unwrap().min_distance, 1);
        assert_facts_exact(&c);
    }

    #[test]
    fn extended_grs_over_the_whole_field_loses_a_full_weight_word() {
        // All 4 points of GF(4) plus the extension column, k = 2: every
        // degree-1 polynomial has a root, so no codeword has weight 5.
        let f = gf(4);
        let c = extended_grs_default(&f, 5, 2).unwrap();
        assert_eq!(dist(&c), vec![1, 0, 0, 0, 15, 0]);
        assert_facts_exact(&c);
        assert_eq!(c.facts().unwrap().diameter, 4);
    }

    #[test]
    fn extended_grs_with_spare_points_reaches_full_weight() {
        // Only 3 of the 4 points are used: (x - beta)^1 avoids them for the
        // spare beta, so weight 4 words exist.
        let f = gf(4);
        let c = extended_grs_default(&f, 4, 2).unwrap();
        assert_eq!(c.facts().unwrap().diameter, 4);
        assert_facts_exact(&c);
    }

    #[test]
    fn extended_grs_higher_dimension_is_mds_with_full_diameter() {
        for (q, n, k) in [(4u64, 5usize, 3usize), (4, 5, 4), (5, 6, 3), (3, 4, 1)] {
            let f = gf(q);
            let c = extended_grs_default(&f, n, k).unwrap();
            let facts = *c.facts().unwrap();
            assert_eq!(facts.min_distance, (n - k + 1) as u64, "q={q} n={n} k={k}");
            assert_eq!(facts.diameter, n as u64, "q={q} n={n} k={k}");
            assert_facts_exact(&c);
        }
    }

    #[test]
    fn binary_simplex_is_constant_weight() {
        let f = gf(2);
        let c = simplex(&f, 3).unwrap();
        assert_eq!((c.length(), c.dimension()), (7, 3));
        assert_eq!(dist(&c), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        assert_facts_exact(&c);
        assert_eq!(c.dual_distance(4, 1_000_000), DualDistanceBound::Exact(3));
    }

    #[test]
    fn ternary_simplex_is_constant_weight() {
        let f = gf(3);
        let c = simplex(&f, 2).unwrap();
        assert_eq!((c.length(), c.dimension()), (4, 2));
        assert_eq!(dist(&c), vec![1, 0, 0, 8, 0]);
        assert_facts_exact(&c);
    }

    #[test]
    fn identity_pair_doubles_weights() {
        let f = gf(3);
        let c = identity_pair(&f, 2).unwrap();
        assert_eq!((c.length(), c.dimension()), (4, 2));
        assert_eq!(dist(&c), vec![1, 0, 4, 0, 4]);
        assert_facts_exact(&c);
        assert_eq!(c.dual_distance(3, 1_000), DualDistanceBound::Exact(2));
    }

    #[test]
    fn constructors_reject_bad_inputs() {
        let f = gf(4);
        assert!(matches!(
            grs_default(&f, 5, 2),
            Err(ConstructionError::NotEnoughPoints { n: 5, .. })
        ));
        assert!(matches!(
            grs_default(&f, 3, 4),
            Err(ConstructionError::DimensionOutOfRange { k: 4, n: 3 })
        ));
        assert!(matches!(
            grs_default(&f, 3, 0),
            Err(ConstructionError::DimensionOutOfRange { k: 0, n: 3 })
        ));
        let a = f.element(1).unwrap();
        let one = f.one();
        assert!(matches!(
            grs(&f, 1, &[a, a], &[one, one]),
            Err(ConstructionError::RepeatedEvaluationPoint)
        ));
        assert!(matches!(
            grs(&f, 1, &[a], &[f.zero()]),
            Err(ConstructionError::ZeroMultiplier)
        ));
        assert!(matches!(
            grs(&f, 1, &[a], &[one, one]),
            Err(ConstructionError::MultiplierCount { expected: 1, found: 2 })
        ));
        assert!(matches!(
            extended_grs(&f, 1, &[a], &[one, f.zero()]),
            Err(ConstructionError::ZeroMultiplier)
        ));
        assert!(matches!(
            extended_grs_default(&f, 6, 2),
            Err(ConstructionError::NotEnoughPoints { .. })
        ));
        assert!(matches!(simplex(&f, 1), Err(ConstructionError::SimplexDimension { k: 1 })));
        assert!(matches!(identity_pair(&f, 0), Err(ConstructionError::EmptyPair)));
    }

    #[test]
    fn simplex_respects_the_size_cap() {
        let f = gf(256);
        // (256^5 - 1)/255 * 5 entries is far beyond the cap.
        assert!(matches!(simplex(&f, 5), Err(ConstructionError::TooLarge { .. })));
    }
}
