//! Linear codes: weight distributions by exhaustive enumeration, dual codes
//! and dual-distance certificates, puncturing, residual codes, direct sums.
//!
//! A `LinearCode` is a full-rank generator matrix plus optional structural
//! facts. The facts carry the minimum distance, diameter (maximum codeword
//! weight), and dual distance for codes whose parameters are known by
//! construction; `metrics` prefers exhaustive enumeration whenever the
//! message count fits the caller's budget, so the facts are themselves
//! checkable wherever enumeration is feasible.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::gf::{Field, FieldElement, FieldError};
use crate::matrix::{MatrixError, MatrixGF};

/// Default ceiling on the number of messages (`q^k`) that `metrics` and
/// friends will enumerate: 2^24.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator matrix must have at least one row and one column")]
    EmptyGenerator,
    #[error("generator rows are dependent: {rows} rows but rank {rank}")]
    RankDeficient { rows: usize, rank: usize },
    #[error("enumerating {messages} messages exceeds the limit of {limit}")]
    InfeasibleEnumeration { messages: u128, limit: u64 },
    #[error("no enumeration budget and no structural facts to fall back on")]
    UnknownMetrics,
    #[error("expected a vector of length {expected}, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("the word is not a codeword")]
    NotACodeword,
    #[error("the residual code is only defined for a nonzero codeword")]
    ZeroCodeword,
    #[error("puncturing position {position} is out of range for length {length}")]
    PunctureOutOfRange { position: usize, length: usize },
    #[error("puncturing removes every coordinate")]
    PunctureRemovesEverything,
    #[error("puncturing leaves the zero code")]
    PunctureLeavesZeroCode,
    #[error("codes live over different fields")]
    FieldMismatch,
    #[error("dual distance query needs t in 1..=3, got {t}")]
    UnsupportedDualThreshold { t: u64 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Parameters known by construction rather than by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralFacts {
    pub min_distance: u64,
    /// Maximum weight of a codeword.
    pub diameter: u64,
    /// Minimum distance of the dual code, when the construction pins it down.
    pub dual_distance: Option<u64>,
}

/// What a code looks like from the outside: length, dimension, the extreme
/// codeword weights, and (when enumerated) the full weight distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodeMetrics {
    pub n: u64,
    pub k: u64,
    pub min_distance: u64,
    /// Maximum weight of a codeword.
    pub diameter: u64,
    /// `weight_distribution[w]` counts codewords of weight `w`; present only
    /// when the metrics were enumerated.
    pub weight_distribution: Option<Vec<u64>>,
    /// True when the values above came from exhaustive enumeration, false
    /// when they were taken from structural facts.
    pub enumerated: bool,
}

/// What is known about the dual minimum distance after a bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualDistanceBound {
    /// The dual is the zero code (`k = n`), which has no nonzero word.
    ZeroDual,
    Exact(u64),
    /// Every set of fewer than `t` generator columns is independent, but the
    /// search budget ran out before settling the exact value.
    AtLeast(u64),
}

/// A linear code, held as a full-rank generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: MatrixGF,
    facts: Option<StructuralFacts>,
}

impl LinearCode {
    /// Wraps a generator matrix, rejecting dependent rows — dimension is
    /// always the literal row count.
    pub fn new(generator: MatrixGF) -> Result<LinearCode, CodeError> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(CodeError::EmptyGenerator);
        }
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankDeficient { rows: generator.rows(), rank });
        }
        Ok(LinearCode { generator, facts: None })
    }

    /// Like `new`, but records parameters the caller knows by construction.
    pub fn with_facts(generator: MatrixGF, facts: StructuralFacts) -> Result<LinearCode, CodeError> {
        let mut code = LinearCode::new(generator)?;
        code.facts = Some(facts);
        Ok(code)
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Block length `n`.
    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    /// Dimension `k`.
    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn facts(&self) -> Option<&StructuralFacts> {
        self.facts.as_ref()
    }

    /// Number of codewords, `q^k`, if it fits in a u128.
    pub fn codeword_count(&self) -> Option<u128> {
        let q = self.field().order() as u128;
        let mut count: u128 = 1;
        for _ in 0..self.dimension() {
            count = count.checked_mul(q)?;
        }
        Some(count)
    }

    /// The codeword for a message of length `k`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        if message.len() != self.dimension() {
            return Err(CodeError::WrongLength { expected: self.dimension(), found: message.len() });
        }
        Ok(self.generator.vec_mat(message)?)
    }

    /// Membership test: does the word lie in the row space of the generator?
    pub fn is_codeword(&self, word: &[FieldElement]) -> Result<bool, CodeError> {
        if word.len() != self.length() {
            return Err(CodeError::WrongLength { expected: self.length(), found: word.len() });
        }
        let extended = self.generator.with_appended_row(word)?;
        Ok(extended.rank() == self.dimension())
    }

    /// Index of the first all-zero generator column, if any. A zero column is
    /// exactly a dual codeword of weight 1, so `None` certifies that the dual
    /// distance is at least 2 (every coordinate of the code is live).
    pub fn zero_column(&self) -> Option<usize> {
        (0..self.length()).find(|&c| (0..self.dimension()).all(|r| self.generator.get(r, c).is_zero()))
    }

    /// Minimum distance, diameter, and weight distribution.
    ///
    /// Enumerates all `q^k` codewords when that count is within `limit` —
    /// enumeration wins even when structural facts are present, so recorded
    /// facts stay falsifiable. Otherwise falls back to the facts, and errors
    /// only when neither route is available.
    pub fn metrics(&self, limit: u64) -> Result<CodeMetrics, CodeError> {
        match self.enumerated_weight_distribution(limit) {
            Ok(dist) => {
                let min_distance = dist
                    .iter()
                    .enumerate()
                    .skip(1)
                    .find(|(_, &c)| c > 0)
                    .map(|(w, _)| w as u64)
                    .expect("a positive-dimension code has a nonzero word");
                let diameter = dist
                    .iter()
                    .enumerate()
                    .rev()
                    .find(|(_, &c)| c > 0)
                    .map(|(w, _)| w as u64)
                    .expect("a positive-dimension code has a nonzero word");
                if let Some(f) = &self.facts {
                    debug_assert_eq!(f.min_distance, min_distance);
                    debug_assert_eq!(f.diameter, diameter);
                }
                Ok(CodeMetrics {
                    n: self.length() as u64,
                    k: self.dimension() as u64,
                    min_distance,
                    diameter,
                    weight_distribution: Some(dist),
                    enumerated: true,
                })
            }
            Err(CodeError::InfeasibleEnumeration { .. }) => match &self.facts {
                Some(f) => Ok(CodeMetrics {
                    n: self.length() as u64,
                    k: self.dimension() as u64,
                    min_distance: f.min_distance,
                    diameter: f.diameter,
                    weight_distribution: None,
                    enumerated: false,
                }),
                None => Err(CodeError::UnknownMetrics),
            },
            Err(e) => Err(e),
        }
    }

    /// The full weight distribution by walking every codeword once, or an
    /// error when `q^k` exceeds `limit`.
    pub fn enumerated_weight_distribution(&self, limit: u64) -> Result<Vec<u64>, CodeError> {
        let messages = self.codeword_count().unwrap_or(u128::MAX);
        if messages > limit as u128 {
            return Err(CodeError::InfeasibleEnumeration { messages, limit });
        }
        let field = self.field().clone();
        let q = field.order() as usize;
        let k = self.dimension();
        let n = self.length();

        // scaled[(i*q + lambda)*n ..][..n] is lambda * row_i, so the walk
        // below only ever adds precomputed rows.
        let mut scaled = vec![field.zero(); k * q * n];
        for i in 0..k {
            let row = self.generator.row(i);
            for lambda in 1..q as u64 {
                let le = field.element(lambda).expect("lambda < q");
                let dst = &mut scaled[(i * q + lambda as usize) * n..][..n];
                for (d, &g) in dst.iter_mut().zip(row) {
                    *d = field.mul(le, g);
                }
            }
        }

        // Depth-first walk over messages: level i holds the partial codeword
        // for the first i message symbols, so each codeword costs O(n) field
        // additions amortized.
        let mut counts = vec![0u64; n + 1];
        let mut buf = vec![field.zero(); (k + 1) * n];
        fn walk(
            field: &Field,
            scaled: &[FieldElement],
            buf: &mut [FieldElement],
            counts: &mut [u64],
            level: usize,
            k: usize,
            n: usize,
            q: usize,
        ) {
            if level == k {
                let word = &buf[k * n..];
                let w = word.iter().filter(|e| !e.is_zero()).count();
                counts[w] += 1;
                return;
            }
            for lambda in 0..q {
                let (head, tail) = buf.split_at_mut((level + 1) * n);
                let cur = &head[level * n..];
                let next = &mut tail[..n];
                if lambda == 0 {
                    next.copy_from_slice(cur);
                } else {
                    let srow = &scaled[(level * q + lambda) * n..][..n];
                    for ((nx, &c), &s) in next.iter_mut().zip(cur).zip(srow) {
                        *nx = field.add(c, s);
                    }
                }
                walk(field, scaled, buf, counts, level + 1, k, n, q);
            }
        }
        walk(&field, &scaled, &mut buf, &mut counts, 0, k, n, q);
        debug_assert_eq!(counts.iter().map(|&c| c as u128).sum::<u128>(), messages);
        Ok(counts)
    }

    /// The dual code, or `None` when `k = n` and the dual is the zero code
    /// (which has no generator).
    pub fn dual_code(&self) -> Option<LinearCode> {
        let ns = self.generator.null_space();
        if ns.rows() == 0 {
            return None;
        }
        Some(LinearCode::new(ns).expect("null-space basis rows are independent"))
    }

    /// Cheap one-sided certificate that `d(dual) >= t`, for `t` in 1..=3.
    ///
    /// A dual word of weight `w` is a dependency among `w` generator columns,
    /// so `t = 2` is the no-zero-column test and `t = 3` additionally rules
    /// out proportional column pairs. (When `k = n` the dual is the zero
    /// code and the certificate holds vacuously.)
    pub fn dual_distance_at_least(&self, t: u64) -> Result<bool, CodeError> {
        match t {
            0 | 1 => Ok(true),
            2 => Ok(self.zero_column().is_none()),
            3 => {
                if self.zero_column().is_some() {
                    return Ok(false);
                }
                let mut normalized: Vec<Vec<u64>> = Vec::with_capacity(self.length());
                for c in 0..self.length() {
                    normalized.push(self.normalized_column(c));
                }
                normalized.sort_unstable();
                Ok(normalized.windows(2).all(|w| w[0] != w[1]))
            }
            _ => Err(CodeError::UnsupportedDualThreshold { t }),
        }
    }

    /// Scales column `c` so its first nonzero entry is 1; proportional
    /// columns collide after this.
    fn normalized_column(&self, c: usize) -> Vec<u64> {
        let f = self.field();
        let col = self.generator.column(c);
        let Some(first) = col.iter().find(|e| !e.is_zero()) else {
            return vec![0; col.len()];
        };
        let inv = f.inv(*first).expect("nonzero entry");
        col.iter().map(|&e| f.mul(inv, e).encoding()).collect()
    }

    /// Determines the dual minimum distance by searching for the smallest
    /// dependent set of generator columns, up to subsets of size `max_t`
    /// and at most `budget` rank tests.
    ///
    /// Returns `Exact(t)` when some `t` columns are dependent and all smaller
    /// sets are independent; `AtLeast(t)` when the search exhausted `max_t`
    /// or the budget with every tested set independent.
    pub fn dual_distance(&self, max_t: u64, budget: u64) -> DualDistanceBound {
        let n = self.length();
        let k = self.dimension();
        if k == n {
            return DualDistanceBound::ZeroDual;
        }
        // Any k+1 columns are dependent, so the search below always resolves
        // once max_t exceeds k.
        let cap = max_t.min(k as u64 + 1);
        let mut spent: u64 = 0;
        for t in 1..=cap {
            if t == 1 {
                if self.zero_column().is_some() {
                    return DualDistanceBound::Exact(1);
                }
                continue;
            }
            let mut subset: Vec<usize> = (0..t as usize).collect();
            loop {
                spent += 1;
                if spent > budget {
                    return DualDistanceBound::AtLeast(t);
                }
                let sub = self.generator.select_columns(&subset);
                if sub.rank() < t as usize {
                    return DualDistanceBound::Exact(t);
                }
                if !next_combination(&mut subset, n) {
                    break;
                }
            }
        }
        DualDistanceBound::AtLeast(cap + 1)
    }

    /// Deletes the listed coordinates and re-bases the projected rows.
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode, CodeError> {
        let n = self.length();
        if let Some(&p) = positions.iter().find(|&&p| p >= n) {
            return Err(CodeError::PunctureOutOfRange { position: p, length: n });
        }
        let drop: std::collections::BTreeSet<usize> = positions.iter().copied().collect();
        let keep: Vec<usize> = (0..n).filter(|c| !drop.contains(c)).collect();
        if keep.is_empty() {
            return Err(CodeError::PunctureRemovesEverything);
        }
        let projected = self.generator.select_columns(&keep);
        let basis = projected.row_space_basis();
        if basis.rows() == 0 {
            return Err(CodeError::PunctureLeavesZeroCode);
        }
        LinearCode::new(basis)
    }

    /// The residual code with respect to a nonzero codeword: the projection
    /// onto the coordinates outside its support.
    pub fn residual(&self, codeword: &[FieldElement]) -> Result<LinearCode, CodeError> {
        if !self.is_codeword(codeword)? {
            return Err(CodeError::NotACodeword);
        }
        let supp = support(codeword);
        if supp.is_empty() {
            return Err(CodeError::ZeroCodeword);
        }
        self.puncture(&supp)
    }

    /// Block-diagonal combination: codewords are pairs of codewords.
    ///
    /// Structural facts combine exactly — the minimum distance is the smaller
    /// of the two, the diameter is the sum, and a dual pair stays a dual pair
    /// coordinate-wise, so the dual distance is again the smaller one.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode, CodeError> {
        if self.field().spec() != other.field().spec() {
            return Err(CodeError::FieldMismatch);
        }
        let f = self.field().clone();
        let (n1, k1) = (self.length(), self.dimension());
        let (n2, k2) = (other.length(), other.dimension());
        let mut g = MatrixGF::zeros(f, k1 + k2, n1 + n2);
        for r in 0..k1 {
            for c in 0..n1 {
                g.set(r, c, self.generator.get(r, c));
            }
        }
        for r in 0..k2 {
            for c in 0..n2 {
                g.set(k1 + r, n1 + c, other.generator.get(r, c));
            }
        }
        let facts = match (&self.facts, &other.facts) {
            (Some(a), Some(b)) => Some(StructuralFacts {
                min_distance: a.min_distance.min(b.min_distance),
                diameter: a.diameter + b.diameter,
                dual_distance: match (a.dual_distance, b.dual_distance) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    _ => None,
                },
            }),
            _ => None,
        };
        let code = LinearCode::new(g)?;
        Ok(match facts {
            Some(facts) => LinearCode { facts: Some(facts), ..code },
            None => code,
        })
    }
}

/// Hamming weight of a vector.
pub fn weight(v: &[FieldElement]) -> u64 {
    v.iter().filter(|e| !e.is_zero()).count() as u64
}

/// Indices of the nonzero coordinates, ascending.
pub fn support(v: &[FieldElement]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Advances `subset` to the next t-combination of `0..n` in lexicographic
/// order; false when `subset` was the last one.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let t = subset.len();
    for i in (0..t).rev() {
        if subset[i] < n - t + i {
            subset[i] += 1;
            for j in i + 1..t {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    fn code(field: &Arc<Field>, rows: usize, cols: usize, enc: &[u64]) -> LinearCode {
        LinearCode::new(MatrixGF::from_encodings(field.clone(), rows, cols, enc).unwrap()).unwrap()
    }

    /// Independent oracle: encode every message one at a time and tally.
    fn naive_weight_distribution(c: &LinearCode) -> Vec<u64> {
        let f = c.field();
        let q = f.order();
        let k = c.dimension();
        let mut counts = vec![0u64; c.length() + 1];
        let mut msg = vec![0u64; k];
        loop {
            let message: Vec<FieldElement> =
                msg.iter().map(|&v| f.element(v).unwrap()).collect();
            let word = c.encode(&message).unwrap();
            counts[weight(&word) as usize] += 1;
            // Odometer over base-q digits.
            let mut i = 0;
            loop {
                if i == k {
                    return counts;
                }
                msg[i] += 1;
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
        }
    }

    /// Columns of the 3x7 binary simplex generator: all nonzero vectors.
    fn simplex_2_3(field: &Arc<Field>) -> LinearCode {
        code(
            field,
            3,
            7,
            &[
                0, 0, 0, 1, 1, 1, 1, //
                0, 1, 1, 0, 0, 1, 1, //
                1, 0, 1, 0, 1, 0, 1,
            ],
        )
    }

    #[test]
    fn rejects_degenerate_generators() {
        let f = gf(2);
        let dependent = MatrixGF::from_encodings(f.clone(), 2, 3, &[1, 0, 1, 1, 0, 1]).unwrap();
        assert!(matches!(
            LinearCode::new(dependent),
            Err(CodeError::RankDeficient { rows: 2, rank: 1 })
        ));
        let empty = MatrixGF::from_encodings(f, 0, 3, &[]).unwrap();
        assert!(matches!(LinearCode::new(empty), Err(CodeError::EmptyGenerator)));
    }

    #[test]
    fn simplex_weight_distribution_matches_hand_table() {
        let f = gf(2);
        let c = simplex_2_3(&f);
        let m = c.metrics(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(m.min_distance, 4);
        assert_eq!(m.diameter, 4);
        let mut expected = vec![0u64; 8];
        expected[0] = 1;
        expected[4] = 7;
        assert_eq!(m.weight_distribution.unwrap(), expected);
        assert!(m.enumerated);
    }

    #[test]
    fn hamming_code_weight_distribution_matches_hand_table() {
        // Dual of the [7,3] simplex: the [7,4,3] Hamming code with
        // distribution 1, 7, 7, 1 at weights 0, 3, 4, 7.
        let f = gf(2);
        let dual = simplex_2_3(&f).dual_code().unwrap();
        assert_eq!(dual.dimension(), 4);
        let m = dual.metrics(DEFAULT_ENUMERATION_LIMIT).unwrap();
        let mut expected = vec![0u64; 8];
        expected[0] = 1;
        expected[3] = 7;
        expected[4] = 7;
        expected[7] = 1;
        assert_eq!(m.weight_distribution.unwrap(), expected);
        assert_eq!((m.min_distance, m.diameter), (3, 7));
    }

    #[test]
    fn fast_enumeration_agrees_with_naive_encoding_walk() {
        let cases: Vec<(u64, usize, usize, Vec<u64>)> = vec![
            (2, 3, 6, vec![1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, 0]),
            (3, 2, 5, vec![1, 0, 2, 1, 1, 0, 1, 1, 2, 0]),
            (4, 2, 4, vec![1, 0, 2, 3, 0, 1, 1, 2]),
            (5, 3, 4, vec![1, 0, 0, 4, 0, 1, 0, 3, 0, 0, 1, 2]),
        ];
        for (q, k, n, enc) in cases {
            let f = gf(q);
            let c = code(&f, k, n, &enc);
            assert_eq!(
                c.enumerated_weight_distribution(DEFAULT_ENUMERATION_LIMIT).unwrap(),
                naive_weight_distribution(&c),
                "q={q} k={k} n={n}"
            );
        }
    }

    #[test]
    fn metrics_falls_back_to_facts_when_enumeration_is_over_budget() {
        let f = gf(2);
        let g = MatrixGF::identity(f, 5);
        let c = LinearCode::with_facts(
            g.clone(),
            StructuralFacts { min_distance: 1, diameter: 5, dual_distance: None },
        )
        .unwrap();
        let m = c.metrics(4).unwrap();
        assert!(!m.enumerated);
        assert_eq!((m.min_distance, m.diameter), (1, 5));
        assert!(m.weight_distribution.is_none());

        let bare = LinearCode::new(g).unwrap();
        assert!(matches!(bare.metrics(4), Err(CodeError::UnknownMetrics)));
        assert!(matches!(
            bare.enumerated_weight_distribution(4),
            Err(CodeError::InfeasibleEnumeration { messages: 32, limit: 4 })
        ));
    }

    #[test]
    fn encode_and_membership() {
        let f = gf(3);
        let c = code(&f, 2, 4, &[1, 0, 1, 2, 0, 1, 2, 1]);
        let msg: Vec<_> = [1u64, 2].iter().map(|&v| f.element(v).unwrap()).collect();
        let word = c.encode(&msg).unwrap();
        let enc: Vec<u64> = word.iter().map(|e| e.encoding()).collect();
        assert_eq!(enc, vec![1, 2, 2, 1]); // row0 + 2*row1 = (1,0,1,2) + (0,2,4=1,2)
        assert!(c.is_codeword(&word).unwrap());
        let zero = vec![f.zero(); 4];
        assert!(c.is_codeword(&zero).unwrap());
        let non: Vec<_> = [1u64, 0, 0, 0].iter().map(|&v| f.element(v).unwrap()).collect();
        assert!(!c.is_codeword(&non).unwrap());
        assert!(matches!(c.encode(&msg[..1]), Err(CodeError::WrongLength { .. })));
        assert!(matches!(c.is_codeword(&word[..3]), Err(CodeError::WrongLength { .. })));
    }

    #[test]
    fn dual_of_dual_has_the_same_row_space() {
        let f = gf(4);
        let c = code(&f, 2, 5, &[1, 0, 2, 3, 1, 0, 1, 1, 2, 3]);
        let dd = c.dual_code().unwrap().dual_code().unwrap();
        assert_eq!(
            dd.generator().row_space_basis(),
            c.generator().row_space_basis()
        );
        // Every dual word is orthogonal to every generator row.
        let dual = c.dual_code().unwrap();
        for i in 0..dual.dimension() {
            let prod = c.generator().mat_vec(dual.generator().row(i)).unwrap();
            assert!(prod.iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn full_length_dimension_code_has_zero_dual() {
        let f = gf(2);
        let c = LinearCode::new(MatrixGF::identity(f, 3)).unwrap();
        assert!(c.dual_code().is_none());
        assert_eq!(c.dual_distance(4, 1_000), DualDistanceBound::ZeroDual);
        assert!(c.dual_distance_at_least(2).unwrap());
    }

    #[test]
    fn dual_distance_search_matches_enumerated_dual_metrics() {
        let cases: Vec<(u64, usize, usize, Vec<u64>)> = vec![
            // Zero column at position 2: dual distance 1.
            (2, 2, 4, vec![1, 0, 0, 1, 0, 1, 0, 1]),
            // Repeated column: dual distance 2.
            (3, 2, 4, vec![1, 1, 0, 2, 0, 0, 1, 1]),
            (2, 3, 7, vec![0, 0, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1]),
            (4, 2, 5, vec![1, 0, 1, 2, 3, 0, 1, 1, 1, 1]),
        ];
        for (q, k, n, enc) in cases {
            let f = gf(q);
            let c = code(&f, k, n, &enc);
            let expected = c
                .dual_code()
                .unwrap()
                .metrics(DEFAULT_ENUMERATION_LIMIT)
                .unwrap()
                .min_distance;
            assert_eq!(
                c.dual_distance(k as u64 + 1, 1_000_000),
                DualDistanceBound::Exact(expected),
                "q={q} k={k} n={n}"
            );
            for t in 1..=3u64 {
                assert_eq!(
                    c.dual_distance_at_least(t).unwrap(),
                    expected >= t,
                    "q={q} k={k} n={n} t={t}"
                );
            }
        }
    }

    #[test]
    fn dual_distance_reports_partial_knowledge_on_budget_exhaustion() {
        let f = gf(2);
        let c = simplex_2_3(&f);
        // Simplex dual distance is 3; a max_t of 2 can only say "at least 3".
        assert_eq!(c.dual_distance(2, 1_000_000), DualDistanceBound::AtLeast(3));
        // One rank test is not enough to finish level 2 either.
        assert_eq!(c.dual_distance(4, 1), DualDistanceBound::AtLeast(2));
    }

    #[test]
    fn puncturing_identity_pair_keeps_rank() {
        let f = gf(2);
        let c = code(&f, 2, 4, &[1, 0, 1, 0, 0, 1, 0, 1]);
        let p = c.puncture(&[0]).unwrap();
        assert_eq!((p.length(), p.dimension()), (3, 2));
        // Both coordinates of a repeated pair removed: rank drops to 1.
        let p2 = c.puncture(&[1, 3]).unwrap();
        assert_eq!((p2.length(), p2.dimension()), (2, 1));
        assert!(matches!(
            c.puncture(&[0, 1, 2, 3]),
            Err(CodeError::PunctureRemovesEverything)
        ));
        assert!(matches!(
            c.puncture(&[4]),
            Err(CodeError::PunctureOutOfRange { position: 4, length: 4 })
        ));
        let single = code(&f, 1, 2, &[1, 0]);
        assert!(matches!(
            single.puncture(&[0]),
            Err(CodeError::PunctureLeavesZeroCode)
        ));
    }

    #[test]
    fn residual_of_identity_pair_is_the_repetition_code() {
        let f = gf(2);
        let c = code(&f, 2, 4, &[1, 0, 1, 0, 0, 1, 0, 1]);
        let word: Vec<_> = [1u64, 0, 1, 0].iter().map(|&v| f.element(v).unwrap()).collect();
        let res = c.residual(&word).unwrap();
        assert_eq!((res.length(), res.dimension()), (2, 1));
        let m = res.metrics(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!((m.min_distance, m.diameter), (2, 2));

        let zero = vec![f.zero(); 4];
        assert!(matches!(c.residual(&zero), Err(CodeError::ZeroCodeword)));
        let non: Vec<_> = [1u64, 1, 0, 0].iter().map(|&v| f.element(v).unwrap()).collect();
        assert!(matches!(c.residual(&non), Err(CodeError::NotACodeword)));
    }

    #[test]
    fn direct_sum_weight_distribution_is_the_convolution() {
        let f = gf(3);
        let a = code(&f, 1, 2, &[1, 2]);
        let b = code(&f, 2, 3, &[1, 0, 1, 0, 1, 2]);
        let s = a.direct_sum(&b).unwrap();
        assert_eq!((s.length(), s.dimension()), (5, 3));
        let da = a.enumerated_weight_distribution(1 << 20).unwrap();
        let db = b.enumerated_weight_distribution(1 << 20).unwrap();
        let ds = s.enumerated_weight_distribution(1 << 20).unwrap();
        let mut conv = vec![0u64; ds.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                conv[i + j] += x * y;
            }
        }
        assert_eq!(ds, conv);
    }

    #[test]
    fn direct_sum_merges_structural_facts() {
        let f = gf(2);
        let g1 = MatrixGF::from_encodings(f.clone(), 1, 3, &[1, 1, 1]).unwrap();
        let g2 = MatrixGF::from_encodings(f.clone(), 1, 2, &[1, 1]).unwrap();
        let a = LinearCode::with_facts(
            g1,
            StructuralFacts { min_distance: 3, diameter: 3, dual_distance: Some(2) },
        )
        .unwrap();
        let b = LinearCode::with_facts(
            g2,
            StructuralFacts { min_distance: 2, diameter: 2, dual_distance: Some(2) },
        )
        .unwrap();
        let s = a.direct_sum(&b).unwrap();
        assert_eq!(
            s.facts(),
            Some(&StructuralFacts { min_distance: 2, diameter: 5, dual_distance: Some(2) })
        );
        let m = s.metrics(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!((m.min_distance, m.diameter), (2, 5));

        let plain = LinearCode::new(MatrixGF::identity(f.clone(), 2)).unwrap();
        assert!(a.direct_sum(&plain).unwrap().facts().is_none());
        let other_field = gf(3);
        let c3 = code(&other_field, 1, 2, &[1, 1]);
        assert!(matches!(a.direct_sum(&c3), Err(CodeError::FieldMismatch)));
    }

    #[test]
    fn zero_column_detection() {
        let f = gf(2);
        let c = code(&f, 2, 4, &[1, 0, 0, 1, 0, 1, 0, 1]);
        assert_eq!(c.zero_column(), Some(2));
        let clean = code(&f, 2, 3, &[1, 0, 1, 0, 1, 1]);
        assert_eq!(clean.zero_column(), None);
    }

    #[test]
    fn weight_and_support_helpers() {
        let f = gf(4);
        let v: Vec<_> = [0u64, 3, 0, 1, 2].iter().map(|&x| f.element(x).unwrap()).collect();
        assert_eq!(weight(&v), 3);
        assert_eq!(support(&v), vec![1, 3, 4]);
    }

    #[test]
    fn combination_stepper_is_exhaustive_and_ordered() {
        let mut subset = vec![0usize, 1, 2];
        let mut seen = vec![subset.clone()];
        while next_combination(&mut subset, 5) {
            seen.push(subset.clone());
        }
        assert_eq!(seen.len(), 10); // C(5,3)
        for w in seen.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(seen.last().unwrap(), &vec![2, 3, 4]);
    }
}
