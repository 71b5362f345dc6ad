//! Mutation dynamics: exchange-matrix mutation, the C- and G-matrix
//! recurrences in their unconditional, general-sign, and sign-coherent
//! forms, the left-end recurrence that moves the root, and cached walks
//! along mutation words.
//!
//! Vertices of the mutation tree are addressed purely by reduced direction
//! words from the root; there is no explicit tree structure.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::matrix::{Axis, ExchangeMatrix, IntMat, MatrixError};
use crate::poly::{f_step, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("direction at position {position} is zero (directions are 1-based)")]
    ZeroDirection { position: usize },
    #[error("directions at positions {position} and {} are equal: mutation is involutive, so the word backtracks", position + 1)]
    AdjacentRepeat { position: usize },
    #[error("direction {direction} at position {position} exceeds the rank {rank}")]
    DirectionOutOfRange { position: usize, direction: usize, rank: usize },
    #[error("cannot parse direction `{0}`")]
    Parse(String),
}

/// A reduced path in the mutation tree: a sequence of 1-based directions
/// with no two consecutive entries equal. Words address vertices relative
/// to the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MutationWord(Vec<usize>);

impl MutationWord {
    pub fn new(directions: Vec<usize>) -> Result<Self, WordError> {
        for (i, &d) in directions.iter().enumerate() {
            if d == 0 {
                return Err(WordError::ZeroDirection { position: i + 1 });
            }
            if i > 0 && directions[i - 1] == d {
                return Err(WordError::AdjacentRepeat { position: i });
            }
        }
        Ok(MutationWord(directions))
    }

    pub fn empty() -> Self {
        MutationWord(Vec::new())
    }

    pub fn directions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks every direction against the pattern rank.
    pub fn validate_rank(&self, rank: usize) -> Result<(), WordError> {
        for (i, &d) in self.0.iter().enumerate() {
            if d > rank {
                return Err(WordError::DirectionOutOfRange {
                    position: i + 1,
                    direction: d,
                    rank,
                });
            }
        }
        Ok(())
    }

    pub fn prefix(&self, len: usize) -> MutationWord {
        MutationWord(self.0[..len].to_vec())
    }

    /// The same path read from the far end; reduced words stay reduced.
    pub fn reversed(&self) -> MutationWord {
        MutationWord(self.0.iter().rev().copied().collect())
    }

    /// Address of the same vertex relative to the neighbor root across the
    /// edge labeled `k`: drops a leading `k`, otherwise prepends one.
    pub fn viewed_from_neighbor(&self, k: usize) -> MutationWord {
        assert!(k >= 1, "directions are 1-based");
        if self.0.first() == Some(&k) {
            MutationWord(self.0[1..].to_vec())
        } else {
            let mut dirs = Vec::with_capacity(self.0.len() + 1);
            dirs.push(k);
            dirs.extend_from_slice(&self.0);
            MutationWord(dirs)
        }
    }
}

impl fmt::Display for MutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for MutationWord {
    type Err = WordError;

    /// Parses a comma-separated list of 1-based directions; an empty or
    /// all-whitespace string is the empty word.
    fn from_str(s: &str) -> Result<Self, WordError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(MutationWord::empty());
        }
        let dirs = trimmed
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| WordError::Parse(part.trim().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        MutationWord::new(dirs)
    }
}

impl<'de> Deserialize<'de> for MutationWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dirs = Vec::<usize>::deserialize(deserializer)?;
        MutationWord::new(dirs).map_err(serde::de::Error::custom)
    }
}

/// All reduced words of length at most `depth` in rank `n`, in lexicographic
/// order by direction index (the empty word first), skipping immediate
/// backtracks. The order is the canonical enumeration order for reports.
pub fn words_up_to_depth(n: usize, depth: usize) -> Vec<MutationWord> {
    let mut out = vec![MutationWord::empty()];
    let mut current: Vec<usize> = Vec::new();
    fn extend(n: usize, depth: usize, current: &mut Vec<usize>, out: &mut Vec<MutationWord>) {
        if current.len() == depth {
            return;
        }
        for d in 1..=n {
            if current.last() == Some(&d) {
                continue;
            }
            current.push(d);
            out.push(MutationWord(current.clone()));
            extend(n, depth, current, out);
            current.pop();
        }
    }
    extend(n, depth, &mut current, &mut out);
    out
}

/// The common sign of a sign-coherent column: +1 when all entries are
/// nonnegative, -1 when all are nonpositive with at least one negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ColumnSign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl ColumnSign {
    pub fn value(self) -> i64 {
        match self {
            ColumnSign::Plus => 1,
            ColumnSign::Minus => -1,
        }
    }

    pub fn opposite(self) -> ColumnSign {
        match self {
            ColumnSign::Plus => ColumnSign::Minus,
            ColumnSign::Minus => ColumnSign::Plus,
        }
    }

    /// `epsilon * M`.
    pub fn times(self, m: &IntMat) -> IntMat {
        match self {
            ColumnSign::Plus => m.clone(),
            ColumnSign::Minus => m.neg(),
        }
    }
}

impl fmt::Display for ColumnSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColumnSign::Plus => write!(f, "+1"),
            ColumnSign::Minus => write!(f, "-1"),
        }
    }
}

/// Witness of a sign-coherence violation: the matrix whose column mixes
/// strictly positive and strictly negative entries, and the word of the
/// vertex it was found at (empty when not produced by a walk).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCoherenceViolation {
    pub matrix: IntMat,
    pub column: usize,
    pub word: MutationWord,
}

impl SignCoherenceViolation {
    pub fn with_word(mut self, word: MutationWord) -> Self {
        self.word = word;
        self
    }
}

impl fmt::Display for SignCoherenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column {} of {} at word {} has mixed signs",
            self.column, self.matrix, self.word
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("sign-coherence violated: {0}")]
    MixedSigns(SignCoherenceViolation),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Matrix mutation in direction `k` (1-based); the symmetrizer carries over.
/// Mutation is involutive.
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, MatrixError> {
    let n = b.size();
    if k < 1 || k > n {
        return Err(MatrixError::IndexOutOfRange { index: k, bound: n });
    }
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let bij = b.entry(i, j);
            let v = if i == k || j == k {
                -bij
            } else {
                let bik = b.entry(i, k);
                let bkj = b.entry(k, j);
                bij + pos(bik) * pos(bkj) - pos(&-bik) * pos(&-bkj)
            };
            row.push(v);
        }
        rows.push(row);
    }
    Ok(b.with_same_symmetrizer(IntMat::from_rows(rows)))
}

fn pos(v: &BigInt) -> BigInt {
    if v.is_positive() {
        v.clone()
    } else {
        BigInt::zero()
    }
}

/// The C-matrix update read off extended-matrix mutation in direction `l`.
/// Needs no sign-coherence assumption.
pub fn mutate_c_unconditional(
    b_t: &ExchangeMatrix,
    c: &IntMat,
    l: usize,
) -> Result<IntMat, MatrixError> {
    let n = b_t.size();
    if l < 1 || l > n {
        return Err(MatrixError::IndexOutOfRange { index: l, bound: n });
    }
    let mut rows = Vec::with_capacity(c.rows());
    for i in 1..=c.rows() {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let cij = c.entry(i, j);
            let v = if j == l {
                -cij
            } else {
                let cil = c.entry(i, l);
                let blj = b_t.entry(l, j);
                cij + pos(cil) * pos(blj) - pos(&-cil) * pos(&-blj)
            };
            row.push(v);
        }
        rows.push(row);
    }
    Ok(IntMat::from_rows(rows))
}

/// The sign of column `j` of a sign-coherent matrix. A column with both a
/// strictly positive and a strictly negative entry is a sign-coherence
/// violation and is returned as an error with the offending matrix attached.
/// Panics on an all-zero column, which cannot occur for unimodular input.
pub fn sign_of_column(c: &IntMat, j: usize) -> Result<ColumnSign, PatternError> {
    let col = c.column(j);
    let has_pos = col.iter().any(|v| v.is_positive());
    let has_neg = col.iter().any(|v| v.is_negative());
    match (has_pos, has_neg) {
        (true, true) => Err(PatternError::MixedSigns(SignCoherenceViolation {
            matrix: c.clone(),
            column: j,
            word: MutationWord::empty(),
        })),
        (false, true) => Ok(ColumnSign::Minus),
        (true, false) => Ok(ColumnSign::Plus),
        (false, false) => panic!("column {j} of {c} is zero; the engine only signs nonzero columns"),
    }
}

/// `J_l + [eps * B]_+^{l.}` — the elementary factor of the C-recurrence.
fn right_factor_c(b_t: &IntMat, l: usize, eps: ColumnSign) -> IntMat {
    let j = IntMat::jay(b_t.rows(), l).expect("direction validated by caller");
    j.add(
        &eps.times(b_t)
            .truncate_positive()
            .select(Axis::Row, l)
            .expect("direction validated by caller"),
    )
}

/// `J_l + [-eps * B]_+^{.l}` — the elementary factor of the G-recurrence.
fn right_factor_g(b_t: &IntMat, l: usize, eps: ColumnSign) -> IntMat {
    let j = IntMat::jay(b_t.rows(), l).expect("direction validated by caller");
    j.add(
        &eps.opposite()
            .times(b_t)
            .truncate_positive()
            .select(Axis::Column, l)
            .expect("direction validated by caller"),
    )
}

/// One step of the C- and G-recurrences in direction `l`, assuming column
/// `l` of `c` is sign-coherent:
///
/// ```text
/// C' = C (J_l + [eps B_t]_+^{l.}),   G' = G (J_l + [-eps B_t]_+^{.l}),
/// ```
///
/// with `eps` the sign of that column.
pub fn step_right(
    c: &IntMat,
    g: &IntMat,
    b_t: &ExchangeMatrix,
    l: usize,
) -> Result<(IntMat, IntMat), PatternError> {
    let n = b_t.size();
    if l < 1 || l > n {
        return Err(MatrixError::IndexOutOfRange { index: l, bound: n }.into());
    }
    let eps = sign_of_column(c, l)?;
    let c_next = c.mul(&right_factor_c(b_t.matrix(), l, eps));
    let g_next = g.mul(&right_factor_g(b_t.matrix(), l, eps));
    Ok((c_next, g_next))
}

/// The general-sign forms of the recurrences, valid for either choice of
/// `eps` (the results do not depend on it):
///
/// ```text
/// C' = C (J_l + [eps B_t]_+^{l.}) + [-eps C]_+^{.l} B_t
/// G' = G (J_l + [-eps B_t]_+^{.l}) - B [-eps C]_+^{.l}
/// ```
///
/// where `B` is the initial exchange matrix of the pattern.
pub fn step_general(
    c: &IntMat,
    g: &IntMat,
    b0: &ExchangeMatrix,
    b_t: &ExchangeMatrix,
    l: usize,
    eps: ColumnSign,
) -> Result<(IntMat, IntMat), MatrixError> {
    let n = b_t.size();
    if l < 1 || l > n {
        return Err(MatrixError::IndexOutOfRange { index: l, bound: n });
    }
    let correction = eps
        .opposite()
        .times(c)
        .truncate_positive()
        .select(Axis::Column, l)?;
    let c_next = c
        .mul(&right_factor_c(b_t.matrix(), l, eps))
        .add(&correction.mul(b_t.matrix()));
    let g_next = g
        .mul(&right_factor_g(b_t.matrix(), l, eps))
        .sub(&b0.matrix().mul(&correction));
    Ok((c_next, g_next))
}

/// Left-end recurrence with an explicitly supplied sign
/// `eps = eps_k(C_{t0}^{-B_t;t})`: returns `(J_k + [-eps B]_+^{k.}) C_t`,
/// the C-matrix of the same vertex after the root moves across the edge
/// labeled `k`.
pub fn step_left_with_sign(
    b0: &ExchangeMatrix,
    k: usize,
    c_t: &IntMat,
    eps: ColumnSign,
) -> Result<IntMat, MatrixError> {
    let n = b0.size();
    if k < 1 || k > n {
        return Err(MatrixError::IndexOutOfRange { index: k, bound: n });
    }
    let j = IntMat::jay(n, k)?;
    let factor = j.add(
        &eps.opposite()
            .times(b0.matrix())
            .truncate_positive()
            .select(Axis::Row, k)?,
    );
    Ok(factor.mul(c_t))
}

/// Left-end recurrence, deriving the sign from column `k` of the exact
/// inverse of `c_t` (which equals the C-matrix with the roles of the two
/// ends swapped). The verifier cross-checks this sign through an
/// independent walk, so the recurrence is never trusted circularly.
pub fn step_left(b0: &ExchangeMatrix, k: usize, c_t: &IntMat) -> Result<IntMat, PatternError> {
    let inv = c_t.int_inverse()?;
    let eps = sign_of_column(&inv, k)?;
    Ok(step_left_with_sign(b0, k, c_t, eps)?)
}

/// The tropical data at a vertex: exchange matrix and C-/G-matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPoint {
    pub b_t: ExchangeMatrix,
    pub c: IntMat,
    pub g: IntMat,
    pub word: MutationWord,
}

/// The full pattern data at a vertex: the tropical data plus the
/// F-polynomials `F_1..F_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternPoint {
    pub b_t: ExchangeMatrix,
    pub c: IntMat,
    pub g: IntMat,
    pub f: Vec<SparsePoly>,
    pub word: MutationWord,
}

#[derive(Debug)]
struct Node {
    b_t: ExchangeMatrix,
    c: IntMat,
    g: IntMat,
    f: Option<Vec<SparsePoly>>,
}

/// Walks mutation words from a fixed root, memoizing the data at every
/// visited prefix. The cache is purely an optimization: results are
/// bit-identical with caching disabled.
pub struct Walker {
    root: ExchangeMatrix,
    compute_f: bool,
    caching: bool,
    cache: HashMap<Vec<usize>, Rc<Node>>,
}

impl Walker {
    /// Walker that computes the full pattern data, F-polynomials included.
    pub fn new(root: ExchangeMatrix) -> Self {
        Walker { root, compute_f: true, caching: true, cache: HashMap::new() }
    }

    /// Walker restricted to the matrix data. F-polynomials can grow
    /// exponentially on wild inputs; identity sweeps do not need them.
    pub fn matrices_only(root: ExchangeMatrix) -> Self {
        Walker { root, compute_f: false, caching: true, cache: HashMap::new() }
    }

    pub fn with_caching(mut self, caching: bool) -> Self {
        self.caching = caching;
        self.cache.clear();
        self
    }

    pub fn root(&self) -> &ExchangeMatrix {
        &self.root
    }

    fn initial_node(&self) -> Node {
        let n = self.root.size();
        Node {
            b_t: self.root.clone(),
            c: IntMat::identity(n),
            g: IntMat::identity(n),
            f: self.compute_f.then(|| vec![SparsePoly::one(n); n]),
        }
    }

    fn resolve(&mut self, word: &MutationWord) -> Result<Rc<Node>, PatternError> {
        let n = self.root.size();
        word.validate_rank(n)?;
        let dirs = word.directions();

        let mut start = dirs.len();
        let mut node: Option<Rc<Node>> = None;
        if self.caching {
            while start > 0 {
                if let Some(hit) = self.cache.get(&dirs[..start]) {
                    node = Some(Rc::clone(hit));
                    break;
                }
                start -= 1;
            }
        } else {
            start = 0;
        }
        let mut node = node.unwrap_or_else(|| Rc::new(self.initial_node()));

        for (i, &l) in dirs.iter().enumerate().skip(start) {
            let (c, g) = step_right(&node.c, &node.g, &node.b_t, l).map_err(|e| match e {
                PatternError::MixedSigns(v) => {
                    PatternError::MixedSigns(v.with_word(word.prefix(i)))
                }
                other => other,
            })?;
            let f = node.f.as_ref().map(|f| {
                f_step(f, &node.c, &node.b_t, l)
                    .expect("F-polynomial division is exact on reachable states")
            });
            let b_t = mutate_matrix(&node.b_t, l)?;
            debug_assert!(is_unimodular(&c), "C-matrix determinant must stay +-1");
            debug_assert!(is_unimodular(&g), "G-matrix determinant must stay +-1");
            node = Rc::new(Node { b_t, c, g, f });
            if self.caching {
                self.cache.insert(dirs[..=i].to_vec(), Rc::clone(&node));
            }
        }
        Ok(node)
    }

    /// The matrix data at the vertex addressed by `word`.
    pub fn tropical_point(&mut self, word: &MutationWord) -> Result<TropicalPoint, PatternError> {
        let node = self.resolve(word)?;
        Ok(TropicalPoint {
            b_t: node.b_t.clone(),
            c: node.c.clone(),
            g: node.g.clone(),
            word: word.clone(),
        })
    }

    /// The full pattern data at the vertex addressed by `word`. The walker
    /// must have been built with F-polynomials enabled.
    pub fn point(&mut self, word: &MutationWord) -> Result<PatternPoint, PatternError> {
        assert!(self.compute_f, "this walker was built matrices-only");
        let node = self.resolve(word)?;
        Ok(PatternPoint {
            b_t: node.b_t.clone(),
            c: node.c.clone(),
            g: node.g.clone(),
            f: node.f.clone().expect("walker computes F-polynomials"),
            word: word.clone(),
        })
    }
}

pub(crate) fn is_unimodular(m: &IntMat) -> bool {
    m.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
}

/// Folds the recurrences over `word` from the initial point
/// `(B, I, I, (1,..,1))` and returns the full data at the endpoint.
pub fn walk(b0: &ExchangeMatrix, word: &MutationWord) -> Result<PatternPoint, PatternError> {
    Walker::new(b0.clone()).point(word)
}

/// Like [`walk`] but skips the F-polynomials.
pub fn walk_matrices(
    b0: &ExchangeMatrix,
    word: &MutationWord,
) -> Result<TropicalPoint, PatternError> {
    Walker::matrices_only(b0.clone()).tropical_point(word)
}
