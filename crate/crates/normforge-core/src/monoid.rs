//! Intersection monoids: monoids with a symmetric reflexive "intersects"
//! relation compatible with multiplication.
//!
//! The compatibility axioms are cancellation-shaped:
//! (1) `x1*y1` meets `x2*y2` only if `x1` meets `x2`, and
//! (2) `x*y1` meets `x*y2` only if `y1` meets `y2`.
//! Three concrete instances live here: the free monoid on `{a,b}` with
//! prefix-compatibility as intersection, exact-rational affine embeddings of
//! the unit interval, and fat dyadic points (letters weighted by rationals,
//! compared after deleting zero-weight positions). A trivial instance (all
//! pairs intersect) rounds out the set for negative tests.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};

/// A monoid whose elements can overlap or be disjoint. Instances are
/// stateless tags, hence the `Clone` requirement.
pub trait IntersectionMonoid: Clone {
    type Elem: Clone + Eq + Ord + std::fmt::Debug;

    /// Stable identifier used by the CLI and in reports.
    fn name(&self) -> &'static str;
    fn unit(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn intersects(&self, x: &Self::Elem, y: &Self::Elem) -> bool;
    /// A disjoint pair, when one exists; `None` marks the trivial case.
    fn nontriviality_witness(&self) -> Option<(Self::Elem, Self::Elem)>;
    fn elem_json(&self, x: &Self::Elem) -> serde_json::Value;
    fn elem_display(&self, x: &Self::Elem) -> String;

    fn disjoint(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        !self.intersects(x, y)
    }
}

/// Convenience constructor for exact rationals.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rational_json(r: &BigRational) -> serde_json::Value {
    serde_json::json!([r.numer().to_string(), r.denom().to_string()])
}

// ---------------------------------------------------------------------------
// Dyadic words
// ---------------------------------------------------------------------------

/// A word over the alphabet `{a, b}`; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyadicWord(String);

impl DyadicWord {
    pub fn new(letters: &str) -> Result<Self> {
        if letters.chars().any(|c| c != 'a' && c != 'b') {
            return Err(Error::InvalidMonoidValue(format!(
                "dyadic word {letters:?} has letters outside {{a,b}}"
            )));
        }
        Ok(DyadicWord(letters.to_string()))
    }

    pub fn empty() -> Self {
        DyadicWord(String::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for DyadicWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            write!(f, "\u{03b5}")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Free concatenation.
pub fn dyadic_mul(w1: &DyadicWord, w2: &DyadicWord) -> DyadicWord {
    DyadicWord(format!("{}{}", w1.0, w2.0))
}

/// Two words intersect when no position up to the shorter length differs;
/// that is, one is a prefix of the other.
pub fn dyadic_intersects(w1: &DyadicWord, w2: &DyadicWord) -> bool {
    w1.0.bytes().zip(w2.0.bytes()).all(|(c1, c2)| c1 == c2)
}

/// The dyadic word monoid.
#[derive(Debug, Clone, Copy, Default)]
pub struct Dyadic;

impl IntersectionMonoid for Dyadic {
    type Elem = DyadicWord;

    fn name(&self) -> &'static str {
        "dyadic"
    }
    fn unit(&self) -> DyadicWord {
        DyadicWord::empty()
    }
    fn mul(&self, x: &DyadicWord, y: &DyadicWord) -> DyadicWord {
        dyadic_mul(x, y)
    }
    fn intersects(&self, x: &DyadicWord, y: &DyadicWord) -> bool {
        dyadic_intersects(x, y)
    }
    fn nontriviality_witness(&self) -> Option<(DyadicWord, DyadicWord)> {
        Some((DyadicWord::new("a").unwrap(), DyadicWord::new("b").unwrap()))
    }
    fn elem_json(&self, x: &DyadicWord) -> serde_json::Value {
        serde_json::Value::String(x.0.clone())
    }
    fn elem_display(&self, x: &DyadicWord) -> String {
        x.to_string()
    }
}

// ---------------------------------------------------------------------------
// Rational affine embeddings of the unit interval
// ---------------------------------------------------------------------------

/// The affine map `z -> a z + b` with `a > 0`, `b >= 0`, `a + b <= 1`,
/// i.e. an embedding of `[0,1]` into itself. All arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalEmbedding {
    a: BigRational,
    b: BigRational,
}

impl RationalEmbedding {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self> {
        if !a.is_positive() || b.is_negative() || &a + &b > BigRational::one() {
            return Err(Error::InvalidMonoidValue(format!(
                "affine map {}z+{} does not embed the unit interval",
                a, b
            )));
        }
        Ok(RationalEmbedding { a, b })
    }

    /// Shorthand over machine integers: `z -> (an/ad) z + (bn/bd)`.
    pub fn from_ints(an: i64, ad: i64, bn: i64, bd: i64) -> Result<Self> {
        RationalEmbedding::new(ratio(an, ad), ratio(bn, bd))
    }

    pub fn identity() -> Self {
        RationalEmbedding {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn scale(&self) -> &BigRational {
        &self.a
    }

    pub fn offset(&self) -> &BigRational {
        &self.b
    }

    /// The open image interval `(b, a + b)` of the interior of `[0,1]`.
    pub fn interval(&self) -> (BigRational, BigRational) {
        (self.b.clone(), &self.a + &self.b)
    }
}

impl std::fmt::Display for RationalEmbedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})z+({})", self.a, self.b)
    }
}

/// Function composition `x . y`: `(a1 a2) z + (a1 b2 + b1)`.
pub fn embedding_mul(x: &RationalEmbedding, y: &RationalEmbedding) -> RationalEmbedding {
    RationalEmbedding {
        a: &x.a * &y.a,
        b: &x.a * &y.b + &x.b,
    }
}

/// Whether the open image intervals overlap.
pub fn embedding_intersects(x: &RationalEmbedding, y: &RationalEmbedding) -> bool {
    let (lo1, hi1) = x.interval();
    let (lo2, hi2) = y.interval();
    lo1.max(lo2) < hi1.min(hi2)
}

/// The monoid of rational embeddings (the unary little-cubes shadow).
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalCubes;

impl IntersectionMonoid for RationalCubes {
    type Elem = RationalEmbedding;

    fn name(&self) -> &'static str {
        "rational-embedding"
    }
    fn unit(&self) -> RationalEmbedding {
        RationalEmbedding::identity()
    }
    fn mul(&self, x: &RationalEmbedding, y: &RationalEmbedding) -> RationalEmbedding {
        embedding_mul(x, y)
    }
    fn intersects(&self, x: &RationalEmbedding, y: &RationalEmbedding) -> bool {
        embedding_intersects(x, y)
    }
    fn nontriviality_witness(&self) -> Option<(RationalEmbedding, RationalEmbedding)> {
        Some((
            RationalEmbedding::from_ints(1, 2, 0, 1).unwrap(),
            RationalEmbedding::from_ints(1, 2, 1, 2).unwrap(),
        ))
    }
    fn elem_json(&self, x: &RationalEmbedding) -> serde_json::Value {
        serde_json::json!({"a": rational_json(&x.a), "b": rational_json(&x.b)})
    }
    fn elem_display(&self, x: &RationalEmbedding) -> String {
        x.to_string()
    }
}

/// The monoid map sending `a` to `z -> z/2` and `b` to `z -> z/2 + 1/2`.
pub fn word_to_embedding(w: &DyadicWord) -> RationalEmbedding {
    let half = RationalEmbedding::from_ints(1, 2, 0, 1).unwrap();
    let upper_half = RationalEmbedding::from_ints(1, 2, 1, 2).unwrap();
    w.as_str().chars().fold(RationalEmbedding::identity(), |acc, c| {
        embedding_mul(&acc, if c == 'a' { &half } else { &upper_half })
    })
}

// ---------------------------------------------------------------------------
// Fat dyadic points
// ---------------------------------------------------------------------------

/// A representative `(letters; weights)` with weights in `[0,1]`.
///
/// The reduced form deletes every position of weight zero; two points are
/// equal exactly when their reduced forms agree, and all comparisons go
/// through reduction.
#[derive(Debug, Clone)]
pub struct FatDyadicPoint {
    letters: String,
    weights: Vec<BigRational>,
}

impl FatDyadicPoint {
    pub fn new(letters: &str, weights: Vec<BigRational>) -> Result<Self> {
        if letters.chars().any(|c| c != 'a' && c != 'b') {
            return Err(Error::InvalidMonoidValue(format!(
                "fat dyadic letters {letters:?} outside {{a,b}}"
            )));
        }
        if letters.len() != weights.len() {
            return Err(Error::InvalidMonoidValue(
                "fat dyadic letters and weights differ in length".into(),
            ));
        }
        if weights
            .iter()
            .any(|t| t.is_negative() || t > &BigRational::one())
        {
            return Err(Error::InvalidMonoidValue(
                "fat dyadic weights must lie in [0,1]".into(),
            ));
        }
        Ok(FatDyadicPoint {
            letters: letters.to_string(),
            weights,
        })
    }

    pub fn empty() -> Self {
        FatDyadicPoint {
            letters: String::new(),
            weights: Vec::new(),
        }
    }

    /// Letters-only point with every weight equal to 1.
    pub fn from_word(w: &DyadicWord) -> Self {
        FatDyadicPoint {
            letters: w.as_str().to_string(),
            weights: vec![BigRational::one(); w.len()],
        }
    }

    pub fn letters(&self) -> &str {
        &self.letters
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    fn reduced_parts(&self) -> (String, Vec<BigRational>) {
        let mut letters = String::new();
        let mut weights = Vec::new();
        for (c, t) in self.letters.chars().zip(&self.weights) {
            if !t.is_zero() {
                letters.push(c);
                weights.push(t.clone());
            }
        }
        (letters, weights)
    }

    pub fn is_reduced(&self) -> bool {
        self.weights.iter().all(|t| !t.is_zero())
    }
}

impl PartialEq for FatDyadicPoint {
    fn eq(&self, other: &Self) -> bool {
        self.reduced_parts() == other.reduced_parts()
    }
}
impl Eq for FatDyadicPoint {}
impl PartialOrd for FatDyadicPoint {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FatDyadicPoint {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.reduced_parts().cmp(&other.reduced_parts())
    }
}

impl std::fmt::Display for FatDyadicPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body = self
            .letters
            .chars()
            .zip(&self.weights)
            .map(|(c, t)| format!("{c}:{t}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "[{body}]")
    }
}

/// Deletes zero-weight positions together with their letters; idempotent.
pub fn fat_reduce(p: &FatDyadicPoint) -> FatDyadicPoint {
    let (letters, weights) = p.reduced_parts();
    FatDyadicPoint { letters, weights }
}

/// The word of the reduced form.
pub fn fat_omega(p: &FatDyadicPoint) -> DyadicWord {
    DyadicWord::new(&p.reduced_parts().0).expect("letters stay in the alphabet")
}

/// Concatenation of representatives, then reduction.
pub fn fat_mul(p: &FatDyadicPoint, q: &FatDyadicPoint) -> FatDyadicPoint {
    let raw = FatDyadicPoint {
        letters: format!("{}{}", p.letters, q.letters),
        weights: p.weights.iter().chain(&q.weights).cloned().collect(),
    };
    fat_reduce(&raw)
}

/// Intersection is decided by the words of the reduced forms.
pub fn fat_intersects(p: &FatDyadicPoint, q: &FatDyadicPoint) -> bool {
    dyadic_intersects(&fat_omega(p), &fat_omega(q))
}

/// The fat dyadic monoid (rational-weight shadow).
#[derive(Debug, Clone, Copy, Default)]
pub struct FatDyadic;

impl IntersectionMonoid for FatDyadic {
    type Elem = FatDyadicPoint;

    fn name(&self) -> &'static str {
        "fat-dyadic"
    }
    fn unit(&self) -> FatDyadicPoint {
        FatDyadicPoint::empty()
    }
    fn mul(&self, x: &FatDyadicPoint, y: &FatDyadicPoint) -> FatDyadicPoint {
        fat_mul(x, y)
    }
    fn intersects(&self, x: &FatDyadicPoint, y: &FatDyadicPoint) -> bool {
        fat_intersects(x, y)
    }
    fn nontriviality_witness(&self) -> Option<(FatDyadicPoint, FatDyadicPoint)> {
        Some((
            FatDyadicPoint::new("a", vec![BigRational::one()]).unwrap(),
            FatDyadicPoint::new("b", vec![BigRational::one()]).unwrap(),
        ))
    }
    fn elem_json(&self, x: &FatDyadicPoint) -> serde_json::Value {
        serde_json::json!({
            "letters": x.letters,
            "weights": x.weights.iter().map(rational_json).collect::<Vec<_>>(),
        })
    }
    fn elem_display(&self, x: &FatDyadicPoint) -> String {
        x.to_string()
    }
}

// ---------------------------------------------------------------------------
// Trivial monoid
// ---------------------------------------------------------------------------

/// The one-point monoid where everything intersects; it has no disjointness
/// witness, so constructions requiring disjoint families reject it.
#[derive(Debug, Clone, Copy, Default)]
pub struct Trivial;

impl IntersectionMonoid for Trivial {
    type Elem = ();

    fn name(&self) -> &'static str {
        "trivial"
    }
    fn unit(&self) {}
    fn mul(&self, _: &(), _: &()) {}
    fn intersects(&self, _: &(), _: &()) -> bool {
        true
    }
    fn nontriviality_witness(&self) -> Option<((), ())> {
        None
    }
    fn elem_json(&self, _: &()) -> serde_json::Value {
        serde_json::Value::Null
    }
    fn elem_display(&self, _: &()) -> String {
        "*".to_string()
    }
}

// ---------------------------------------------------------------------------
// Disjoint families
// ---------------------------------------------------------------------------

/// A pairwise-disjoint family of `n` elements, built from the nontriviality
/// witness by repeatedly splitting the last member: replace `x` by `x*w1`
/// and `x*w2`. Errors on the trivial monoid.
pub fn disjoint_family<M: IntersectionMonoid>(monoid: &M, n: usize) -> Result<Vec<M::Elem>> {
    let (w1, w2) = monoid.nontriviality_witness().ok_or(Error::TrivialMonoid)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut family = vec![w1.clone()];
    if n >= 2 {
        family.push(w2.clone());
    }
    while family.len() < n {
        let last = family.pop().expect("family is nonempty");
        family.push(monoid.mul(&last, &w1));
        family.push(monoid.mul(&last, &w2));
    }
    debug_assert!(family
        .iter()
        .enumerate()
        .all(|(i, x)| family[..i].iter().all(|y| monoid.disjoint(x, y))));
    Ok(family)
}
