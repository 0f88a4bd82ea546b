//! Permutations in one-line notation with operadic partial composition.
//!
//! Permutations are 1-indexed: a permutation of degree `n` is a bijection on
//! `{1, ..., n}`. Composition is function composition, `(s * t)(k) = s(t(k))`.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A permutation of `{1, ..., n}` stored as its one-line image.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line image `[s(1), ..., s(n)]`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{image:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// The transposition of `a` and `b` inside degree `n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::IndexOutOfRange(format!(
                "transposition ({a} {b}) does not fit degree {n}"
            )));
        }
        let mut image: Vec<usize> = (1..=n).collect();
        image.swap(a - 1, b - 1);
        Ok(Permutation { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Evaluates the permutation at `k` (1-indexed).
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    /// Function composition: `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            image: (1..=self.degree())
                .map(|k| self.apply(other.apply(k)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Permutation { image }
    }

    /// All permutations of degree `n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        assert!(n <= 8, "refusing to enumerate more than 8! permutations");
        let mut out = Vec::new();
        let mut image: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                image: image.clone(),
            });
            if !next_lex(&mut image) {
                break;
            }
        }
        out
    }

    /// Partial composition `self o_i other`: expand position `i` of `self`
    /// into a block of `other.degree()` values ordered by `other`.
    pub fn partial_compose(&self, i: usize, other: &Permutation) -> Result<Permutation> {
        perm_partial_composition(self, i, other)
    }

    /// Cycle notation, e.g. `(1 2 3)(4 5)`; the identity prints as `e`.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut k = self.apply(start);
            while k != start {
                seen[k] = true;
                cyc.push(k);
                k = self.apply(k);
            }
            out.push('(');
            out.push_str(
                &cyc.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(""),
            );
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]",
            self.image
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

fn next_lex(image: &mut [usize]) -> bool {
    let n = image.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && image[i - 1] >= image[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while image[j] <= image[i - 1] {
        j -= 1;
    }
    image.swap(i - 1, j);
    image[i..].reverse();
    true
}

/// Partial composition of permutations: the degree-`n` permutation `sigma`
/// with position `i` expanded into a block of `m = tau.degree()` positions
/// ordered internally by `tau`. Output degree is `n + m - 1`.
///
/// For `k` outside the block the value is `sigma(collapse(k))`, bumped by
/// `m - 1` whenever it lands at or above `sigma(i)`; inside the block it is
/// `tau(k - i + 1) + sigma(i) - 1`.
pub fn perm_partial_composition(
    sigma: &Permutation,
    i: usize,
    tau: &Permutation,
) -> Result<Permutation> {
    let n = sigma.degree();
    let m = tau.degree();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!(
            "composition position {i} not in 1..={n}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidPermutation(
            "no degree-0 permutations".to_string(),
        ));
    }
    let si = sigma.apply(i);
    let mut image = Vec::with_capacity(n + m - 1);
    for k in 1..=(n + m - 1) {
        let v = if k < i {
            let sk = sigma.apply(k);
            if sk < si {
                sk
            } else {
                sk + m - 1
            }
        } else if k > i + m - 1 {
            let sk = sigma.apply(k - m + 1);
            if sk < si {
                sk
            } else {
                sk + m - 1
            }
        } else {
            tau.apply(k - i + 1) + si - 1
        };
        image.push(v);
    }
    Permutation::from_image(image)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: rank the composite keys
    /// `(sigma(collapse(k)), tau(shift(k)) or 0)` instead of evaluating the
    /// case-by-case formula.
    fn block_substitution_oracle(sigma: &Permutation, i: usize, tau: &Permutation) -> Permutation {
        let n = sigma.degree();
        let m = tau.degree();
        let keys: Vec<(usize, usize)> = (1..=(n + m - 1))
            .map(|k| {
                let c = if k < i {
                    k
                } else if k < i + m {
                    i
                } else {
                    k - m + 1
                };
                let inner = if (i..i + m).contains(&k) {
                    tau.apply(k - i + 1)
                } else {
                    0
                };
                (sigma.apply(c), inner)
            })
            .collect();
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by_key(|&p| keys[p]);
        let mut image = vec![0; keys.len()];
        for (rank, &p) in order.iter().enumerate() {
            image[p] = rank + 1;
        }
        Permutation::from_image(image).unwrap()
    }

    #[test]
    fn identity_compositions() {
        for n in 1..=4 {
            for m in 1..=4 {
                for i in 1..=n {
                    let got = perm_partial_composition(
                        &Permutation::identity(n),
                        i,
                        &Permutation::identity(m),
                    )
                    .unwrap();
                    assert_eq!(got, Permutation::identity(n + m - 1));
                }
            }
        }
    }

    #[test]
    fn swap_then_block_examples() {
        let swap2 = Permutation::transposition(2, 1, 2).unwrap();
        let id2 = Permutation::identity(2);
        // expanding position 1 of the swap pushes the block above the fixed point
        let got = perm_partial_composition(&swap2, 1, &id2).unwrap();
        assert_eq!(got.one_line(), &[2, 3, 1]);
        // expanding position 2 of the identity with a swap flips only the block
        let got = perm_partial_composition(&id2, 2, &swap2).unwrap();
        assert_eq!(got.one_line(), &[1, 3, 2]);
    }

    #[test]
    fn matches_block_substitution_oracle_exhaustively() {
        for n in 1..=3 {
            for m in 1..=3 {
                for sigma in Permutation::all(n) {
                    for tau in Permutation::all(m) {
                        for i in 1..=n {
                            let got = perm_partial_composition(&sigma, i, &tau).unwrap();
                            let want = block_substitution_oracle(&sigma, i, &tau);
                            assert_eq!(got, want, "sigma={sigma} i={i} tau={tau}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_of_composition() {
        for sigma in Permutation::all(3) {
            for tau in Permutation::all(2) {
                for i in 1..=3 {
                    let lhs = perm_partial_composition(&sigma, i, &tau)
                        .unwrap()
                        .inverse();
                    let rhs = perm_partial_composition(
                        &sigma.inverse(),
                        sigma.apply(i),
                        &tau.inverse(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn associativity_shapes() {
        // (x o_i y) o_j z in both nested arrangements, exhaustively at degree <= 3
        let perms2 = Permutation::all(2);
        let perms3 = Permutation::all(3);
        for x in &perms3 {
            for y in &perms2 {
                for z in &perms2 {
                    let n = 3;
                    let m = 2;
                    for i in 1..=n {
                        // parallel slots: j < i composes into x directly
                        for j in 1..i {
                            let lhs = x
                                .partial_compose(i, y)
                                .unwrap()
                                .partial_compose(j, z)
                                .unwrap();
                            let rhs = x
                                .partial_compose(j, z)
                                .unwrap()
                                .partial_compose(i + z.degree() - 1, y)
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                        // nested slots: j inside the block composes into y
                        for j in i..i + m {
                            let lhs = x
                                .partial_compose(i, y)
                                .unwrap()
                                .partial_compose(j, z)
                                .unwrap();
                            let rhs = x
                                .partial_compose(i, &y.partial_compose(j - i + 1, z).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                        // parallel slots on the right of the block
                        for j in (i + m)..(n + m) {
                            let lhs = x
                                .partial_compose(i, y)
                                .unwrap()
                                .partial_compose(j, z)
                                .unwrap();
                            let rhs = x
                                .partial_compose(j - m + 1, z)
                                .unwrap()
                                .partial_compose(i, y)
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cycle_notation_names() {
        assert_eq!(Permutation::identity(3).cycle_notation(), "e");
        assert_eq!(
            Permutation::transposition(3, 1, 2).unwrap().cycle_notation(),
            "(12)"
        );
        assert_eq!(
            Permutation::from_image(vec![2, 3, 1]).unwrap().cycle_notation(),
            "(123)"
        );
    }
}
