//! Graded characters of the local Weyl module with `psi(h2) = n`, computed
//! three ways: the closed q-binomial triple sum, enumeration of basis tuples,
//! and enumeration of super POPs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::qalgebra::{qbinom, GradedCharacter, QPolynomial};
use crate::superpop::{
    enumerate_superpops, superpop_word, tuple_word, word_weight_grade, BasisTuple, PbwWord,
};

/// Strictly increasing sequences of length `len` with entries in `0..limit`.
fn strict_sequences(limit: u32, len: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, limit: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..limit {
            if limit - v < left {
                break;
            }
            cur.push(v);
            rec(v + 1, limit, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, limit, len, &mut Vec::new(), &mut out);
    out
}

/// Weakly increasing sequences of length `len` with entries in `0..=max`.
fn weak_sequences(max: u32, len: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, max: u32, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=max {
            cur.push(v);
            rec(v, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max, len, &mut Vec::new(), &mut out);
    out
}

/// Every element of `B(psi)` for `psi(h2) = n`.
pub fn enumerate_basis_tuples(n: u32) -> Vec<BasisTuple> {
    let mut out = Vec::new();
    for l in 0..=n {
        for c in strict_sequences(n, l) {
            for k in 0..=n - l {
                for b in strict_sequences(n - l, k) {
                    for j in 0..=n - l - k {
                        for a in weak_sequences(n - l - k - j, j) {
                            out.push(BasisTuple {
                                n,
                                a,
                                b: b.clone(),
                                c: c.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn q_power(e: u32) -> QPolynomial {
    QPolynomial::monomial(e, 1)
}

/// The triple q-binomial sum over `(l, k, j)` = numbers of `y3`, `x1`, `y2`
/// factors.
pub fn character_closed(n: u32) -> GradedCharacter {
    let mut out = GradedCharacter::new();
    for l in 0..=n {
        let outer = &q_power(l * l.saturating_sub(1) / 2) * &qbinom(n, l.into());
        for k in 0..=n - l {
            let middle = &outer * &(&q_power(k * k.saturating_sub(1) / 2) * &qbinom(n - l, k.into()));
            for j in 0..=n - l - k {
                let poly = &middle * &qbinom(n - l - k, j.into());
                let du1 = -i64::from(l + j);
                let du2 = i64::from(n) - i64::from(l + k + 2 * j);
                out.add_term(du1, du2, &poly);
            }
        }
    }
    out
}

fn character_of_words(n: u32, words: impl IntoIterator<Item = PbwWord>) -> GradedCharacter {
    let mut out = GradedCharacter::new();
    for w in words {
        let ww = word_weight_grade(&w);
        out.add_monomial(ww.du1, i64::from(n) + ww.du2, ww.grade);
    }
    out
}

pub fn character_from_tuples(n: u32) -> GradedCharacter {
    character_of_words(n, enumerate_basis_tuples(n).iter().map(tuple_word))
}

pub fn character_from_superpops(n: u32) -> GradedCharacter {
    character_of_words(n, enumerate_superpops(n as usize).iter().map(superpop_word))
}

/// Ungraded character: the `n`-th power of
/// `e^(-1,-1) + e^(-1,0) + e^(0,0) + e^(0,1)`, expanded by convolution.
pub fn g_character(n: u32) -> BTreeMap<(i64, i64), BigInt> {
    const FACTOR: [(i64, i64); 4] = [(-1, -1), (-1, 0), (0, 0), (0, 1)];
    let mut acc: BTreeMap<(i64, i64), BigInt> = BTreeMap::from([((0, 0), BigInt::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<(i64, i64), BigInt> = BTreeMap::new();
        for ((u1, u2), c) in &acc {
            for (d1, d2) in FACTOR {
                *next.entry((u1 + d1, u2 + d2)).or_default() += c;
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{specialize_q1, total_dimension};

    fn four_term() -> GradedCharacter {
        let mut c = GradedCharacter::new();
        for (a, b) in [(0, 1), (-1, -1), (0, 0), (-1, 0)] {
            c.add_monomial(a, b, 0);
        }
        c
    }

    #[test]
    fn n0_and_n1() {
        let mut unit = GradedCharacter::new();
        unit.add_monomial(0, 0, 0);
        assert_eq!(enumerate_basis_tuples(0).len(), 1);
        assert_eq!(character_closed(0), unit);
        assert_eq!(character_from_tuples(0), unit);
        assert_eq!(character_from_superpops(0), unit);
        assert_eq!(character_closed(1), four_term());
        assert_eq!(character_from_tuples(1), four_term());
        assert_eq!(g_character(0), specialize_q1(&unit));
        assert_eq!(g_character(1), specialize_q1(&four_term()));
    }

    #[test]
    fn n2_character() {
        let c = character_closed(2);
        assert_eq!(c, character_from_tuples(2));
        assert_eq!(c, character_from_superpops(2));
        assert_eq!(total_dimension(&c), BigInt::from(16));
        // y2[0], y2[1], x1[0] y3[0], x1[0] y3[1]
        assert_eq!(c.get(-1, 0), Some(&QPolynomial::from_coeffs(&[2, 2])));
        assert_eq!(g_character(2), specialize_q1(&c));
    }

    #[test]
    fn dimensions() {
        assert_eq!(enumerate_basis_tuples(6).len(), 4096);
        assert_eq!(total_dimension(&character_from_tuples(3)), BigInt::from(64));
        assert_eq!(total_dimension(&character_closed(5)), BigInt::from(1024));
        assert_eq!(character_from_superpops(5), character_closed(5));
    }

    #[test]
    fn tuples_are_valid_and_distinct() {
        let ts = enumerate_basis_tuples(5);
        let mut seen = std::collections::BTreeSet::new();
        for t in &ts {
            t.validate().unwrap();
            assert!(seen.insert(t.clone()));
        }
    }

    #[test]
    fn sequence_helpers() {
        assert_eq!(strict_sequences(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(strict_sequences(0, 0), vec![Vec::<u32>::new()]);
        assert!(strict_sequences(1, 2).is_empty());
        assert_eq!(weak_sequences(1, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }
}
