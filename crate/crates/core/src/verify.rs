//! Self-check suite behind the `verify` command.
//!
//! Each check reports pass/fail and, on failure, the first counterexample.
//! Checks run on scoped threads; results come back in a fixed order.

use std::thread;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::cvmod::{cv_dim, fusion_dim, kac_dim, verify_filtration_sweep};
use crate::partitions::{col_partial_sum, lemma_bound, minimal_relations, partitions_of, CVIndex, Partition};
use crate::qalgebra::{specialize_q1, total_dimension, GradedCharacter};
use crate::superpop::{
    enumerate_superpops, superpop_to_tuple, superpop_word, tuple_to_superpop, tuple_word, Pop,
    SMatrix, SuperPop,
};
use crate::weylchar::{
    character_closed, character_from_superpops, character_from_tuples, enumerate_basis_tuples,
    g_character,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: u32,
    pub max_size: u32,
    pub max_parts: usize,
    /// Perturbs the closed-form character so the negative path can be exercised.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_size: 12,
            max_parts: 5,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn from_outcome(name: &'static str, outcome: Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => Self {
                name,
                passed: true,
                detail,
                counterexample: None,
            },
            Err(cx) => Self {
                name,
                passed: false,
                detail: "failed".into(),
                counterexample: Some(cx),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

type Outcome = Result<String, String>;
type Job<'a> = (&'static str, Box<dyn FnOnce() -> Outcome + Send + 'a>);

fn four_pow(n: u32) -> BigUint {
    BigUint::from(4u32).pow(n)
}

pub fn check_counting(max_n: u32) -> Outcome {
    for n in 0..=max_n {
        let expect = 1usize << (2 * n);
        let tuples = enumerate_basis_tuples(n).len();
        let pops = enumerate_superpops(n as usize).len();
        if tuples != expect || pops != expect {
            return Err(format!("n={n}: tuples={tuples} superpops={pops} expected {expect}"));
        }
    }
    Ok(format!("|B| = |P| = 4^n for n <= {max_n}"))
}

fn closed(n: u32, cfg: &VerifyConfig) -> GradedCharacter {
    let mut c = character_closed(n);
    if cfg.inject_fault && n == cfg.max_n {
        c.add_monomial(0, 0, 0);
    }
    c
}

pub fn check_three_way(cfg: &VerifyConfig) -> Outcome {
    for n in 0..=cfg.max_n {
        let c = closed(n, cfg);
        if c != character_from_tuples(n) {
            return Err(format!("n={n}: closed form != tuple enumeration"));
        }
        if c != character_from_superpops(n) {
            return Err(format!("n={n}: closed form != super POP enumeration"));
        }
        if total_dimension(&c) != BigInt::from(four_pow(n)) {
            return Err(format!("n={n}: total dimension {}", total_dimension(&c)));
        }
    }
    Ok(format!("closed = tuples = superpops for n <= {}", cfg.max_n))
}

pub fn check_specialization(cfg: &VerifyConfig) -> Outcome {
    for n in 0..=cfg.max_n {
        if specialize_q1(&closed(n, cfg)) != g_character(n) {
            return Err(format!("n={n}: q=1 specialization != ungraded character"));
        }
    }
    Ok(format!("q=1 specialization matches for n <= {}", cfg.max_n))
}

/// Words of the `n = 2` basis, as listed for the worked example.
pub const WORKED_N2_WORDS: [&str; 16] = [
    "y2[0] y2[0]",
    "y2[0]",
    "y2[1]",
    "1",
    "y2[0] x1[0]",
    "x1[0]",
    "y2[0] x1[1]",
    "x1[1]",
    "x1[0] x1[1]",
    "y2[0] y3[0]",
    "y3[0]",
    "x1[0] y3[0]",
    "y2[0] y3[1]",
    "y3[1]",
    "x1[0] y3[1]",
    "y3[0] y3[1]",
];

pub fn check_worked_example() -> Outcome {
    let mut expect: Vec<String> = WORKED_N2_WORDS.iter().map(|s| s.to_string()).collect();
    expect.sort();
    let mut from_pops: Vec<String> = enumerate_superpops(2)
        .iter()
        .map(|p| superpop_word(p).to_string())
        .collect();
    from_pops.sort();
    if from_pops != expect {
        return Err(format!("n=2 super POP words {from_pops:?}"));
    }
    let mut from_tuples: Vec<String> = enumerate_basis_tuples(2)
        .iter()
        .map(|t| tuple_word(t).to_string())
        .collect();
    from_tuples.sort();
    if from_tuples != expect {
        return Err(format!("n=2 tuple words {from_tuples:?}"));
    }
    let a = SMatrix::from_strs("0100", "0000").expect("valid matrix");
    let overlays: [&[u32]; 3] = [&[], &[1], &[1, 1]];
    let words = ["y2[0] y2[0] x1[1]", "y2[0] y2[1] x1[1]", "y2[1] y2[1] x1[1]"];
    for (overlay, want) in overlays.iter().zip(words) {
        let pi = Partition::new(overlay.to_vec()).expect("valid overlay");
        let p = Pop::new(3, 1, pi).and_then(|pop| SuperPop::new(a.clone(), pop));
        let got = p.map(|p| superpop_word(&p).to_string()).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("overlay {overlay:?}: {got} != {want}"));
        }
    }
    Ok("n=2 word list and the three overlay words match".into())
}

pub fn check_bijection(max_n: u32) -> Outcome {
    let mut count = 0usize;
    for n in 0..=max_n {
        for p in enumerate_superpops(n as usize) {
            let t = superpop_to_tuple(&p);
            let back = tuple_to_superpop(&t).map_err(|e| format!("{p:?}: {e}"))?;
            if back != p {
                return Err(format!("super POP roundtrip failed at {p:?}"));
            }
            if superpop_word(&p) != tuple_word(&t) {
                return Err(format!("word mismatch at {p:?}"));
            }
            count += 1;
        }
        for t in enumerate_basis_tuples(n) {
            let p = tuple_to_superpop(&t).map_err(|e| format!("{t:?}: {e}"))?;
            if superpop_to_tuple(&p) != t {
                return Err(format!("tuple roundtrip failed at {t:?}"));
            }
        }
    }
    Ok(format!("{count} objects roundtrip both ways for n <= {max_n}"))
}

pub fn check_cv_dims(max_m: u32) -> Outcome {
    for m in 1..=max_m {
        let ones = Partition::new(vec![1; m as usize]).expect("valid");
        let weyl = total_dimension(&character_closed(m));
        if BigInt::from(cv_dim(&CVIndex::new(0, ones))) != weyl || weyl != BigInt::from(four_pow(m)) {
            return Err(format!("dim V(1^{m}) != 4^{m}"));
        }
        let single = Partition::new(vec![m]).expect("valid");
        if cv_dim(&CVIndex::new(0, single)) != kac_dim(m) || kac_dim(m) != BigUint::from(4 * m) {
            return Err(format!("dim V(({m})) != 4*{m}"));
        }
    }
    let mut count = 0usize;
    for size in 1..=15 {
        for xi in partitions_of(size).into_iter().filter(|p| p.n_parts() <= 6) {
            if fusion_dim(&xi) != cv_dim(&CVIndex::new(0, xi.clone())) {
                return Err(format!("fusion_dim != cv_dim at {xi}"));
            }
            count += 1;
        }
    }
    Ok(format!("boundary identities for m <= {max_m}; fusion = cv on {count} partitions"))
}

pub fn check_filtration(max_size: u32, max_parts: usize) -> Outcome {
    let s = verify_filtration_sweep(max_size, max_parts);
    if let Some(xi) = s.failures.first() {
        return Err(format!("dimension imbalance at xi = {xi}"));
    }
    Ok(format!(
        "{} balanced, {} uncovered of {} partitions",
        s.balanced, s.uncovered, s.checked
    ))
}

pub fn check_thresholds(max_size: u32) -> Outcome {
    let mut count = 0usize;
    for size in 0..=max_size {
        for xi in partitions_of(size) {
            for (r, s) in minimal_relations(&xi) {
                if s != lemma_bound(&xi, r) + 1 {
                    return Err(format!("xi = {xi}, r = {r}: s = {s}"));
                }
            }
            for r in 1..=xi.largest() {
                if lemma_bound(&xi, r) + r != col_partial_sum(&xi, r) {
                    return Err(format!("xi = {xi}, r = {r}: bound != column sum - r"));
                }
            }
            count += 1;
        }
    }
    Ok(format!("threshold identity on {count} partitions of size <= {max_size}"))
}

pub fn check_top_grade(cfg: &VerifyConfig) -> Outcome {
    for n in 0..=cfg.max_n {
        let want = n * n.saturating_sub(1) / 2;
        let got = character_from_tuples(n).max_grade().unwrap_or(0);
        if got != want {
            return Err(format!("n={n}: top grade {got}, expected {want}"));
        }
    }
    Ok(format!("top grade n(n-1)/2 for n <= {}", cfg.max_n))
}

pub fn run(cfg: &VerifyConfig) -> VerifyReport {
    let bijection_n = cfg.max_n.min(6);
    let cv_m = cfg.max_n;
    let checks: Vec<CheckResult> = thread::scope(|scope| {
        let jobs: Vec<Job<'_>> = vec![
            ("counting", Box::new(|| check_counting(cfg.max_n))),
            ("three-way-character", Box::new(|| check_three_way(cfg))),
            ("q1-specialization", Box::new(|| check_specialization(cfg))),
            ("worked-example", Box::new(check_worked_example)),
            ("bijection-roundtrip", Box::new(move || check_bijection(bijection_n))),
            ("cv-dimension", Box::new(move || check_cv_dims(cv_m))),
            (
                "filtration-balance",
                Box::new(|| check_filtration(cfg.max_size, cfg.max_parts)),
            ),
            ("relation-thresholds", Box::new(|| check_thresholds(20))),
            ("top-grade", Box::new(|| check_top_grade(cfg))),
        ];
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(name, job)| (name, scope.spawn(job)))
            .collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let outcome = h.join().unwrap_or_else(|_| Err("check panicked".into()));
                CheckResult::from_outcome(name, outcome)
            })
            .collect()
    });
    VerifyReport {
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = VerifyConfig {
            max_n: 3,
            max_size: 6,
            max_parts: 3,
            inject_fault: false,
        };
        let r = run(&cfg);
        assert!(r.passed, "{r:#?}");
        assert_eq!(r.checks.len(), 9);
    }

    #[test]
    fn injected_fault_is_caught() {
        let cfg = VerifyConfig {
            max_n: 2,
            max_size: 4,
            max_parts: 2,
            inject_fault: true,
        };
        let r = run(&cfg);
        assert!(!r.passed);
        let f = r.first_failure().unwrap();
        assert_eq!(f.name, "three-way-character");
        assert!(f.counterexample.as_deref().unwrap().contains("n=2"));
    }
}
