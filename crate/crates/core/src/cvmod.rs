//! Dimension calculus for CV modules `V(xi)`.
//!
//! For a partition `xi = (xi_0 >= ... >= xi_n > 0)` with `n >= 1` there is a
//! surjection `V(xi) -> V(xi^+)` whose kernel is generated by
//! `(y2 (x) t^n)^{xi_n} v` and carries a filtration by grade- and
//! weight-shifted CV modules. [`verify_filtration`] checks that the
//! dimensions on both sides of the short exact sequence balance exactly.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{
    hat_minus, hat_minus_composites, partitions_of, tilde_minus, xi_minus, xi_plus, CVIndex,
    Partition,
};
use crate::superpop::Generator;

/// `4^(number of parts) * product of parts`; 1 for the empty partition.
pub fn cv_dim(idx: &CVIndex) -> BigUint {
    partition_dim(&idx.xi)
}

fn partition_dim(xi: &Partition) -> BigUint {
    let four_pow = BigUint::from(4u32).pow(xi.n_parts() as u32);
    xi.parts()
        .iter()
        .fold(four_pow, |acc, &p| acc * BigUint::from(p))
}

/// Dimension of the Kac module `K(lambda)`: `4 lambda2`, or 1 when trivial.
pub fn kac_dim(lambda2: u32) -> BigUint {
    if lambda2 == 0 {
        BigUint::one()
    } else {
        BigUint::from(4u32) * lambda2
    }
}

/// Dimension of the fusion product of the Kac modules `K(xi_k)`.
pub fn fusion_dim(xi: &Partition) -> BigUint {
    xi.parts().iter().map(|&p| kac_dim(p)).product()
}

/// Whether the product formula for `dim V(xi)` is established for `xi`, or
/// only known as a lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimStatus {
    Proven,
    LowerBound,
}

pub fn dim_status(xi: &Partition) -> DimStatus {
    let proven = xi.n_parts() <= 1
        || xi.largest() == 1
        || classify(xi).is_ok();
    if proven {
        DimStatus::Proven
    } else {
        DimStatus::LowerBound
    }
}

/// Which kernel filtration applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiltrationCase {
    /// Two equal parts.
    EqualPair,
    /// `xi_{n-1} > xi_n`.
    StrictDrop,
    /// `xi_{n-1} = xi_n >= 2` with `n >= 2`.
    EqualTail,
}

pub fn classify(xi: &Partition) -> Result<FiltrationCase> {
    let p = xi.parts();
    if p.len() < 2 {
        return Err(Error::UncoveredCase(xi.clone()));
    }
    let (prev, last) = (p[p.len() - 2], p[p.len() - 1]);
    match (p.len(), prev > last) {
        (_, true) => Ok(FiltrationCase::StrictDrop),
        (2, false) => Ok(FiltrationCase::EqualPair),
        (_, false) if last >= 2 => Ok(FiltrationCase::EqualTail),
        _ => Err(Error::UncoveredCase(xi.clone())),
    }
}

/// `tau_{grade_shift} V(f_{f_shift}(lambda1, xi))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationQuotient {
    pub grade_shift: u32,
    pub f_shift: i64,
    pub xi: Partition,
}

impl FiltrationQuotient {
    fn new(grade_shift: u32, f_shift: u32, xi: Partition) -> Self {
        Self {
            grade_shift,
            f_shift: f_shift.into(),
            xi,
        }
    }

    /// The CV index of this quotient relative to the module it sits in.
    pub fn index(&self, parent: &CVIndex) -> CVIndex {
        CVIndex::new(parent.lambda1_offset - self.f_shift, self.xi.clone())
    }
}

/// `(generator (x) t^degree)^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KernelGenerator {
    pub generator: Generator,
    pub degree: u32,
    pub power: u32,
}

/// Kernel filtration quotients, top to bottom.
pub fn kernel_filtration(idx: &CVIndex) -> Result<Vec<FiltrationQuotient>> {
    let xi = &idx.xi;
    let case = classify(xi)?;
    let p = xi.parts();
    let n = (p.len() - 1) as u32;
    let last = p[p.len() - 1];
    let hm = hat_minus(xi)?;
    let tm = tilde_minus(xi)?;
    let q = FiltrationQuotient::new;
    let out = match case {
        FiltrationCase::EqualPair => {
            let s = p[0];
            let mut v = vec![q(s, s - 1, hm.clone()), q(s, s, hm)];
            if s > 1 {
                v.push(q(s, s - 1, tm));
            }
            v
        }
        FiltrationCase::StrictDrop => {
            let s = n * last;
            let mut v = vec![
                q(s, last, xi_minus(xi)?),
                q(s, last - 1, hm.clone()),
                q(s, last, hm),
            ];
            if last > 1 {
                v.push(q(s, last - 1, tm));
            }
            v
        }
        FiltrationCase::EqualTail => {
            let s = n * last;
            let (hat_of_hm, minus_of_hm, plus_of_hm) = hat_minus_composites(xi)?;
            vec![
                q(s, last, xi_minus(xi)?),
                q(s, last - 1, plus_of_hm),
                q(s + n - 1, last, minus_of_hm),
                q(s + n - 1, last - 1, hat_of_hm),
                q(s, last, hm),
                q(s, last - 1, tm),
            ]
        }
    };
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub input: CVIndex,
    pub case: FiltrationCase,
    pub xi_plus: Partition,
    pub quotients: Vec<FiltrationQuotient>,
    pub kernel_generator: KernelGenerator,
    pub dims: Vec<BigUint>,
    pub dim: BigUint,
    pub dim_plus: BigUint,
    pub balanced: bool,
}

impl FiltrationReport {
    pub fn kernel_dim(&self) -> BigUint {
        self.dims.iter().sum()
    }
}

pub fn verify_filtration(idx: &CVIndex) -> Result<FiltrationReport> {
    let quotients = kernel_filtration(idx)?;
    let xi_plus = xi_plus(&idx.xi)?;
    let p = idx.xi.parts();
    let kernel_generator = KernelGenerator {
        generator: Generator::Y2,
        degree: (p.len() - 1) as u32,
        power: p[p.len() - 1],
    };
    let dims: Vec<BigUint> = quotients
        .iter()
        .map(|q| cv_dim(&q.index(idx)))
        .collect();
    let dim = cv_dim(idx);
    let dim_plus = partition_dim(&xi_plus);
    let balanced = dim == &dim_plus + dims.iter().sum::<BigUint>();
    Ok(FiltrationReport {
        input: idx.clone(),
        case: classify(&idx.xi)?,
        xi_plus,
        quotients,
        kernel_generator,
        dims,
        dim,
        dim_plus,
        balanced,
    })
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Serialize)]
struct QuotientRecord<'a> {
    shift: u32,
    f_shift: i64,
    lambda1_offset: i64,
    xi: &'a Partition,
    #[serde(serialize_with = "as_decimal")]
    dim: &'a BigUint,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    xi: &'a Partition,
    lambda1_offset: i64,
    case: FiltrationCase,
    xi_plus: &'a Partition,
    #[serde(serialize_with = "as_decimal")]
    dim: &'a BigUint,
    #[serde(serialize_with = "as_decimal")]
    dim_plus: &'a BigUint,
    kernel_generator: KernelGenerator,
    #[serde(serialize_with = "as_decimal")]
    kernel_dim: &'a BigUint,
    quotients: Vec<QuotientRecord<'a>>,
    balanced: bool,
}

impl Serialize for FiltrationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let kernel_dim = self.kernel_dim();
        ReportRecord {
            xi: &self.input.xi,
            lambda1_offset: self.input.lambda1_offset,
            case: self.case,
            xi_plus: &self.xi_plus,
            dim: &self.dim,
            dim_plus: &self.dim_plus,
            kernel_generator: self.kernel_generator,
            kernel_dim: &kernel_dim,
            quotients: self
                .quotients
                .iter()
                .zip(&self.dims)
                .map(|(q, dim)| QuotientRecord {
                    shift: q.grade_shift,
                    f_shift: q.f_shift,
                    lambda1_offset: q.index(&self.input).lambda1_offset,
                    xi: &q.xi,
                    dim,
                })
                .collect(),
            balanced: self.balanced,
        }
        .serialize(serializer)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub max_size: u32,
    pub max_parts: usize,
    pub checked: usize,
    pub balanced: usize,
    pub uncovered: usize,
    /// Covered partitions whose dimensions did not balance.
    pub failures: Vec<Partition>,
}

/// Runs [`verify_filtration`] on every nonempty partition with
/// `size <= max_size` and at most `max_parts` parts.
pub fn verify_filtration_sweep(max_size: u32, max_parts: usize) -> SweepSummary {
    let mut summary = SweepSummary {
        max_size,
        max_parts,
        ..Default::default()
    };
    for size in 1..=max_size {
        for xi in partitions_of(size) {
            if xi.n_parts() > max_parts {
                continue;
            }
            summary.checked += 1;
            match verify_filtration(&CVIndex::new(0, xi.clone())) {
                Ok(r) if r.balanced => summary.balanced += 1,
                Ok(_) => summary.failures.push(xi),
                Err(_) => summary.uncovered += 1,
            }
        }
    }
    summary
}
