//! Super partition-overlaid patterns, basis tuples, and the bijection
//! between them.
//!
//! A super POP pairs a `2 x n` zero-one matrix from `S_n` (first row marks
//! odd `x1` factors, second row marks odd `y3` factors) with a POP for
//! `sl2`: a middle entry `m` and a partition overlay fitting the
//! `(N - m) x m` rectangle, where `N = n - s(A)`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{partitions_in_box, Partition};

/// Zero-one `2 x n` matrix satisfying `a_1k = 0` for `k > n - |row2|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SMatrix {
    row1: Vec<bool>,
    row2: Vec<bool>,
}

impl SMatrix {
    pub fn new(row1: Vec<bool>, row2: Vec<bool>) -> Result<Self> {
        if row1.len() != row2.len() {
            return Err(Error::InvalidSuperPop("rows differ in length".into()));
        }
        let n = row1.len();
        let l = row2.iter().filter(|&&b| b).count();
        if row1[n - l..].iter().any(|&b| b) {
            return Err(Error::InvalidSuperPop(format!(
                "row1 has a one past column {}",
                n - l
            )));
        }
        Ok(Self { row1, row2 })
    }

    /// Parses rows written as `"0100"`.
    pub fn from_strs(row1: &str, row2: &str) -> Result<Self> {
        Self::new(parse_bits(row1)?, parse_bits(row2)?)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            row1: vec![false; n],
            row2: vec![false; n],
        }
    }

    pub fn n(&self) -> usize {
        self.row1.len()
    }

    pub fn row1(&self) -> &[bool] {
        &self.row1
    }

    pub fn row2(&self) -> &[bool] {
        &self.row2
    }

    /// Sum of all entries.
    pub fn weight(&self) -> usize {
        self.row1.iter().chain(&self.row2).filter(|&&b| b).count()
    }

    pub fn row1_string(&self) -> String {
        bits_string(&self.row1)
    }

    pub fn row2_string(&self) -> String {
        bits_string(&self.row2)
    }

    /// Zero-based column indices of the ones in a row.
    fn ones(row: &[bool]) -> Vec<u32> {
        row.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j as u32)
            .collect()
    }
}

fn parse_bits(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidSuperPop(format!("bad matrix row {s:?}"))),
        })
        .collect()
}

fn bits_string(row: &[bool]) -> String {
    row.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// GT pattern `(N; m; 0)` with an overlay fitting the `(N - m) x m` box.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pop {
    bound: u32,
    m: u32,
    overlay: Partition,
}

impl Pop {
    pub fn new(bound: u32, m: u32, overlay: Partition) -> Result<Self> {
        if m > bound {
            return Err(Error::InvalidSuperPop(format!("m = {m} exceeds bound {bound}")));
        }
        if overlay.n_parts() as u32 > bound - m || overlay.largest() > m {
            return Err(Error::InvalidSuperPop(format!(
                "overlay {overlay} does not fit a {} x {m} box",
                bound - m
            )));
        }
        Ok(Self { bound, m, overlay })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn overlay(&self) -> &Partition {
        &self.overlay
    }

    /// Number of overlay rows equal to `k`; for `k = 0` the count of empty
    /// rows of the `N - m` row box.
    pub fn multiplicity(&self, k: u32) -> u32 {
        if k == 0 {
            self.bound - self.m - self.overlay.n_parts() as u32
        } else {
            self.overlay.parts().iter().filter(|&&p| p == k).count() as u32
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuperPop {
    matrix: SMatrix,
    pop: Pop,
}

impl SuperPop {
    pub fn new(matrix: SMatrix, pop: Pop) -> Result<Self> {
        let expected = (matrix.n() - matrix.weight()) as u32;
        if pop.bound() != expected {
            return Err(Error::InvalidSuperPop(format!(
                "POP bound {} but n - s(A) = {expected}",
                pop.bound()
            )));
        }
        Ok(Self { matrix, pop })
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn matrix(&self) -> &SMatrix {
        &self.matrix
    }

    pub fn pop(&self) -> &Pop {
        &self.pop
    }
}

#[derive(Serialize, Deserialize)]
struct SuperPopRecord {
    n: usize,
    row1: String,
    row2: String,
    m: u32,
    overlay: Partition,
}

impl Serialize for SuperPop {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SuperPopRecord {
            n: self.n(),
            row1: self.matrix.row1_string(),
            row2: self.matrix.row2_string(),
            m: self.pop.m,
            overlay: self.pop.overlay.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperPop {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = SuperPopRecord::deserialize(deserializer)?;
        let matrix = SMatrix::from_strs(&rec.row1, &rec.row2).map_err(D::Error::custom)?;
        if matrix.n() != rec.n {
            return Err(D::Error::custom("row length differs from n"));
        }
        let bound = (matrix.n() - matrix.weight()) as u32;
        let pop = Pop::new(bound, rec.m, rec.overlay).map_err(D::Error::custom)?;
        SuperPop::new(matrix, pop).map_err(D::Error::custom)
    }
}

/// Degree data `(a; b; c)` of a monomial basis vector of `W(psi)` with
/// `psi(h2) = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisTuple {
    pub n: u32,
    /// `y2` degrees, weakly increasing.
    pub a: Vec<u32>,
    /// `x1` degrees, strictly increasing.
    pub b: Vec<u32>,
    /// `y3` degrees, strictly increasing.
    pub c: Vec<u32>,
}

impl BasisTuple {
    pub fn new(n: u32, a: Vec<u32>, b: Vec<u32>, c: Vec<u32>) -> Result<Self> {
        let t = Self { n, a, b, c };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidTuple(format!("{what} in {self:?}")));
        let (j, k, l) = (self.a.len() as u32, self.b.len() as u32, self.c.len() as u32);
        if l + k + j > self.n {
            return bad("too many factors");
        }
        let strictly = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
        if !strictly(&self.c) || self.c.iter().any(|&c| c > self.n - 1) {
            return bad("c not strictly increasing within 0..n-1");
        }
        if !strictly(&self.b) || self.b.iter().any(|&b| b + l + 1 > self.n) {
            return bad("b not strictly increasing within 0..n-l-1");
        }
        let weakly = self.a.windows(2).all(|w| w[0] <= w[1]);
        if !weakly || self.a.iter().any(|&a| a > self.n - l - k - j) {
            return bad("a not weakly increasing within 0..n-l-k-j");
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "y2")]
    Y2,
    #[serde(rename = "x1")]
    X1,
    #[serde(rename = "y3")]
    Y3,
}

/// Values of the positive roots on `(h1, h2)`.
pub const ALPHA1: (i64, i64) = (0, -1);
pub const ALPHA2: (i64, i64) = (1, 2);
pub const ALPHA3: (i64, i64) = (1, 1);

impl Generator {
    /// `(h1, h2)`-weight: `y2` is `-alpha2`, `x1` is `+alpha1`, `y3` is `-alpha3`.
    pub fn weight(self) -> (i64, i64) {
        match self {
            Generator::Y2 => (-ALPHA2.0, -ALPHA2.1),
            Generator::X1 => ALPHA1,
            Generator::Y3 => (-ALPHA3.0, -ALPHA3.1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Y2 => "y2",
            Generator::X1 => "x1",
            Generator::Y3 => "y3",
        }
    }
}

/// Canonically ordered monomial: `y2` block, then `x1`, then `y3`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PbwWord {
    factors: Vec<(Generator, u32)>,
}

impl PbwWord {
    fn from_blocks(y2: &[u32], x1: &[u32], y3: &[u32]) -> Self {
        let factors = y2
            .iter()
            .map(|&d| (Generator::Y2, d))
            .chain(x1.iter().map(|&d| (Generator::X1, d)))
            .chain(y3.iter().map(|&d| (Generator::Y3, d)))
            .collect();
        Self { factors }
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Checks block order, degree monotonicity, and that odd factors repeat
    /// no degree.
    pub fn is_canonical(&self) -> bool {
        let rank = |g: Generator| g as u8;
        self.factors.windows(2).all(|w| {
            let ((g0, d0), (g1, d1)) = (w[0], w[1]);
            match rank(g0).cmp(&rank(g1)) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal if g0 == Generator::Y2 => d0 <= d1,
                std::cmp::Ordering::Equal => d0 < d1,
            }
        })
    }
}

/// `y2[0] y2[1] x1[1]`; the empty word prints as `1`.
impl fmt::Display for PbwWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, d)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}[{d}]", g.name())?;
        }
        Ok(())
    }
}

/// Weight offset and grade of a word applied to the highest weight vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WordWeight {
    pub du1: i64,
    /// Offset from `n`; the absolute h2-weight is `n + du2`.
    pub du2: i64,
    pub grade: u32,
}

pub fn word_weight_grade(w: &PbwWord) -> WordWeight {
    w.factors.iter().fold(
        WordWeight {
            du1: 0,
            du2: 0,
            grade: 0,
        },
        |acc, &(g, d)| {
            let (h1, h2) = g.weight();
            WordWeight {
                du1: acc.du1 + h1,
                du2: acc.du2 + h2,
                grade: acc.grade + d,
            }
        },
    )
}

/// All of `S_n`, ordered by second row then first row (as bitmasks).
pub fn enumerate_smatrices(n: usize) -> Vec<SMatrix> {
    assert!(n < 64, "n = {n} too large for matrix enumeration");
    let bits = |mask: u64, len: usize| -> Vec<bool> {
        (0..n).map(|j| j < len && mask >> j & 1 == 1).collect()
    };
    let mut out = Vec::new();
    for row2 in 0..1u64 << n {
        let l = row2.count_ones() as usize;
        let free = n - l;
        for row1 in 0..1u64 << free {
            out.push(SMatrix {
                row1: bits(row1, free),
                row2: bits(row2, n),
            });
        }
    }
    out
}

/// All POPs with bounding sequence `bound >= 0`.
pub fn enumerate_pops(bound: u32) -> Vec<Pop> {
    (0..=bound)
        .flat_map(|m| {
            partitions_in_box(bound - m, m)
                .into_iter()
                .map(move |overlay| Pop { bound, m, overlay })
        })
        .collect()
}

pub fn enumerate_superpops(n: usize) -> Vec<SuperPop> {
    enumerate_smatrices(n)
        .into_iter()
        .flat_map(|matrix| {
            let bound = (n - matrix.weight()) as u32;
            enumerate_pops(bound).into_iter().map(move |pop| SuperPop {
                matrix: matrix.clone(),
                pop,
            })
        })
        .collect()
}

pub fn superpop_to_tuple(p: &SuperPop) -> BasisTuple {
    let c = SMatrix::ones(&p.matrix.row2);
    let b = SMatrix::ones(&p.matrix.row1);
    let j = (p.pop.bound - p.pop.m) as usize;
    let parts = p.pop.overlay.parts();
    let mut a = vec![0; j - parts.len()];
    a.extend(parts.iter().rev());
    BasisTuple {
        n: p.n() as u32,
        a,
        b,
        c,
    }
}

pub fn tuple_to_superpop(t: &BasisTuple) -> Result<SuperPop> {
    t.validate()?;
    let n = t.n as usize;
    let mut row1 = vec![false; n];
    let mut row2 = vec![false; n];
    for &b in &t.b {
        row1[b as usize] = true;
    }
    for &c in &t.c {
        row2[c as usize] = true;
    }
    let bound = t.n - (t.b.len() + t.c.len()) as u32;
    let m = bound - t.a.len() as u32;
    let overlay = Partition::from_unsorted(t.a.clone());
    SuperPop::new(SMatrix::new(row1, row2)?, Pop::new(bound, m, overlay)?)
}

/// `rho_P^{alpha2} . x_A`: `y2` factors read from the overlay row
/// multiplicities, odd factors from the matrix columns.
pub fn superpop_word(p: &SuperPop) -> PbwWord {
    let pop = &p.pop;
    let y2: Vec<u32> = (0..=pop.m)
        .flat_map(|k| std::iter::repeat_n(k, pop.multiplicity(k) as usize))
        .collect();
    let x1 = SMatrix::ones(&p.matrix.row1);
    let y3 = SMatrix::ones(&p.matrix.row2);
    PbwWord::from_blocks(&y2, &x1, &y3)
}

pub fn tuple_word(t: &BasisTuple) -> PbwWord {
    PbwWord::from_blocks(&t.a, &t.b, &t.c)
}
