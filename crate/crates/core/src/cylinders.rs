//! Cylinder geometry of r_a-representations.
//!
//! The rank-k cylinder with base `c₁…c_k` is the set of values of all streams
//! starting with that word. It is the closed interval `[u, u + d]` with
//! `u = Σ cᵢ a⁻ⁱ` and `d = r / (aᵏ (a-1))`. Children of a common parent whose
//! last digits differ by one are adjacent; in a redundant system they overlap
//! in an interval of length `(r - a + 1) / (aᵏ⁺¹ (a-1))`.

use std::fmt;

use serde::Serialize;

use crate::digits::{Digit, DigitWord};
use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::representation::SystemParams;

/// A closed interval `[lo, hi]` with exact endpoints; `lo == hi` is a point.
///
/// The empty set is never an `Interval`; operations that can produce it
/// return `Option<Interval>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: ExactReal,
    hi: ExactReal,
}

impl Interval {
    pub fn new(lo: ExactReal, hi: ExactReal) -> Result<Self> {
        if hi < lo {
            return Err(Error::Inconsistent(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: ExactReal) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &ExactReal {
        &self.lo
    }

    pub fn hi(&self) -> &ExactReal {
        &self.hi
    }

    pub fn length(&self) -> ExactReal {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &ExactReal) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Brute-force intersection from the endpoints.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Merges a family of intervals into maximal disjoint pieces, sorted.
    pub fn union(mut pieces: Vec<Interval>) -> Vec<Interval> {
        pieces.sort_by(|a, b| a.lo.partial_cmp(&b.lo).expect("common field"));
        let mut merged: Vec<Interval> = Vec::with_capacity(pieces.len());
        for piece in pieces {
            match merged.last_mut() {
                Some(last) if piece.lo <= last.hi => {
                    if piece.hi > last.hi {
                        last.hi = piece.hi;
                    }
                }
                _ => merged.push(piece),
            }
        }
        merged
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Length `r / (aᵏ (a-1))` of every rank-`k` cylinder.
pub fn length(sys: &SystemParams, k: usize) -> ExactReal {
    sys.inv_pow(k) * sys.upper()
}

/// Closed-form length `(r - a + 1) / (aᵏ⁺¹ (a-1))` of the overlap of two
/// adjacent children of a rank-`k` cylinder.
pub fn adjacent_overlap_length(sys: &SystemParams, k: usize) -> ExactReal {
    let one = ExactReal::one();
    let r = ExactReal::from(sys.max_digit());
    let a = sys.base();
    (&r - a + &one) * sys.inv_pow(k + 1) / (a - &one)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder<'s> {
    sys: &'s SystemParams,
    base: DigitWord,
}

impl<'s> Cylinder<'s> {
    pub fn new(sys: &'s SystemParams, base: DigitWord) -> Result<Self> {
        base.validate(sys.max_digit())?;
        Ok(Cylinder { sys, base })
    }

    /// The rank-0 cylinder `[0, U]`.
    pub fn whole(sys: &'s SystemParams) -> Self {
        Cylinder {
            sys,
            base: DigitWord::empty(),
        }
    }

    pub fn system(&self) -> &'s SystemParams {
        self.sys
    }

    pub fn base(&self) -> &DigitWord {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    /// Left endpoint `u = Σ cᵢ a⁻ⁱ`.
    pub fn min(&self) -> ExactReal {
        self.sys.word_value(self.base.digits())
    }

    pub fn interval(&self) -> Interval {
        let lo = self.min();
        let hi = &lo + length(self.sys, self.rank());
        Interval { lo, hi }
    }

    pub fn child(&self, digit: Digit) -> Result<Cylinder<'s>> {
        Cylinder::new(self.sys, self.base.concat(&[digit]))
    }

    /// The `r + 1` children `c·0, …, c·r`; their union is `self`.
    pub fn subdivide(&self) -> Vec<Cylinder<'s>> {
        (0..=self.sys.max_digit())
            .map(|d| Cylinder {
                sys: self.sys,
                base: self.base.concat(&[d]),
            })
            .collect()
    }

    /// Intersection of children `c·j` and `c·(j+1)`:
    /// `[Δ_{c[j+1](0)}, Δ_{cj(r)}]`, a single point when `r = a - 1`.
    pub fn adjacent_overlap(&self, j: u32) -> Result<Interval> {
        let r = self.sys.max_digit();
        if j >= r {
            return Err(Error::OverlapIndex { j, r });
        }
        let left_max = self.child(j)?.interval().hi;
        let right_min = self.child(j + 1)?.min();
        Interval::new(right_min, left_max)
    }
}

/// Whether two equal-rank words span the same cylinder, decided by
/// `Σ a⁻ⁱ (αᵢ - βᵢ) = 0` rather than by comparing digits.
pub fn words_equal(sys: &SystemParams, w1: &DigitWord, w2: &DigitWord) -> Result<bool> {
    if w1.len() != w2.len() {
        return Err(Error::LengthMismatch(w1.len(), w2.len()));
    }
    w1.validate(sys.max_digit())?;
    w2.validate(sys.max_digit())?;
    let diff = w1
        .digits()
        .iter()
        .zip(w2.digits())
        .rev()
        .fold(ExactReal::zero(), |acc, (&x, &y)| {
            (acc + ExactReal::integer(i64::from(x) - i64::from(y))) * sys.inv_base()
        });
    Ok(diff.is_zero())
}

/// Which special overlap coincidences a system exhibits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoincidenceReport {
    /// `r = a`: adjacent children meet in a single rank-(k+1) point-cylinder.
    pub integer_coincidence: bool,
    /// `a = 2`: every child has exactly half its parent's length.
    pub half_length: bool,
    /// All `m <= max_m` with `r = aᵐ (a-1) / (aᵐ - 1)`: the adjacent overlap
    /// is itself a cylinder `m` ranks deeper.
    pub property11_m: Vec<u32>,
    /// `r = 1`, `a² = a + 1`: the overlap of `c0` and `c1` is `c011 = c100`.
    pub golden: bool,
    /// Two-symbol system whose adjacent overlap is half a child's length
    /// (`a = 3/2`).
    pub half_overlap_ratio: bool,
}

pub fn classify_coincidences(sys: &SystemParams, max_m: u32) -> CoincidenceReport {
    let one = ExactReal::one();
    let two = ExactReal::integer(2);
    let a = sys.base();
    let r = ExactReal::from(sys.max_digit());

    let property11_m = (1..=max_m)
        .filter(|&m| {
            let am = a.pow(m);
            &r * (&am - &one) == &am * (a - &one)
        })
        .collect();

    let half_overlap_ratio = sys.max_digit() == 1
        && adjacent_overlap_length(sys, 0) * &two == length(sys, 1);

    CoincidenceReport {
        integer_coincidence: *a == r,
        half_length: *a == two,
        property11_m,
        golden: sys.is_golden(),
        half_overlap_ratio,
    }
}
