//! The digit-transplant function `f`.
//!
//! `f` reads the classical base-`(r+1)` digits of `x ∈ [0, 1]` and
//! re-evaluates the same digit sequence in the `r_a` system:
//! `f(Δ^{r+1}_{α₁α₂…}) = Δ^{r_a}_{α₁α₂…}`. Numbers with two base-`(r+1)`
//! expansions are read through the terminating `(0)`-tail one, which makes
//! `f` right-continuous with a jump from the left at every such point unless
//! `a = r + 1`.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::cylinders::length;
use crate::digits::{Digit, DigitStream, DigitWord};
use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::representation::SystemParams;

/// Upper bound on `(r+1)^depth` for [`sample_graph`].
pub const MAX_GRAPH_POINTS: u64 = 1 << 18;

/// An argument of `f`: a canonical base-`(r+1)` digit stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourcePoint<'s> {
    sys: &'s SystemParams,
    digits: DigitStream,
}

impl<'s> SourcePoint<'s> {
    /// Rejects the `(r)`-tail form of an (r+1)-binary point. The purely
    /// periodic `(r)`, i.e. `x = 1`, is admitted.
    pub fn new(sys: &'s SystemParams, digits: DigitStream) -> Result<Self> {
        let r = sys.max_digit();
        digits.validate(r)?;
        if digits.period() == [r] && !digits.preperiod().is_empty() {
            return Err(Error::NonCanonicalSource(digits.to_literal(r)));
        }
        Ok(SourcePoint { sys, digits })
    }

    /// The canonical base-`(r+1)` stream of a rational `x ∈ [0, 1]`, found by
    /// long division with remainder-cycle detection.
    pub fn from_rational(sys: &'s SystemParams, x: &BigRational) -> Result<Self> {
        let r = sys.max_digit();
        if x.is_negative() || x > &BigRational::one() {
            return Err(Error::OutOfInterval {
                x: x.to_string(),
                upper: "1".into(),
            });
        }
        if x.is_one() {
            return Self::new(sys, DigitStream::purely_periodic(&[r])?);
        }
        let b = BigInt::from(r + 1);
        let q = x.denom();
        let mut rem = x.numer().clone();
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        let mut digits = Vec::new();
        let cycle_start = loop {
            if let Some(&i) = seen.get(&rem) {
                break i;
            }
            seen.insert(rem.clone(), digits.len());
            let (d, next) = (&rem * &b).div_rem(q);
            digits.push(d.to_u32().expect("digit below base"));
            rem = next;
        };
        let period = digits.split_off(cycle_start);
        Self::new(sys, DigitStream::new(digits, period)?)
    }

    pub fn digits(&self) -> &DigitStream {
        &self.digits
    }

    /// `x = Σ αₙ (r+1)⁻ⁿ` as an exact rational.
    pub fn value(&self) -> BigRational {
        classical_value(self.sys.max_digit(), &self.digits)
    }

    /// A point with a second, `(r)`-tail, base-`(r+1)` expansion.
    pub fn is_binary(&self) -> bool {
        self.digits.is_terminating() && !self.digits.preperiod().is_empty()
    }

    /// The `(r)`-tail twin of a binary point: `…[αₖ-1](r)`.
    pub fn left_twin(&self) -> Option<DigitStream> {
        if !self.is_binary() {
            return None;
        }
        let pre = self.digits.preperiod();
        let mut twin = pre.to_vec();
        let last = twin.len() - 1;
        twin[last] -= 1;
        Some(DigitStream::new(twin, vec![self.sys.max_digit()]).expect("nonempty period"))
    }

    /// `f(x)`: the same digits read in the `r_a` system.
    pub fn f(&self) -> ExactReal {
        self.sys.stream_value(&self.digits)
    }

    /// `lim_{t→x⁻} f(t)`; equals `f(x)` except at binary points.
    pub fn f_left(&self) -> ExactReal {
        match self.left_twin() {
            Some(twin) => self.sys.stream_value(&twin),
            None => self.f(),
        }
    }
}

fn classical_value(r: u32, s: &DigitStream) -> BigRational {
    let classical = SystemParams::classical(r + 1).expect("classical system is valid");
    classical
        .stream_value(s)
        .as_rational()
        .cloned()
        .expect("rational base gives rational values")
}

pub fn f_eval(p: &SourcePoint<'_>) -> ExactReal {
    p.f()
}

/// Left limit minus value of `f` at `Δ^{r+1}_{α₁…αₖ(0)}`, where `prefix` is
/// `α₁…αₖ` (so `k = prefix.len()` and `αₖ >= 1`).
///
/// Computed from the two one-sided evaluations; the result is
/// `(r + 1 - a) / (aᵏ (a - 1))`, zero exactly when `a = r + 1`.
pub fn jump_at_binary(sys: &SystemParams, prefix: &DigitWord, k: usize) -> Result<ExactReal> {
    prefix.validate(sys.max_digit())?;
    if prefix.len() != k {
        return Err(Error::NoBinaryPoint {
            k,
            reason: format!("prefix has length {}, expected {k}", prefix.len()),
        });
    }
    match prefix.digits().last() {
        None => {
            return Err(Error::NoBinaryPoint {
                k,
                reason: "empty prefix".into(),
            })
        }
        Some(0) => {
            return Err(Error::NoBinaryPoint {
                k,
                reason: "digit at position k is 0".into(),
            })
        }
        Some(_) => {}
    }
    let point = SourcePoint::new(sys, DigitStream::terminating(prefix.digits()))?;
    Ok(point.f_left() - point.f())
}

/// Default prefix `0…01` of length `k` for a jump query.
pub fn default_jump_prefix(k: usize) -> DigitWord {
    let mut digits = vec![0; k.saturating_sub(1)];
    digits.push(1);
    DigitWord::new(digits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum WitnessCase {
    /// `1 < a <= r`: `f(x₂)` exceeds both neighbours.
    LowBase,
    /// `r < a < r + 1`: `f` rises then falls; `n` is the length of the run of
    /// `r` digits in `x₂`.
    NearClassical { n: usize },
}

/// Three points `x₁ < x₂ < x₃` in one source cylinder on which `f` is not
/// monotone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessTriple {
    pub case: WitnessCase,
    pub points: [DigitStream; 3],
    pub xs: [BigRational; 3],
    pub fs: [ExactReal; 3],
}

impl WitnessTriple {
    /// Checks `x₁ < x₂ < x₃` and the sign pattern of the case, exactly.
    pub fn is_valid(&self) -> bool {
        let [x1, x2, x3] = &self.xs;
        let [f1, f2, f3] = &self.fs;
        let ordered = x1 < x2 && x2 < x3;
        let signs = match self.case {
            WitnessCase::LowBase => f2 > f1 && f2 > f3,
            WitnessCase::NearClassical { .. } => f2 > f1 && f3 < f2,
        };
        ordered && signs
    }
}

/// Least `n >= 1` with `r / (aⁿ⁺¹ (a-1)) < (r - a + 1) / (a (a-1))`.
pub fn near_classical_run_length(sys: &SystemParams) -> usize {
    let one = ExactReal::one();
    let a = sys.base();
    let r = ExactReal::from(sys.max_digit());
    let a_minus_one = a - &one;
    let threshold = (&r - a + &one) / (a * &a_minus_one);
    let mut n = 1;
    while (&r * sys.inv_pow(n + 1) / &a_minus_one) >= threshold {
        n += 1;
    }
    n
}

/// Preperiod and period appended to the cylinder base.
type Tail = (Vec<Digit>, Vec<Digit>);

/// A non-monotonicity witness inside the source cylinder `base`.
pub fn nonmonotone_witness(sys: &SystemParams, base: &DigitWord) -> Result<WitnessTriple> {
    let r = sys.max_digit();
    base.validate(r)?;
    let a = sys.base();
    let r_exact = ExactReal::from(r);
    let (case, tails): (WitnessCase, [Tail; 3]) = match a.try_cmp(&r_exact)? {
        Ordering::Less | Ordering::Equal => (
            WitnessCase::LowBase,
            [
                (vec![], vec![0]),
                (vec![r, 0, r], vec![r - 1]),
                (vec![r, 1], vec![0]),
            ],
        ),
        Ordering::Greater if sys.is_classical() => return Err(Error::MonotoneIdentity),
        Ordering::Greater => {
            let n = near_classical_run_length(sys);
            let mut run = vec![0];
            run.extend(std::iter::repeat_n(r, n));
            (
                WitnessCase::NearClassical { n },
                [(vec![], vec![0]), (run, vec![0]), (vec![1], vec![0])],
            )
        }
    };
    let points = tails.map(|(pre, per)| {
        DigitStream::new(base.concat(&pre).digits().to_vec(), per).expect("nonempty period")
    });
    let sources = points
        .iter()
        .map(|p| SourcePoint::new(sys, p.clone()))
        .collect::<Result<Vec<_>>>()?;
    let witness = WitnessTriple {
        case,
        xs: [0, 1, 2].map(|i| sources[i].value()),
        fs: [0, 1, 2].map(|i| sources[i].f()),
        points,
    };
    if !witness.is_valid() {
        return Err(Error::Inconsistent(format!(
            "witness in cylinder {} failed its exact check",
            base.to_literal(r)
        )));
    }
    Ok(witness)
}

/// `Vₙ = Σ_{|w| = n} |Δ^{r_a}_w| = (r+1)ⁿ · r / (aⁿ (a-1))`, a lower bound for
/// the total variation of `f`.
pub fn variation_lower_bound(sys: &SystemParams, n: usize) -> ExactReal {
    let words = ExactReal::from(sys.max_digit() + 1).pow(n as u32);
    words * length(sys, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `f(x)` itself.
    Value,
    /// The left limit `f(x⁻)` at a binary point.
    Left,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Value => "value",
            Side::Left => "left",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRow {
    pub x: BigRational,
    pub digits: DigitStream,
    pub y: ExactReal,
    pub side: Side,
}

/// `f` at every `x = m / (r+1)^depth`, sorted by `x`; every interior grid
/// point is binary and also gets a `left` row carrying `f(x⁻)`, listed first.
pub fn sample_graph(sys: &SystemParams, depth: usize) -> Result<Vec<GraphRow>> {
    let r = sys.max_digit();
    let b = u64::from(r) + 1;
    let total = u32::try_from(depth)
        .ok()
        .and_then(|d| b.checked_pow(d))
        .filter(|&t| t <= MAX_GRAPH_POINTS)
        .ok_or(Error::CapExceeded {
            what: "graph points (r+1)^depth",
            requested: b.saturating_pow(depth.min(64) as u32),
            cap: MAX_GRAPH_POINTS,
        })?;
    let denom = BigInt::from(total);
    let rows: Vec<Vec<GraphRow>> = (0..=total)
        .into_par_iter()
        .map(|m| {
            let x = BigRational::new(BigInt::from(m), denom.clone());
            let digits = if m == total {
                DigitStream::purely_periodic(&[r]).expect("nonempty period")
            } else {
                let mut word = vec![0; depth];
                let mut rest = m;
                for slot in word.iter_mut().rev() {
                    *slot = (rest % b) as Digit;
                    rest /= b;
                }
                DigitStream::terminating(&word)
            };
            let point = SourcePoint::new(sys, digits).expect("canonical grid point");
            let mut out = Vec::with_capacity(2);
            if let Some(twin) = point.left_twin() {
                out.push(GraphRow {
                    x: x.clone(),
                    y: sys.stream_value(&twin),
                    digits: twin,
                    side: Side::Left,
                });
            }
            out.push(GraphRow {
                x,
                y: point.f(),
                digits: point.digits.clone(),
                side: Side::Value,
            });
            out
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}
