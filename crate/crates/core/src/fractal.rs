//! Self-similar sets built from digit restrictions.
//!
//! Two constructions live here:
//!
//! * the Cantor-type set `C = {Δ^{r_a}_{α₁α₂…} : αₙ ∈ {0, 2}}` for `r = 2`,
//!   with its nested covers `Cₙ` by rank-`n` cylinders and its similarity
//!   dimension `log 2 / log a`;
//! * the level set `f⁻¹(y₀)` at the golden base (`a = φ`, `r = 1`) and
//!   `y₀ = Δ^{φ}_{(100)}`. Since `a⁻¹ = a⁻² + a⁻³`, the digit blocks `100` and
//!   `011` are interchangeable anywhere in a representation, so every binary
//!   sequence built from those blocks is mapped by `f` to `y₀`.
//!
//! Block labels follow the octal reading `100₂ = 4`. The other block `011₂`
//! is octal digit 3, but it keeps the label `5` in the public interface; the
//! x-values returned are always the true binary values.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::cylinders::{length, Cylinder, Interval};
use crate::digits::{Digit, DigitStream, DigitWord};
use crate::error::{Error, Result};
use crate::exact::ExactReal;
use crate::function::SourcePoint;
use crate::representation::SystemParams;

/// Largest cover level [`cantor_cover`] will build (`2ⁿ` intervals).
pub const MAX_COVER_LEVEL: usize = 20;
/// Largest block-word length [`enumerate_preimages`] will expand.
pub const MAX_PREIMAGE_LEN: usize = 20;

const CANTOR_DIGITS: [Digit; 2] = [0, 2];

/// `(a, r = 2)` with `2 < a < 3`, restricted to the digits `{0, 2}`.
///
/// For `a <= 2` the first-rank cylinders `Δ₀` and `Δ₂` overlap
/// (`max Δ₀ = 2/(a(a-1)) >= 2/a = min Δ₂`), so the covers stop being disjoint
/// and the similarity-dimension formula no longer applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CantorSpec {
    sys: SystemParams,
}

impl CantorSpec {
    pub fn new(a: ExactReal) -> Result<Self> {
        let two = ExactReal::integer(2);
        let three = ExactReal::integer(3);
        if !(a > two && a < three) {
            return Err(Error::NotCantorSystem {
                a: a.to_string(),
                r: 2,
            });
        }
        Ok(CantorSpec {
            sys: SystemParams::new(a, 2)?,
        })
    }

    pub fn from_system(sys: &SystemParams) -> Result<Self> {
        if sys.max_digit() != 2 {
            return Err(Error::NotCantorSystem {
                a: sys.base().to_string(),
                r: sys.max_digit(),
            });
        }
        Self::new(sys.base().clone())
    }

    pub fn system(&self) -> &SystemParams {
        &self.sys
    }
}

/// True iff every digit of the stream is 0 or 2.
pub fn cantor_member(_spec: &CantorSpec, s: &DigitStream) -> bool {
    s.preperiod()
        .iter()
        .chain(s.period())
        .all(|d| CANTOR_DIGITS.contains(d))
}

/// The `2ⁿ` rank-`n` cylinders over `{0, 2}`, sorted and pairwise disjoint.
pub fn cantor_cover(spec: &CantorSpec, n: usize) -> Result<Vec<Interval>> {
    if n > MAX_COVER_LEVEL {
        return Err(Error::CapExceeded {
            what: "cover level",
            requested: n as u64,
            cap: MAX_COVER_LEVEL as u64,
        });
    }
    let sys = &spec.sys;
    let d = length(sys, n);
    let cover: Vec<Interval> = DigitWord::all_over(&CANTOR_DIGITS, n)
        .into_par_iter()
        .map(|w| {
            let lo = Cylinder::new(sys, w).expect("digits 0 and 2 fit r = 2").min();
            let hi = &lo + &d;
            Interval::new(lo, hi).expect("positive length")
        })
        .collect();
    if let Some(pair) = cover.windows(2).find(|p| p[0].hi() >= p[1].lo()) {
        return Err(Error::Inconsistent(format!(
            "level-{n} cover intervals {} and {} are not disjoint",
            pair[0], pair[1]
        )));
    }
    Ok(cover)
}

/// Similarity dimension of a set made of `pieces` copies scaled by `1/scale`,
/// i.e. the positive root `log pieces / log scale` of `pieces · scale⁻ˣ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityDimension {
    pub pieces: u32,
    pub scale: ExactReal,
}

impl SimilarityDimension {
    pub fn symbolic(&self) -> String {
        format!("log({})/log({})", self.pieces, self.scale)
    }

    pub fn decimal(&self) -> f64 {
        f64::from(self.pieces).ln() / self.scale.to_f64().ln()
    }

    /// `1/k` when `scale = pieces^k` exactly.
    pub fn exact(&self) -> Option<BigRational> {
        let p = ExactReal::from(self.pieces);
        let mut power = p.clone();
        for k in 1..=64u32 {
            match power.partial_cmp(&self.scale)? {
                std::cmp::Ordering::Equal => {
                    return Some(BigRational::new(BigInt::from(1), BigInt::from(k)))
                }
                std::cmp::Ordering::Greater => return None,
                std::cmp::Ordering::Less => power = &power * &p,
            }
        }
        None
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub symbolic: String,
    pub decimal: f64,
    pub pieces: u32,
    pub scale: String,
    /// `2·aˣ = 1` solves to `x = -log_a 2`; the dimension is its absolute value.
    pub signed_root: String,
}

/// `log 2 / log a`: two pieces, each similar to `C` with ratio `1/a`, under
/// the open set condition.
pub fn cantor_dimension(spec: &CantorSpec) -> SimilarityDimension {
    SimilarityDimension {
        pieces: 2,
        scale: spec.sys.base().clone(),
    }
}

pub fn dimension_report(dim: &SimilarityDimension) -> DimensionReport {
    DimensionReport {
        symbolic: dim.symbolic(),
        decimal: dim.decimal(),
        pieces: dim.pieces,
        scale: dim.scale.to_string(),
        signed_root: format!("-log_({})({})", dim.scale, dim.pieces),
    }
}

const BLOCK_HIGH: [Digit; 3] = [1, 0, 0];
const BLOCK_LOW: [Digit; 3] = [0, 1, 1];

fn swapped_block(t: &[Digit]) -> Option<[Digit; 3]> {
    if t == BLOCK_HIGH {
        Some(BLOCK_LOW)
    } else if t == BLOCK_LOW {
        Some(BLOCK_HIGH)
    } else {
        None
    }
}

fn require_golden(sys: &SystemParams) -> Result<()> {
    if sys.is_golden() {
        Ok(())
    } else {
        Err(Error::NotGoldenSystem)
    }
}

/// Streams one `100 ↔ 011` swap away from `s`.
///
/// A swap either touches the stream once (at a start position below
/// `max_len`, unrolling periods into the preperiod as needed) or is applied
/// in every period copy at once.
fn swap_neighbours(s: &DigitStream, max_len: usize) -> Vec<DigitStream> {
    let pre = s.preperiod();
    let per = s.period();
    let p = per.len();
    let unrolled = s.prefix(max_len + 3 + p);
    let unrolled = unrolled.digits();
    let mut out = Vec::new();
    for i in 0..max_len {
        if let Some(swap) = swapped_block(&unrolled[i..i + 3]) {
            let mut head = pre.len();
            while head < i + 3 {
                head += p;
            }
            let mut w = unrolled[..head].to_vec();
            w[i..i + 3].copy_from_slice(&swap);
            out.push(DigitStream::new(w, per.to_vec()).expect("nonempty period"));
        }
    }
    if p >= 3 {
        // Swap the block starting at offset i of every period copy: keep
        // per[..i] in the preperiod so the first copy's head is untouched.
        for i in 0..p {
            let mut q = per.to_vec();
            q.rotate_left(i);
            if let Some(swap) = swapped_block(&q[..3]) {
                q[..3].copy_from_slice(&swap);
                let mut head = pre.to_vec();
                head.extend_from_slice(&per[..i]);
                out.push(DigitStream::new(head, q).expect("nonempty period"));
            }
        }
    }
    out
}

/// Representations of the same number reachable from `s` by `100 ↔ 011`
/// swaps, keeping only streams with `len(preperiod) + len(period) <= max_len`
/// (the seed itself is always included). Every member is checked to have the
/// seed's exact value.
pub fn substitute_all(sys: &SystemParams, s: &DigitStream, max_len: usize) -> Result<BTreeSet<DigitStream>> {
    require_golden(sys)?;
    s.validate(1)?;
    let mut members = BTreeSet::from([s.clone()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(cur) = queue.pop_front() {
        for next in swap_neighbours(&cur, max_len) {
            if next.literal_len() <= max_len && members.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let target = sys.stream_value(s);
    if let Some(bad) = members.iter().find(|m| sys.stream_value(m) != target) {
        return Err(Error::Inconsistent(format!("{bad} is not value-equal to {s}")));
    }
    Ok(members)
}

/// `y₀ = Δ^{φ}_{(100)} = (a+1)/(2a) = φ/2`.
pub fn level_set_value() -> ExactReal {
    let g = SystemParams::golden();
    g.stream_value(&DigitStream::purely_periodic(&BLOCK_HIGH).expect("nonempty period"))
}

/// Binary block for a level-set label: `4 → 100`, `5 → 011`.
pub fn block_for_label(label: u32) -> Result<[Digit; 3]> {
    match label {
        4 => Ok(BLOCK_HIGH),
        5 => Ok(BLOCK_LOW),
        other => Err(Error::InvalidBlockLabel(other)),
    }
}

/// The octal digit a block contributes to `x` (4 for `100`, 3 for `011`).
pub fn octal_digit_for_label(label: u32) -> Result<u32> {
    let [b0, b1, b2] = block_for_label(label)?;
    Ok(4 * b0 + 2 * b1 + b2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSetPreimage {
    pub labels: Vec<u32>,
    pub tail: u32,
    pub x: BigRational,
    pub digits: DigitStream,
}

/// The point of `f⁻¹(y₀)` whose binary digits are the blocks of `labels`
/// followed by the block of `tail` repeated forever.
pub fn level_set_preimage(sys: &SystemParams, labels: &[u32], tail: u32) -> Result<LevelSetPreimage> {
    require_golden(sys)?;
    let mut pre = Vec::with_capacity(3 * labels.len());
    for &l in labels {
        pre.extend_from_slice(&block_for_label(l)?);
    }
    let digits = DigitStream::new(pre, block_for_label(tail)?.to_vec())?;
    let point = SourcePoint::new(sys, digits.clone())?;
    if point.f() != level_set_value() {
        return Err(Error::Inconsistent(format!("f({digits}) differs from y0")));
    }
    Ok(LevelSetPreimage {
        labels: labels.to_vec(),
        tail,
        x: point.value(),
        digits,
    })
}

/// All `2^len` preimages with the given tail, in lexicographic label order.
pub fn enumerate_preimages(sys: &SystemParams, len: usize, tail: u32) -> Result<Vec<LevelSetPreimage>> {
    if len > MAX_PREIMAGE_LEN {
        return Err(Error::CapExceeded {
            what: "level-set word length",
            requested: len as u64,
            cap: MAX_PREIMAGE_LEN as u64,
        });
    }
    block_for_label(tail)?;
    DigitWord::all_over(&[4, 5], len)
        .into_par_iter()
        .map(|w| level_set_preimage(sys, w.digits(), tail))
        .collect()
}

/// Dimension of the block-code Cantor set inside `f⁻¹(y₀)`: two pieces at
/// scale 1/8, so `log 2 / log 8 = 1/3`. A lower bound for `dim f⁻¹(y₀)`.
pub fn level_set_dimension() -> BigRational {
    SimilarityDimension {
        pieces: 2,
        scale: ExactReal::integer(8),
    }
    .exact()
    .expect("8 = 2^3")
}
