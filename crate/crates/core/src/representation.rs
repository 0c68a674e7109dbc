//! r_a-representations: `x = Σ αₙ a⁻ⁿ` with digits `αₙ ∈ {0..r}`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::digits::{Digit, DigitStream, DigitWord};
use crate::error::{Error, Result};
use crate::exact::ExactReal;

/// Default search depth for [`SystemParams::is_ra_rational`].
pub const DEFAULT_RATIONALITY_DEPTH: usize = 20;

/// A base/alphabet pair `(a, r)` with `a > 1` and `r >= a - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemParams {
    a: ExactReal,
    r: u32,
    inv_a: ExactReal,
    upper: ExactReal,
    redundant: bool,
}

impl SystemParams {
    pub fn new(a: ExactReal, r: u32) -> Result<Self> {
        let one = ExactReal::one();
        if a <= one {
            return Err(Error::BaseTooSmall(a.to_string()));
        }
        let a_minus_one = &a - &one;
        let r_exact = ExactReal::from(r);
        let slack = r_exact.try_cmp(&a_minus_one)?;
        if slack == Ordering::Less {
            return Err(Error::AlphabetTooSmall {
                r,
                a: a.to_string(),
            });
        }
        Ok(SystemParams {
            inv_a: a.recip(),
            upper: &r_exact / &a_minus_one,
            redundant: slack == Ordering::Greater,
            a,
            r,
        })
    }

    /// The classical base-`b` system, `a = b`, `r = b - 1`.
    pub fn classical(b: u32) -> Result<Self> {
        Self::new(ExactReal::from(b), b.saturating_sub(1))
    }

    /// `a = (1+√5)/2`, `r = 1`.
    pub fn golden() -> Self {
        Self::new(ExactReal::phi(), 1).expect("golden system is valid")
    }

    pub fn base(&self) -> &ExactReal {
        &self.a
    }

    pub fn inv_base(&self) -> &ExactReal {
        &self.inv_a
    }

    pub fn max_digit(&self) -> u32 {
        self.r
    }

    /// Upper endpoint `U = r/(a-1)` of the representable interval `[0, U]`.
    pub fn upper(&self) -> &ExactReal {
        &self.upper
    }

    /// True iff `r > a - 1` (adjacent cylinders overlap in an interval).
    pub fn is_redundant(&self) -> bool {
        self.redundant
    }

    pub fn is_golden(&self) -> bool {
        self.r == 1 && &self.a * &self.a == &self.a + ExactReal::one()
    }

    /// `a = r + 1`: the classical positional system.
    pub fn is_classical(&self) -> bool {
        self.a == ExactReal::from(self.r + 1)
    }

    pub fn alphabet(&self) -> Vec<Digit> {
        (0..=self.r).collect()
    }

    /// `a⁻ᵏ`.
    pub fn inv_pow(&self, k: usize) -> ExactReal {
        self.inv_a.pow(k as u32)
    }

    /// `Σ cᵢ a⁻ⁱ` over a finite word, by Horner's rule. Digits are not checked.
    pub(crate) fn word_value(&self, digits: &[Digit]) -> ExactReal {
        digits.iter().rev().fold(ExactReal::zero(), |acc, &d| {
            (acc + ExactReal::from(d)) * &self.inv_a
        })
    }

    pub fn eval_word(&self, word: &DigitWord) -> Result<ExactReal> {
        word.validate(self.r)?;
        Ok(self.word_value(word.digits()))
    }

    /// Exact value of an eventually periodic stream: a finite sum for the
    /// preperiod plus the geometric closed form `c / (1 - a⁻ᵖ)` for the period.
    pub fn eval_stream(&self, s: &DigitStream) -> Result<ExactReal> {
        s.validate(self.r)?;
        Ok(self.stream_value(s))
    }

    pub(crate) fn stream_value(&self, s: &DigitStream) -> ExactReal {
        let head = self.word_value(s.preperiod());
        let p = s.period().len();
        let cycle = self.word_value(s.period()) / (ExactReal::one() - self.inv_pow(p));
        head + self.inv_pow(s.preperiod().len()) * cycle
    }

    fn check_in_interval(&self, x: &ExactReal) -> Result<()> {
        if *x < ExactReal::zero() || x.try_cmp(&self.upper)? == Ordering::Greater {
            return Err(Error::OutOfInterval {
                x: x.to_string(),
                upper: self.upper.to_string(),
            });
        }
        Ok(())
    }

    /// Greedy expansion: `α = min(r, ⌊a·x⌋)`, `x ← a·x - α`.
    pub fn greedy_expand(&self, x: &ExactReal, n: usize) -> Result<Expansion> {
        self.expand(x, n, |ax| {
            let f = ax.floor();
            if f >= BigInt::from(self.r) {
                self.r
            } else {
                f.to_u32().unwrap_or(0)
            }
        })
    }

    /// Lazy expansion: the smallest `α` with `a·x - α <= U`.
    pub fn lazy_expand(&self, x: &ExactReal, n: usize) -> Result<Expansion> {
        self.expand(x, n, |ax| {
            let c = (ax - &self.upper).ceil();
            if c <= BigInt::zero() {
                0
            } else {
                c.to_u32().unwrap_or(self.r).min(self.r)
            }
        })
    }

    fn expand(
        &self,
        x: &ExactReal,
        n: usize,
        mut choose: impl FnMut(&ExactReal) -> Digit,
    ) -> Result<Expansion> {
        self.check_in_interval(x)?;
        let mut digits = Vec::with_capacity(n);
        let mut remainders = Vec::with_capacity(n);
        let mut rem = x.clone();
        for _ in 0..n {
            let ax = &self.a * &rem;
            let d = choose(&ax);
            rem = ax - ExactReal::from(d);
            digits.push(d);
            remainders.push(rem.clone());
        }
        debug_assert!(rem >= ExactReal::zero() && rem <= self.upper);
        Ok(Expansion {
            word: DigitWord::new(digits),
            remainder: rem,
            remainders,
        })
    }

    /// `value(word) + a⁻ⁿ·remainder`; recovers the expanded number exactly.
    pub fn reconstruct(&self, e: &Expansion) -> ExactReal {
        self.word_value(e.word.digits()) + self.inv_pow(e.word.len()) * &e.remainder
    }

    /// Whether the number represented by `s` has a terminating (period `(0)`)
    /// representation. Beyond the syntactic check, searches the greedy and lazy
    /// expansions of its value up to `depth` digits for a zero remainder.
    pub fn is_ra_rational(&self, s: &DigitStream, depth: usize) -> Result<bool> {
        if !self.a.is_rational() {
            return Err(Error::IrrationalBase(self.a.to_string()));
        }
        s.validate(self.r)?;
        if s.is_terminating() {
            return Ok(true);
        }
        let x = self.stream_value(s);
        for expansion in [self.greedy_expand(&x, depth)?, self.lazy_expand(&x, depth)?] {
            if expansion.remainders.iter().any(ExactReal::is_zero) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn summary(&self) -> SystemSummary {
        SystemSummary {
            base: self.a.to_string(),
            r: self.r,
            upper: self.upper.to_string(),
            redundant: self.redundant,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemSummary {
    pub base: String,
    pub r: u32,
    pub upper: String,
    pub redundant: bool,
}

/// A length-`n` expansion prefix with its final remainder `xₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub word: DigitWord,
    pub remainder: ExactReal,
    /// `x₁, …, xₙ` after each step.
    pub remainders: Vec<ExactReal>,
}
