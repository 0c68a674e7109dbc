//! Digit words and eventually periodic digit streams.
//!
//! Literal grammar: for alphabets with `r <= 9` the compact form
//! `110(01)` (preperiod digits, then the period in parentheses); for larger
//! alphabets the comma-separated form `10,3,0(2,1)`. A literal without a
//! parenthesised period terminates, i.e. has period `(0)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError, Result};

pub type Digit = u32;

/// A finite digit string; the base of a cylinder or an expansion prefix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitWord(Vec<Digit>);

impl DigitWord {
    pub fn new(digits: Vec<Digit>) -> Self {
        DigitWord(digits)
    }

    pub fn empty() -> Self {
        DigitWord(Vec::new())
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d);
    }

    /// `self` followed by `tail`.
    pub fn concat(&self, tail: &[Digit]) -> DigitWord {
        let mut v = self.0.clone();
        v.extend_from_slice(tail);
        DigitWord(v)
    }

    pub fn validate(&self, r: u32) -> Result<()> {
        match self.0.iter().find(|&&d| d > r) {
            Some(&digit) => Err(Error::DigitOutOfRange { digit, r }),
            None => Ok(()),
        }
    }

    /// Every word of length `len` over `alphabet`, in lexicographic order.
    pub fn all_over(alphabet: &[Digit], len: usize) -> Vec<DigitWord> {
        let mut words = vec![DigitWord::empty()];
        for _ in 0..len {
            words = words
                .iter()
                .flat_map(|w| alphabet.iter().map(move |&d| w.concat(&[d])))
                .collect();
        }
        words
    }

    /// Every word of length `len` over `{0..=r}`.
    pub fn all(r: u32, len: usize) -> Vec<DigitWord> {
        let alphabet: Vec<Digit> = (0..=r).collect();
        Self::all_over(&alphabet, len)
    }

    pub fn parse(s: &str, r: u32) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        if s.contains('(') || s.contains(')') {
            return Err(ParseError::new("digit word", s, "a word has no period"));
        }
        let digits = parse_digits(s, r, "digit word")?;
        Ok(DigitWord(digits))
    }

    pub fn to_literal(&self, r: u32) -> String {
        format_digits(&self.0, r)
    }
}

impl From<Vec<Digit>> for DigitWord {
    fn from(v: Vec<Digit>) -> Self {
        DigitWord(v)
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.0.iter().copied().max().unwrap_or(0);
        f.write_str(&self.to_literal(r))
    }
}

/// An eventually periodic digit sequence `preperiod (period)^∞`.
///
/// Always stored in canonical form: the period is primitive (not a power of
/// a shorter word) and rotated so the preperiod is as short as possible.
/// Two streams are then equal as sequences iff they are equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitStream {
    preperiod: Vec<Digit>,
    period: Vec<Digit>,
}

impl DigitStream {
    pub fn new(preperiod: Vec<Digit>, period: Vec<Digit>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        let mut s = DigitStream { preperiod, period };
        s.canonicalize();
        Ok(s)
    }

    pub fn terminating(word: &[Digit]) -> Self {
        Self::new(word.to_vec(), vec![0]).expect("nonempty period")
    }

    pub fn purely_periodic(period: &[Digit]) -> Result<Self> {
        Self::new(Vec::new(), period.to_vec())
    }

    fn canonicalize(&mut self) {
        let n = self.period.len();
        if let Some(p) = (1..n).find(|&p| n % p == 0 && self.period.chunks(p).all(|c| c == &self.period[..p])) {
            self.period.truncate(p);
        }
        while let (Some(&last_pre), Some(&last_per)) = (self.preperiod.last(), self.period.last()) {
            if last_pre != last_per {
                break;
            }
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[Digit] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Digit] {
        &self.period
    }

    /// `len(preperiod) + len(period)`: the size of the literal.
    pub fn literal_len(&self) -> usize {
        self.preperiod.len() + self.period.len()
    }

    pub fn is_terminating(&self) -> bool {
        self.period == [0]
    }

    /// The `i`-th digit (0-based) of the infinite sequence.
    pub fn digit(&self, i: usize) -> Digit {
        if i < self.preperiod.len() {
            self.preperiod[i]
        } else {
            self.period[(i - self.preperiod.len()) % self.period.len()]
        }
    }

    /// First `n` digits of the infinite sequence.
    pub fn prefix(&self, n: usize) -> DigitWord {
        DigitWord((0..n).map(|i| self.digit(i)).collect())
    }

    /// `word` followed by this stream.
    pub fn prepend(&self, word: &[Digit]) -> DigitStream {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.preperiod);
        Self::new(pre, self.period.clone()).expect("nonempty period")
    }

    pub fn max_digit(&self) -> Digit {
        self.preperiod
            .iter()
            .chain(&self.period)
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn validate(&self, r: u32) -> Result<()> {
        DigitWord(self.preperiod.clone()).validate(r)?;
        DigitWord(self.period.clone()).validate(r)
    }

    pub fn parse(s: &str, r: u32) -> std::result::Result<Self, ParseError> {
        let s = s.trim();
        let (pre, per) = match s.find('(') {
            Some(open) => {
                let Some(body) = s[open + 1..].strip_suffix(')') else {
                    return Err(ParseError::new("digit stream", s, "period must end the literal with `)`"));
                };
                (&s[..open], body)
            }
            None => (s, "0"),
        };
        let preperiod = parse_digits(pre, r, "digit stream")?;
        let period = parse_digits(per, r, "digit stream")?;
        if period.is_empty() {
            return Err(ParseError::new("digit stream", s, "empty period"));
        }
        Ok(Self::new(preperiod, period).expect("nonempty period"))
    }

    pub fn to_literal(&self, r: u32) -> String {
        format!(
            "{}({})",
            format_digits(&self.preperiod, r),
            format_digits(&self.period, r)
        )
    }
}

impl fmt::Display for DigitStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal(self.max_digit()))
    }
}

impl Serialize for DigitStream {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for DigitWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_digits(s: &str, r: u32, what: &'static str) -> std::result::Result<Vec<Digit>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let digits: Vec<Digit> = if r <= 9 && !s.contains(',') {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| ParseError::new(what, s, format!("`{c}` is not a digit")))
            })
            .collect::<std::result::Result<_, _>>()?
    } else {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Digit>()
                    .map_err(|_| ParseError::new(what, s, format!("`{t}` is not a digit")))
            })
            .collect::<std::result::Result<_, _>>()?
    };
    if let Some(d) = digits.iter().find(|&&d| d > r) {
        return Err(ParseError::new(what, s, format!("digit {d} exceeds r = {r}")));
    }
    Ok(digits)
}

fn format_digits(digits: &[Digit], r: u32) -> String {
    if r <= 9 {
        digits.iter().map(|d| char::from_digit(*d, 10).unwrap_or('?')).collect()
    } else {
        digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}
