//! Self-checks of the structural identities for one system, grouped into
//! suites. Suites that do not apply to the system report `skipped`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cylinders::{adjacent_overlap_length, length, words_equal, Cylinder, Interval};
use crate::digits::{DigitStream, DigitWord};
use crate::error::{Error, ParseError, Result};
use crate::exact::ExactReal;
use crate::fractal::{
    cantor_cover, cantor_dimension, enumerate_preimages, level_set_dimension, substitute_all,
    CantorSpec,
};
use crate::function::{
    default_jump_prefix, jump_at_binary, nonmonotone_witness, variation_lower_bound, SourcePoint,
};
use crate::representation::SystemParams;

const CYLINDER_RANK: usize = 4;
const WORD_BUDGET: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    All,
    Representation,
    Cylinders,
    Function,
    Fractal,
}

impl FromStr for Suite {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "all" => Ok(Suite::All),
            "representation" => Ok(Suite::Representation),
            "cylinders" => Ok(Suite::Cylinders),
            "function" => Ok(Suite::Function),
            "fractal" => Ok(Suite::Fractal),
            _ => Err(ParseError::new(
                "suite",
                s,
                "expected all|representation|cylinders|function|fractal",
            )),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::All => "all",
            Suite::Representation => "representation",
            Suite::Cylinders => "cylinders",
            Suite::Function => "function",
            Suite::Fractal => "fractal",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub suite: Suite,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl CheckOutcome {
    fn from_result(suite: Suite, name: &str, r: Result<String>) -> Self {
        let (status, detail) = match r {
            Ok(detail) => (Status::Passed, detail),
            Err(e) => (Status::Failed, e.to_string()),
        };
        CheckOutcome {
            suite,
            name: name.into(),
            status,
            detail,
        }
    }

    fn skipped(suite: Suite, name: &str, why: &str) -> Self {
        CheckOutcome {
            suite,
            name: name.into(),
            status: Status::Skipped,
            detail: why.into(),
        }
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Inconsistent(what()))
    }
}

/// Words of every rank up to `max_rank`, stopping at the first rank whose
/// word count exceeds the budget.
fn words_up_to(sys: &SystemParams, max_rank: usize) -> Vec<DigitWord> {
    let mut out = Vec::new();
    for k in 0..=max_rank {
        let count = (sys.max_digit() as usize + 1).saturating_pow(k as u32);
        if count > WORD_BUDGET {
            break;
        }
        out.extend(DigitWord::all(sys.max_digit(), k));
    }
    out
}

pub fn run(sys: &SystemParams, suite: Suite) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    if matches!(suite, Suite::All | Suite::Representation) {
        out.extend(representation_checks(sys));
    }
    if matches!(suite, Suite::All | Suite::Cylinders) {
        out.extend(cylinder_checks(sys));
    }
    if matches!(suite, Suite::All | Suite::Function) {
        out.extend(function_checks(sys));
    }
    if matches!(suite, Suite::All | Suite::Fractal) {
        out.extend(fractal_checks(sys));
    }
    out
}

/// Evenly spaced sample points `i·U/16` of `[0, U]`.
fn sample_points(sys: &SystemParams) -> Vec<ExactReal> {
    (0..=16)
        .map(|i| ExactReal::ratio(i, 16) * sys.upper())
        .collect()
}

fn representation_checks(sys: &SystemParams) -> Vec<CheckOutcome> {
    let suite = Suite::Representation;
    let round_trip = || -> Result<String> {
        let pts = sample_points(sys);
        for x in &pts {
            for e in [sys.greedy_expand(x, 12)?, sys.lazy_expand(x, 12)?] {
                ensure(sys.reconstruct(&e) == *x, || format!("reconstruction of {x}"))?;
                ensure(
                    e.remainders
                        .iter()
                        .all(|q| *q >= ExactReal::zero() && q <= sys.upper()),
                    || format!("remainder of {x} left [0, U]"),
                )?;
            }
        }
        Ok(format!("{} points, greedy and lazy, 12 digits", pts.len()))
    };
    let order = || -> Result<String> {
        let pts = sample_points(sys);
        for x in &pts {
            let g = sys.greedy_expand(x, 12)?.word;
            let l = sys.lazy_expand(x, 12)?.word;
            ensure(l <= g, || format!("lazy word exceeds greedy word at {x}"))?;
        }
        Ok("lazy <= greedy lexicographically".into())
    };
    vec![
        CheckOutcome::from_result(suite, "expansion_round_trip", round_trip()),
        CheckOutcome::from_result(suite, "lazy_below_greedy", order()),
    ]
}

fn cylinder_checks(sys: &SystemParams) -> Vec<CheckOutcome> {
    let suite = Suite::Cylinders;
    let words = words_up_to(sys, CYLINDER_RANK);
    let union = || -> Result<String> {
        for w in &words {
            let c = Cylinder::new(sys, w.clone())?;
            let pieces: Vec<Interval> = c.subdivide().iter().map(Cylinder::interval).collect();
            let merged = Interval::union(pieces);
            ensure(merged == vec![c.interval()], || {
                format!("children of {w} do not tile it")
            })?;
        }
        Ok(format!("{} cylinders", words.len()))
    };
    let overlap = || -> Result<String> {
        for w in &words {
            let c = Cylinder::new(sys, w.clone())?;
            let expected = adjacent_overlap_length(sys, c.rank());
            for j in 0..sys.max_digit() {
                let iv = c.adjacent_overlap(j)?;
                let brute = c
                    .child(j)?
                    .interval()
                    .intersect(&c.child(j + 1)?.interval());
                ensure(brute.as_ref() == Some(&iv), || {
                    format!("overlap {j} of {w} differs from interval intersection")
                })?;
                ensure(iv.length() == expected, || {
                    format!("overlap {j} of {w} has length {}", iv.length())
                })?;
            }
        }
        Ok(format!("{} cylinders", words.len()))
    };
    let nested = || -> Result<String> {
        for w in words.iter().filter(|w| !w.is_empty()) {
            let c = Cylinder::new(sys, w.clone())?;
            let parent = Cylinder::new(sys, DigitWord::new(w.digits()[..w.len() - 1].to_vec()))?;
            ensure(parent.interval().contains_interval(&c.interval()), || {
                format!("{w} escapes its parent")
            })?;
            ensure(
                c.interval().length() * sys.base() == length(sys, w.len() - 1),
                || format!("length ratio at {w}"),
            )?;
        }
        Ok("lengths scale by 1/a".into())
    };
    let equality = || -> Result<String> {
        let short = words_up_to(sys, 3);
        for w1 in &short {
            for w2 in short.iter().filter(|w| w.len() == w1.len()) {
                let by_value = Cylinder::new(sys, w1.clone())?.interval()
                    == Cylinder::new(sys, w2.clone())?.interval();
                ensure(words_equal(sys, w1, w2)? == by_value, || {
                    format!("{w1} vs {w2}")
                })?;
            }
        }
        Ok("word equality matches interval equality".into())
    };
    let mut out = vec![
        CheckOutcome::from_result(suite, "children_tile_parent", union()),
        CheckOutcome::from_result(suite, "adjacent_overlap", overlap()),
        CheckOutcome::from_result(suite, "nested_lengths", nested()),
        CheckOutcome::from_result(suite, "word_equality", equality()),
    ];
    if sys.is_golden() {
        let golden = || -> Result<String> {
            let a = DigitWord::new(vec![1, 0, 0]);
            let b = DigitWord::new(vec![0, 1, 1]);
            ensure(words_equal(sys, &a, &b)?, || "100 != 011".into())?;
            Ok("cylinders 100 and 011 coincide".into())
        };
        out.push(CheckOutcome::from_result(suite, "golden_coincidence", golden()));
    } else {
        out.push(CheckOutcome::skipped(suite, "golden_coincidence", "base is not the golden ratio"));
    }
    out
}

fn function_checks(sys: &SystemParams) -> Vec<CheckOutcome> {
    let suite = Suite::Function;
    let r = sys.max_digit();
    let one = ExactReal::one();
    let mut out = Vec::new();

    if sys.is_classical() {
        let identity = || -> Result<String> {
            let b = i64::from(r) + 1;
            let denom = b.pow(4);
            for m in 0..=denom {
                let x = BigRational::new(BigInt::from(m), BigInt::from(denom));
                let p = SourcePoint::from_rational(sys, &x)?;
                ensure(p.f() == ExactReal::rational(x.clone()), || format!("f({x}) != {x}"))?;
            }
            Ok(format!("f(x) = x on {} grid points", denom + 1))
        };
        out.push(CheckOutcome::from_result(suite, "classical_identity", identity()));
    } else {
        out.push(CheckOutcome::skipped(suite, "classical_identity", "a != r + 1"));
    }

    let jumps = || -> Result<String> {
        let a = sys.base();
        let factor = (ExactReal::from(r + 1) - a) / (a - &one);
        for k in 1..=6 {
            let got = jump_at_binary(sys, &default_jump_prefix(k), k)?;
            let expected = &factor * sys.inv_pow(k);
            ensure(got == expected, || format!("jump at rank {k}: {got} != {expected}"))?;
        }
        Ok("ranks 1..=6".into())
    };
    out.push(CheckOutcome::from_result(suite, "jump_formula", jumps()));

    if sys.is_classical() {
        out.push(CheckOutcome::skipped(suite, "nonmonotone_witness", "f is the identity"));
    } else {
        let witness = || -> Result<String> {
            let words = words_up_to(sys, 3);
            for w in &words {
                nonmonotone_witness(sys, w)?;
            }
            Ok(format!("{} source cylinders", words.len()))
        };
        out.push(CheckOutcome::from_result(suite, "nonmonotone_witness", witness()));
    }

    let variation = || -> Result<String> {
        let ratio = ExactReal::from(r + 1) / sys.base();
        for n in 0..12 {
            let v0 = variation_lower_bound(sys, n);
            let v1 = variation_lower_bound(sys, n + 1);
            ensure(v1 == &v0 * &ratio, || format!("V_{} / V_{n}", n + 1))?;
        }
        let grows = ratio > one;
        Ok(format!(
            "V_(n+1) / V_n = {ratio}, {}",
            if grows { "unbounded" } else { "bounded" }
        ))
    };
    out.push(CheckOutcome::from_result(suite, "variation_ratio", variation()));
    out
}

fn fractal_checks(sys: &SystemParams) -> Vec<CheckOutcome> {
    let suite = Suite::Fractal;
    let mut out = Vec::new();
    match CantorSpec::from_system(sys) {
        Ok(spec) => {
            let covers = || -> Result<String> {
                let mut prev = cantor_cover(&spec, 0)?;
                for n in 1..=8 {
                    let cur = cantor_cover(&spec, n)?;
                    ensure(cur.len() == 1 << n, || format!("level {n} size"))?;
                    ensure(
                        cur.iter().all(|c| prev.iter().any(|p| p.contains_interval(c))),
                        || format!("level {n} not nested"),
                    )?;
                    prev = cur;
                }
                let dim = cantor_dimension(&spec);
                Ok(format!("levels 1..=8 nested and disjoint, dim = {}", dim.symbolic()))
            };
            out.push(CheckOutcome::from_result(suite, "cantor_covers", covers()));
        }
        Err(_) => out.push(CheckOutcome::skipped(suite, "cantor_covers", "requires r = 2 and 2 < a < 3")),
    }
    if sys.is_golden() {
        let swaps = || -> Result<String> {
            let mut total = 0;
            for w in DigitWord::all(1, 6) {
                let seed = DigitStream::terminating(w.digits());
                total += substitute_all(sys, &seed, 9)?.len();
            }
            Ok(format!("{total} representations, all value-equal"))
        };
        let level = || -> Result<String> {
            let mut count = 0;
            for tail in [4, 5] {
                for len in 0..=4 {
                    count += enumerate_preimages(sys, len, tail)?.len();
                }
            }
            Ok(format!("{count} preimages, dim >= {}", level_set_dimension()))
        };
        out.push(CheckOutcome::from_result(suite, "golden_swaps", swaps()));
        out.push(CheckOutcome::from_result(suite, "level_set", level()));
    } else {
        out.push(CheckOutcome::skipped(suite, "golden_swaps", "base is not the golden ratio"));
        out.push(CheckOutcome::skipped(suite, "level_set", "base is not the golden ratio"));
    }
    out
}
