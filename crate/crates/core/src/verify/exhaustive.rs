use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use super::oracle::Oracle;
use super::report::{Failure, VerificationReport};
use crate::boolean::{input_from_index, SymmetricProfile};
use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::repr::{AnchorSet, Construction};

/// Default cap on the number of input bits enumerated.
pub const DEFAULT_MAX_BITS: usize = 24;

/// Default cap on counterexamples kept in a report.
pub const DEFAULT_MAX_FAILURES: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_bits: usize,
    pub max_failures: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_bits: DEFAULT_MAX_BITS,
            max_failures: DEFAULT_MAX_FAILURES,
        }
    }
}

/// Nearest anchor to a binary point by exact squared distance.
///
/// Returns `(index, d², strict)`. The index is the lowest among equally near
/// anchors. `strict` holds when every anchor of the other label is strictly
/// farther than the nearest one.
pub fn nearest_anchor(set: &AnchorSet, x: &[bool]) -> Result<(usize, Rational, bool)> {
    if set.is_empty() {
        return Err(Error::EmptyAnchorSet);
    }
    if x.len() != set.dim() {
        return Err(Error::DimensionMismatch {
            expected: set.dim(),
            found: x.len(),
        });
    }
    let dists: Vec<Rational> = set
        .anchors()
        .row_iter()
        .map(|a| {
            a.iter()
                .zip(x)
                .map(|(ai, &xi)| {
                    let diff = Rational::from(i64::from(xi)) - ai;
                    &diff * &diff
                })
                .sum()
        })
        .collect();
    let (best, _) = dists
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
        .expect("nonempty");
    let label = set.labels()[best];
    let strict = dists
        .iter()
        .zip(set.labels())
        .filter(|(_, &l)| l != label)
        .all(|(d, _)| *d > dists[best]);
    Ok((best, dists[best].clone(), strict))
}

/// Integer score arithmetic: `i128` when every partial sum fits, big
/// integers otherwise.
trait Score: Clone + Ord + Send + Sync {
    fn from_big(b: &BigInt) -> Self;
    fn sub_ref(&mut self, o: &Self);
    fn to_big(&self) -> BigInt;
}

impl Score for i128 {
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("range checked before choosing i128")
    }
    fn sub_ref(&mut self, o: &Self) {
        *self -= *o;
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Score for BigInt {
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }
    fn sub_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Anchors with denominators cleared by `L = lcm(denominators)`.
///
/// For binary `X`, `L²(‖X - a_i‖² - |X|) = K_i - Σ_{x_k = 1} D_ik` with
/// `K_i = ‖L a_i‖²` and `D_ik = 2L·(L a_i)_k`, so comparing distances only
/// needs the additions in that sum.
struct Scaled<T> {
    scale: BigInt,
    k: Vec<T>,
    d: Vec<Vec<T>>,
}

fn scale_anchors(set: &AnchorSet) -> (BigInt, Vec<BigInt>, Vec<Vec<BigInt>>) {
    let l = set
        .anchors()
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let two_l = &l + &l;
    let mut ks = Vec::with_capacity(set.len());
    let mut ds = Vec::with_capacity(set.len());
    for row in set.anchors().row_iter() {
        let ints: Vec<BigInt> = row.iter().map(|q| q.numer() * (&l / q.denom())).collect();
        ks.push(ints.iter().map(|v| v * v).sum());
        ds.push(ints.iter().map(|v| &two_l * v).collect());
    }
    (l, ks, ds)
}

fn fits_i128(ks: &[BigInt], ds: &[Vec<BigInt>]) -> bool {
    let bound = BigInt::one() << 125;
    ks.iter().zip(ds).all(|(k, d)| {
        let total: BigInt = k.abs() + d.iter().map(|v| v.abs()).sum::<BigInt>();
        total < bound
    })
}

#[derive(Clone, Copy)]
enum TypeRule {
    /// Nearest type is the interval's left boundary `I_{l-1} + 1`.
    LeftBoundary,
    /// Nearest type is `I_{l-1} + 1` or `I_l`.
    EitherBoundary,
}

struct Trace<'a> {
    rule: TypeRule,
    types: &'a [usize],
    profile: &'a SymmetricProfile,
}

impl Trace<'_> {
    fn ok(&self, count: usize, nearest: usize) -> bool {
        let (_, left, right) = self.profile.interval_of(count);
        let start = left.map_or(0, |b| b + 1);
        let t = self.types[nearest];
        match self.rule {
            TypeRule::LeftBoundary => t == start,
            TypeRule::EitherBoundary => t == start || t == right,
        }
    }
}

#[derive(Default)]
struct Partial {
    failures: Vec<Failure>,
    failure_count: u64,
    ties: u64,
    min_margin: Option<BigInt>,
    type_mismatches: u64,
}

impl Partial {
    fn merge(mut self, other: Partial, cap: usize) -> Partial {
        let room = cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.failure_count += other.failure_count;
        self.ties += other.ties;
        self.min_margin = match (self.min_margin, other.min_margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.type_mismatches += other.type_mismatches;
        self
    }
}

fn scan_range<T: Score, O: Oracle>(
    s: &Scaled<T>,
    labels: &[bool],
    oracle: &O,
    trace: Option<&Trace<'_>>,
    n: usize,
    range: std::ops::Range<usize>,
    cap: usize,
) -> Partial {
    let mut out = Partial::default();
    let mut scores: Vec<T> = Vec::with_capacity(s.k.len());
    for v in range {
        let x = input_from_index(v, n);
        scores.clear();
        for (k, d) in s.k.iter().zip(&s.d) {
            let mut sc = k.clone();
            for (dk, _) in d.iter().zip(&x).filter(|(_, &b)| b) {
                sc.sub_ref(dk);
            }
            scores.push(sc);
        }

        let mut nearest = 0;
        let mut best: [Option<&T>; 2] = [None, None];
        for (i, sc) in scores.iter().enumerate() {
            if *sc < scores[nearest] {
                nearest = i;
            }
            let slot = &mut best[usize::from(labels[i])];
            if slot.is_none_or(|b| sc < b) {
                *slot = Some(sc);
            }
        }
        let got = labels[nearest];
        let strict = best[usize::from(!got)].is_none_or(|o| *o > scores[nearest]);
        let expected = oracle.eval(&x);

        if !strict {
            out.ties += 1;
        }
        if got != expected || !strict {
            out.failure_count += 1;
            if out.failures.len() < cap {
                out.failures.push(Failure {
                    x: format!("{v:0n$b}"),
                    expected: u8::from(expected),
                    got: u8::from(got),
                    anchor: nearest,
                });
            }
        }
        if let (Some(same), Some(opp)) = (best[usize::from(expected)], best[usize::from(!expected)]) {
            let m = opp.to_big() - same.to_big();
            if out.min_margin.as_ref().is_none_or(|cur| m < *cur) {
                out.min_margin = Some(m);
            }
        }
        if let Some(tr) = trace {
            let count = oracle.active_count(&x).expect("traced oracles report |Z|");
            if !tr.ok(count, nearest) {
                out.type_mismatches += 1;
            }
        }
    }
    out
}

fn run<T: Score, O: Oracle>(
    s: Scaled<T>,
    set: &AnchorSet,
    oracle: &O,
    trace: Option<Trace<'_>>,
    opts: &VerifyOptions,
) -> VerificationReport {
    let n = set.dim();
    let total = 1usize << n;
    let chunk = (total / (rayon::current_num_threads() * 4)).max(256);
    let starts: Vec<usize> = (0..total).step_by(chunk).collect();
    let parts: Vec<Partial> = starts
        .par_iter()
        .map(|&lo| {
            let hi = (lo + chunk).min(total);
            scan_range(&s, set.labels(), oracle, trace.as_ref(), n, lo..hi, opts.max_failures)
        })
        .collect();
    let merged = parts
        .into_iter()
        .fold(Partial::default(), |acc, p| acc.merge(p, opts.max_failures));

    let l2 = &s.scale * &s.scale;
    VerificationReport {
        pass: merged.failure_count == 0 && merged.ties == 0,
        total: total as u64,
        failures: merged.failures,
        min_margin: merged.min_margin.map(|m| Rational::new(m, l2)),
        ties: merged.ties,
        type_trace_ok: trace.map(|_| merged.type_mismatches == 0),
        failure_count: merged.failure_count,
        type_mismatches: merged.type_mismatches,
    }
}

/// Checks the anchor set against `oracle` on every point of `{0,1}^n`.
pub fn verify_exhaustive_with<O: Oracle>(
    set: &AnchorSet,
    oracle: &O,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if set.is_empty() {
        return Err(Error::EmptyAnchorSet);
    }
    let n = oracle.arity();
    if set.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: set.dim(),
        });
    }
    if n > opts.max_bits || n >= usize::BITS as usize - 1 {
        return Err(Error::InputSpaceTooLarge {
            bits: n,
            cap: opts.max_bits,
        });
    }

    let rule = match set.construction() {
        Construction::SymElt => Some(TypeRule::LeftBoundary),
        Construction::SymLt => Some(TypeRule::EitherBoundary),
        _ => None,
    };
    let trace = match (rule, set.types(), oracle.top_profile()) {
        (Some(rule), Some(types), Some(profile)) => Some(Trace { rule, types, profile }),
        _ => None,
    };

    let (scale, ks, ds) = scale_anchors(set);
    Ok(if fits_i128(&ks, &ds) {
        let s = Scaled {
            scale,
            k: ks.iter().map(i128::from_big).collect(),
            d: ds.iter().map(|r| r.iter().map(i128::from_big).collect()).collect(),
        };
        run(s, set, oracle, trace, opts)
    } else {
        run(Scaled { scale, k: ks, d: ds }, set, oracle, trace, opts)
    })
}

/// [`verify_exhaustive_with`] under the default options.
pub fn verify_exhaustive<O: Oracle>(set: &AnchorSet, oracle: &O) -> Result<VerificationReport> {
    verify_exhaustive_with(set, oracle, &VerifyOptions::default())
}
