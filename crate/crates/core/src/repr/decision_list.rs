use super::anchor_set::{AnchorMeta, AnchorSet, Construction};
use super::regularity::check_gate_regularity;
use super::subsets::sign_bits;
use super::{axpy, axpy_rational, to_rationals};
use crate::boolean::{DecisionList, ListKind};
use crate::error::{Error, Result};
use crate::numerics::{dot, Rational, RationalMatrix};

/// Smallest perturbation tried is `2^-(MAX_EPSILON_HALVINGS + 1)`.
const MAX_EPSILON_HALVINGS: u32 = 62;

fn require_kind(l: &DecisionList, kind: ListKind) -> Result<()> {
    if l.kind() != kind {
        return Err(Error::InvalidCircuit(format!("construction needs an {kind:?} list")));
    }
    Ok(())
}

/// Shared anchor layout for linear lists: with base `x`, rows `w_i` and
/// coefficients `c_i`, anchor `i ≤ m` is `x - Σ_{j<i} c_j w_j + c_i w_i` and
/// anchor `m+1` is `x - Σ_{j<m} c_j w_j - c_m w_m`.
fn domination_anchors(x: &[Rational], w: &[Vec<Rational>], c: &[Rational]) -> Vec<Vec<Rational>> {
    let m = w.len();
    let mut prefix = x.to_vec();
    let mut out = Vec::with_capacity(m + 1);
    for i in 0..m {
        let mut a = prefix.clone();
        axpy_rational(&mut a, &c[i], &w[i]);
        out.push(a);
        axpy_rational(&mut prefix, &-&c[i], &w[i]);
    }
    out.push(prefix);
    out
}

fn rows_of(l: &DecisionList) -> Vec<Vec<Rational>> {
    l.gates()
        .iter()
        .map(|g| g.weights().iter().map(|&v| Rational::from(v)).collect())
        .collect()
}

/// Linear decision list under the regularity conditions: `m + 1` anchors.
///
/// The base point is `X' = X* - (1/(2‖w‖²))Σw`, which sits at distance
/// `1/2` below each gate's threshold, and `c_i = (1/(2‖w‖²))^i`.
pub fn construct_ldl_regular(l: &DecisionList, hint: Option<&[bool]>) -> Result<AnchorSet> {
    require_kind(l, ListKind::Ldl)?;
    let (xstar, norm) = check_gate_regularity(l.gates(), hint)?.require()?;
    let step = Rational::new(1, 2 * norm);
    let mut base = to_rationals(&xstar);
    for g in l.gates() {
        axpy(&mut base, &-&step, g.weights());
    }
    let c: Vec<Rational> = (1..=l.depth() as u32).map(|i| step.pow(i)).collect();
    let points = domination_anchors(&base, &rows_of(l), &c);
    let mut meta = AnchorMeta::new(Construction::LdlRegular);
    meta.c = c;
    meta.xstar = Some(base);
    AnchorSet::from_points(points, l.labels(), None, meta)
}

/// `W + ε I_{m,n}` for the first `ε ∈ {1/4, 1/8, …}` that makes `WWᵀ`
/// invertible, or `W` itself (with `ε = None`) when it already is.
pub fn full_rank_perturbation(w: &RationalMatrix) -> Result<(RationalMatrix, Option<Rational>)> {
    if !w.gram().det()?.is_zero() {
        return Ok((w.clone(), None));
    }
    let shift = RationalMatrix::sub_identity(w.rows(), w.cols());
    let mut eps = Rational::new(1, 4);
    for _ in 0..MAX_EPSILON_HALVINGS {
        let wp = w.add_scaled(&eps, &shift)?;
        if !wp.gram().det()?.is_zero() {
            return Ok((wp, Some(eps)));
        }
        eps = eps * Rational::half();
    }
    Err(Error::RankDeficient)
}

/// Linear decision list of depth `m ≤ n` without regularity: `m + 1` anchors
/// placed through the pseudo-inverse.
///
/// Biases become `⌈b⌉ - 1/2`, the weight matrix is nudged to full row rank
/// if needed, and the coefficients shrink as `c_i = (1/(2N))^i` with `N` the
/// largest squared row norm. The base point `X* = W⁺B` solves
/// `w_iᵀX* = b_i + Σ_{j<i} c_j w_iᵀw_j`, so gate `i` sees anchor `i` at
/// exactly `c_i‖w_i‖²` above its threshold.
pub fn construct_ldl_general(l: &DecisionList) -> Result<AnchorSet> {
    require_kind(l, ListKind::Ldl)?;
    let (m, n) = (l.depth(), l.arity());
    if m > n {
        return Err(Error::DepthExceedsArity { depth: m, arity: n });
    }
    let w = RationalMatrix::from_rows(rows_of(l))?;
    let (wp, epsilon) = full_rank_perturbation(&w)?;
    let rows = wp.to_rows();

    let norm = rows
        .iter()
        .map(|r| dot(r, r))
        .max()
        .expect("m ≥ 1");
    let ratio = (&norm + &norm).recip();
    let c: Vec<Rational> = (1..=m as u32).map(|i| ratio.pow(i)).collect();

    let half = Rational::half();
    let rhs: Vec<Rational> = (0..m)
        .map(|i| {
            let b = Rational::from(l.gates()[i].bias().ceil()) - &half;
            (0..i).fold(b, |acc, j| acc + &c[j] * dot(&rows[i], &rows[j]))
        })
        .collect();
    let xstar = wp.pseudo_inverse()?.mul_vec(&rhs)?;

    let points = domination_anchors(&xstar, &rows, &c);
    let mut meta = AnchorMeta::new(Construction::LdlGeneral);
    meta.c = c;
    meta.xstar = Some(xstar);
    meta.epsilon = epsilon;
    AnchorSet::from_points(points, l.labels(), None, meta)
}

/// Exact decision list under the regularity conditions: `(m+1)·2^m` anchors.
///
/// Block `k` holds `X* + d·u + (-1)^{j_m} c_k w_k` over all `2^m` sign words
/// `j`. The first `m-1` bits of `j` sign the other weights in `u`; the last
/// bit signs the `w_k` term. Block `m+1` reuses `w_m` with `c_{m+1} = d`.
pub fn construct_edl(l: &DecisionList, hint: Option<&[bool]>) -> Result<AnchorSet> {
    require_kind(l, ListKind::Edl)?;
    let (xstar, norm) = check_gate_regularity(l.gates(), hint)?.require()?;
    let m = l.depth();
    let base = to_rationals(&xstar);
    let d = Rational::new(1, norm);
    let mut c: Vec<Rational> = (1..=m as i64)
        .map(|i| Rational::new(i, (m as i64 + 1) * norm))
        .collect();
    c.push(d.clone());
    let labels_z = l.labels();

    let (mut points, mut labels) = (Vec::new(), Vec::new());
    for k in 0..=m {
        let own = k.min(m - 1);
        let others: Vec<usize> = (0..m).filter(|&i| i != own).collect();
        for j in 0..1usize << m {
            let bits: Vec<bool> = sign_bits(j, m).collect();
            let mut a = base.clone();
            for (&neg, &i) in bits.iter().zip(&others) {
                let s = if neg { -&d } else { d.clone() };
                axpy(&mut a, &s, l.gates()[i].weights());
            }
            let s = if bits[m - 1] { -&c[k] } else { c[k].clone() };
            axpy(&mut a, &s, l.gates()[own].weights());
            points.push(a);
            labels.push(labels_z[k]);
        }
    }
    let mut meta = AnchorMeta::new(Construction::Edl);
    meta.d = Some(d);
    meta.c = c;
    meta.xstar = Some(base);
    AnchorSet::from_points(points, labels, None, meta)
}
