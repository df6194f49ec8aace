use super::anchor_set::{AnchorMeta, AnchorSet, Construction};
use super::regularity::check_gate_regularity;
use super::subsets::{lex_subsets, sign_bits};
use super::{axpy, to_rationals};
use crate::boolean::{Depth2Circuit, GateKind};
use crate::error::{Error, Result};
use crate::numerics::Rational;

fn require_kind(c: &Depth2Circuit, kind: GateKind) -> Result<()> {
    if c.gate_kind() != Some(kind) {
        return Err(Error::InvalidCircuit(format!(
            "construction needs {} first-layer gates",
            match kind {
                GateKind::Linear => "linear",
                GateKind::Exact => "exact",
            }
        )));
    }
    Ok(())
}

/// Types used by the exact-gate construction: the left boundary
/// `I_{l-1} + 1` of every interval.
pub fn sym_elt_types(c: &Depth2Circuit) -> Vec<usize> {
    let mut t = vec![0];
    let bounds = c.top().intervals();
    t.extend(bounds[..bounds.len() - 1].iter().map(|b| b + 1));
    t
}

/// Types used by the linear-gate construction: both sides of every
/// interior boundary, `I_l` and `I_l + 1`, deduplicated.
pub fn sym_lt_types(c: &Depth2Circuit) -> Vec<usize> {
    let bounds = c.top().intervals();
    let mut t: Vec<usize> = bounds[..bounds.len() - 1]
        .iter()
        .flat_map(|&b| [b, b + 1])
        .collect();
    t.dedup();
    t
}

/// Symmetric top over exact gates under the regularity conditions.
///
/// For each type `t` and each `(m-t)`-subset of gates, the anchors are
/// `X* + d·Σ ±w_i` over every sign pattern, with `d = 1/(m‖w‖²)`. Type `t`
/// anchors carry the top's value at `|Z| = t`.
pub fn construct_sym_elt(c: &Depth2Circuit, hint: Option<&[bool]>) -> Result<AnchorSet> {
    require_kind(c, GateKind::Exact)?;
    let top = c.top();
    if top.interval_count() == 1 {
        return Ok(AnchorSet::constant(c.arity(), top.value(0)));
    }
    let (xstar, norm) = check_gate_regularity(c.gates(), hint)?.require()?;
    let m = c.depth();
    let d = Rational::new(1, m as i64 * norm);
    let base = to_rationals(&xstar);

    let (mut points, mut labels, mut types) = (Vec::new(), Vec::new(), Vec::new());
    for t in sym_elt_types(c) {
        let width = m - t;
        for subset in lex_subsets(m, width) {
            for j in 0..1usize << width {
                let mut a = base.clone();
                for (neg, &i) in sign_bits(j, width).zip(&subset) {
                    let k = if neg { -&d } else { d.clone() };
                    axpy(&mut a, &k, c.gates()[i].weights());
                }
                points.push(a);
                labels.push(top.value(t));
                types.push(t);
            }
        }
    }
    let mut meta = AnchorMeta::new(Construction::SymElt);
    meta.d = Some(d);
    meta.xstar = Some(base);
    AnchorSet::from_points(points, labels, Some(types), meta)
}

/// Symmetric top over linear gates under the regularity conditions.
///
/// Biases are lowered by `1/2`, which moves the base point to
/// `X* - (1/(2‖w‖²))Σw`. Only the all-negative sign pattern is kept, so each
/// type `t` contributes one anchor per `(m-t)`-subset. The step is
/// `d = 1/(2‖w‖²)` for every `m`.
pub fn construct_sym_lt(c: &Depth2Circuit, hint: Option<&[bool]>) -> Result<AnchorSet> {
    require_kind(c, GateKind::Linear)?;
    let top = c.top();
    if top.interval_count() == 1 {
        return Ok(AnchorSet::constant(c.arity(), top.value(0)));
    }
    let (xstar, norm) = check_gate_regularity(c.gates(), hint)?.require()?;
    let m = c.depth();
    let d = Rational::new(1, 2 * norm);
    let mut base = to_rationals(&xstar);
    let neg_d = -&d;
    for g in c.gates() {
        axpy(&mut base, &neg_d, g.weights());
    }

    let (mut points, mut labels, mut types) = (Vec::new(), Vec::new(), Vec::new());
    for t in sym_lt_types(c) {
        for subset in lex_subsets(m, m - t) {
            let mut a = base.clone();
            for &i in &subset {
                axpy(&mut a, &neg_d, c.gates()[i].weights());
            }
            points.push(a);
            labels.push(top.value(t));
            types.push(t);
        }
    }
    let mut meta = AnchorMeta::new(Construction::SymLt);
    meta.d = Some(d);
    meta.xstar = Some(base);
    AnchorSet::from_points(points, labels, Some(types), meta)
}
