//! Anchor constructions for threshold circuits and decision lists.

mod anchor_set;
mod decision_list;
mod polytope;
mod regularity;
mod subsets;
mod symmetric;

pub use anchor_set::{size_and_resolution, AnchorMeta, AnchorSet, Construction};
pub use decision_list::{
    construct_edl, construct_ldl_general, construct_ldl_regular, full_rank_perturbation,
};
pub use polytope::{construct_equality_system, construct_polytope, find_binary_feasible};
pub use regularity::{check_gate_regularity, check_regularity, RegularityReport, XSTAR_SEARCH_CAP};
pub use subsets::{binomial, lex_subsets};
pub use symmetric::{construct_sym_elt, construct_sym_lt, sym_elt_types, sym_lt_types};

use crate::numerics::Rational;

fn to_rationals(x: &[bool]) -> Vec<Rational> {
    x.iter().map(|&b| Rational::from(i64::from(b))).collect()
}

/// `acc += k·w` for an integer row.
fn axpy(acc: &mut [Rational], k: &Rational, w: &[i64]) {
    for (a, &v) in acc.iter_mut().zip(w) {
        if v != 0 {
            *a += k * Rational::from(v);
        }
    }
}

/// `acc += k·w` for a rational row.
fn axpy_rational(acc: &mut [Rational], k: &Rational, w: &[Rational]) {
    for (a, v) in acc.iter_mut().zip(w) {
        if !v.is_zero() {
            *a += k * v;
        }
    }
}
