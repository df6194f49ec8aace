//! Plot data for two-input examples: anchors, labelled cube vertices, and
//! the perpendicular bisector of every opposite-label anchor pair.

use std::fmt::Write as _;
use std::fs;

use anyhow::Context;
use nnrep_core::boolean::input_from_index;
use nnrep_core::numerics::dot;
use nnrep_core::repr::construct_polytope;
use nnrep_core::verify::{verify_exhaustive, FnOracle};
use nnrep_core::{AnchorSet, Rational};

use crate::args::{DemoArgs, DemoKind};
use crate::Status;

type Target = fn(&[bool]) -> bool;

/// Anchor set and target function for each demo.
fn example(kind: DemoKind) -> anyhow::Result<(AnchorSet, Target)> {
    Ok(match kind {
        // x1 + x2 ≥ 2 as -x1 - x2 ≤ -2.
        DemoKind::And2 => (construct_polytope(&[vec![-1, -1]], &[-2])?, |x| x[0] && x[1]),
        // OR is the complement of the region x1 + x2 ≤ 0.
        DemoKind::Or2 => (construct_polytope(&[vec![1, 1]], &[0])?.complement(), |x| x[0] || x[1]),
        // Pentagon x ≤ 1, y ≤ 1, x ≥ 0, y ≥ 0, x + y ≤ 1.
        DemoKind::Polytope2d => (
            construct_polytope(
                &[vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1], vec![1, 1]],
                &[1, 1, 0, 0, 1],
            )?,
            |x| !(x[0] && x[1]),
        ),
    })
}

fn vertices_csv(f: Target) -> String {
    let mut s = String::from("x1,x2,label\n");
    for v in 0..4 {
        let x = input_from_index(v, 2);
        writeln!(s, "{},{},{}", u8::from(x[0]), u8::from(x[1]), u8::from(f(&x))).unwrap();
    }
    s
}

/// Points nearer `p` than `q` satisfy `2(q - p)·x < |q|² - |p|²`.
fn bisectors_csv(set: &AnchorSet) -> String {
    let mut s = String::from("positive,negative,a1,a2,c\n");
    let rows = set.anchors();
    for i in set.positive() {
        for j in set.negative() {
            let (p, q) = (rows.row(i), rows.row(j));
            let two = Rational::from(2);
            let a: Vec<Rational> = p.iter().zip(q).map(|(pk, qk)| &two * &(qk - pk)).collect();
            let c = dot(q, q) - dot(p, p);
            writeln!(s, "{i},{j},{},{},{c}", a[0], a[1]).unwrap();
        }
    }
    s
}

pub fn demo(a: &DemoArgs) -> anyhow::Result<Status> {
    let (set, f) = example(a.family)?;
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    for (name, text) in [
        ("anchors.csv", set.to_csv()),
        ("vertices.csv", vertices_csv(f)),
        ("bisectors.csv", bisectors_csv(&set)),
    ] {
        let path = a.out.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    let report = verify_exhaustive(&set, &FnOracle::new(2, f))?;
    println!(
        "{} anchors, resolution {}, {} on all 4 inputs, written to {}",
        set.len(),
        set.resolution(),
        if report.pass { "correct" } else { "wrong" },
        a.out.display()
    );
    Ok(if report.pass { Status::Pass } else { Status::Fail })
}
