//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::process::ExitCode;
use std::time::Instant;

use nnrep_core::boolean::{dl_to_dom_circuit, families, input_from_index};
use nnrep_core::catalog::table_row;
use nnrep_core::repr::{construct_ldl_general, construct_polytope, construct_sym_elt, construct_sym_lt};
use nnrep_core::verify::{verify_exhaustive, FnOracle, VerificationReport, VerifyOptions};
use nnrep_core::{AnchorSet, Construction, DecisionList, Family, Rational, SymmetricProfile, ThresholdGate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// Every passing report seen during the run, for the margin criterion.
#[derive(Default)]
struct Seen {
    passing: Vec<(String, VerificationReport)>,
}

impl Seen {
    fn record(&mut self, what: impl Into<String>, r: &VerificationReport) {
        if r.pass {
            self.passing.push((what.into(), r.clone()));
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_sizes(seen: &mut Seen) -> Outcome {
    let opts = VerifyOptions::default();
    let mut cells = 0;
    for family in Family::ALL {
        for m in 1..=3 {
            for n in 1..=2 {
                let (row, report) = match family {
                    Family::Ip2 if m != n => continue,
                    _ => table_row(family, m, n, &opts).map_err(|e| e.to_string())?,
                };
                check(row.matches, || format!("{family} m={m} n={n}: {} anchors, want {}", row.size, row.closed_form))?;
                check(report.pass, || format!("{family} m={m} n={n}: {} failures", report.failure_count))?;
                check(report.total == 1 << family.input_bits(m, n), || format!("{family}: partial cube"))?;
                seen.record(format!("{family} m={m} n={n}"), &report);
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells, sizes match and all verify"))
}

fn random_polytopes(seen: &mut Seen) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut accepted = 0;
    while accepted < 20 {
        let n = rng.gen_range(1..=6);
        let m = rng.gen_range(1..=4);
        let a: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let b: Vec<i64> = (0..m).map(|_| rng.gen_range(-3..=3)).collect();
        if a.iter().any(|r| r.iter().all(|&v| v == 0)) {
            continue;
        }
        let s = construct_polytope(&a, &b).map_err(|e| e.to_string())?;
        if s.construction() != Construction::Polytope {
            // No binary feasible point; only feasible systems count here.
            continue;
        }
        check(s.len() == m + 1, || format!("{} anchors for m={m}", s.len()))?;
        let f = FnOracle::new(n, |x: &[bool]| {
            a.iter().zip(&b).all(|(row, &bi)| {
                row.iter().zip(x).filter(|(_, &xi)| xi).map(|(v, _)| v).sum::<i64>() <= bi
            })
        });
        let r = verify_exhaustive(&s, &f).map_err(|e| e.to_string())?;
        check(r.pass, || format!("polytope {a:?} ≤ {b:?}: {} failures", r.failure_count))?;
        let a0 = s.anchors().row(0);
        for (i, (row, &bi)) in a.iter().zip(&b).enumerate() {
            let ai = s.anchors().row(i + 1);
            let mid: Rational = row
                .iter()
                .zip(a0.iter().zip(ai))
                .map(|(&r, (p, q))| Rational::from(r) * (p + q) * Rational::half())
                .sum();
            check(mid == Rational::from(bi) + Rational::half(), || format!("midpoint {i} off its hyperplane"))?;
        }
        seen.record("polytope", &r);
        accepted += 1;
    }
    Ok("20 feasible polytopes: m+1 anchors, verified, midpoints on shifted facets".into())
}

fn decision_lists(seen: &mut Seen) -> Outcome {
    let start = Instant::now();
    let fig = families::five_input_ldl();
    let s = construct_ldl_general(&fig).map_err(|e| e.to_string())?;
    let r = verify_exhaustive(&s, &fig).map_err(|e| e.to_string())?;
    check(s.len() == 4 && r.pass && r.total == 32, || format!("five-input list: {} anchors, pass={}", s.len(), r.pass))?;
    seen.record("five-input list", &r);

    let p = families::eight_input_symmetric();
    let l = families::symmetric_ldl(&p).ok_or("no list for the symmetric function")?;
    let s = construct_ldl_general(&l).map_err(|e| e.to_string())?;
    let f = FnOracle::new(8, |x: &[bool]| p.value(x.iter().filter(|&&b| b).count()));
    let r = verify_exhaustive(&s, &f).map_err(|e| e.to_string())?;
    check(s.len() == 5 && p.interval_count() == 5, || format!("{} anchors, I(f) = {}", s.len(), p.interval_count()))?;
    check(r.pass && r.total == 256, || format!("symmetric list: {} failures", r.failure_count))?;
    seen.record("eight-input symmetric", &r);
    let elapsed = start.elapsed();
    check(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))?;
    Ok(format!("4 anchors over 2^5, 5 = I(f) anchors over 2^8, {elapsed:.2?}"))
}

fn edl(seen: &mut Seen) -> Outcome {
    let opts = VerifyOptions::default();
    let mut sizes = Vec::new();
    for m in 1..=3 {
        let (row, r) = table_row(Family::OmbEq, m, 1, &opts).map_err(|e| e.to_string())?;
        check(row.size == (m + 1) << m && r.pass, || format!("m={m}: {} anchors, {} failures", row.size, r.failure_count))?;
        seen.record(format!("omb-eq m={m}"), &r);
        sizes.push(row.size);
    }
    Ok(format!("sizes {sizes:?}, zero failures"))
}

fn resolution(seen: &mut Seen) -> Outcome {
    let opts = VerifyOptions::default();
    let ip2: Vec<u64> = (2..=4)
        .map(|n| table_row(Family::Ip2, n, n, &opts).map(|(row, r)| {
            seen.record(format!("ip2 n={n}"), &r);
            row.resolution
        }))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    check(ip2.windows(2).all(|w| w[0] == w[1]), || format!("ip2 resolutions {ip2:?}"))?;

    let mut eq_notes = Vec::new();
    for family in [Family::AndEq, Family::OrEq, Family::ParityEq, Family::OmbEq] {
        let res: Vec<u64> = (1..=4)
            .map(|n| family.build(2, n).map(|(_, s)| s.resolution()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        check(res.windows(2).all(|w| w[0] <= w[1]), || format!("{family} resolutions {res:?} decrease"))?;
        // Fit c on n = 1, 2 and hold it for n = 3, 4.
        let c = res[0].max(res[1].div_ceil(2));
        check(
            res.iter().enumerate().all(|(i, &r)| r <= c * (i as u64 + 1)),
            || format!("{family} resolutions {res:?} exceed {c}·n"),
        )?;
        eq_notes.push(format!("{family} {res:?} ≤ {c}n"));
    }
    Ok(format!("ip2 {ip2:?}; {}", eq_notes.join("; ")))
}

fn all_profiles(m: usize) -> impl Iterator<Item = SymmetricProfile> {
    (0..1usize << (m + 1))
        .map(move |v| SymmetricProfile::new(input_from_index(v, m + 1)).expect("nonempty"))
        .filter(|p| p.interval_count() > 1)
}

fn type_traces(seen: &mut Seen) -> Outcome {
    let (mut elt, mut lt, mut inputs) = (0, 0, 0u64);
    for m in 1..=3 {
        for n in 1..=2 {
            for p in all_profiles(m) {
                let c = families::compose_disjoint(p.clone(), &families::build_eq(n), m);
                let s = construct_sym_elt(&c, None).map_err(|e| e.to_string())?;
                let r = verify_exhaustive(&s, &c).map_err(|e| e.to_string())?;
                check(r.pass && r.type_trace_ok == Some(true), || {
                    format!("exact m={m} n={n} {:?}: {} type mismatches", p.values(), r.type_mismatches)
                })?;
                seen.record("sym exact", &r);
                elt += 1;
                inputs += r.total;

                for g in [families::build_comp(n), families::build_and2()] {
                    let c = families::compose_disjoint(p.clone(), &g, m);
                    let s = construct_sym_lt(&c, None).map_err(|e| e.to_string())?;
                    let r = verify_exhaustive(&s, &c).map_err(|e| e.to_string())?;
                    check(r.pass && r.type_trace_ok == Some(true), || {
                        format!("linear m={m} n={n} {:?}: {} type mismatches", p.values(), r.type_mismatches)
                    })?;
                    seen.record("sym linear", &r);
                    lt += 1;
                    inputs += r.total;
                }
            }
        }
    }
    Ok(format!("{elt} exact-gate and {lt} linear-gate runs, {inputs} inputs, no type mismatch"))
}

fn margins(seen: &Seen) -> Outcome {
    for (what, r) in &seen.passing {
        check(r.ties == 0, || format!("{what}: {} ties", r.ties))?;
        let positive = r.min_margin.as_ref().is_some_and(Rational::is_positive);
        check(positive, || format!("{what}: margin {:?}", r.min_margin))?;
    }
    let smallest = seen
        .passing
        .iter()
        .filter_map(|(_, r)| r.min_margin.clone())
        .min()
        .ok_or("no passing runs recorded")?;
    Ok(format!("{} passing runs, smallest margin {smallest}", seen.passing.len()))
}

fn random_list(rng: &mut ChaCha8Rng) -> DecisionList {
    let n = rng.gen_range(1..=8);
    let m = rng.gen_range(1..=5);
    let gates = (0..m)
        .map(|_| {
            let w = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
            ThresholdGate::linear(w, rng.gen_range(-5..=5)).expect("n ≥ 1")
        })
        .collect();
    DecisionList::new(gates, (0..m).map(|_| rng.gen()).collect(), rng.gen()).expect("consistent")
}

fn dom_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut inputs = 0;
    for i in 0..50 {
        let l = random_list(&mut rng);
        let dom = dl_to_dom_circuit(&l);
        for v in 0..1usize << l.arity() {
            let x = input_from_index(v, l.arity());
            check(l.eval(&x).ok() == dom.eval(&x).ok(), || format!("list {i} disagrees on {v}"))?;
            inputs += 1;
        }
    }
    Ok(format!("50 random lists, {inputs} inputs, zero disagreements"))
}

fn negative_control() -> Outcome {
    let opts = VerifyOptions::default();
    let mut sets = 0;
    for family in Family::ALL {
        for m in 1..=2 {
            let (c, s) = family.build(m, 1).map_err(|e| e.to_string())?;
            let r = nnrep_core::verify::verify_exhaustive_with(&s.complement(), &c, &opts).map_err(|e| e.to_string())?;
            check(!r.pass && r.failure_count == r.total, || format!("{family} m={m}: swapped set passed"))?;
            sets += 1;
        }
    }
    let half = Rational::half();
    let and = AnchorSet::manual(
        vec![vec![half.clone(), half], vec![Rational::one(), Rational::one()]],
        vec![true, false],
    )
    .map_err(|e| e.to_string())?;
    let f = FnOracle::new(2, |x: &[bool]| x[0] && x[1]);
    let r = verify_exhaustive(&and, &f).map_err(|e| e.to_string())?;
    check(!r.pass && r.failure_count == 4, || format!("swapped AND: {} failures", r.failure_count))?;
    Ok(format!("{sets} swapped family sets fail on every input; swapped AND fails on 4 of 4"))
}

fn main() -> ExitCode {
    let mut seen = Seen::default();
    let results: Vec<(&str, Outcome)> = vec![
        ("size table", table_sizes(&mut seen)),
        ("polytope reflections", random_polytopes(&mut seen)),
        ("linear decision lists", decision_lists(&mut seen)),
        ("exact decision lists", edl(&mut seen)),
        ("resolution growth", resolution(&mut seen)),
        ("anchor type traces", type_traces(&mut seen)),
        ("strict margins", margins(&seen)),
        ("list vs domination gate", dom_equivalence()),
        ("label-swap negative control", negative_control()),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
