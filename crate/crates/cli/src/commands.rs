use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use nnrep_core::catalog::{size_table, TableRow};
use nnrep_core::repr::{construct_edl, construct_equality_system, construct_ldl_general, construct_ldl_regular, construct_polytope};
use nnrep_core::verify::verify_exhaustive_with;
use nnrep_core::{
    AnchorSet, AnchorSetFile, Circuit, CircuitFile, Error, Family, GateKind, SymmetricProfile, VerificationReport,
    VerifyOptions,
};

use crate::args::{BuildArgs, FamilyArg, Format, TableArgs, TableFormat, VerifyArgs};
use crate::Status;

pub fn read_circuit(path: &Path) -> anyhow::Result<Circuit> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: CircuitFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(file.into_circuit()?)
}

pub fn read_anchors(path: &Path) -> anyhow::Result<AnchorSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let set = if path.extension().is_some_and(|e| e == "csv") {
        nnrep_core::io::anchor_set_from_csv(&text)?
    } else {
        let file: AnchorSetFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        file.into_set()?
    };
    Ok(set)
}

fn write(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn named(f: FamilyArg) -> Option<Family> {
    Some(match f {
        FamilyArg::AndEq => Family::AndEq,
        FamilyArg::OrEq => Family::OrEq,
        FamilyArg::ParityEq => Family::ParityEq,
        FamilyArg::ParityComp => Family::ParityComp,
        FamilyArg::Ip2 => Family::Ip2,
        FamilyArg::OmbEq => Family::OmbEq,
        FamilyArg::LdlFile | FamilyArg::EdlFile | FamilyArg::PolytopeFile => return None,
    })
}

/// Anchors for an AND of threshold gates. Linear gates `w·x ≥ b` become
/// rows `-w·x ≤ -⌈b⌉`; exact gates become an equality system.
fn polytope_anchors(c: &Circuit) -> anyhow::Result<AnchorSet> {
    let Circuit::Depth2(d) = c else {
        bail!("polytope-file needs a profile top, found a decision list");
    };
    if *d.top() != SymmetricProfile::and(d.gates().len()) {
        bail!("polytope-file needs an AND top");
    }
    match d.gate_kind() {
        Some(GateKind::Linear) => {
            let a: Vec<Vec<i64>> = d.gates().iter().map(|g| g.weights().iter().map(|w| -w).collect()).collect();
            let b = d
                .gates()
                .iter()
                .map(|g| i64::try_from(g.bias().ceil()).map(|v| -v).context("bias out of range"))
                .collect::<anyhow::Result<Vec<i64>>>()?;
            Ok(construct_polytope(&a, &b)?)
        }
        Some(GateKind::Exact) => {
            let a: Vec<Vec<i64>> = d.gates().iter().map(|g| g.weights().to_vec()).collect();
            let b = d
                .gates()
                .iter()
                .map(|g| g.integer_bias().context("exact gate with a fractional bias never fires"))
                .collect::<anyhow::Result<Vec<i64>>>()?;
            Ok(construct_equality_system(&a, &b)?)
        }
        None => bail!("polytope-file needs gates of a single kind"),
    }
}

fn from_file(kind: FamilyArg, path: &Path) -> anyhow::Result<(Circuit, AnchorSet)> {
    let circuit = read_circuit(path)?;
    let set = match (kind, &circuit) {
        (FamilyArg::LdlFile, Circuit::List(l)) => match construct_ldl_regular(l, None) {
            Err(Error::RegularityViolated(_) | Error::XStarNotFound | Error::InputSpaceTooLarge { .. }) => {
                construct_ldl_general(l)?
            }
            other => other?,
        },
        (FamilyArg::EdlFile, Circuit::List(l)) => construct_edl(l, None)?,
        (FamilyArg::PolytopeFile, c) => polytope_anchors(c)?,
        _ => bail!("{} needs a decision-list circuit", kind_name(kind)),
    };
    Ok((circuit, set))
}

fn kind_name(kind: FamilyArg) -> &'static str {
    match kind {
        FamilyArg::LdlFile => "ldl-file",
        FamilyArg::EdlFile => "edl-file",
        FamilyArg::PolytopeFile => "polytope-file",
        other => named(other).map_or("?", Family::name),
    }
}

pub fn build(a: &BuildArgs) -> anyhow::Result<Status> {
    let (circuit, set) = match (named(a.family), &a.circuit) {
        (Some(f), None) => f.build(a.m as usize, a.n as usize)?,
        (Some(_), Some(_)) => bail!("--circuit only applies to the *-file families"),
        (None, Some(path)) => from_file(a.family, path)?,
        (None, None) => bail!("{} needs --circuit", kind_name(a.family)),
    };
    fs::create_dir_all(&a.out).with_context(|| format!("creating {}", a.out.display()))?;
    let circuit_json = serde_json::to_string_pretty(&CircuitFile::from_circuit(&circuit))?;
    write(&a.out.join("circuit.json"), &(circuit_json + "\n"))?;
    let anchors_path = match a.format {
        Format::Json => {
            let path = a.out.join("anchors.json");
            write(&path, &(serde_json::to_string_pretty(&AnchorSetFile::from_set(&set))? + "\n"))?;
            path
        }
        Format::Csv => {
            let path = a.out.join("anchors.csv");
            write(&path, &set.to_csv())?;
            path
        }
    };
    println!(
        "{}: {} anchors, resolution {}, construction {}, written to {}",
        kind_name(a.family),
        set.len(),
        set.resolution(),
        set.construction().name(),
        anchors_path.display()
    );
    Ok(Status::Pass)
}

fn summary(r: &VerificationReport) -> String {
    let margin = r.min_margin.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
    let trace = match r.type_trace_ok {
        Some(true) => ", type trace ok",
        Some(false) => ", type trace broken",
        None => "",
    };
    format!(
        "{}: {} inputs, {} failures, {} ties, min margin {margin}{trace}",
        if r.pass { "PASS" } else { "FAIL" },
        r.total,
        r.failure_count,
        r.ties
    )
}

pub fn verify(a: &VerifyArgs) -> anyhow::Result<Status> {
    let circuit = read_circuit(&a.circuit)?;
    let set = read_anchors(&a.anchors)?;
    if set.dim() != circuit.arity() {
        bail!("anchors have dimension {} but the circuit reads {} bits", set.dim(), circuit.arity());
    }
    let opts = VerifyOptions {
        max_bits: a.max_bits,
        ..VerifyOptions::default()
    };
    let report = verify_exhaustive_with(&set, &circuit, &opts)?;
    let json = serde_json::to_string_pretty(&report)? + "\n";
    match &a.out {
        Some(path) => {
            write(path, &json)?;
            println!("{}", summary(&report));
        }
        None => {
            print!("{json}");
            eprintln!("{}", summary(&report));
        }
    }
    Ok(if report.pass { Status::Pass } else { Status::Fail })
}

fn render_table(rows: &[TableRow], format: TableFormat) -> anyhow::Result<String> {
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    Ok(match format {
        TableFormat::Json => serde_json::to_string_pretty(rows)? + "\n",
        TableFormat::Csv => {
            let mut s = String::from("family,m,n,size,closed_form,matches,resolution,pass\n");
            for r in rows {
                s += &format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.family, r.m, r.n, r.size, r.closed_form, r.matches, r.resolution, r.pass
                );
            }
            s
        }
        TableFormat::Text => {
            let mut s = format!(
                "{:<12} {:>2} {:>2} {:>6} {:>11} {:>7} {:>10} {:>8}\n",
                "family", "m", "n", "size", "closed form", "matches", "resolution", "verified"
            );
            for r in rows {
                s += &format!(
                    "{:<12} {:>2} {:>2} {:>6} {:>11} {:>7} {:>10} {:>8}\n",
                    r.family.name(),
                    r.m,
                    r.n,
                    r.size,
                    r.closed_form,
                    yes_no(r.matches),
                    r.resolution,
                    yes_no(r.pass)
                );
            }
            s
        }
    })
}

pub fn table(a: &TableArgs) -> anyhow::Result<Status> {
    let ms: Vec<usize> = (1..=a.m as usize).collect();
    let ns: Vec<usize> = (1..=a.n as usize).collect();
    let opts = VerifyOptions {
        max_bits: a.max_bits,
        ..VerifyOptions::default()
    };
    let rows = size_table(&ms, &ns, &opts)?;
    let text = render_table(&rows, a.format)?;
    match &a.out {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(if rows.iter().all(|r| r.matches && r.pass) {
        Status::Pass
    } else {
        Status::Fail
    })
}
