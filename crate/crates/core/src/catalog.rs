//! Named function families, their anchor constructions, and the size table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::boolean::families;
use crate::error::{Error, Result};
use crate::io::Circuit;
use crate::repr::{
    construct_edl, construct_equality_system, construct_sym_elt, construct_sym_lt, AnchorSet,
};
use crate::verify::{verify_exhaustive_with, VerificationReport, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `AND_m ∘ EQ_2n`, built as one equality system.
    AndEq,
    /// `OR_m ∘ EQ_2n`
    OrEq,
    /// `PARITY_m ∘ EQ_2n`
    ParityEq,
    /// `PARITY_m ∘ COMP_2n`
    ParityComp,
    /// `IP2_2n = PARITY_n ∘ AND_2`; `m` is ignored.
    Ip2,
    /// `OMB_m ∘ EQ_2n` as an exact decision list.
    OmbEq,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::AndEq,
        Family::OrEq,
        Family::ParityEq,
        Family::ParityComp,
        Family::Ip2,
        Family::OmbEq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::AndEq => "and-eq",
            Family::OrEq => "or-eq",
            Family::ParityEq => "parity-eq",
            Family::ParityComp => "parity-comp",
            Family::Ip2 => "ip2",
            Family::OmbEq => "omb-eq",
        }
    }

    /// Number of input bits of the family member.
    pub fn input_bits(self, m: usize, n: usize) -> usize {
        match self {
            Family::Ip2 => 2 * n,
            _ => 2 * n * m,
        }
    }

    /// Anchor count predicted by the size formula.
    pub fn closed_form_size(self, m: usize, n: usize) -> usize {
        match self {
            Family::AndEq => 2 * m + 1,
            Family::OrEq => (m + 2) << (m - 1),
            Family::ParityEq => 3usize.pow(m as u32),
            Family::ParityComp => 1 << m,
            Family::Ip2 => 1 << n,
            Family::OmbEq => (m + 1) << m,
        }
    }

    /// The reference circuit.
    pub fn circuit(self, m: usize, n: usize) -> Circuit {
        match self {
            Family::AndEq => Circuit::Depth2(families::and_eq(m, n)),
            Family::OrEq => Circuit::Depth2(families::or_eq(m, n)),
            Family::ParityEq => Circuit::Depth2(families::parity_eq(m, n)),
            Family::ParityComp => Circuit::Depth2(families::parity_comp(m, n)),
            Family::Ip2 => Circuit::Depth2(families::ip2(n)),
            Family::OmbEq => Circuit::List(families::omb_eq(m, n)),
        }
    }

    /// Known binary base point: zeros solve every EQ/COMP block, ones solve
    /// every `x + y = 2` block.
    fn base_point(self, m: usize, n: usize) -> Vec<bool> {
        vec![self == Family::Ip2; self.input_bits(m, n)]
    }

    /// Builds the family member and its anchor set.
    pub fn build(self, m: usize, n: usize) -> Result<(Circuit, AnchorSet)> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidCircuit("m and n must be at least 1".into()));
        }
        let circuit = self.circuit(m, n);
        let hint = self.base_point(m, n);
        let anchors = match (&circuit, self) {
            (Circuit::Depth2(c), Family::AndEq) => {
                let rows: Vec<Vec<i64>> = c.gates().iter().map(|g| g.weights().to_vec()).collect();
                construct_equality_system(&rows, &vec![0; rows.len()])?
            }
            (Circuit::Depth2(c), Family::ParityComp | Family::Ip2) => construct_sym_lt(c, Some(&hint))?,
            (Circuit::Depth2(c), _) => construct_sym_elt(c, Some(&hint))?,
            (Circuit::List(l), _) => construct_edl(l, Some(&hint))?,
        };
        Ok((circuit, anchors))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidCircuit(format!("unknown family {s:?}")))
    }
}

/// One cell of the size table, checked by exhaustive verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    pub size: usize,
    pub closed_form: usize,
    pub matches: bool,
    pub resolution: u64,
    pub pass: bool,
}

/// Builds and verifies one cell.
pub fn table_row(family: Family, m: usize, n: usize, opts: &VerifyOptions) -> Result<(TableRow, VerificationReport)> {
    let (circuit, anchors) = family.build(m, n)?;
    let report = verify_exhaustive_with(&anchors, &circuit, opts)?;
    let closed_form = family.closed_form_size(m, n);
    let row = TableRow {
        family,
        m,
        n,
        size: anchors.len(),
        closed_form,
        matches: anchors.len() == closed_form,
        resolution: anchors.resolution(),
        pass: report.pass,
    };
    Ok((row, report))
}

/// Every family over `ms × ns`. `IP2` has no `m`, so its rows take
/// `m = n` over the `ns` range only.
pub fn size_table(ms: &[usize], ns: &[usize], opts: &VerifyOptions) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for family in Family::ALL {
        if family == Family::Ip2 {
            for &n in ns {
                rows.push(table_row(family, n, n, opts)?.0);
            }
            continue;
        }
        for &m in ms {
            for &n in ns {
                rows.push(table_row(family, m, n, opts)?.0);
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("xor-eq".parse::<Family>().is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(Family::AndEq.closed_form_size(3, 1), 7);
        assert_eq!(Family::OrEq.closed_form_size(2, 1), 8);
        assert_eq!(Family::ParityComp.closed_form_size(3, 1), 8);
        assert_eq!(Family::OmbEq.closed_form_size(2, 1), 12);
    }

    #[test]
    fn small_cells_verify() {
        let opts = VerifyOptions::default();
        for f in Family::ALL {
            let (row, report) = table_row(f, 2, 1, &opts).unwrap();
            assert!(row.matches, "{f}: {} vs {}", row.size, row.closed_form);
            assert!(report.pass, "{f}: {:?}", report.failures);
        }
    }
}
