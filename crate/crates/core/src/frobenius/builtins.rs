use std::fmt;
use std::str::FromStr;

use super::{AlgElement, AlgebraData, FrobeniusSuperalgebra, Grading};
use crate::linear::{int, Element, Parity};
use crate::Error;

/// The built-in algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `k` with `tr = id`.
    Ground,
    /// `Cl = k[c]/(c^2 - 1)`, `c` odd, with the odd trace `tr(1) = 0, tr(c) = 1`.
    CliffordOdd,
    /// `Cl` with the even trace `tr(1) = 1, tr(c) = 0`; not symmetric.
    CliffordEven,
    /// `k[y]/(y^2)` with `tr(λ + μy) = μ`.
    DualNumbers,
    /// Group algebra of the cyclic group of order `m`, trace = coefficient of
    /// the identity.
    CyclicGroup(usize),
}

impl Builtin {
    pub const NAMES: &'static str = "ground, clifford_odd, clifford_even, dual_numbers, cyclic_group(m)";

    /// The unvalidated data of this built-in.
    pub fn data(self) -> AlgebraData {
        data(self)
    }

    /// The built-ins exercised by the verification suites.
    pub fn standard() -> Vec<Builtin> {
        vec![
            Builtin::Ground,
            Builtin::CliffordOdd,
            Builtin::DualNumbers,
            Builtin::CyclicGroup(2),
            Builtin::CyclicGroup(3),
        ]
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Ground => f.write_str("ground"),
            Builtin::CliffordOdd => f.write_str("clifford_odd"),
            Builtin::CliffordEven => f.write_str("clifford_even"),
            Builtin::DualNumbers => f.write_str("dual_numbers"),
            Builtin::CyclicGroup(m) => write!(f, "cyclic_group({m})"),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    /// Accepts `cyclic_group(3)` and `cyclic_group:3` for the cyclic family.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let unknown = || Error::InvalidData(format!("unknown built-in algebra `{s}`; expected one of {}", Builtin::NAMES));
        Ok(match s {
            "ground" | "k" => Builtin::Ground,
            "clifford_odd" => Builtin::CliffordOdd,
            "clifford_even" => Builtin::CliffordEven,
            "dual_numbers" => Builtin::DualNumbers,
            _ => {
                let rest = s.strip_prefix("cyclic_group").ok_or_else(unknown)?;
                let digits = rest
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| rest.strip_prefix(':'))
                    .ok_or_else(unknown)?;
                let m: usize = digits.trim().parse().map_err(|_| unknown())?;
                if m == 0 {
                    return Err(Error::InvalidData("cyclic_group needs m >= 1".into()));
                }
                Builtin::CyclicGroup(m)
            }
        })
    }
}

fn table(dim: usize, f: impl Fn(usize, usize) -> AlgElement) -> Vec<Vec<AlgElement>> {
    (0..dim).map(|i| (0..dim).map(|j| f(i, j)).collect()).collect()
}

fn clifford(name: &str, odd_trace: bool) -> AlgebraData {
    AlgebraData {
        name: name.into(),
        labels: vec!["1".into(), "c".into()],
        parities: vec![Parity::Even, Parity::Odd],
        unit: 0,
        mult: table(2, |i, j| Element::basis((i + j) % 2)),
        trace: if odd_trace { vec![int(0), int(1)] } else { vec![int(1), int(0)] },
        trace_parity: Parity::from_bit(odd_trace),
        grading: odd_trace.then(|| Grading {
            degrees: vec![0, 0],
            trace_degree: 0,
        }),
    }
}

fn data(b: Builtin) -> AlgebraData {
    match b {
        Builtin::Ground => AlgebraData {
            name: "ground".into(),
            labels: vec!["1".into()],
            parities: vec![Parity::Even],
            unit: 0,
            mult: vec![vec![Element::basis(0)]],
            trace: vec![int(1)],
            trace_parity: Parity::Even,
            grading: Some(Grading {
                degrees: vec![0],
                trace_degree: 0,
            }),
        },
        Builtin::CliffordOdd => clifford("clifford_odd", true),
        Builtin::CliffordEven => clifford("clifford_even", false),
        Builtin::DualNumbers => AlgebraData {
            name: "dual_numbers".into(),
            labels: vec!["1".into(), "y".into()],
            parities: vec![Parity::Even, Parity::Even],
            unit: 0,
            mult: table(2, |i, j| if i + j < 2 { Element::basis(i + j) } else { Element::zero() }),
            trace: vec![int(0), int(1)],
            trace_parity: Parity::Even,
            grading: None,
        },
        Builtin::CyclicGroup(m) => AlgebraData {
            name: format!("cyclic_group({m})"),
            labels: (0..m).map(|k| if k == 0 { "1".to_string() } else if k == 1 { "g".into() } else { format!("g{k}") }).collect(),
            parities: vec![Parity::Even; m],
            unit: 0,
            mult: table(m, |i, j| Element::basis((i + j) % m)),
            trace: (0..m).map(|k| int(if k == 0 { 1 } else { 0 })).collect(),
            trace_parity: Parity::Even,
            grading: Some(Grading {
                degrees: vec![0; m],
                trace_degree: 0,
            }),
        },
    }
}

pub(super) fn build(b: Builtin) -> FrobeniusSuperalgebra {
    FrobeniusSuperalgebra::new(data(b)).expect("built-in algebras satisfy the axioms")
}
