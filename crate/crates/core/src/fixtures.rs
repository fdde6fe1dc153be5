//! Curated sessions with attested chart sets and their hand-derived values.
//! Derivations are recorded in `fixtures/DERIVATIONS.md`.

use crate::discrepancy::Variety;
use crate::error::{Error, Result};
use crate::session::Session;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    /// Dimension of the variety `X`.
    pub dim: usize,
    pub text: &'static str,
}

impl Fixture {
    pub fn session(&self) -> Result<Session> {
        Session::parse(self.text)
    }

    /// The ideal named `X` with the fixture dimension.
    pub fn variety(&self) -> Result<Variety> {
        let session = self.session()?;
        Variety::new(session.ideal("X")?.clone(), self.dim)
    }
}

pub const FIXTURES: [Fixture; 7] = [
    Fixture {
        name: "cusp",
        dim: 1,
        text: include_str!("../fixtures/cusp.session"),
    },
    Fixture {
        name: "quadric-cone",
        dim: 2,
        text: include_str!("../fixtures/quadric-cone.session"),
    },
    Fixture {
        name: "whitney-umbrella",
        dim: 2,
        text: include_str!("../fixtures/whitney-umbrella.session"),
    },
    Fixture {
        name: "a2",
        dim: 2,
        text: include_str!("../fixtures/a2.session"),
    },
    Fixture {
        name: "twisted-cubic-cone",
        dim: 2,
        text: include_str!("../fixtures/twisted-cubic-cone.session"),
    },
    Fixture {
        name: "plane",
        dim: 2,
        text: include_str!("../fixtures/plane.session"),
    },
    Fixture {
        name: "space",
        dim: 3,
        text: include_str!("../fixtures/space.session"),
    },
];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownName(format!("fixture {name}")))
}

/// Chart discrepancies `(km, ord_E(j_X), kj)` derived by hand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscrepancyRow {
    pub fixture: &'static str,
    pub chart: &'static str,
    pub km: i64,
    pub ord_jx: i64,
    pub kj: i64,
}

pub const DISCREPANCY_TABLE: [DiscrepancyRow; 7] = [
    DiscrepancyRow {
        fixture: "cusp",
        chart: "N",
        km: 1,
        ord_jx: 3,
        kj: -2,
    },
    DiscrepancyRow {
        fixture: "quadric-cone",
        chart: "E1",
        km: 1,
        ord_jx: 1,
        kj: 0,
    },
    DiscrepancyRow {
        fixture: "whitney-umbrella",
        chart: "N",
        km: 0,
        ord_jx: 1,
        kj: -1,
    },
    DiscrepancyRow {
        fixture: "a2",
        chart: "W",
        km: 4,
        ord_jx: 3,
        kj: 1,
    },
    DiscrepancyRow {
        fixture: "twisted-cubic-cone",
        chart: "E",
        km: 1,
        ord_jx: 2,
        kj: -1,
    },
    DiscrepancyRow {
        fixture: "plane",
        chart: "B",
        km: 1,
        ord_jx: 0,
        kj: 1,
    },
    DiscrepancyRow {
        fixture: "space",
        chart: "B",
        km: 2,
        ord_jx: 0,
        kj: 2,
    },
];

/// Usual discrepancies of the lci fixtures from the weighted formula
/// `Σ w - 1 - w(f)` for a hypersurface `f = 0`.
pub const LCI_TABLE: [(&str, &str, i64); 2] = [("quadric-cone", "E1", 0), ("a2", "W", 1)];

/// Membership of `1, x, x^2, x^3` in the multiplier ideal of `(x, y)^c` on
/// the plane, keyed by `c = num/den`.
pub const MEMBERSHIP_TABLE: [((i64, i64), [bool; 4]); 4] = [
    ((1, 2), [true, true, true, true]),
    ((3, 2), [true, true, true, true]),
    ((5, 2), [false, true, true, true]),
    ((7, 2), [false, false, true, true]),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discrepancy::jacobian_discrepancy;

    #[test]
    fn all_fixtures_parse_and_round_trip() {
        for f in &FIXTURES {
            let s = f.session().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert_eq!(Session::parse(&s.to_string()).unwrap(), s, "{}", f.name);
            assert!(s.chartset("S").is_ok(), "{}", f.name);
        }
    }

    #[test]
    fn discrepancy_table() {
        for row in &DISCREPANCY_TABLE {
            let f = fixture(row.fixture).unwrap();
            let s = f.session().unwrap();
            let r =
                jacobian_discrepancy(s.chart(row.chart).unwrap(), &f.variety().unwrap()).unwrap();
            assert_eq!(
                (r.km, r.ord_jx, r.kj),
                (row.km, row.ord_jx, row.kj),
                "{}",
                row.fixture
            );
        }
    }
}
