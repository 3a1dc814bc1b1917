//! JSON report documents.
//!
//! Witnesses are rendered through element labels. Timing data is left out so
//! that identical inputs give byte-identical output.

use serde::Serialize;

use crate::checks::{CheckReport, Property, Witness};
use crate::laws::{LawId, LawReport, Reading, Status};
use crate::ortho::OrthoPoset;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedSet {
    pub name: String,
    pub members: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub elements: Vec<String>,
    pub sets: Vec<NamedSet>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub property_id: Property,
    pub holds: bool,
    pub mode: String,
    pub witnesses: Vec<WitnessEntry>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawEntry {
    pub law_id: LawId,
    pub applicable: bool,
    pub holds: bool,
    pub status: Status,
    pub reading: Option<Reading>,
    pub witnesses: Vec<WitnessEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub poset: String,
    pub tool_version: String,
    pub checks: Vec<CheckEntry>,
    pub laws: Vec<LawEntry>,
}

fn witness(o: &OrthoPoset, w: &Witness) -> WitnessEntry {
    WitnessEntry {
        elements: w.elements.iter().map(|&e| o.label(e).to_string()).collect(),
        sets: w
            .sets
            .iter()
            .map(|(name, m)| NamedSet {
                name: name.clone(),
                members: o.labels(*m),
            })
            .collect(),
        note: w.note.clone(),
    }
}

impl ReportDocument {
    pub fn new(o: &OrthoPoset) -> Self {
        ReportDocument {
            poset: o.name().to_string(),
            tool_version: TOOL_VERSION.to_string(),
            checks: Vec::new(),
            laws: Vec::new(),
        }
    }

    pub fn push_check(&mut self, o: &OrthoPoset, r: &CheckReport) {
        self.checks.push(CheckEntry {
            property_id: r.property,
            holds: r.holds,
            mode: r.mode.clone(),
            witnesses: r.witnesses.iter().map(|w| witness(o, w)).collect(),
            notes: r.notes.clone(),
        });
    }

    pub fn push_law(&mut self, o: &OrthoPoset, r: &LawReport) {
        self.laws.push(LawEntry {
            law_id: r.law,
            applicable: r.applicable,
            holds: r.holds,
            status: r.status,
            reading: r.reading,
            witnesses: r.witnesses.iter().map(|w| witness(o, w)).collect(),
        });
    }

    /// `true` when every check and every law holds.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds) && self.laws.iter().all(|l| l.holds)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
