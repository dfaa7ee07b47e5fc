//! The measure catalog: canonical names and ordering for the ten classical
//! and seven community-aware centrality measures.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Classical (community-agnostic) centrality measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classical {
    Degree,
    Leverage,
    Laplacian,
    Diffusion,
    Mnc,
    Betweenness,
    Closeness,
    Katz,
    Pagerank,
    Subgraph,
}

impl Classical {
    pub const ALL: [Classical; 10] = [
        Classical::Degree,
        Classical::Leverage,
        Classical::Laplacian,
        Classical::Diffusion,
        Classical::Mnc,
        Classical::Betweenness,
        Classical::Closeness,
        Classical::Katz,
        Classical::Pagerank,
        Classical::Subgraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Classical::Degree => "degree",
            Classical::Leverage => "leverage",
            Classical::Laplacian => "laplacian",
            Classical::Diffusion => "diffusion",
            Classical::Mnc => "mnc",
            Classical::Betweenness => "betweenness",
            Classical::Closeness => "closeness",
            Classical::Katz => "katz",
            Classical::Pagerank => "pagerank",
            Classical::Subgraph => "subgraph",
        }
    }
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Classical::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown classical measure `{s}`")))
    }
}

/// Community-aware centrality measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CommunityAware {
    Chb,
    Pc,
    Cbm,
    Comm,
    Mv,
    Cbc,
    Ksc,
}

impl CommunityAware {
    pub const ALL: [CommunityAware; 7] = [
        CommunityAware::Chb,
        CommunityAware::Pc,
        CommunityAware::Cbm,
        CommunityAware::Comm,
        CommunityAware::Mv,
        CommunityAware::Cbc,
        CommunityAware::Ksc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommunityAware::Chb => "chb",
            CommunityAware::Pc => "pc",
            CommunityAware::Cbm => "cbm",
            CommunityAware::Comm => "comm",
            CommunityAware::Mv => "mv",
            CommunityAware::Cbc => "cbc",
            CommunityAware::Ksc => "ksc",
        }
    }
}

impl fmt::Display for CommunityAware {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CommunityAware {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CommunityAware::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown community-aware measure `{s}`")))
    }
}

/// Any catalog measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Classical(Classical),
    CommunityAware(CommunityAware),
}

impl Measure {
    /// Catalog order: the ten classical measures, then the seven
    /// community-aware ones. This order is used everywhere output is sorted.
    pub fn catalog() -> impl Iterator<Item = Measure> {
        Classical::ALL
            .into_iter()
            .map(Measure::Classical)
            .chain(CommunityAware::ALL.into_iter().map(Measure::CommunityAware))
    }

    pub fn name(self) -> &'static str {
        match self {
            Measure::Classical(m) => m.name(),
            Measure::CommunityAware(m) => m.name(),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::catalog()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown measure `{s}`")))
    }
}

/// Per-node scores for one measure. Scores are finite and indexed like the
/// graph's nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    pub measure: Measure,
    pub scores: Vec<f64>,
}

impl CentralityVector {
    pub fn new(measure: Measure, scores: Vec<f64>) -> Result<CentralityVector> {
        if scores.iter().all(|s| s.is_finite()) {
            Ok(CentralityVector { measure, scores })
        } else {
            Err(Error::NonFinite(measure.name()))
        }
    }
}
