use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Closed registry of verifiable claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    RhoMax,
    LambdaMax,
    QMax,
    WienerMin,
    HyperWienerMin,
    HararyMax,
    PrMax,
    Zagreb2Max,
    SubtreesMax,
    HosoyaMin,
    MsMax,
    EnergyMin,
    BfsEquivalence,
    MajorRho,
    MajorLambda,
    MajorQ,
    MajorWiener,
    MajorHyperWiener,
    MajorHarary,
    MajorEnergy,
    MajorHosoya,
    MajorMs,
    MajorSubtrees,
    MajorDirichlet,
    CaterpillarWiener,
    CaterpillarHyper,
    UnicyclicRho,
    UnicyclicQ,
    DirichletTree,
    DirichletUnicyclic,
    DirichletConjecture,
    DirichletBicyclic,
    DirichletPendant,
    BfsRho,
    BfsQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Greedy tree optimal within one tree sequence.
    Tree,
    /// Greedy-tree values monotone along majorization.
    Majorization,
    Caterpillar,
    Unicyclic,
    Dirichlet,
    BfsNecessity,
}

impl Tag {
    pub const ALL: [Tag; 35] = [
        Tag::RhoMax,
        Tag::LambdaMax,
        Tag::QMax,
        Tag::WienerMin,
        Tag::HyperWienerMin,
        Tag::HararyMax,
        Tag::PrMax,
        Tag::Zagreb2Max,
        Tag::SubtreesMax,
        Tag::HosoyaMin,
        Tag::MsMax,
        Tag::EnergyMin,
        Tag::BfsEquivalence,
        Tag::MajorRho,
        Tag::MajorLambda,
        Tag::MajorQ,
        Tag::MajorWiener,
        Tag::MajorHyperWiener,
        Tag::MajorHarary,
        Tag::MajorEnergy,
        Tag::MajorHosoya,
        Tag::MajorMs,
        Tag::MajorSubtrees,
        Tag::MajorDirichlet,
        Tag::CaterpillarWiener,
        Tag::CaterpillarHyper,
        Tag::UnicyclicRho,
        Tag::UnicyclicQ,
        Tag::DirichletTree,
        Tag::DirichletUnicyclic,
        Tag::DirichletConjecture,
        Tag::DirichletBicyclic,
        Tag::DirichletPendant,
        Tag::BfsRho,
        Tag::BfsQ,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::RhoMax => "rho-max",
            Tag::LambdaMax => "lambda-max",
            Tag::QMax => "q-max",
            Tag::WienerMin => "wiener-min",
            Tag::HyperWienerMin => "hyperwiener-min",
            Tag::HararyMax => "harary-max",
            Tag::PrMax => "pr-max",
            Tag::Zagreb2Max => "zagreb2-max",
            Tag::SubtreesMax => "subtrees-max",
            Tag::HosoyaMin => "hosoya-min",
            Tag::MsMax => "ms-max",
            Tag::EnergyMin => "energy-min",
            Tag::BfsEquivalence => "bfs-equivalence",
            Tag::MajorRho => "major-rho",
            Tag::MajorLambda => "major-lambda",
            Tag::MajorQ => "major-q",
            Tag::MajorWiener => "major-wiener",
            Tag::MajorHyperWiener => "major-hyperwiener",
            Tag::MajorHarary => "major-harary",
            Tag::MajorEnergy => "major-energy",
            Tag::MajorHosoya => "major-hosoya",
            Tag::MajorMs => "major-ms",
            Tag::MajorSubtrees => "major-subtrees",
            Tag::MajorDirichlet => "major-dirichlet",
            Tag::CaterpillarWiener => "caterpillar-wiener",
            Tag::CaterpillarHyper => "caterpillar-hyper",
            Tag::UnicyclicRho => "unicyclic-rho",
            Tag::UnicyclicQ => "unicyclic-q",
            Tag::DirichletTree => "dirichlet-tree",
            Tag::DirichletUnicyclic => "dirichlet-unicyclic",
            Tag::DirichletConjecture => "dirichlet-conjecture",
            Tag::DirichletBicyclic => "dirichlet-bicyclic",
            Tag::DirichletPendant => "dirichlet-pendant",
            Tag::BfsRho => "bfs-rho",
            Tag::BfsQ => "bfs-q",
        }
    }

    pub fn family(self) -> Family {
        use Tag::*;
        match self {
            RhoMax | LambdaMax | QMax | WienerMin | HyperWienerMin | HararyMax | PrMax
            | Zagreb2Max | SubtreesMax | HosoyaMin | MsMax | EnergyMin | BfsEquivalence => {
                Family::Tree
            }
            MajorRho | MajorLambda | MajorQ | MajorWiener | MajorHyperWiener | MajorHarary
            | MajorEnergy | MajorHosoya | MajorMs | MajorSubtrees | MajorDirichlet => {
                Family::Majorization
            }
            CaterpillarWiener | CaterpillarHyper => Family::Caterpillar,
            UnicyclicRho | UnicyclicQ => Family::Unicyclic,
            DirichletTree | DirichletUnicyclic | DirichletConjecture | DirichletBicyclic
            | DirichletPendant => Family::Dirichlet,
            BfsRho | BfsQ => Family::BfsNecessity,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

/// Parses a comma-separated list of tags and groups (`all`, `all-tree`,
/// `all-majorization`, `all-dirichlet`). The result is deduplicated and in
/// registry order.
pub fn parse_suites(spec: &str) -> Result<Vec<Tag>> {
    let mut out = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let group: Option<Vec<Tag>> = match item {
            "all" => Some(Tag::ALL.to_vec()),
            "all-tree" => Some(family(Family::Tree)),
            "all-majorization" => Some(family(Family::Majorization)),
            "all-dirichlet" => Some(family(Family::Dirichlet)),
            _ => None,
        };
        match group {
            Some(tags) => out.extend(tags),
            None => out.push(item.parse()?),
        }
    }
    if out.is_empty() {
        return Err(Error::invalid("no suites selected"));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn family(f: Family) -> Vec<Tag> {
    Tag::ALL.into_iter().filter(|t| t.family() == f).collect()
}
