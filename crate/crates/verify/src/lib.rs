//! Enumeration engines for the computer-checked statements about order-4
//! polystochastic matrices, with deterministic reports, checkpointed work
//! units and certificate replay.
//!
//! Each engine returns an [`EnumerationReport`]. Reports carry no timing or
//! thread information, so the same configuration gives byte-identical files
//! at any worker count.

pub mod census;
pub mod checkpoint;
pub mod claim_ab;
pub mod claim_planes;
pub mod config;
pub mod cube;
pub mod error;
pub mod lemmas;
pub mod replay;
pub mod report;

use std::fmt;
use std::str::FromStr;

pub use config::{OutputFormat, RunConfig};
pub use error::{Error, Result};
pub use report::{EnumerationReport, Status, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaimId {
    ClaimAb,
    ClaimPlanes,
    Census44,
    CensusDouble3,
    AddToFilled3,
    AddToFilled5,
    NoNewInFilled3,
    TheoremSmall3,
    TheoremSmall5,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::ClaimAb,
        ClaimId::ClaimPlanes,
        ClaimId::Census44,
        ClaimId::CensusDouble3,
        ClaimId::AddToFilled3,
        ClaimId::AddToFilled5,
        ClaimId::NoNewInFilled3,
        ClaimId::TheoremSmall3,
        ClaimId::TheoremSmall5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::ClaimAb => "claim-ab",
            ClaimId::ClaimPlanes => "claim-planes",
            ClaimId::Census44 => "census-44",
            ClaimId::CensusDouble3 => "census-double3",
            ClaimId::AddToFilled3 => "addtofilled-3",
            ClaimId::AddToFilled5 => "addtofilled-5",
            ClaimId::NoNewInFilled3 => "nonewinfilled-3",
            ClaimId::TheoremSmall3 => "theorem-small-3",
            ClaimId::TheoremSmall5 => "theorem-small-5",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClaimId> {
        ClaimId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

pub fn run(claim: ClaimId, config: &RunConfig) -> Result<EnumerationReport> {
    config.validate()?;
    match claim {
        ClaimId::ClaimAb => claim_ab::verify_claim_ab(config),
        ClaimId::ClaimPlanes => claim_planes::verify_claim_planes(config),
        ClaimId::Census44 => census::census_sesquialteral_3d(config),
        ClaimId::CensusDouble3 => census::census_double_perm_3d_positive(config),
        ClaimId::AddToFilled3 => lemmas::verify_addtofilled(3, config),
        ClaimId::AddToFilled5 => lemmas::verify_addtofilled(5, config),
        ClaimId::NoNewInFilled3 => lemmas::verify_nonewinfilled_base(config),
        ClaimId::TheoremSmall3 => lemmas::verify_theorem_small(3, config),
        ClaimId::TheoremSmall5 => lemmas::verify_theorem_small(5, config),
    }
}
