//! Property distributions of a graph and the distances used to compare a
//! sample's distributions with those of the full graph.

mod distance;
mod distribution;
mod properties;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use distance::{ks_distance, skew_divergence, DEFAULT_SKEW_ALPHA};
pub use distribution::Distribution;
pub use properties::{
    clustering_distribution, component_sizes, degree_distribution, local_clustering,
    path_length_distribution, path_length_histogram, property_distribution, wcc_size_distribution,
    PathSampling,
};

use crate::error::Error;

/// The four graph properties a sample is judged on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Degree,
    PathLength,
    Clustering,
    WccSize,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Degree,
        Property::PathLength,
        Property::Clustering,
        Property::WccSize,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Property::Degree => "degree",
            Property::PathLength => "path_length",
            Property::Clustering => "clustering",
            Property::WccSize => "wcc_size",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown property '{s}'")))
    }
}
