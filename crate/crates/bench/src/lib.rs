//! Shared fixtures for the benchmarks.

use streamsamp::stream::{generate_synthetic, SyntheticModel};
use streamsamp::EdgeList;

pub fn preferential_attachment(n: usize, m: usize) -> EdgeList {
    generate_synthetic(SyntheticModel::PreferentialAttachment, n, m as f64, 7).expect("valid fixture")
}
