//! Inequivalent cycles that visit congruent cell sets.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cycle::{canonical_cell_set, CanonicalKey, CellSetKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwinError {
    #[error("cycle of length {found} in a stream of length-{expected} cycles")]
    MixedLengths { expected: usize, found: usize },
}

/// Two or more canonical cycles sharing one symmetry-minimised cell set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinGroup {
    pub key: CellSetKey,
    pub members: Vec<CanonicalKey>,
}

/// Groups canonical cycles by cell set and keeps the groups with at least
/// two members, ordered by key.
pub fn group_geometric_twins<I>(cycles: I) -> Result<Vec<TwinGroup>, TwinError>
where
    I: IntoIterator<Item = CanonicalKey>,
{
    let mut groups: BTreeMap<CellSetKey, Vec<CanonicalKey>> = BTreeMap::new();
    let mut length = None;
    for key in cycles {
        let expected = *length.get_or_insert(key.len());
        if key.len() != expected {
            return Err(TwinError::MixedLengths {
                expected,
                found: key.len(),
            });
        }
        groups
            .entry(canonical_cell_set(&key.to_cycle()))
            .or_default()
            .push(key);
    }
    Ok(groups
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(key, mut members)| {
            members.sort();
            TwinGroup { key, members }
        })
        .collect())
}
