//! Exhaustive generation of labeled posets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::relation::RelationStructure;
use crate::set::ElemSet;

/// All labeled posets on `n` elements named `m0`, `m1`, …, in mask order over
/// the off-diagonal cells. Sizes 0 through 5 give 1, 1, 3, 19, 219, 4231
/// posets; larger universes are rejected.
pub fn labeled_posets(n: usize) -> Result<Vec<Poset>> {
    if n > 5 {
        return Err(Error::CapExceeded {
            what: "labeled poset generation",
            limit: 5,
            requested: n,
        });
    }
    let names: Vec<String> = (0..n).map(|i| format!("m{i}")).collect();
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << cells.len() {
        let mut rows = [0u8; 5];
        for (k, &(i, j)) in cells.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        // transitive iff every successor's row folds into the element's own;
        // a 2-cycle would demand a loop, which no row can carry, so cycles
        // are excluded by the same test
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| rows[i] >> j & 1 == 0 || rows[j] & !rows[i] == 0)
        });
        if !transitive {
            continue;
        }
        let sets: Vec<ElemSet> = (0..n)
            .map(|i| ElemSet::from_indices(n, (0..n).filter(|&j| rows[i] >> j & 1 == 1)))
            .collect();
        let structure = RelationStructure::from_rows(names.clone(), sets);
        out.push(Poset::new(structure).expect("generated relations are orders"));
    }
    Ok(out)
}
