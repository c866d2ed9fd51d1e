//! Supports printed in the source tables, kept verbatim as pictures.
//!
//! Three-dimensional pictures put the four blocks side by side: block index
//! is the first coordinate, picture row the second, column the third.

use crate::support::{from_picture, SupportSet};

fn pic(d: usize, rows: &[&str]) -> SupportSet {
    from_picture(d, rows).expect("catalog picture")
}

/// Hyperplane types (a)–(h) admitted under a zero permanent, in order.
pub const PLANE_TYPES: [(&str, [&str; 4]); 8] = [
    ("a", ["•∘∘∘ ∘•∘∘ ∘∘•∘ ∘∘∘•", "∘•∘∘ •∘∘∘ ∘∘∘• ∘∘•∘", "∘∘•∘ ∘∘∘• •∘∘∘ ∘•∘∘", "∘∘∘• ∘∘•∘ ∘•∘∘ •∘∘∘"]),
    ("b", ["•∘∘∘ ∘•∘∘ ∘∘•∘ ∘∘∘•", "∘•∘∘ ∘∘•∘ ∘∘∘• •∘∘∘", "∘∘•∘ ∘∘∘• •∘∘∘ ∘•∘∘", "∘∘∘• •∘∘∘ ∘•∘∘ ∘∘•∘"]),
    ("c", ["•∘∘∘ ∘•∘∘ ∘∘•∘ ∘∘∘•", "∘•∘∘ •∘∘∘ ∘∘∘• ∘∘•∘", "∘∘•∘ ∘∘∘• ••∘∘ ••∘∘", "∘∘∘• ∘∘•∘ ••∘∘ ••∘∘"]),
    ("d", ["•∘∘∘ ∘•∘∘ ∘∘•• ∘∘••", "∘•∘∘ •∘∘∘ ∘∘•• ∘∘••", "∘∘•∘ ∘∘∘• ••∘∘ ••∘∘", "∘∘∘• ∘∘•∘ ••∘∘ ••∘∘"]),
    ("e", ["•∘∘∘ ∘•∘∘ ∘∘•• ∘∘••", "∘•∘∘ •∘∘∘ ∘∘•• ∘∘••", "∘∘•• ∘∘•• ••∘∘ ••∘∘", "∘∘•• ∘∘•• ••∘∘ ••∘∘"]),
    ("f", ["••∘∘ ••∘∘ ∘∘•• ∘∘••", "••∘∘ ••∘∘ ∘∘•• ∘∘••", "∘∘•• ∘∘•• ••∘∘ ••∘∘", "∘∘•• ∘∘•• ••∘∘ ••∘∘"]),
    ("g", ["•∘∘∘ ∘•∘∘ ∘∘•• ∘∘••", "∘•∘∘ ∘∘•∘ •∘∘• •∘∘•", "∘∘•∘ ∘∘∘• ••∘∘ ••∘∘", "∘∘∘• •∘∘∘ ∘••∘ ∘••∘"]),
    ("h", ["••∘∘ ∘••∘ ∘∘•• •∘∘•", "∘••∘ ∘∘•• •∘∘• ••∘∘", "∘∘•• •∘∘• ••∘∘ ∘••∘", "•∘∘• ••∘∘ ∘••∘ ∘∘••"]),
];

/// The mixed double permutation (i): two F directions and one H direction.
pub const TYPE_I: [&str; 4] =
    ["••∘∘ ••∘∘ ∘∘•• ∘∘••", "∘••∘ ∘••∘ •∘∘• •∘∘•", "∘∘•• ∘∘•• ••∘∘ ••∘∘", "•∘∘• •∘∘• ∘••∘ ∘••∘"];

pub const PLANE_F: [&str; 4] = ["••∘∘", "••∘∘", "∘∘••", "∘∘••"];
pub const PLANE_H: [&str; 4] = ["••∘∘", "∘••∘", "∘∘••", "•∘∘•"];

pub const A1: [&str; 4] = ["•∘∘∘", "∘•••", "∘•∘•", "∘••∘"];
pub const A2: [&str; 4] = ["∘•••", "••∘∘", "•∘•∘", "•∘∘•"];

pub const LIST_1: [[&str; 4]; 5] = [
    ["•∘∘∘", "∘∘••", "∘••∘", "∘•∘•"],
    ["•∘∘∘", "∘•∘•", "∘∘•∘", "∘•∘•"],
    ["∘∘•∘", "∘•∘•", "•∘∘∘", "∘•∘•"],
    ["•∘∘∘", "∘••∘", "∘••∘", "∘∘∘•"],
    ["∘∘∘•", "∘••∘", "∘••∘", "•∘∘∘"],
];

pub const LIST_2: [[&str; 4]; 5] = [
    ["∘••∘", "•∘•∘", "••∘∘", "∘∘∘•"],
    ["∘•∘•", "•∘∘•", "∘∘•∘", "••∘∘"],
    ["∘∘••", "∘•∘∘", "•∘∘•", "•∘•∘"],
    ["•∘∘∘", "∘•∘•", "∘••∘", "∘∘••"],
    ["•∘∘∘", "∘••∘", "∘∘••", "∘•∘•"],
];

/// Forced cells and the three completing cells of diagonals through them in `ℳ_4^3`.
pub const DIAGONALS_D3: [([usize; 3], [[usize; 3]; 3]); 5] = [
    ([0, 0, 2], [[1, 2, 1], [2, 3, 3], [3, 1, 0]]),
    ([0, 1, 1], [[1, 0, 3], [2, 2, 0], [3, 3, 2]]),
    ([0, 3, 3], [[1, 1, 2], [2, 2, 0], [3, 0, 1]]),
    ([1, 2, 3], [[0, 3, 1], [2, 0, 2], [3, 1, 0]]),
    ([2, 2, 2], [[0, 1, 3], [1, 3, 0], [3, 0, 1]]),
];

/// The same for `ℳ_4^5`.
pub const DIAGONALS_D5: [([usize; 5], [[usize; 5]; 3]); 2] = [
    ([1, 1, 1, 1, 2], [[0, 0, 2, 2, 0], [2, 2, 3, 0, 1], [3, 3, 0, 3, 3]]),
    ([2, 3, 3, 3, 3], [[0, 0, 1, 1, 2], [1, 1, 0, 2, 0], [3, 2, 2, 0, 1]]),
];

pub fn plane_type(name: &str) -> Option<SupportSet> {
    if name == "i" {
        return Some(pic(3, &TYPE_I));
    }
    PLANE_TYPES.iter().find(|(k, _)| *k == name).map(|(_, rows)| pic(3, rows))
}

pub fn plane_types() -> Vec<(&'static str, SupportSet)> {
    PLANE_TYPES.iter().map(|(k, rows)| (*k, pic(3, rows))).collect()
}

pub fn a1() -> SupportSet {
    pic(2, &A1)
}

pub fn a2() -> SupportSet {
    pic(2, &A2)
}

pub fn list_1() -> Vec<SupportSet> {
    LIST_1.iter().map(|r| pic(2, r)).collect()
}

pub fn list_2() -> Vec<SupportSet> {
    LIST_2.iter().map(|r| pic(2, r)).collect()
}

pub fn plane_f() -> SupportSet {
    pic(2, &PLANE_F)
}

pub fn plane_h() -> SupportSet {
    pic(2, &PLANE_H)
}
