//! Bundled solution and theta documents.

const ENTRIES: &[(&str, &str)] = &[
    (
        "degenerate_extension3",
        include_str!("../catalog/degenerate_extension3.json"),
    ),
    ("dihedral3", include_str!("../catalog/dihedral3.json")),
    ("dihedral4", include_str!("../catalog/dihedral4.json")),
    ("dihedral5", include_str!("../catalog/dihedral5.json")),
    (
        "double_shift2",
        include_str!("../catalog/double_shift2.json"),
    ),
    ("flip2", include_str!("../catalog/flip2.json")),
    ("flip3", include_str!("../catalog/flip3.json")),
    ("identity2", include_str!("../catalog/identity2.json")),
    ("identity3", include_str!("../catalog/identity3.json")),
    ("shift2", include_str!("../catalog/shift2.json")),
    ("shift3", include_str!("../catalog/shift3.json")),
    (
        "theta_identity",
        include_str!("../catalog/theta_identity.json"),
    ),
    (
        "theta_sum_mod2",
        include_str!("../catalog/theta_sum_mod2.json"),
    ),
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|(n, _)| *n).collect()
}

pub fn get(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
