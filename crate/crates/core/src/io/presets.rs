//! Scenario files shipped with the crate.
//!
//! Parameter magnitudes in every preset are illustrative stand-ins; only the
//! pollution calibration pair (6500 → 4200 Btu per vehicle) comes from
//! published efficiency data.

pub const POLLUTION_WORKED: &str = include_str!("../../../../presets/pollution_worked.scn");
pub const POLLUTION: &str = include_str!("../../../../presets/pollution.scn");
pub const AGRICULTURE: &str = include_str!("../../../../presets/agriculture.scn");
pub const ENERGY: &str = include_str!("../../../../presets/energy.scn");

/// `(file stem, document)` for every preset.
pub const ALL: [(&str, &str); 4] = [
    ("pollution_worked", POLLUTION_WORKED),
    ("pollution", POLLUTION),
    ("agriculture", AGRICULTURE),
    ("energy", ENERGY),
];
