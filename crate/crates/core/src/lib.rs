//! Linear externality markets with Pigouvian correction.
//!
//! The crate models a single market through four affine marginal curves
//! (private cost, social cost, and a benefit curve per regime), finds the
//! private equilibrium and the social optimum, and prices the externality
//! with a Pigouvian tax and a deadweight-loss triangle. Cooperation between
//! industries is modelled as a steeper benefit curve, and [`cooperation`]
//! compares the two regimes.
//!
//! ```
//! use externality::model::{validate, Mode, ScenarioMeta};
//! use externality::cooperation::compare;
//!
//! let scenario = validate(1.0, 2.0, 3.0, 12.0, ScenarioMeta::custom("worked")).unwrap();
//! let report = compare(&scenario, Mode::Paper);
//! assert_eq!(report.noncoop.welfare.tau, 4.0);
//! assert_eq!(report.coop.welfare.tau, 3.0);
//! assert!(report.verdicts.all());
//! ```

pub mod cli;
pub mod cooperation;
pub mod io;
pub mod model;
pub mod sweep;
