use super::curve::{crossing, AffineCurve, CurveLabel};
use super::{ExternalityScenario, Regime};

/// The three curves in force under one regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSet {
    pub mpc: AffineCurve,
    pub msc: AffineCurve,
    pub msb: AffineCurve,
}

pub fn curves(scenario: &ExternalityScenario, regime: Regime) -> CurveSet {
    let p = scenario.parameters();
    let msb = match regime {
        Regime::NonCooperative => AffineCurve::new(-p.a, p.y1, CurveLabel::MsbNonCoop),
        // c is a magnitude: cooperation steepens the decline
        Regime::Cooperative => AffineCurve::new(-p.c, p.y1, CurveLabel::MsbCoop),
    };
    CurveSet {
        mpc: AffineCurve::new(p.a, 0.0, CurveLabel::Mpc),
        msc: AffineCurve::new(p.b, 0.0, CurveLabel::Msc),
        msb,
    }
}

/// Private equilibrium (MPC = MSB) and social optimum (MSC = MSB).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquilibriumSet {
    pub regime: Regime,
    pub x_private: f64,
    pub x_social: f64,
    pub y_private: f64,
    pub y_social: f64,
}

pub fn equilibria(scenario: &ExternalityScenario, regime: Regime) -> EquilibriumSet {
    let set = curves(scenario, regime);
    // Valid scenarios have cost slopes > 0 > benefit slopes, so the lines
    // are never parallel and both crossings lie at x > 0.
    let private = crossing(&set.mpc, &set.msb);
    let social = crossing(&set.msc, &set.msb);
    EquilibriumSet {
        regime,
        x_private: private.x,
        x_social: social.x,
        y_private: private.y,
        y_social: social.y,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{relative_error, validate, ScenarioMeta};

    fn scenario(a: f64, b: f64, c: f64, y1: f64) -> ExternalityScenario {
        validate(a, b, c, y1, ScenarioMeta::custom("t")).unwrap()
    }

    #[test]
    fn curve_construction() {
        let s = scenario(1.0, 2.0, 3.0, 12.0);
        let n = curves(&s, Regime::NonCooperative);
        assert_eq!((n.msb.slope, n.msb.intercept), (-1.0, 12.0));
        let c = curves(&s, Regime::Cooperative);
        assert_eq!((c.msb.slope, c.msb.intercept), (-3.0, 12.0));
        for set in [n, c] {
            assert_eq!(set.mpc.intercept, 0.0);
            assert_eq!(set.msc.intercept, 0.0);
            assert_eq!(set.mpc.slope, 1.0);
            assert_eq!(set.msc.slope, 2.0);
        }
        assert_eq!(n.msb.label, CurveLabel::MsbNonCoop);
        assert_eq!(c.msb.label, CurveLabel::MsbCoop);
    }

    #[test]
    fn worked_equilibria() {
        let s = scenario(1.0, 2.0, 3.0, 12.0);
        let n = equilibria(&s, Regime::NonCooperative);
        assert_eq!((n.x_private, n.x_social), (6.0, 4.0));
        assert_eq!((n.y_private, n.y_social), (6.0, 8.0));
        let c = equilibria(&s, Regime::Cooperative);
        assert_eq!(c.x_private, 3.0);
        assert!(relative_error(c.x_social, 2.4) <= 1e-12);

        let s = scenario(1.0, 3.0, 5.0, 8.0);
        let c = equilibria(&s, Regime::Cooperative);
        assert!(relative_error(c.x_private, 4.0 / 3.0) <= 1e-12);
        assert!(relative_error(c.x_social, 1.0) <= 1e-12);
    }

    proptest::proptest! {
        #[test]
        fn closed_forms_and_ordering(
            a in 0.01f64..10.0, db in 0.01f64..10.0, dc in 0.01f64..10.0, y1 in 0.01f64..1e3,
        ) {
            let (b, c) = (a + db, a + db + dc);
            let s = scenario(a, b, c, y1);
            let n = equilibria(&s, Regime::NonCooperative);
            let k = equilibria(&s, Regime::Cooperative);
            proptest::prop_assert!(relative_error(n.x_private, y1 / (2.0 * a)) <= 1e-12);
            proptest::prop_assert!(relative_error(n.x_social, y1 / (a + b)) <= 1e-12);
            proptest::prop_assert!(relative_error(k.x_private, y1 / (a + c)) <= 1e-12);
            proptest::prop_assert!(relative_error(k.x_social, y1 / (b + c)) <= 1e-12);
            for e in [n, k] {
                proptest::prop_assert!(0.0 < e.x_social && e.x_social < e.x_private);
            }
            proptest::prop_assert!(k.x_social < n.x_social);
            proptest::prop_assert!(k.x_private < n.x_private);
        }
    }
}
