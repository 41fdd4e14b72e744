use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{validate_parameters, ExternalityScenario, Parameters, ScenarioMeta};

use super::{Parameter, SweepError};

/// Consecutive rejections allowed per requested scenario before the region
/// is declared infeasible.
pub const REJECTION_FACTOR: usize = 10;

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        if self.lo == self.hi {
            self.lo
        } else {
            rng.gen_range(self.lo..=self.hi)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterRegion {
    pub a: Interval,
    pub b: Interval,
    pub c: Interval,
    pub y1: Interval,
}

impl ParameterRegion {
    pub fn new(a: (f64, f64), b: (f64, f64), c: (f64, f64), y1: (f64, f64)) -> Self {
        Self {
            a: Interval::new(a.0, a.1),
            b: Interval::new(b.0, b.1),
            c: Interval::new(c.0, c.1),
            y1: Interval::new(y1.0, y1.1),
        }
    }

    /// Box around `center` scaling each parameter by `[1 − spread, 1 + spread]`.
    pub fn around(center: Parameters, spread: f64) -> Self {
        let span = |v: f64| Interval::new(v * (1.0 - spread), v * (1.0 + spread));
        Self {
            a: span(center.a),
            b: span(center.b),
            c: span(center.c),
            y1: span(center.y1),
        }
    }

    pub fn interval(&self, parameter: Parameter) -> Interval {
        match parameter {
            Parameter::A => self.a,
            Parameter::B => self.b,
            Parameter::C => self.c,
            Parameter::Y1 => self.y1,
        }
    }

    pub fn check(&self) -> Result<(), SweepError> {
        for parameter in Parameter::ALL {
            let Interval { lo, hi } = self.interval(parameter);
            if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi) {
                return Err(SweepError::InvalidRegion { parameter, lo, hi });
            }
        }
        Ok(())
    }
}

/// `n` valid scenarios drawn uniformly from `region` by rejection.
///
/// All scenarios share one `custom` metadata record named `sample`. The
/// generator is ChaCha8 seeded
/// from `seed`, so the output is reproducible across platforms.
pub fn sample(
    region: &ParameterRegion,
    n: usize,
    seed: u64,
) -> Result<Vec<ExternalityScenario>, SweepError> {
    region.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = REJECTION_FACTOR * n.max(1);
    let template = crate::model::validate(1.0, 2.0, 3.0, 1.0, ScenarioMeta::custom("sample"))
        .expect("template parameters are valid");

    let mut out = Vec::with_capacity(n);
    let mut rejections = 0;
    while out.len() < n {
        let p = Parameters::new(
            region.a.draw(&mut rng),
            region.b.draw(&mut rng),
            region.c.draw(&mut rng),
            region.y1.draw(&mut rng),
        );
        match validate_parameters(p) {
            Ok(p) => {
                rejections = 0;
                out.push(template.with_parameters(p).expect("already validated"));
            }
            Err(_) => {
                rejections += 1;
                if rejections >= cap {
                    return Err(SweepError::RegionInfeasible { rejections });
                }
            }
        }
    }
    Ok(out)
}
