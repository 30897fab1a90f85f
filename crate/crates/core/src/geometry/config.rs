use num::Zero;

use crate::group::{check_n, Strand};
use crate::index::OrientationState;

use super::point::{orientation, rational, RationalPoint, Turn};
use super::GeometryError;

/// Positions of `n` strands with no three collinear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    points: Vec<RationalPoint>,
}

impl Configuration {
    pub fn new(points: Vec<RationalPoint>) -> Result<Self, GeometryError> {
        check_n(points.len()).map_err(|_| GeometryError::InvalidN(points.len()))?;
        let config = Self { points };
        if let Some([i, j, k]) = config.first_collinear_triple() {
            return Err(GeometryError::Genericity(format!(
                "strands {i}, {j}, {k} are collinear at rest"
            )));
        }
        Ok(config)
    }

    fn first_collinear_triple(&self) -> Option<[Strand; 3]> {
        let n = self.n();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    if orientation(self.point(i), self.point(j), self.point(k)) == Turn::Zero {
                        return Some([i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// Position of a 1-based strand.
    pub fn point(&self, s: Strand) -> &RationalPoint {
        &self.points[s - 1]
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub(crate) fn check_strand(&self, s: Strand) -> Result<(), GeometryError> {
        if (1..=self.n()).contains(&s) {
            Ok(())
        } else {
            Err(GeometryError::BadStrand {
                strand: s,
                n: self.n(),
            })
        }
    }

    /// The configuration with strand `s` relocated; must stay generic.
    pub fn moved(&self, s: Strand, to: RationalPoint) -> Result<Self, GeometryError> {
        self.check_strand(s)?;
        let mut points = self.points.clone();
        points[s - 1] = to;
        Self::new(points)
    }

    /// Appends a strand, returning the (n+1)-strand configuration.
    pub fn with_extra(&self, p: RationalPoint) -> Result<Self, GeometryError> {
        let mut points = self.points.clone();
        points.push(p);
        Self::new(points)
    }

    /// True when all points share one squared distance from the origin.
    pub fn is_concyclic_about_origin(&self) -> bool {
        let r = self.points[0].norm_squared();
        !r.is_zero() && self.points.iter().all(|p| p.norm_squared() == r)
    }

    /// Triple-index state read off the geometry: +1 iff counterclockwise.
    pub fn orientation_state(&self) -> OrientationState {
        let n = self.n();
        let mut state = OrientationState::initial(n).expect("validated strand count");
        for g in crate::group::GenTriple::all(n) {
            let [i, j, k] = g.elems();
            if orientation(self.point(i), self.point(j), self.point(k)) == Turn::Negative {
                state.flip_in_place(&g).expect("same strand count");
            }
        }
        state
    }
}

/// Point on the unit circle from a tangent half-angle parameter.
fn circle_point(t: &super::Rational) -> RationalPoint {
    let one = super::point::integer(1);
    let t2 = t * t;
    let den = &one + &t2;
    RationalPoint::new((&one - &t2) / &den, (t + t) / den)
}

/// Rational points on the unit circle in the cyclic order of the regular
/// n-gon vertices `exp(2πij/n)`, `j = 1..n`.
///
/// Half-angle tangents are rounded to a denominator from a fixed doubling
/// sequence until the orientations match the regular n-gon's.
pub fn regular_rational_configuration(n: usize) -> Result<Configuration, GeometryError> {
    check_n(n).map_err(|_| GeometryError::InvalidN(n))?;
    let target = OrientationState::initial(n).expect("checked");
    for bits in [10u32, 20, 30, 40] {
        let den = 1i64 << bits;
        let points: Vec<RationalPoint> = (1..=n)
            .map(|j| {
                if 2 * j == n {
                    RationalPoint::from_ints(-1, 0)
                } else {
                    let half = std::f64::consts::PI * j as f64 / n as f64;
                    let t = (half.tan() * den as f64).round() as i64;
                    circle_point(&rational(t, den))
                }
            })
            .collect();
        if let Ok(config) = Configuration::new(points) {
            if config.orientation_state() == target {
                return Ok(config);
            }
        }
    }
    Err(GeometryError::ConstructionFailure(format!(
        "no rational regular {n}-gon found"
    )))
}
