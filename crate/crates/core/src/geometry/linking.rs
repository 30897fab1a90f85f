use num::{BigInt, Signed, Zero};

use crate::group::Strand;

use super::point::{Rational, RationalPoint};
use super::program::{Move, MoveProgram};
use super::GeometryError;

/// Signed crossings of the positive x-axis by the segment `p -> q`, in
/// half-turn units: a full upward crossing counts 2, touching the axis
/// at an endpoint counts 1.
fn ray_crossing_halves(p: &RationalPoint, q: &RationalPoint) -> Result<i64, ()> {
    let sp = sign_of(&p.y);
    let sq = sign_of(&q.y);
    if sp == sq {
        if sp == 0 {
            // segment on the x-axis; it must not contain the origin
            if sign_of(&p.x) != sign_of(&q.x) || p.x.is_zero() {
                return Err(());
            }
        }
        return Ok(0);
    }
    // x-intercept of the line through p and q
    let x = &p.x - &p.y * (&q.x - &p.x) / (&q.y - &p.y);
    if x.is_zero() {
        return Err(());
    }
    Ok(if x.is_positive() { sq - sp } else { 0 })
}

fn sign_of(v: &Rational) -> i64 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// Winding number of `z_i(t) - z_j(t)` around the origin, counterclockwise
/// positive. Straight moves are counted through signed crossings of the
/// positive x-axis; each rigid rotation adds its turn count. The value is an
/// integer for closed programs and a multiple of 1/2 otherwise.
pub fn geometric_linking(p: &MoveProgram, i: Strand, j: Strand) -> Result<Rational, GeometryError> {
    p.initial.check_strand(i)?;
    p.initial.check_strand(j)?;
    if i == j {
        return Err(GeometryError::BadStrand {
            strand: j,
            n: p.n(),
        });
    }
    let mut zi = p.initial.point(i).clone();
    let mut zj = p.initial.point(j).clone();
    let mut halves = 0i64;
    let mut turns = 0i64;
    for m in &p.moves {
        match m {
            Move::Line { strand, to } => {
                let before = &zi - &zj;
                if *strand == i {
                    zi = to.clone();
                } else if *strand == j {
                    zj = to.clone();
                } else {
                    continue;
                }
                let after = &zi - &zj;
                halves += ray_crossing_halves(&before, &after)
                    .map_err(|_| GeometryError::DegeneratePath { i, j })?;
            }
            Move::Twist { turns: t } => turns += t,
        }
    }
    Ok(Rational::new(BigInt::from(halves), BigInt::from(2))
        + Rational::from_integer(BigInt::from(turns)))
}
