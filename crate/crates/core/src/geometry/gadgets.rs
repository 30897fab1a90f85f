//! Ready-made motions: pure braid generators, full twists, the embedding
//! with an extra far strand, and seeded random closed motions.

use num::{One, Zero};
use rand::Rng;

use crate::group::Strand;

use super::config::{regular_rational_configuration, Configuration};
use super::events::{compile, segment_events};
use super::linking::geometric_linking;
use super::point::{integer, rational, Rational, RationalPoint};
use super::program::{Move, MoveProgram};
use super::GeometryError;

/// Loop sizes tried by [`pure_braid_generator_program`], as fractions of the
/// distance between the two strands.
const LOOP_SCALES: [(i64, i64); 6] = [(1, 4), (1, 8), (1, 16), (1, 64), (1, 256), (1, 4096)];
/// Sideways tilts of the loop, tried for each scale.
const LOOP_TILTS: [(i64, i64); 4] = [(0, 1), (1, 3), (-1, 5), (2, 7)];
/// Exponents `k` of the far abscissa `10^k` tried by [`embed_at_infinity`].
const FAR_EXPONENTS: std::ops::RangeInclusive<u32> = 1..=12;
/// Far ordinates tried for each exponent.
const FAR_ORDINATES: [(i64, i64); 4] = [(1, 3), (2, 7), (5, 17), (7, 29)];

/// Rigid rotation of the regular configuration by `m` full turns.
pub fn full_twist_program(n: usize, m: i64) -> Result<MoveProgram, GeometryError> {
    if m == 0 {
        return Err(GeometryError::ZeroTwist);
    }
    let initial = regular_rational_configuration(n)?;
    Ok(MoveProgram::new(
        initial,
        vec![Move::Twist { turns: m }],
        true,
    ))
}

/// The standard pure braid generator `A_ij`: strand `i` leaves its place,
/// runs once counterclockwise around a small square centred at strand `j`,
/// and comes back the same way.
pub fn pure_braid_generator_program(
    n: usize,
    i: Strand,
    j: Strand,
) -> Result<MoveProgram, GeometryError> {
    let initial = regular_rational_configuration(n)?;
    initial.check_strand(i)?;
    initial.check_strand(j)?;
    if i == j {
        return Err(GeometryError::BadStrand { strand: j, n });
    }
    let home = initial.point(i).clone();
    let centre = initial.point(j).clone();
    let v = &home - &centre;
    for (sn, sd) in LOOP_SCALES {
        for (tn, td) in LOOP_TILTS {
            let u = &v + &v.rotate_quarter().scale(&rational(tn, td));
            let mut corner = u.scale(&rational(sn, sd));
            let mut square = Vec::with_capacity(4);
            for _ in 0..4 {
                square.push(&centre + &corner);
                corner = corner.rotate_quarter();
            }
            let mut moves: Vec<Move> = square
                .iter()
                .chain(std::iter::once(&square[0]))
                .map(|q| Move::Line {
                    strand: i,
                    to: q.clone(),
                })
                .collect();
            moves.push(Move::Line {
                strand: i,
                to: home.clone(),
            });
            let program = MoveProgram::new(initial.clone(), moves, true);
            if generator_is_valid(&program, i, j) {
                return Ok(program);
            }
        }
    }
    Err(GeometryError::ConstructionFailure(format!(
        "no generic loop found for A({i},{j}) with n = {n}"
    )))
}

fn generator_is_valid(p: &MoveProgram, i: Strand, j: Strand) -> bool {
    if compile(p).is_err() {
        return false;
    }
    let n = p.n();
    (1..=n).all(|a| {
        (a + 1..=n).all(|b| {
            let expected = if (a, b) == (i.min(j), i.max(j)) {
                Rational::one()
            } else {
                Rational::zero()
            };
            geometric_linking(p, a, b).is_ok_and(|l| l == expected)
        })
    })
}

/// Adds a stationary strand `n + 1` far to the right of everything.
///
/// The far point is `(10^k, y)` for the first ordinate `y` from a short fixed
/// list and `k` in a fixed range that keeps the enlarged motion generic; a
/// point on the x-axis itself would be collinear with two vertices of the
/// regular configuration whenever `n` is even.
pub fn embed_at_infinity(p: &MoveProgram) -> Result<MoveProgram, GeometryError> {
    if p.has_twist() {
        return Err(GeometryError::TwistNotEmbeddable);
    }
    for (yn, yd) in FAR_ORDINATES {
        for k in FAR_EXPONENTS {
            let far = RationalPoint::new(integer(10i64.pow(k)), rational(yn, yd));
            let Ok(initial) = p.initial.with_extra(far) else {
                continue;
            };
            let program = MoveProgram::new(initial, p.moves.clone(), p.closed);
            if compile(&program).is_ok() {
                return Ok(program);
            }
        }
    }
    Err(GeometryError::Genericity(String::from(
        "no far point in the candidate sequence keeps the motion generic",
    )))
}

fn random_point<R: Rng + ?Sized>(rng: &mut R) -> RationalPoint {
    const DENOMS: [i64; 4] = [3, 4, 5, 7];
    let mut coord = || {
        let d = DENOMS[rng.gen_range(0..DENOMS.len())];
        rational(rng.gen_range(-2 * d..=2 * d), d)
    };
    let x = coord();
    let y = coord();
    RationalPoint::new(x, y)
}

/// Tries to move `s` to `to`, returning the new configuration when the
/// segment is generic.
fn try_step(config: &Configuration, s: Strand, to: &RationalPoint) -> Option<Configuration> {
    segment_events(config, s, to).ok()?;
    config.moved(s, to.clone()).ok()
}

/// A seeded random closed motion of the regular configuration with at most
/// `max_moves` straight moves: a few random excursions, then every displaced
/// strand is brought home (directly or through one random waypoint).
pub fn random_closed_program<R: Rng + ?Sized>(
    n: usize,
    max_moves: usize,
    rng: &mut R,
) -> Result<MoveProgram, GeometryError> {
    let initial = regular_rational_configuration(n)?;
    if max_moves < 2 {
        return Ok(MoveProgram::new(initial, Vec::new(), true));
    }
    'attempt: for _ in 0..1000 {
        let forward = rng.gen_range(1..=max_moves / 2);
        let mut config = initial.clone();
        let mut moves = Vec::new();
        for _ in 0..forward {
            for _ in 0..50 {
                let s = rng.gen_range(1..=n);
                let to = random_point(rng);
                if let Some(next) = try_step(&config, s, &to) {
                    config = next;
                    moves.push(Move::Line { strand: s, to });
                    break;
                }
            }
        }
        for s in 1..=n {
            let home = initial.point(s).clone();
            if config.point(s) == &home {
                continue;
            }
            if let Some(next) = try_step(&config, s, &home) {
                config = next;
                moves.push(Move::Line {
                    strand: s,
                    to: home,
                });
                continue;
            }
            let mut returned = false;
            for _ in 0..50 {
                let via = random_point(rng);
                let Some(mid) = try_step(&config, s, &via) else {
                    continue;
                };
                if let Some(next) = try_step(&mid, s, &home) {
                    config = next;
                    moves.push(Move::Line { strand: s, to: via });
                    moves.push(Move::Line {
                        strand: s,
                        to: home,
                    });
                    returned = true;
                    break;
                }
            }
            if !returned {
                continue 'attempt;
            }
        }
        if moves.len() <= max_moves && config == initial {
            return Ok(MoveProgram::new(initial, moves, true));
        }
    }
    Err(GeometryError::ConstructionFailure(String::from(
        "random closed motion",
    )))
}
