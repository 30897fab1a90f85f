//! Collinearity events of one-point-at-a-time motions.
//!
//! While strand `s` moves on `p(t) = p0 + t (target - p0)`, the triple
//! `{s, a, b}` is collinear exactly when `det(z_b - z_a, p(t) - z_a) = 0`,
//! which is linear in `t`. Event times are therefore exact rationals.

use std::fmt;

use num::{One, Signed, Zero};

use crate::group::{GWord, GenTriple, Strand};

use super::config::Configuration;
use super::point::{Rational, RationalPoint};
use super::program::{Move, MoveProgram};
use super::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollinearityEvent {
    pub move_index: usize,
    /// Time within the move, strictly inside (0, 1).
    pub time: Rational,
    pub triple: GenTriple,
    /// The strand lying between the other two.
    pub central: Strand,
}

impl fmt::Display for CollinearityEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "move {} t={} {} central {}",
            self.move_index, self.time, self.triple, self.central
        )
    }
}

/// Whether `q` lies on the closed segment `[p, r]`.
fn on_segment(p: &RationalPoint, r: &RationalPoint, q: &RationalPoint) -> bool {
    let d = r - p;
    let v = q - p;
    d.cross(&v).is_zero() && !v.dot(&d).is_negative() && v.dot(&d) <= d.norm_squared()
}

/// Events while strand `s` travels straight from its position in `c` to
/// `target`, sorted by time. `move_index` is left at 0.
pub fn segment_events(
    c: &Configuration,
    s: Strand,
    target: &RationalPoint,
) -> Result<Vec<CollinearityEvent>, GeometryError> {
    c.check_strand(s)?;
    let n = c.n();
    let start = c.point(s);
    let delta = target - start;
    if delta.norm_squared().is_zero() {
        return Err(GeometryError::Genericity(format!(
            "strand {s} does not move"
        )));
    }
    for q in (1..=n).filter(|&q| q != s) {
        if on_segment(start, target, c.point(q)) {
            return Err(GeometryError::Genericity(format!(
                "strand {s} passes through strand {q} at {}",
                c.point(q)
            )));
        }
    }

    let mut events = Vec::new();
    let others: Vec<Strand> = (1..=n).filter(|&q| q != s).collect();
    for (ai, &a) in others.iter().enumerate() {
        for &b in &others[ai + 1..] {
            let za = c.point(a);
            let ab = c.point(b) - za;
            let constant = ab.cross(&(start - za));
            let slope = ab.cross(&delta);
            if slope.is_zero() {
                // parallel to the pair line; the start is off it because c is generic
                continue;
            }
            let t = -constant / slope;
            if t.is_negative() || t > Rational::one() {
                continue;
            }
            if t.is_zero() || t.is_one() {
                return Err(GeometryError::Genericity(format!(
                    "strands {s}, {a}, {b} collinear at a move endpoint"
                )));
            }
            let p = start.lerp(target, &t);
            let along = (&p - za).dot(&ab) / ab.norm_squared();
            let central = if along.is_negative() {
                a
            } else if along > Rational::one() {
                b
            } else {
                s
            };
            let triple = GenTriple::new(n, s, a, b).expect("distinct strands in range");
            events.push(CollinearityEvent {
                move_index: 0,
                time: t,
                triple,
                central,
            });
        }
    }
    events.sort_by(|x, y| x.time.cmp(&y.time));
    if let Some(w) = events.windows(2).find(|w| w[0].time == w[1].time) {
        return Err(GeometryError::Genericity(format!(
            "simultaneous events {} and {} at t={}",
            w[0].triple, w[1].triple, w[0].time
        )));
    }
    Ok(events)
}

/// The collinearity word of a motion together with its event trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompileOutput {
    pub word: GWord,
    pub events: Vec<CollinearityEvent>,
    pub twist_turns: i64,
    pub final_configuration: Configuration,
}

impl CompileOutput {
    pub fn event_trace(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }
}

/// Writes down one generator per collinearity moment, in time order.
///
/// Rigid rotations contribute no letters (concyclic points are never
/// collinear) but add to `twist_turns`. Closed programs must end exactly
/// where they start.
pub fn compile(p: &MoveProgram) -> Result<CompileOutput, GeometryError> {
    compile_checked(p, p.closed)
}

/// As [`compile`], with the closedness check forced on or off.
pub fn compile_checked(
    p: &MoveProgram,
    check_closed: bool,
) -> Result<CompileOutput, GeometryError> {
    let n = p.n();
    let mut config = p.initial.clone();
    let mut events = Vec::new();
    let mut twist_turns = 0i64;
    for (idx, m) in p.moves.iter().enumerate() {
        match m {
            Move::Line { strand, to } => {
                let mut evs = segment_events(&config, *strand, to)?;
                for e in &mut evs {
                    e.move_index = idx;
                }
                events.extend(evs);
                config = config.moved(*strand, to.clone())?;
            }
            Move::Twist { turns } => {
                if *turns == 0 {
                    return Err(GeometryError::ZeroTwist);
                }
                if !config.is_concyclic_about_origin() {
                    return Err(GeometryError::NotConcyclic { move_index: idx });
                }
                twist_turns += turns;
            }
        }
    }
    if check_closed && config != p.initial {
        return Err(GeometryError::NotClosed);
    }
    let word =
        GWord::new(n, events.iter().map(|e| e.triple).collect()).expect("valid strand count");
    Ok(CompileOutput {
        word,
        events,
        twist_turns,
        final_configuration: config,
    })
}
