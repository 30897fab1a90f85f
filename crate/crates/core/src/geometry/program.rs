use serde::{Deserialize, Serialize};

use crate::group::Strand;

use super::config::Configuration;
use super::point::RationalPoint;
use super::GeometryError;

/// One step of a motion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Move {
    /// Strand moves along a straight segment to the target; others stay put.
    Line { strand: Strand, to: RationalPoint },
    /// Rigid rotation of the whole configuration by `turns` full turns about
    /// the origin. Requires all points on a common circle centred there.
    Twist { turns: i64 },
}

/// A pure braid as an exact piecewise-linear motion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveProgram {
    pub initial: Configuration,
    pub moves: Vec<Move>,
    /// Whether the motion is declared to end where it started.
    pub closed: bool,
}

impl MoveProgram {
    pub fn new(initial: Configuration, moves: Vec<Move>, closed: bool) -> Self {
        Self {
            initial,
            moves,
            closed,
        }
    }

    pub fn n(&self) -> usize {
        self.initial.n()
    }

    pub fn has_twist(&self) -> bool {
        self.moves.iter().any(|m| matches!(m, Move::Twist { .. }))
    }

    /// Configurations at every move boundary, `moves.len() + 1` of them.
    /// Only rest positions are validated here; event genericity is checked by
    /// the compiler.
    pub fn boundary_configurations(&self) -> Result<Vec<Configuration>, GeometryError> {
        let mut out = vec![self.initial.clone()];
        for m in &self.moves {
            let current = out.last().expect("nonempty");
            let next = match m {
                Move::Line { strand, to } => current.moved(*strand, to.clone())?,
                Move::Twist { .. } => current.clone(),
            };
            out.push(next);
        }
        Ok(out)
    }

    pub fn final_configuration(&self) -> Result<Configuration, GeometryError> {
        Ok(self.boundary_configurations()?.pop().expect("nonempty"))
    }

    /// The motion run backwards; closed programs stay closed.
    pub fn reversed(&self) -> Result<Self, GeometryError> {
        let configs = self.boundary_configurations()?;
        let moves = self
            .moves
            .iter()
            .enumerate()
            .rev()
            .map(|(idx, m)| match m {
                Move::Line { strand, .. } => Move::Line {
                    strand: *strand,
                    to: configs[idx].point(*strand).clone(),
                },
                Move::Twist { turns } => Move::Twist { turns: -turns },
            })
            .collect();
        let initial = configs.last().expect("nonempty").clone();
        Ok(Self::new(initial, moves, self.closed))
    }

    /// `self` followed by `next`; `next` must start where `self` ends.
    pub fn then(&self, next: &MoveProgram) -> Result<Self, GeometryError> {
        if self.final_configuration()? != next.initial {
            return Err(GeometryError::Genericity(String::from(
                "concatenated program does not start where the first one ends",
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(Self::new(
            self.initial.clone(),
            moves,
            self.closed && next.closed,
        ))
    }

    /// `k`-fold concatenation of a closed program; negative `k` uses the
    /// reversed motion and `k = 0` is the empty motion.
    pub fn power(&self, k: i64) -> Result<Self, GeometryError> {
        if self.final_configuration()? != self.initial {
            return Err(GeometryError::NotClosed);
        }
        let base = if k < 0 {
            self.reversed()?
        } else {
            self.clone()
        };
        let mut moves = Vec::new();
        for _ in 0..k.unsigned_abs() {
            moves.extend(base.moves.iter().cloned());
        }
        Ok(Self::new(self.initial.clone(), moves, true))
    }

    pub fn to_json(&self) -> String {
        let file = ProgramFile::from(self);
        serde_json::to_string(&file).expect("program serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GeometryError> {
        let file: ProgramFile =
            serde_json::from_str(text).map_err(|e| GeometryError::Parse(e.to_string()))?;
        file.try_into()
    }
}

/// On-disk JSON layout; rationals are `"p/q"` or integer strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProgramFile {
    pub n: usize,
    pub initial: Vec<[String; 2]>,
    pub moves: Vec<MoveFile>,
    #[serde(default)]
    pub closed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum MoveFile {
    Line { strand: Strand, to: [String; 2] },
    Twist { turns: i64 },
}

impl From<&MoveProgram> for ProgramFile {
    fn from(p: &MoveProgram) -> Self {
        ProgramFile {
            n: p.n(),
            initial: p
                .initial
                .points()
                .iter()
                .map(RationalPoint::to_strings)
                .collect(),
            moves: p
                .moves
                .iter()
                .map(|m| match m {
                    Move::Line { strand, to } => MoveFile::Line {
                        strand: *strand,
                        to: to.to_strings(),
                    },
                    Move::Twist { turns } => MoveFile::Twist { turns: *turns },
                })
                .collect(),
            closed: p.closed,
        }
    }
}

impl TryFrom<ProgramFile> for MoveProgram {
    type Error = GeometryError;

    fn try_from(file: ProgramFile) -> Result<Self, GeometryError> {
        if file.initial.len() != file.n {
            return Err(GeometryError::Parse(format!(
                "n = {} but {} initial points given",
                file.n,
                file.initial.len()
            )));
        }
        let points = file
            .initial
            .iter()
            .map(RationalPoint::parse)
            .collect::<Result<_, _>>()?;
        let initial = Configuration::new(points)?;
        let moves = file
            .moves
            .into_iter()
            .map(|m| match m {
                MoveFile::Line { strand, to } => {
                    initial.check_strand(strand)?;
                    Ok(Move::Line {
                        strand,
                        to: RationalPoint::parse(&to)?,
                    })
                }
                MoveFile::Twist { turns } => Ok(Move::Twist { turns }),
            })
            .collect::<Result<_, GeometryError>>()?;
        Ok(MoveProgram::new(initial, moves, file.closed))
    }
}
