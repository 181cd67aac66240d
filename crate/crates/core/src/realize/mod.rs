//! Realizing candidate maps in space: vertex placement, the embedding
//! verifier, integer grid search, and export.

mod m2;
mod off;

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

use crate::candmap::{CandidateMap, MapSummary};
use crate::geometry::{coplanar, triangle_intersection_class, Coordinate3, IntersectionClass, Triangle};
use crate::rotgroup::build_tetrahedral_group;

pub use m2::{
    case_event_occurs, case_formulas, case_triangles, cross_validate_m2, crossing_factorizations, crossing_matrices,
    is_axis_point, m2_case_analysis, m2_symbols, Case, CaseTriangles, CaseVerdict, Region,
};
pub use off::{export_off, parse_off, OffMesh};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("base vertex is the zero vector")]
    ZeroVector,
    #[error("realization is not embedded: {0}")]
    NotEmbedded(Witness),
    #[error("base vertex lies on a rotation axis")]
    OnRotationAxis,
    #[error("search bound must be at least 1")]
    BoundTooSmall,
    #[error("malformed OFF data: {0}")]
    OffParse(String),
    #[error("map construction failed: {0}")]
    Map(String),
}

/// Vertex positions `v_h = base · h` together with the faces of a map.
#[derive(Clone, Debug)]
pub struct Realization {
    pub base: Coordinate3,
    pub positions: Vec<Coordinate3>,
    pub faces: Vec<Vec<usize>>,
    pub summary: MapSummary,
}

pub fn place_vertices(map: &CandidateMap, base: &Coordinate3) -> Result<Realization, RealizeError> {
    if base.is_zero() {
        return Err(RealizeError::ZeroVector);
    }
    Ok(Realization {
        base: base.clone(),
        positions: map.vertex_elements().iter().map(|h| base.act(h)).collect(),
        faces: map.faces().iter().map(|f| f.vertices.clone()).collect(),
        summary: map.summary(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Embedded,
    Failed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Embedded => "embedded",
            Verdict::Failed => "failed",
        })
    }
}

/// First obstruction found by the verifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    CoincidentVertices(usize, usize),
    DegenerateFace(usize),
    FaceIntersection {
        faces: (usize, usize),
        class: IntersectionClass,
        expected: IntersectionClass,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::CoincidentVertices(a, b) => write!(f, "coincident-vertices {a} {b}"),
            Witness::DegenerateFace(i) => write!(f, "degenerate-face {i}"),
            Witness::FaceIntersection { faces, class, expected } => {
                write!(
                    f,
                    "face-intersection {} {} {class} expected {expected}",
                    faces.0, faces.1
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub verdict: Verdict,
    pub summary: MapSummary,
    pub witness: Option<Witness>,
}

impl RealizationReport {
    pub fn is_embedded(&self) -> bool {
        self.verdict == Verdict::Embedded
    }
}

impl fmt::Display for RealizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.summary;
        writeln!(f, "verdict {}", self.verdict)?;
        writeln!(f, "counts {} {} {}", s.vertex_count, s.edge_count, s.face_count)?;
        writeln!(f, "genus {}", s.genus)?;
        match &self.witness {
            Some(w) => writeln!(f, "witness {w}"),
            None => writeln!(f, "witness none"),
        }
    }
}

fn expected_class(a: &[usize], b: &[usize]) -> IntersectionClass {
    match a.iter().filter(|v| b.contains(v)).count() {
        0 => IntersectionClass::Disjoint,
        1 => IntersectionClass::SharedVertexOnly,
        _ => IntersectionClass::SharedEdgeOnly,
    }
}

/// Checks a triangulated surface given by positions and faces: distinct
/// vertices, non-degenerate faces, and every face pair meeting exactly in the
/// cell the faces share combinatorially.
pub fn find_obstruction(positions: &[Coordinate3], faces: &[Vec<usize>]) -> Option<Witness> {
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            if positions[i] == positions[j] {
                return Some(Witness::CoincidentVertices(i, j));
            }
        }
    }
    let mut triangles = Vec::with_capacity(faces.len());
    for (i, f) in faces.iter().enumerate() {
        let t = match f.as_slice() {
            [a, b, c] => Triangle::new(positions[*a].clone(), positions[*b].clone(), positions[*c].clone()),
            _ => return Some(Witness::DegenerateFace(i)),
        };
        match t {
            Ok(t) => triangles.push(t),
            Err(_) => return Some(Witness::DegenerateFace(i)),
        }
    }
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            let expected = expected_class(&faces[i], &faces[j]);
            let class = triangle_intersection_class(&triangles[i], &triangles[j]);
            if class != expected {
                return Some(Witness::FaceIntersection {
                    faces: (i, j),
                    class,
                    expected,
                });
            }
        }
    }
    None
}

impl Realization {
    pub fn verify(&self) -> RealizationReport {
        // Positive rescaling leaves every predicate unchanged and keeps the
        // arithmetic on integers.
        let k = self.base.common_denominator();
        let positions: Vec<Coordinate3> = self.positions.iter().map(|p| p.scale(&k)).collect();
        let witness = find_obstruction(&positions, &self.faces);
        RealizationReport {
            verdict: if witness.is_none() {
                Verdict::Embedded
            } else {
                Verdict::Failed
            },
            summary: self.summary,
            witness,
        }
    }
}

pub fn verify_realization(map: &CandidateMap, base: &Coordinate3) -> RealizationReport {
    match place_vertices(map, base) {
        Ok(r) => r.verify(),
        Err(_) => RealizationReport {
            verdict: Verdict::Failed,
            summary: map.summary(),
            witness: Some(Witness::CoincidentVertices(0, 1)),
        },
    }
}

/// Face pairs sharing an edge whose four corners lie in one plane.
pub fn coplanar_adjacent_faces(positions: &[Coordinate3], faces: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if expected_class(&faces[i], &faces[j]) != IntersectionClass::SharedEdgeOnly {
                continue;
            }
            let mut pts: Vec<Coordinate3> = faces[i].iter().map(|&v| positions[v].clone()).collect();
            pts.extend(faces[j].iter().map(|&v| positions[v].clone()));
            if coplanar(&pts) {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn coplanarity_audit(realization: &Realization) -> Result<Vec<(usize, usize)>, RealizeError> {
    let report = realization.verify();
    if let Some(w) = report.witness {
        return Err(RealizeError::NotEmbedded(w));
    }
    Ok(coplanar_adjacent_faces(&realization.positions, &realization.faces))
}

/// Whether a nontrivial element of `T` fixes the point.
pub fn on_rotation_axis(v: [i64; 3]) -> bool {
    build_tetrahedral_group()
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .any(|g| g.act(v) == v)
}

fn candidate_triples(bound: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let v = [a, b, c];
                if a.gcd(&b).gcd(&c) != 1 || on_rotation_axis(v) {
                    continue;
                }
                out.push(v);
            }
        }
    }
    out
}

/// Primitive integer bases with `|a|,|b|,|c| ≤ bound`, off all rotation axes,
/// at which the map is embedded. Output order is lexicographic in `(a,b,c)`
/// regardless of `workers`.
pub fn search_realizations(map: &CandidateMap, bound: i64, workers: usize) -> Result<Vec<Coordinate3>, RealizeError> {
    if bound < 1 {
        return Err(RealizeError::BoundTooSmall);
    }
    let candidates = candidate_triples(bound);
    let workers = workers.max(1);
    let chunk = candidates.len().div_ceil(workers).max(1);
    let hits: Vec<Vec<[i64; 3]>> = std::thread::scope(|scope| {
        let handles: Vec<_> = candidates
            .chunks(chunk)
            .map(|block| {
                scope.spawn(move || {
                    block
                        .iter()
                        .filter(|v| verify_realization(map, &Coordinate3::from_ints(**v)).is_embedded())
                        .copied()
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    Ok(hits.into_iter().flatten().map(Coordinate3::from_ints).collect())
}
