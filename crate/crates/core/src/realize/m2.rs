//! Sign analysis for the genus-3 map `{(Y1,Y4,I1),(Y1i,Y3i,I2),(Y4i),(Y3)}`:
//! every base point lands in a region whose named obstruction occurs.

use std::fmt;

use num_traits::{Signed, Zero};

use super::{verify_realization, RealizeError};
use crate::candmap::{build_candidate_map, CandidateMap, OrbitSymbol};
use crate::geometry::{
    axis_pierces_triangle, rational, triangle_intersection_class, Coordinate3, IntersectionClass, Rational, Triangle,
};
use crate::rotgroup::{build_tetrahedral_group, CoreRotation, RotationGroup};

pub fn m2_symbols() -> Vec<OrbitSymbol> {
    use CoreRotation::*;
    let mut s = vec![
        OrbitSymbol::type1(Y1, Y4, I1).expect("valid"),
        OrbitSymbol::type1(Y1i, Y3i, I2).expect("valid"),
        OrbitSymbol::Type2(Y4i),
        OrbitSymbol::Type2(Y3),
    ];
    s.sort();
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    R1,
    R2,
    R3,
    R4,
    Boundary,
}

/// The five obstructions. `C1`/`C2`: a stabilized triangle pierced by the
/// `I3` axis; `C3`/`C4`: a triangle pierced by the `Y4`/`Y3` axis; `C5`: two
/// triangles at the base vertex cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl Case {
    pub const ALL: [Case; 5] = [Case::C1, Case::C2, Case::C3, Case::C4, Case::C5];
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Region::R1 => "R1",
            Region::R2 => "R2",
            Region::R3 => "R3",
            Region::R4 => "R4",
            Region::Boundary => "boundary",
        };
        f.write_str(s)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseVerdict {
    pub region: Region,
    pub cases: Vec<Case>,
    /// `c²+ab, a²+bc, b²+ac, a²−bc, b²−ac`.
    pub region_expressions: [Rational; 5],
    /// Piercing determinants for cases 1 to 4.
    pub case_values: [[Rational; 3]; 4],
    /// Side determinants of the two crossing triangles.
    pub crossing_determinants: [Rational; 4],
}

impl CaseVerdict {
    pub fn determinants(&self) -> Vec<Rational> {
        self.case_values
            .iter()
            .flatten()
            .chain(self.crossing_determinants.iter())
            .cloned()
            .collect()
    }

    /// Whether the sign condition of `case` holds, with zero allowed for the
    /// piercing cases.
    pub fn condition_holds(&self, case: Case) -> bool {
        let no_opposite = |v: &[Rational; 3]| !(v.iter().any(Signed::is_positive) && v.iter().any(Signed::is_negative));
        let d = &self.crossing_determinants;
        match case {
            Case::C1 => no_opposite(&self.case_values[0]),
            Case::C2 => no_opposite(&self.case_values[1]),
            Case::C3 => no_opposite(&self.case_values[2]),
            Case::C4 => no_opposite(&self.case_values[3]),
            Case::C5 => (&d[0] * &d[1]).is_negative() && (&d[2] * &d[3]).is_negative(),
        }
    }
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "region {}", self.region)?;
        let cases: Vec<String> = self.cases.iter().map(|c| c.to_string()).collect();
        writeln!(f, "cases {}", cases.join(" "))?;
        let dets: Vec<String> = self.determinants().iter().map(|d| d.to_string()).collect();
        writeln!(f, "determinants {}", dets.join(" "))
    }
}

fn sq(x: &Rational) -> Rational {
    x * x
}

/// Closed forms of the piercing determinants for cases 1 to 4.
pub fn case_formulas(base: &Coordinate3) -> [[Rational; 3]; 4] {
    let [a, b, c] = &base.0;
    let two = rational(2);
    let half = |x: Rational| x / &two;
    [
        [sq(b) + a * c, sq(c) + a * b, sq(a) - b * c],
        [-(sq(a) + b * c), -(sq(c) + a * b), -(sq(b) - a * c)],
        [
            half(sq(&(a + b)) + sq(&(b + c)) + sq(&(c - a))),
            -(&two * a * (b + c)),
            sq(&(b + c)) - (a + c) * (b + a),
        ],
        [
            -half(sq(&(a + b)) + sq(&(c - b)) + sq(&(c + a))),
            &two * b * (a + c),
            (b - c) * (a + c) - (a + b) * (a - b),
        ],
    ]
}

/// Factored forms of the four side determinants.
pub fn crossing_factorizations(base: &Coordinate3) -> [Rational; 4] {
    let [a, b, c] = &base.0;
    let two = rational(2);
    let p = sq(a) - a * b + sq(b) - a * c - b * c + sq(c);
    [
        -(&two * (c - b) * (sq(a) + a * b - sq(b) + a * c - b * c - sq(c))),
        -(&two * (c + b) * &p),
        &two * (c - a) * (-sq(a) + a * b + sq(b) - a * c + b * c - sq(c)),
        &two * (a + c) * &p,
    ]
}

/// The four 4×4 side determinants as matrices: a row of ones over the
/// columns of one triangle vertex and the three corners of the other triangle.
pub fn crossing_matrices(base: &Coordinate3) -> [[[Rational; 4]; 4]; 4] {
    let [a, b, c] = &base.0;
    let one = rational(1);
    let ones = [one.clone(), one.clone(), one.clone(), one];
    let build = |first: [Rational; 3], tri: [[Rational; 3]; 3]| -> [[Rational; 4]; 4] {
        let cols = [first, tri[0].clone(), tri[1].clone(), tri[2].clone()];
        let row = |i: usize| {
            [
                cols[0][i].clone(),
                cols[1][i].clone(),
                cols[2][i].clone(),
                cols[3][i].clone(),
            ]
        };
        [ones.clone(), row(0), row(1), row(2)]
    };
    let v = [a.clone(), b.clone(), c.clone()];
    let d3 = [
        v.clone(),
        [-b.clone(), -c.clone(), a.clone()],
        [b.clone(), c.clone(), a.clone()],
    ];
    let d4 = [
        v,
        [-c.clone(), -a.clone(), b.clone()],
        [c.clone(), a.clone(), b.clone()],
    ];
    [
        build([-c.clone(), -a.clone(), b.clone()], d3.clone()),
        build([c.clone(), a.clone(), b.clone()], d3),
        build([-b.clone(), -c.clone(), a.clone()], d4.clone()),
        build([b.clone(), c.clone(), a.clone()], d4),
    ]
}

fn dominates(x: &Rational, y: &Rational, z: &Rational) -> bool {
    x.abs() >= y.abs() && x.abs() >= z.abs()
}

pub fn m2_case_analysis(base: &Coordinate3) -> Result<CaseVerdict, RealizeError> {
    if base.is_zero() {
        return Err(RealizeError::ZeroVector);
    }
    let [a, b, c] = &base.0;
    let region_expressions = [
        sq(c) + a * b,
        sq(a) + b * c,
        sq(b) + a * c,
        sq(a) - b * c,
        sq(b) - a * c,
    ];
    let mut verdict = CaseVerdict {
        region: Region::Boundary,
        cases: Vec::new(),
        region_expressions,
        case_values: case_formulas(base),
        crossing_determinants: crossing_factorizations(base),
    };
    let e = &verdict.region_expressions;
    let neg = |i: usize| e[i].is_negative();
    let (region, cases) = if e.iter().any(Zero::is_zero) {
        let holding = Case::ALL.into_iter().filter(|k| verdict.condition_holds(*k)).collect();
        (Region::Boundary, holding)
    } else if neg(0) {
        let cases = if dominates(a, b, c) {
            vec![Case::C4]
        } else if dominates(b, a, c) {
            vec![Case::C3]
        } else {
            Vec::new()
        };
        (Region::R1, cases)
    } else if neg(1) && neg(2) {
        (Region::R2, vec![Case::C3, Case::C4])
    } else if neg(3) && neg(4) {
        (Region::R3, vec![Case::C5])
    } else {
        let cases = [Case::C1, Case::C2]
            .into_iter()
            .filter(|k| verdict.condition_holds(*k))
            .collect();
        (Region::R4, cases)
    };
    verdict.region = region;
    verdict.cases = cases;
    Ok(verdict)
}

/// Whether a nontrivial rotation of `T` fixes the point.
pub fn is_axis_point(base: &Coordinate3) -> bool {
    build_tetrahedral_group()
        .elements()
        .iter()
        .filter(|g| !g.is_identity())
        .any(|g| base.act(g) == *base)
}

/// The four triangles at the base vertex used by the case analysis, read off
/// the constructed map.
pub struct CaseTriangles {
    pub stabilized_y3: Triangle,
    pub stabilized_y4: Triangle,
    pub first: Triangle,
    pub second: Triangle,
}

fn face_with(map: &CandidateMap, group: &RotationGroup, others: [CoreRotation; 2]) -> Vec<usize> {
    let want = [0, group.core_index(others[0]), group.core_index(others[1])];
    map.faces()
        .iter()
        .find(|f| f.vertices.len() == 3 && want.iter().all(|v| f.vertices.contains(v)))
        .map(|f| f.vertices.clone())
        .expect("face present in the map")
}

pub fn case_triangles(base: &Coordinate3) -> Result<CaseTriangles, RealizeError> {
    use CoreRotation::*;
    let group = build_tetrahedral_group();
    let map = build_candidate_map(&m2_symbols(), &group).map_err(|e| RealizeError::Map(e.to_string()))?;
    let tri = |others: [CoreRotation; 2]| -> Result<Triangle, RealizeError> {
        let f = face_with(&map, &group, others);
        let p = |i: usize| base.act(&group.element(f[i]));
        Triangle::new(p(0), p(1), p(2)).map_err(|_| RealizeError::OnRotationAxis)
    };
    Ok(CaseTriangles {
        stabilized_y3: tri([Y3, Y3i])?,
        stabilized_y4: tri([Y4i, Y4])?,
        first: tri([Y4, Y1i])?,
        second: tri([Y3i, Y1])?,
    })
}

/// Whether the geometric event behind `case` occurs at `base`, decided by the
/// generic predicates on the constructed map's faces.
pub fn case_event_occurs(case: Case, base: &Coordinate3) -> Result<bool, RealizeError> {
    use CoreRotation::*;
    let group = build_tetrahedral_group();
    let t = case_triangles(base)?;
    let axis = |c: CoreRotation| Coordinate3::from_ints(group.axis_of(c).direction.map(i64::from));
    let pierce = |p: Coordinate3, tri: &Triangle| axis_pierces_triangle(&p, tri).map_err(|_| RealizeError::ZeroVector);
    match case {
        Case::C1 => pierce(axis(I3), &t.stabilized_y3),
        Case::C2 => pierce(axis(I3), &t.stabilized_y4),
        Case::C3 => pierce(axis(Y4), &t.first),
        Case::C4 => pierce(axis(Y3), &t.second),
        Case::C5 => Ok(triangle_intersection_class(&t.first, &t.second) == IntersectionClass::Nontrivial),
    }
}

/// True when the case analysis names at least one case, every named event is
/// confirmed geometrically, and the verifier rejects the map at `base`.
pub fn cross_validate_m2(base: &Coordinate3) -> Result<bool, RealizeError> {
    let verdict = m2_case_analysis(base)?;
    if is_axis_point(base) {
        return Err(RealizeError::OnRotationAxis);
    }
    if verdict.cases.is_empty() {
        return Ok(false);
    }
    for case in &verdict.cases {
        if !case_event_occurs(*case, base)? {
            return Ok(false);
        }
    }
    let map =
        build_candidate_map(&m2_symbols(), &build_tetrahedral_group()).map_err(|e| RealizeError::Map(e.to_string()))?;
    Ok(!verify_realization(&map, base).is_embedded())
}
