//! The tetrahedral rotation group `T`, its core rotations and its normalizer in O(3).
//!
//! Elements are integer 3×3 matrices acting on row vectors from the right, so a
//! product `g * h` applies `g` first and then `h`. Vertex positions, dart labels
//! and conjugation all go through this one representation.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

pub type Matrix3 = [[i32; 3]; 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("matrix {0:?} is not orthogonal")]
    NotOrthogonal(Matrix3),
    #[error("unknown group element name `{0}`")]
    UnknownName(String),
    #[error("unsupported symmetry group `{0}`; only T is available")]
    UnsupportedGroup(String),
}

/// An orthogonal integer matrix, i.e. a rotation or roto-reflection of E³.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rows: Matrix3,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        rows: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    };

    pub const CENTRAL_INVERSION: GroupElement = GroupElement {
        rows: [[-1, 0, 0], [0, -1, 0], [0, 0, -1]],
    };

    pub fn from_rows(rows: Matrix3) -> Result<Self, GroupError> {
        let candidate = GroupElement { rows };
        if candidate * candidate.transpose() == Self::IDENTITY {
            Ok(candidate)
        } else {
            Err(GroupError::NotOrthogonal(rows))
        }
    }

    pub fn rows(&self) -> &Matrix3 {
        &self.rows
    }

    fn transpose(&self) -> Self {
        let m = &self.rows;
        let mut rows = [[0; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = m[j][i];
            }
        }
        GroupElement { rows }
    }

    /// Orthogonality makes the inverse the transpose.
    pub fn inverse(&self) -> Self {
        self.transpose()
    }

    pub fn det(&self) -> i32 {
        let m = &self.rows;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn is_orientation_preserving(&self) -> bool {
        self.det() == 1
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Smallest `n ≥ 1` with `selfⁿ = 1`. Finite orthogonal integer matrices have order ≤ 12.
    pub fn order(&self) -> u32 {
        let mut power = *self;
        let mut n = 1;
        while !power.is_identity() {
            power = power * *self;
            n += 1;
            assert!(n <= 48, "integer orthogonal matrix of unbounded order");
        }
        n
    }

    /// `a⁻¹ · self · a`.
    pub fn conjugate_by(&self, a: &GroupElement) -> GroupElement {
        a.inverse() * *self * *a
    }

    /// Row vector times matrix.
    pub fn act(&self, v: [i64; 3]) -> [i64; 3] {
        let m = &self.rows;
        let mut out = [0i64; 3];
        for (j, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|i| v[i] * i64::from(m[i][j])).sum();
        }
        out
    }

    /// A primitive integer direction fixed by this element, normalized so its first
    /// non-zero coordinate is positive. `None` for the identity or when no lattice
    /// direction with entries in {−1, 0, 1} is fixed.
    pub fn fixed_direction(&self) -> Option<[i32; 3]> {
        if self.is_identity() {
            return None;
        }
        for x in [0i64, 1] {
            for y in -1i64..=1 {
                for z in -1i64..=1 {
                    let v = [x, y, z];
                    let leading_positive = v.iter().find(|c| **c != 0).is_some_and(|c| *c > 0);
                    if leading_positive && self.act(v) == v {
                        return Some([x as i32, y as i32, z as i32]);
                    }
                }
            }
        }
        None
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: GroupElement) -> GroupElement {
        let (a, b) = (&self.rows, &rhs.rows);
        let mut rows = [[0; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        GroupElement { rows }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "({},{},{});({},{},{});({},{},{})",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}

/// Returns `a⁻¹ · g · a`.
pub fn conjugate(g: &GroupElement, a: &GroupElement) -> GroupElement {
    g.conjugate_by(a)
}

/// The eleven core rotations of `T`, declared in their canonical order.
///
/// `I1..I3` are the half-turns about the coordinate axes, `Y1..Y4` the
/// third-turns about the cube diagonals and `Y1i..Y4i` their inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoreRotation {
    I1,
    I2,
    I3,
    Y1,
    Y2,
    Y3,
    Y4,
    Y1i,
    Y2i,
    Y3i,
    Y4i,
}

impl CoreRotation {
    pub const ALL: [CoreRotation; 11] = [
        CoreRotation::I1,
        CoreRotation::I2,
        CoreRotation::I3,
        CoreRotation::Y1,
        CoreRotation::Y2,
        CoreRotation::Y3,
        CoreRotation::Y4,
        CoreRotation::Y1i,
        CoreRotation::Y2i,
        CoreRotation::Y3i,
        CoreRotation::Y4i,
    ];

    pub fn name(self) -> &'static str {
        use CoreRotation::*;
        match self {
            I1 => "I1",
            I2 => "I2",
            I3 => "I3",
            Y1 => "Y1",
            Y2 => "Y2",
            Y3 => "Y3",
            Y4 => "Y4",
            Y1i => "Y1i",
            Y2i => "Y2i",
            Y3i => "Y3i",
            Y4i => "Y4i",
        }
    }

    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn element(self) -> GroupElement {
        use CoreRotation::*;
        let rows = match self {
            I1 => [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
            I2 => [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
            I3 => [[-1, 0, 0], [0, -1, 0], [0, 0, 1]],
            Y1 => [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
            Y2 => [[0, 0, -1], [1, 0, 0], [0, -1, 0]],
            Y3 => [[0, 0, -1], [-1, 0, 0], [0, 1, 0]],
            Y4 => [[0, 0, 1], [-1, 0, 0], [0, -1, 0]],
            Y1i | Y2i | Y3i | Y4i => return self.inverse().element().inverse(),
        };
        GroupElement { rows }
    }

    pub fn inverse(self) -> CoreRotation {
        use CoreRotation::*;
        match self {
            I1 | I2 | I3 => self,
            Y1 => Y1i,
            Y2 => Y2i,
            Y3 => Y3i,
            Y4 => Y4i,
            Y1i => Y1,
            Y2i => Y2,
            Y3i => Y3,
            Y4i => Y4,
        }
    }

    pub fn order(self) -> u32 {
        if self.is_involution() {
            2
        } else {
            3
        }
    }

    pub fn is_involution(self) -> bool {
        matches!(self, CoreRotation::I1 | CoreRotation::I2 | CoreRotation::I3)
    }

    pub fn from_element(g: &GroupElement) -> Option<CoreRotation> {
        CoreRotation::ALL.into_iter().find(|c| c.element() == *g)
    }
}

impl fmt::Display for CoreRotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CoreRotation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoreRotation::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| GroupError::UnknownName(s.to_string()))
    }
}

/// The three Platonic rotation groups that admit genus conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl FromStr for GroupKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" => Ok(GroupKind::Tetrahedral),
            "O" => Ok(GroupKind::Octahedral),
            "I" => Ok(GroupKind::Icosahedral),
            other => Err(GroupError::UnknownName(other.to_string())),
        }
    }
}

/// Rotation axis as a primitive integer direction together with its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Axis {
    pub direction: [i32; 3],
    pub order: u32,
}

/// A finite rotation group with a fixed element indexing.
///
/// Index 0 is the identity and indices `1..=11` are the core rotations in
/// canonical order, so `index = 1 + CoreRotation::index()`. Candidate maps
/// use the same indexing for their vertices `v_h`.
#[derive(Clone, Debug)]
pub struct RotationGroup {
    elements: Vec<GroupElement>,
    table: Vec<Vec<usize>>,
    core: Vec<CoreRotation>,
    axes: Vec<Axis>,
}

impl RotationGroup {
    pub fn tetrahedral() -> Self {
        let mut elements = vec![GroupElement::IDENTITY];
        elements.extend(CoreRotation::ALL.iter().map(|c| c.element()));
        let index_of = |g: &GroupElement| elements.iter().position(|e| e == g);
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index_of(&(*a * *b)).expect("T is closed under products"))
                    .collect()
            })
            .collect();

        let mut axes: Vec<Axis> = Vec::new();
        for c in CoreRotation::ALL {
            let direction = c
                .element()
                .fixed_direction()
                .expect("every core rotation of T fixes a lattice direction");
            if !axes.iter().any(|a| a.direction == direction) {
                axes.push(Axis {
                    direction,
                    order: c.order(),
                });
            }
        }

        RotationGroup {
            elements,
            table,
            core: CoreRotation::ALL.to_vec(),
            axes,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> GroupElement {
        self.elements[index]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.elements.iter().position(|e| e == g)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index_of(g).is_some()
    }

    pub fn core_rotations(&self) -> &[CoreRotation] {
        &self.core
    }

    pub fn core_index(&self, c: CoreRotation) -> usize {
        1 + c.index()
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.table[a]
            .iter()
            .position(|&p| p == 0)
            .expect("every element has an inverse")
    }

    /// Display name: `1` for the identity, the core-rotation name otherwise.
    pub fn name(&self, index: usize) -> &'static str {
        if index == 0 {
            "1"
        } else {
            self.core[index - 1].name()
        }
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis_of(&self, c: CoreRotation) -> Axis {
        let direction = c.element().fixed_direction().expect("core rotations fix an axis");
        Axis {
            direction,
            order: c.order(),
        }
    }

    /// Number of elements in the subgroup generated by `generators`.
    pub fn generated_subgroup_order<I>(&self, generators: I) -> usize
    where
        I: IntoIterator<Item = CoreRotation>,
    {
        let gens: Vec<usize> = generators.into_iter().map(|c| self.core_index(c)).collect();
        let mut reached = vec![false; self.order()];
        reached[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        reached.iter().filter(|r| **r).count()
    }
}

pub fn build_tetrahedral_group() -> RotationGroup {
    RotationGroup::tetrahedral()
}

/// The normalizer `N` of a rotation group in O(3) with its orientation-preserving
/// half `N⁺` and the centralizer `C`.
#[derive(Clone, Debug)]
pub struct NormalizerGroup {
    elements: Vec<GroupElement>,
    orientation_preserving: Vec<GroupElement>,
    centralizer: Vec<GroupElement>,
}

impl NormalizerGroup {
    /// All elements; the identity comes first, the remaining order is fixed.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn orientation_preserving(&self) -> &[GroupElement] {
        &self.orientation_preserving
    }

    /// Elements commuting with every element of the group. Exposed for completeness.
    pub fn centralizer(&self) -> &[GroupElement] {
        &self.centralizer
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        self.elements.contains(a)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn signed_permutation_matrices() -> Vec<GroupElement> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(48);
    for perm in PERMS {
        for signs in 0..8u32 {
            let mut rows = [[0; 3]; 3];
            for (i, row) in rows.iter_mut().enumerate() {
                row[perm[i]] = if signs & (1 << i) == 0 { 1 } else { -1 };
            }
            out.push(GroupElement { rows });
        }
    }
    out
}

/// Computes the normalizer by testing every orthogonal integer matrix.
///
/// Orthogonal integer matrices are exactly the signed permutation matrices,
/// so the search is complete for groups represented with integer entries.
pub fn build_normalizer(group: &RotationGroup) -> NormalizerGroup {
    let elements: Vec<GroupElement> = signed_permutation_matrices()
        .into_iter()
        .filter(|a| group.elements().iter().all(|g| group.contains(&g.conjugate_by(a))))
        .collect();
    let orientation_preserving = elements
        .iter()
        .copied()
        .filter(GroupElement::is_orientation_preserving)
        .collect();
    let centralizer = elements
        .iter()
        .copied()
        .filter(|a| group.elements().iter().all(|g| *a * *g == *g * *a))
        .collect();
    NormalizerGroup {
        elements,
        orientation_preserving,
        centralizer,
    }
}
