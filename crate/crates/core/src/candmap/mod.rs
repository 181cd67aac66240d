//! Candidate maps: orbit symbols, the Circuit and Connectedness properties, and
//! the explicit labeled map on the vertex set indexed by the group.

mod bounds;
mod symbol;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::rotgroup::{CoreRotation, GroupElement, RotationGroup};

pub use bounds::{
    genus_from_counts, genus_shortcut, heawood_bound, heawood_min_vertices, max_genus_12_vertices,
    max_genus_for_vertices, tucker_admissible,
};
pub use symbol::{all_symbols, validate_symbol, OrbitSymbol, SymbolError};
pub use text::{format_map_text, parse_map_text, MapParseError, ParseErrorKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvalidReason {
    #[error("empty symbol set")]
    Empty,
    #[error("{0} appears in more than one entry")]
    RepeatedEntry(CoreRotation),
    #[error("angles do not form a single circuit")]
    Circuit,
    #[error("entries do not generate the group")]
    Connectedness,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("invalid symbol set: {0}")]
    InvalidSymbolSet(InvalidReason),
    #[error("orbit {symbol} yields {found} distinct faces, expected {expected}")]
    FaceOrbitSize {
        symbol: OrbitSymbol,
        found: usize,
        expected: usize,
    },
    #[error("map is not polyhedral: {0}")]
    NotPolyhedral(String),
}

/// Directed edge `tail → head` labeled by the group element carrying the tail
/// position to the head position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub tail: usize,
    pub head: usize,
    pub label: CoreRotation,
}

/// An oriented boundary walk. `orbit` indexes into [`CandidateMap::symbols`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub orbit: usize,
}

impl Face {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub face_count: usize,
    pub genus: i64,
    pub schlafli_vertex_degree: usize,
}

impl MapSummary {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count as i64 + self.face_count as i64
    }
}

impl fmt::Display for MapSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} edges {} faces {} genus {} degree {}",
            self.vertex_count, self.edge_count, self.face_count, self.genus, self.schlafli_vertex_degree
        )
    }
}

/// Successor of an angle `(x, y)` is the angle whose first label is `y⁻¹`.
///
/// Returns the cyclic sequence of outgoing dart labels at the initial vertex when
/// all angles chain into one circuit, rotated to start at its least label.
pub fn circuit_property(symbols: &[OrbitSymbol]) -> Option<Vec<CoreRotation>> {
    let angles: Vec<(CoreRotation, CoreRotation)> = symbols.iter().flat_map(|s| s.angles()).collect();
    if angles.is_empty() {
        return None;
    }
    let mut by_first: HashMap<CoreRotation, usize> = HashMap::new();
    for (i, (first, _)) in angles.iter().enumerate() {
        if by_first.insert(*first, i).is_some() {
            return None;
        }
    }
    let mut rotation = Vec::with_capacity(angles.len());
    let mut current = 0usize;
    loop {
        let (_, outgoing) = angles[current];
        rotation.push(outgoing);
        current = *by_first.get(&outgoing.inverse())?;
        if current == 0 {
            break;
        }
        if rotation.len() > angles.len() {
            return None;
        }
    }
    if rotation.len() != angles.len() {
        return None;
    }
    let start = rotation
        .iter()
        .enumerate()
        .min_by_key(|(_, c)| **c)
        .map(|(i, _)| i)
        .unwrap_or(0);
    rotation.rotate_left(start);
    Some(rotation)
}

/// Whether the entries of `symbols` generate the whole group.
pub fn connectedness_property(symbols: &[OrbitSymbol], group: &RotationGroup) -> bool {
    if symbols.is_empty() {
        return false;
    }
    let entries = symbols.iter().flat_map(|s| s.entries().iter().copied());
    group.generated_subgroup_order(entries) == group.order()
}

fn check_symbol_set(symbols: &[OrbitSymbol], group: &RotationGroup) -> Result<Vec<CoreRotation>, InvalidReason> {
    if symbols.is_empty() {
        return Err(InvalidReason::Empty);
    }
    let mut seen = Vec::new();
    for e in symbols.iter().flat_map(|s| s.entries()) {
        if seen.contains(e) {
            return Err(InvalidReason::RepeatedEntry(*e));
        }
        seen.push(*e);
    }
    let rotation = circuit_property(symbols).ok_or(InvalidReason::Circuit)?;
    if !connectedness_property(symbols, group) {
        return Err(InvalidReason::Connectedness);
    }
    Ok(rotation)
}

/// A candidate map made explicit: vertices `v_h` for every group element `h`
/// (indexed as in [`RotationGroup`]), darts, edges and oriented faces.
#[derive(Clone, Debug)]
pub struct CandidateMap {
    symbols: Vec<OrbitSymbol>,
    local_rotation: Vec<CoreRotation>,
    vertex_elements: Vec<GroupElement>,
    darts: Vec<Dart>,
    edges: Vec<[usize; 2]>,
    faces: Vec<Face>,
}

fn least_rotation(walk: &[usize]) -> Vec<usize> {
    let start = walk
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut w = walk.to_vec();
    w.rotate_left(start);
    w
}

pub fn build_candidate_map(symbols: &[OrbitSymbol], group: &RotationGroup) -> Result<CandidateMap, MapError> {
    let local_rotation = check_symbol_set(symbols, group).map_err(MapError::InvalidSymbolSet)?;
    let mut symbols = symbols.to_vec();
    symbols.sort();

    let idx = |c: CoreRotation| group.core_index(c);
    let mut faces: Vec<Face> = Vec::new();
    let mut seen_walks: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut labeled_darts: Vec<(usize, usize, usize)> = Vec::new();

    for h in 0..group.order() {
        let h_inv = group.inverse_index(h);
        let conj = |g: usize| group.mul(group.mul(h_inv, g), h);
        for (orbit, symbol) in symbols.iter().enumerate() {
            // Walk and dart labels as prescribed for the face of this orbit at v_h.
            let (walk, labels): (Vec<usize>, Vec<usize>) = match *symbol {
                OrbitSymbol::Type2(g) => {
                    let g = idx(g);
                    let mut walk = vec![h];
                    for _ in 1..group.element(g).order() {
                        let last = *walk.last().expect("non-empty walk");
                        walk.push(group.mul(g, last));
                    }
                    let labels = vec![conj(g); walk.len()];
                    (walk, labels)
                }
                OrbitSymbol::Type1([g1, g2, _]) => {
                    let (g1, g2) = (idx(g1), idx(g2));
                    let g1_inv = group.inverse_index(g1);
                    let g2_inv = group.inverse_index(g2);
                    let walk = vec![h, group.mul(g2, h), group.mul(g1_inv, h)];
                    let labels = vec![conj(g2), conj(group.mul(g2_inv, g1_inv)), conj(g1)];
                    (walk, labels)
                }
            };
            let key = least_rotation(&walk);
            if seen_walks.contains_key(&key) {
                continue;
            }
            seen_walks.insert(key, faces.len());
            for (i, &label) in labels.iter().enumerate() {
                let tail = walk[i];
                let head = walk[(i + 1) % walk.len()];
                debug_assert_eq!(group.element(tail) * group.element(label), group.element(head));
                labeled_darts.push((tail, head, label));
            }
            faces.push(Face { vertices: walk, orbit });
        }
    }

    for (orbit, symbol) in symbols.iter().enumerate() {
        let found = faces.iter().filter(|f| f.orbit == orbit).count();
        let expected = symbol.orbit_size(group.order());
        if found != expected {
            return Err(MapError::FaceOrbitSize {
                symbol: *symbol,
                found,
                expected,
            });
        }
    }

    let mut darts = Vec::with_capacity(labeled_darts.len());
    let mut by_ends: HashMap<(usize, usize), usize> = HashMap::new();
    for (tail, head, label) in labeled_darts {
        if tail == head {
            return Err(MapError::NotPolyhedral(format!("loop at vertex {tail}")));
        }
        let label = group.core_rotations()[label - 1];
        if by_ends.insert((tail, head), darts.len()).is_some() {
            return Err(MapError::NotPolyhedral(format!(
                "dart {tail}->{head} bounds two faces with the same orientation"
            )));
        }
        darts.push(Dart { tail, head, label });
    }
    let mut edges = Vec::new();
    for d in &darts {
        let opposite = by_ends
            .get(&(d.head, d.tail))
            .map(|&i| darts[i])
            .ok_or_else(|| MapError::NotPolyhedral(format!("dart {}->{} has no opposite", d.tail, d.head)))?;
        if opposite.label != d.label.inverse() {
            return Err(MapError::NotPolyhedral(format!(
                "opposite darts {}->{} carry non-inverse labels",
                d.tail, d.head
            )));
        }
        if d.tail < d.head {
            edges.push([d.tail, d.head]);
        }
    }
    edges.sort();

    let map = CandidateMap {
        symbols,
        local_rotation,
        vertex_elements: group.elements().to_vec(),
        darts,
        edges,
        faces,
    };
    map.check_polyhedral()?;
    Ok(map)
}

impl CandidateMap {
    pub fn symbols(&self) -> &[OrbitSymbol] {
        &self.symbols
    }

    pub fn local_rotation(&self) -> &[CoreRotation] {
        &self.local_rotation
    }

    /// Group element `h` of each vertex `v_h`; the vertex position for a base
    /// point `v` is `v · h`.
    pub fn vertex_elements(&self) -> &[GroupElement] {
        &self.vertex_elements
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn genus(&self) -> i64 {
        genus(self)
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.darts.iter().filter(|d| d.tail == vertex).count()
    }

    pub fn summary(&self) -> MapSummary {
        MapSummary {
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            face_count: self.face_count(),
            genus: self.genus(),
            schlafli_vertex_degree: self.local_rotation.len(),
        }
    }

    /// Number of vertices two faces have in common.
    pub fn shared_vertices(&self, a: usize, b: usize) -> usize {
        let fb = &self.faces[b].vertices;
        self.faces[a].vertices.iter().filter(|v| fb.contains(v)).count()
    }

    fn check_polyhedral(&self) -> Result<(), MapError> {
        for (i, f) in self.faces.iter().enumerate() {
            let mut sorted = f.vertices.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != f.vertices.len() {
                return Err(MapError::NotPolyhedral(format!("face {i} has a non-simple boundary")));
            }
        }
        let undirected = |f: &Face| -> Vec<(usize, usize)> { f.edges().map(|(a, b)| (a.min(b), a.max(b))).collect() };
        for i in 0..self.faces.len() {
            let ei = undirected(&self.faces[i]);
            for j in (i + 1)..self.faces.len() {
                let shared_edges = undirected(&self.faces[j]).iter().filter(|e| ei.contains(e)).count();
                let shared_vertices = self.shared_vertices(i, j);
                let ok = match shared_edges {
                    0 => shared_vertices <= 1,
                    1 => shared_vertices == 2,
                    _ => false,
                };
                if !ok {
                    return Err(MapError::NotPolyhedral(format!(
                        "faces {i} and {j} share {shared_vertices} vertices and {shared_edges} edges"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Genus from the actual incidence counts.
pub fn genus(map: &CandidateMap) -> i64 {
    genus_from_counts(map.vertex_count(), map.edge_count(), map.face_count())
        .expect("closed orientable surfaces have even Euler characteristic")
}
