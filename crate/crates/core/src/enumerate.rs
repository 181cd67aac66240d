//! Exhaustive enumeration of candidate maps over `T` up to geometric
//! isomorphism, and the genus filters applied on top of it.

use std::collections::BTreeSet;
use std::fmt;

use crate::candmap::{
    all_symbols, build_candidate_map, genus_shortcut, tucker_admissible, CandidateMap, MapSummary, OrbitSymbol,
};
use crate::geomiso::{canonical_map_form, symbol_class, MapClass};
use crate::rotgroup::{CoreRotation, GroupKind, RotationGroup};

/// Genera of the classes an unfiltered run over `T` is expected to produce.
pub const EXPECTED_GENERA: [i64; 7] = [0, 1, 3, 3, 4, 4, 6];

/// Composable filters; all off by default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub tucker: bool,
    pub schewe: bool,
    pub min_genus: Option<i64>,
}

impl Filters {
    pub fn accepts(&self, summary: &MapSummary) -> bool {
        if self.tucker && (summary.genus < 0 || !tucker_admissible(GroupKind::Tetrahedral, summary.genus as u64)) {
            return false;
        }
        if self.schewe && !schewe_filter(summary) {
            return false;
        }
        if let Some(g) = self.min_genus {
            if summary.genus < g {
                return false;
            }
        }
        true
    }
}

/// False exactly for genus 6 on 12 vertices, which has no polyhedral
/// realization.
pub fn schewe_filter(summary: &MapSummary) -> bool {
    !(summary.genus == 6 && summary.vertex_count == 12)
}

/// Least member of each normalizer orbit of triangle symbols.
pub fn type1_class_representatives() -> Vec<OrbitSymbol> {
    let reps: BTreeSet<OrbitSymbol> = all_symbols()
        .iter()
        .filter(|s| s.is_type1())
        .map(|s| symbol_class(s).representative)
        .collect();
    reps.into_iter().collect()
}

/// Adds `(g⁻¹)` for every threefold entry whose inverse is not yet used.
fn close_with_type2(type1: &[OrbitSymbol]) -> Vec<OrbitSymbol> {
    let used: Vec<CoreRotation> = type1.iter().flat_map(|s| s.entries().iter().copied()).collect();
    let mut out = type1.to_vec();
    for g in &used {
        let inv = g.inverse();
        if !g.is_involution() && !used.contains(&inv) {
            out.push(OrbitSymbol::Type2(inv));
        }
    }
    out.sort();
    out
}

fn disjoint(used: &[CoreRotation], s: &OrbitSymbol) -> bool {
    s.entries().iter().all(|e| !used.contains(e))
}

/// Depth-first search from each seed: extend by entry-disjoint triangle
/// symbols, close with the forced singletons, keep sets that form candidate
/// maps, and merge by canonical form.
pub fn enumerate_with_seeds(group: &RotationGroup, seeds: &[OrbitSymbol]) -> Vec<MapClass> {
    let triangles: Vec<OrbitSymbol> = all_symbols().into_iter().filter(|s| s.is_type1()).collect();
    let mut found: BTreeSet<Vec<OrbitSymbol>> = BTreeSet::new();

    fn visit(
        group: &RotationGroup,
        triangles: &[OrbitSymbol],
        start: usize,
        current: &mut Vec<OrbitSymbol>,
        used: &mut Vec<CoreRotation>,
        found: &mut BTreeSet<Vec<OrbitSymbol>>,
    ) {
        let closed = close_with_type2(current);
        if build_candidate_map(&closed, group).is_ok() {
            found.insert(canonical_map_form(&closed));
        }
        for (i, t) in triangles.iter().enumerate().skip(start) {
            if current.contains(t) || !disjoint(used, t) {
                continue;
            }
            current.push(*t);
            used.extend_from_slice(t.entries());
            visit(group, triangles, i + 1, current, used, found);
            used.truncate(used.len() - 3);
            current.pop();
        }
    }

    for seed in seeds {
        let mut current = vec![*seed];
        let mut used = seed.entries().to_vec();
        visit(group, &triangles, 0, &mut current, &mut used, &mut found);
    }

    found
        .into_iter()
        .map(|representative| {
            let genus = genus_shortcut(&representative, group.order());
            MapClass { representative, genus }
        })
        .collect()
}

/// All candidate-map classes over `T`, sorted by canonical form.
pub fn enumerate_candidate_maps(group: &RotationGroup) -> Vec<MapClass> {
    enumerate_with_seeds(group, &type1_class_representatives())
}

/// A class with its explicit map, kept only if it passes `filters`.
pub fn enumerate_filtered(group: &RotationGroup, filters: &Filters) -> Vec<(MapClass, CandidateMap)> {
    enumerate_candidate_maps(group)
        .into_iter()
        .filter_map(|class| {
            let map = build_candidate_map(&class.representative, group).expect("enumerated classes are valid");
            filters.accepts(&map.summary()).then_some((class, map))
        })
        .collect()
}

/// Mismatch between an unfiltered enumeration and [`EXPECTED_GENERA`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub found: Vec<i64>,
    pub expected: Vec<i64>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DISCREPANCY: found {} classes with genera {:?}, expected {} with genera {:?}",
            self.found.len(),
            self.found,
            self.expected.len(),
            self.expected
        )
    }
}

pub fn check_expected(classes: &[MapClass]) -> Result<(), Discrepancy> {
    let mut found: Vec<i64> = classes.iter().map(|c| c.genus).collect();
    found.sort_unstable();
    if found == EXPECTED_GENERA {
        Ok(())
    } else {
        Err(Discrepancy {
            found,
            expected: EXPECTED_GENERA.to_vec(),
        })
    }
}

/// One report line: counts, genus, local rotation and symbols.
pub fn summary_line(map: &CandidateMap) -> String {
    let s = map.summary();
    let rotation: Vec<&str> = map.local_rotation().iter().map(|c| c.name()).collect();
    let symbols: Vec<String> = map.symbols().iter().map(|s| s.to_string()).collect();
    format!(
        "V={} E={} F={} genus={} degree={} rotation=({}) symbols={}",
        s.vertex_count,
        s.edge_count,
        s.face_count,
        s.genus,
        s.schlafli_vertex_degree,
        rotation.join(","),
        symbols.join("")
    )
}
