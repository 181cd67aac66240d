//! Euler characteristic, Heawood and Tucker bounds on the genus.

use crate::rotgroup::GroupKind;

use super::OrbitSymbol;

/// Genus of a closed orientable surface from its cell counts, or `None` when
/// the Euler characteristic is odd or exceeds 2.
pub fn genus_from_counts(vertices: usize, edges: usize, faces: usize) -> Option<i64> {
    let chi = vertices as i64 - edges as i64 + faces as i64;
    if chi % 2 != 0 || chi > 2 {
        return None;
    }
    Some(1 - chi / 2)
}

/// Genus computed from the symbols alone: `|G|` vertices, `|G|/2` edges per
/// entry occurrence, and the summed orbit sizes as faces.
pub fn genus_shortcut(symbols: &[OrbitSymbol], group_order: usize) -> i64 {
    let k: usize = symbols.iter().map(|s| s.entries().len()).sum();
    let f: usize = symbols.iter().map(|s| s.orbit_size(group_order)).sum();
    let chi = group_order as i64 - (group_order / 2 * k) as i64 + f as i64;
    1 - chi / 2
}

/// Least `n` with `n ≥ (7 + √(1 + 48g)) / 2`, evaluated in integers.
pub fn heawood_bound(genus: u64) -> u64 {
    let disc = 1 + 48 * genus;
    let mut root = (disc as f64).sqrt() as u64;
    while root * root < disc {
        root += 1;
    }
    while root > 0 && (root - 1) * (root - 1) >= disc {
        root -= 1;
    }
    // root = ⌈√disc⌉; need 2n - 7 ≥ √disc.
    (7 + root).div_ceil(2)
}

/// Minimal vertex count of a polyhedral map of the given genus. Genus 2 is
/// sharpened from 9 to 10, since no polyhedral map of genus 2 has 9 vertices.
pub fn heawood_min_vertices(genus: u64) -> u64 {
    if genus == 2 {
        10
    } else {
        heawood_bound(genus)
    }
}

/// Largest genus a triangulated surface on `vertices` vertices can have,
/// from `|E| = 3|V| + 6(g - 1) ≤ |V|(|V| - 1)/2`.
pub fn max_genus_for_vertices(vertices: u64) -> u64 {
    let complete = vertices * vertices.saturating_sub(1) / 2;
    let base = 3 * vertices;
    if complete + 6 < base {
        return 0;
    }
    (complete + 6 - base) / 6
}

pub fn max_genus_12_vertices() -> u64 {
    max_genus_for_vertices(12)
}

fn tucker_data(kind: GroupKind) -> (&'static [u64], &'static [u64]) {
    match kind {
        GroupKind::Tetrahedral => (&[6, 8], &[0, 3, 5, 7]),
        GroupKind::Octahedral => (&[12, 16, 18], &[0, 5, 7, 11, 13]),
        GroupKind::Icosahedral => (&[30, 40, 48], &[0, 11, 19, 21, 29, 31, 37]),
    }
}

/// Whether a smooth embedded surface of this genus can carry the rotational
/// symmetry `kind`: `g` must be a nonnegative combination of the periods plus
/// one of the residues.
pub fn tucker_admissible(kind: GroupKind, genus: u64) -> bool {
    let (periods, residues) = tucker_data(kind);
    let n = genus as usize;
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for i in 1..=n {
        reachable[i] = periods.iter().any(|&p| p as usize <= i && reachable[i - p as usize]);
    }
    residues.iter().any(|&r| r <= genus && reachable[n - r as usize])
}
