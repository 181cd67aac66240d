//! Geometric isomorphism: the action of the normalizer `N` of `T` in O(3) on
//! orbit symbols and on whole symbol sets.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::candmap::OrbitSymbol;
use crate::rotgroup::{build_normalizer, build_tetrahedral_group, CoreRotation, GroupElement, NormalizerGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomIsoError {
    #[error("matrix {0} does not normalize the group")]
    NotInNormalizer(GroupElement),
    #[error("orbit {0} consists of involutions only and cannot connect to other orbits")]
    UnrealizableOrbit(OrbitSymbol),
}

/// Normalizer of the tetrahedral group, built once.
pub fn tetrahedral_normalizer() -> &'static NormalizerGroup {
    static N: OnceLock<NormalizerGroup> = OnceLock::new();
    N.get_or_init(|| build_normalizer(&build_tetrahedral_group()))
}

fn conj(c: CoreRotation, a: &GroupElement) -> Result<CoreRotation, GeomIsoError> {
    CoreRotation::from_element(&c.element().conjugate_by(a)).ok_or(GeomIsoError::NotInNormalizer(*a))
}

/// Applies `a` to a symbol. Rotations conjugate every entry; orientation
/// reversing elements conjugate the inverses and reverse the cyclic order.
pub fn transform_symbol(s: &OrbitSymbol, a: &GroupElement) -> Result<OrbitSymbol, GeomIsoError> {
    let flip = !a.is_orientation_preserving();
    let out = match *s {
        OrbitSymbol::Type2(g) => {
            let g = if flip { g.inverse() } else { g };
            OrbitSymbol::Type2(conj(g, a)?)
        }
        OrbitSymbol::Type1([g1, g2, g3]) => {
            let [x, y, z] = if flip {
                [g3.inverse(), g2.inverse(), g1.inverse()]
            } else {
                [g1, g2, g3]
            };
            OrbitSymbol::type1(conj(x, a)?, conj(y, a)?, conj(z, a)?).expect("the action preserves validity")
        }
    };
    Ok(out)
}

pub fn transform_map(symbols: &[OrbitSymbol], a: &GroupElement) -> Result<Vec<OrbitSymbol>, GeomIsoError> {
    let mut out = symbols
        .iter()
        .map(|s| transform_symbol(s, a))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

/// The three isomorphism classes of connectable face orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceOrbitClass {
    /// Faces stabilized by a threefold rotation, class of `(Y1)`.
    Stabilized,
    /// Triangles whose labels are all threefold, class of `(Y4i,Y2i,Y3i)`.
    ThreeFold,
    /// Triangles with exactly one involution label, class of `(Y1,Y4,I1)`.
    OneInvolution,
}

impl FaceOrbitClass {
    pub const ALL: [FaceOrbitClass; 3] = [Self::Stabilized, Self::ThreeFold, Self::OneInvolution];

    pub fn representative(self) -> OrbitSymbol {
        use CoreRotation::*;
        match self {
            Self::Stabilized => OrbitSymbol::Type2(Y1),
            Self::ThreeFold => OrbitSymbol::type1(Y4i, Y2i, Y3i).expect("valid"),
            Self::OneInvolution => OrbitSymbol::type1(Y1, Y4, I1).expect("valid"),
        }
    }
}

impl fmt::Display for FaceOrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative())
    }
}

pub fn classify_face_orbit(s: &OrbitSymbol) -> Result<FaceOrbitClass, GeomIsoError> {
    match s {
        OrbitSymbol::Type2(_) => Ok(FaceOrbitClass::Stabilized),
        OrbitSymbol::Type1(entries) => match entries.iter().filter(|g| g.is_involution()).count() {
            0 => Ok(FaceOrbitClass::ThreeFold),
            1 => Ok(FaceOrbitClass::OneInvolution),
            _ => Err(GeomIsoError::UnrealizableOrbit(*s)),
        },
    }
}

/// Orbit of a symbol under `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolClass {
    pub representative: OrbitSymbol,
    pub members: BTreeSet<OrbitSymbol>,
}

pub fn symbol_class(s: &OrbitSymbol) -> SymbolClass {
    let members: BTreeSet<OrbitSymbol> = tetrahedral_normalizer()
        .elements()
        .iter()
        .map(|a| transform_symbol(s, a).expect("normalizer element"))
        .collect();
    let representative = *members.iter().next().expect("orbit contains the symbol");
    SymbolClass {
        representative,
        members,
    }
}

/// Least image of the sorted symbol set over all 48 normalizer elements.
pub fn canonical_map_form(symbols: &[OrbitSymbol]) -> Vec<OrbitSymbol> {
    tetrahedral_normalizer()
        .elements()
        .iter()
        .map(|a| transform_map(symbols, a).expect("normalizer element"))
        .min()
        .unwrap_or_default()
}

/// An element of `N` carrying the first symbol set onto the second. The
/// identity is tried first.
pub fn maps_isomorphic(m1: &[OrbitSymbol], m2: &[OrbitSymbol]) -> Option<GroupElement> {
    let mut target = m2.to_vec();
    target.sort();
    tetrahedral_normalizer()
        .elements()
        .iter()
        .find(|a| transform_map(m1, a).expect("normalizer element") == target)
        .copied()
}

/// Isomorphism class of candidate maps, keyed by canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MapClass {
    pub representative: Vec<OrbitSymbol>,
    pub genus: i64,
}
