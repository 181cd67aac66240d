use std::fmt;

use thiserror::Error;

use crate::rotgroup::CoreRotation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("`{0}` is not a core rotation")]
    NotCoreRotation(String),
    #[error("({0},{1},{2}) violates g3 = g1^-1 * g2^-1")]
    ProductNotIdentity(CoreRotation, CoreRotation, CoreRotation),
    #[error("singleton symbol ({0}) needs a rotation of order greater than two")]
    Type2OrderTwo(CoreRotation),
    #[error("entry {0} is repeated")]
    RepeatedEntry(CoreRotation),
    #[error("an orbit symbol has one or three entries, found {0}")]
    WrongLength(usize),
}

/// One face orbit seen from the initial vertex.
///
/// Entries are cyclic, so a `Type1` symbol is stored in the rotation whose first
/// entry is least in the canonical order; two symbols are equal exactly when they
/// encode the same oriented orbit. `Type1` sorts before `Type2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitSymbol {
    /// Trivially stabilized triangles `(g1, g2, g3)` with `g3 = g1⁻¹ g2⁻¹`.
    Type1([CoreRotation; 3]),
    /// Faces stabilized by the rotation `g`, of order at least three.
    Type2(CoreRotation),
}

impl OrbitSymbol {
    pub fn type1(g1: CoreRotation, g2: CoreRotation, g3: CoreRotation) -> Result<Self, SymbolError> {
        for (a, b) in [(g1, g2), (g2, g3), (g1, g3)] {
            if a == b {
                return Err(SymbolError::RepeatedEntry(a));
            }
        }
        if g1.element().inverse() * g2.element().inverse() != g3.element() {
            return Err(SymbolError::ProductNotIdentity(g1, g2, g3));
        }
        let rotations = [[g1, g2, g3], [g2, g3, g1], [g3, g1, g2]];
        let least = rotations.into_iter().min().expect("three rotations");
        Ok(OrbitSymbol::Type1(least))
    }

    pub fn type2(g: CoreRotation) -> Result<Self, SymbolError> {
        if g.order() <= 2 {
            return Err(SymbolError::Type2OrderTwo(g));
        }
        Ok(OrbitSymbol::Type2(g))
    }

    pub fn from_entries(entries: &[CoreRotation]) -> Result<Self, SymbolError> {
        match *entries {
            [g] => Self::type2(g),
            [g1, g2, g3] => Self::type1(g1, g2, g3),
            _ => Err(SymbolError::WrongLength(entries.len())),
        }
    }

    pub fn entries(&self) -> &[CoreRotation] {
        match self {
            OrbitSymbol::Type1(e) => e,
            OrbitSymbol::Type2(g) => std::slice::from_ref(g),
        }
    }

    pub fn is_type1(&self) -> bool {
        matches!(self, OrbitSymbol::Type1(_))
    }

    /// Oriented combinatorial angles at the initial vertex: `(g, g)` for a
    /// singleton, `(g1,g2), (g2,g3), (g3,g1)` for a triple.
    pub fn angles(&self) -> Vec<(CoreRotation, CoreRotation)> {
        match *self {
            OrbitSymbol::Type2(g) => vec![(g, g)],
            OrbitSymbol::Type1([a, b, c]) => vec![(a, b), (b, c), (c, a)],
        }
    }

    /// Number of faces in the orbit under a group of order `group_order`.
    pub fn orbit_size(&self, group_order: usize) -> usize {
        match self {
            OrbitSymbol::Type1(_) => group_order,
            OrbitSymbol::Type2(g) => group_order / g.order() as usize,
        }
    }

    /// The same orbit read with the opposite surface orientation: every entry
    /// inverted and the cyclic order reversed.
    pub fn reversed(&self) -> OrbitSymbol {
        match *self {
            OrbitSymbol::Type2(g) => OrbitSymbol::Type2(g.inverse()),
            OrbitSymbol::Type1([a, b, c]) => {
                OrbitSymbol::type1(c.inverse(), b.inverse(), a.inverse()).expect("reversal of a valid symbol is valid")
            }
        }
    }
}

impl fmt::Display for OrbitSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(e.name())?;
        }
        f.write_str(")")
    }
}

/// Parses and validates a symbol given by element names.
pub fn validate_symbol<S: AsRef<str>>(entries: &[S]) -> Result<OrbitSymbol, SymbolError> {
    let parsed = entries
        .iter()
        .map(|s| {
            let s = s.as_ref().trim();
            s.parse::<CoreRotation>()
                .map_err(|_| SymbolError::NotCoreRotation(s.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    OrbitSymbol::from_entries(&parsed)
}

/// Every valid symbol over `T`: 8 singletons and all admissible triples.
pub fn all_symbols() -> Vec<OrbitSymbol> {
    let mut out: Vec<OrbitSymbol> = Vec::new();
    for g1 in CoreRotation::ALL {
        for g2 in CoreRotation::ALL {
            let product = g1.element().inverse() * g2.element().inverse();
            let Some(g3) = CoreRotation::from_element(&product) else {
                continue;
            };
            if let Ok(s) = OrbitSymbol::type1(g1, g2, g3) {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
    }
    out.extend(CoreRotation::ALL.into_iter().filter_map(|g| OrbitSymbol::type2(g).ok()));
    out.sort();
    out
}
