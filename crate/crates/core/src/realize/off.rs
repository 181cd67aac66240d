//! Object File Format export of an embedded realization.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_traits::ToPrimitive;

use super::{Realization, RealizeError};
use crate::geometry::Rational;

fn number(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{:?}", r.to_f64().unwrap_or(f64::NAN))
    }
}

/// Writes `OFF`, the counts line `V F E`, one line per vertex and one
/// `n i j k …` line per face in boundary-walk order. Integral coordinates are
/// printed exactly, others as the nearest double.
pub fn export_off(realization: &Realization) -> Result<String, RealizeError> {
    let report = realization.verify();
    if let Some(w) = report.witness {
        return Err(RealizeError::NotEmbedded(w));
    }
    let mut out = String::new();
    out.push_str("OFF\n");
    let s = &realization.summary;
    writeln!(
        out,
        "{} {} {}",
        realization.positions.len(),
        realization.faces.len(),
        s.edge_count
    )
    .expect("string write");
    for p in &realization.positions {
        writeln!(out, "{} {} {}", number(&p.0[0]), number(&p.0[1]), number(&p.0[2])).expect("string write");
    }
    for f in &realization.faces {
        let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        writeln!(out, "{} {}", f.len(), idx.join(" ")).expect("string write");
    }
    Ok(out)
}

/// Vertices and faces read back from OFF text.
#[derive(Clone, Debug, PartialEq)]
pub struct OffMesh {
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
    pub declared_edges: usize,
}

impl OffMesh {
    /// Distinct undirected edges of the faces.
    pub fn edge_count(&self) -> usize {
        let mut edges = BTreeSet::new();
        for f in &self.faces {
            for i in 0..f.len() {
                let (a, b) = (f[i], f[(i + 1) % f.len()]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }
}

pub fn parse_off(text: &str) -> Result<OffMesh, RealizeError> {
    let err = |m: &str| RealizeError::OffParse(m.to_string());
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    if lines.next() != Some("OFF") {
        return Err(err("missing OFF header"));
    }
    let counts: Vec<usize> = lines
        .next()
        .ok_or_else(|| err("missing counts line"))?
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| err("bad count")))
        .collect::<Result<_, _>>()?;
    let [nv, nf, ne] = counts[..] else {
        return Err(err("counts line needs three numbers"));
    };
    let mut vertices = Vec::with_capacity(nv);
    for _ in 0..nv {
        let xs: Vec<f64> = lines
            .next()
            .ok_or_else(|| err("too few vertex lines"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err("bad coordinate")))
            .collect::<Result<_, _>>()?;
        let [x, y, z] = xs[..] else {
            return Err(err("vertex line needs three coordinates"));
        };
        vertices.push([x, y, z]);
    }
    let mut faces = Vec::with_capacity(nf);
    for _ in 0..nf {
        let nums: Vec<usize> = lines
            .next()
            .ok_or_else(|| err("too few face lines"))?
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err("bad face index")))
            .collect::<Result<_, _>>()?;
        let (&n, idx) = nums.split_first().ok_or_else(|| err("empty face line"))?;
        if idx.len() != n || idx.iter().any(|&i| i >= nv) {
            return Err(err("face line does not match its vertex count"));
        }
        faces.push(idx.to_vec());
    }
    Ok(OffMesh {
        vertices,
        faces,
        declared_edges: ne,
    })
}
