//! Shared helpers for the integration tests: random rational inputs and an
//! independent floating-point triangle intersection oracle.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use vtpoly::geometry::{ratio, triangle_intersection_class, Coordinate3, IntersectionClass, Triangle};
use vtpoly::realize::is_axis_point;

pub fn random_rational_point(rng: &mut StdRng, num: i64, den: i64) -> Coordinate3 {
    let mut q = || ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den));
    Coordinate3::new(q(), q(), q())
}

/// Nonzero rational point off every rotation axis.
pub fn random_generic_base(rng: &mut StdRng) -> Coordinate3 {
    loop {
        let p = random_rational_point(rng, 60, 12);
        if !p.is_zero() && !is_axis_point(&p) {
            return p;
        }
    }
}

type V3 = [f64; 3];

fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn mul(a: V3, s: f64) -> V3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: V3, b: V3) -> V3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: V3) -> f64 {
    dot(a, a).sqrt()
}

fn unit(a: V3) -> V3 {
    mul(a, 1.0 / norm(a))
}

/// Relative width of the band in which the float oracle abstains.
pub const MARGIN: f64 = 1e-9;

/// Three-way sign with abstention inside the margin band.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    Pos,
    Neg,
    Band,
}

fn sign(x: f64) -> Sign {
    if x > MARGIN {
        Sign::Pos
    } else if x < -MARGIN {
        Sign::Neg
    } else {
        Sign::Band
    }
}

/// Some(verdict) when the oracle is confident, None inside the band.
pub type OracleVerdict = Option<IntersectionClass>;

/// Does segment pq meet triangle abc? Normalized signed distances throughout.
fn segment_meets_triangle(p: V3, q: V3, t: [V3; 3]) -> Option<bool> {
    let n = unit(cross(sub(t[1], t[0]), sub(t[2], t[0])));
    let scale = [sub(t[1], t[0]), sub(t[2], t[1]), sub(t[0], t[2]), sub(q, p)]
        .iter()
        .map(|e| norm(*e))
        .fold(0.0, f64::max);
    let dp = dot(n, sub(p, t[0])) / scale;
    let dq = dot(n, sub(q, t[0])) / scale;
    match (sign(dp), sign(dq)) {
        (Sign::Pos, Sign::Pos) | (Sign::Neg, Sign::Neg) => return Some(false),
        (Sign::Band, _) | (_, Sign::Band) => return None,
        _ => {}
    }
    let s = dp / (dp - dq);
    let x = add(p, mul(sub(q, p), s));
    let mut inside = true;
    for i in 0..3 {
        let (a, b) = (t[i], t[(i + 1) % 3]);
        let e = sub(b, a);
        let d = dot(n, cross(e, sub(x, a))) / (norm(e) * scale);
        match sign(d) {
            Sign::Neg => return Some(false),
            Sign::Band => inside = false,
            Sign::Pos => {}
        }
    }
    if inside {
        Some(true)
    } else {
        None
    }
}

/// Triangles with no common corner, in general position.
pub fn oracle_disjoint_corners(t1: [V3; 3], t2: [V3; 3]) -> OracleVerdict {
    let mut undecided = false;
    for (a, b) in [(t1, t2), (t2, t1)] {
        for i in 0..3 {
            match segment_meets_triangle(a[i], a[(i + 1) % 3], b) {
                Some(true) => return Some(IntersectionClass::Nontrivial),
                Some(false) => {}
                None => undecided = true,
            }
        }
    }
    (!undecided).then_some(IntersectionClass::Disjoint)
}

/// Is direction r inside the wedge spanned by u and v (normal n = u × v)?
fn in_wedge(r: V3, u: V3, v: V3) -> Option<bool> {
    let n = cross(u, v);
    let s = norm(r) * norm(u) * norm(v) * norm(n);
    match (sign(dot(cross(u, r), n) / s), sign(dot(cross(r, v), n) / s)) {
        (Sign::Pos, Sign::Pos) => Some(true),
        (Sign::Neg, _) | (_, Sign::Neg) => Some(false),
        _ => None,
    }
}

/// Triangles (o,a,b) and (o,c,d) sharing exactly the corner o. The
/// intersection is more than o iff the two wedges at o share a ray.
pub fn oracle_shared_vertex(o: V3, a: V3, b: V3, c: V3, d: V3) -> OracleVerdict {
    let (u1, v1, u2, v2) = (sub(a, o), sub(b, o), sub(c, o), sub(d, o));
    let n1 = unit(cross(u1, v1));
    let n2 = unit(cross(u2, v2));
    let line = cross(n1, n2);
    if sign(norm(line)) == Sign::Band {
        return None;
    }
    let mut undecided = false;
    for r in [line, mul(line, -1.0)] {
        match (in_wedge(r, u1, v1), in_wedge(r, u2, v2)) {
            (Some(true), Some(true)) => return Some(IntersectionClass::Nontrivial),
            (Some(false), _) | (_, Some(false)) => {}
            _ => undecided = true,
        }
    }
    (!undecided).then_some(IntersectionClass::SharedVertexOnly)
}

/// Triangles (p,q,a) and (p,q,b) sharing the edge pq.
pub fn oracle_shared_edge(p: V3, q: V3, a: V3, b: V3) -> OracleVerdict {
    let (e, x, y) = (sub(q, p), sub(a, p), sub(b, p));
    let vol = dot(cross(e, x), y) / (norm(e) * norm(x) * norm(y));
    match sign(vol) {
        Sign::Pos | Sign::Neg => Some(IntersectionClass::SharedEdgeOnly),
        Sign::Band => {
            let side = dot(cross(e, x), cross(e, y)) / (norm(e) * norm(e) * norm(x) * norm(y));
            match sign(side) {
                Sign::Pos => Some(IntersectionClass::Nontrivial),
                Sign::Neg => Some(IntersectionClass::SharedEdgeOnly),
                Sign::Band => None,
            }
        }
    }
}

type P2 = [f64; 2];

fn cross2(a: P2, b: P2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub2(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

fn len2(a: P2) -> f64 {
    (a[0] * a[0] + a[1] * a[1]).sqrt()
}

/// Largest separation of the two triangles along any edge normal (separating
/// axis test); positive means disjoint, negative means overlapping interiors.
fn separation_2d(t1: [P2; 3], t2: [P2; 3]) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for (a, b) in [(t1, t2), (t2, t1)] {
        let orient = cross2(sub2(a[1], a[0]), sub2(a[2], a[0])).signum();
        for i in 0..3 {
            let e = sub2(a[(i + 1) % 3], a[i]);
            let l = len2(e);
            // distance of the other triangle from the outside of this edge
            let gap = b
                .iter()
                .map(|p| -orient * cross2(e, sub2(*p, a[i])) / l)
                .fold(f64::INFINITY, f64::min);
            best = best.max(gap);
        }
    }
    best
}

/// Is 2D direction r inside the closed convex wedge spanned by u and v?
fn in_wedge_2d(r: P2, u: P2, v: P2) -> Option<bool> {
    let o = cross2(u, v).signum();
    let s = len2(r);
    let (x, y) = (o * cross2(u, r) / (s * len2(u)), o * cross2(r, v) / (s * len2(v)));
    match (sign(x), sign(y)) {
        (Sign::Pos, Sign::Pos) => Some(true),
        (Sign::Neg, _) | (_, Sign::Neg) => Some(false),
        _ => None,
    }
}

/// Two triangles in a common plane, given by planar coordinates.
pub fn oracle_planar(t1: [P2; 3], t2: [P2; 3]) -> OracleVerdict {
    let shared: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| t1[i] == t2[j])
        .collect();
    let scale = t1.iter().chain(&t2).map(|p| len2(*p)).fold(1.0, f64::max);
    match shared.len() {
        0 => match sign(separation_2d(t1, t2) / scale) {
            Sign::Pos => Some(IntersectionClass::Disjoint),
            Sign::Neg => Some(IntersectionClass::Nontrivial),
            Sign::Band => None,
        },
        1 => {
            let (i, j) = shared[0];
            let o = t1[i];
            let (u1, v1) = (sub2(t1[(i + 1) % 3], o), sub2(t1[(i + 2) % 3], o));
            let (u2, v2) = (sub2(t2[(j + 1) % 3], o), sub2(t2[(j + 2) % 3], o));
            let mut undecided = false;
            for (r, u, v) in [(u2, u1, v1), (v2, u1, v1), (u1, u2, v2), (v1, u2, v2)] {
                match in_wedge_2d(r, u, v) {
                    Some(true) => return Some(IntersectionClass::Nontrivial),
                    Some(false) => {}
                    None => undecided = true,
                }
            }
            (!undecided).then_some(IntersectionClass::SharedVertexOnly)
        }
        2 => {
            let (i, j) = (shared[0].0, shared[1].0);
            let k1 = 3 - i - j;
            let k2 = 3 - shared[0].1 - shared[1].1;
            let (p, q) = (t1[i], t1[j]);
            let e = sub2(q, p);
            let s1 = cross2(e, sub2(t1[k1], p));
            let s2 = cross2(e, sub2(t2[k2], p));
            match sign(s1 * s2 / (scale * scale * scale * scale)) {
                Sign::Pos => Some(IntersectionClass::Nontrivial),
                Sign::Neg => Some(IntersectionClass::SharedEdgeOnly),
                Sign::Band => None,
            }
        }
        _ => Some(IntersectionClass::Nontrivial),
    }
}

fn to_v3(p: &Coordinate3) -> V3 {
    p.to_f64()
}

fn int_point(rng: &mut StdRng, r: i64) -> [i64; 3] {
    [rng.gen_range(-r..=r), rng.gen_range(-r..=r), rng.gen_range(-r..=r)]
}

fn coord(v: [i64; 3]) -> Coordinate3 {
    Coordinate3::from_ints(v)
}

fn triangle(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> Option<Triangle> {
    Triangle::new(coord(a), coord(b), coord(c)).ok()
}

fn distinct(points: &[[i64; 3]]) -> bool {
    (0..points.len()).all(|i| (i + 1..points.len()).all(|j| points[i] != points[j]))
}

/// One random pair of the given kind, with the oracle's verdict.
pub struct Sample {
    pub t1: Triangle,
    pub t2: Triangle,
    pub oracle: OracleVerdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    Generic,
    SharedVertex,
    SharedEdge,
    Coplanar,
}

impl PairKind {
    pub const ALL: [PairKind; 4] = [Self::Generic, Self::SharedVertex, Self::SharedEdge, Self::Coplanar];
}

pub fn sample(kind: PairKind, rng: &mut StdRng) -> Sample {
    loop {
        if let Some(s) = try_sample(kind, rng) {
            return s;
        }
    }
}

fn try_sample(kind: PairKind, rng: &mut StdRng) -> Option<Sample> {
    match kind {
        PairKind::Generic => {
            let p: Vec<[i64; 3]> = (0..6).map(|_| int_point(rng, 6)).collect();
            if !distinct(&p) {
                return None;
            }
            let t1 = triangle(p[0], p[1], p[2])?;
            let t2 = triangle(p[3], p[4], p[5])?;
            let f = |i: usize| to_v3(&coord(p[i]));
            let oracle = oracle_disjoint_corners([f(0), f(1), f(2)], [f(3), f(4), f(5)]);
            Some(Sample { t1, t2, oracle })
        }
        PairKind::SharedVertex => {
            let p: Vec<[i64; 3]> = (0..5).map(|_| int_point(rng, 6)).collect();
            if !distinct(&p) {
                return None;
            }
            let t1 = triangle(p[0], p[1], p[2])?;
            let t2 = triangle(p[0], p[3], p[4])?;
            let f = |i: usize| to_v3(&coord(p[i]));
            let oracle = oracle_shared_vertex(f(0), f(1), f(2), f(3), f(4));
            Some(Sample { t1, t2, oracle })
        }
        PairKind::SharedEdge => {
            let (p, q, a) = (int_point(rng, 5), int_point(rng, 5), int_point(rng, 5));
            let b = if rng.gen_bool(0.5) {
                int_point(rng, 5)
            } else {
                let (s, t) = (rng.gen_range(-2..=3), *[-2, -1, 1, 2].get(rng.gen_range(0..4))?);
                [0, 1, 2].map(|i| p[i] + s * (q[i] - p[i]) + t * (a[i] - p[i]))
            };
            if !distinct(&[p, q, a, b]) {
                return None;
            }
            let t1 = triangle(p, q, a)?;
            let t2 = triangle(q, p, b)?;
            let f = |v: [i64; 3]| to_v3(&coord(v));
            let oracle = oracle_shared_edge(f(p), f(q), f(a), f(b));
            Some(Sample { t1, t2, oracle })
        }
        PairKind::Coplanar => {
            let mut pts: Vec<[i64; 2]> = (0..6).map(|_| [rng.gen_range(-5..=5), rng.gen_range(-5..=5)]).collect();
            // force a common corner in a third of the samples
            if rng.gen_bool(1.0 / 3.0) {
                pts[3] = pts[rng.gen_range(0..3)];
            }
            let origin = int_point(rng, 4);
            let (u, w) = (int_point(rng, 3), int_point(rng, 3));
            let lift = |q: [i64; 2]| [0, 1, 2].map(|i| origin[i] + q[0] * u[i] + q[1] * w[i]);
            let l: Vec<[i64; 3]> = pts.iter().map(|q| lift(*q)).collect();
            let t1 = triangle(l[0], l[1], l[2])?;
            let t2 = triangle(l[3], l[4], l[5])?;
            if cross(to_v3(&coord(u)), to_v3(&coord(w))) == [0.0; 3] {
                return None;
            }
            let f = |i: usize| [pts[i][0] as f64, pts[i][1] as f64];
            let oracle = oracle_planar([f(0), f(1), f(2)], [f(3), f(4), f(5)]);
            Some(Sample { t1, t2, oracle })
        }
    }
}

/// Exact-side consistency: argument symmetry, corner relabeling and positive
/// rational scaling all keep the class.
pub fn exact_consistent(t1: &Triangle, t2: &Triangle, lambda: &vtpoly::geometry::Rational) -> bool {
    let class = triangle_intersection_class(t1, t2);
    let scale = |t: &Triangle| {
        let [a, b, c] = t.corners().clone();
        Triangle::new(a.scale(lambda), b.scale(lambda), c.scale(lambda)).expect("scaling keeps triangles")
    };
    let rotate = |t: &Triangle| {
        let [a, b, c] = t.corners().clone();
        Triangle::new(b, c, a).expect("relabeling keeps triangles")
    };
    triangle_intersection_class(t2, t1) == class
        && triangle_intersection_class(&scale(t1), &scale(t2)) == class
        && triangle_intersection_class(&rotate(t1), &t2.reversed()) == class
}

#[derive(Clone, Debug, Default)]
pub struct CampaignStats {
    pub total: usize,
    pub decided: usize,
    pub band: usize,
    pub disagreements: Vec<String>,
    pub exact_inconsistencies: usize,
}

/// Runs `n` pairs spread evenly over the four kinds.
pub fn run_campaign(n: usize, rng: &mut StdRng) -> CampaignStats {
    let mut stats = CampaignStats::default();
    for i in 0..n {
        let kind = PairKind::ALL[i % 4];
        let s = sample(kind, rng);
        let exact = triangle_intersection_class(&s.t1, &s.t2);
        stats.total += 1;
        match s.oracle {
            Some(o) => {
                stats.decided += 1;
                if o != exact {
                    stats.disagreements.push(format!("{kind:?}: exact {exact}, oracle {o}"));
                }
            }
            None => stats.band += 1,
        }
        let lambda = ratio(rng.gen_range(1..=50), rng.gen_range(1..=50));
        if !exact_consistent(&s.t1, &s.t2, &lambda) {
            stats.exact_inconsistencies += 1;
        }
    }
    stats
}
