use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::{sign, Coordinate3, GeometryError, Rational};

/// A non-degenerate oriented triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    corners: [Coordinate3; 3],
    normal: Coordinate3,
}

impl Triangle {
    pub fn new(a: Coordinate3, b: Coordinate3, c: Coordinate3) -> Result<Self, GeometryError> {
        let normal = (&b - &a).cross(&(&c - &a));
        if normal.is_zero() {
            return Err(GeometryError::DegenerateTriangle);
        }
        Ok(Triangle {
            corners: [a, b, c],
            normal,
        })
    }

    pub fn corners(&self) -> &[Coordinate3; 3] {
        &self.corners
    }

    /// `(b - a) × (c - a)`, following the corner order.
    pub fn normal(&self) -> &Coordinate3 {
        &self.normal
    }

    /// Signed offsets of `p` from the supporting plane, scaled by |normal|.
    fn side(&self, p: &Coordinate3) -> Rational {
        self.normal.dot(&(p - &self.corners[0]))
    }

    pub fn reversed(&self) -> Triangle {
        let [a, b, c] = self.corners.clone();
        Triangle::new(a, c, b).expect("reversal keeps the triangle non-degenerate")
    }
}

/// Point set of the intersection of two closed triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    Point(Coordinate3),
    Segment(Coordinate3, Coordinate3),
    /// Coplanar overlap with positive area, given by its polygon vertices.
    Area(Vec<Coordinate3>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntersectionClass {
    Disjoint,
    SharedVertexOnly,
    SharedEdgeOnly,
    Nontrivial,
}

impl fmt::Display for IntersectionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Disjoint => "disjoint",
            Self::SharedVertexOnly => "shared-vertex",
            Self::SharedEdgeOnly => "shared-edge",
            Self::Nontrivial => "nontrivial",
        };
        f.write_str(s)
    }
}

fn push_unique(points: &mut Vec<Coordinate3>, p: Coordinate3) {
    if !points.contains(&p) {
        points.push(p);
    }
}

/// `p + (q - p) · t`
fn lerp(p: &Coordinate3, q: &Coordinate3, t: &Rational) -> Coordinate3 {
    p + &(&(q - p) * t)
}

/// Intersection of a triangle with another triangle's plane, as points on it.
fn plane_section(t: &Triangle, sides: &[Rational; 3]) -> Vec<Coordinate3> {
    let mut out = Vec::new();
    for i in 0..3 {
        let j = (i + 1) % 3;
        let (si, sj) = (&sides[i], &sides[j]);
        if si.is_zero() {
            push_unique(&mut out, t.corners[i].clone());
        }
        if (si.is_positive() && sj.is_negative()) || (si.is_negative() && sj.is_positive()) {
            let s = si / (si - sj);
            push_unique(&mut out, lerp(&t.corners[i], &t.corners[j], &s));
        }
    }
    out
}

fn extremes_along(points: &[Coordinate3], d: &Coordinate3) -> (Rational, Coordinate3, Rational, Coordinate3) {
    let mut it = points.iter().map(|p| (d.dot(p), p));
    let (k0, p0) = it.next().expect("non-empty section");
    let (mut lo, mut lo_p, mut hi, mut hi_p) = (k0.clone(), p0, k0, p0);
    for (k, p) in it {
        if k < lo {
            lo = k;
            lo_p = p;
        } else if k > hi {
            hi = k;
            hi_p = p;
        }
    }
    (lo, lo_p.clone(), hi, hi_p.clone())
}

fn collapse(points: Vec<Coordinate3>) -> Intersection {
    match points.len() {
        0 => Intersection::Empty,
        1 => Intersection::Point(points.into_iter().next().expect("one point")),
        _ => {
            let u = &points[1] - &points[0];
            let collinear = points.iter().all(|p| (p - &points[0]).cross(&u).is_zero());
            if collinear {
                let (_, a, _, b) = extremes_along(&points, &u);
                Intersection::Segment(a, b)
            } else {
                Intersection::Area(points)
            }
        }
    }
}

fn project(p: &Coordinate3, drop: usize) -> [&Rational; 2] {
    match drop {
        0 => [&p.0[1], &p.0[2]],
        1 => [&p.0[2], &p.0[0]],
        _ => [&p.0[0], &p.0[1]],
    }
}

fn orient2(a: &Coordinate3, b: &Coordinate3, c: &Coordinate3, drop: usize) -> Rational {
    let [ax, ay] = project(a, drop);
    let [bx, by] = project(b, drop);
    let [cx, cy] = project(c, drop);
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

/// Clips `subject` by the closed triangle `clip` in their common plane.
fn coplanar_intersection(subject: &Triangle, clip: &Triangle) -> Intersection {
    let n = &clip.normal.0;
    let drop = (0..3)
        .max_by(|&i, &j| n[i].abs().cmp(&n[j].abs()).then(j.cmp(&i)))
        .expect("three axes");
    let mut c = clip.corners.clone();
    if orient2(&c[0], &c[1], &c[2], drop).is_negative() {
        c.swap(1, 2);
    }
    let mut poly: Vec<Coordinate3> = subject.corners.to_vec();
    for i in 0..3 {
        let (e0, e1) = (&c[i], &c[(i + 1) % 3]);
        if poly.is_empty() {
            break;
        }
        let d: Vec<Rational> = poly.iter().map(|p| orient2(e0, e1, p, drop)).collect();
        let mut next = Vec::new();
        for k in 0..poly.len() {
            let prev = (k + poly.len() - 1) % poly.len();
            let (s, e) = (&poly[prev], &poly[k]);
            let (ds, de) = (&d[prev], &d[k]);
            if !de.is_negative() {
                if ds.is_negative() {
                    next.push(lerp(s, e, &(ds / (ds - de))));
                }
                next.push(e.clone());
            } else if ds.is_positive() {
                next.push(lerp(s, e, &(ds / (ds - de))));
            }
        }
        poly = next;
    }
    let mut unique = Vec::new();
    for p in poly {
        push_unique(&mut unique, p);
    }
    collapse(unique)
}

/// Exact point set `t1 ∩ t2`.
pub fn triangle_intersection(t1: &Triangle, t2: &Triangle) -> Intersection {
    let s1: [Rational; 3] = t1.corners.clone().map(|p| t2.side(&p));
    let one_side = |s: &[Rational; 3]| s.iter().all(Signed::is_positive) || s.iter().all(Signed::is_negative);
    if one_side(&s1) {
        return Intersection::Empty;
    }
    if s1.iter().all(Zero::is_zero) {
        return coplanar_intersection(t1, t2);
    }
    let s2: [Rational; 3] = t2.corners.clone().map(|p| t1.side(&p));
    if one_side(&s2) {
        return Intersection::Empty;
    }
    let a = plane_section(t1, &s1);
    let b = plane_section(t2, &s2);
    let d = t1.normal.cross(&t2.normal);
    let (alo, alo_p, ahi, ahi_p) = extremes_along(&a, &d);
    let (blo, blo_p, bhi, bhi_p) = extremes_along(&b, &d);
    let (lo, lo_p) = if alo >= blo { (alo, alo_p) } else { (blo, blo_p) };
    let (hi, hi_p) = if ahi <= bhi { (ahi, ahi_p) } else { (bhi, bhi_p) };
    match lo.cmp(&hi) {
        Ordering::Greater => Intersection::Empty,
        Ordering::Equal => Intersection::Point(lo_p),
        Ordering::Less => Intersection::Segment(lo_p, hi_p),
    }
}

/// Whether the intersection is empty, exactly one common corner, exactly one
/// common edge, or anything else.
pub fn triangle_intersection_class(t1: &Triangle, t2: &Triangle) -> IntersectionClass {
    let shared = |p: &Coordinate3| t1.corners.contains(p) && t2.corners.contains(p);
    match triangle_intersection(t1, t2) {
        Intersection::Empty => IntersectionClass::Disjoint,
        Intersection::Point(p) if shared(&p) => IntersectionClass::SharedVertexOnly,
        Intersection::Segment(p, q) if shared(&p) && shared(&q) => IntersectionClass::SharedEdgeOnly,
        _ => IntersectionClass::Nontrivial,
    }
}

/// Sign of `t`'s plane evaluated at `p`, exposed for oracles and audits.
pub fn plane_side(t: &Triangle, p: &Coordinate3) -> Ordering {
    sign(&t.side(p))
}
