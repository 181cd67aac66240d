//! Exact rational predicates in three dimensions.

mod triangle;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rotgroup::GroupElement;

pub use triangle::{
    plane_side, triangle_intersection, triangle_intersection_class, Intersection, IntersectionClass, Triangle,
};

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("triangle corners are collinear or coincide")]
    DegenerateTriangle,
    #[error("zero direction vector")]
    ZeroVector,
    #[error("cannot parse coordinate `{0}`")]
    Parse(String),
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinate3(pub [Rational; 3]);

impl Coordinate3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Coordinate3([x, y, z])
    }

    pub fn from_ints(v: [i64; 3]) -> Self {
        Coordinate3(v.map(rational))
    }

    pub fn zero() -> Self {
        Coordinate3::from_ints([0, 0, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, o: &Coordinate3) -> Rational {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn cross(&self, o: &Coordinate3) -> Coordinate3 {
        let [a, b, c] = &self.0;
        let [x, y, z] = &o.0;
        Coordinate3([b * z - c * y, c * x - a * z, a * y - b * x])
    }

    pub fn scale(&self, k: &Rational) -> Coordinate3 {
        Coordinate3(self.0.clone().map(|c| c * k))
    }

    /// Row vector times the matrix of `g`.
    pub fn act(&self, g: &GroupElement) -> Coordinate3 {
        let m = g.rows();
        let mut out: [Rational; 3] = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (j, o) in out.iter_mut().enumerate() {
            for (x, row) in self.0.iter().zip(m) {
                match row[j] {
                    0 => {}
                    1 => *o += x,
                    -1 => *o -= x,
                    k => *o += x * rational(k as i64),
                }
            }
        }
        Coordinate3(out)
    }

    pub fn to_f64(&self) -> [f64; 3] {
        self.0.clone().map(|c| c.to_f64().unwrap_or(f64::NAN))
    }

    /// Least common multiple of the coordinate denominators.
    pub fn common_denominator(&self) -> Rational {
        use num_integer::Integer;
        let l = self.0.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        Rational::from_integer(l)
    }

    /// The same point with integer coordinates after multiplying by the common
    /// denominator; a positive multiple, so homogeneous predicates agree.
    pub fn clear_denominators(&self) -> Coordinate3 {
        self.scale(&self.common_denominator())
    }
}

impl Add for &Coordinate3 {
    type Output = Coordinate3;
    fn add(self, o: &Coordinate3) -> Coordinate3 {
        Coordinate3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Sub for &Coordinate3 {
    type Output = Coordinate3;
    fn sub(self, o: &Coordinate3) -> Coordinate3 {
        Coordinate3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Neg for &Coordinate3 {
    type Output = Coordinate3;
    fn neg(self) -> Coordinate3 {
        Coordinate3(self.0.clone().map(|c| -c))
    }
}

impl Mul<&Rational> for &Coordinate3 {
    type Output = Coordinate3;
    fn mul(self, k: &Rational) -> Coordinate3 {
        self.scale(k)
    }
}

impl fmt::Display for Coordinate3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Parses `"a,b,c"` where each entry is an integer or `p/q`.
impl FromStr for Coordinate3 {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(GeometryError::Parse(s.to_string()));
        }
        let mut out = Vec::with_capacity(3);
        for p in parts {
            out.push(parse_rational(p).ok_or_else(|| GeometryError::Parse(s.to_string()))?);
        }
        let [x, y, z]: [Rational; 3] = out.try_into().expect("three entries");
        Ok(Coordinate3([x, y, z]))
    }
}

pub fn sign(r: &Rational) -> Ordering {
    if r.is_positive() {
        Ordering::Greater
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Determinant of the 3×3 matrix with the given rows.
pub fn det3(r1: &Coordinate3, r2: &Coordinate3, r3: &Coordinate3) -> Rational {
    r1.dot(&r2.cross(r3))
}

/// Determinant of a 4×4 matrix given by rows, by cofactor expansion along the
/// first row.
pub fn det4(m: &[[Rational; 4]; 4]) -> Rational {
    let mut total = Rational::zero();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Coordinate3> = (1..4)
            .map(|r| {
                let v: Vec<Rational> = (0..4).filter(|&c| c != col).map(|c| m[r][c].clone()).collect();
                Coordinate3([v[0].clone(), v[1].clone(), v[2].clone()])
            })
            .collect();
        let term = &m[0][col] * det3(&minor[0], &minor[1], &minor[2]);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Sign of the volume of the tetrahedron `abcd`.
pub fn orient3d(a: &Coordinate3, b: &Coordinate3, c: &Coordinate3, d: &Coordinate3) -> Ordering {
    sign(&det3(&(b - a), &(c - a), &(d - a)))
}

/// Whether the line through the origin along `p` meets the closed triangle.
/// Zero determinants count as touching the boundary.
pub fn axis_pierces_triangle(p: &Coordinate3, t: &Triangle) -> Result<bool, GeometryError> {
    if p.is_zero() {
        return Err(GeometryError::ZeroVector);
    }
    let [v0, v1, v2] = t.corners();
    let signs = [sign(&det3(p, v0, v1)), sign(&det3(p, v1, v2)), sign(&det3(p, v2, v0))];
    let pos = signs.contains(&Ordering::Greater);
    let neg = signs.contains(&Ordering::Less);
    Ok(!(pos && neg))
}

/// Whether all points lie in one plane.
pub fn coplanar(points: &[Coordinate3]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let Some(second) = points.iter().find(|p| *p != first) else {
        return true;
    };
    let u = second - first;
    let Some(third) = points.iter().find(|p| !(*p - first).cross(&u).is_zero()) else {
        return true;
    };
    points
        .iter()
        .all(|p| orient3d(first, second, third, p) == Ordering::Equal)
}
