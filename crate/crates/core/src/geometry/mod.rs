//! Exact plane geometry over [`Rational`]: lines through two points in
//! slope-intercept and general form, the cubic locus `y^2 = x^3 + ax + b`,
//! their pairwise intersections, and Lagrange interpolation.

mod rational;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub use rational::Rational;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }
}

/// Twice the signed area of the triangle `p q r`; zero iff collinear.
pub fn cross(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// `y = a·x + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineSI {
    pub a: Rational,
    pub b: Rational,
}

impl LineSI {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>) -> Self {
        LineSI {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.a * x + &self.b
    }
}

pub fn line_si_through(p1: &Point, p2: &Point) -> Result<LineSI> {
    if p1 == p2 {
        return Err(Error::DuplicatePoint(1));
    }
    if p1.x == p2.x {
        return Err(Error::VerticalLine);
    }
    let a = (&p2.y - &p1.y) / (&p2.x - &p1.x);
    let b = &p1.y - &a * &p1.x;
    Ok(LineSI { a, b })
}

pub fn line_si_eval(line: &LineSI, x: &Rational) -> Rational {
    line.eval(x)
}

pub fn intersect_si(l1: &LineSI, l2: &LineSI) -> Result<Point> {
    if l1.a == l2.a {
        return Err(if l1.b == l2.b {
            Error::CoincidentLines
        } else {
            Error::ParallelLines
        });
    }
    let x = (&l2.b - &l1.b) / (&l1.a - &l2.a);
    let y = l1.eval(&x);
    Ok(Point { x, y })
}

/// `A·x + B·y + C = 0`, with `(A, B) != (0, 0)`.
///
/// Coefficients are kept exactly as produced by [`line_gf_through`]; no
/// scaling to a canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineGF {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl LineGF {
    pub fn new(
        a: impl Into<Rational>,
        b: impl Into<Rational>,
        c: impl Into<Rational>,
    ) -> Result<Self> {
        let line = LineGF {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        };
        if line.a.is_zero() && line.b.is_zero() {
            return Err(Error::format("general-form line with A = B = 0"));
        }
        Ok(line)
    }

    pub fn contains(&self, p: &Point) -> bool {
        (&self.a * &p.x + &self.b * &p.y + &self.c).is_zero()
    }

    /// Same line up to a nonzero scale factor.
    pub fn proportional(&self, other: &LineGF) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
            && (&self.a * &other.c - &other.a * &self.c).is_zero()
            && (&self.b * &other.c - &other.b * &self.c).is_zero()
    }
}

pub fn line_gf_through(p1: &Point, p2: &Point) -> Result<LineGF> {
    if p1 == p2 {
        return Err(Error::DuplicatePoint(1));
    }
    let a = &p2.y - &p1.y;
    let b = &p1.x - &p2.x;
    let c = &p1.y * (&p2.x - &p1.x) - &p1.x * (&p2.y - &p1.y);
    Ok(LineGF { a, b, c })
}

pub fn intersect_gf(l1: &LineGF, l2: &LineGF) -> Result<Point> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Err(if l1.proportional(l2) {
            Error::CoincidentLines
        } else {
            Error::ParallelLines
        });
    }
    let x = (&l1.b * &l2.c - &l2.b * &l1.c) / &det;
    let y = (&l1.c * &l2.a - &l2.c * &l1.a) / &det;
    Ok(Point { x, y })
}

/// `y^2 = x^3 + a·x + b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicCurve {
    pub a: Rational,
    pub b: Rational,
}

impl CubicCurve {
    pub fn new(a: impl Into<Rational>, b: impl Into<Rational>) -> Self {
        CubicCurve {
            a: a.into(),
            b: b.into(),
        }
    }

    /// Right-hand side `x^3 + a·x + b`, i.e. the value of `y^2` at `x`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        x.pow(3) + &self.a * x + &self.b
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.y.pow(2) == self.rhs(&p.x)
    }

    /// Positive ordinate at `x`, when it is a positive integer.
    pub fn positive_integer_ordinate(&self, x: &Rational) -> Option<Rational> {
        self.rhs(x).positive_integer_sqrt().map(Rational::from)
    }
}

pub fn cubic_through(p1: &Point, p2: &Point) -> Result<CubicCurve> {
    if p1.x == p2.x {
        return Err(Error::VerticalPair);
    }
    let a = ((p1.y.pow(2) - p2.y.pow(2)) - (p1.x.pow(3) - p2.x.pow(3))) / (&p1.x - &p2.x);
    let b = p1.y.pow(2) - p1.x.pow(3) - &a * &p1.x;
    Ok(CubicCurve { a, b })
}

/// Meeting point of two cubics, taking the positive root for `y`.
pub fn intersect_cubic(c1: &CubicCurve, c2: &CubicCurve) -> Result<Point> {
    if c1.a == c2.a {
        return Err(if c1.b == c2.b {
            Error::CoincidentCurves
        } else {
            Error::ParallelCurves
        });
    }
    let x = (&c2.b - &c1.b) / (&c1.a - &c2.a);
    let y = c1
        .positive_integer_ordinate(&x)
        .ok_or_else(|| Error::recovery(0, format!("y^2 = {} is not a positive square", c1.rhs(&x))))?;
    Ok(Point { x, y })
}

/// Dense polynomial, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    pub coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Poly { coeffs }
    }

    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

pub fn poly_eval(p: &Poly, x: &Rational) -> Rational {
    p.eval(x)
}

/// Interpolating polynomial of degree at most `n - 1` through `n` points,
/// via Newton divided differences expanded to the monomial basis.
///
/// The result always has exactly `n` coefficients (trailing zeros kept).
pub fn lagrange_fit(points: &[Point]) -> Result<Poly> {
    if points.len() < 2 {
        return Err(Error::format("interpolation needs at least two points"));
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.x == p.x) {
            return Err(Error::DuplicateAbscissa);
        }
    }

    let n = points.len();
    // In-place divided-difference table; diffs[k] ends as f[x_0..x_k].
    let mut diffs: Vec<Rational> = points.iter().map(|p| p.y.clone()).collect();
    for order in 1..n {
        for k in (order..n).rev() {
            let num = &diffs[k] - &diffs[k - 1];
            let den = &points[k].x - &points[k - order].x;
            diffs[k] = num / den;
        }
    }

    // Horner-style expansion of the Newton form, innermost term first.
    let mut coeffs = vec![Rational::zero(); n];
    coeffs[0] = diffs[n - 1].clone();
    for (degree, k) in (0..n - 1).rev().enumerate() {
        // coeffs <- coeffs * (x - x_k) + diffs[k]
        let xk = &points[k].x;
        for d in (0..=degree + 1).rev() {
            let shifted = if d > 0 { coeffs[d - 1].clone() } else { Rational::zero() };
            coeffs[d] = shifted - xk * &coeffs[d];
        }
        coeffs[0] = &coeffs[0] + &diffs[k];
    }
    Ok(Poly { coeffs })
}

/// Nearest positive integer code; halves round away from zero.
pub fn round_to_code(v: &Rational) -> Result<u32> {
    let rounded: BigInt = v.round_half_away();
    match rounded.to_u32() {
        Some(code) if code >= 1 => Ok(code),
        _ => Err(Error::recovery(0, format!("{v} does not round to a positive code"))),
    }
}
