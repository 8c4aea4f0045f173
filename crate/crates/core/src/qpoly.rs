//! Exact rational plane geometry: points, convex polygons, halfplane
//! clipping, convex hulls, lattice lengths.
//!
//! All predicates are decided in exact arithmetic; nothing here touches
//! floating point except the explicit `to_f64` conversions used by
//! rendering and float-mode evaluation.

use crate::error::PolygonError;
use crate::lattice::LatticeVector;
use rug::{Integer, Rational};
use std::cmp::Ordering;
use std::fmt;

/// A point of Q^2, also used as a vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoint {
    pub x: Rational,
    pub y: Rational,
}

impl QPoint {
    pub fn new<T: Into<Rational>, U: Into<Rational>>(x: T, y: U) -> Self {
        QPoint {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn from_lattice(v: &LatticeVector) -> Self {
        QPoint {
            x: Rational::from(&v.x),
            y: Rational::from(&v.y),
        }
    }

    pub fn zero() -> Self {
        QPoint::new(0, 0)
    }

    pub fn add(&self, o: &QPoint) -> QPoint {
        QPoint {
            x: Rational::from(&self.x + &o.x),
            y: Rational::from(&self.y + &o.y),
        }
    }

    pub fn sub(&self, o: &QPoint) -> QPoint {
        QPoint {
            x: Rational::from(&self.x - &o.x),
            y: Rational::from(&self.y - &o.y),
        }
    }

    pub fn scale(&self, r: &Rational) -> QPoint {
        QPoint {
            x: Rational::from(&self.x * r),
            y: Rational::from(&self.y * r),
        }
    }

    pub fn dot(&self, o: &QPoint) -> Rational {
        Rational::from(&self.x * &o.x) + Rational::from(&self.y * &o.y)
    }

    pub fn cross(&self, o: &QPoint) -> Rational {
        Rational::from(&self.x * &o.y) - Rational::from(&self.y * &o.x)
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    /// Lexicographic comparison, x before y.
    pub fn lex_cmp(&self, o: &QPoint) -> Ordering {
        self.x.cmp(&o.x).then_with(|| self.y.cmp(&o.y))
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Total angular order on nonzero vectors, angles taken in [0, 2*pi)
/// measured from the positive x-axis. Exact: decides by halfplane, then by
/// cross product. Equal means same direction (not same vector).
pub fn angle_cmp(a: &QPoint, b: &QPoint) -> Ordering {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let half = |v: &QPoint| -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2*pi).
        if v.y > 0 || (v.y == 0 && v.x > 0) {
            0
        } else {
            1
        }
    };
    match half(a).cmp(&half(b)) {
        Ordering::Equal => {
            let c = a.cross(b);
            if c > 0 {
                Ordering::Less
            } else if c < 0 {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
        other => other,
    }
}

/// Smallest integer vector with the same direction as the rational vector
/// `delta` (which must be nonzero).
pub fn primitive_direction(delta: &QPoint) -> LatticeVector {
    assert!(!delta.is_zero(), "zero vector has no direction");
    let (nx, dx) = (delta.x.numer(), delta.x.denom());
    let (ny, dy) = (delta.y.numer(), delta.y.denom());
    // Clear denominators: multiply by lcm(dx, dy).
    let l = Integer::from(dx.lcm_ref(dy));
    let ax = Integer::from(nx * &l) / dx;
    let ay = Integer::from(ny * &l) / dy;
    let g = Integer::from(ax.gcd_ref(&ay));
    LatticeVector::new(ax / &g, ay / &g)
}

/// Lattice length of the segment [p, q]: the factor by which q - p is an
/// integer multiple of a primitive integer vector, extended to rational
/// endpoints (length g/m where m clears denominators). Zero for p = q.
pub fn lattice_length(p: &QPoint, q: &QPoint) -> Rational {
    let d = q.sub(p);
    if d.is_zero() {
        return Rational::new();
    }
    let (nx, dx) = (d.x.numer(), d.x.denom());
    let (ny, dy) = (d.y.numer(), d.y.denom());
    let m = Integer::from(dx.lcm_ref(dy));
    let ax = Integer::from(nx * &m) / dx;
    let ay = Integer::from(ny * &m) / dy;
    let g = ax.abs().gcd(&ay.abs());
    Rational::from((g, m))
}

/// Euclidean length of [p, q] via f64 (rendering and diagnostics only).
pub fn euclid_length_f64(p: &QPoint, q: &QPoint) -> f64 {
    let d = q.sub(p);
    let (x, y) = d.to_f64();
    x.hypot(y)
}

/// A convex polygon with vertices in counterclockwise order, strictly
/// convex at every vertex (no repeated or collinear vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPolygon {
    verts: Vec<QPoint>,
}

impl QPolygon {
    /// Validate and normalize a vertex cycle. Accepts either orientation
    /// and stores counterclockwise order. Rejects repeated vertices,
    /// collinear triples, non-convex corners, and self-wrapping cycles.
    pub fn new(mut verts: Vec<QPoint>) -> Result<Self, PolygonError> {
        let n = verts.len();
        if n < 3 {
            return Err(PolygonError::TooFewVertices);
        }
        for i in 0..n {
            if verts[i] == verts[(i + 1) % n] {
                return Err(PolygonError::DegenerateVertex);
            }
        }
        // Turn signs at every vertex must agree strictly.
        let turn = |vs: &[QPoint], i: usize| -> Ordering {
            let a = &vs[i];
            let b = &vs[(i + 1) % n];
            let c = &vs[(i + 2) % n];
            b.sub(a).cross(&c.sub(b)).cmp(&Rational::new())
        };
        let first = turn(&verts, 0);
        if first == Ordering::Equal {
            return Err(PolygonError::NotConvex);
        }
        for i in 1..n {
            if turn(&verts, i) != first {
                return Err(PolygonError::NotConvex);
            }
        }
        if first == Ordering::Less {
            verts.reverse();
        }
        // All turns now counterclockwise. Exclude multiply-wrapped cycles
        // (star polygons): edge directions must complete exactly one
        // revolution, i.e. the cyclic angular sequence has one descent.
        let dirs: Vec<QPoint> = (0..n)
            .map(|i| verts[(i + 1) % n].sub(&verts[i]))
            .collect();
        let descents = (0..n)
            .filter(|&i| angle_cmp(&dirs[(i + 1) % n], &dirs[i]) == Ordering::Less)
            .count();
        if descents != 1 {
            return Err(PolygonError::NotConvex);
        }
        Ok(QPolygon { verts })
    }

    pub fn vertices(&self) -> &[QPoint] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Edges as (start, end) pairs in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&QPoint, &QPoint)> {
        let n = self.verts.len();
        (0..n).map(move |i| (&self.verts[i], &self.verts[(i + 1) % n]))
    }

    /// Exact area (positive).
    pub fn area(&self) -> Rational {
        let mut twice = Rational::new();
        for (p, q) in self.edges() {
            twice += p.cross(q);
        }
        twice / Rational::from(2)
    }

    /// Exact perimeter in lattice length.
    pub fn lattice_perimeter(&self) -> Rational {
        let mut total = Rational::new();
        for (p, q) in self.edges() {
            total += lattice_length(p, q);
        }
        total
    }

    /// Point-in-polygon test, boundary inclusive.
    pub fn contains(&self, p: &QPoint) -> bool {
        self.edges().all(|(a, b)| b.sub(a).cross(&p.sub(a)) >= 0)
    }

    /// Strict interior test.
    pub fn contains_interior(&self, p: &QPoint) -> bool {
        self.edges().all(|(a, b)| b.sub(a).cross(&p.sub(a)) > 0)
    }

    /// Primitive integer inward normal of each edge, in edge order.
    pub fn inward_normals(&self) -> Vec<LatticeVector> {
        self.edges()
            .map(|(p, q)| {
                let d = q.sub(p);
                primitive_direction(&QPoint {
                    x: -d.y.clone(),
                    y: d.x,
                })
            })
            .collect()
    }

    /// Image under x -> M x + t with M = [[a, b], [c, d]] integer and
    /// invertible; returns an error if the image is degenerate (it cannot
    /// be, for det != 0, but validation is rerun anyway).
    pub fn map_affine(
        &self,
        a: &Integer,
        b: &Integer,
        c: &Integer,
        d: &Integer,
        t: &QPoint,
    ) -> Result<QPolygon, PolygonError> {
        let verts = self
            .verts
            .iter()
            .map(|p| QPoint {
                x: Rational::from(&p.x * a) + Rational::from(&p.y * b) + t.x.clone(),
                y: Rational::from(&p.x * c) + Rational::from(&p.y * d) + t.y.clone(),
            })
            .collect();
        QPolygon::new(verts)
    }

    pub fn bounding_box(&self) -> (QPoint, QPoint) {
        let mut lo = self.verts[0].clone();
        let mut hi = self.verts[0].clone();
        for v in &self.verts {
            if v.x < lo.x {
                lo.x = v.x.clone();
            }
            if v.y < lo.y {
                lo.y = v.y.clone();
            }
            if v.x > hi.x {
                hi.x = v.x.clone();
            }
            if v.y > hi.y {
                hi.y = v.y.clone();
            }
        }
        (lo, hi)
    }
}

impl fmt::Display for QPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, "]")
    }
}

/// Result of intersecting a convex region with halfplanes: the region can
/// collapse to a segment or a point before becoming empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clipped {
    Empty,
    Point(QPoint),
    Segment(QPoint, QPoint),
    Polygon(QPolygon),
}

impl Clipped {
    pub fn clip_ge(&self, normal: &QPoint, offset: &Rational) -> Clipped {
        match self {
            Clipped::Empty => Clipped::Empty,
            Clipped::Point(p) => {
                if normal.dot(p) >= *offset {
                    self.clone()
                } else {
                    Clipped::Empty
                }
            }
            Clipped::Segment(p, q) => clip_segment_ge(p, q, normal, offset),
            Clipped::Polygon(poly) => clip_polygon_ge(poly, normal, offset),
        }
    }
}

fn clip_segment_ge(p: &QPoint, q: &QPoint, n: &QPoint, c: &Rational) -> Clipped {
    let sp = n.dot(p) - c.clone();
    let sq = n.dot(q) - c.clone();
    let pin = sp >= 0;
    let qin = sq >= 0;
    match (pin, qin) {
        (true, true) => Clipped::Segment(p.clone(), q.clone()),
        (false, false) => Clipped::Empty,
        _ => {
            // One endpoint strictly out: sp != sq, intersection is proper.
            let t = Rational::from(-&sp) / Rational::from(&sq - &sp);
            let m = p.add(&q.sub(p).scale(&t));
            let kept = if pin { p.clone() } else { q.clone() };
            if kept == m {
                Clipped::Point(m)
            } else if pin {
                Clipped::Segment(kept, m)
            } else {
                Clipped::Segment(m, kept)
            }
        }
    }
}

/// Sutherland-Hodgman step for the halfplane {x : n.x >= c}.
pub fn clip_polygon_ge(poly: &QPolygon, n: &QPoint, c: &Rational) -> Clipped {
    let verts = poly.vertices();
    let sides: Vec<Rational> = verts.iter().map(|v| n.dot(v) - c.clone()).collect();
    let m = verts.len();
    let mut out: Vec<QPoint> = Vec::with_capacity(m + 2);
    for i in 0..m {
        let j = (i + 1) % m;
        let (sp, sq) = (&sides[i], &sides[j]);
        if *sp >= 0 {
            out.push(verts[i].clone());
        }
        if (*sp > 0 && *sq < 0) || (*sp < 0 && *sq > 0) {
            let t = Rational::from(-sp) / Rational::from(sq - sp);
            out.push(verts[i].add(&verts[j].sub(&verts[i]).scale(&t)));
        }
    }
    classify_cycle(out)
}

/// Classify a vertex cycle that is convex by construction but may be
/// degenerate: drop duplicates and collinear middle points, then decide
/// polygon / segment / point / empty.
fn classify_cycle(mut pts: Vec<QPoint>) -> Clipped {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    if pts.is_empty() {
        return Clipped::Empty;
    }
    // Remove collinear or reflex middles until stable.
    loop {
        let n = pts.len();
        if n < 3 {
            break;
        }
        let mut removed = false;
        let mut keep: Vec<QPoint> = Vec::with_capacity(n);
        for i in 0..n {
            let a = &pts[(i + n - 1) % n];
            let b = &pts[i];
            let c = &pts[(i + 1) % n];
            if b.sub(a).cross(&c.sub(b)) == 0 {
                removed = true;
            } else {
                keep.push(b.clone());
            }
        }
        pts = keep;
        if !removed {
            break;
        }
        pts.dedup();
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
    }
    match pts.len() {
        0 => Clipped::Empty,
        1 => Clipped::Point(pts.pop().unwrap()),
        2 => {
            let q = pts.pop().unwrap();
            let p = pts.pop().unwrap();
            Clipped::Segment(p, q)
        }
        _ => match QPolygon::new(pts) {
            Ok(poly) => Clipped::Polygon(poly),
            // A convex cycle that failed validation must be a collinear
            // chain that collapsed; fall back to its extremes.
            Err(_) => Clipped::Empty,
        },
    }
}

/// Strict convex hull (vertices only, counterclockwise, starting from the
/// lexicographic minimum). Duplicates in the input are fine.
pub fn convex_hull(points: &[QPoint]) -> Vec<QPoint> {
    let mut pts: Vec<QPoint> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let mut lower: Vec<QPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 {
            let a = &lower[lower.len() - 2];
            let b = &lower[lower.len() - 1];
            if b.sub(a).cross(&p.sub(b)) <= 0 {
                lower.pop();
            } else {
                break;
            }
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<QPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 {
            let a = &upper[upper.len() - 2];
            let b = &upper[upper.len() - 1];
            if b.sub(a).cross(&p.sub(b)) <= 0 {
                upper.pop();
            } else {
                break;
            }
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Area of the convex hull of a point set (zero for collinear sets).
pub fn hull_area(points: &[QPoint]) -> Rational {
    let hull = convex_hull(points);
    if hull.len() < 3 {
        return Rational::new();
    }
    let mut twice = Rational::new();
    let n = hull.len();
    for i in 0..n {
        twice += hull[i].cross(&hull[(i + 1) % n]);
    }
    twice / Rational::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(x: i64, y: i64) -> QPoint {
        QPoint::new(x, y)
    }

    fn qpr(xn: i64, xd: i64, yn: i64, yd: i64) -> QPoint {
        QPoint::new(Rational::from((xn, xd)), Rational::from((yn, yd)))
    }

    #[test]
    fn polygon_normalizes_to_ccw() {
        let cw = QPolygon::new(vec![qp(0, 0), qp(0, 1), qp(1, 0)]).unwrap();
        let ccw = QPolygon::new(vec![qp(0, 0), qp(1, 0), qp(0, 1)]).unwrap();
        assert_eq!(cw.area(), ccw.area());
        assert_eq!(cw.area(), Rational::from((1, 2)));
        assert!(cw.contains(&qpr(1, 4, 1, 4)));
    }

    #[test]
    fn polygon_rejects_bad_input() {
        assert!(QPolygon::new(vec![qp(0, 0), qp(1, 0)]).is_err());
        assert!(QPolygon::new(vec![qp(0, 0), qp(1, 0), qp(2, 0)]).is_err());
        assert!(QPolygon::new(vec![qp(0, 0), qp(1, 0), qp(1, 0), qp(0, 1)]).is_err());
        // Collinear middle vertex.
        assert!(QPolygon::new(vec![qp(0, 0), qp(1, 0), qp(2, 0), qp(0, 1)]).is_err());
        // Non-convex quadrilateral.
        assert!(QPolygon::new(vec![qp(0, 0), qp(4, 0), qp(1, 1), qp(0, 4)]).is_err());
        // Pentagram: consistent turns but wraps twice.
        let star = vec![qp(0, 6), qp(2, -6), qp(-4, 2), qp(4, 2), qp(-2, -6)];
        assert!(QPolygon::new(star).is_err());
    }

    #[test]
    fn inward_normals_of_square() {
        let sq = QPolygon::new(vec![qp(0, 0), qp(2, 0), qp(2, 2), qp(0, 2)]).unwrap();
        let normals = sq.inward_normals();
        assert_eq!(
            normals,
            vec![
                LatticeVector::new(0, 1),
                LatticeVector::new(-1, 0),
                LatticeVector::new(0, -1),
                LatticeVector::new(1, 0),
            ]
        );
        assert_eq!(sq.lattice_perimeter(), Rational::from(8));
    }

    #[test]
    fn clipping_square_produces_expected_shapes() {
        let sq = QPolygon::new(vec![qp(0, 0), qp(2, 0), qp(2, 2), qp(0, 2)]).unwrap();
        let region = Clipped::Polygon(sq);
        // x + y >= 1 cuts a corner.
        let cut = region.clip_ge(&qp(1, 1), &Rational::from(1));
        match &cut {
            Clipped::Polygon(p) => {
                assert_eq!(p.len(), 5);
                assert_eq!(p.area(), Rational::from((7, 2)));
            }
            other => panic!("expected polygon, got {:?}", other),
        }
        // x + y >= 4 leaves one point.
        let pt = region.clip_ge(&qp(1, 1), &Rational::from(4));
        assert_eq!(pt, Clipped::Point(qp(2, 2)));
        // x + y >= 5 leaves nothing.
        assert_eq!(region.clip_ge(&qp(1, 1), &Rational::from(5)), Clipped::Empty);
        // x >= 2 leaves the right edge.
        let seg = region.clip_ge(&qp(1, 0), &Rational::from(2));
        match seg {
            Clipped::Segment(a, b) => {
                let mut ends = vec![a, b];
                ends.sort_by(|u, v| u.lex_cmp(v));
                assert_eq!(ends, vec![qp(2, 0), qp(2, 2)]);
            }
            other => panic!("expected segment, got {:?}", other),
        }
    }

    #[test]
    fn repeated_clips_commute_with_intersection() {
        let sq = QPolygon::new(vec![qp(0, 0), qp(4, 0), qp(4, 4), qp(0, 4)]).unwrap();
        let a = Clipped::Polygon(sq)
            .clip_ge(&qp(1, 0), &Rational::from(1))
            .clip_ge(&qp(0, 1), &Rational::from(1))
            .clip_ge(&qp(-1, -1), &Rational::from(-5));
        match a {
            Clipped::Polygon(p) => assert_eq!(p.area(), Rational::from((9, 2))),
            other => panic!("expected polygon, got {:?}", other),
        }
    }

    #[test]
    fn hull_strips_interior_and_collinear_points() {
        let pts = vec![
            qp(0, 0),
            qp(2, 0),
            qp(1, 0), // collinear on bottom edge
            qp(2, 2),
            qp(1, 1), // interior
            qp(0, 2),
            qp(0, 0), // duplicate
        ];
        let hull = convex_hull(&pts);
        assert_eq!(hull, vec![qp(0, 0), qp(2, 0), qp(2, 2), qp(0, 2)]);
        assert_eq!(hull_area(&pts), Rational::from(4));
        // Collinear set.
        let line = vec![qp(0, 0), qp(1, 1), qp(3, 3), qp(2, 2)];
        assert_eq!(convex_hull(&line), vec![qp(0, 0), qp(3, 3)]);
        assert_eq!(hull_area(&line), Rational::from(0));
    }

    #[test]
    fn angle_order_walks_counterclockwise() {
        let ring = vec![
            qp(1, 0),
            qp(2, 1),
            qp(1, 1),
            qp(0, 1),
            qp(-1, 1),
            qp(-1, 0),
            qp(-1, -1),
            qp(0, -1),
            qp(1, -1),
        ];
        for w in ring.windows(2) {
            assert_eq!(angle_cmp(&w[0], &w[1]), Ordering::Less);
        }
        assert_eq!(angle_cmp(&qp(2, 0), &qp(3, 0)), Ordering::Equal);
    }

    #[test]
    fn lattice_length_handles_rationals() {
        assert_eq!(lattice_length(&qp(0, 0), &qp(6, 4)), Rational::from(2));
        assert_eq!(lattice_length(&qp(1, 1), &qp(1, 1)), Rational::from(0));
        // Delta (3/2, 1) = (1/2) * (3, 2).
        assert_eq!(
            lattice_length(&qp(0, 0), &qpr(3, 2, 1, 1)),
            Rational::from((1, 2))
        );
    }

    #[test]
    fn primitive_direction_clears_denominators() {
        assert_eq!(
            primitive_direction(&qpr(3, 2, -9, 4)),
            LatticeVector::new(2, -3)
        );
        assert_eq!(primitive_direction(&qp(0, -7)), LatticeVector::new(0, -1));
    }

    #[test]
    fn affine_images_stay_valid() {
        let tri = QPolygon::new(vec![qp(0, 0), qp(3, 0), qp(0, 3)]).unwrap();
        let img = tri
            .map_affine(
                &Integer::from(1),
                &Integer::from(1),
                &Integer::from(0),
                &Integer::from(1),
                &qpr(1, 2, 0, 1),
            )
            .unwrap();
        assert_eq!(img.area(), tri.area());
    }
}
