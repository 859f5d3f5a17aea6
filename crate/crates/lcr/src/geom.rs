//! Exact predicates over rational points.
//!
//! All predicates compute signs of exact rational determinants; there is no
//! floating point anywhere on these paths.

use num_traits::Zero;
use std::cmp::Ordering;

use crate::{Error, Result};

/// Arbitrary-precision rational scalar. Always lowest terms, positive
/// denominator; arithmetic and comparison are exact.
pub type Rational = num_rational::BigRational;

/// A labeled point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    /// 0-based label, unique within its [`PointSet`].
    pub id: usize,
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(id: usize, x: Rational, y: Rational) -> Self {
        Point { id, x, y }
    }

    pub fn from_ints(id: usize, x: i64, y: i64) -> Self {
        Point {
            id,
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }
}

/// An ordered sequence of points with ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Builds a point set from coordinates, assigning ids by position.
    pub fn from_coords(coords: Vec<(Rational, Rational)>) -> Self {
        let points = coords
            .into_iter()
            .enumerate()
            .map(|(id, (x, y))| Point::new(id, x, y))
            .collect();
        PointSet { points }
    }

    pub fn from_int_coords(coords: &[(i64, i64)]) -> Self {
        Self::from_coords(
            coords
                .iter()
                .map(|&(x, y)| {
                    (Rational::from_integer(x.into()), Rational::from_integer(y.into()))
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> Result<&Point> {
        self.points.get(id).ok_or(Error::UnknownId(id))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }
}

/// Sign of the orientation determinant of an ordered triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Collinear,
    Counterclockwise,
}

impl Orientation {
    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::Counterclockwise => 1,
        }
    }
}

/// Strict-side counts relative to an oriented line `pq`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SideCounts {
    /// Points strictly right of oriented `pq`.
    pub right: usize,
    /// Points strictly left of oriented `pq`.
    pub left: usize,
}

/// Open angular sector counts at a vertex `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct SectorCounts {
    /// Points in the open sector swept counterclockwise from ray `rp` to `rq`.
    pub ccw: usize,
    /// Points in the complementary open sector (swept from `rq` to `rp`).
    pub cw: usize,
}

/// An integer small enough that the determinant below cannot overflow i128.
fn small_int(r: &Rational) -> Option<i64> {
    use num_traits::{One, ToPrimitive};
    if r.denom().is_one() {
        r.numer().to_i64().filter(|v| v.abs() <= 1 << 30)
    } else {
        None
    }
}

/// Sign of `(q.x-p.x)(r.y-p.y) - (q.y-p.y)(r.x-p.x)`, computed exactly.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    // Fast path: small integer coordinates fit an exact i128 determinant.
    if let (Some(px), Some(py), Some(qx), Some(qy), Some(rx), Some(ry)) = (
        small_int(&p.x),
        small_int(&p.y),
        small_int(&q.x),
        small_int(&q.y),
        small_int(&r.x),
        small_int(&r.y),
    ) {
        let det = (qx - px) as i128 * (ry - py) as i128 - (qy - py) as i128 * (rx - px) as i128;
        return match det.cmp(&0) {
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
            Ordering::Greater => Orientation::Counterclockwise,
        };
    }
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    match det.cmp(&Rational::zero()) {
        Ordering::Less => Orientation::Clockwise,
        Ordering::Equal => Orientation::Collinear,
        Ordering::Greater => Orientation::Counterclockwise,
    }
}

/// True iff all points are distinct and no three are collinear.
pub fn is_general_position(ps: &PointSet) -> bool {
    first_degeneracy(ps).is_none()
}

/// Locates a witness of non-general position, if any: either a duplicate pair
/// or a collinear triple (ids).
pub fn first_degeneracy(ps: &PointSet) -> Option<Vec<usize>> {
    let pts = ps.points();
    let n = pts.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if pts[i].x == pts[j].x && pts[i].y == pts[j].y {
                return Some(vec![i, j]);
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orient(&pts[i], &pts[j], &pts[k]) == Orientation::Collinear {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

/// True iff the open segments `ab` and `cd` intersect properly.
///
/// Segments that share an endpoint label are rejected: adjacency is not a
/// crossing. A collinear outcome means the input violates general position.
pub fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<bool> {
    if a.id == c.id || a.id == d.id || b.id == c.id || b.id == d.id {
        return Err(Error::SharedEndpoint);
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    if o1 == Orientation::Collinear {
        return Err(Error::CollinearTriple(a.id, b.id, c.id));
    }
    if o2 == Orientation::Collinear {
        return Err(Error::CollinearTriple(a.id, b.id, d.id));
    }
    if o1 == o2 {
        return Ok(false);
    }
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o3 == Orientation::Collinear {
        return Err(Error::CollinearTriple(c.id, d.id, a.id));
    }
    if o4 == Orientation::Collinear {
        return Err(Error::CollinearTriple(c.id, d.id, b.id));
    }
    Ok(o3 != o4)
}

/// Convex hull vertex ids in counterclockwise order, starting from the
/// lexicographically smallest point.
pub fn convex_hull(ps: &PointSet) -> Result<Vec<usize>> {
    if ps.len() < 3 {
        return Err(Error::TooFewPoints { need: 3, got: ps.len() });
    }
    let mut order: Vec<&Point> = ps.iter().collect();
    order.sort_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y)));

    // Andrew monotone chain; strict turns only (general position).
    let build = |seq: &mut dyn Iterator<Item = &&Point>| -> Vec<usize> {
        let mut chain: Vec<&Point> = Vec::new();
        for &p in seq {
            while chain.len() >= 2
                && orient(chain[chain.len() - 2], chain[chain.len() - 1], p)
                    != Orientation::Counterclockwise
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain.iter().map(|p| p.id).collect()
    };
    let lower = build(&mut order.iter());
    let upper = build(&mut order.iter().rev());
    let mut hull = lower;
    hull.extend_from_slice(&upper[1..upper.len() - 1]);
    Ok(hull)
}

/// Exact strict-side counts of `P` relative to the oriented line through the
/// points with ids `p` and `q`.
pub fn side_counts(ps: &PointSet, p: usize, q: usize) -> Result<SideCounts> {
    if p == q {
        return Err(Error::NotDistinct);
    }
    let pp = ps.point(p)?;
    let qq = ps.point(q)?;
    let mut right = 0;
    let mut left = 0;
    for x in ps.iter() {
        if x.id == p || x.id == q {
            continue;
        }
        match orient(pp, qq, x) {
            Orientation::Clockwise => right += 1,
            Orientation::Counterclockwise => left += 1,
            Orientation::Collinear => return Err(Error::CollinearTriple(p, q, x.id)),
        }
    }
    Ok(SideCounts { right, left })
}

/// True iff `x` lies strictly inside the open sector at `r` swept
/// counterclockwise from ray `rp` to ray `rq`. Reflex sectors are supported.
pub fn in_sector(p: &Point, r: &Point, q: &Point, x: &Point) -> Result<bool> {
    let o_pq = orient(r, p, q);
    if o_pq == Orientation::Collinear {
        return Err(Error::CollinearTriple(p.id, r.id, q.id));
    }
    let reflex = o_pq == Orientation::Clockwise;
    let o_px = orient(r, p, x);
    let o_xq = orient(r, x, q);
    if o_px == Orientation::Collinear {
        // On the line of ray rp: the ray itself is excluded, the opposite ray
        // is interior exactly when the sector is reflex.
        return Ok(reflex && !same_ray_side(r, p, x));
    }
    if o_xq == Orientation::Collinear {
        return Ok(reflex && !same_ray_side(r, q, x));
    }
    let after_p = o_px == Orientation::Counterclockwise;
    let before_q = o_xq == Orientation::Counterclockwise;
    Ok(if reflex { after_p || before_q } else { after_p && before_q })
}

/// For `x` collinear with `r` and `a`: true iff `x` is on the closed ray from
/// `r` through `a`.
fn same_ray_side(r: &Point, a: &Point, x: &Point) -> bool {
    let dot = (&a.x - &r.x) * (&x.x - &r.x) + (&a.y - &r.y) * (&x.y - &r.y);
    dot >= Rational::zero()
}

/// Counts of `P \ {p,q,r}` in the two open sectors at `r`: `ccw = |S(prq)|`,
/// `cw = |S(qrp)|`.
pub fn sector_counts(ps: &PointSet, p: usize, r: usize, q: usize) -> Result<SectorCounts> {
    if p == q || p == r || q == r {
        return Err(Error::NotDistinct);
    }
    let pp = ps.point(p)?;
    let rr = ps.point(r)?;
    let qq = ps.point(q)?;
    let mut ccw = 0;
    let mut cw = 0;
    for x in ps.iter() {
        if x.id == p || x.id == q || x.id == r {
            continue;
        }
        if in_sector(pp, rr, qq, x)? {
            ccw += 1;
        }
        if in_sector(qq, rr, pp, x)? {
            cw += 1;
        }
    }
    Ok(SectorCounts { ccw, cw })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn pt(id: usize, x: i64, y: i64) -> Point {
        Point::from_ints(id, x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&pt(0, 0, 0), &pt(1, 1, 0), &pt(2, 0, 1)), Orientation::Counterclockwise);
        assert_eq!(orient(&pt(0, 0, 0), &pt(1, 1, 0), &pt(2, 2, 0)), Orientation::Collinear);
        assert_eq!(orient(&pt(0, 0, 0), &pt(1, 0, 1), &pt(2, 1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn general_position_examples() {
        assert!(is_general_position(&PointSet::from_int_coords(&[(0, 0), (1, 0), (0, 1)])));
        assert!(!is_general_position(&PointSet::from_int_coords(&[(0, 0), (1, 0), (2, 0)])));
        assert!(!is_general_position(&PointSet::from_int_coords(&[(0, 0), (1, 1), (1, 1)])));
    }

    #[test]
    fn segment_crossing_examples() {
        let x = |a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)| {
            segments_cross(
                &pt(0, a.0, a.1),
                &pt(1, b.0, b.1),
                &pt(2, c.0, c.1),
                &pt(3, d.0, d.1),
            )
            .unwrap()
        };
        assert!(x((0, 0), (2, 2), (0, 2), (2, 0)));
        assert!(!x((0, 0), (1, 0), (0, 1), (1, 1)));
        assert!(!x((0, 0), (3, 1), (1, 2), (2, 3)));
        assert!(matches!(
            segments_cross(&pt(0, 0, 0), &pt(1, 2, 2), &pt(0, 0, 0), &pt(3, 2, 0)),
            Err(Error::SharedEndpoint)
        ));
    }

    #[test]
    fn hull_examples() {
        let ps = PointSet::from_int_coords(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        assert_eq!(convex_hull(&ps).unwrap(), vec![0, 1, 2]);

        let convex4 = PointSet::from_int_coords(&[(0, 0), (3, 1), (4, 5), (1, 4)]);
        assert_eq!(convex_hull(&convex4).unwrap(), vec![0, 1, 2, 3]);

        assert!(convex_hull(&PointSet::from_int_coords(&[(0, 0), (1, 1)])).is_err());
    }

    #[test]
    fn hull_starts_at_lexicographic_minimum() {
        let ps = PointSet::from_int_coords(&[(5, 5), (0, 9), (0, 1), (9, 0), (4, 14)]);
        let hull = convex_hull(&ps).unwrap();
        assert_eq!(hull[0], 2);
    }

    #[test]
    fn side_count_examples() {
        let ps = PointSet::from_int_coords(&[(0, 0), (2, 0), (1, 1), (1, -1)]);
        let sc = side_counts(&ps, 0, 1).unwrap();
        assert_eq!(sc, SideCounts { right: 1, left: 1 });

        // Hull edge of a convex pentagon: everything on one side.
        let pent = PointSet::from_int_coords(&[(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)]);
        let sc = side_counts(&pent, 0, 1).unwrap();
        assert_eq!(sc.right.min(sc.left), 0);
        assert_eq!(sc.right + sc.left, 3);
    }

    #[test]
    fn side_counts_match_brute_force_orient_tally() {
        let ps = PointSet::from_int_coords(&[
            (12, 11), (0, 14), (11, 5), (19, 3), (15, 1), (6, 9), (4, 7), (12, 12), (15, 2), (5, 14),
        ]);
        assert!(is_general_position(&ps));
        for p in 0..ps.len() {
            for q in 0..ps.len() {
                if p == q {
                    continue;
                }
                let sc = side_counts(&ps, p, q).unwrap();
                let (mut r, mut l) = (0, 0);
                for x in ps.iter() {
                    if x.id == p || x.id == q {
                        continue;
                    }
                    match orient(ps.point(p).unwrap(), ps.point(q).unwrap(), x).sign() {
                        -1 => r += 1,
                        1 => l += 1,
                        _ => unreachable!(),
                    }
                }
                assert_eq!((sc.right, sc.left), (r, l));
                assert_eq!(sc.right + sc.left, ps.len() - 2);
                // Orientation reversal swaps sides.
                let rev = side_counts(&ps, q, p).unwrap();
                assert_eq!(sc.right, rev.left);
            }
        }
    }

    #[test]
    fn sector_examples() {
        // p=(1,0), r=(0,0), q=(-1,eps), x=(0,1), y=(0,-1): S(prq)={x}, S(qrp)={y}.
        let eps = rat(1, 100);
        let ps = PointSet::from_coords(vec![
            (rat(1, 1), rat(0, 1)),
            (rat(0, 1), rat(0, 1)),
            (rat(-1, 1), eps),
            (rat(0, 1), rat(1, 1)),
            (rat(0, 1), rat(-1, 1)),
        ]);
        let sc = sector_counts(&ps, 0, 1, 2).unwrap();
        assert_eq!(sc, SectorCounts { ccw: 1, cw: 1 });
    }

    #[test]
    fn reflex_sector_membership() {
        // Sector at origin from +x ccw to -y spans 3*pi/2.
        let p = pt(0, 1, 0);
        let r = pt(1, 0, 0);
        let q = pt(2, 0, -1);
        assert!(in_sector(&p, &r, &q, &pt(3, 0, 1)).unwrap());
        assert!(in_sector(&p, &r, &q, &pt(3, -1, 0)).unwrap());
        assert!(in_sector(&p, &r, &q, &pt(3, -1, -1)).unwrap());
        assert!(!in_sector(&p, &r, &q, &pt(3, 1, -1)).unwrap());
        assert!(!in_sector(&p, &r, &q, &pt(3, 2, 0)).unwrap());
    }

    // Independent oracle: angular sweep by exact comparator around r.
    fn sector_oracle(ps: &PointSet, p: usize, r: usize, q: usize) -> (usize, usize) {
        let rr = ps.point(r).unwrap().clone();
        // Pseudo-angle order around r starting at ray rp, going ccw.
        let pp = ps.point(p).unwrap().clone();
        let angle_pos = |x: &Point| -> (u8, Rational) {
            // Classify by half-plane split along ray rp, then order within a
            // half by orientation against a reference direction.
            let o = orient(&rr, &pp, x);
            let d = (&pp.x - &rr.x) * (&x.x - &rr.x) + (&pp.y - &rr.y) * (&x.y - &rr.y);
            match (o, d >= Rational::zero()) {
                (Orientation::Collinear, true) => (0, Rational::zero()),
                (Orientation::Counterclockwise, _) => (1, Rational::zero()),
                (Orientation::Collinear, false) => (2, Rational::zero()),
                (Orientation::Clockwise, _) => (3, Rational::zero()),
            }
        };
        let before = |a: &Point, b: &Point| -> bool {
            // a strictly before b going ccw from ray rp
            let (ha, _) = angle_pos(a);
            let (hb, _) = angle_pos(b);
            if ha != hb {
                return ha < hb;
            }
            orient(&rr, a, b) == Orientation::Counterclockwise
        };
        let qq = ps.point(q).unwrap().clone();
        let mut ccw = 0;
        let mut cw = 0;
        for x in ps.iter() {
            if x.id == p || x.id == q || x.id == r {
                continue;
            }
            if before(x, &qq) && angle_pos(x).0 > 0 {
                ccw += 1;
            } else if !before(x, &qq) && x.id != q {
                cw += 1;
            }
        }
        (ccw, cw)
    }

    #[test]
    fn sector_counts_match_angular_sweep_oracle() {
        let ps = PointSet::from_int_coords(&[
            (17, 10), (7, 1), (9, 6), (11, 5), (0, 10), (12, 2), (15, 8), (16, 20), (6, 7),
            (16, 0), (2, 8), (2, 4),
        ]);
        assert!(is_general_position(&ps));
        let n = ps.len();
        for (p, r, q) in [(0, 4, 7), (2, 9, 11), (10, 3, 1), (5, 8, 6), (1, 2, 3)] {
            let sc = sector_counts(&ps, p, r, q).unwrap();
            assert_eq!((sc.ccw, sc.cw), sector_oracle(&ps, p, r, q));
            assert_eq!(sc.ccw + sc.cw, n - 3);
        }
    }

    #[test]
    fn sector_partition_identity_all_triples() {
        let ps = PointSet::from_int_coords(&[
            (13, 2), (7, 2), (17, 13), (1, 18), (3, 7), (20, 20), (18, 1), (18, 18),
        ]);
        let n = ps.len();
        for p in 0..n {
            for r in 0..n {
                for q in 0..n {
                    if p == r || p == q || r == q {
                        continue;
                    }
                    let sc = sector_counts(&ps, p, r, q).unwrap();
                    assert_eq!(sc.ccw + sc.cw, n - 3);
                    let rev = sector_counts(&ps, q, r, p).unwrap();
                    assert_eq!((sc.ccw, sc.cw), (rev.cw, rev.ccw));
                }
            }
        }
    }

    #[test]
    fn predicates_invariant_under_positive_scaling() {
        let coords = [(3i64, 7i64), (12, 1), (8, 9), (0, 2), (15, 4)];
        let ps = PointSet::from_int_coords(&coords);
        let scale = rat(7, 3);
        let scaled = PointSet::from_coords(
            coords
                .iter()
                .map(|&(x, y)| (rat(x, 1) * &scale, rat(y, 1) * &scale))
                .collect(),
        );
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let a = (ps.point(i).unwrap(), ps.point(j).unwrap(), ps.point(k).unwrap());
                    let b = (
                        scaled.point(i).unwrap(),
                        scaled.point(j).unwrap(),
                        scaled.point(k).unwrap(),
                    );
                    assert_eq!(orient(a.0, a.1, a.2), orient(b.0, b.1, b.2));
                }
            }
        }
        assert_eq!(convex_hull(&ps).unwrap(), convex_hull(&scaled).unwrap());
    }
}
