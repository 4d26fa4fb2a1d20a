//! Exact integer predicates for planarity checks of grid drawings.

pub type Point = [i64; 2];

/// Twice the signed area of triangle `abc`: positive when `a, b, c` turn
/// counter-clockwise. Exact for coordinates below 2^31.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = ((b[0] - a[0]) as i128, (b[1] - a[1]) as i128);
    let (acx, acy) = ((c[0] - a[0]) as i128, (c[1] - a[1]) as i128);
    abx * acy - aby * acx
}

/// `p` lies on the closed segment `ab`, given the three are collinear.
fn within(a: Point, b: Point, p: Point) -> bool {
    p[0] >= a[0].min(b[0]) && p[0] <= a[0].max(b[0]) && p[1] >= a[1].min(b[1]) && p[1] <= a[1].max(b[1])
}

/// True when closed segments `ab` and `cd` have any point in common.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (o1, o2) = (orient(a, b, c).signum(), orient(a, b, d).signum());
    let (o3, o4) = (orient(c, d, a).signum(), orient(c, d, b).signum());
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && within(a, b, c))
        || (o2 == 0 && within(a, b, d))
        || (o3 == 0 && within(c, d, a))
        || (o4 == 0 && within(c, d, b))
}

/// Whether two drawn edges conflict. Edges sharing an endpoint conflict only
/// when they overlap along a common line; disjoint edges conflict when they
/// touch at all.
pub fn edges_cross(a: Point, b: Point, c: Point, d: Point, shared: bool) -> bool {
    if !shared {
        return segments_intersect(a, b, c, d);
    }
    // Normalize so the common endpoint is `a == c`.
    let (a, b, d) = if a == c {
        (a, b, d)
    } else if a == d {
        (a, b, c)
    } else if b == c {
        (b, a, d)
    } else {
        (b, a, c)
    };
    if orient(a, b, d) != 0 {
        return false;
    }
    // Collinear from a common point: overlap iff they leave in the same direction.
    let dot = (b[0] - a[0]) as i128 * (d[0] - a[0]) as i128 + (b[1] - a[1]) as i128 * (d[1] - a[1]) as i128;
    dot > 0
}
