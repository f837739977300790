use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::arrangement::arrangement_of;
use super::point::{cross, dot, Point, PointSet};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A permutation of `0..n` read as a circular sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularOrder {
    seq: Vec<usize>,
}

impl CircularOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; seq.len()];
        for &s in &seq {
            if s >= seq.len() || std::mem::replace(&mut seen[s], true) {
                return Err(Error::InvalidPermutation(format!("{seq:?}")));
            }
        }
        Ok(CircularOrder { seq })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The rotation starting with element `0`; equal for shift-equivalent orders.
    pub fn canonical(&self) -> CircularOrder {
        let Some(start) = self.seq.iter().position(|&s| s == 0) else {
            return self.clone();
        };
        let mut seq = self.seq[start..].to_vec();
        seq.extend_from_slice(&self.seq[..start]);
        CircularOrder { seq }
    }

    pub fn reversed(&self) -> CircularOrder {
        CircularOrder {
            seq: self.seq.iter().rev().copied().collect(),
        }
    }

    pub fn is_shift_of(&self, other: &CircularOrder) -> bool {
        self.canonical() == other.canonical()
    }

    /// Relabel every entry through `map`.
    pub fn relabel(&self, map: &[usize]) -> Vec<usize> {
        self.seq.iter().map(|&s| map[s]).collect()
    }
}

// 0 for directions in [north, south), 1 for [south, north), turning clockwise
fn half<T: Scalar>(d: &(T, T)) -> u8 {
    if d.0.is_positive() || (d.0.is_zero() && d.1.is_positive()) {
        0
    } else {
        1
    }
}

/// Clockwise angular comparison of two non-zero directions starting from
/// north (+y); equal directions compare by length.
pub fn clockwise_cmp<T: Scalar>(a: &(T, T), b: &(T, T)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_negative() {
            Ordering::Less
        } else if c.is_positive() {
            Ordering::Greater
        } else {
            dot(a, a).cmp(&dot(b, b))
        }
    })
}

/// Order in which the points are seen from `p`, turning clockwise from north;
/// points in a common direction are seen nearer-first, and a point located
/// at `p` itself is seen first.
pub fn visibility_permutation<T: Scalar>(p: &Point<T>, points: &[Point<T>]) -> CircularOrder {
    let mut here = None;
    let mut rest: Vec<(usize, (T, T))> = Vec::with_capacity(points.len());
    for (i, x) in points.iter().enumerate() {
        if x == p {
            here = Some(i);
        } else {
            rest.push((i, x.sub(p)));
        }
    }
    rest.sort_by(|a, b| clockwise_cmp(&a.1, &b.1));
    let seq = here
        .into_iter()
        .chain(rest.into_iter().map(|(i, _)| i))
        .collect();
    CircularOrder { seq }
}

/// The visibility orders of all standpoints in the plane, up to shift.
pub fn visibility_classes<T: Scalar>(set: &PointSet<T>) -> Result<BTreeSet<CircularOrder>> {
    if set.len() < 2 {
        return Err(Error::TooFewPoints {
            need: 2,
            got: set.len(),
        });
    }
    Ok(classes_of(set.points()))
}

pub(crate) fn classes_of<T: Scalar>(points: &[Point<T>]) -> BTreeSet<CircularOrder> {
    let arr = arrangement_of(points);
    arr.standpoints()
        .map(|p| visibility_permutation(p, points).canonical())
        .collect()
}

/// Cheap bound on the number of visibility classes: faces, edges and
/// vertices of the arrangement.
pub fn quotient_bound(n: usize) -> f64 {
    0.75 * (n as f64).powi(4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn pts(c: &[(i64, i64)]) -> Vec<Point<Rational>> {
        c.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    #[test]
    fn seen_from_the_south() {
        let x = pts(&[(-1, 0), (0, 0), (1, 0)]);
        let s = visibility_permutation(&Point::from_ints(0, -10), &x);
        assert_eq!(s.as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn nearer_point_first() {
        let x = pts(&[(0, 1), (0, 2)]);
        let s = visibility_permutation(&Point::from_ints(0, 0), &x);
        assert_eq!(s.as_slice(), &[0, 1]);
        let x = pts(&[(0, 2), (0, 1)]);
        let s = visibility_permutation(&Point::from_ints(0, 0), &x);
        assert_eq!(s.as_slice(), &[1, 0]);
    }

    #[test]
    fn standpoint_on_a_point_sees_it_first() {
        let x = pts(&[(3, 3), (0, 5), (-2, 1), (4, -1)]);
        for (i, p) in x.iter().enumerate() {
            assert_eq!(visibility_permutation(p, &x).as_slice()[0], i);
        }
    }

    #[test]
    fn clockwise_from_north() {
        let x = pts(&[(-1, 1), (1, 1), (1, -1), (-1, -1), (0, 1)]);
        let s = visibility_permutation(&Point::from_ints(0, 0), &x);
        assert_eq!(s.as_slice(), &[4, 1, 2, 3, 0]);
    }

    #[test]
    fn collinear_class_count() {
        let set = PointSet::<Rational>::from_ints(&[(0, 0), (1, 0), (3, 0)]).unwrap();
        let q = visibility_classes(&set).unwrap();
        assert!(q.len() <= 3, "{q:?}");
    }

    #[test]
    fn canonical_rotation() {
        let a = CircularOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(a.canonical().as_slice(), &[0, 1, 2]);
        assert!(a.is_shift_of(&CircularOrder::new(vec![1, 2, 0]).unwrap()));
        assert!(CircularOrder::new(vec![0, 0]).is_err());
    }
}
