//! Exact subsets of ℤ of the form `(-∞,p] ∪ finite ∪ [q,∞)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// A finite union of points and half-lines, kept canonical: at most one
/// left ray and one right ray, and no point covered by a ray.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IntRegion {
    points: BTreeSet<i64>,
    /// `(-∞, left_ray]`
    left_ray: Option<i64>,
    /// `[right_ray, ∞)`
    right_ray: Option<i64>,
}

impl IntRegion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.left_ray.is_none() && self.right_ray.is_none()
    }

    pub fn is_all(&self) -> bool {
        matches!((self.left_ray, self.right_ray), (Some(p), Some(q)) if q <= p + 1)
    }

    pub fn points(&self) -> impl Iterator<Item = i64> + '_ {
        self.points.iter().copied()
    }

    pub fn left_ray(&self) -> Option<i64> {
        self.left_ray
    }

    pub fn right_ray(&self) -> Option<i64> {
        self.right_ray
    }

    pub fn add_point(&mut self, x: i64) {
        if !self.contains(x) {
            self.points.insert(x);
            self.canonicalize();
        }
    }

    pub fn add_left_ray(&mut self, p: i64) {
        self.left_ray = Some(self.left_ray.map_or(p, |old| old.max(p)));
        self.canonicalize();
    }

    pub fn add_right_ray(&mut self, q: i64) {
        self.right_ray = Some(self.right_ray.map_or(q, |old| old.min(q)));
        self.canonicalize();
    }

    fn canonicalize(&mut self) {
        // A point adjacent to a ray extends it.
        loop {
            let mut changed = false;
            if let Some(p) = self.left_ray {
                if self.points.remove(&(p + 1)) {
                    self.left_ray = Some(p + 1);
                    changed = true;
                }
            }
            if let Some(q) = self.right_ray {
                if self.points.remove(&(q - 1)) {
                    self.right_ray = Some(q - 1);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let (l, r) = (self.left_ray, self.right_ray);
        self.points
            .retain(|&x| !(l.is_some_and(|p| x <= p) || r.is_some_and(|q| x >= q)));
    }

    pub fn contains(&self, x: i64) -> bool {
        self.left_ray.is_some_and(|p| x <= p)
            || self.right_ray.is_some_and(|q| x >= q)
            || self.points.contains(&x)
    }

    /// A witness of `self ⊄ other`, or `None` when `self ⊆ other`.
    ///
    /// For a ray of `self` the witness is the first integer outside `other`
    /// walking outward from the ray's threshold.
    pub fn first_outside(&self, other: &IntRegion) -> Option<i64> {
        if let Some(p) = self.left_ray {
            let floor = match other.left_ray {
                Some(op) => op + 1,
                None => i64::MIN,
            };
            if floor <= p {
                // Terminates: without a left ray `other` is bounded below.
                if let Some(x) = (floor..=p).rev().find(|&x| !other.contains(x)) {
                    return Some(x);
                }
            }
        }
        if let Some(q) = self.right_ray {
            let ceil = match other.right_ray {
                Some(oq) => oq - 1,
                None => i64::MAX,
            };
            if q <= ceil {
                if let Some(x) = (q..=ceil).find(|&x| !other.contains(x)) {
                    return Some(x);
                }
            }
        }
        self.points.iter().copied().find(|&x| !other.contains(x))
    }

    pub fn is_subset(&self, other: &IntRegion) -> bool {
        self.first_outside(other).is_none()
    }
}

impl fmt::Display for IntRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut parts = Vec::new();
        if let Some(p) = self.left_ray {
            parts.push(format!("(-inf,{p}]"));
        }
        if !self.points.is_empty() {
            let pts: Vec<String> = self.points.iter().map(i64::to_string).collect();
            parts.push(format!("{{{}}}", pts.join(",")));
        }
        if let Some(q) = self.right_ray {
            parts.push(format!("[{q},inf)"));
        }
        f.write_str(&parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rays_absorb_points() {
        let mut r = IntRegion::empty();
        r.add_point(-3);
        r.add_point(5);
        r.add_left_ray(-4);
        assert_eq!(r.left_ray(), Some(-3));
        assert_eq!(r.points().collect::<Vec<_>>(), vec![5]);
        r.add_right_ray(6);
        assert_eq!(r.right_ray(), Some(5));
        assert_eq!(r.points().count(), 0);
        r.add_left_ray(-10);
        assert_eq!(r.left_ray(), Some(-3));
    }

    #[test]
    fn subset_witnesses() {
        let mut left = IntRegion::empty();
        left.add_left_ray(-4);
        left.add_right_ray(7);
        let mut right = IntRegion::empty();
        right.add_left_ray(-5);
        right.add_right_ray(6);
        assert_eq!(left.first_outside(&right), Some(-4));
        assert!(!left.is_subset(&right));
        right.add_point(-4);
        assert!(left.is_subset(&right));

        let mut pt = IntRegion::empty();
        pt.add_point(0);
        assert_eq!(pt.first_outside(&IntRegion::empty()), Some(0));
        assert!(IntRegion::empty().is_subset(&pt));
    }

    #[test]
    fn whole_line() {
        let mut r = IntRegion::empty();
        r.add_left_ray(0);
        r.add_right_ray(2);
        assert!(!r.is_all());
        r.add_point(1);
        assert!(r.is_all());
    }

    fn region() -> impl Strategy<Value = IntRegion> {
        (
            prop::collection::vec(-15i64..15, 0..5),
            prop::option::of(-15i64..15),
            prop::option::of(-15i64..15),
        )
            .prop_map(|(pts, l, r)| {
                let mut g = IntRegion::empty();
                pts.into_iter().for_each(|x| g.add_point(x));
                if let Some(p) = l {
                    g.add_left_ray(p);
                }
                if let Some(q) = r {
                    g.add_right_ray(q);
                }
                g
            })
    }

    proptest! {
        // Rays are eventually all-or-nothing, so checking [-60,60] plus the
        // ray flags decides inclusion.
        #[test]
        fn subset_matches_pointwise(a in region(), b in region()) {
            let pointwise = (-60..=60).all(|x| !a.contains(x) || b.contains(x))
                && (a.left_ray().is_none() || b.left_ray().is_some())
                && (a.right_ray().is_none() || b.right_ray().is_some());
            prop_assert_eq!(a.is_subset(&b), pointwise);
            if let Some(w) = a.first_outside(&b) {
                prop_assert!(a.contains(w) && !b.contains(w));
            }
        }
    }
}
