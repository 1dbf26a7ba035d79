//! Rotation of arcs inside the cells cut out by a set of dividers, which
//! realises mutation of n-cotorsion pairs.
//!
//! A finite non-crossing set `D` of admissible arcs divides the ∞-gon into
//! cells. An arc compatible with `D` (not in `D`, crossing nothing in `D`) is
//! a diagonal of exactly one cell, and its `D`-rotation moves each endpoint
//! one step backwards along that cell's boundary. With `D = ∅` this is the
//! global rotation `(t,u) -> (t-1,u-1) = Σ(t,u)`.
//!
//! The backwards step from an endpoint `p` of `a` is:
//!
//! 1. if a divider `(p,r)` encloses `a`, `p` is the first vertex of `a`'s
//!    cell and the step wraps to the innermost such `r`;
//! 2. otherwise if dividers `(q,p)` hang off `p` on the side away from `a`,
//!    the step jumps over the outermost of them to the smallest `q`;
//! 3. otherwise the step is `p - 1`.
//!
//! The forward step is the mirror image and inverts it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arc::{normalize, Arc, ModelParams};
use crate::arc_set::{ArcSet, FountainFamily, Window};
use crate::cotorsion::{check_pair, PairReport};
use crate::error::{Error, Result};
use crate::hom_ext::{ext_triangle, ExtCase, ExtTriangle};

/// A finite set of pairwise non-crossing admissible arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividerSet {
    params: ModelParams,
    arcs: BTreeSet<Arc>,
}

impl DividerSet {
    pub fn new(params: ModelParams, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let arcs: BTreeSet<Arc> = arcs.into_iter().collect();
        for a in &arcs {
            a.require_admissible(&params)?;
            if let Some(b) = arcs.iter().find(|b| b.crosses(a)) {
                return Err(Error::CrossingDividers(*a, *b));
            }
        }
        Ok(Self { params, arcs })
    }

    pub fn empty(params: ModelParams) -> Self {
        Self {
            params,
            arcs: BTreeSet::new(),
        }
    }

    /// Uses the explicit arcs of a finite set as dividers.
    pub fn from_set(set: &ArcSet) -> Result<Self> {
        if !set.is_finite() {
            return Err(Error::UnsupportedFamilies(set.families().len()));
        }
        Self::new(*set.params(), set.explicit().iter().copied())
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.contains(a)
    }

    /// Smallest and largest divider endpoint.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.arcs.iter().map(Arc::t).min()?;
        let hi = self.arcs.iter().map(Arc::u).max()?;
        Some((lo, hi))
    }

    fn check_compatible(&self, a: &Arc) -> Result<()> {
        if self.arcs.contains(a) {
            return Err(Error::IncompatibleArc {
                arc: *a,
                reason: "arc is itself a divider",
            });
        }
        if self.arcs.iter().any(|d| d.crosses(a)) {
            return Err(Error::IncompatibleArc {
                arc: *a,
                reason: "arc crosses a divider",
            });
        }
        Ok(())
    }

    fn check_endpoint(&self, p: i64, a: &Arc) -> Result<i64> {
        self.check_compatible(a)?;
        if !a.has_endpoint(p) {
            return Err(Error::IncompatibleArc {
                arc: *a,
                reason: "point is not an endpoint of the arc",
            });
        }
        Ok(if p == a.t() { a.u() } else { a.t() })
    }
}

/// The vertex before `p` on the boundary of the cell containing `a`.
pub fn predecessor(p: i64, a: &Arc, d: &DividerSet) -> Result<i64> {
    let other = d.check_endpoint(p, a)?;
    let wrap = d
        .arcs
        .iter()
        .filter(|e| e.t() == p && e.encloses(a))
        .map(Arc::u)
        .min();
    if let Some(r) = wrap {
        return Ok(r);
    }
    let jump = d
        .arcs
        .iter()
        .filter(|e| e.u() == p && (other <= e.t() || other >= p))
        .map(Arc::t)
        .min();
    Ok(jump.unwrap_or(p - 1))
}

/// The vertex after `p` on the boundary of the cell containing `a`.
pub fn successor(p: i64, a: &Arc, d: &DividerSet) -> Result<i64> {
    let other = d.check_endpoint(p, a)?;
    let wrap = d
        .arcs
        .iter()
        .filter(|e| e.u() == p && e.encloses(a))
        .map(Arc::t)
        .max();
    if let Some(q) = wrap {
        return Ok(q);
    }
    let jump = d
        .arcs
        .iter()
        .filter(|e| e.t() == p && (other >= e.u() || other <= p))
        .map(Arc::u)
        .max();
    Ok(jump.unwrap_or(p + 1))
}

fn check_image(a: &Arc, image: Arc, d: &DividerSet) -> Result<Arc> {
    let ok = image.is_admissible(&d.params)
        && !d.arcs.contains(&image)
        && !d.arcs.iter().any(|e| e.crosses(&image));
    if ok {
        Ok(image)
    } else {
        Err(Error::NonAdmissibleImage { arc: *a, image })
    }
}

/// `ρ_D(a)`: both endpoints step backwards in `a`'s cell.
pub fn rotate_arc(a: &Arc, d: &DividerSet) -> Result<Arc> {
    a.require_admissible(&d.params)?;
    let image = normalize(predecessor(a.t(), a, d)?, predecessor(a.u(), a, d)?)?;
    check_image(a, image, d)
}

/// `ρ_D^{-1}(a)`: both endpoints step forwards in `a`'s cell.
pub fn rotate_arc_inverse(a: &Arc, d: &DividerSet) -> Result<Arc> {
    a.require_admissible(&d.params)?;
    let image = normalize(successor(a.t(), a, d)?, successor(a.u(), a, d)?)?;
    check_image(a, image, d)
}

/// The rotation of `a` together with the triangle realising it as a
/// minimal left approximation by `add D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RotationResult {
    pub image: Arc,
    pub via_triangle: ExtTriangle,
}

/// Rotates `a` and cross-checks the result against the extension triangle
/// `a -> E -> ρ_D(a)`: every non-zero middle summand has to be a divider.
pub fn mutation_via_triangle(a: &Arc, d: &DividerSet) -> Result<RotationResult> {
    let image = rotate_arc(a, d)?;
    let mismatch = |reason: String| Error::TriangleMismatch {
        arc: *a,
        image,
        reason,
    };
    let tri = ext_triangle(&image, a, &d.params)
        .map_err(|_| mismatch("Ext^1(image, arc) vanishes".into()))?;
    // t < r < u < s puts both arcs on one component, r < t < s < u on adjacent ones.
    let expected = if a.t() < image.t() {
        ExtCase::SameComponent
    } else {
        ExtCase::NextComponent
    };
    if tri.case != expected {
        return Err(mismatch(format!(
            "triangle case {:?}, geometry says {:?}",
            tri.case, expected
        )));
    }
    if let Some(m) = tri.middle().find(|m| !d.contains(m)) {
        return Err(mismatch(format!("middle summand {m} is not a divider")));
    }
    Ok(RotationResult {
        image,
        via_triangle: tri,
    })
}

fn largest_le(bound: i64, residue: i64, n: i64) -> i64 {
    bound - (bound - residue).rem_euclid(n)
}

fn smallest_ge(bound: i64, residue: i64, n: i64) -> i64 {
    bound + (residue - bound).rem_euclid(n)
}

// Splits a family into sub-families whose free endpoints all lie outside
// [lo, hi] plus the finitely many arcs left over.
fn split_family(
    f: FountainFamily,
    (lo, hi): (i64, i64),
    p: &ModelParams,
) -> (Vec<FountainFamily>, Vec<Arc>) {
    let mut fams = Vec::new();
    let mut finite = Vec::new();
    let mut push = |t: i64, u: i64| {
        if t < u && p.admits(t, u) {
            finite.push(Arc::new(t, u).expect("t < u"));
        }
    };
    match f {
        FountainFamily::LeftFan { p: q, s_max } => {
            fams.push(FountainFamily::LeftFan {
                p: q,
                s_max: s_max.min(lo - 1),
            });
            (lo..=s_max).for_each(|s| push(s, q));
        }
        FountainFamily::RightFan { p: q, u_min } => {
            fams.push(FountainFamily::RightFan {
                p: q,
                u_min: u_min.max(hi + 1),
            });
            (u_min..=hi).for_each(|u| push(q, u));
        }
        FountainFamily::Band { k_max, l_min } => {
            let k1 = k_max.min(lo - 1);
            let l1 = l_min.max(hi + 1);
            fams.push(FountainFamily::Band {
                k_max: k1,
                l_min: l1,
            });
            for k in lo..=k_max {
                fams.push(FountainFamily::RightFan { p: k, u_min: l1 });
                (l_min..=hi).for_each(|l| push(k, l));
            }
            for l in l_min..=hi {
                fams.push(FountainFamily::LeftFan { p: l, s_max: k1 });
            }
        }
        FountainFamily::HalfLeft { p: q } if q < lo => fams.push(f),
        FountainFamily::HalfLeft { p: q } => {
            fams.push(FountainFamily::HalfLeft { p: lo - 1 });
            for t in lo..=q {
                fams.push(FountainFamily::LeftFan {
                    p: t,
                    s_max: lo - 1,
                });
                (t + 1..=q).for_each(|u| push(t, u));
            }
        }
        FountainFamily::HalfRight { q } if q > hi => fams.push(f),
        FountainFamily::HalfRight { q } => {
            fams.push(FountainFamily::HalfRight { q: hi + 1 });
            for s in q..=hi {
                fams.push(FountainFamily::RightFan {
                    p: s,
                    u_min: hi + 1,
                });
                (s + 1..=hi).for_each(|u| push(s, u));
            }
        }
    }
    (fams, finite)
}

// Rotates a family whose free endpoints avoid the divider span. The anchored
// endpoint is moved by rotating one representative member.
fn rotate_far_family(f: FountainFamily, d: &DividerSet) -> Result<FountainFamily> {
    let n = d.params.n();
    let unsupported = |reason: String| Error::UnsupportedFamilyGeometry {
        family: f.to_string(),
        reason,
    };
    let image = match f {
        FountainFamily::LeftFan { p, s_max } => {
            let s = largest_le(s_max.min(p - 2), p - 1, n);
            let rep = Arc::new(s, p)?;
            let anchor = predecessor(p, &rep, d)?;
            if predecessor(s, &rep, d)? != s - 1 {
                return Err(unsupported(format!("foot {s} does not move by one")));
            }
            FountainFamily::LeftFan {
                p: anchor,
                s_max: s_max - 1,
            }
        }
        FountainFamily::RightFan { p, u_min } => {
            let u = smallest_ge(u_min.max(p + 2), p + 1, n);
            let rep = Arc::new(p, u)?;
            let anchor = predecessor(p, &rep, d)?;
            if predecessor(u, &rep, d)? != u - 1 {
                return Err(unsupported(format!("foot {u} does not move by one")));
            }
            FountainFamily::RightFan {
                p: anchor,
                u_min: u_min - 1,
            }
        }
        other => other.shift(1),
    };
    image.validate().map_err(|e| unsupported(e.to_string()))?;
    Ok(image)
}

// Compares the closed-form image against pointwise rotation, in both
// directions, on a window around everything the sets mention.
fn validate_rotation(x: &ArcSet, image: &ArcSet, d: &DividerSet) -> Result<()> {
    let margin = 2 * d.params.n() + 4;
    let spans = [x.anchor_span(), image.anchor_span(), d.span()];
    let Some((lo, hi)) = spans
        .into_iter()
        .flatten()
        .reduce(|(a, b), (c, e)| (a.min(c), b.max(e)))
    else {
        return Ok(());
    };
    let outer = Window::new(lo - margin, hi + margin)?;
    let inner = outer.shrink(1)?;
    let fail = |reason: String| Error::UnsupportedFamilyGeometry {
        family: format!("{} families", x.families().len()),
        reason,
    };
    for a in x.members_in(&outer) {
        if d.contains(&a) {
            continue;
        }
        let b = rotate_arc(&a, d)?;
        if !image.contains_admissible(&b) {
            return Err(fail(format!(
                "image of {a} is {b}, missing from the rotated set"
            )));
        }
    }
    for b in image.members_in(&inner) {
        if d.contains(&b) {
            continue;
        }
        let a = rotate_arc_inverse(&b, d)
            .map_err(|e| fail(format!("rotated member {b} has no preimage: {e}")))?;
        if !x.contains_admissible(&a) {
            return Err(fail(format!(
                "rotated member {b} comes from {a}, not in the set"
            )));
        }
    }
    Ok(())
}

/// `ρ_D(X) = {ρ_D(a) : a ∈ X \ D} ∪ D`, for `D` inside the frame of `X`.
pub fn rotate_set(x: &ArcSet, d: &DividerSet) -> Result<ArcSet> {
    if x.params() != d.params() {
        return Err(Error::Validation {
            locus: "dividers".into(),
            message: "divider set and arc set use different n".into(),
        });
    }
    for e in &d.arcs {
        if !x.contains(e)? || x.crosses(e)? {
            return Err(Error::DNotInFrame(*e));
        }
    }
    let mut out = ArcSet::empty(*x.params());
    for a in x.explicit() {
        if !d.contains(a) {
            out.insert(rotate_arc(a, d)?)?;
        }
    }
    for &f in x.families() {
        let Some(span) = d.span() else {
            out.add_family(f.shift(1))?;
            continue;
        };
        let (fams, finite) = split_family(f, span, x.params());
        for a in finite {
            if !d.contains(&a) {
                out.insert(rotate_arc(&a, d)?)?;
            }
        }
        for g in fams {
            out.add_family(rotate_far_family(g, d)?)?;
        }
    }
    for e in &d.arcs {
        out.insert(*e)?;
    }
    validate_rotation(x, &out, d)?;
    Ok(out)
}

/// A mutated pair with the verdicts before and after.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutationOutcome {
    pub x: ArcSet,
    pub y: ArcSet,
    /// The window the mutated pair was checked on.
    pub window: Window,
    pub before: PairReport,
    pub after: PairReport,
}

/// Mutates `(X, Y)` at `D ⊆ X ∩ Y` and re-checks the pair.
///
/// Rotation moves endpoints outside the divider span by exactly one step, so
/// the mutated pair is checked on `w` shrunk by one on each side. Unless
/// `force` is set the input pair has to be window-certified first.
pub fn mutate_pair(
    x: &ArcSet,
    y: &ArcSet,
    d: &DividerSet,
    w: &Window,
    force: bool,
) -> Result<MutationOutcome> {
    let before = check_pair(x, y, w)?;
    if !before.verdict && !force {
        return Err(Error::PairNotCertified(Box::new(before)));
    }
    for e in d.arcs() {
        if !w.contains_arc(e) || !x.contains(e)? || !y.contains(e)? {
            return Err(Error::DNotInCore(*e));
        }
    }
    let x2 = rotate_set(x, d)?;
    let y2 = rotate_set(y, d)?;
    let window = w.shrink(1)?;
    let after = check_pair(&x2, &y2, &window)?;
    Ok(MutationOutcome {
        x: x2,
        y: y2,
        window,
        before,
        after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(t: i64, u: i64) -> Arc {
        Arc::new(t, u).unwrap()
    }

    fn n3() -> ModelParams {
        ModelParams::new(3).unwrap()
    }

    fn d46() -> DividerSet {
        DividerSet::new(n3(), [arc(-4, 6)]).unwrap()
    }

    #[test]
    fn dividers_must_not_cross() {
        assert!(matches!(
            DividerSet::new(n3(), [arc(-4, 0), arc(-1, 3)]),
            Err(Error::CrossingDividers(..))
        ));
        assert!(DividerSet::new(n3(), [arc(3, 6)]).is_err());
        assert_eq!(d46().span(), Some((-4, 6)));
    }

    #[test]
    fn predecessor_examples() {
        let d = d46();
        assert_eq!(predecessor(-4, &arc(-4, 3), &d).unwrap(), 6);
        assert_eq!(predecessor(6, &arc(-7, 6), &d).unwrap(), -4);
        assert_eq!(predecessor(9, &arc(-4, 9), &d).unwrap(), 8);
        assert!(predecessor(5, &arc(-4, 9), &d).is_err());
        assert!(predecessor(-4, &arc(-4, 6), &d).is_err());
    }

    #[test]
    fn successor_examples() {
        let d = d46();
        assert_eq!(successor(6, &arc(2, 6), &d).unwrap(), -4);
        assert_eq!(successor(2, &arc(2, 6), &d).unwrap(), 3);
        let bare = DividerSet::empty(n3());
        assert_eq!(successor(11, &arc(0, 11), &bare).unwrap(), 12);
    }

    #[test]
    fn rotation_examples() {
        let d = d46();
        assert_eq!(rotate_arc(&arc(-4, 3), &d).unwrap(), arc(2, 6));
        assert_eq!(rotate_arc(&arc(-4, 9), &d).unwrap(), arc(-5, 8));
        assert_eq!(rotate_arc(&arc(-7, 6), &d).unwrap(), arc(-8, -4));
        assert_eq!(rotate_arc_inverse(&arc(2, 6), &d).unwrap(), arc(-4, 3));
        assert_eq!(rotate_arc_inverse(&arc(-5, 8), &d).unwrap(), arc(-4, 9));
        assert!(matches!(
            rotate_arc_inverse(&arc(-4, 6), &d),
            Err(Error::IncompatibleArc { .. })
        ));
        assert!(matches!(
            rotate_arc(&arc(-1, 9), &d),
            Err(Error::IncompatibleArc { .. })
        ));
    }

    #[test]
    fn nested_dividers_take_outermost_jump_and_innermost_wrap() {
        let p = ModelParams::new(1).unwrap();
        let d = DividerSet::new(p, [arc(0, 10), arc(5, 10), arc(0, 3)]).unwrap();
        // outside everything: jump over (0,10), not (5,10)
        assert_eq!(predecessor(10, &arc(-5, 10), &d).unwrap(), 0);
        // between (0,10) and (5,10): jump over (5,10) only
        assert_eq!(predecessor(10, &arc(4, 10), &d).unwrap(), 5);
        // inside (0,3): wrap to 3, not 10
        assert_eq!(predecessor(0, &arc(0, 2), &d).unwrap(), 3);
        // the cell 0,3,4,5,10
        assert_eq!(rotate_arc(&arc(3, 5), &d).unwrap(), arc(0, 4));
        assert_eq!(successor(10, &arc(4, 10), &d).unwrap(), 0);
        assert_eq!(rotate_arc_inverse(&arc(0, 4), &d).unwrap(), arc(3, 5));
    }

    #[test]
    fn set_rotation_finite() {
        let d = d46();
        let x = ArcSet::from_arcs(n3(), [arc(-4, 3), arc(-4, 6)]).unwrap();
        let r = rotate_set(&x, &d).unwrap();
        assert!(r.is_finite());
        assert_eq!(
            r.explicit().iter().copied().collect::<Vec<_>>(),
            vec![arc(-4, 6), arc(2, 6)]
        );
        let not_frame = ArcSet::from_arcs(n3(), [arc(-4, 3)]).unwrap();
        assert_eq!(
            rotate_set(&not_frame, &d),
            Err(Error::DNotInFrame(arc(-4, 6)))
        );
    }

    #[test]
    fn empty_dividers_shift_everything() {
        let d = DividerSet::empty(n3());
        let x = ArcSet::from_parts(
            n3(),
            [arc(0, 4), arc(-10, 3)],
            [
                FountainFamily::HalfRight { q: 8 },
                FountainFamily::LeftFan { p: 2, s_max: -5 },
            ],
        )
        .unwrap();
        let r = rotate_set(&x, &d).unwrap();
        let w = Window::new(-20, 20).unwrap();
        let shifted: Vec<Arc> = x
            .members_in(&Window::new(-19, 21).unwrap())
            .iter()
            .map(|a| a.shift(1))
            .collect();
        assert_eq!(r.members_in(&w), shifted);
    }

    #[test]
    fn triangle_route() {
        let d = d46();
        let r = mutation_via_triangle(&arc(-4, 3), &d).unwrap();
        assert_eq!(r.image, arc(2, 6));
        assert_eq!(r.via_triangle.left, arc(-4, 3));
        assert_eq!(r.via_triangle.right, arc(2, 6));
        assert_eq!(
            r.via_triangle.middle().collect::<Vec<_>>(),
            vec![arc(-4, 6)]
        );

        let r = mutation_via_triangle(&arc(-4, 9), &d).unwrap();
        assert_eq!(r.image, arc(-5, 8));
        assert!(r.via_triangle.middle().all(|m| d.contains(&m)));

        assert!(matches!(
            mutation_via_triangle(&arc(-1, 9), &d),
            Err(Error::IncompatibleArc { .. })
        ));
    }
}
