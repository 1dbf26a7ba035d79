//! Possibly infinite sets of admissible arcs.
//!
//! An [`ArcSet`] is a finite set of explicit arcs together with a list of
//! [`FountainFamily`] descriptors, each of which stands for an infinite set
//! with a closed-form membership and crossing test. All pointwise questions
//! (membership, "does this arc cross the set") are answered exactly; only
//! enumeration is truncated to a [`Window`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arc::{Arc, ModelParams};
use crate::error::{Error, Result};
use crate::region::IntRegion;

/// Inclusive integer interval `[lo, hi]` used to truncate enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains_point(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_arc(&self, a: &Arc) -> bool {
        self.lo <= a.t() && a.u() <= self.hi
    }

    pub fn covers(&self, lo: i64, hi: i64) -> bool {
        self.lo <= lo && hi <= self.hi
    }

    /// Every admissible arc with both endpoints in the window, in `(t,u)` order.
    pub fn arcs(&self, p: &ModelParams) -> impl Iterator<Item = Arc> {
        let (lo, hi, n) = (self.lo, self.hi, p.n());
        (lo..=hi).flat_map(move |t| {
            (t + 2..=hi)
                .filter(move |u| (u - t - 1) % n == 0)
                .map(move |u| Arc::new(t, u).expect("t < u"))
        })
    }

    /// `[lo + k, hi - k]`.
    pub fn shrink(&self, k: i64) -> Result<Window> {
        Window::new(self.lo + k, self.hi - k)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `LO..HI`, inclusive on both ends.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected LO..HI, got {s:?}"),
        };
        let (a, b) = s.trim().split_once("..").ok_or_else(parse_err)?;
        let lo = a.trim().parse().map_err(|_| parse_err())?;
        let hi = b.trim().parse().map_err(|_| parse_err())?;
        Window::new(lo, hi)
    }
}

/// Closed-form infinite arc families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FountainFamily {
    /// All admissible `(s,p)` with `s <= s_max`.
    LeftFan { p: i64, s_max: i64 },
    /// All admissible `(p,u)` with `u >= u_min`.
    RightFan { p: i64, u_min: i64 },
    /// All admissible `(k,l)` with `k <= k_max` and `l >= l_min`.
    Band { k_max: i64, l_min: i64 },
    /// All admissible arcs with both endpoints `<= p`.
    HalfLeft { p: i64 },
    /// All admissible arcs with both endpoints `>= q`.
    HalfRight { q: i64 },
}

// Largest x <= bound with x ≡ residue (mod n).
fn largest_le(bound: i64, residue: i64, n: i64) -> i64 {
    bound - (bound - residue).rem_euclid(n)
}

// Smallest x >= bound with x ≡ residue (mod n).
fn smallest_ge(bound: i64, residue: i64, n: i64) -> i64 {
    bound + (residue - bound).rem_euclid(n)
}

impl FountainFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFamily(m));
        match *self {
            FountainFamily::LeftFan { p, s_max } if s_max >= p => bad(format!(
                "left_fan needs s_max < p, got p={p}, s_max={s_max}"
            )),
            FountainFamily::RightFan { p, u_min } if u_min <= p => bad(format!(
                "right_fan needs u_min > p, got p={p}, u_min={u_min}"
            )),
            FountainFamily::Band { k_max, l_min } if k_max >= l_min => bad(format!(
                "band needs k_max < l_min, got k_max={k_max}, l_min={l_min}"
            )),
            _ => Ok(()),
        }
    }

    /// Membership for an arc already known to be admissible.
    pub fn contains(&self, a: &Arc) -> bool {
        match *self {
            FountainFamily::LeftFan { p, s_max } => a.u() == p && a.t() <= s_max,
            FountainFamily::RightFan { p, u_min } => a.t() == p && a.u() >= u_min,
            FountainFamily::Band { k_max, l_min } => a.t() <= k_max && a.u() >= l_min,
            FountainFamily::HalfLeft { p } => a.u() <= p,
            FountainFamily::HalfRight { q } => a.t() >= q,
        }
    }

    /// Whether some member of the family crosses `a`.
    pub fn crosses(&self, a: &Arc, params: &ModelParams) -> bool {
        let n = params.n();
        let (t, u) = (a.t(), a.u());
        match *self {
            FountainFamily::LeftFan { p, s_max } => {
                if t < p && p < u {
                    // feet s run off to -∞, any s < t will do
                    return true;
                }
                if u < p {
                    // need a foot s with t < s < u
                    let hi = (u - 1).min(s_max).min(p - 2);
                    return largest_le(hi, p - 1, n) > t;
                }
                false
            }
            FountainFamily::RightFan { p, u_min } => {
                if t < p && p < u {
                    return true;
                }
                if p < t {
                    let lo = (t + 1).max(u_min).max(p + 2);
                    return smallest_ge(lo, p + 1, n) < u;
                }
                false
            }
            FountainFamily::Band { k_max, l_min } => {
                // (k,l) with k < t < l < u, k free towards -∞
                let left_cut = (t + 1).max(l_min) < u;
                // (k,l) with t < k < u < l, l free towards +∞
                let right_cut = t < (u - 1).min(k_max);
                left_cut || right_cut
            }
            FountainFamily::HalfLeft { p } => t < p,
            FountainFamily::HalfRight { q } => u > q,
        }
    }

    /// Adds this family's left- and right-fountains to the given loci.
    pub fn add_loci(&self, left: &mut IntRegion, right: &mut IntRegion) {
        match *self {
            FountainFamily::LeftFan { p, .. } => left.add_point(p),
            FountainFamily::RightFan { p, .. } => right.add_point(p),
            FountainFamily::Band { k_max, l_min } => {
                right.add_left_ray(k_max);
                left.add_right_ray(l_min);
            }
            FountainFamily::HalfLeft { p } => left.add_left_ray(p),
            FountainFamily::HalfRight { q } => right.add_right_ray(q),
        }
    }

    pub fn parameters(&self) -> [i64; 2] {
        match *self {
            FountainFamily::LeftFan { p, s_max } => [p, s_max],
            FountainFamily::RightFan { p, u_min } => [p, u_min],
            FountainFamily::Band { k_max, l_min } => [k_max, l_min],
            FountainFamily::HalfLeft { p } => [p, p],
            FountainFamily::HalfRight { q } => [q, q],
        }
    }

    /// The image of the family under `Σ^k`.
    pub fn shift(&self, k: i64) -> FountainFamily {
        match *self {
            FountainFamily::LeftFan { p, s_max } => FountainFamily::LeftFan {
                p: p - k,
                s_max: s_max - k,
            },
            FountainFamily::RightFan { p, u_min } => FountainFamily::RightFan {
                p: p - k,
                u_min: u_min - k,
            },
            FountainFamily::Band { k_max, l_min } => FountainFamily::Band {
                k_max: k_max - k,
                l_min: l_min - k,
            },
            FountainFamily::HalfLeft { p } => FountainFamily::HalfLeft { p: p - k },
            FountainFamily::HalfRight { q } => FountainFamily::HalfRight { q: q - k },
        }
    }
}

impl fmt::Display for FountainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FountainFamily::LeftFan { p, s_max } => write!(f, "left_fan(p={p}, s_max={s_max})"),
            FountainFamily::RightFan { p, u_min } => write!(f, "right_fan(p={p}, u_min={u_min})"),
            FountainFamily::Band { k_max, l_min } => {
                write!(f, "band(k_max={k_max}, l_min={l_min})")
            }
            FountainFamily::HalfLeft { p } => write!(f, "half_left(p={p})"),
            FountainFamily::HalfRight { q } => write!(f, "half_right(q={q})"),
        }
    }
}

/// Left- and right-fountain loci of a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FountainLoci {
    pub left: IntRegion,
    pub right: IntRegion,
}

/// Outcome of the two fountain inclusions governing functorial finiteness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Finiteness {
    /// Every right-fountain is a left-fountain.
    pub contravariant_ok: bool,
    pub contravariant_witness: Option<i64>,
    /// Every left-fountain is a right-fountain.
    pub covariant_ok: bool,
    pub covariant_witness: Option<i64>,
}

/// A crossing pair of members whose admissible corner arc is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PtolemyViolation {
    pub pair: (Arc, Arc),
    pub missing: Arc,
}

/// A subcategory, as a set of admissible arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSet {
    params: ModelParams,
    explicit: BTreeSet<Arc>,
    families: Vec<FountainFamily>,
}

impl ArcSet {
    pub fn empty(params: ModelParams) -> Self {
        Self {
            params,
            explicit: BTreeSet::new(),
            families: Vec::new(),
        }
    }

    pub fn from_arcs(params: ModelParams, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut set = Self::empty(params);
        for a in arcs {
            set.insert(a)?;
        }
        Ok(set)
    }

    pub fn from_parts(
        params: ModelParams,
        arcs: impl IntoIterator<Item = Arc>,
        families: impl IntoIterator<Item = FountainFamily>,
    ) -> Result<Self> {
        let mut set = Self::from_arcs(params, arcs)?;
        for f in families {
            set.add_family(f)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, a: Arc) -> Result<()> {
        a.require_admissible(&self.params)?;
        self.explicit.insert(a);
        Ok(())
    }

    pub fn add_family(&mut self, f: FountainFamily) -> Result<()> {
        f.validate()?;
        self.families.push(f);
        Ok(())
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn explicit(&self) -> &BTreeSet<Arc> {
        &self.explicit
    }

    pub fn families(&self) -> &[FountainFamily] {
        &self.families
    }

    pub fn is_finite(&self) -> bool {
        self.families.is_empty()
    }

    /// Smallest and largest integer mentioned by the set, counting explicit
    /// endpoints and family parameters.
    pub fn anchor_span(&self) -> Option<(i64, i64)> {
        let pts = self
            .explicit
            .iter()
            .flat_map(|a| [a.t(), a.u()])
            .chain(self.families.iter().flat_map(|f| f.parameters()));
        pts.fold(None, |acc, x| match acc {
            None => Some((x, x)),
            Some((lo, hi)) => Some((lo.min(x), hi.max(x))),
        })
    }

    pub fn contains(&self, a: &Arc) -> Result<bool> {
        a.require_admissible(&self.params)?;
        Ok(self.contains_admissible(a))
    }

    pub(crate) fn contains_admissible(&self, a: &Arc) -> bool {
        self.explicit.contains(a) || self.families.iter().any(|f| f.contains(a))
    }

    /// Whether some member of the set crosses `a`.
    pub fn crosses(&self, a: &Arc) -> Result<bool> {
        a.require_admissible(&self.params)?;
        Ok(self.crosses_admissible(a))
    }

    pub(crate) fn crosses_admissible(&self, a: &Arc) -> bool {
        self.explicit.iter().any(|b| b.crosses(a))
            || self.families.iter().any(|f| f.crosses(a, &self.params))
    }

    /// The first explicit member crossing `a`, if any. Families are not
    /// consulted.
    pub fn explicit_crossing(&self, a: &Arc) -> Option<Arc> {
        self.explicit.iter().copied().find(|b| b.crosses(a))
    }

    /// Members with both endpoints in the window, sorted by `(t,u)`.
    pub fn members_in(&self, w: &Window) -> Vec<Arc> {
        if self.is_finite() {
            return self
                .explicit
                .iter()
                .copied()
                .filter(|a| w.contains_arc(a))
                .collect();
        }
        w.arcs(&self.params)
            .filter(|a| self.contains_admissible(a))
            .collect()
    }

    /// `nc(S)` restricted to the window: admissible arcs in `w` crossing no member.
    pub fn nc_window(&self, w: &Window) -> Vec<Arc> {
        w.arcs(&self.params)
            .filter(|a| !self.crosses_admissible(a))
            .collect()
    }

    pub fn fountain_loci(&self) -> FountainLoci {
        let mut left = IntRegion::empty();
        let mut right = IntRegion::empty();
        for f in &self.families {
            f.add_loci(&mut left, &mut right);
        }
        FountainLoci { left, right }
    }

    pub fn finiteness_check(&self) -> Finiteness {
        let FountainLoci { left, right } = self.fountain_loci();
        let contravariant_witness = right.first_outside(&left);
        let covariant_witness = left.first_outside(&right);
        Finiteness {
            contravariant_ok: contravariant_witness.is_none(),
            contravariant_witness,
            covariant_ok: covariant_witness.is_none(),
            covariant_witness,
        }
    }

    /// Members inside the window that cross no member of the whole set.
    pub fn frame(&self, w: &Window) -> Vec<Arc> {
        self.members_in(w)
            .into_iter()
            .filter(|a| !self.crosses_admissible(a))
            .collect()
    }

    /// The first crossing pair in the window whose admissible corner is missing.
    pub fn ptolemy_violation(&self, w: &Window) -> Option<PtolemyViolation> {
        let members = self.members_in(w);
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                if !a.crosses(b) {
                    continue;
                }
                let corners = [
                    (a.t(), b.t()),
                    (a.t(), b.u()),
                    (a.u(), b.t()),
                    (a.u(), b.u()),
                ];
                for (x, y) in corners {
                    let Ok(c) = Arc::new(x, y) else { continue };
                    if c.is_admissible(&self.params) && !self.contains_admissible(&c) {
                        return Some(PtolemyViolation {
                            pair: (*a, *b),
                            missing: c,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_ptolemy_window(&self, w: &Window) -> bool {
        self.ptolemy_violation(w).is_none()
    }

    /// Decides `a ∈ nc nc S` for a finite set.
    pub fn in_nc_nc(&self, a: &Arc) -> Result<bool> {
        Ok(self.nc_nc_obstruction(a)?.is_none())
    }

    /// An arc crossing `a` that crosses nothing in `S` (so `a ∉ nc nc S`).
    ///
    /// Past the extreme endpoint of `S ∪ {a}` every crossing test is constant,
    /// so it suffices to search endpoints within `n+2` of that span, which
    /// contains every residue class mod n on both sides.
    pub fn nc_nc_obstruction(&self, a: &Arc) -> Result<Option<Arc>> {
        if !self.is_finite() {
            return Err(Error::UnsupportedFamilies(self.families.len()));
        }
        a.require_admissible(&self.params)?;
        let (lo, hi) = self
            .explicit
            .iter()
            .fold((a.t(), a.u()), |(lo, hi), b| (lo.min(b.t()), hi.max(b.u())));
        let margin = self.params.n() + 2;
        let w = Window::new(lo - margin, hi + margin)?;
        Ok(w.arcs(&self.params)
            .find(|b| b.crosses(a) && !self.crosses_admissible(b)))
    }
}
