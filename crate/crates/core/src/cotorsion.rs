//! n-cotorsion pairs in the arc model.
//!
//! `(X, Y)` is an n-cotorsion pair exactly when `X = nc Y`, `Y = nc X`, every
//! right-fountain of `X` is a left-fountain of `X`, and every left-fountain of
//! `Y` is a right-fountain of `Y`. The two set equalities are checked on a
//! window; the fountain conditions are exact.

use serde::Serialize;

use crate::arc::{Arc, ModelParams};
use crate::arc_set::{ArcSet, Window};
use crate::error::{Error, Result};
use crate::hom_ext::ext_profile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Windowed,
    Exact,
}

/// `S = nc T` on a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetEquality {
    pub holds: bool,
    pub scope: Scope,
    /// In `nc T` but not in `S`.
    pub missing: Vec<Arc>,
    /// In `S` but not in `nc T`.
    pub extra: Vec<Arc>,
}

impl SetEquality {
    fn compare(s: &ArcSet, t: &ArcSet, w: &Window) -> Self {
        let members = s.members_in(w);
        let nc = t.nc_window(w);
        let missing: Vec<Arc> = nc
            .iter()
            .copied()
            .filter(|a| !s.contains_admissible(a))
            .collect();
        let extra: Vec<Arc> = members
            .into_iter()
            .filter(|a| t.crosses_admissible(a))
            .collect();
        SetEquality {
            holds: missing.is_empty() && extra.is_empty(),
            scope: Scope::Windowed,
            missing,
            extra,
        }
    }

    pub fn witnesses(&self) -> impl Iterator<Item = Arc> + '_ {
        self.missing.iter().chain(self.extra.iter()).copied()
    }
}

/// A fountain-locus inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocusCondition {
    pub holds: bool,
    pub scope: Scope,
    pub witness: Option<i64>,
}

impl LocusCondition {
    fn from_witness(witness: Option<i64>) -> Self {
        LocusCondition {
            holds: witness.is_none(),
            scope: Scope::Exact,
            witness,
        }
    }
}

/// Verdict on the four cotorsion-pair conditions, with witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub window: Window,
    pub x_equals_nc_y: SetEquality,
    pub y_equals_nc_x: SetEquality,
    pub x_contravariant: LocusCondition,
    pub y_covariant: LocusCondition,
    pub verdict: bool,
}

fn require_window(x: &ArcSet, y: &ArcSet, w: &Window) -> Result<()> {
    let margin = x.params().n() + 2;
    let span = [x.anchor_span(), y.anchor_span()]
        .into_iter()
        .flatten()
        .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)));
    if let Some((lo, hi)) = span {
        let (need_lo, need_hi) = (lo - margin, hi + margin);
        if !w.covers(need_lo, need_hi) {
            return Err(Error::WindowTooSmall {
                lo: w.lo(),
                hi: w.hi(),
                need_lo,
                need_hi,
            });
        }
    }
    Ok(())
}

fn same_params(x: &ArcSet, y: &ArcSet) -> Result<()> {
    if x.params() != y.params() {
        return Err(Error::Validation {
            locus: "pair".into(),
            message: format!(
                "sets use different n ({} and {})",
                x.params().n(),
                y.params().n()
            ),
        });
    }
    Ok(())
}

/// Checks whether `(X, Y)` is an n-cotorsion pair, window-certified on `w`.
pub fn check_pair(x: &ArcSet, y: &ArcSet, w: &Window) -> Result<PairReport> {
    same_params(x, y)?;
    require_window(x, y, w)?;
    let x_equals_nc_y = SetEquality::compare(x, y, w);
    let y_equals_nc_x = SetEquality::compare(y, x, w);
    let x_contravariant = LocusCondition::from_witness(x.finiteness_check().contravariant_witness);
    let y_covariant = LocusCondition::from_witness(y.finiteness_check().covariant_witness);
    let verdict =
        x_equals_nc_y.holds && y_equals_nc_x.holds && x_contravariant.holds && y_covariant.holds;
    Ok(PairReport {
        window: *w,
        x_equals_nc_y,
        y_equals_nc_x,
        x_contravariant,
        y_covariant,
        verdict,
    })
}

/// `X ∩ Y` inside the window.
pub fn core(x: &ArcSet, y: &ArcSet, w: &Window) -> Result<Vec<Arc>> {
    same_params(x, y)?;
    require_window(x, y, w)?;
    Ok(x.members_in(w)
        .into_iter()
        .filter(|a| y.contains_admissible(a))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rigidity {
    pub rigid: bool,
    pub witness: Option<(Arc, Arc)>,
}

/// `Ext^i(a,b) = 0` for all `1 <= i <= n` and all `a, b` in the set.
///
/// Runs both the Ext-profile test and the crossing test; a disagreement is an
/// error.
pub fn rigidity_check(arcs: &[Arc], p: &ModelParams) -> Result<Rigidity> {
    for a in arcs {
        a.require_admissible(p)?;
    }
    let mut witness = None;
    for a in arcs {
        for b in arcs {
            let by_ext = ext_profile(a, b, p)?.iter().any(|&d| d != 0);
            if by_ext != a.crosses(b) {
                return Err(Error::RigidityDisagreement(*a, *b));
            }
            if by_ext && witness.is_none() {
                witness = Some((*a, *b));
            }
        }
    }
    Ok(Rigidity {
        rigid: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc_set::FountainFamily;

    fn arc(t: i64, u: i64) -> Arc {
        Arc::new(t, u).unwrap()
    }

    fn n3() -> ModelParams {
        ModelParams::new(3).unwrap()
    }

    fn w20() -> Window {
        Window::new(-20, 20).unwrap()
    }

    #[test]
    fn empty_pair_fails() {
        let e = ArcSet::empty(n3());
        let r = check_pair(&e, &e, &w20()).unwrap();
        assert!(!r.x_equals_nc_y.holds);
        assert!(!r.verdict);
        assert!(r.x_contravariant.holds && r.y_covariant.holds);
    }

    #[test]
    fn window_too_small() {
        let x = ArcSet::from_arcs(n3(), [arc(-4, 3)]).unwrap();
        let r = check_pair(&x, &x, &Window::new(-5, 5).unwrap());
        assert_eq!(
            r,
            Err(Error::WindowTooSmall {
                lo: -5,
                hi: 5,
                need_lo: -9,
                need_hi: 8
            })
        );
        assert!(core(&x, &x, &Window::new(-5, 5).unwrap()).is_err());
    }

    #[test]
    fn cores() {
        let x = ArcSet::from_arcs(n3(), [arc(-4, 3), arc(-4, 6)]).unwrap();
        let y = ArcSet::from_arcs(n3(), [arc(0, 4)]).unwrap();
        assert!(core(&x, &y, &w20()).unwrap().is_empty());
        assert_eq!(core(&x, &x, &w20()).unwrap(), vec![arc(-4, 3), arc(-4, 6)]);
        let yy = ArcSet::from_parts(
            n3(),
            [arc(-4, 3), arc(-4, 6)],
            [FountainFamily::HalfLeft { p: -4 }],
        )
        .unwrap();
        assert_eq!(core(&x, &yy, &w20()).unwrap(), vec![arc(-4, 3), arc(-4, 6)]);
    }

    #[test]
    fn mixed_params_rejected() {
        let x = ArcSet::empty(n3());
        let y = ArcSet::empty(ModelParams::new(2).unwrap());
        assert!(matches!(
            check_pair(&x, &y, &w20()),
            Err(Error::Validation { .. })
        ));
    }

    #[test]
    fn rigidity() {
        let p = n3();
        assert!(rigidity_check(&[arc(-4, 3), arc(-4, 6)], &p).unwrap().rigid);
        let r = rigidity_check(&[arc(-4, 0), arc(-1, 3)], &p).unwrap();
        assert!(!r.rigid);
        assert_eq!(r.witness, Some((arc(-4, 0), arc(-1, 3))));
        assert!(rigidity_check(&[arc(2, 9)], &p).unwrap().rigid);
        assert!(rigidity_check(&[arc(3, 6)], &p).is_err());
    }
}
