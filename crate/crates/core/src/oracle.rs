//! Brute-force cross-checks.
//!
//! Everything here is deliberately naive: exhaustive sweeps over windows,
//! explicit cell boundary cycles, enumeration of family members. The test
//! suites and the `oracle` command compare these against the closed forms
//! used elsewhere in the crate.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arc::{Arc, ModelParams};
use crate::arc_set::{ArcSet, Window};
use crate::hom_ext::{ext_dim, ext_profile, hom_dim};
use crate::mutation::{
    mutation_via_triangle, predecessor, rotate_arc, rotate_arc_inverse, successor, DividerSet,
};

/// Outcome of an exhaustive sweep over ordered pairs of arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: i64,
    pub window: Window,
    pub pairs: usize,
    pub mismatches: Vec<(Arc, Arc)>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn sweep(p: &ModelParams, w: &Window, mut bad: impl FnMut(&Arc, &Arc) -> bool) -> SweepReport {
    let arcs: Vec<Arc> = w.arcs(p).collect();
    let mut mismatches = Vec::new();
    for a in &arcs {
        for b in &arcs {
            if bad(a, b) {
                mismatches.push((*a, *b));
            }
        }
    }
    SweepReport {
        n: p.n(),
        window: *w,
        pairs: arcs.len() * arcs.len(),
        mismatches,
    }
}

/// Crossing agrees with non-vanishing of some `Ext^i`, `1 <= i <= n`, in both
/// argument orders.
pub fn crossing_ext_sweep(p: &ModelParams, w: &Window) -> SweepReport {
    sweep(p, w, |a, b| {
        let ab = ext_profile(a, b, p).expect("admissible").contains(&1);
        let ba = ext_profile(b, a, p).expect("admissible").contains(&1);
        a.crosses(b) != ab || ab != ba
    })
}

/// `Ext^i(x,y) = Ext^{n+1-i}(y,x)` and `Hom(x,y) = Hom(y,Sx)`.
pub fn serre_sweep(p: &ModelParams, w: &Window) -> SweepReport {
    let n = p.n();
    sweep(p, w, |x, y| {
        let ext_bad = (1..=n).any(|i| {
            ext_dim(x, y, i, p).expect("admissible")
                != ext_dim(y, x, n + 1 - i, p).expect("admissible")
        });
        let hom_bad = hom_dim(x, y, p).expect("admissible")
            != hom_dim(y, &x.serre(p), p).expect("admissible");
        ext_bad || hom_bad
    })
}

/// `crosses_set` decided by enumerating the set's members on a window.
pub fn enumerated_crosses(a: &Arc, set: &ArcSet, w: &Window) -> bool {
    set.members_in(w).iter().any(|b| b.crosses(a))
}

/// Explicit boundary cycle of the cell of `dividers` containing `a`.
///
/// Returns the vertices in increasing order and whether the cell is bounded.
/// The unbounded cell is truncated two steps beyond everything relevant.
pub fn cell_boundary(a: &Arc, dividers: &[Arc]) -> (Vec<i64>, bool) {
    let enclosing = dividers
        .iter()
        .filter(|e| *e != a && e.t() <= a.t() && a.u() <= e.u())
        .min_by_key(|e| e.u() - e.t());
    match enclosing {
        Some(e) => {
            let inner: Vec<&Arc> = dividers
                .iter()
                .filter(|c| *c != e && e.t() <= c.t() && c.u() <= e.u())
                .collect();
            let verts = (e.t()..=e.u())
                .filter(|&x| !inner.iter().any(|c| c.t() < x && x < c.u()))
                .collect();
            (verts, true)
        }
        None => {
            let lo = dividers.iter().map(|d| d.t()).chain([a.t()]).min().unwrap() - 2;
            let hi = dividers.iter().map(|d| d.u()).chain([a.u()]).max().unwrap() + 2;
            let verts = (lo..=hi)
                .filter(|&x| !dividers.iter().any(|c| c.t() < x && x < c.u()))
                .collect();
            (verts, false)
        }
    }
}

pub fn cell_walk_predecessor(p: i64, a: &Arc, dividers: &[Arc]) -> Option<i64> {
    let (verts, bounded) = cell_boundary(a, dividers);
    let i = verts.iter().position(|&v| v == p)?;
    Some(match (i, bounded) {
        (0, true) => *verts.last().unwrap(),
        (0, false) => p - 1,
        _ => verts[i - 1],
    })
}

pub fn cell_walk_successor(p: i64, a: &Arc, dividers: &[Arc]) -> Option<i64> {
    let (verts, bounded) = cell_boundary(a, dividers);
    let i = verts.iter().position(|&v| v == p)?;
    Some(if i + 1 == verts.len() {
        if bounded {
            verts[0]
        } else {
            p + 1
        }
    } else {
        verts[i + 1]
    })
}

/// One randomised rotation input: a divider set and a compatible arc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationCase {
    pub n: i64,
    pub dividers: Vec<Arc>,
    pub arc: Arc,
}

fn random_admissible(rng: &mut ChaCha8Rng, n: i64, lo: i64, hi: i64) -> Option<Arc> {
    let t = rng.gen_range(lo..=hi - 2);
    let max_j = (hi - t - 1) / n;
    if max_j < 1 {
        return None;
    }
    let j = rng.gen_range(1..=max_j);
    Arc::new(t, t + 1 + n * j).ok()
}

/// A reproducible corpus of rotation inputs.
///
/// `n` ranges over 1..=5, divider sets have up to `max_dividers` arcs with
/// endpoints in `[-span/2, span/2]`, and about half of the new dividers are
/// drawn nested inside or around an existing one.
pub fn rotation_corpus(
    seed: u64,
    count: usize,
    span: i64,
    max_dividers: usize,
) -> Vec<RotationCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (-span / 2, span / 2);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=5);
        let p = ModelParams::new(n).unwrap();
        let target = rng.gen_range(0..=max_dividers);
        let mut dividers: Vec<Arc> = Vec::new();
        for _ in 0..200 {
            if dividers.len() >= target {
                break;
            }
            let cand = if !dividers.is_empty() && rng.gen_bool(0.5) {
                let base = *dividers.choose(&mut rng).unwrap();
                if rng.gen_bool(0.6) {
                    random_admissible(&mut rng, n, base.t(), base.u())
                } else {
                    let l = rng.gen_range((base.t() - 6).max(lo)..=base.t());
                    let h = rng.gen_range(base.u()..=(base.u() + 6).min(hi));
                    random_admissible(&mut rng, n, l, h).filter(|c| c.encloses(&base))
                }
            } else {
                random_admissible(&mut rng, n, lo, hi)
            };
            let Some(c) = cand else { continue };
            if c.is_admissible(&p)
                && !dividers.contains(&c)
                && !dividers.iter().any(|d| d.crosses(&c))
            {
                dividers.push(c);
            }
        }
        let window = Window::new(lo, hi).unwrap();
        let candidates: Vec<Arc> = window
            .arcs(&p)
            .filter(|a| !dividers.contains(a) && !dividers.iter().any(|d| d.crosses(a)))
            .collect();
        if let Some(&arc) = candidates.choose(&mut rng) {
            dividers.sort();
            out.push(RotationCase { n, dividers, arc });
        }
    }
    out
}

/// Failures found on one rotation case, grouped by the property they break.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RotationCheck {
    /// Inverse rotation, admissibility and divider compatibility of the image.
    pub involution: Vec<String>,
    /// Agreement with the explicit cell walk.
    pub cell_walk: Vec<String>,
    /// Agreement with the extension-triangle route.
    pub triangle: Vec<String>,
}

impl RotationCheck {
    pub fn passed(&self) -> bool {
        self.involution.is_empty() && self.cell_walk.is_empty() && self.triangle.is_empty()
    }
}

pub fn check_rotation_case(case: &RotationCase) -> RotationCheck {
    let mut out = RotationCheck::default();
    let p = ModelParams::new(case.n).unwrap();
    let d = match DividerSet::new(p, case.dividers.iter().copied()) {
        Ok(d) => d,
        Err(e) => {
            out.involution.push(format!("bad divider set: {e}"));
            return out;
        }
    };
    let a = case.arc;
    match rotate_arc(&a, &d) {
        Ok(b) => {
            if !b.is_admissible(&p) || d.arcs().iter().any(|e| e.crosses(&b)) {
                out.involution
                    .push(format!("image {b} of {a} is not compatible"));
            }
            match rotate_arc_inverse(&b, &d) {
                Ok(back) if back == a => {}
                Ok(back) => out.involution.push(format!("{a} -> {b} -> {back}")),
                Err(e) => out.involution.push(format!("inverse of {b} failed: {e}")),
            }
            for q in [b.t(), b.u()] {
                let fast = successor(q, &b, &d).ok();
                let slow = cell_walk_successor(q, &b, &case.dividers);
                if fast != slow {
                    out.cell_walk
                        .push(format!("successor({q}, {b}): {fast:?} vs walk {slow:?}"));
                }
            }
        }
        Err(e) => out.involution.push(format!("rotation of {a} failed: {e}")),
    }
    for q in [a.t(), a.u()] {
        let fast = predecessor(q, &a, &d).ok();
        let slow = cell_walk_predecessor(q, &a, &case.dividers);
        if fast != slow {
            out.cell_walk
                .push(format!("predecessor({q}, {a}): {fast:?} vs walk {slow:?}"));
        }
    }
    match mutation_via_triangle(&a, &d) {
        Ok(r) => {
            if let Some(m) = r.via_triangle.middle().find(|m| !d.contains(m)) {
                out.triangle.push(format!("middle summand {m} not in D"));
            }
        }
        Err(e) => out.triangle.push(e.to_string()),
    }
    out
}

/// A random finite set of at most `max_arcs` admissible arcs with endpoints
/// in `[lo, lo + span]`.
pub fn random_finite_set(
    rng: &mut ChaCha8Rng,
    p: &ModelParams,
    max_arcs: usize,
    lo: i64,
    span: i64,
) -> ArcSet {
    let w = Window::new(lo, lo + span).unwrap();
    let pool: Vec<Arc> = w.arcs(p).collect();
    let k = rng.gen_range(0..=max_arcs);
    let arcs: Vec<Arc> = pool.choose_multiple(rng, k).copied().collect();
    ArcSet::from_arcs(*p, arcs).expect("pool arcs are admissible")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
