//! Arcs on the integer line and the functors acting on them.
//!
//! An arc `(t,u)` with `t < u` stands for an indecomposable object of the
//! n-cluster category of type A∞ whenever it is n-admissible, that is
//! `u - t >= 2` and `u - t ≡ 1 (mod n)`. Admissibility is always checked
//! against an explicit [`ModelParams`], so the same [`Arc`] type serves every n.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The integer `n >= 1` selecting the category.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModelParams {
    n: i64,
}

impl ModelParams {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams(n));
        }
        Ok(Self { n })
    }

    #[inline]
    pub fn n(&self) -> i64 {
        self.n
    }

    /// Whether the integer pair `(t,u)` is an admissible arc. Total on all
    /// pairs; reversed or degenerate pairs are simply not admissible.
    #[inline]
    pub fn admits(&self, t: i64, u: i64) -> bool {
        u - t >= 2 && (u - t - 1).rem_euclid(self.n) == 0
    }
}

impl Serialize for ModelParams {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModelParams {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = i64::deserialize(d)?;
        ModelParams::new(n).map_err(serde::de::Error::custom)
    }
}

/// An ordered integer pair `(t,u)` with `t < u`.
///
/// Orders lexicographically by `(t,u)`, which is the display order used
/// throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    t: i64,
    u: i64,
}

impl Arc {
    /// Builds the arc joining `t` and `u`, reordering the endpoints if needed.
    pub fn new(t: i64, u: i64) -> Result<Self> {
        normalize(t, u)
    }

    #[inline]
    pub fn t(&self) -> i64 {
        self.t
    }

    #[inline]
    pub fn u(&self) -> i64 {
        self.u
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> i64 {
        self.u - self.t
    }

    pub fn is_admissible(&self, p: &ModelParams) -> bool {
        p.admits(self.t, self.u)
    }

    pub(crate) fn require_admissible(&self, p: &ModelParams) -> Result<()> {
        if self.is_admissible(p) {
            Ok(())
        } else {
            Err(Error::NonAdmissible {
                arc: *self,
                n: p.n(),
            })
        }
    }

    /// `Σ^k`, i.e. `(t-k, u-k)`. Negative `k` applies the inverse.
    #[inline]
    pub fn shift(&self, k: i64) -> Arc {
        Arc {
            t: self.t - k,
            u: self.u - k,
        }
    }

    /// The Serre functor `S = Σ^{n+1}`.
    #[inline]
    pub fn serre(&self, p: &ModelParams) -> Arc {
        self.shift(p.n() + 1)
    }

    /// The AR translation `τ = SΣ^{-1} = Σ^n`.
    #[inline]
    pub fn tau(&self, p: &ModelParams) -> Arc {
        self.shift(p.n())
    }

    /// Which of the `n` AR components the arc lies on (`u mod n`).
    pub fn component(&self, p: &ModelParams) -> Result<ComponentIndex> {
        self.require_admissible(p)?;
        Ok(ComponentIndex {
            idx: self.u.rem_euclid(p.n()),
            n: p.n(),
        })
    }

    /// Strict interleaving: `r<t<s<u` or `t<r<u<s`. Shared endpoints and
    /// nesting never cross.
    #[inline]
    pub fn crosses(&self, other: &Arc) -> bool {
        let (r, s) = (self.t, self.u);
        let (t, u) = (other.t, other.u);
        (r < t && t < s && s < u) || (t < r && r < u && u < s)
    }

    #[inline]
    pub fn has_endpoint(&self, p: i64) -> bool {
        self.t == p || self.u == p
    }

    /// `other` lies weakly inside `self`: `self.t <= other.t` and `other.u <= self.u`.
    #[inline]
    pub fn encloses(&self, other: &Arc) -> bool {
        self.t <= other.t && other.u <= self.u
    }
}

/// Orders a pair of distinct integers into an [`Arc`].
pub fn normalize(t: i64, u: i64) -> Result<Arc> {
    match t.cmp(&u) {
        std::cmp::Ordering::Less => Ok(Arc { t, u }),
        std::cmp::Ordering::Greater => Ok(Arc { t: u, u: t }),
        std::cmp::Ordering::Equal => Err(Error::DegeneratePair(t)),
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.t, self.u)
    }
}

impl FromStr for Arc {
    type Err = Error;

    /// Accepts `(t,u)`, `t,u` or `[t,u]`, with optional whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{message}: {s:?}"),
        };
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let (a, b) = body.split_once(',').ok_or_else(|| bad("expected (t,u)"))?;
        let t = a
            .trim()
            .parse::<i64>()
            .map_err(|_| bad("bad left endpoint"))?;
        let u = b
            .trim()
            .parse::<i64>()
            .map_err(|_| bad("bad right endpoint"))?;
        Arc::new(t, u)
    }
}

/// Parses a whitespace separated list such as `"(2,9) (-1,6)"`.
pub fn parse_arc_list(s: &str) -> Result<Vec<Arc>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        if let Some(stripped) = rest.strip_prefix('(') {
            let close = stripped.find(')').ok_or_else(|| Error::Parse {
                line: 1,
                column: s.len() - rest.len() + 1,
                message: "unclosed '('".into(),
            })?;
            out.push(stripped[..close].parse()?);
            rest = stripped[close + 1..].trim_start_matches([' ', ',', ';', '\t', '\n']);
        } else {
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            out.push(rest[..end].parse()?);
            rest = rest[end..].trim_start();
        }
    }
    Ok(out)
}

impl Serialize for Arc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.t, self.u].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [t, u] = <[i64; 2]>::deserialize(d)?;
        Arc::new(t, u).map_err(serde::de::Error::custom)
    }
}

/// One of the `n` copies of ZA∞ in the AR quiver, labelled by `u mod n`.
///
/// Residue 0 is `R`; applying Σ lowers the residue by one, so residue `i`
/// is the component `Σ^{(n-i) mod n} R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentIndex {
    idx: i64,
    n: i64,
}

impl ComponentIndex {
    #[inline]
    pub fn idx(&self) -> i64 {
        self.idx
    }

    /// The exponent `k` with this component equal to `Σ^k R`.
    pub fn suspension_power(&self) -> i64 {
        (-self.idx).rem_euclid(self.n)
    }

    pub fn label(&self) -> String {
        match self.suspension_power() {
            0 => "R".to_string(),
            1 => "ΣR".to_string(),
            k => format!("Σ^{k}R"),
        }
    }
}

impl fmt::Display for ComponentIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
