//! Static pictures: arc diagrams as SVG and per-component text grids.
//!
//! Output depends only on the document and the spec. Arcs are drawn in
//! `(t,u)` order and every coordinate is an integer, so two runs produce the
//! same bytes.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::arc::Arc;
use crate::arc_set::{ArcSet, Window};
use crate::error::{Error, Result};
use crate::io::Document;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderStyle {
    Svg,
    Text,
}

impl FromStr for RenderStyle {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "svg" => Ok(RenderStyle::Svg),
            "text" => Ok(RenderStyle::Text),
            other => Err(format!("unknown style {other:?}, expected svg or text")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub window: Window,
    pub style: RenderStyle,
    /// Set drawn with the highlight stroke.
    pub highlight: Option<String>,
    /// Sets to draw; `None` draws every set in the document.
    pub sets: Option<Vec<String>>,
    /// ANSI colour for the highlight in text mode.
    pub color: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub bytes: Vec<u8>,
    pub arcs: usize,
    pub highlighted: usize,
    pub warnings: Vec<String>,
}

const UNIT: i64 = 30;
const MARGIN: i64 = 30;

fn collect(doc: &Document, spec: &RenderSpec) -> Result<(Vec<Arc>, BTreeSet<Arc>, Vec<String>)> {
    let names: Vec<String> = match &spec.sets {
        Some(v) => v.clone(),
        None => doc.sets.keys().cloned().collect(),
    };
    let mut warnings = Vec::new();
    let mut arcs = BTreeSet::new();
    let mut check = |name: &str, set: &ArcSet| -> Result<Vec<Arc>> {
        let members = set.members_in(&spec.window);
        if members.is_empty() {
            if !set.is_finite() {
                warnings.push(format!(
                    "set {name} has no member inside {} (its families extend beyond it)",
                    spec.window
                ));
            } else if let Some((lo, hi)) = set.anchor_span() {
                return Err(Error::WindowTooSmall {
                    lo: spec.window.lo(),
                    hi: spec.window.hi(),
                    need_lo: lo,
                    need_hi: hi,
                });
            }
        }
        Ok(members)
    };
    for name in &names {
        arcs.extend(check(name, doc.set(name)?)?);
    }
    let mut highlighted = BTreeSet::new();
    if let Some(h) = &spec.highlight {
        highlighted.extend(check(h, doc.set(h)?)?);
        arcs.extend(highlighted.iter().copied());
    }
    Ok((arcs.into_iter().collect(), highlighted, warnings))
}

pub fn render(doc: &Document, spec: &RenderSpec) -> Result<Rendered> {
    let (arcs, highlighted, warnings) = collect(doc, spec)?;
    let bytes = match spec.style {
        RenderStyle::Svg => svg(&arcs, &highlighted, &spec.window),
        RenderStyle::Text => text(doc, &arcs, &highlighted, &spec.window, spec.color),
    };
    Ok(Rendered {
        bytes: bytes.into_bytes(),
        arcs: arcs.len(),
        highlighted: highlighted.len(),
        warnings,
    })
}

fn svg(arcs: &[Arc], highlighted: &BTreeSet<Arc>, w: &Window) -> String {
    let span = w.hi() - w.lo();
    let max_len = arcs.iter().map(Arc::len).max().unwrap_or(0);
    let width = span * UNIT + 2 * MARGIN;
    let base = MARGIN + max_len * UNIT / 2;
    let height = base + 2 * MARGIN;
    let x = |v: i64| MARGIN + (v - w.lo()) * UNIT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    s.push_str(concat!(
        "<style>",
        ".axis{stroke:#000;stroke-width:1}",
        ".tick{stroke:#000;stroke-width:1}",
        ".label{font:10px sans-serif;text-anchor:middle}",
        ".arc{fill:none;stroke:#555;stroke-width:1.5}",
        ".arc.highlight{stroke:#d62728;stroke-width:3}",
        "</style>\n"
    ));
    let _ = writeln!(
        s,
        r#"<line class="axis" x1="{}" y1="{base}" x2="{}" y2="{base}"/>"#,
        x(w.lo()),
        x(w.hi())
    );
    for v in w.lo()..=w.hi() {
        let _ = writeln!(
            s,
            r#"<line class="tick" x1="{0}" y1="{1}" x2="{0}" y2="{2}"/><text class="label" x="{0}" y="{3}">{v}</text>"#,
            x(v),
            base - 4,
            base + 4,
            base + 18
        );
    }
    for a in arcs {
        let r = a.len() * UNIT / 2;
        let class = if highlighted.contains(a) {
            "arc highlight"
        } else {
            "arc"
        };
        let _ = writeln!(
            s,
            r#"<path class="{class}" data-arc="{a}" d="M {} {base} A {r} {r} 0 0 1 {} {base}"/>"#,
            x(a.t()),
            x(a.u())
        );
    }
    s.push_str("</svg>\n");
    s
}

fn text(
    doc: &Document,
    arcs: &[Arc],
    highlighted: &BTreeSet<Arc>,
    w: &Window,
    color: bool,
) -> String {
    let p = doc.n;
    let n = p.n();
    let cols = (w.hi() - w.lo() + 1) as usize;
    let label_width = arcs
        .iter()
        .map(|a| a.to_string().len())
        .max()
        .unwrap_or(0)
        .max(5);
    let mut s = String::new();
    let _ = writeln!(s, "n = {n}, window {w}, {} arcs", arcs.len());
    for residue in 0..n {
        let bucket: Vec<&Arc> = arcs
            .iter()
            .filter(|a| a.u().rem_euclid(n) == residue)
            .collect();
        let label = bucket
            .first()
            .and_then(|a| a.component(&p).ok())
            .map(|c| c.label())
            .unwrap_or_else(|| {
                let k = (-residue).rem_euclid(n);
                match k {
                    0 => "R".into(),
                    1 => "ΣR".into(),
                    k => format!("Σ^{k}R"),
                }
            });
        let _ = writeln!(
            s,
            "\ncomponent {label} (u ≡ {residue} mod {n}): {} arcs",
            bucket.len()
        );
        for a in bucket {
            let mut row = vec!['.'; cols];
            for v in a.t()..=a.u() {
                row[(v - w.lo()) as usize] = '-';
            }
            row[(a.t() - w.lo()) as usize] = '[';
            row[(a.u() - w.lo()) as usize] = ']';
            let row: String = row.into_iter().collect();
            let mark = if highlighted.contains(a) { '*' } else { ' ' };
            let name = format!("{a:>label_width$}");
            if mark == '*' && color {
                let _ = writeln!(s, "{mark} \x1b[1;31m{name}  {row}\x1b[0m");
            } else {
                let _ = writeln!(s, "{mark} {name}  {row}");
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::ModelParams;
    use crate::arc_set::FountainFamily;

    fn arc(t: i64, u: i64) -> Arc {
        Arc::new(t, u).unwrap()
    }

    fn doc() -> Document {
        let p = ModelParams::new(3).unwrap();
        let mut d = Document::new(p);
        d.sets.insert(
            "X".into(),
            ArcSet::from_arcs(p, [arc(-4, 3), arc(-4, 6)]).unwrap(),
        );
        d.sets
            .insert("D".into(), ArcSet::from_arcs(p, [arc(-4, 6)]).unwrap());
        d.sets.insert("E".into(), ArcSet::empty(p));
        d
    }

    fn spec(style: RenderStyle, sets: &[&str], highlight: Option<&str>) -> RenderSpec {
        RenderSpec {
            window: Window::new(-8, 10).unwrap(),
            style,
            highlight: highlight.map(String::from),
            sets: Some(sets.iter().map(|s| s.to_string()).collect()),
            color: false,
        }
    }

    #[test]
    fn svg_counts_and_determinism() {
        let d = doc();
        let sp = spec(RenderStyle::Svg, &["X"], Some("D"));
        let r = render(&d, &sp).unwrap();
        let text = String::from_utf8(r.bytes.clone()).unwrap();
        assert_eq!(text.matches("<path ").count(), 2);
        assert_eq!(text.matches("class=\"arc highlight\"").count(), 1);
        assert_eq!(text.matches("class=\"tick\"").count(), 19);
        assert_eq!(r.bytes, render(&d, &sp).unwrap().bytes);
    }

    #[test]
    fn empty_set_gives_ticks_only() {
        let r = render(&doc(), &spec(RenderStyle::Svg, &["E"], None)).unwrap();
        let text = String::from_utf8(r.bytes).unwrap();
        assert_eq!(text.matches("<path ").count(), 0);
        assert!(text.contains("class=\"tick\""));
    }

    #[test]
    fn window_too_small() {
        let mut sp = spec(RenderStyle::Svg, &["X"], None);
        sp.window = Window::new(10, 20).unwrap();
        assert!(matches!(
            render(&doc(), &sp),
            Err(Error::WindowTooSmall { .. })
        ));
        let mut d = doc();
        let p = d.n;
        d.sets.insert(
            "F".into(),
            ArcSet::from_parts(p, [], [FountainFamily::HalfLeft { p: -30 }]).unwrap(),
        );
        sp.sets = Some(vec!["F".into()]);
        let r = render(&d, &sp).unwrap();
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn text_buckets_by_component() {
        let p = ModelParams::new(3).unwrap();
        let mut d = Document::new(p);
        let w = Window::new(-9, 15).unwrap();
        d.sets
            .insert("A".into(), ArcSet::from_arcs(p, w.arcs(&p)).unwrap());
        let sp = RenderSpec {
            window: w,
            style: RenderStyle::Text,
            highlight: None,
            sets: None,
            color: false,
        };
        let out = String::from_utf8(render(&d, &sp).unwrap().bytes).unwrap();
        assert_eq!(out.matches("\ncomponent ").count(), 3);
        let total: usize = w.arcs(&p).count();
        let per: Vec<usize> = (0..3)
            .map(|r| w.arcs(&p).filter(|a| a.u().rem_euclid(3) == r).count())
            .collect();
        assert_eq!(per.iter().sum::<usize>(), total);
        for (r, k) in per.iter().enumerate() {
            assert!(out.contains(&format!("(u ≡ {r} mod 3): {k} arcs")));
        }
        assert!(!out.contains('\x1b'));
    }
}
