//! Output formatting: doubles, JSON, tables and SVG.

use std::fmt::Write as _;
use std::io;

use serde::Serialize;
use totdom::Polynomial;

/// A double with 17 significant digits, enough to round-trip.
pub fn float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

struct Digits17;

impl serde_json::ser::Formatter for Digits17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, v: f64) -> io::Result<()> {
        w.write_all(float(v).as_bytes())
    }
}

/// Compact JSON with every double printed by [`float`].
pub fn json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17);
    value.serialize(&mut ser).expect("in-memory JSON");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

/// Summary fields printed by `poly`.
pub struct PolySummary<'a> {
    pub label: &'a str,
    pub order: usize,
    pub polynomial: &'a Polynomial,
}

impl PolySummary<'_> {
    fn coefficients(&self) -> Vec<String> {
        (0..=self.order.max(self.polynomial.degree().unwrap_or(0)))
            .map(|i| self.polynomial.coeff(i).to_string())
            .collect()
    }

    fn gamma(&self) -> Option<usize> {
        self.polynomial.lowest_degree().ok()
    }

    fn total(&self) -> String {
        self.polynomial
            .coeffs()
            .iter()
            .sum::<num_bigint::BigInt>()
            .to_string()
    }

    /// Coefficients are written as bare JSON integers of any length.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{{\"input\":{},",
            serde_json::to_string(self.label).unwrap()
        )
        .unwrap();
        write!(s, "\"order\":{},", self.order).unwrap();
        write!(s, "\"coefficients\":[{}],", self.coefficients().join(",")).unwrap();
        match self.gamma() {
            Some(g) => write!(s, "\"gamma_t\":{g},").unwrap(),
            None => s.push_str("\"gamma_t\":null,"),
        }
        write!(s, "\"total\":{},", self.total()).unwrap();
        match self.polynomial.is_unimodal() {
            Ok(u) => write!(s, "\"unimodal\":{},\"mode\":{}}}", u.unimodal, u.mode).unwrap(),
            Err(_) => s.push_str("\"unimodal\":null,\"mode\":null}"),
        }
        s
    }

    pub fn to_table(&self) -> String {
        let coeffs = self.coefficients();
        let width = coeffs.iter().map(String::len).max().unwrap_or(1).max(8);
        let iw = (coeffs.len() - 1).to_string().len().max(1);
        let mut s = String::new();
        writeln!(s, "input     {}", self.label).unwrap();
        writeln!(s, "order     {}", self.order).unwrap();
        writeln!(s, "{:>iw$}  {:>width$}", "i", "d_t(G,i)").unwrap();
        for (i, c) in coeffs.iter().enumerate() {
            writeln!(s, "{i:>iw$}  {c:>width$}").unwrap();
        }
        match self.gamma() {
            Some(g) => writeln!(s, "gamma_t   {g}").unwrap(),
            None => writeln!(s, "gamma_t   none").unwrap(),
        }
        writeln!(s, "total     {}", self.total()).unwrap();
        match self.polynomial.is_unimodal() {
            Ok(u) if u.unimodal => writeln!(s, "unimodal  yes (mode {})", u.mode).unwrap(),
            Ok(_) => writeln!(s, "unimodal  no").unwrap(),
            Err(_) => writeln!(s, "unimodal  n/a").unwrap(),
        }
        s
    }
}

/// One plotted root: parameter position in `[0, 1]` and the point.
pub struct PlotPoint {
    pub shade: f64,
    pub re: f64,
    pub im: f64,
}

const CANVAS: f64 = 640.0;
const MARGIN: f64 = 24.0;

fn tick_step(span: f64) -> f64 {
    let mut step = 1.0;
    while span / step > 24.0 {
        step *= 10.0;
    }
    step
}

/// Scatter plot of root loci on equal axes with the centre `(-1, 0)` marked.
pub fn svg(title: &str, points: &[PlotPoint]) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (-2.0f64, 0.5f64, -1.25f64, 1.25f64);
    for p in points {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    let span = (x1 - x0).max(y1 - y0) * 1.08;
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let (x0, y1) = (cx - span / 2.0, cy + span / 2.0);
    let scale = (CANVAS - 2.0 * MARGIN) / span;
    let px = |x: f64| MARGIN + (x - x0) * scale;
    let py = |y: f64| MARGIN + (y1 - y) * scale;
    let size = CANVAS;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(s, "<title>{}</title>", escape(title)).unwrap();
    writeln!(s, r#"<rect width="{size}" height="{size}" fill="white"/>"#).unwrap();
    let (lo, hi) = (MARGIN, CANVAS - MARGIN);
    writeln!(
        s,
        r##"<g stroke="#444" stroke-width="1"><line x1="{lo}" y1="{:.3}" x2="{hi}" y2="{:.3}"/><line x1="{:.3}" y1="{lo}" x2="{:.3}" y2="{hi}"/></g>"##,
        py(0.0),
        py(0.0),
        px(0.0),
        px(0.0)
    )
    .unwrap();
    let step = tick_step(span);
    let mut ticks = String::new();
    let mut t = (x0 / step).ceil() * step;
    while t <= x0 + span {
        write!(ticks, "M{:.3} {:.3}v6", px(t), py(0.0) - 3.0).unwrap();
        t += step;
    }
    let mut t = ((y1 - span) / step).ceil() * step;
    while t <= y1 {
        write!(ticks, "M{:.3} {:.3}h6", px(0.0) - 3.0, py(t)).unwrap();
        t += step;
    }
    writeln!(s, r##"<path d="{ticks}" stroke="#444" stroke-width="1"/>"##).unwrap();
    let (mx, my) = (px(-1.0), py(0.0));
    writeln!(
        s,
        r##"<path d="M{:.3} {:.3}l10 10M{:.3} {:.3}l10 -10" stroke="#d00" stroke-width="2"/>"##,
        mx - 5.0,
        my - 5.0,
        mx - 5.0,
        my + 5.0
    )
    .unwrap();
    s.push_str("<g fill-opacity=\"0.8\">\n");
    for p in points {
        writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="2.5" fill="hsl({:.1},70%,40%)"/>"#,
            px(p.re),
            py(p.im),
            240.0 * (1.0 - p.shade)
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
