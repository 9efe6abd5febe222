//! SVG chord diagram of a simple element: punctures on a horizontal line,
//! each block drawn as nested arcs above it.

use std::fmt::Write;

use crate::ncp::NoncrossingPartition;

const SPACING: f64 = 40.0;
const MARGIN: f64 = 30.0;

/// Standalone SVG 1.1 document for `a`.
pub fn simple_to_svg(a: &NoncrossingPartition) -> String {
    let n = a.n();
    let x = |i: usize| MARGIN + SPACING * (i as f64 - 1.0);
    let width = 2.0 * MARGIN + SPACING * (n as f64 - 1.0);
    let top = SPACING * (n as f64 - 1.0) / 2.0 + MARGIN;
    let base = top;
    let height = top + 2.0 * MARGIN;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "<title>{a}</title>");
    let _ = writeln!(
        s,
        r#"<line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="gray" stroke-width="1"/>"#,
        x(1) - MARGIN / 2.0,
        x(n) + MARGIN / 2.0
    );
    for block in a.nontrivial_blocks() {
        // block is decreasing; join neighbours, and close the outer arc
        let mut arcs: Vec<(usize, usize)> = block.windows(2).map(|w| (w[1], w[0])).collect();
        if block.len() > 2 {
            arcs.push((*block.last().unwrap(), block[0]));
        }
        for (lo, hi) in arcs {
            let r = (x(hi) - x(lo)) / 2.0;
            let _ = writeln!(
                s,
                r#"<path d="M {} {base} A {r} {r} 0 0 1 {} {base}" fill="none" stroke="black" stroke-width="1.5"/>"#,
                x(lo),
                x(hi)
            );
        }
    }
    for i in 1..=n {
        let _ = writeln!(
            s,
            r#"<circle cx="{}" cy="{base}" r="4" fill="black"/>"#,
            x(i)
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="middle">{i}</text>"#,
            x(i),
            base + 20.0
        );
    }
    s.push_str("</svg>\n");
    s
}
