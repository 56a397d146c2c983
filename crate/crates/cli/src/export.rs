//! DOT and SVG renderings of topology graphs.

use std::fmt::Write;

use ccq_core::topo2d::{TopologyGraph, VertexKind};

fn coords(g: &TopologyGraph) -> Vec<(usize, f64, f64, VertexKind)> {
    g.vertices.iter().map(|v| (v.id, v.x.to_f64(), v.y.to_f64(), v.kind)).collect()
}

/// One undirected graph named `name`. Several graphs may be concatenated
/// into one file.
pub fn to_dot(g: &TopologyGraph, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {name} {{").unwrap();
    for (id, x, y, kind) in coords(g) {
        writeln!(s, "  v{id} [kind={}, pos=\"{x:.6},{y:.6}!\"];", kind.as_str()).unwrap();
    }
    for (a, b) in &g.edges {
        writeln!(s, "  v{a} -- v{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

fn color(kind: VertexKind) -> &'static str {
    match kind {
        VertexKind::Regular => "#333333",
        VertexKind::XCritical => "#c0392b",
        VertexKind::ApparentNode => "#2463b3",
        VertexKind::Control => "#1e8449",
    }
}

const PANEL: f64 = 400.0;
const MARGIN: f64 = 20.0;

/// Side-by-side panels, one per graph, each scaled to its own bounding box.
pub fn to_svg(panels: &[(&str, &TopologyGraph)]) -> String {
    let width = PANEL * panels.len().max(1) as f64;
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{}\" viewBox=\"0 0 {width} {}\">",
        PANEL + 20.0,
        PANEL + 20.0
    )
    .unwrap();
    for (k, (title, g)) in panels.iter().enumerate() {
        let pts = coords(g);
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(_, x, y, _) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let scale = (PANEL - 2.0 * MARGIN) / span;
        let ox = k as f64 * PANEL;
        let map = |x: f64, y: f64| (ox + MARGIN + (x - x0) * scale, 20.0 + PANEL - MARGIN - (y - y0) * scale);
        writeln!(s, "  <g id=\"{title}\">").unwrap();
        writeln!(s, "    <text x=\"{:.1}\" y=\"14\" font-family=\"sans-serif\" font-size=\"12\">{title}</text>", ox + MARGIN)
            .unwrap();
        for (a, b) in &g.edges {
            let pa = pts.iter().find(|p| p.0 == *a).unwrap();
            let pb = pts.iter().find(|p| p.0 == *b).unwrap();
            let (ax, ay) = map(pa.1, pa.2);
            let (bx, by) = map(pb.1, pb.2);
            writeln!(
                s,
                "    <line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{bx:.2}\" y2=\"{by:.2}\" stroke=\"#888888\" stroke-width=\"1.5\"/>"
            )
            .unwrap();
        }
        for &(id, x, y, kind) in &pts {
            let (cx, cy) = map(x, y);
            let r = if kind == VertexKind::Regular { 2.5 } else { 4.0 };
            writeln!(
                s,
                "    <circle id=\"v{id}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r}\" fill=\"{}\"><title>{} ({x:.6}, {y:.6})</title></circle>",
                color(kind),
                kind.as_str()
            )
            .unwrap();
        }
        s.push_str("  </g>\n");
    }
    s.push_str("</svg>\n");
    s
}
