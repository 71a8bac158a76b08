//! Graphviz output. Output is a pure function of the input.

use crate::afbg::Afbg;
use crate::covering::WindowPresentation;
use crate::presentation::Presentation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected multigraph; each vertex records its rotation and degree.
pub fn ribbon_to_dot(a: &Afbg) -> String {
    let g = a.graph();
    let mut s = String::from("graph ribbon {\n");
    for v in 0..g.num_vertices() {
        let rot: Vec<&str> = g.star(v).iter().map(|&h| g.half_edge_id(h)).collect();
        s.push_str(&format!(
            "  {} [rotation={}, degree={}, multiplicity={}];\n",
            quote(g.vertex_id(v)),
            quote(&rot.join(",")),
            a.degrees().get(v),
            quote(&a.multiplicity(v).to_string())
        ));
    }
    for (e, &[x, y]) in g.edges().iter().enumerate() {
        s.push_str(&format!(
            "  {} -- {} [label={}, taillabel={}, headlabel={}];\n",
            quote(g.vertex_id(g.attach(x))),
            quote(g.vertex_id(g.attach(y))),
            quote(g.edge_id(e)),
            quote(g.half_edge_id(x)),
            quote(g.half_edge_id(y))
        ));
    }
    s.push_str("}\n");
    s
}

/// Directed multigraph; relations are listed as comments.
pub fn quiver_to_dot(p: &Presentation) -> String {
    let mut s = String::from("digraph quiver {\n");
    for (l, r) in p.commutations() {
        s.push_str(&format!("  // {} = {}\n", p.render_path(l, " "), p.render_path(r, " ")));
    }
    for &(later, earlier) in p.zeros() {
        s.push_str(&format!("  // {} = 0\n", p.render_path(&[earlier, later], " ")));
    }
    for v in p.vertex_ids() {
        s.push_str(&format!("  {};\n", quote(v)));
    }
    for a in p.arrows() {
        s.push_str(&format!(
            "  {} -> {} [label={}];\n",
            quote(&p.vertex_ids()[a.source]),
            quote(&p.vertex_ids()[a.target]),
            quote(&a.id)
        ));
    }
    s.push_str("}\n");
    s
}

/// Window quiver; arrows leaving the window end at a point node.
pub fn window_to_dot(w: &WindowPresentation) -> String {
    let mut s = String::from("digraph window {\n");
    for v in &w.vertex_ids {
        s.push_str(&format!("  {};\n", quote(v)));
    }
    for (i, a) in w.arrows.iter().enumerate() {
        let target = match a.target {
            Some(t) => quote(&w.vertex_ids[t]),
            None => {
                let stub = quote(&format!("out{i}"));
                s.push_str(&format!("  {stub} [shape=point];\n"));
                stub
            }
        };
        let style = if a.target.is_none() { ", style=dashed" } else { "" };
        s.push_str(&format!("  {} -> {} [label={}{}];\n", quote(&w.vertex_ids[a.source]), target, quote(&a.id), style));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afbg::tests::lambda;
    use crate::presentation::build_presentation;

    #[test]
    fn lambda_quiver_dot() {
        let d = quiver_to_dot(&build_presentation(&lambda()));
        assert_eq!(d.matches(" -> ").count(), 4);
        assert_eq!(d.lines().filter(|l| l.trim_end().ends_with("\";") && !l.contains("->")).count(), 2);
        assert_eq!(d, quiver_to_dot(&build_presentation(&lambda())));
    }

    #[test]
    fn lambda_ribbon_dot_records_rotations() {
        let d = ribbon_to_dot(&lambda());
        assert!(d.contains("rotation=\"h,h'\""));
        assert!(d.contains("rotation=\"ih,ih'\""));
        assert_eq!(d.matches(" -- ").count(), 2);
    }
}
