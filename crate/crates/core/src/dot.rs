//! DOT rendering of trees, one rank per level, with the level's event in
//! the margin. Output is byte-stable for a given tree.

use std::fmt::Write as _;

use crate::tree::{classify_level, Classification, PosetTree};
use crate::word::Word;

fn node_id(w: &Word) -> String {
    format!("w_{w}")
}

fn node_label(w: &Word) -> String {
    if w.is_empty() {
        "\u{03b5}".to_string()
    } else {
        w.to_string()
    }
}

/// Renders the tree: words as nodes linked parent to child, leaves
/// double-circled, every level on its own rank, and a margin column
/// naming the event each level transition performs (or that the
/// transition matches none).
pub fn tree_to_dot(tree: &PosetTree) -> String {
    let mut out = String::new();
    out.push_str("digraph poset_type {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=circle, fontname=\"monospace\"];\n");
    out.push_str("  edge [arrowhead=none];\n");
    let max = match tree.max_len() {
        None => {
            out.push_str("}\n");
            return out;
        }
        Some(m) => m,
    };

    for w in tree.words() {
        let shape = if tree.is_leaf(&w) { ", shape=doublecircle" } else { "" };
        let _ = writeln!(out, "  \"{}\" [label=\"{}\"{shape}];", node_id(&w), node_label(&w));
    }
    for w in tree.words() {
        if let Some(parent) = w.parent() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", node_id(&parent), node_id(&w));
        }
    }

    // margin column: one label node per level, chained to keep ranks in order
    out.push_str("  node [shape=plaintext];\n");
    let _ = writeln!(out, "  \"level_0\" [label=\"level 0\"];");
    for i in 0..max {
        let cur = tree.level(i);
        let next = tree.level(i + 1);
        let text = match classify_level(&cur, &next) {
            Classification::Event(event) => format!("level {}: {event}", i + 1),
            Classification::NoMatch => format!("level {}: no admissible event", i + 1),
            Classification::Ambiguous(first, second) => {
                format!("level {}: ambiguous ({first} / {second})", i + 1)
            }
        };
        let _ = writeln!(out, "  \"level_{}\" [label=\"{}\"];", i + 1, text);
        let _ = writeln!(out, "  \"level_{}\" -> \"level_{}\" [style=invis];", i, i + 1);
    }
    for i in 0..=max {
        let mut rank: Vec<String> = vec![format!("\"level_{i}\"")];
        for w in tree.level(i) {
            rank.push(format!("\"{}\"", node_id(&w)));
        }
        let _ = writeln!(out, "  {{ rank=same; {}; }}", rank.join("; "));
    }
    out.push_str("}\n");
    out
}
