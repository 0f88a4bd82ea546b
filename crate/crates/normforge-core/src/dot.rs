//! DOT renderings: a transfer system over its subgroup lattice, the lattice
//! of all transfer systems under refinement, and index graphs with rows
//! grouped by group element. Output is deterministic (sorted iteration
//! everywhere) so diagrams can be diffed.

use crate::graphs::IndexGraph;
use crate::group::SubgroupLattice;
use crate::transfer::TransferSystem;
use std::fmt::Write as _;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "\\\""))
}

/// Covering pairs `(lower, upper)` of the subgroup lattice.
fn lattice_covers(lattice: &SubgroupLattice) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for k in 0..lattice.count() {
        for h in 0..lattice.count() {
            if k == h || !lattice.leq(k, h) {
                continue;
            }
            let direct = (0..lattice.count()).all(|j| {
                j == k || j == h || !(lattice.leq(k, j) && lattice.leq(j, h))
            });
            if direct {
                covers.push((k, h));
            }
        }
    }
    covers
}

/// One transfer system drawn over the Hasse diagram of the subgroup
/// lattice: dotted cover edges for the lattice, bold arrows for admitted
/// transfers.
pub fn transfer_system_dot(t: &TransferSystem) -> String {
    let lattice = t.lattice();
    let mut out = String::new();
    let _ = writeln!(out, "digraph transfer_system {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for k in 0..lattice.count() {
        let _ = writeln!(out, "  n{k} [label={}];", quote(&lattice.name(k)));
    }
    for (k, h) in lattice_covers(lattice) {
        let _ = writeln!(out, "  n{k} -> n{h} [style=dotted, arrowhead=none];");
    }
    for &(k, h) in t.pairs() {
        let _ = writeln!(out, "  n{k} -> n{h} [style=bold, color=black];");
    }
    let _ = writeln!(out, "}}");
    out
}

/// The refinement lattice of a family of transfer systems: nodes are the
/// systems (labelled by their admitted pairs), edges are covering
/// refinements.
pub fn transfer_lattice_dot(systems: &[TransferSystem]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph transfer_lattice {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for (idx, t) in systems.iter().enumerate() {
        let _ = writeln!(out, "  t{idx} [label={}];", quote(&t.describe()));
    }
    for (a, ta) in systems.iter().enumerate() {
        for (b, tb) in systems.iter().enumerate() {
            if a == b || !ta.refines(tb) {
                continue;
            }
            let direct = systems.iter().enumerate().all(|(c, tc)| {
                c == a || c == b || !(ta.refines(tc) && tc.refines(tb))
            });
            if direct {
                let _ = writeln!(out, "  t{a} -> t{b};");
            }
        }
    }
    let _ = writeln!(out, "}}");
    out
}

/// An index graph with one cluster per group element row.
pub fn index_graph_dot(gr: &IndexGraph) -> String {
    let group = gr.group();
    let mut out = String::new();
    let _ = writeln!(out, "graph index_graph {{");
    let _ = writeln!(out, "  node [shape=circle, fontname=\"monospace\"];");
    for g in 0..group.order() {
        let _ = writeln!(out, "  subgraph cluster_row{g} {{");
        let _ = writeln!(out, "    label={};", quote(group.elem_name(g)));
        for i in 1..=gr.arity() {
            let _ = writeln!(out, "    v{g}_{i} [label=\"{i}\"];");
        }
        let _ = writeln!(out, "  }}");
    }
    for &((g1, i1), (g2, i2)) in gr.edges() {
        let _ = writeln!(out, "  v{g1}_{i1} -- v{g2}_{i2};");
    }
    let _ = writeln!(out, "}}");
    out
}
