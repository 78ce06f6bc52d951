use std::fmt::Write;

use crate::automaton::{Alphabet, ColourSet, StateId, Symbol, Tela};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn minterm(alphabet: &Alphabet, a: Symbol) -> String {
    let lits: Vec<String> = (0..alphabet.propositions().len())
        .map(|j| if a >> j & 1 == 1 { j.to_string() } else { format!("!{j}") })
        .collect();
    lits.join("&")
}

fn label(alphabet: &Alphabet, symbols: &[Symbol]) -> String {
    if symbols.len() == alphabet.len() {
        return "t".to_string();
    }
    let terms: Vec<String> = symbols.iter().map(|&a| minterm(alphabet, a)).collect();
    terms.join(" | ")
}

/// Writes the automaton in HOA format with transition-based acceptance. The
/// output depends only on the automaton, so equal automata print identically.
pub fn to_hoa(t: &Tela) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "HOA: v1");
    let _ = writeln!(s, "States: {}", t.num_states());
    for q in t.initial() {
        let _ = writeln!(s, "Start: {q}");
    }
    let aps = t.alphabet().propositions();
    let _ = write!(s, "AP: {}", aps.len());
    for ap in aps {
        let _ = write!(s, " {}", quote(ap));
    }
    s.push('\n');
    if t.is_buchi() {
        let _ = writeln!(s, "acc-name: Buchi");
    }
    let _ = writeln!(s, "Acceptance: {} {}", t.colour_count(), t.acceptance());
    let _ = writeln!(s, "properties: trans-labels explicit-labels trans-acc");
    let _ = writeln!(s, "--BODY--");
    for q in 0..t.num_states() {
        let _ = write!(s, "State: {q}");
        if let Some(n) = t.name(q) {
            let _ = write!(s, " {}", quote(n));
        }
        s.push('\n');
        // group symbols by (target, colours), in order of first appearance
        let mut groups: Vec<((StateId, ColourSet), Vec<Symbol>)> = Vec::new();
        for a in t.alphabet().symbols() {
            for &(r, c) in t.successors(q, a) {
                match groups.iter_mut().find(|(k, _)| *k == (r, c)) {
                    Some((_, syms)) => syms.push(a),
                    None => groups.push(((r, c), vec![a])),
                }
            }
        }
        for ((r, c), syms) in groups {
            let _ = write!(s, "[{}] {r}", label(t.alphabet(), &syms));
            if !c.is_empty() {
                let _ = write!(s, " {c}");
            }
            s.push('\n');
        }
    }
    let _ = writeln!(s, "--END--");
    s
}
