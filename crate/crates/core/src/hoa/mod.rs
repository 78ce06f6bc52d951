//! Reading and writing the HOA format.

mod lexer;
mod parser;
mod writer;

pub use parser::parse_hoa;
pub use writer::to_hoa;

/// Same as [`to_hoa`].
pub fn serialize_hoa(t: &crate::automaton::Tela) -> String {
    to_hoa(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{Acceptance, ColourSet, Tela};
    use crate::error::Error;

    const B1: &str = r#"HOA: v1
States: 2
Start: 0
AP: 1 "b"
Acceptance: 1 Inf(0)
--BODY--
State: 0
[!0] 0
[0] 1
State: 1
[t] 1 {0}
--END--
"#;

    fn acc(t: &Tela, q: usize, a: usize) -> Vec<(usize, ColourSet)> {
        t.successors(q, a).to_vec()
    }

    #[test]
    fn reads_b1() {
        let t = parse_hoa(B1).unwrap();
        assert!(t.is_buchi());
        assert_eq!(t.num_states(), 2);
        assert_eq!(t.initial(), &[0]);
        assert_eq!(acc(&t, 0, 0), vec![(0, ColourSet::EMPTY)]);
        assert_eq!(acc(&t, 0, 1), vec![(1, ColourSet::EMPTY)]);
        assert_eq!(acc(&t, 1, 0), vec![(1, ColourSet::singleton(0))]);
        assert_eq!(acc(&t, 1, 1), vec![(1, ColourSet::singleton(0))]);
    }

    #[test]
    fn state_acceptance_moves_to_edges() {
        let text = B1
            .replace("State: 1\n[t] 1 {0}", "State: 1 {0}\n[t] 1")
            .replace("Acceptance: 1 Inf(0)", "acc-name: Buchi\nAcceptance: 1 Inf(0)");
        assert_eq!(parse_hoa(&text).unwrap().transitions().collect::<Vec<_>>(), parse_hoa(B1).unwrap().transitions().collect::<Vec<_>>());
    }

    #[test]
    fn implicit_labels_and_aliases() {
        let implicit = B1.replace("[!0] 0\n[0] 1", "0\n1").replace("[t] 1 {0}", "1 {0}\n1 {0}");
        let aliased = B1
            .replace("AP: 1 \"b\"", "AP: 1 \"b\"\nAlias: @b 0")
            .replace("[!0] 0\n[0] 1", "[!@b] 0\n[@b] 1");
        let want: Vec<_> = parse_hoa(B1).unwrap().transitions().collect();
        assert_eq!(parse_hoa(&implicit).unwrap().transitions().collect::<Vec<_>>(), want);
        assert_eq!(parse_hoa(&aliased).unwrap().transitions().collect::<Vec<_>>(), want);
    }

    #[test]
    fn generalized_condition() {
        let text = B1.replace("Acceptance: 1 Inf(0)", "Acceptance: 2 Fin(0) & Inf(1)");
        let t = parse_hoa(&text).unwrap();
        assert_eq!(t.colour_count(), 2);
        assert_eq!(*t.acceptance(), Acceptance::Fin(0).and(Acceptance::Inf(1)));
    }

    #[test]
    fn true_and_false_conditions() {
        let t = parse_hoa(&B1.replace("Acceptance: 1 Inf(0)", "Acceptance: 1 t")).unwrap();
        assert_eq!(t.colour_count(), 2);
        assert_eq!(*t.acceptance(), Acceptance::Fin(1));
        let f = parse_hoa(&B1.replace("Acceptance: 1 Inf(0)", "Acceptance: 1 f")).unwrap();
        assert_eq!(*f.acceptance(), Acceptance::Inf(1));
    }

    #[test]
    fn rejects_alternation_and_bad_input() {
        let alt = B1.replace("[0] 1", "[0] 0&1");
        assert!(matches!(parse_hoa(&alt), Err(Error::Unsupported(_))));
        let bad = B1.replace("[t] 1 {0}", "[t] 1 {3}");
        assert!(matches!(parse_hoa(&bad), Err(Error::Syntax { line: 11, .. })));
        let undeclared = B1.replace("[0] 1", "[1] 1");
        assert!(matches!(parse_hoa(&undeclared), Err(Error::Syntax { line: 9, column: 2, .. })));
        let out_of_range = B1.replace("[0] 1", "[0] 5");
        assert!(parse_hoa(&out_of_range).is_err());
    }

    #[test]
    fn round_trip_keeps_names() {
        let mut t = parse_hoa(B1).unwrap();
        t.set_name(1, "say \"hi\"");
        let text = to_hoa(&t);
        let back = parse_hoa(&text).unwrap();
        assert_eq!(back.name(1), Some("say \"hi\""));
        assert_eq!(to_hoa(&back), text);
    }
}
