use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{write_symbol, Dfa, StateId};
use crate::error::{Error, Result};
use crate::numeral::Base;

/// On-disk automaton layout.
#[derive(Serialize, Deserialize)]
struct DfaDoc {
    base: u32,
    tracks: usize,
    states: usize,
    initial: StateId,
    finals: Vec<StateId>,
    transitions: Vec<(StateId, Vec<u32>, StateId)>,
}

impl From<&Dfa> for DfaDoc {
    fn from(d: &Dfa) -> Self {
        let mut transitions = Vec::new();
        for q in 0..d.num_states() as StateId {
            for s in 0..d.alphabet_size() {
                if let Some(t) = d.step(q, s) {
                    transitions.push((q, d.symbol_digits(s), t));
                }
            }
        }
        DfaDoc {
            base: d.base().radix(),
            tracks: d.tracks(),
            states: d.num_states(),
            initial: d.initial(),
            finals: d.finals().collect(),
            transitions,
        }
    }
}

impl TryFrom<DfaDoc> for Dfa {
    type Error = Error;

    fn try_from(doc: DfaDoc) -> Result<Self> {
        let mut d = Dfa::new(Base::new(doc.base)?, doc.tracks, doc.states)?;
        d.set_initial(doc.initial)?;
        for q in doc.finals {
            d.set_final(q, true)?;
        }
        for (from, digits, to) in doc.transitions {
            if d.transition(from, &digits)?.is_some_and(|t| t != to) {
                return Err(Error::Malformed(format!("nondeterministic transition from state {from}")));
            }
            d.set_transition(from, &digits, to)?;
        }
        Ok(d)
    }
}

impl Serialize for Dfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DfaDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = DfaDoc::deserialize(deserializer)?;
        Dfa::try_from(doc).map_err(serde::de::Error::custom)
    }
}

impl Dfa {
    /// JSON document with one transition per line.
    pub fn to_json(&self) -> String {
        let doc = DfaDoc::from(self);
        let mut out = String::from("{\n");
        writeln!(out, "  \"base\": {},", doc.base).unwrap();
        writeln!(out, "  \"tracks\": {},", doc.tracks).unwrap();
        writeln!(out, "  \"states\": {},", doc.states).unwrap();
        writeln!(out, "  \"initial\": {},", doc.initial).unwrap();
        writeln!(out, "  \"finals\": {},", serde_json::to_string(&doc.finals).expect("plain data")).unwrap();
        if doc.transitions.is_empty() {
            out.push_str("  \"transitions\": []\n}");
            return out;
        }
        out.push_str("  \"transitions\": [\n");
        let rows: Vec<String> = doc.transitions.iter().map(|t| format!("    {}", serde_json::to_string(t).expect("plain data"))).collect();
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]\n}");
        out
    }

    pub fn from_json(text: &str) -> Result<Dfa> {
        Ok(serde_json::from_str(text)?)
    }

    /// Graphviz rendering: doubled circles for finals, one edge per state
    /// pair labelled with all of its symbols.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph dfa {{").unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  start [shape=point];").unwrap();
        for q in 0..self.num_states() as StateId {
            let shape = if self.is_final(q) { "doublecircle" } else { "circle" };
            writeln!(out, "  q{q} [shape={shape}];").unwrap();
        }
        writeln!(out, "  start -> q{};", self.initial()).unwrap();
        for q in 0..self.num_states() as StateId {
            let mut labels: BTreeMap<StateId, Vec<String>> = BTreeMap::new();
            for s in 0..self.alphabet_size() {
                if let Some(t) = self.step(q, s) {
                    let mut label = String::new();
                    let digits = self.symbol_digits(s);
                    if digits.is_empty() {
                        label.push_str("()");
                    } else {
                        write_symbol(&mut label, &digits).unwrap();
                    }
                    labels.entry(t).or_default().push(label);
                }
            }
            for (t, syms) in labels {
                writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", syms.join(",")).unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(r: u32) -> Base {
        Base::new(r).unwrap()
    }

    fn equality_machine() -> Dfa {
        let mut d = Dfa::new(b(2), 2, 2).unwrap();
        d.set_final(0, true).unwrap();
        for (x, y) in [(0, 0), (1, 1)] {
            d.set_transition(0, &[x, y], 0).unwrap();
        }
        for (x, y) in [(1, 0), (0, 1)] {
            d.set_transition(0, &[x, y], 1).unwrap();
        }
        for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            d.set_transition(1, &[x, y], 1).unwrap();
        }
        d
    }

    #[test]
    fn json_layout() {
        let d = equality_machine();
        let v: serde_json::Value = serde_json::from_str(&d.to_json()).unwrap();
        assert_eq!(v["base"], 2);
        assert_eq!(v["tracks"], 2);
        assert_eq!(v["states"], 2);
        assert_eq!(v["initial"], 0);
        assert_eq!(v["finals"], serde_json::json!([0]));
        assert_eq!(v["transitions"][0], serde_json::json!([0, [0, 0], 0]));
        assert_eq!(v["transitions"].as_array().unwrap().len(), 8);
        assert_eq!(Dfa::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn json_rejects_bad_documents() {
        let bad_state = r#"{"base":2,"tracks":1,"states":1,"initial":0,"finals":[3],"transitions":[]}"#;
        assert!(Dfa::from_json(bad_state).is_err());
        let bad_digit = r#"{"base":2,"tracks":1,"states":1,"initial":0,"finals":[],"transitions":[[0,[2],0]]}"#;
        assert!(Dfa::from_json(bad_digit).is_err());
        let nondet = r#"{"base":2,"tracks":1,"states":2,"initial":0,"finals":[],"transitions":[[0,[1],0],[0,[1],1]]}"#;
        assert!(Dfa::from_json(nondet).is_err());
        let bad_base = r#"{"base":1,"tracks":1,"states":1,"initial":0,"finals":[],"transitions":[]}"#;
        assert!(Dfa::from_json(bad_base).is_err());
    }

    #[test]
    fn dot_renders_equality_machine() {
        let dot = equality_machine().to_dot();
        assert!(dot.contains("q0 [shape=doublecircle]"));
        assert!(dot.contains("q1 [shape=circle]"));
        assert!(dot.contains("q0 -> q0 [label=\"(0,0),(1,1)\"]"));
        assert!(dot.contains("q0 -> q1 [label=\"(0,1),(1,0)\"]"));
        assert!(dot.contains("q1 -> q1 [label=\"(0,0),(0,1),(1,0),(1,1)\"]"));
    }
}
