//! The `.oposet` text format and Graphviz export.
//!
//! ```text
//! poset hexagon
//! elements: a b b' a'
//! covers:
//!   0 < a, a < b, b < 1
//!   0 < b' < a' < 1
//! involution: a = a', b = b'
//! end
//! ```
//!
//! `0` and `1` are implicit bounds. Covers are closed reflexively and
//! transitively; serialization writes the transitive reduction back.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::mask::ElementId;
use crate::models::transitive_close;
use crate::ortho::{validate_ortho, OrthoPoset};
use crate::poset::FinitePoset;

const RESERVED: [&str; 2] = ["0", "1"];

/// Labels are non-empty and free of whitespace, `#`, `<`, `=` and `,`.
pub fn is_valid_label(s: &str) -> bool {
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '#' | '<' | '=' | ','))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Elements,
    Covers,
    Involution,
    Done,
}

struct Document {
    name: String,
    elements: Vec<String>,
    covers: Vec<(usize, String, String)>,
    pairs: Vec<(usize, String, String)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn label(line: usize, tok: &str) -> Result<String> {
    if is_valid_label(tok) {
        Ok(tok.to_string())
    } else {
        Err(syntax(line, format!("invalid label {tok:?}")))
    }
}

fn read_document(text: &str) -> Result<Document> {
    let mut doc = Document {
        name: String::new(),
        elements: Vec::new(),
        covers: Vec::new(),
        pairs: Vec::new(),
    };
    let mut section = Section::Header;
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if section == Section::Done {
            return Err(syntax(line_no, "content after end"));
        }
        if section == Section::Header {
            let mut toks = line.split_whitespace();
            match (toks.next(), toks.next(), toks.next()) {
                (Some("poset"), Some(name), None) => doc.name = label(line_no, name)?,
                (Some("poset"), None, _) => return Err(syntax(line_no, "missing poset name")),
                _ => return Err(syntax(line_no, "expected `poset <name>`")),
            }
            section = Section::Elements;
            continue;
        }
        let body = if line == "end" {
            section = Section::Done;
            continue;
        } else if let Some(rest) = line.strip_prefix("elements:") {
            section = Section::Elements;
            rest
        } else if let Some(rest) = line.strip_prefix("covers:") {
            section = Section::Covers;
            rest
        } else if let Some(rest) = line.strip_prefix("involution:") {
            section = Section::Involution;
            rest
        } else {
            line
        };
        match section {
            Section::Elements => {
                for tok in body
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                {
                    doc.elements.push(label(line_no, tok)?);
                }
            }
            Section::Covers => {
                for piece in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                    let chain: Vec<&str> = piece.split('<').map(str::trim).collect();
                    if chain.len() < 2 {
                        return Err(syntax(line_no, format!("expected `x < y`, found {piece:?}")));
                    }
                    for w in chain.windows(2) {
                        doc.covers.push((line_no, label(line_no, w[0])?, label(line_no, w[1])?));
                    }
                }
            }
            Section::Involution => {
                let spaced = body.replace('=', " = ").replace(',', " ");
                let toks: Vec<&str> = spaced.split_whitespace().collect();
                if !toks.len().is_multiple_of(3) {
                    return Err(syntax(line_no, "expected `x = y` pairs"));
                }
                for t in toks.chunks(3) {
                    if t[1] != "=" {
                        return Err(syntax(line_no, "expected `x = y` pairs"));
                    }
                    doc.pairs.push((line_no, label(line_no, t[0])?, label(line_no, t[2])?));
                }
            }
            Section::Header | Section::Done => unreachable!(),
        }
    }
    match section {
        Section::Done => Ok(doc),
        Section::Header => Err(syntax(last.max(1), "empty document")),
        _ => Err(syntax(last + 1, "missing `end`")),
    }
}

/// Parses and validates one `.oposet` document.
pub fn parse_poset(text: &str) -> Result<OrthoPoset> {
    let doc = read_document(text)?;
    let mut names = vec!["0".to_string()];
    for e in &doc.elements {
        if RESERVED.contains(&e.as_str()) {
            return Err(Error::ReservedLabel(e.clone()));
        }
        if names.contains(e) {
            return Err(Error::DuplicateLabel(e.clone()));
        }
        names.push(e.clone());
    }
    names.push("1".to_string());
    let n = names.len();
    let top = n - 1;
    let index = |s: &str| {
        names
            .iter()
            .position(|x| x == s)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    };

    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
        row[top] = true;
    }
    leq[0].iter_mut().for_each(|b| *b = true);
    for (_, x, y) in &doc.covers {
        let (x, y) = (index(x)?, index(y)?);
        if x == y {
            return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
        }
        leq[x][y] = true;
    }
    transitive_close(&mut leq);
    for x in 0..n {
        for y in x + 1..n {
            if leq[x][y] && leq[y][x] {
                return Err(Error::CycleDetected(names[x].clone(), names[y].clone()));
            }
        }
    }
    let pairs: Vec<(String, String)> = doc
        .pairs
        .iter()
        .map(|(_, x, y)| {
            index(x)?;
            index(y)?;
            Ok((x.clone(), y.clone()))
        })
        .collect::<Result<_>>()?;
    let poset = FinitePoset::from_fn(names, |x, y| leq[x][y], ElementId(0), ElementId(top))?;
    Ok(validate_ortho(poset, &pairs)?.with_name(doc.name))
}

fn bound_label(o: &OrthoPoset, e: ElementId) -> &str {
    if e == o.zero() {
        "0"
    } else if e == o.one() {
        "1"
    } else {
        o.label(e)
    }
}

/// Writes the canonical document: middle elements in index order, one
/// cover per line, one pair per line, LF line endings.
pub fn serialize_poset(o: &OrthoPoset) -> String {
    let mut out = String::new();
    let name: String = o.name().split_whitespace().collect::<Vec<_>>().join("-");
    let _ = writeln!(out, "poset {}", if name.is_empty() { "unnamed" } else { &name });
    let middle: Vec<ElementId> = o.elements().filter(|&e| e != o.zero() && e != o.one()).collect();
    let labels: Vec<&str> = middle.iter().map(|&e| o.label(e)).collect();
    if labels.is_empty() {
        out.push_str("elements:\n");
    } else {
        let _ = writeln!(out, "elements: {}", labels.join(" "));
    }
    out.push_str("covers:\n");
    for (x, y) in o.poset().covers() {
        let _ = writeln!(out, "  {} < {}", bound_label(o, x), bound_label(o, y));
    }
    out.push_str("involution:\n");
    for x in o.pair_representatives() {
        let _ = writeln!(out, "  {} = {}", o.label(x), o.label(o.prime(x)));
    }
    out.push_str("end\n");
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram in DOT: bottom-to-top, one node per element, one edge per
/// cover, elements of equal height in a shared rank.
pub fn export_dot(o: &OrthoPoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(o.name()));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  edge [arrowhead=none];\n");
    for e in o.elements() {
        let _ = writeln!(out, "  n{} [label={}];", e.0, quote(bound_label(o, e)));
    }
    for (x, y) in o.poset().covers() {
        let _ = writeln!(out, "  n{} -> n{};", x.0, y.0);
    }
    let heights = o.poset().heights();
    let max = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max {
        let row: Vec<String> = o
            .elements()
            .filter(|e| heights[e.0] == h)
            .map(|e| format!("n{};", e.0))
            .collect();
        if row.len() > 1 {
            let _ = writeln!(out, "  {{ rank=same; {} }}", row.join(" "));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{benzene, example1, isomorphic, power_set};

    const HEXAGON: &str =
        "poset hexagon\nelements: a b b' a'\ncovers: 0<a, a<b, b<1, 0<b', b'<a', a'<1\ninvolution: a=a' b=b'\nend\n";

    #[test]
    fn parses_hexagon() {
        let o = parse_poset(HEXAGON).unwrap();
        assert_eq!(o.name(), "hexagon");
        assert!(isomorphic(&o, &benzene()).unwrap());
        let [a, b] = o.ids(["a", "b"]);
        assert!(o.leq(a, b));
    }

    #[test]
    fn accepts_crlf_comments_and_chains() {
        let text = "# header\r\nposet h # name\r\nelements:\r\n  a b\r\n  b' a'\r\ncovers:\r\n  0 < a < b < 1\r\n  0 < b' < a' < 1\r\ninvolution:\r\n  a = a'\r\n  b = b'\r\nend\r\n";
        let o = parse_poset(text).unwrap();
        assert_eq!(o, parse_poset(HEXAGON).unwrap().with_name("h"));
    }

    #[test]
    fn missing_partner_is_not_total() {
        let text = HEXAGON.replace(" b=b'", "");
        let err = parse_poset(&text).unwrap_err();
        assert!(err.to_string().contains("involution not total"), "{err}");
    }

    #[test]
    fn cycle_detected() {
        let text = HEXAGON.replace("a<b,", "a<b, b<a,");
        assert!(matches!(parse_poset(&text), Err(Error::CycleDetected(..))));
    }

    #[test]
    fn label_errors() {
        let dup = HEXAGON.replace("elements: a b", "elements: a a b");
        assert!(matches!(parse_poset(&dup), Err(Error::DuplicateLabel(l)) if l == "a"));
        let reserved = HEXAGON.replace("elements: a", "elements: 0 a");
        assert!(matches!(parse_poset(&reserved), Err(Error::ReservedLabel(_))));
        let unknown = HEXAGON.replace("b<1", "q<1");
        assert!(matches!(parse_poset(&unknown), Err(Error::UnknownLabel(l)) if l == "q"));
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let bad = HEXAGON.replace("covers: 0<a,", "covers: 0 a,");
        assert!(matches!(parse_poset(&bad), Err(Error::Syntax { line: 3, .. })));
        let open = HEXAGON.replace("end\n", "");
        assert!(matches!(parse_poset(&open), Err(Error::Syntax { line: 5, .. })));
        assert!(matches!(
            parse_poset("elements: a\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        let trailing = format!("{HEXAGON}a\n");
        assert!(matches!(parse_poset(&trailing), Err(Error::Syntax { line: 6, .. })));
    }

    #[test]
    fn round_trips() {
        for o in [
            benzene(),
            example1(4).unwrap(),
            power_set(3).unwrap(),
            example1(0).unwrap(),
        ] {
            let text = serialize_poset(&o);
            let back = parse_poset(&text).unwrap();
            assert_eq!(back, o, "{text}");
        }
    }

    #[test]
    fn cover_line_counts() {
        let count = |o: &OrthoPoset| serialize_poset(o).lines().filter(|l| l.contains('<')).count();
        assert_eq!(count(&power_set(2).unwrap()), 4);
        assert_eq!(count(&benzene()), 6);
    }

    #[test]
    fn dot_shape() {
        let edges = |o: &OrthoPoset| export_dot(o).lines().filter(|l| l.contains("->")).count();
        let nodes = |o: &OrthoPoset| export_dot(o).lines().filter(|l| l.contains("[label=")).count();
        let chain = example1(0).unwrap();
        assert_eq!((nodes(&chain), edges(&chain)), (2, 1));
        assert_eq!((nodes(&benzene()), edges(&benzene())), (6, 6));
        let fig2 = example1(4).unwrap();
        assert_eq!((nodes(&fig2), edges(&fig2)), (10, 20));
        assert!(export_dot(&fig2).contains("{ rank=same; n1; n2; n3; n4; }"));
    }
}
