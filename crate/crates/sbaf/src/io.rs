//! The framework file format, its emitter and the DOT export.
//!
//! A framework file is a sequence of whitespace-separated directives, one
//! per line, with `#` starting a comment:
//!
//! ```text
//! sent s t u          # optional pre-declaration, fixes sentence order
//! inc t r             # t and r are incompatible (symmetric)
//! arg a1 : s -> t     # premises before ->, conclusion after
//! name a1 n1          # assigns the name sentence n1 to a1
//! ```
//!
//! Sentences used in `inc` or `arg` are declared on first use.

use std::fs;
use std::path::Path;

use crate::baf::{Baf, SupportRule};
use crate::error::{Error, Result};
use crate::model::Sbaf;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let line = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    tokens
}

fn err(path: &str, line: usize, column: usize, message: impl ToString) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        column,
        message: message.to_string(),
    }
}

/// Parses framework text. `path` is used in error messages only.
pub fn parse_str(text: &str, path: &str) -> Result<Sbaf> {
    let mut b = Sbaf::builder();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let tokens = tokenize(raw);
        let Some(head) = tokens.first() else {
            continue;
        };
        let fail = |column: usize, message: String| err(path, lineno, column, message);
        let lift = |column: usize| move |e: Error| err(path, lineno, column, e);
        match head.text {
            "sent" => {
                if tokens.len() < 2 {
                    return Err(fail(head.column, "`sent` expects at least one sentence".into()));
                }
                for t in &tokens[1..] {
                    b.sentence(t.text).map_err(lift(t.column))?;
                }
            }
            "inc" => {
                let [_, s, t] = tokens.as_slice() else {
                    return Err(fail(head.column, "`inc` expects exactly two sentences".into()));
                };
                b.incompatible(s.text, t.text).map_err(lift(s.column))?;
            }
            "arg" => {
                if tokens.len() < 3 || tokens[2].text != ":" {
                    return Err(fail(
                        head.column,
                        "`arg` expects `arg <id> : <premise>... -> <conclusion>`".into(),
                    ));
                }
                let id = &tokens[1];
                let arrow = tokens.iter().position(|t| t.text == "->").ok_or_else(|| {
                    fail(head.column, format!("argument `{}` is missing `->`", id.text))
                })?;
                let premises: Vec<&str> = tokens[3..arrow].iter().map(|t| t.text).collect();
                let [conclusion] = &tokens[arrow + 1..] else {
                    return Err(fail(
                        tokens[arrow].column,
                        "expected exactly one conclusion after `->`".into(),
                    ));
                };
                if premises.is_empty() {
                    return Err(fail(
                        tokens[arrow].column,
                        format!("argument `{}` has no premises", id.text),
                    ));
                }
                b.argument(id.text, &premises, conclusion.text)
                    .map_err(lift(id.column))?;
            }
            "name" => {
                let [_, arg, sentence] = tokens.as_slice() else {
                    return Err(fail(
                        head.column,
                        "`name` expects an argument id and a sentence id".into(),
                    ));
                };
                if !b.has_argument(arg.text) {
                    return Err(fail(
                        arg.column,
                        format!("name assigned to unknown argument `{}`", arg.text),
                    ));
                }
                b.name(arg.text, sentence.text).map_err(lift(arg.column))?;
            }
            other => {
                return Err(fail(head.column, format!("unknown directive `{other}`")));
            }
        }
    }
    b.build()
}

pub fn parse_path(path: &Path) -> Result<Sbaf> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text, &path.display().to_string())
}

/// Emits a framework as a file that parses back to a structurally equal
/// one: full sentence declaration first, then incompatibilities, arguments
/// and names in declaration order.
pub fn emit(sb: &Sbaf) -> String {
    let lang = sb.language();
    let mut out = String::new();
    out.push_str("sent");
    for s in lang.sentences() {
        out.push(' ');
        out.push_str(s);
    }
    out.push('\n');
    for s in 0..lang.sentence_count() {
        for t in lang.incompatible_with(s).iter() {
            if s < t {
                out.push_str(&format!(
                    "inc {} {}\n",
                    lang.sentence_id(s),
                    lang.sentence_id(t)
                ));
            }
        }
    }
    for arg in sb.arguments() {
        out.push_str(&format!(
            "arg {} : {} -> {}\n",
            arg.id(),
            lang.sentence_ids(arg.premises()).join(" "),
            lang.sentence_id(arg.conclusion())
        ));
    }
    for a in 0..sb.argument_count() {
        if let Some(n) = sb.name_of(a) {
            out.push_str(&format!("name {} {}\n", sb.argument_id(a), lang.sentence_id(n)));
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the framework as a DOT digraph: one node per argument labeled
/// `id: {premises} -> conclusion`, solid edges for attacks and dashed
/// edges for binary supports under the given rule.
pub fn dot(sb: &Sbaf, rule: SupportRule) -> String {
    let lang = sb.language();
    let mut out = String::from("digraph sbaf {\n");
    for arg in sb.arguments() {
        let label = format!(
            "{}: {{{}}} -> {}",
            arg.id(),
            lang.sentence_ids(arg.premises()).join(","),
            lang.sentence_id(arg.conclusion())
        );
        out.push_str(&format!(
            "  {} [label=\"{}\"];\n",
            arg.id(),
            dot_escape(&label)
        ));
    }
    for a in 0..sb.argument_count() {
        for b in sb.attacks_of(a).iter() {
            out.push_str(&format!(
                "  {} -> {};\n",
                sb.argument_id(a),
                sb.argument_id(b)
            ));
        }
    }
    let baf = Baf::from_sbaf(sb, rule);
    for (a, b) in baf.support_edges() {
        out.push_str(&format!(
            "  {} -> {} [style=dashed];\n",
            sb.argument_id(a),
            sb.argument_id(b)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::fixtures;

    #[test]
    fn a_hand_written_file_parses_to_the_expected_framework() {
        let text = "\
# joint support example
inc t r
inc z p
arg a1 : s -> s
arg a2 : u -> v
arg a3 : w -> x
arg a4 : s -> t
arg a5 : v x -> r
arg a6 : y -> z
arg a7 : p -> q
name a6 n6
inc r n6
";
        let sb = parse_str(text, "inline").unwrap();
        assert_eq!(sb, fixtures::f1());
        let a = |id: &str| sb.arg_index(id).unwrap();
        assert!(sb.attacks(a("a5"), a("a6")));
    }

    #[test]
    fn round_trip_preserves_every_fixture() {
        for (label, sb) in fixtures::all_sbafs() {
            let text = emit(&sb);
            let back = parse_str(&text, label).unwrap();
            assert_eq!(back, sb, "round-trip failed for {label}");
        }
    }

    #[test]
    fn round_trip_preserves_generated_frameworks() {
        use crate::verify::gen::{gen_sbaf, GenConfig};
        for seed in 0..50 {
            let sb = gen_sbaf(&GenConfig::default().with_seed(seed)).unwrap();
            let back = parse_str(&emit(&sb), "gen").unwrap();
            assert_eq!(back, sb);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_str("arg a : -> c\n", "f").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");

        let e = parse_str("arg a1 : s -> t\nfrob x\n", "f").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("f:2:1"), "{msg}");
        assert!(msg.contains("unknown directive"), "{msg}");

        let e = parse_str("name a1 n1\n", "f").unwrap_err();
        assert!(e.to_string().contains("unknown argument"), "{e}");

        let e = parse_str("arg a1 : s -> t\narg a1 : u -> v\n", "f").unwrap_err();
        assert!(e.to_string().contains("duplicate"), "{e}");

        assert!(matches!(parse_str("", "f"), Err(Error::EmptyLanguage)));
        assert!(matches!(
            parse_str("# only a comment\n", "f"),
            Err(Error::EmptyLanguage)
        ));
    }

    #[test]
    fn dot_output_has_expected_edge_counts() {
        let f0 = fixtures::f0();
        let text = dot(&f0, SupportRule::Singleton);
        assert_eq!(text.matches("label=").count(), 5);
        assert_eq!(text.matches("[style=dashed]").count(), 2);
        // two solid attack edges: a4 <-> a5
        let solid = text
            .lines()
            .filter(|l| l.contains("->") && !l.contains("dashed") && !l.contains("label"))
            .count();
        assert_eq!(solid, 2);
        assert!(text.contains("a1 [label=\"a1: {Ale} -> Str\"]"));
    }
}
