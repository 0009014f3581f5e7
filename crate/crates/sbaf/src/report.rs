//! Canonical, machine-readable results for the command surface.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::af::DungSemantics;
use crate::baf::{Baf, SupportRule};
use crate::bits::Bits;
use crate::coherence::{self, Kind};
use crate::error::{Error, Result};
use crate::io;
use crate::language;
use crate::model::Sbaf;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticsTag {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
    StronglyCoherent,
    WeaklyCoherent,
    StronglyAdequate,
    WeaklyAdequate,
    DAdmissible,
    DComplete,
    DPreferred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Arguments,
    Language,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Arguments => "arguments",
            Mode::Language => "language",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "arguments" => Ok(Mode::Arguments),
            "language" => Ok(Mode::Language),
            other => Err(Error::UnknownSemantics(format!("mode `{other}`"))),
        }
    }
}

impl SemanticsTag {
    pub fn all() -> &'static [SemanticsTag] {
        use SemanticsTag::*;
        &[
            ConflictFree,
            Admissible,
            Complete,
            Preferred,
            StronglyCoherent,
            WeaklyCoherent,
            StronglyAdequate,
            WeaklyAdequate,
            DAdmissible,
            DComplete,
            DPreferred,
        ]
    }

    pub fn name(self) -> &'static str {
        use SemanticsTag::*;
        match self {
            ConflictFree => "conflict-free",
            Admissible => "admissible",
            Complete => "complete",
            Preferred => "preferred",
            StronglyCoherent => "strongly-coherent",
            WeaklyCoherent => "weakly-coherent",
            StronglyAdequate => "strongly-adequate",
            WeaklyAdequate => "weakly-adequate",
            DAdmissible => "d-admissible",
            DComplete => "d-complete",
            DPreferred => "d-preferred",
        }
    }

    /// Whether the semantics enumerates argument extensions or language
    /// (sentence) extensions.
    pub fn mode(self) -> Mode {
        match self {
            SemanticsTag::StronglyAdequate | SemanticsTag::WeaklyAdequate => Mode::Language,
            _ => Mode::Arguments,
        }
    }

    pub fn supports_confident(self) -> bool {
        matches!(
            self,
            SemanticsTag::StronglyCoherent
                | SemanticsTag::WeaklyCoherent
                | SemanticsTag::StronglyAdequate
                | SemanticsTag::WeaklyAdequate
        )
    }
}

impl std::fmt::Display for SemanticsTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SemanticsTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<SemanticsTag> {
        SemanticsTag::all()
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownSemantics(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    pub semantics: SemanticsTag,
    /// Explicit mode request; must agree with the semantics when given.
    pub mode: Option<Mode>,
    /// Restrict to the ⊆-maximal (confident) extensions.
    pub confident: bool,
    pub max_args: usize,
    pub max_sents: usize,
    pub support_rule: SupportRule,
}

impl SolveOptions {
    pub fn new(semantics: SemanticsTag) -> SolveOptions {
        SolveOptions {
            semantics,
            mode: None,
            confident: false,
            max_args: crate::af::DEFAULT_ARG_CAP,
            max_sents: language::DEFAULT_SENT_CAP,
            support_rule: SupportRule::Conclusion,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Diagnostics {
    pub arguments: usize,
    pub sentences: usize,
    pub saturated: bool,
    pub strongly_saturated: bool,
    pub max_args: usize,
    pub max_sents: usize,
}

impl Diagnostics {
    pub fn of(sb: &Sbaf, max_args: usize, max_sents: usize) -> Diagnostics {
        Diagnostics {
            arguments: sb.argument_count(),
            sentences: sb.universe().len(),
            saturated: sb.is_saturated(),
            strongly_saturated: sb.is_strongly_saturated(),
            max_args,
            max_sents,
        }
    }
}

/// The canonical solve result: stable field order, sorted id arrays,
/// byte-identical across repeated runs on the same input.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ResultDocument {
    /// SHA-256 of the framework's canonical emitted form.
    pub digest: String,
    pub semantics: String,
    pub mode: String,
    pub confident: bool,
    pub extensions: Vec<Vec<String>>,
    pub diagnostics: Diagnostics,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        for e in &self.extensions {
            out.push_str(&e.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn framework_digest(sb: &Sbaf) -> String {
    let mut hasher = Sha256::new();
    hasher.update(io::emit(sb).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn id_lists(mut lists: Vec<Vec<String>>) -> Vec<Vec<String>> {
    for l in &mut lists {
        l.sort();
    }
    lists.sort();
    lists
}

fn check_mode(opts: &SolveOptions) -> Result<()> {
    if let Some(requested) = opts.mode {
        let expected = opts.semantics.mode();
        if requested != expected {
            return Err(Error::ModeMismatch {
                semantics: opts.semantics.name().to_string(),
                expected: expected.name(),
                requested: requested.name(),
            });
        }
    }
    if opts.confident && !opts.semantics.supports_confident() {
        return Err(Error::ConfidentUnsupported(opts.semantics.name().to_string()));
    }
    Ok(())
}

fn argument_extensions(sb: &Sbaf, opts: &SolveOptions) -> Result<Vec<Bits>> {
    use SemanticsTag::*;
    let cap = opts.max_args;
    match opts.semantics {
        ConflictFree => sb.enumerate_dung(DungSemantics::ConflictFree, cap),
        Admissible => sb.enumerate_dung(DungSemantics::Admissible, cap),
        Complete => sb.enumerate_dung(DungSemantics::Complete, cap),
        Preferred => sb.enumerate_dung(DungSemantics::Preferred, cap),
        StronglyCoherent if opts.confident => {
            language::confident_coherent(sb, Kind::Strong, opts.max_sents)
        }
        WeaklyCoherent if opts.confident => {
            language::confident_coherent(sb, Kind::Weak, opts.max_sents)
        }
        StronglyCoherent => coherence::enumerate_coherent(sb, Kind::Strong, cap),
        WeaklyCoherent => coherence::enumerate_coherent(sb, Kind::Weak, cap),
        DAdmissible | DComplete | DPreferred => {
            let baf = Baf::from_sbaf(sb, opts.support_rule);
            match opts.semantics {
                DAdmissible => baf.enumerate_d_admissible(cap),
                DComplete => baf.enumerate_d_complete(cap),
                _ => baf.enumerate_d_preferred(cap),
            }
        }
        StronglyAdequate | WeaklyAdequate => unreachable!("language-mode semantics"),
    }
}

pub fn solve(sb: &Sbaf, opts: &SolveOptions) -> Result<ResultDocument> {
    check_mode(opts)?;
    let mode = opts.semantics.mode();
    let extensions = match mode {
        Mode::Arguments => argument_extensions(sb, opts)?
            .into_iter()
            .map(|e| sb.extension_ids(e))
            .collect(),
        Mode::Language => {
            let kind = match opts.semantics {
                SemanticsTag::StronglyAdequate => Kind::Strong,
                _ => Kind::Weak,
            };
            let sets = if opts.confident {
                language::confident_adequate(sb, kind, opts.max_sents)?
            } else {
                language::enumerate_adequate(sb, kind, opts.max_sents)?
            };
            sets.into_iter().map(|s| sb.sentence_ids(s)).collect()
        }
    };
    Ok(ResultDocument {
        digest: framework_digest(sb),
        semantics: opts.semantics.name().to_string(),
        mode: mode.name().to_string(),
        confident: opts.confident,
        extensions: id_lists(extensions),
        diagnostics: Diagnostics::of(sb, opts.max_args, opts.max_sents),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub semantics: String,
    pub extension: Vec<String>,
    pub verdict: bool,
    /// The first violated clause, or a confirmation when the verdict holds.
    pub explanation: String,
}

fn conflict_clause(sb: &Sbaf, e: Bits) -> Option<String> {
    for a in e.iter() {
        for b in sb.attacks_of(a).intersection(e).iter() {
            return Some(format!(
                "conflict-freeness violated: {} attacks {}",
                sb.argument_id(a),
                sb.argument_id(b)
            ));
        }
    }
    None
}

fn defense_clause(sb: &Sbaf, e: Bits) -> Option<String> {
    e.iter().find(|&a| !sb.defends(e, a)).map(|a| {
        format!(
            "admissibility violated: {} is not defended",
            sb.argument_id(a)
        )
    })
}

fn explain_arguments(sb: &Sbaf, tag: SemanticsTag, e: Bits, rule: SupportRule) -> (bool, String) {
    use SemanticsTag::*;
    let clause = match tag {
        ConflictFree => conflict_clause(sb, e),
        Admissible => conflict_clause(sb, e).or_else(|| defense_clause(sb, e)),
        Complete => conflict_clause(sb, e)
            .or_else(|| defense_clause(sb, e))
            .or_else(|| {
                sb.all_arguments()
                    .difference(e)
                    .iter()
                    .find(|&a| sb.defends(e, a))
                    .map(|a| {
                        format!(
                            "completeness violated: {} is defended but not a member",
                            sb.argument_id(a)
                        )
                    })
            }),
        Preferred => conflict_clause(sb, e)
            .or_else(|| defense_clause(sb, e))
            .or_else(|| {
                sb.all_arguments()
                    .difference(e)
                    .subsets()
                    .filter(|s| !s.is_empty())
                    .map(|extra| e.union(extra))
                    .find(|&bigger| sb.is_admissible(bigger))
                    .map(|bigger| {
                        format!(
                            "maximality violated: {{{}}} is a larger admissible set",
                            sb.extension_ids(bigger).join(",")
                        )
                    })
            }),
        StronglyCoherent | WeaklyCoherent => conflict_clause(sb, e)
            .or_else(|| defense_clause(sb, e))
            .or_else(|| {
                sb.all_arguments().difference(e).iter().find_map(|a| {
                    let forced = sb.supports(e, a)
                        && !sb.undercut_info(e, a)
                        && (tag == StronglyCoherent || sb.defends(e, a));
                    forced.then(|| {
                        let strength = if tag == StronglyCoherent { "strong" } else { "weak" };
                        format!(
                            "{strength} support-closure violated: {} supported, no undercut info, not member",
                            sb.argument_id(a)
                        )
                    })
                })
            }),
        DAdmissible | DComplete | DPreferred => {
            let baf = Baf::from_sbaf(sb, rule);
            explain_baf(&baf, tag, e)
        }
        StronglyAdequate | WeaklyAdequate => unreachable!("language-mode semantics"),
    };
    match clause {
        Some(c) => (false, c),
        None => (true, format!("extension satisfies {}", tag.name())),
    }
}

fn explain_baf(baf: &Baf, tag: SemanticsTag, e: Bits) -> Option<String> {
    let co = baf.complex_attacks();
    for a in e.iter() {
        for b in co.attacks_of(a).intersection(e).iter() {
            return Some(format!(
                "conflict-freeness under complex attacks violated: {} attacks {}",
                baf.argument_id(a),
                baf.argument_id(b)
            ));
        }
    }
    if let Some(a) = e.iter().find(|&a| !co.defends(e, a)) {
        return Some(format!(
            "admissibility under complex attacks violated: {} is not defended",
            baf.argument_id(a)
        ));
    }
    match tag {
        SemanticsTag::DAdmissible => {
            for a in e.iter() {
                for b in 0..baf.argument_count() {
                    if baf.supports(a, b) && !e.contains(b) {
                        return Some(format!(
                            "support-closure violated: {} supports {} which is not a member",
                            baf.argument_id(a),
                            baf.argument_id(b)
                        ));
                    }
                }
            }
            None
        }
        SemanticsTag::DComplete => Bits::full(baf.argument_count())
            .difference(e)
            .iter()
            .find(|&a| co.defends(e, a))
            .map(|a| {
                format!(
                    "completeness under complex attacks violated: {} is defended but not a member",
                    baf.argument_id(a)
                )
            }),
        _ => (!baf.is_d_preferred(e))
            .then(|| "maximality under complex attacks violated".to_string()),
    }
}

fn explain_language(sb: &Sbaf, tag: SemanticsTag, s: Bits) -> (bool, String) {
    let lang = sb.language();
    for a in s.iter() {
        if let Some(b) = lang.incompatible_with(a).intersection(s).iter().next() {
            return (
                false,
                format!(
                    "compatibility violated: {} and {} are incompatible",
                    lang.sentence_id(a),
                    lang.sentence_id(b)
                ),
            );
        }
    }
    if tag == SemanticsTag::StronglyAdequate {
        let args = language::arg_s(sb, s).expect("compatible by the clause above");
        if let Some(a) = args.iter().find(|&a| !sb.defends(args, a)) {
            return (
                false,
                format!(
                    "self-defense violated: Arg_s does not defend {}",
                    sb.argument_id(a)
                ),
            );
        }
        if let Some(a) = args
            .iter()
            .find(|&a| !sb.argument(a).sentences().is_subset(s))
        {
            return (
                false,
                format!(
                    "sentence-closure violated: {} uses sentences outside the set",
                    sb.argument_id(a)
                ),
            );
        }
    } else {
        let args = language::arg_w(sb, s)
            .expect("compatible by the clause above")
            .fixpoint;
        if let Some(a) = args
            .iter()
            .find(|&a| !sb.argument(a).sentences().is_subset(s))
        {
            return (
                false,
                format!(
                    "sentence-closure violated: Arg_w member {} uses sentences outside the set",
                    sb.argument_id(a)
                ),
            );
        }
    }
    (true, format!("sentence set satisfies {}", tag.name()))
}

/// Checks a single extension against a semantics, explaining the first
/// violated clause.
pub fn check(
    sb: &Sbaf,
    ids: &[String],
    tag: SemanticsTag,
    rule: SupportRule,
) -> Result<CheckReport> {
    let (verdict, explanation) = match tag.mode() {
        Mode::Arguments => {
            let e = sb.extension_from_ids(ids.iter().map(String::as_str))?;
            explain_arguments(sb, tag, e, rule)
        }
        Mode::Language => {
            let s = sb.sentence_set_from_ids(ids.iter().map(String::as_str))?;
            explain_language(sb, tag, s)
        }
    };
    let mut extension = ids.to_vec();
    extension.sort();
    extension.dedup();
    Ok(CheckReport {
        semantics: tag.name().to_string(),
        extension,
        verdict,
        explanation,
    })
}

/// Structural diagnostics for the `props` command.
#[derive(Debug, Clone, Serialize)]
pub struct PropsReport {
    pub digest: String,
    pub arguments: usize,
    pub sentences: usize,
    pub incompatible_pairs: usize,
    pub named_arguments: usize,
    pub attacks: usize,
    pub saturated: bool,
    pub strongly_saturated: bool,
}

pub fn props(sb: &Sbaf) -> PropsReport {
    let lang = sb.language();
    let mut pairs = 0;
    for s in 0..lang.sentence_count() {
        pairs += lang
            .incompatible_with(s)
            .iter()
            .filter(|&t| s <= t)
            .count();
    }
    PropsReport {
        digest: framework_digest(sb),
        arguments: sb.argument_count(),
        sentences: sb.universe().len(),
        incompatible_pairs: pairs,
        named_arguments: (0..sb.argument_count())
            .filter(|&a| sb.name_of(a).is_some())
            .count(),
        attacks: (0..sb.argument_count())
            .map(|a| sb.attacks_of(a).len())
            .sum(),
        saturated: sb.is_saturated(),
        strongly_saturated: sb.is_strongly_saturated(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::fixtures;

    fn opts(tag: SemanticsTag) -> SolveOptions {
        SolveOptions::new(tag)
    }

    #[test]
    fn weakly_coherent_solve_includes_the_lone_supporter() {
        let doc = solve(&fixtures::f0(), &opts(SemanticsTag::WeaklyCoherent)).unwrap();
        assert!(doc.extensions.contains(&vec!["a3".to_string()]));
        assert_eq!(doc.mode, "arguments");
    }

    #[test]
    fn adequate_solve_reports_sentence_sets() {
        let doc = solve(&fixtures::f0(), &opts(SemanticsTag::WeaklyAdequate)).unwrap();
        assert_eq!(doc.mode, "language");
        assert!(doc
            .extensions
            .iter()
            .any(|s| s == &["Cla", "Exp", "Hil", "Str"]));
    }

    #[test]
    fn mode_mismatch_is_rejected() {
        let e = solve(
            &fixtures::f0(),
            &SolveOptions {
                mode: Some(Mode::Language),
                ..opts(SemanticsTag::Preferred)
            },
        )
        .unwrap_err();
        assert!(matches!(e, Error::ModeMismatch { .. }), "{e}");

        let e = solve(
            &fixtures::f0(),
            &SolveOptions {
                confident: true,
                ..opts(SemanticsTag::Admissible)
            },
        )
        .unwrap_err();
        assert!(matches!(e, Error::ConfidentUnsupported(_)), "{e}");
    }

    #[test]
    fn check_explains_the_broken_closure_clause() {
        let ids: Vec<String> = ["a1", "a2", "a3", "a4", "a6"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let report = check(
            &fixtures::f1(),
            &ids,
            SemanticsTag::StronglyCoherent,
            SupportRule::Conclusion,
        )
        .unwrap();
        assert!(!report.verdict);
        assert_eq!(
            report.explanation,
            "strong support-closure violated: a5 supported, no undercut info, not member"
        );

        let report = check(
            &fixtures::f1(),
            &["a2", "a3", "a5", "a7"].map(String::from),
            SemanticsTag::StronglyCoherent,
            SupportRule::Conclusion,
        )
        .unwrap();
        assert!(report.verdict, "{}", report.explanation);

        let report = check(
            &fixtures::f1(),
            &[],
            SemanticsTag::Admissible,
            SupportRule::Conclusion,
        )
        .unwrap();
        assert!(report.verdict);
    }

    #[test]
    fn documents_are_byte_stable() {
        let doc1 = solve(&fixtures::f1(), &opts(SemanticsTag::Preferred)).unwrap();
        let doc2 = solve(&fixtures::f1(), &opts(SemanticsTag::Preferred)).unwrap();
        assert_eq!(doc1.to_json(), doc2.to_json());
        assert!(doc1.to_json().contains("\"digest\""));
    }

    #[test]
    fn props_reports_saturation_flags() {
        let report = props(&fixtures::f1());
        assert!(!report.saturated);
        assert!(!report.strongly_saturated);
        let saturated = fixtures::f1().strongly_saturate().unwrap();
        let report = props(&saturated);
        assert!(report.saturated);
        assert!(report.strongly_saturated);
    }
}
