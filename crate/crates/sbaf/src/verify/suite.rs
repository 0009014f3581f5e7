//! The machine-checked proposition suite: every claim the solver relies on
//! is replayed against seeded random frameworks, with violating frameworks
//! shrunk to minimal witnesses.

use rayon::prelude::*;
use serde::Serialize;

use crate::af::{maximal_sets, DungSemantics};
use crate::baf::{Baf, SupportRule};
use crate::bits::{canonical_sort, Bits};
use crate::coherence::{
    check_directionality, check_unaffected, is_strongly_coherent, is_weakly_coherent,
    strong_support_closure, ArgumentSemantics,
};
use crate::language;
use crate::model::Sbaf;
use crate::verify::fixtures;
use crate::verify::gen::{gen_sbaf, gen_single_premise_sbaf, GenConfig};
use crate::verify::oracle::oracle_arg_w;

/// Internal cap for suite enumerations; generated frameworks stay far
/// below it.
const SUITE_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropositionId {
    /// Strongly coherent extensions are weakly coherent.
    Obs1,
    /// Complete extensions are weakly coherent; maximal weakly coherent
    /// extensions are exactly the preferred ones.
    Obs2,
    /// Weak coherence satisfies directionality; strong coherence fails it
    /// on the known counterexample.
    Prop2,
    /// The iterative weak argument set equals the definitional least
    /// fixpoint.
    Prop3,
    /// Weak argument sets are admissible, with monotone admissible
    /// iterates.
    Prop4,
    /// Strongly adequate language extensions are weakly adequate.
    Prop5,
    /// On saturated frameworks, strong adequacy and strong coherence
    /// correspond in both directions.
    Prop6,
    /// The weak analogue of the correspondence.
    Prop7,
    /// On saturated frameworks, preferred extensions are confident weakly
    /// coherent.
    Prop10,
    /// On strongly saturated frameworks, confident weakly coherent
    /// extensions are preferred.
    Prop11,
    /// Single-premise undercut-free: strongly coherent implies
    /// d-admissible under the conclusion rule.
    Prop12Forward,
    /// With pairwise-distinct premises, d-admissible implies strongly
    /// coherent, and the two support rules agree.
    Prop12Converse,
    /// The subset relations between the semantics families.
    Fig1,
}

impl PropositionId {
    pub fn all() -> &'static [PropositionId] {
        use PropositionId::*;
        &[
            Obs1, Obs2, Prop2, Prop3, Prop4, Prop5, Prop6, Prop7, Prop10, Prop11,
            Prop12Forward, Prop12Converse, Fig1,
        ]
    }

    pub fn name(self) -> &'static str {
        use PropositionId::*;
        match self {
            Obs1 => "obs-1",
            Obs2 => "obs-2",
            Prop2 => "prop-2",
            Prop3 => "prop-3",
            Prop4 => "prop-4",
            Prop5 => "prop-5",
            Prop6 => "prop-6",
            Prop7 => "prop-7",
            Prop10 => "prop-10",
            Prop11 => "prop-11",
            Prop12Forward => "prop-12-forward",
            Prop12Converse => "prop-12-converse",
            Fig1 => "fig-1",
        }
    }
}

impl Serialize for PropositionId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl std::fmt::Display for PropositionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PropositionId {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<PropositionId, Self::Err> {
        PropositionId::all()
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| crate::error::Error::UnknownProposition(s.to_string()))
    }
}

/// A shrunk framework on which a proposition check failed.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub seed: u64,
    pub detail: String,
    /// The framework in the directive file format.
    pub framework: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropositionReport {
    pub proposition: PropositionId,
    pub trials: usize,
    pub violations: Vec<Witness>,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub trials: usize,
    pub base_seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            trials: 100,
            base_seed: 0,
        }
    }
}

/// Runs the selected proposition checks; trials run in parallel and the
/// reports are merged in seed order.
pub fn run_suite(ids: &[PropositionId], config: &SuiteConfig) -> Vec<PropositionReport> {
    ids.iter()
        .map(|&id| {
            let violations: Vec<Witness> = (0..config.trials)
                .into_par_iter()
                .map(|i| run_trial(id, config.base_seed + i as u64))
                .collect::<Vec<Option<Witness>>>()
                .into_iter()
                .flatten()
                .collect();
            PropositionReport {
                proposition: id,
                trials: config.trials,
                violations,
            }
        })
        .collect()
}

fn run_trial(id: PropositionId, seed: u64) -> Option<Witness> {
    let (sb, check): (Sbaf, fn(&Sbaf) -> Option<String>) = match id {
        PropositionId::Obs1 => (default_gen(seed), check_obs1),
        PropositionId::Obs2 => (default_gen(seed), check_obs2),
        PropositionId::Prop2 => (compact_gen(seed), check_prop2),
        PropositionId::Prop3 => (default_gen(seed), check_prop3),
        PropositionId::Prop4 => (default_gen(seed), check_prop4),
        PropositionId::Prop5 => (default_gen(seed), check_prop5),
        PropositionId::Prop6 => (compact_gen(seed), check_prop6),
        PropositionId::Prop7 => (compact_gen(seed), check_prop7),
        PropositionId::Prop10 => (compact_gen(seed), check_prop10),
        PropositionId::Prop11 => (compact_gen(seed), check_prop11),
        PropositionId::Prop12Forward => (
            gen_single_premise_sbaf(seed, 8, 10, 0.2, false).expect("valid shape"),
            check_prop12_forward,
        ),
        PropositionId::Prop12Converse => (
            gen_single_premise_sbaf(seed, 8, 10, 0.2, true).expect("valid shape"),
            check_prop12_converse,
        ),
        PropositionId::Fig1 => (compact_gen(seed), check_fig1),
    };
    let detail = check(&sb)?;
    let (shrunk, detail) = shrink(&sb, detail, check);
    Some(Witness {
        seed,
        detail,
        framework: crate::io::emit(&shrunk),
    })
}

fn default_gen(seed: u64) -> Sbaf {
    gen_sbaf(&GenConfig::default().with_seed(seed)).expect("default config is valid")
}

fn compact_gen(seed: u64) -> Sbaf {
    gen_sbaf(&GenConfig::compact().with_seed(seed)).expect("compact config is valid")
}

/// Greedily removes arguments while the violation persists.
fn shrink(sb: &Sbaf, detail: String, check: fn(&Sbaf) -> Option<String>) -> (Sbaf, String) {
    let mut current = sb.clone();
    let mut detail = detail;
    loop {
        let mut improved = false;
        for a in (0..current.argument_count()).rev() {
            let keep = current.all_arguments().without(a);
            if let Ok(smaller) = current.restrict(keep) {
                if let Some(d) = check(&smaller) {
                    current = smaller;
                    detail = d;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            return (current, detail);
        }
    }
}

fn named(sb: &Sbaf, e: Bits) -> String {
    format!("{{{}}}", sb.extension_ids(e).join(","))
}

fn check_obs1(sb: &Sbaf) -> Option<String> {
    sb.all_arguments()
        .subsets()
        .find(|&e| is_strongly_coherent(sb, e) && !is_weakly_coherent(sb, e))
        .map(|e| format!("{} is strongly but not weakly coherent", named(sb, e)))
}

fn check_obs2(sb: &Sbaf) -> Option<String> {
    let mut weakly = Vec::new();
    for e in sb.all_arguments().subsets() {
        if is_weakly_coherent(sb, e) {
            weakly.push(e);
        } else if sb.is_complete(e) {
            return Some(format!("{} is complete but not weakly coherent", named(sb, e)));
        }
    }
    let mut maximal = maximal_sets(&weakly);
    canonical_sort(&mut maximal);
    let preferred = sb
        .enumerate_dung(DungSemantics::Preferred, SUITE_CAP)
        .expect("within suite cap");
    if maximal != preferred {
        return Some(format!(
            "maximal weakly coherent family {:?} differs from preferred family {:?}",
            maximal.iter().map(|&e| named(sb, e)).collect::<Vec<_>>(),
            preferred.iter().map(|&e| named(sb, e)).collect::<Vec<_>>(),
        ));
    }
    None
}

fn check_prop2(sb: &Sbaf) -> Option<String> {
    // the counterexample framework must witness the failure for strong
    // coherence while weak coherence is directional there
    let f3 = fixtures::f3();
    let u = f3.extension_from_ids(["a1"]).expect("fixture ids");
    match check_directionality(&f3, u, ArgumentSemantics::StronglyCoherent, SUITE_CAP) {
        Ok(false) => {}
        _ => return Some("strong coherence did not fail directionality on the counterexample".into()),
    }
    match check_directionality(&f3, u, ArgumentSemantics::WeaklyCoherent, SUITE_CAP) {
        Ok(true) => {}
        _ => return Some("weak coherence failed directionality on the counterexample".into()),
    }
    // weak coherence is directional on every unaffected restriction
    for u in sb.all_arguments().subsets() {
        if check_unaffected(sb, u).is_err() {
            continue;
        }
        match check_directionality(sb, u, ArgumentSemantics::WeaklyCoherent, SUITE_CAP) {
            Ok(true) => {}
            _ => {
                return Some(format!(
                    "weak coherence fails directionality for restriction {}",
                    named(sb, u)
                ))
            }
        }
    }
    None
}

/// Deterministic sample of compatible sentence sets for fixpoint probes.
fn sample_sentence_sets(sb: &Sbaf, salt: u64, count: usize) -> Vec<Bits> {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(salt);
    let universe = sb.universe();
    let mut out = vec![Bits::EMPTY];
    let mut attempts = 0;
    while out.len() < count && attempts < count * 20 {
        attempts += 1;
        let mask = Bits(rng.gen::<u64>()).intersection(universe);
        if language::compatible_raw(sb, mask) && !out.contains(&mask) {
            out.push(mask);
        }
    }
    // sentence sets of admissible extensions exercise the interesting cases
    for e in sb.all_arguments().subsets().take(64) {
        if sb.is_admissible(e) {
            let s = sb.sent(e);
            if language::compatible_raw(sb, s) && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

fn check_prop3(sb: &Sbaf) -> Option<String> {
    for s in sample_sentence_sets(sb, 3, 24) {
        let iterative = language::arg_w_raw(sb, s).fixpoint;
        let oracle = oracle_arg_w(sb, s, SUITE_CAP).expect("within suite cap");
        if iterative != oracle {
            return Some(format!(
                "Arg_w mismatch for S = {:?}: iterative {} vs least fixpoint {}",
                sb.sentence_ids(s),
                named(sb, iterative),
                named(sb, oracle)
            ));
        }
    }
    None
}

fn check_prop4(sb: &Sbaf) -> Option<String> {
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
    for s in sample_sentence_sets(sb, 4, 24) {
        let trace = language::arg_w_raw(sb, s);
        if !sb.is_admissible(trace.fixpoint) {
            return Some(format!(
                "Arg_w({:?}) = {} is not admissible",
                sb.sentence_ids(s),
                named(sb, trace.fixpoint)
            ));
        }
        for pair in trace.iterates.windows(2) {
            if !pair[0].is_subset(pair[1]) {
                return Some("fixpoint iterates are not increasing".into());
            }
        }
        for &it in &trace.iterates {
            if !sb.is_admissible(it) {
                return Some(format!("iterate {} is not admissible", named(sb, it)));
            }
        }
        // monotonicity of the characteristic function
        for _ in 0..4 {
            let e = Bits(rng.gen::<u64>()).intersection(sb.all_arguments());
            let bigger = e.union(Bits(rng.gen::<u64>()).intersection(sb.all_arguments()));
            let r_small = language::characteristic_raw(sb, s, e);
            let r_big = language::characteristic_raw(sb, s, bigger);
            if !r_small.is_subset(r_big) {
                return Some("characteristic function is not monotone".into());
            }
        }
    }
    None
}

fn check_prop5(sb: &Sbaf) -> Option<String> {
    sb.universe()
        .subsets()
        .find(|&s| language::strongly_adequate_raw(sb, s) && !language::weakly_adequate_raw(sb, s))
        .map(|s| {
            format!(
                "{:?} is strongly but not weakly adequate",
                sb.sentence_ids(s)
            )
        })
}

fn saturated(sb: &Sbaf) -> Sbaf {
    sb.strongly_saturate().expect("saturation stays within limits")
}

fn check_prop6(sb: &Sbaf) -> Option<String> {
    let sb = saturated(sb);
    for s in sb.universe().subsets() {
        if language::strongly_adequate_raw(&sb, s) {
            let e = language::arg_s_raw(&sb, s);
            if !is_strongly_coherent(&sb, e) {
                return Some(format!(
                    "Arg_s({:?}) = {} is not strongly coherent",
                    sb.sentence_ids(s),
                    named(&sb, e)
                ));
            }
        }
    }
    for e in sb.all_arguments().subsets() {
        if is_strongly_coherent(&sb, e) && !language::strongly_adequate_raw(&sb, sb.sent(e)) {
            return Some(format!(
                "Sent({}) is not strongly adequate",
                named(&sb, e)
            ));
        }
    }
    None
}

fn check_prop7(sb: &Sbaf) -> Option<String> {
    let sb = saturated(sb);
    for s in sb.universe().subsets() {
        if language::weakly_adequate_raw(&sb, s) {
            let e = language::arg_w_raw(&sb, s).fixpoint;
            if !is_weakly_coherent(&sb, e) {
                return Some(format!(
                    "Arg_w({:?}) = {} is not weakly coherent",
                    sb.sentence_ids(s),
                    named(&sb, e)
                ));
            }
        }
    }
    for e in sb.all_arguments().subsets() {
        if is_weakly_coherent(&sb, e) && !language::weakly_adequate_raw(&sb, sb.sent(e)) {
            return Some(format!("Sent({}) is not weakly adequate", named(&sb, e)));
        }
    }
    None
}

fn check_prop10(sb: &Sbaf) -> Option<String> {
    let sb = saturated(sb);
    let preferred = sb
        .enumerate_dung(DungSemantics::Preferred, SUITE_CAP)
        .expect("within suite cap");
    let confident = language::confident_coherent(&sb, crate::coherence::Kind::Weak, SUITE_CAP)
        .expect("within suite cap");
    preferred
        .iter()
        .find(|e| !confident.contains(e))
        .map(|&e| {
            format!(
                "preferred {} is not confident weakly coherent",
                named(&sb, e)
            )
        })
}

fn check_prop11(sb: &Sbaf) -> Option<String> {
    let sb = saturated(sb);
    let confident = language::confident_coherent(&sb, crate::coherence::Kind::Weak, SUITE_CAP)
        .expect("within suite cap");
    confident
        .iter()
        .find(|&&e| !sb.is_preferred(e))
        .map(|&e| {
            format!(
                "confident weakly coherent {} is not preferred",
                named(&sb, e)
            )
        })
}

fn check_prop12_forward(sb: &Sbaf) -> Option<String> {
    let baf = Baf::from_sbaf(sb, SupportRule::Conclusion);
    let co = baf.complex_attacks();
    sb.all_arguments()
        .subsets()
        .find(|&e| {
            is_strongly_coherent(sb, e) && !(co.is_admissible(e) && baf.support_closed(e))
        })
        .map(|e| format!("{} is strongly coherent but not d-admissible", named(sb, e)))
}

fn check_prop12_converse(sb: &Sbaf) -> Option<String> {
    let baf = Baf::from_sbaf(sb, SupportRule::Conclusion);
    let singleton = Baf::from_sbaf(sb, SupportRule::Singleton);
    if baf.support_edges() != singleton.support_edges() {
        return Some("conclusion and singleton support rules disagree".into());
    }
    let co = baf.complex_attacks();
    // defence inside a d-admissible extension may run through complex
    // attacks with no counterpart in the framework's own attack relation,
    // so d-admissibility yields strong coherence only together with plain
    // admissibility; conflict-freeness and closure follow unconditionally
    for e in sb.all_arguments().subsets() {
        if !(co.is_admissible(e) && baf.support_closed(e)) {
            continue;
        }
        if !sb.is_conflict_free(e) {
            return Some(format!(
                "{} is d-admissible but not conflict-free",
                named(sb, e)
            ));
        }
        if !strong_support_closure(sb, e) {
            return Some(format!(
                "{} is d-admissible but violates strong support-closure",
                named(sb, e)
            ));
        }
        if sb.is_admissible(e) && !is_strongly_coherent(sb, e) {
            return Some(format!(
                "{} is d-admissible and admissible but not strongly coherent",
                named(sb, e)
            ));
        }
    }
    None
}

fn check_fig1(sb: &Sbaf) -> Option<String> {
    if let Some(detail) = check_obs1(sb) {
        return Some(detail);
    }
    let sb = saturated(sb);
    for s in sb.universe().subsets() {
        if language::strongly_adequate_raw(&sb, s)
            && !is_strongly_coherent(&sb, language::arg_s_raw(&sb, s))
        {
            return Some("strong argument set of an adequate extension is not coherent".into());
        }
        if language::weakly_adequate_raw(&sb, s)
            && !is_weakly_coherent(&sb, language::arg_w_raw(&sb, s).fixpoint)
        {
            return Some("weak argument set of an adequate extension is not coherent".into());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_quick_suite_pass_is_clean() {
        let config = SuiteConfig {
            trials: 10,
            base_seed: 0,
        };
        let reports = run_suite(PropositionId::all(), &config);
        for report in &reports {
            assert!(
                report.violations.is_empty(),
                "{} violated: {:?}",
                report.proposition.name(),
                report.violations
            );
        }
    }

    #[test]
    fn reports_serialize_to_json() {
        let config = SuiteConfig {
            trials: 1,
            base_seed: 0,
        };
        let reports = run_suite(&[PropositionId::Obs1], &config);
        let json = serde_json::to_string(&reports).unwrap();
        assert!(json.contains("\"obs-1\""));
    }

    #[test]
    fn shrinking_produces_a_small_witness() {
        // a deliberately false "proposition": no framework has any attack
        fn no_attacks(sb: &Sbaf) -> Option<String> {
            (0..sb.argument_count())
                .any(|a| !sb.attacks_of(a).is_empty())
                .then(|| "framework has an attack".to_string())
        }
        let sb = super::default_gen(3);
        if let Some(detail) = no_attacks(&sb) {
            let (shrunk, _) = shrink(&sb, detail, no_attacks);
            // a single self-attacking or two attacking arguments suffice
            assert!(shrunk.argument_count() <= 2);
            assert!(no_attacks(&shrunk).is_some());
        }
    }
}
