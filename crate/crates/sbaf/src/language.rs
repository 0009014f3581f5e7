//! Sentence-level semantics: strong and weak argument sets, the
//! characteristic-function fixpoint, adequate language extensions and the
//! confident (⊆-maximal) variants.

use crate::af::maximal_sets;
use crate::bits::{canonical_sort, Bits};
use crate::coherence::{is_strongly_coherent, is_weakly_coherent, Kind};
use crate::error::{Error, Result};
use crate::model::{Extension, Sbaf, SentenceSet};

/// Default cap on |Sent(A)| for language-extension enumeration.
pub const DEFAULT_SENT_CAP: usize = 18;

/// The flag that raises the sentence enumeration cap on the command line.
pub const SENT_CAP_FLAG: &str = "--max-sents";

/// The monotone iteration from Init(S) to the weak argument set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixpointTrace {
    /// Init(S), the largest admissible subset of the arguments whose
    /// sentences all lie in S and which S does not undercut.
    pub init: Extension,
    /// Every stage of the iteration, starting at `init`; ⊆-increasing.
    pub iterates: Vec<Extension>,
    /// The least fixpoint of the characteristic function containing `init`.
    pub fixpoint: Extension,
}

pub(crate) fn compatible_raw(sb: &Sbaf, s: SentenceSet) -> bool {
    s.iter()
        .all(|x| !sb.language().incompatible_with(x).intersects(s))
}

/// True iff no two sentences of `s` are incompatible.
pub fn is_compatible(sb: &Sbaf, s: SentenceSet) -> Result<bool> {
    sb.check_in_universe(s)?;
    Ok(compatible_raw(sb, s))
}

fn ensure_compatible(sb: &Sbaf, s: SentenceSet) -> Result<()> {
    for x in s.iter() {
        if let Some(y) = sb.language().incompatible_with(x).intersection(s).iter().next() {
            return Err(Error::IncompatibleSentenceSet(
                sb.language().sentence_id(x).to_string(),
                sb.language().sentence_id(y).to_string(),
            ));
        }
    }
    Ok(())
}

pub(crate) fn arg_s_raw(sb: &Sbaf, s: SentenceSet) -> Extension {
    let mut out = Bits::EMPTY;
    for (a, arg) in sb.arguments().iter().enumerate() {
        let undercut = match sb.name_of(a) {
            Some(name) => sb.language().incompatible_with(name).intersects(s),
            None => false,
        };
        if arg.premises().is_subset(s) && !undercut {
            out.insert(a);
        }
    }
    out
}

/// Arg_s(S): arguments whose premises lie in S and which S does not
/// undercut.
pub fn arg_s(sb: &Sbaf, s: SentenceSet) -> Result<Extension> {
    sb.check_in_universe(s)?;
    Ok(arg_s_raw(sb, s))
}

pub(crate) fn characteristic_raw(sb: &Sbaf, s: SentenceSet, e: Extension) -> Extension {
    let candidates = arg_s_raw(sb, s);
    candidates.iter().filter(|&a| sb.defends(e, a)).collect()
}

/// R^S(E): the members of Arg_s(S) defended by E.
pub fn characteristic(sb: &Sbaf, s: SentenceSet, e: Extension) -> Result<Extension> {
    sb.check_in_universe(s)?;
    Ok(characteristic_raw(sb, s, e))
}

pub(crate) fn init_raw(sb: &Sbaf, s: SentenceSet) -> Extension {
    // the candidate set is conflict-free for compatible S, so the largest
    // admissible subset is the greatest self-defending one
    let mut current: Extension = sb
        .arguments()
        .iter()
        .enumerate()
        .filter(|(a, arg)| {
            let undercut = match sb.name_of(*a) {
                Some(name) => sb.language().incompatible_with(name).intersects(s),
                None => false,
            };
            arg.sentences().is_subset(s) && !undercut
        })
        .map(|(a, _)| a)
        .collect();
    loop {
        let next: Extension = current.iter().filter(|&a| sb.defends(current, a)).collect();
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Init(S): the unique largest admissible subset of the arguments fully
/// contained in S (sentences and absence of undercuts).
pub fn init(sb: &Sbaf, s: SentenceSet) -> Result<Extension> {
    sb.check_in_universe(s)?;
    ensure_compatible(sb, s)?;
    Ok(init_raw(sb, s))
}

pub(crate) fn arg_w_raw(sb: &Sbaf, s: SentenceSet) -> FixpointTrace {
    let init = init_raw(sb, s);
    let mut iterates = vec![init];
    let mut current = init;
    loop {
        let next = characteristic_raw(sb, s, current);
        if next == current {
            return FixpointTrace {
                init,
                iterates,
                fixpoint: current,
            };
        }
        iterates.push(next);
        current = next;
    }
}

/// Arg_w(S): the least fixpoint of R^S containing Init(S), computed by
/// monotone iteration to stabilisation.
pub fn arg_w(sb: &Sbaf, s: SentenceSet) -> Result<FixpointTrace> {
    sb.check_in_universe(s)?;
    ensure_compatible(sb, s)?;
    Ok(arg_w_raw(sb, s))
}

pub(crate) fn strongly_adequate_raw(sb: &Sbaf, s: SentenceSet) -> bool {
    if !compatible_raw(sb, s) {
        return false;
    }
    let args = arg_s_raw(sb, s);
    args.iter().all(|a| sb.defends(args, a))
        && args.iter().all(|a| sb.argument(a).sentences().is_subset(s))
}

pub(crate) fn weakly_adequate_raw(sb: &Sbaf, s: SentenceSet) -> bool {
    if !compatible_raw(sb, s) {
        return false;
    }
    let args = arg_w_raw(sb, s).fixpoint;
    args.iter().all(|a| sb.argument(a).sentences().is_subset(s))
}

/// Compatible, Arg_s(S) defends all its arguments, and sentence-closure
/// holds with respect to Arg_s(S).
pub fn is_strongly_adequate(sb: &Sbaf, s: SentenceSet) -> Result<bool> {
    sb.check_in_universe(s)?;
    Ok(strongly_adequate_raw(sb, s))
}

/// Compatible and sentence-closed with respect to Arg_w(S).
pub fn is_weakly_adequate(sb: &Sbaf, s: SentenceSet) -> Result<bool> {
    sb.check_in_universe(s)?;
    Ok(weakly_adequate_raw(sb, s))
}

fn check_sent_cap(sb: &Sbaf, cap: usize) -> Result<()> {
    let count = sb.universe().len();
    if count > cap {
        return Err(Error::CapExceeded {
            what: "sentences",
            count,
            cap,
            flag: SENT_CAP_FLAG,
        });
    }
    Ok(())
}

/// All adequate language extensions of the given kind, canonical order.
pub fn enumerate_adequate(sb: &Sbaf, kind: Kind, cap: usize) -> Result<Vec<SentenceSet>> {
    check_sent_cap(sb, cap)?;
    let check = match kind {
        Kind::Strong => strongly_adequate_raw,
        Kind::Weak => weakly_adequate_raw,
    };
    let mut out: Vec<SentenceSet> = sb
        .universe()
        .subsets()
        .filter(|&s| check(sb, s))
        .collect();
    canonical_sort(&mut out);
    Ok(out)
}

/// The ⊆-maximal adequate language extensions of the given kind.
pub fn confident_adequate(sb: &Sbaf, kind: Kind, cap: usize) -> Result<Vec<SentenceSet>> {
    let adequate = enumerate_adequate(sb, kind, cap)?;
    let mut out = maximal_sets(&adequate);
    canonical_sort(&mut out);
    Ok(out)
}

/// Confident coherent argument extensions: coherent extensions arising as
/// the argument set of some confident adequate language extension. Several
/// language extensions may induce the same argument set.
pub fn confident_coherent(sb: &Sbaf, kind: Kind, cap: usize) -> Result<Vec<Extension>> {
    let confident = confident_adequate(sb, kind, cap)?;
    let mut out: Vec<Extension> = confident
        .into_iter()
        .map(|s| match kind {
            Kind::Strong => arg_s_raw(sb, s),
            Kind::Weak => arg_w_raw(sb, s).fixpoint,
        })
        .filter(|&e| match kind {
            Kind::Strong => is_strongly_coherent(sb, e),
            Kind::Weak => is_weakly_coherent(sb, e),
        })
        .collect();
    canonical_sort(&mut out);
    Ok(out)
}
