//! Strongly and weakly coherent argument extensions, plus the
//! directionality check on unaffected sub-frameworks.
//!
//! Coherent extensions sit between admissible and complete semantics:
//! rejection of defended arguments is allowed, but acceptance is forced by
//! support. Strong support-closure forces every supported argument without
//! accepted undercutting information; the weak variant additionally
//! requires the argument to be defended.

use crate::af::{check_arg_cap, DungSemantics};
use crate::bits::{canonical_sort, Bits};
use crate::error::{Error, Result};
use crate::model::{Extension, Sbaf};

/// Argument-level semantics usable for enumeration and directionality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgumentSemantics {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
    StronglyCoherent,
    WeaklyCoherent,
}

impl ArgumentSemantics {
    pub fn holds(self, sb: &Sbaf, e: Extension) -> bool {
        match self {
            ArgumentSemantics::ConflictFree => sb.is_conflict_free(e),
            ArgumentSemantics::Admissible => sb.is_admissible(e),
            ArgumentSemantics::Complete => sb.is_complete(e),
            ArgumentSemantics::Preferred => sb.is_preferred(e),
            ArgumentSemantics::StronglyCoherent => is_strongly_coherent(sb, e),
            ArgumentSemantics::WeaklyCoherent => is_weakly_coherent(sb, e),
        }
    }
}

/// Strong support-closure: every argument supported by `e` without
/// undercutting information in `e` is a member of `e`.
pub fn strong_support_closure(sb: &Sbaf, e: Extension) -> bool {
    (0..sb.argument_count())
        .all(|a| !(sb.supports(e, a) && !sb.undercut_info(e, a)) || e.contains(a))
}

/// Weak support-closure: as the strong variant, but acceptance is only
/// forced for arguments that `e` also defends.
pub fn weak_support_closure(sb: &Sbaf, e: Extension) -> bool {
    (0..sb.argument_count()).all(|a| {
        !(sb.supports(e, a) && !sb.undercut_info(e, a) && sb.defends(e, a)) || e.contains(a)
    })
}

pub fn is_strongly_coherent(sb: &Sbaf, e: Extension) -> bool {
    sb.is_admissible(e) && strong_support_closure(sb, e)
}

pub fn is_weakly_coherent(sb: &Sbaf, e: Extension) -> bool {
    sb.is_admissible(e) && weak_support_closure(sb, e)
}

/// The kind of support interpretation, strong or weak.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Strong,
    Weak,
}

/// All coherent argument extensions of the given kind, canonical order.
pub fn enumerate_coherent(sb: &Sbaf, kind: Kind, cap: usize) -> Result<Vec<Extension>> {
    check_arg_cap(sb.argument_count(), cap)?;
    let check = match kind {
        Kind::Strong => is_strongly_coherent,
        Kind::Weak => is_weakly_coherent,
    };
    let mut out: Vec<Extension> = sb
        .all_arguments()
        .subsets()
        .filter(|&e| check(sb, e))
        .collect();
    canonical_sort(&mut out);
    Ok(out)
}

pub fn enumerate_argument_extensions(
    sb: &Sbaf,
    sem: ArgumentSemantics,
    cap: usize,
) -> Result<Vec<Extension>> {
    match sem {
        ArgumentSemantics::ConflictFree => sb.enumerate_dung(DungSemantics::ConflictFree, cap),
        ArgumentSemantics::Admissible => sb.enumerate_dung(DungSemantics::Admissible, cap),
        ArgumentSemantics::Complete => sb.enumerate_dung(DungSemantics::Complete, cap),
        ArgumentSemantics::Preferred => sb.enumerate_dung(DungSemantics::Preferred, cap),
        ArgumentSemantics::StronglyCoherent => enumerate_coherent(sb, Kind::Strong, cap),
        ArgumentSemantics::WeaklyCoherent => enumerate_coherent(sb, Kind::Weak, cap),
    }
}

/// Verifies the unaffectedness side-condition for directionality: the
/// complement of `keep` neither attacks nor supports `keep`.
pub fn check_unaffected(sb: &Sbaf, keep: Bits) -> Result<()> {
    let rest = sb.all_arguments().difference(keep);
    for a in rest.iter() {
        if sb.attacks_of(a).intersects(keep) {
            return Err(Error::DirectionalityPrecondition(format!(
                "`{}` outside the restriction attacks into it",
                sb.argument_id(a)
            )));
        }
    }
    for b in keep.iter() {
        if sb.supports(rest, b) {
            return Err(Error::DirectionalityPrecondition(format!(
                "arguments outside the restriction support `{}`",
                sb.argument_id(b)
            )));
        }
    }
    Ok(())
}

/// True iff the semantics' extensions of the restriction to `keep` equal
/// the `keep`-projections of its extensions of the full framework.
pub fn check_directionality(
    sb: &Sbaf,
    keep: Bits,
    sem: ArgumentSemantics,
    cap: usize,
) -> Result<bool> {
    check_unaffected(sb, keep)?;
    let sub = sb.restrict(keep)?;
    let mut local = enumerate_argument_extensions(&sub, sem, cap)?;
    // restriction preserves argument order, so indices shift but ids do not
    let mut projected: Vec<Bits> = enumerate_argument_extensions(sb, sem, cap)?
        .into_iter()
        .map(|e| {
            sub.extension_from_ids(sb.extension_ids(e.intersection(keep)))
                .expect("restricted framework retains kept ids")
        })
        .collect();
    canonical_sort(&mut local);
    canonical_sort(&mut projected);
    Ok(local == projected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::DEFAULT_ARG_CAP;
    use crate::verify::fixtures;

    #[test]
    fn strong_closure_forces_supported_arguments() {
        let f1 = fixtures::f1();
        let e = f1
            .extension_from_ids(["a1", "a2", "a3", "a4", "a6"])
            .unwrap();
        // a5 is supported with no undercutting information, yet absent
        assert!(!strong_support_closure(&f1, e));
        assert!(weak_support_closure(&f1, e));
        assert!(is_weakly_coherent(&f1, e));
        assert!(!is_strongly_coherent(&f1, e));

        assert!(strong_support_closure(&f1, Bits::EMPTY));
        assert!(weak_support_closure(&f1, Bits::EMPTY));

        let e = f1.extension_from_ids(["a2", "a3", "a5", "a7"]).unwrap();
        assert!(strong_support_closure(&f1, e));
        assert!(is_strongly_coherent(&f1, e));
    }

    #[test]
    fn stradivarius_headline_extension() {
        let f0 = fixtures::f0();
        let e3 = f0.extension_from_ids(["a3"]).unwrap();
        assert!(is_weakly_coherent(&f0, e3));
        assert!(!is_strongly_coherent(&f0, e3));
        assert!(weak_support_closure(&f0, e3));
    }

    #[test]
    fn coherence_can_tolerate_incompatible_premises() {
        // no attacks arise when only premises conflict
        let f5 = fixtures::f5();
        let e = f5.extension_from_ids(["a1", "a2"]).unwrap();
        assert!(is_strongly_coherent(&f5, e));
        assert!(is_weakly_coherent(&f5, e));
    }

    #[test]
    fn no_strongly_coherent_extension_contains_a1_in_fig2() {
        let f3 = fixtures::f3();
        let a1 = f3.arg_index("a1").unwrap();
        let strongly =
            enumerate_coherent(&f3, Kind::Strong, DEFAULT_ARG_CAP).unwrap();
        assert!(strongly.iter().all(|e| !e.contains(a1)));
        let e1 = Bits::singleton(a1);
        assert!(!is_strongly_coherent(&f3, e1));
        assert!(is_weakly_coherent(&f3, e1));
    }

    #[test]
    fn directionality_separates_strong_and_weak_coherence() {
        let f3 = fixtures::f3();
        let u = f3.extension_from_ids(["a1"]).unwrap();
        assert!(!check_directionality(
            &f3,
            u,
            ArgumentSemantics::StronglyCoherent,
            DEFAULT_ARG_CAP
        )
        .unwrap());
        assert!(check_directionality(
            &f3,
            u,
            ArgumentSemantics::WeaklyCoherent,
            DEFAULT_ARG_CAP
        )
        .unwrap());
    }

    #[test]
    fn directionality_is_trivial_on_the_full_framework() {
        let f1 = fixtures::f1();
        for sem in [
            ArgumentSemantics::Admissible,
            ArgumentSemantics::Preferred,
            ArgumentSemantics::StronglyCoherent,
            ArgumentSemantics::WeaklyCoherent,
        ] {
            assert!(check_directionality(&f1, f1.all_arguments(), sem, DEFAULT_ARG_CAP).unwrap());
        }
    }

    #[test]
    fn directionality_rejects_affected_restrictions() {
        let f1 = fixtures::f1();
        // a7 is attacked by a6 from outside
        let u = f1.extension_from_ids(["a7"]).unwrap();
        assert!(matches!(
            check_directionality(&f1, u, ArgumentSemantics::WeaklyCoherent, DEFAULT_ARG_CAP),
            Err(Error::DirectionalityPrecondition(_))
        ));
    }
}
