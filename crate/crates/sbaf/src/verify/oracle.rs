//! Brute-force oracles, kept independent of the iterative implementations
//! they check.

use crate::af::check_arg_cap;
use crate::bits::Bits;
use crate::error::Result;
use crate::language;
use crate::model::{Extension, Sbaf, SentenceSet};

/// The weak argument set read off its definition: enumerate every fixpoint
/// of the characteristic function containing Init(S) and return the
/// ⊆-minimum, which the lattice structure guarantees to exist.
pub fn oracle_arg_w(sb: &Sbaf, s: SentenceSet, cap: usize) -> Result<Extension> {
    check_arg_cap(sb.argument_count(), cap)?;
    let init = language::init(sb, s)?;
    let free = sb.all_arguments().difference(init);
    let fixpoints: Vec<Extension> = free
        .subsets()
        .map(|extra| init.union(extra))
        .filter(|&e| language::characteristic_raw(sb, s, e) == e)
        .collect();
    let least = fixpoints
        .iter()
        .copied()
        .find(|&e| fixpoints.iter().all(|&f| e.is_subset(f)))
        .expect("a least fixpoint containing Init(S) exists");
    Ok(least)
}

/// Preferred extensions of an attack relation found without going through
/// admissible-set maximisation: test every subset directly.
pub fn oracle_preferred(af: &crate::af::Af, cap: usize) -> Result<Vec<Extension>> {
    check_arg_cap(af.argument_count(), cap)?;
    let mut out: Vec<Extension> = Bits::full(af.argument_count())
        .subsets()
        .filter(|&e| af.is_preferred(e))
        .collect();
    crate::bits::canonical_sort(&mut out);
    Ok(out)
}
