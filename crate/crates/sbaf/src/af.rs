//! Dung-style semantics on an attack relation, ignoring support.
//!
//! The same machinery serves the framework's own attack relation and the
//! complex-attack closure of bipolar frameworks. Enumeration is exhaustive
//! over subsets with early conflict pruning; the target instances are desk
//! scale and exhaustiveness doubles as the oracle.

use crate::bits::{canonical_sort, Bits};
use crate::error::{Error, Result};
use crate::model::{ArgIdx, Extension, Sbaf};

/// Default cap on argument counts for exhaustive extension enumeration.
pub const DEFAULT_ARG_CAP: usize = 16;

/// The flag that raises the argument enumeration cap on the command line.
pub const ARG_CAP_FLAG: &str = "--max-args";

/// Dung semantics selectable for plain attack-relation evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DungSemantics {
    ConflictFree,
    Admissible,
    Complete,
    Preferred,
}

/// An abstract argumentation framework: arguments `0..n` plus attacks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Af {
    n: usize,
    attacks_of: Vec<Bits>,
    attackers_of: Vec<Bits>,
}

impl Af {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (ArgIdx, ArgIdx)>) -> Af {
        let mut attacks_of = vec![Bits::EMPTY; n];
        let mut attackers_of = vec![Bits::EMPTY; n];
        for (a, b) in edges {
            attacks_of[a].insert(b);
            attackers_of[b].insert(a);
        }
        Af {
            n,
            attacks_of,
            attackers_of,
        }
    }

    pub fn from_sbaf(sb: &Sbaf) -> Af {
        let n = sb.argument_count();
        Af {
            n,
            attacks_of: (0..n).map(|a| sb.attacks_of(a)).collect(),
            attackers_of: (0..n).map(|a| sb.attackers_of(a)).collect(),
        }
    }

    pub fn argument_count(&self) -> usize {
        self.n
    }

    pub fn attacks(&self, a: ArgIdx, b: ArgIdx) -> bool {
        self.attacks_of[a].contains(b)
    }

    pub fn attacks_of(&self, a: ArgIdx) -> Bits {
        self.attacks_of[a]
    }

    pub fn edges(&self) -> Vec<(ArgIdx, ArgIdx)> {
        (0..self.n)
            .flat_map(|a| self.attacks_of[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn is_conflict_free(&self, e: Extension) -> bool {
        e.iter().all(|a| !self.attacks_of[a].intersects(e))
    }

    /// True iff every attacker of `a` is counterattacked from `e`.
    pub fn defends(&self, e: Extension, a: ArgIdx) -> bool {
        self.attackers_of[a]
            .iter()
            .all(|b| e.intersects(self.attackers_of[b]))
    }

    pub fn is_admissible(&self, e: Extension) -> bool {
        self.is_conflict_free(e) && e.iter().all(|a| self.defends(e, a))
    }

    pub fn is_complete(&self, e: Extension) -> bool {
        self.is_admissible(e)
            && (0..self.n).all(|a| !self.defends(e, a) || e.contains(a))
    }

    /// Decided against all admissible proper supersets.
    pub fn is_preferred(&self, e: Extension) -> bool {
        self.is_admissible(e)
            && Bits::full(self.n)
                .difference(e)
                .subsets()
                .all(|extra| extra.is_empty() || !self.is_admissible(e.union(extra)))
    }

    pub fn satisfies(&self, sem: DungSemantics, e: Extension) -> bool {
        match sem {
            DungSemantics::ConflictFree => self.is_conflict_free(e),
            DungSemantics::Admissible => self.is_admissible(e),
            DungSemantics::Complete => self.is_complete(e),
            DungSemantics::Preferred => self.is_preferred(e),
        }
    }

    /// All extensions under `sem`, in canonical order.
    pub fn enumerate(&self, sem: DungSemantics, cap: usize) -> Result<Vec<Extension>> {
        check_arg_cap(self.n, cap)?;
        let mut out = match sem {
            DungSemantics::Preferred => {
                let admissible: Vec<Extension> = Bits::full(self.n)
                    .subsets()
                    .filter(|&e| self.is_admissible(e))
                    .collect();
                maximal_sets(&admissible)
            }
            _ => Bits::full(self.n)
                .subsets()
                .filter(|&e| self.satisfies(sem, e))
                .collect(),
        };
        canonical_sort(&mut out);
        Ok(out)
    }
}

pub(crate) fn check_arg_cap(count: usize, cap: usize) -> Result<()> {
    if count > cap {
        return Err(Error::CapExceeded {
            what: "arguments",
            count,
            cap,
            flag: ARG_CAP_FLAG,
        });
    }
    Ok(())
}

/// The ⊆-maximal elements of a family of sets.
pub fn maximal_sets(sets: &[Bits]) -> Vec<Bits> {
    sets.iter()
        .copied()
        .filter(|&e| !sets.iter().any(|&f| e != f && e.is_subset(f)))
        .collect()
}

impl Sbaf {
    fn af(&self) -> Af {
        Af::from_sbaf(self)
    }

    pub fn is_conflict_free(&self, e: Extension) -> bool {
        e.iter().all(|a| !self.attacks_of(a).intersects(e))
    }

    pub fn defends(&self, e: Extension, a: ArgIdx) -> bool {
        self.attackers_of(a)
            .iter()
            .all(|b| e.intersects(self.attackers_of(b)))
    }

    pub fn is_admissible(&self, e: Extension) -> bool {
        self.is_conflict_free(e) && e.iter().all(|a| self.defends(e, a))
    }

    pub fn is_complete(&self, e: Extension) -> bool {
        self.is_admissible(e)
            && (0..self.argument_count()).all(|a| !self.defends(e, a) || e.contains(a))
    }

    pub fn is_preferred(&self, e: Extension) -> bool {
        self.af().is_preferred(e)
    }

    pub fn enumerate_dung(&self, sem: DungSemantics, cap: usize) -> Result<Vec<Extension>> {
        self.af().enumerate(sem, cap)
    }

    /// The sub-framework over `keep`, with inherited language and induced
    /// attack and support relations.
    pub fn restrict(&self, keep: Bits) -> Result<Sbaf> {
        let mut b = Sbaf::builder();
        for s in self.language().sentences() {
            b.sentence(s)?;
        }
        for s in 0..self.language().sentence_count() {
            for t in self.language().incompatible_with(s).iter() {
                if t >= s {
                    b.incompatible(
                        self.language().sentence_id(s),
                        self.language().sentence_id(t),
                    )?;
                }
            }
        }
        for a in keep.iter() {
            let arg = self.argument(a);
            let premises: Vec<&str> = arg
                .premises()
                .iter()
                .map(|p| self.language().sentence_id(p))
                .collect();
            b.argument(
                arg.id(),
                &premises,
                self.language().sentence_id(arg.conclusion()),
            )?;
            if let Some(name) = self.name_of(a) {
                b.name(arg.id(), self.language().sentence_id(name))?;
            }
        }
        b.build()
    }
}
