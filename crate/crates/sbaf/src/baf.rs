//! Bipolar argumentation frameworks with binary support, the
//! supported/mediated complex-attack closure, and d-semantics.

use std::collections::HashMap;

use crate::af::{check_arg_cap, Af, DungSemantics};
use crate::bits::{canonical_sort, Bits};
use crate::error::{Error, Result};
use crate::model::{ArgIdx, Extension, Sbaf};

/// How binary support is read off an SBAF's argument structure.
///
/// The two rules genuinely diverge: `Conclusion` reproduces the deductive
/// d-semantics comparison, `Singleton` the mutual-support diagrams, so both
/// are exposed and `Conclusion` is the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SupportRule {
    /// a ⇢ b iff Conc(a) ∈ Prem(b), a ≠ b.
    #[default]
    Conclusion,
    /// a ⇢ b iff Prem(b) ⊆ Sent({a}), a ≠ b.
    Singleton,
}

impl std::str::FromStr for SupportRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<SupportRule> {
        match s {
            "conclusion" => Ok(SupportRule::Conclusion),
            "singleton" => Ok(SupportRule::Singleton),
            other => Err(Error::UnknownSupportRule(other.to_string())),
        }
    }
}

impl std::fmt::Display for SupportRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SupportRule::Conclusion => "conclusion",
            SupportRule::Singleton => "singleton",
        })
    }
}

/// A bipolar argumentation framework: arguments plus binary attack and
/// support relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Baf {
    ids: Vec<String>,
    index: HashMap<String, ArgIdx>,
    attacks_of: Vec<Bits>,
    supports_of: Vec<Bits>,
}

impl Baf {
    pub fn new<S: Into<String>>(
        ids: impl IntoIterator<Item = S>,
        attacks: impl IntoIterator<Item = (ArgIdx, ArgIdx)>,
        supports: impl IntoIterator<Item = (ArgIdx, ArgIdx)>,
    ) -> Baf {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        let n = ids.len();
        let index = ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), i))
            .collect();
        let mut attacks_of = vec![Bits::EMPTY; n];
        for (a, b) in attacks {
            attacks_of[a].insert(b);
        }
        let mut supports_of = vec![Bits::EMPTY; n];
        for (a, b) in supports {
            supports_of[a].insert(b);
        }
        Baf {
            ids,
            index,
            attacks_of,
            supports_of,
        }
    }

    /// Projects an SBAF onto a BAF: arguments and attacks are copied,
    /// binary support is read off per `rule`.
    pub fn from_sbaf(sb: &Sbaf, rule: SupportRule) -> Baf {
        let n = sb.argument_count();
        let supports = (0..n).flat_map(|a| {
            (0..n).filter_map(move |b| {
                if a == b {
                    return None;
                }
                let holds = match rule {
                    SupportRule::Conclusion => {
                        sb.argument(b).premises().contains(sb.argument(a).conclusion())
                    }
                    SupportRule::Singleton => {
                        sb.argument(b).premises().is_subset(sb.argument(a).sentences())
                    }
                };
                holds.then_some((a, b))
            })
        });
        Baf::new(
            sb.arguments().iter().map(|a| a.id().to_string()),
            (0..n).flat_map(|a| sb.attacks_of(a).iter().map(move |b| (a, b))),
            supports.collect::<Vec<_>>(),
        )
    }

    pub fn argument_count(&self) -> usize {
        self.ids.len()
    }

    pub fn argument_id(&self, a: ArgIdx) -> &str {
        &self.ids[a]
    }

    pub fn arg_index(&self, id: &str) -> Result<ArgIdx> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(id.to_string()))
    }

    pub fn attacks(&self, a: ArgIdx, b: ArgIdx) -> bool {
        self.attacks_of[a].contains(b)
    }

    pub fn supports(&self, a: ArgIdx, b: ArgIdx) -> bool {
        self.supports_of[a].contains(b)
    }

    pub fn support_edges(&self) -> Vec<(ArgIdx, ArgIdx)> {
        (0..self.ids.len())
            .flat_map(|a| self.supports_of[a].iter().map(move |b| (a, b)))
            .collect()
    }

    pub fn attack_edges(&self) -> Vec<(ArgIdx, ArgIdx)> {
        (0..self.ids.len())
            .flat_map(|a| self.attacks_of[a].iter().map(move |b| (a, b)))
            .collect()
    }

    /// The base attack relation as a plain AF.
    pub fn base_af(&self) -> Af {
        Af::new(self.ids.len(), self.attack_edges())
    }

    /// Supported attack from `a` to `b` w.r.t. `rel`: some `c` with
    /// a ⇢ c and (c, b) ∈ rel.
    pub fn supported_attack(&self, a: ArgIdx, b: ArgIdx, rel: &Af) -> bool {
        self.supports_of[a].iter().any(|c| rel.attacks(c, b))
    }

    /// Mediated attack from `a` to `b` w.r.t. `rel`: some `c` with
    /// b ⇢ c and (a, c) ∈ rel.
    pub fn mediated_attack(&self, a: ArgIdx, b: ArgIdx, rel: &Af) -> bool {
        self.supports_of[b].iter().any(|c| rel.attacks(a, c))
    }

    /// The complex-attack closure: the least relation containing the base
    /// attacks and closed under adding supported and mediated attacks.
    pub fn complex_attacks(&self) -> Af {
        let n = self.ids.len();
        let mut rel = self.base_af();
        loop {
            let mut extra = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    if !rel.attacks(a, b)
                        && (self.supported_attack(a, b, &rel)
                            || self.mediated_attack(a, b, &rel))
                    {
                        extra.push((a, b));
                    }
                }
            }
            if extra.is_empty() {
                return rel;
            }
            let mut edges = rel.edges();
            edges.extend(extra);
            rel = Af::new(n, edges);
        }
    }

    /// True iff `e` is closed under the support relation.
    pub fn support_closed(&self, e: Extension) -> bool {
        e.iter().all(|a| self.supports_of[a].is_subset(e))
    }

    /// Admissible in ⟨A, →co⟩ and closed under support.
    pub fn is_d_admissible(&self, e: Extension) -> bool {
        self.complex_attacks().is_admissible(e) && self.support_closed(e)
    }

    /// Complete in ⟨A, →co⟩.
    pub fn is_d_complete(&self, e: Extension) -> bool {
        self.complex_attacks().is_complete(e)
    }

    /// Preferred in ⟨A, →co⟩.
    pub fn is_d_preferred(&self, e: Extension) -> bool {
        self.complex_attacks().is_preferred(e)
    }

    pub fn enumerate_d_admissible(&self, cap: usize) -> Result<Vec<Extension>> {
        check_arg_cap(self.ids.len(), cap)?;
        let co = self.complex_attacks();
        let mut out: Vec<Extension> = Bits::full(self.ids.len())
            .subsets()
            .filter(|&e| co.is_admissible(e) && self.support_closed(e))
            .collect();
        canonical_sort(&mut out);
        Ok(out)
    }

    pub fn enumerate_d_complete(&self, cap: usize) -> Result<Vec<Extension>> {
        self.complex_attacks().enumerate(DungSemantics::Complete, cap)
    }

    pub fn enumerate_d_preferred(&self, cap: usize) -> Result<Vec<Extension>> {
        self.complex_attacks().enumerate(DungSemantics::Preferred, cap)
    }

    pub fn extension_from_ids<I, S>(&self, ids: I) -> Result<Bits>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Bits::EMPTY;
        for id in ids {
            out.insert(self.arg_index(id.as_ref())?);
        }
        Ok(out)
    }
}
