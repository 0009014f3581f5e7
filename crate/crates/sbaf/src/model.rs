//! Languages, arguments and structured bipolar argumentation frameworks.
//!
//! A framework holds a language (sentences plus a symmetric incompatibility
//! function and a partial naming function) and a finite set of arguments,
//! each a non-empty premise set together with a conclusion. The attack
//! relation is derived from argument structure at construction time:
//! `a` attacks `b` when the conclusion of `a` is incompatible with a
//! sentence of `b`, or with the name of `b` (an undercut). Support is
//! set-valued and computed on demand: a set `E` supports `a` when every
//! premise of `a` occurs among the sentences of `E`.

use std::collections::HashMap;

use crate::bits::{Bits, MAX_ELEMS};
use crate::error::{Error, Result};

/// Index of an argument within its framework.
pub type ArgIdx = usize;
/// Index of a sentence within its language.
pub type SentIdx = usize;

/// A set of argument indices.
pub type Extension = Bits;
/// A set of sentence indices.
pub type SentenceSet = Bits;

fn valid_identifier(id: &str) -> bool {
    !id.is_empty()
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// Sentence universe with symmetric incompatibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Language {
    sentences: Vec<String>,
    index: HashMap<String, SentIdx>,
    incompatibility: Vec<Bits>,
}

impl Language {
    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }

    pub fn sentences(&self) -> &[String] {
        &self.sentences
    }

    pub fn sentence_id(&self, s: SentIdx) -> &str {
        &self.sentences[s]
    }

    pub fn sentence_index(&self, id: &str) -> Result<SentIdx> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownSentence(id.to_string()))
    }

    /// The set of sentences incompatible with `s` (the function s ↦ s̄).
    pub fn incompatible_with(&self, s: SentIdx) -> Bits {
        self.incompatibility[s]
    }

    pub fn are_incompatible(&self, s: SentIdx, t: SentIdx) -> bool {
        self.incompatibility[s].contains(t)
    }

    pub fn sentence_ids(&self, set: Bits) -> Vec<String> {
        set.iter().map(|s| self.sentences[s].clone()).collect()
    }
}

/// A premise set together with a conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Argument {
    id: String,
    premises: Bits,
    conclusion: SentIdx,
}

impl Argument {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn premises(&self) -> Bits {
        self.premises
    }

    pub fn conclusion(&self) -> SentIdx {
        self.conclusion
    }

    /// Sent(a) = Prem(a) ∪ {Conc(a)}. Names never count.
    pub fn sentences(&self) -> Bits {
        self.premises.with(self.conclusion)
    }

    /// A minimal argument presents a single sentence as its own conclusion.
    pub fn is_minimal(&self) -> bool {
        self.premises == Bits::singleton(self.conclusion)
    }
}

/// A structured bipolar argumentation framework.
///
/// Immutable after construction; all operations are pure reads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sbaf {
    language: Language,
    arguments: Vec<Argument>,
    arg_index: HashMap<String, ArgIdx>,
    /// Name sentence per argument, where assigned.
    names: Vec<Option<SentIdx>>,
    attacks_of: Vec<Bits>,
    attackers_of: Vec<Bits>,
    /// Sent(A): every sentence occurring in some argument.
    universe: Bits,
}

impl Sbaf {
    pub fn builder() -> SbafBuilder {
        SbafBuilder::default()
    }

    pub fn language(&self) -> &Language {
        &self.language
    }

    pub fn argument_count(&self) -> usize {
        self.arguments.len()
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.arguments
    }

    pub fn argument(&self, a: ArgIdx) -> &Argument {
        &self.arguments[a]
    }

    pub fn argument_id(&self, a: ArgIdx) -> &str {
        &self.arguments[a].id
    }

    pub fn arg_index(&self, id: &str) -> Result<ArgIdx> {
        self.arg_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(id.to_string()))
    }

    /// The full argument set as an index set.
    pub fn all_arguments(&self) -> Bits {
        Bits::full(self.arguments.len())
    }

    pub fn name_of(&self, a: ArgIdx) -> Option<SentIdx> {
        self.names[a]
    }

    /// Sent(A), the sentence universe of the framework.
    pub fn universe(&self) -> Bits {
        self.universe
    }

    /// Sent(E) for a set of arguments.
    pub fn sent(&self, extension: Bits) -> Bits {
        let mut out = Bits::EMPTY;
        for a in extension.iter() {
            out = out.union(self.arguments[a].sentences());
        }
        out
    }

    /// True iff `a` attacks `b`.
    pub fn attacks(&self, a: ArgIdx, b: ArgIdx) -> bool {
        self.attacks_of[a].contains(b)
    }

    /// Arguments attacked by `a`.
    pub fn attacks_of(&self, a: ArgIdx) -> Bits {
        self.attacks_of[a]
    }

    /// Arguments attacking `b`.
    pub fn attackers_of(&self, b: ArgIdx) -> Bits {
        self.attackers_of[b]
    }

    /// True iff some member of `extension` attacks `b`.
    pub fn set_attacks(&self, extension: Bits, b: ArgIdx) -> bool {
        extension.intersects(self.attackers_of[b])
    }

    /// True iff `extension` supports `a`, i.e. Prem(a) ⊆ Sent(extension).
    pub fn supports(&self, extension: Bits, a: ArgIdx) -> bool {
        self.arguments[a].premises.is_subset(self.sent(extension))
    }

    /// True iff `extension` contains undercutting information for `a`,
    /// i.e. `a` is named and n(a)̄ ∩ Sent(extension) ≠ ∅.
    /// Unnamed arguments can never be undercut.
    pub fn undercut_info(&self, extension: Bits, a: ArgIdx) -> bool {
        match self.names[a] {
            Some(name) => self
                .language
                .incompatible_with(name)
                .intersects(self.sent(extension)),
            None => false,
        }
    }

    fn has_minimal_for(&self, s: SentIdx) -> bool {
        self.arguments
            .iter()
            .any(|a| a.is_minimal() && a.conclusion == s)
    }

    fn saturation_flags(&self) -> (bool, bool) {
        let mut saturated = true;
        let mut strongly = true;
        for s in self.universe.iter() {
            let incompatible = self
                .language
                .incompatible_with(s)
                .intersection(self.universe);
            for t in incompatible.iter() {
                let has_s = self.has_minimal_for(s);
                let has_t = self.has_minimal_for(t);
                saturated &= has_s || has_t;
                strongly &= has_s && has_t;
            }
        }
        for (a, name) in self.names.iter().enumerate() {
            let _ = a;
            if let Some(name) = *name {
                for u in self
                    .language
                    .incompatible_with(name)
                    .intersection(self.universe)
                    .iter()
                {
                    let has_u = self.has_minimal_for(u);
                    saturated &= has_u;
                    strongly &= has_u;
                }
            }
        }
        (saturated, strongly)
    }

    /// Every incompatible sentence pair within Sent(A) is witnessed by a
    /// minimal argument for at least one side, and every undercut sentence
    /// by a minimal argument for it.
    pub fn is_saturated(&self) -> bool {
        self.saturation_flags().0
    }

    /// As [`is_saturated`](Self::is_saturated), but requiring minimal
    /// arguments for both sides of each incompatible pair.
    pub fn is_strongly_saturated(&self) -> bool {
        self.saturation_flags().1
    }

    /// Extends the framework with fresh unnamed minimal arguments until it
    /// is strongly saturated. Idempotent.
    pub fn strongly_saturate(&self) -> Result<Sbaf> {
        let mut current = self.clone();
        loop {
            let mut needed = Bits::EMPTY;
            for s in current.universe.iter() {
                if current
                    .language
                    .incompatible_with(s)
                    .intersects(current.universe)
                {
                    needed.insert(s);
                }
            }
            for name in current.names.iter().flatten() {
                needed = needed.union(current.language.incompatible_with(*name));
            }
            let missing: Vec<SentIdx> = needed
                .iter()
                .filter(|&s| !current.has_minimal_for(s))
                .collect();
            if missing.is_empty() {
                return Ok(current);
            }
            let mut builder = SbafBuilder::from_sbaf(&current);
            for s in missing {
                let sent = current.language.sentence_id(s).to_string();
                let mut id = format!("m_{sent}");
                while builder.has_argument(&id) {
                    id.push('_');
                }
                builder.argument(&id, &[&sent], &sent)?;
            }
            current = builder.build()?;
        }
    }

    /// Recomputes the attack relation from argument structure alone.
    /// Always equal to the stored relation.
    pub fn derive_attacks(&self) -> Vec<Bits> {
        let n = self.arguments.len();
        let mut attacks_of = vec![Bits::EMPTY; n];
        for (a, attacker) in self.arguments.iter().enumerate() {
            let reach = self.language.incompatible_with(attacker.conclusion);
            for (b, target) in self.arguments.iter().enumerate() {
                let undercut = match self.names[b] {
                    Some(name) => reach.contains(name),
                    None => false,
                };
                if reach.intersects(target.sentences()) || undercut {
                    attacks_of[a].insert(b);
                }
            }
        }
        attacks_of
    }

    /// Translates argument ids into an index set.
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

    /// Argument ids of an index set, in index order.
    pub fn extension_ids(&self, extension: Bits) -> Vec<String> {
        extension
            .iter()
            .map(|a| self.arguments[a].id.clone())
            .collect()
    }

    /// Translates sentence ids into an index set, requiring each to lie
    /// within Sent(A).
    pub fn sentence_set_from_ids<I, S>(&self, ids: I) -> Result<Bits>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Bits::EMPTY;
        for id in ids {
            let s = self.language.sentence_index(id.as_ref())?;
            if !self.universe.contains(s) {
                return Err(Error::SentenceOutsideUniverse(id.as_ref().to_string()));
            }
            out.insert(s);
        }
        Ok(out)
    }

    pub fn sentence_ids(&self, set: Bits) -> Vec<String> {
        self.language.sentence_ids(set)
    }

    /// Fails unless `set` lies within Sent(A).
    pub fn check_in_universe(&self, set: Bits) -> Result<()> {
        if let Some(s) = set.difference(self.universe).iter().next() {
            return Err(Error::SentenceOutsideUniverse(
                self.language.sentence_id(s).to_string(),
            ));
        }
        Ok(())
    }
}

/// Incremental construction of an [`Sbaf`]. Sentences referenced by
/// arguments or incompatibilities are declared implicitly.
#[derive(Debug, Default, Clone)]
pub struct SbafBuilder {
    sentences: Vec<String>,
    sentence_index: HashMap<String, SentIdx>,
    incompatibility: Vec<Bits>,
    arguments: Vec<Argument>,
    arg_index: HashMap<String, ArgIdx>,
    names: Vec<(String, SentIdx)>,
}

impl SbafBuilder {
    pub fn from_sbaf(sb: &Sbaf) -> SbafBuilder {
        SbafBuilder {
            sentences: sb.language.sentences.clone(),
            sentence_index: sb.language.index.clone(),
            incompatibility: sb.language.incompatibility.clone(),
            arguments: sb.arguments.clone(),
            arg_index: sb.arg_index.clone(),
            names: sb
                .names
                .iter()
                .enumerate()
                .filter_map(|(a, n)| n.map(|s| (sb.arguments[a].id.clone(), s)))
                .collect(),
        }
    }

    /// Declares a sentence, returning its index.
    pub fn sentence(&mut self, id: &str) -> Result<SentIdx> {
        if let Some(&s) = self.sentence_index.get(id) {
            return Ok(s);
        }
        if !valid_identifier(id) {
            return Err(Error::InvalidIdentifier(id.to_string()));
        }
        if self.sentences.len() >= MAX_ELEMS {
            return Err(Error::FrameworkTooLarge {
                what: "sentences",
                limit: MAX_ELEMS,
            });
        }
        let s = self.sentences.len();
        self.sentences.push(id.to_string());
        self.sentence_index.insert(id.to_string(), s);
        self.incompatibility.push(Bits::EMPTY);
        Ok(s)
    }

    /// Declares `s ∈ t̄` and, by symmetry, `t ∈ s̄`.
    pub fn incompatible(&mut self, s: &str, t: &str) -> Result<()> {
        let si = self.sentence(s)?;
        let ti = self.sentence(t)?;
        self.incompatibility[si].insert(ti);
        self.incompatibility[ti].insert(si);
        Ok(())
    }

    pub fn has_argument(&self, id: &str) -> bool {
        self.arg_index.contains_key(id)
    }

    pub fn argument(&mut self, id: &str, premises: &[&str], conclusion: &str) -> Result<()> {
        if !valid_identifier(id) {
            return Err(Error::InvalidIdentifier(id.to_string()));
        }
        if self.arg_index.contains_key(id) {
            return Err(Error::DuplicateArgument(id.to_string()));
        }
        if premises.is_empty() {
            return Err(Error::EmptyPremises(id.to_string()));
        }
        if self.arguments.len() >= MAX_ELEMS {
            return Err(Error::FrameworkTooLarge {
                what: "arguments",
                limit: MAX_ELEMS,
            });
        }
        let mut prem = Bits::EMPTY;
        for p in premises {
            prem.insert(self.sentence(p)?);
        }
        let conc = self.sentence(conclusion)?;
        self.arg_index.insert(id.to_string(), self.arguments.len());
        self.arguments.push(Argument {
            id: id.to_string(),
            premises: prem,
            conclusion: conc,
        });
        Ok(())
    }

    /// Assigns a name sentence to an argument.
    pub fn name(&mut self, arg_id: &str, sentence_id: &str) -> Result<()> {
        let s = self.sentence(sentence_id)?;
        self.names.push((arg_id.to_string(), s));
        Ok(())
    }

    pub fn build(self) -> Result<Sbaf> {
        if self.sentences.is_empty() {
            return Err(Error::EmptyLanguage);
        }
        let mut names = vec![None; self.arguments.len()];
        for (arg_id, s) in &self.names {
            let a = *self
                .arg_index
                .get(arg_id)
                .ok_or_else(|| Error::NameForUnknownArgument(arg_id.clone()))?;
            names[a] = Some(*s);
        }
        // a named minimal argument's name has no incompatibilities.
        for (a, arg) in self.arguments.iter().enumerate() {
            if let Some(name) = names[a] {
                if arg.is_minimal() && !self.incompatibility[name].is_empty() {
                    return Err(Error::NamedMinimalArgument {
                        argument: arg.id.clone(),
                        name: self.sentences[name].clone(),
                    });
                }
            }
        }
        let language = Language {
            sentences: self.sentences,
            index: self.sentence_index,
            incompatibility: self.incompatibility,
        };
        let universe = self
            .arguments
            .iter()
            .fold(Bits::EMPTY, |acc, a| acc.union(a.sentences()));
        let mut sb = Sbaf {
            language,
            arguments: self.arguments,
            arg_index: self.arg_index,
            names,
            attacks_of: Vec::new(),
            attackers_of: Vec::new(),
            universe,
        };
        sb.attacks_of = sb.derive_attacks();
        sb.attackers_of = vec![Bits::EMPTY; sb.arguments.len()];
        for a in 0..sb.arguments.len() {
            for b in sb.attacks_of[a].iter() {
                sb.attackers_of[b].insert(a);
            }
        }
        Ok(sb)
    }
}
