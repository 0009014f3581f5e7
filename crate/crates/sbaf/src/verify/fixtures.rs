//! The worked examples used throughout the test suite.

use crate::baf::Baf;
use crate::model::Sbaf;

/// The Stradivarius debate: support chains a1 ⇢ a2 and a3 ⇢ a4, mutual
/// rebut between a4 and a5 over who owns the violin.
pub fn f0() -> Sbaf {
    let mut b = Sbaf::builder();
    b.incompatible("Ann", "Hil").unwrap();
    b.argument("a1", &["Ale"], "Str").unwrap();
    b.argument("a2", &["Str"], "Exp").unwrap();
    b.argument("a3", &["New"], "Cla").unwrap();
    b.argument("a4", &["Cla"], "Ann").unwrap();
    b.argument("a5", &["Die"], "Hil").unwrap();
    b.build().unwrap()
}

/// Seven arguments with a joint support of a5 by {a2, a3}, a mutual rebut
/// a4/a5, an undercut of a6 by a5 and an attack a6 → a7.
pub fn f1() -> Sbaf {
    let mut b = Sbaf::builder();
    b.incompatible("t", "r").unwrap();
    b.incompatible("z", "p").unwrap();
    b.argument("a1", &["s"], "s").unwrap();
    b.argument("a2", &["u"], "v").unwrap();
    b.argument("a3", &["w"], "x").unwrap();
    b.argument("a4", &["s"], "t").unwrap();
    b.argument("a5", &["v", "x"], "r").unwrap();
    b.argument("a6", &["y"], "z").unwrap();
    b.argument("a7", &["p"], "q").unwrap();
    b.name("a6", "n6").unwrap();
    b.incompatible("r", "n6").unwrap();
    b.build().unwrap()
}

/// Two arguments where maximising sentences and maximising arguments
/// come apart: the empty set is confident weakly coherent, not preferred.
pub fn f2() -> Sbaf {
    let mut b = Sbaf::builder();
    b.incompatible("s", "u").unwrap();
    b.argument("a1", &["s"], "s").unwrap();
    b.argument("a2", &["t", "u"], "t").unwrap();
    b.build().unwrap()
}

/// The directionality counterexample: a1 jointly commits to the mutually
/// attacking a2 and a3 under strong support-closure.
pub fn f3() -> Sbaf {
    let mut b = Sbaf::builder();
    b.incompatible("r", "nr").unwrap();
    b.argument("a1", &["s", "t", "u"], "v").unwrap();
    b.argument("a2", &["s"], "r").unwrap();
    b.argument("a3", &["t"], "nr").unwrap();
    b.build().unwrap()
}

/// Two arguments sharing a premise: d-admissibility accepts {a1} alone,
/// strong coherence does not.
pub fn f4() -> Sbaf {
    let mut b = Sbaf::builder();
    b.argument("a1", &["s"], "t").unwrap();
    b.argument("a2", &["s"], "u").unwrap();
    b.build().unwrap()
}

/// A strongly coherent extension whose sentences are incompatible: the
/// conflict sits between premises only, so no attack arises.
pub fn f5() -> Sbaf {
    let mut b = Sbaf::builder();
    b.incompatible("s", "u").unwrap();
    b.argument("a1", &["s"], "t").unwrap();
    b.argument("a2", &["u"], "v").unwrap();
    b.build().unwrap()
}

/// The BAF with one support a3 ⇢ a2 that induces a mediated attack
/// (a1, a3) and a supported attack (a3, a4).
pub fn b1() -> Baf {
    // a1 → a2, a2 → a4, a5 → a1, a3 ⇢ a2
    Baf::new(
        ["a1", "a2", "a3", "a4", "a5"],
        [(0, 1), (1, 3), (4, 0)],
        [(2, 1)],
    )
}

/// Every fixture SBAF, with its conventional label.
pub fn all_sbafs() -> Vec<(&'static str, Sbaf)> {
    vec![
        ("F0", f0()),
        ("F1", f1()),
        ("F2", f2()),
        ("F3", f3()),
        ("F4", f4()),
        ("F5", f5()),
    ]
}
