//! Root groups: the permutation group induced on a G-invariant prefix code
//! by the letterwise action of G, indexed by the dictionary order of the code.

use std::collections::{BTreeMap, BTreeSet};

use crate::code::{PrefixCode, Triple};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};

/// The root group of an invariant code, together with the isomorphism from
/// the acting group onto it.
#[derive(Clone, Debug)]
pub struct RootGroup {
    base: Triple,
    code: PrefixCode,
    perms: PermGroup,
    to_root: BTreeMap<Perm, Perm>,
    from_root: BTreeMap<Perm, Perm>,
}

impl RootGroup {
    pub fn base(&self) -> &Triple {
        &self.base
    }

    /// The invariant code, in dictionary order s_0 < … < s_{n-1}.
    pub fn code(&self) -> &PrefixCode {
        &self.code
    }

    /// The induced permutations of {0, .., n-1}.
    pub fn perms(&self) -> &PermGroup {
        &self.perms
    }

    /// Image of an element of the acting group.
    pub fn map(&self, g: &Perm) -> Option<&Perm> {
        self.to_root.get(g)
    }

    /// Preimage of an induced permutation.
    pub fn preimage(&self, induced: &Perm) -> Option<&Perm> {
        self.from_root.get(induced)
    }
}

/// Computes the root group of `group` acting on the invariant code: each
/// element g induces the permutation i ↦ index of g(s_i).
pub fn root_group(group: &PermGroup, code: &PrefixCode) -> Result<RootGroup> {
    if group.degree() != code.alphabet().size() {
        return Err(Error::DegreeMismatch {
            expected: code.alphabet().size(),
            found: group.degree(),
        });
    }
    for g in group.generators() {
        for w in code.words() {
            let image = w.permuted(g);
            if !code.contains(&image) {
                return Err(Error::NotInvariant { word: w.to_string() });
            }
        }
    }

    let n = code.len();
    let mut to_root = BTreeMap::new();
    let mut from_root = BTreeMap::new();
    let mut elements = BTreeSet::new();
    for g in group.elements() {
        let image: Vec<usize> = code
            .words()
            .iter()
            .map(|w| code.index_of(&w.permuted(g)).expect("invariant code"))
            .collect();
        let induced = Perm::from_image(image).expect("action permutes the code");
        elements.insert(induced.clone());
        to_root.insert(g.clone(), induced.clone());
        from_root.insert(induced, g.clone());
    }
    if elements.len() != group.order() {
        // The action on a complete code is faithful, so this is unreachable
        // for well-formed inputs; report rather than panic.
        return Err(Error::CodeSizeMismatch { expected: group.order(), found: elements.len() });
    }
    let generators: Vec<Perm> =
        group.generators().iter().map(|g| to_root[g].clone()).collect();
    let perms = PermGroup::from_parts(n, generators, elements);
    let base = Triple::new(group.clone(), n)?;
    Ok(RootGroup { base, code: code.clone(), perms, to_root, from_root })
}
