//! The topological embedding of V_n(H) into V_m(G): an invariant prefix code
//! S of size n over the m-letter alphabet turns each letter of the large
//! alphabet into a block s_i, and each permutation of H into the element of G
//! whose letterwise action realizes it on blocks. The embedding conjugates
//! the two actions: evaluating the embedded table at a translated point gives
//! the translation of the original image.

use std::sync::Arc;

use crate::code::PrefixCode;
use crate::error::{Error, Result};
use crate::perm::{find_cyclic_isomorphism, Perm, PermGroup};
use crate::root::{root_group, RootGroup};
use crate::table::{Column, Table};
use crate::words::{EvWord, Word};

/// Context for embedding V_n(H) into V_m(G).
///
/// `conj` identifies H with the root group of S: conjugation by it maps H
/// onto the induced permutations. The letter i of the large alphabet is
/// translated to the block `s_{conj(i)}`, which makes the alignment
/// `t̃(σ(i)) = t(σ)(t̃(i))` hold for every σ in H.
#[derive(Clone, Debug)]
pub struct TopoContext {
    group_m: Arc<PermGroup>,
    group_n: Arc<PermGroup>,
    code: PrefixCode,
    root: RootGroup,
    conj: Perm,
}

impl TopoContext {
    /// Builds and verifies a context. When `conj` is omitted, a conjugator
    /// identifying H with the root group is searched for.
    pub fn build(
        group_m: PermGroup,
        group_n: PermGroup,
        code: PrefixCode,
        conj: Option<Perm>,
    ) -> Result<TopoContext> {
        let m = group_m.degree();
        let n = group_n.degree();
        if code.alphabet().size() != m {
            return Err(Error::DegreeMismatch { expected: m, found: code.alphabet().size() });
        }
        if code.len() != n {
            return Err(Error::CodeSizeMismatch { expected: n, found: code.len() });
        }
        if m < 2 || n < m || !(n - 1).is_multiple_of(m - 1) {
            return Err(Error::HigmanCondition { m, n });
        }
        let root = root_group(&group_m, &code)?;
        let conj = match conj {
            Some(c) => {
                if c.degree() != n {
                    return Err(Error::DegreeMismatch { expected: n, found: c.degree() });
                }
                c
            }
            None => find_cyclic_isomorphism(&group_n, root.perms()).ok_or(Error::NoConjugator)?,
        };
        let cinv = conj.inverse();
        for h in group_n.elements() {
            if root.preimage(&conj.compose(h).compose(&cinv)).is_none() {
                return Err(Error::ConjugatorMismatch(format!(
                    "conjugate of {h} is not induced by the acting group"
                )));
            }
        }
        let ctx = TopoContext {
            group_m: Arc::new(group_m),
            group_n: Arc::new(group_n),
            code,
            root,
            conj,
        };
        // Alignment between the two translating maps, on generators.
        for sigma in ctx.group_n.generators() {
            let lowered = ctx.lower(sigma).expect("verified conjugate");
            for i in 0..n {
                let lhs = ctx.letter_block(sigma.apply(i));
                let rhs = ctx.letter_block(i).permuted(&lowered);
                if *lhs != rhs {
                    return Err(Error::ConjugatorMismatch(format!(
                        "translating maps disagree at letter {i} under {sigma}"
                    )));
                }
            }
        }
        Ok(ctx)
    }

    pub fn m(&self) -> usize {
        self.group_m.degree()
    }

    pub fn n(&self) -> usize {
        self.group_n.degree()
    }

    pub fn small_group(&self) -> &Arc<PermGroup> {
        &self.group_m
    }

    pub fn large_group(&self) -> &Arc<PermGroup> {
        &self.group_n
    }

    pub fn code(&self) -> &PrefixCode {
        &self.code
    }

    pub fn conj(&self) -> &Perm {
        &self.conj
    }

    /// The block for one letter of the large alphabet.
    fn letter_block(&self, letter: usize) -> &Word {
        &self.code.words()[self.conj.apply(letter)]
    }

    /// The element of G inducing the conjugate of σ on the code.
    fn lower(&self, sigma: &Perm) -> Result<Perm> {
        let induced = self.conj.compose(sigma).compose(&self.conj.inverse());
        self.root
            .preimage(&induced)
            .cloned()
            .ok_or_else(|| Error::ConjugatorMismatch(format!("{sigma} has no preimage in G")))
    }

    /// Translates a word over the large alphabet into the concatenation of
    /// its letter blocks; the empty word maps to the empty word.
    pub fn translate_word(&self, w: &Word) -> Word {
        let mut out = Word::empty(self.code.alphabet());
        for &letter in w.letters() {
            out = out.concat(self.letter_block(letter));
        }
        out
    }

    /// Translates an eventually periodic point letter by letter.
    pub fn translate_point(&self, zeta: &EvWord) -> EvWord {
        let collect = |letters: &[usize]| -> Vec<usize> {
            letters
                .iter()
                .flat_map(|&l| self.letter_block(l).letters().iter().copied())
                .collect()
        };
        EvWord::new(self.code.alphabet(), collect(zeta.head()), collect(zeta.period()))
            .expect("blocks are nonempty")
    }

    /// The embedding: every word of the table goes through the translating
    /// map and every permutation is lowered to its preimage in G. The image
    /// is a valid table over (m, G), and the map is an injective
    /// homomorphism on elements.
    pub fn embed(&self, table: &Table) -> Result<Table> {
        if table.n() != self.n() || **table.group() != *self.group_n {
            return Err(Error::GroupMismatch(
                "table does not belong to the embedded group".into(),
            ));
        }
        let columns = table
            .columns()
            .iter()
            .map(|col| {
                Ok(Column::new(
                    self.translate_word(&col.p),
                    self.lower(&col.sigma)?,
                    self.translate_word(&col.q),
                    self.lower(&col.tau)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Table::new(self.group_m.clone(), columns)
    }
}
