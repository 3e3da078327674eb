//! Successor coding and the algebraic embedding of V_m(G) into V_n(G_ext).
//!
//! With n = k(m-1) + m, a prefix code living under the letter a_{m-1} (and
//! complete once that letter is stripped) is assigned k successor words per
//! element, each of the form (strict prefix)‖(new letter a_m..a_{n-1}),
//! chosen as the dict-least candidate above the element that is still free.
//! The assignment depends on the order in which the code is listed; the
//! canonical order is reverse dictionary. A closed formula recovers the same
//! assignment under that order: (u a_j a_0^t)'_i = u a_{m-1+(m-1-j)k+i}.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::code::{is_complete, strict_prefixes};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::table::{Column, Table};
use crate::words::{Alphabet, Word};

/// A successor assignment: the code in its given order, and the k successors
/// of each element in index order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuccessorAssignment {
    m: usize,
    n: usize,
    k: usize,
    code: Vec<Word>,
    successors: Vec<Vec<Word>>,
}

impl SuccessorAssignment {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Successors per element.
    pub fn k(&self) -> usize {
        self.k
    }

    /// The code, in the order the assignment was computed.
    pub fn code(&self) -> &[Word] {
        &self.code
    }

    /// Successors of the s-th code element, in index order 1..=k.
    pub fn successors(&self, s: usize) -> &[Word] {
        &self.successors[s]
    }

    /// Successors of a code element looked up by value.
    pub fn successors_of(&self, w: &Word) -> Option<&[Word]> {
        self.code.iter().position(|c| c == w).map(|s| self.successors[s].as_slice())
    }
}

fn higman_k(m: usize, n: usize) -> Result<usize> {
    if m < 2 || n < m || !(n - m).is_multiple_of(m - 1) {
        return Err(Error::HigmanCondition { m, n });
    }
    Ok((n - m) / (m - 1))
}

/// Checks that every word starts with a_{m-1} and uses letters below m, and
/// that stripping the first letter leaves a complete prefix code over the
/// m-letter alphabet.
fn check_code_under_last_letter(ordered_code: &[Word], m: usize, n: usize) -> Result<()> {
    let small = Alphabet::new(m)?;
    let mut stripped = Vec::with_capacity(ordered_code.len());
    for w in ordered_code {
        if w.alphabet().size() != n {
            return Err(Error::DegreeMismatch { expected: n, found: w.alphabet().size() });
        }
        let letters = w.letters();
        if letters.first() != Some(&(m - 1)) || letters.iter().any(|&l| l >= m) {
            return Err(Error::NotUnderLetter { word: w.to_string(), letter: m - 1 });
        }
        stripped.push(Word::from_letters(small, letters[1..].to_vec()).expect("letters below m"));
    }
    let mut sorted = stripped.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != stripped.len() {
        return Err(Error::DuplicateWord(ordered_code[0].to_string()));
    }
    if !is_complete(small, &stripped) {
        return Err(Error::IncompleteCode { missing: format!("under letter {}", m - 1) });
    }
    Ok(())
}

/// Assigns successors by the inductive rule, in the order the code is
/// listed: for each element and index in turn, the dict-least unassigned
/// word (strict prefix)‖(new letter) lying strictly above the element.
///
/// Well-definedness is guaranteed for the reverse dictionary order and for
/// orders induced by it through a table; for other orders the selection can
/// run out of candidates, which is reported as an error.
pub fn successors_inductive(ordered_code: &[Word], m: usize, n: usize) -> Result<SuccessorAssignment> {
    let k = higman_k(m, n)?;
    check_code_under_last_letter(ordered_code, m, n)?;
    let alphabet = Alphabet::new(n)?;

    let mut candidates: BTreeSet<Word> = BTreeSet::new();
    for x in strict_prefixes(ordered_code) {
        for j in m..n {
            candidates.insert(x.child(j));
        }
    }

    let mut successors = Vec::with_capacity(ordered_code.len());
    for w in ordered_code {
        let mut row = Vec::with_capacity(k);
        for i in 1..=k {
            let Some(chosen) = candidates.iter().find(|c| *w < **c).cloned() else {
                return Err(Error::SuccessorExhausted { word: w.to_string(), index: i });
            };
            candidates.remove(&chosen);
            row.push(chosen);
        }
        successors.push(row);
    }
    let _ = alphabet;
    Ok(SuccessorAssignment { m, n, k, code: ordered_code.to_vec(), successors })
}

/// The closed formula for the i-th successor, valid when the code is listed
/// in reverse dictionary order: write w = u‖a_j‖a_0^t with j ≥ 1, then the
/// i-th successor is u‖a_{m-1+(m-1-j)k+i}.
pub fn successor_formula(w: &Word, m: usize, n: usize, i: usize) -> Result<Word> {
    let k = higman_k(m, n)?;
    if i < 1 || i > k {
        return Err(Error::ColumnIndexOutOfRange { index: i, len: k });
    }
    let letters = w.letters();
    if letters.first() != Some(&(m - 1)) || letters.iter().any(|&l| l >= m) {
        return Err(Error::NotUnderLetter { word: w.to_string(), letter: m - 1 });
    }
    let trailing = letters.iter().rev().take_while(|&&l| l == 0).count();
    let j = letters[letters.len() - trailing - 1];
    debug_assert!(j >= 1, "first letter a_(m-1) bounds the zero run");
    let mut out = letters[..letters.len() - trailing - 1].to_vec();
    out.push(m - 1 + (m - 1 - j) * k + i);
    Word::from_letters(w.alphabet(), out)
}

/// Expands one code element into its m children and checks that the
/// recomputed successors follow the expected pattern: the child a_c (c ≥ 1)
/// gets the fresh words p‖a_{m+(m-1-c)k} .. in order, and the child a_0
/// inherits the successors of the expanded element.
///
/// The code must be listed in reverse dictionary order.
pub fn check_expansion_pattern(
    ordered_code: &[Word],
    m: usize,
    n: usize,
    leaf: usize,
) -> Result<bool> {
    let k = higman_k(m, n)?;
    for pair in ordered_code.windows(2) {
        if pair[0] <= pair[1] {
            return Err(Error::NotReverseDictOrdered(pair[1].to_string()));
        }
    }
    if leaf >= ordered_code.len() {
        return Err(Error::ColumnIndexOutOfRange { index: leaf, len: ordered_code.len() });
    }
    let base = successors_inductive(ordered_code, m, n)?;
    let p = &ordered_code[leaf];

    let mut expanded = ordered_code.to_vec();
    expanded.remove(leaf);
    for c in 0..m {
        // children in descending letter order keep the list reverse-dict sorted
        expanded.insert(leaf, p.child(c));
    }
    let after = successors_inductive(&expanded, m, n)?;

    for c in 1..m {
        for i in 1..=k {
            let expected = p.child(m + (m - 1 - c) * k + i - 1);
            if after.successors_of(&p.child(c)).expect("child in code")[i - 1] != expected {
                return Ok(false);
            }
        }
    }
    let inherited = after.successors_of(&p.child(0)).expect("child in code");
    if inherited != base.successors(leaf) {
        return Ok(false);
    }
    Ok(true)
}

/// Context for the algebraic embedding of V_m(G) into V_n(G_ext), where
/// n = k(m-1) + m with k ≥ 1 and G_ext acts as G on the first m letters and
/// trivially on the rest.
#[derive(Clone, Debug)]
pub struct AlgContext {
    m: usize,
    n: usize,
    k: usize,
    group_m: Arc<PermGroup>,
    group_n: Arc<PermGroup>,
}

impl AlgContext {
    pub fn new(group: PermGroup, n: usize) -> Result<AlgContext> {
        let m = group.degree();
        let k = higman_k(m, n)?;
        if k == 0 {
            return Err(Error::HigmanCondition { m, n });
        }
        let extended = group.extend(n)?;
        Ok(AlgContext {
            m,
            n,
            k,
            group_m: Arc::new(group),
            group_n: Arc::new(extended),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn small_group(&self) -> &Arc<PermGroup> {
        &self.group_m
    }

    /// The extended group acting on the large alphabet.
    pub fn extended_group(&self) -> &Arc<PermGroup> {
        &self.group_n
    }

    /// The embedding. The table's columns are listed in reverse dictionary
    /// order of the domain words; the image consists of identity columns on
    /// the letters a_0..a_{m-2} and a_{m+k}..a_{n-1}, the original columns
    /// re-rooted under a_{m-1} with extended permutations, and one column per
    /// successor index pairing the domain and range successor words.
    ///
    /// Domain successors follow the closed formula (the reverse-dictionary
    /// assignment). A range successor reuses the domain's fresh letter,
    /// transported through the column twist: for a column with pushed twist
    /// ρ = τσ⁻¹, the word is the formula successor of the ρ-untwisted range
    /// word, re-twisted letterwise below its first letter. This is the only
    /// assignment under which the map is constant on move classes; it
    /// coincides with the plain formula on both sides whenever ρ is the
    /// identity.
    pub fn embed(&self, table: &Table) -> Result<Table> {
        if table.n() != self.m || **table.group() != *self.group_m {
            return Err(Error::GroupMismatch(
                "table does not belong to the embedded group".into(),
            ));
        }
        let large = Alphabet::new(self.n)?;
        let id = Perm::identity(self.n);
        let anchor = Word::from_letters(large, vec![self.m - 1]).expect("letter in range");

        let mut cols: Vec<&Column> = table.columns().iter().collect();
        cols.sort_by(|a, b| b.p.cmp(&a.p));

        let mut columns = Vec::new();
        for j in 0..self.m - 1 {
            let w = Word::from_letters(large, vec![j]).expect("letter in range");
            columns.push(Column::new(w.clone(), id.clone(), w, id.clone()));
        }
        let mut spares: Vec<Vec<Column>> = vec![Vec::new(); self.k];
        let mut range_spares: BTreeSet<Word> = BTreeSet::new();
        for col in &cols {
            let sigma_ext = col.sigma.extend(self.n).expect("n above m");
            let tau_ext = col.tau.extend(self.n).expect("n above m");
            let twist = col.tau.compose(&col.sigma.inverse());
            let twist_ext = twist.extend(self.n).expect("n above m");
            let dp = anchor.concat(&col.p.with_alphabet(large).expect("small letters"));
            let dq = anchor.concat(&col.q.with_alphabet(large).expect("small letters"));
            let untwisted = anchor.concat(
                &col.q.permuted(&twist.inverse()).with_alphabet(large).expect("small letters"),
            );
            columns.push(Column::new(dp.clone(), sigma_ext.clone(), dq, tau_ext.clone()));
            for j in 1..=self.k {
                let d_spare = successor_formula(&dp, self.m, self.n, j)?;
                let r_spare = retwist(&successor_formula(&untwisted, self.m, self.n, j)?, &twist_ext);
                if !range_spares.insert(r_spare.clone()) {
                    return Err(Error::SuccessorExhausted { word: r_spare.to_string(), index: j });
                }
                spares[j - 1].push(Column::new(d_spare, sigma_ext.clone(), r_spare, tau_ext.clone()));
            }
        }
        for level in spares {
            columns.extend(level);
        }
        for j in self.m + self.k..self.n {
            let w = Word::from_letters(large, vec![j]).expect("letter in range");
            columns.push(Column::new(w.clone(), id.clone(), w, id.clone()));
        }
        Table::new(self.group_n.clone(), columns)
    }
}

/// Keeps the first letter of a word and maps the remaining letters through
/// the permutation. Fresh letters are fixed by extended permutations, so
/// only the small-letter body of a successor word moves.
fn retwist(w: &Word, twist_ext: &Perm) -> Word {
    let mut letters = w.letters().to_vec();
    for l in letters.iter_mut().skip(1) {
        *l = twist_ext.apply(*l);
    }
    Word::from_letters(w.alphabet(), letters).expect("permuted letters stay in range")
}
