//! Elements of V_n(H) as tables: two complete prefix codes of equal size
//! with permutations from H attached to each column, the column `(p, σ, q, τ)`
//! sending the cylinder `p‖σ(u)` to `q‖τ(u)`.
//!
//! Infinitely many tables describe the same homeomorphism; the four basic
//! moves (expansion, reduction, pushing down, pushing up) generate the
//! equivalence. Equality of elements is decided semantically: `g` equals `h`
//! when `g ∘ h⁻¹` pushes down to a table that fixes every cylinder.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::code::PrefixCode;
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::rng::Rng;
use crate::words::{Alphabet, EvWord, Word};

/// One table column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Column {
    pub p: Word,
    pub sigma: Perm,
    pub q: Word,
    pub tau: Perm,
}

impl Column {
    pub fn new(p: Word, sigma: Perm, q: Word, tau: Perm) -> Self {
        Column { p, sigma, q, tau }
    }
}

/// A table over (n, H). Validated on construction: both code rows are
/// complete prefix codes and every permutation belongs to H.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table {
    alphabet: Alphabet,
    group: Arc<PermGroup>,
    columns: Vec<Column>,
}

impl Table {
    pub fn new(group: Arc<PermGroup>, columns: Vec<Column>) -> Result<Table> {
        let problems = validation_errors(&group, &columns);
        if !problems.is_empty() {
            return Err(Error::InvalidTable(problems));
        }
        let alphabet = Alphabet::new(group.degree())?;
        Ok(Table { alphabet, group, columns })
    }

    fn assemble(group: Arc<PermGroup>, columns: Vec<Column>) -> Table {
        debug_assert!(validation_errors(&group, &columns).is_empty());
        let alphabet = Alphabet::new(group.degree()).expect("degree checked");
        Table { alphabet, group, columns }
    }

    /// The identity element: one column (ε, id, ε, id).
    pub fn identity(group: Arc<PermGroup>) -> Table {
        let alphabet = Alphabet::new(group.degree()).expect("degree at least 2");
        let id = Perm::identity(group.degree());
        let eps = Word::empty(alphabet);
        Table::assemble(group, vec![Column::new(eps.clone(), id.clone(), eps, id)])
    }

    /// The table realizing the letterwise action of a single element of H.
    pub fn from_perm(group: Arc<PermGroup>, tau: Perm) -> Result<Table> {
        let alphabet = Alphabet::new(group.degree())?;
        let id = Perm::identity(group.degree());
        let eps = Word::empty(alphabet);
        Table::new(group, vec![Column::new(eps.clone(), id, eps, tau)])
    }

    pub fn n(&self) -> usize {
        self.alphabet.size()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn domain_code(&self) -> PrefixCode {
        let mut words: Vec<Word> = self.columns.iter().map(|c| c.p.clone()).collect();
        words.sort();
        PrefixCode::from_sorted_unchecked(self.alphabet, words)
    }

    pub fn range_code(&self) -> PrefixCode {
        let mut words: Vec<Word> = self.columns.iter().map(|c| c.q.clone()).collect();
        words.sort();
        PrefixCode::from_sorted_unchecked(self.alphabet, words)
    }

    /// Image of an eventually periodic point: the unique column with
    /// `p ≤ ζ` applies, and `ζ = p‖w` maps to `q‖τ(σ⁻¹(w))`.
    pub fn evaluate(&self, zeta: &EvWord) -> EvWord {
        assert_eq!(zeta.alphabet(), self.alphabet, "alphabet mismatch");
        for col in &self.columns {
            if let Some(w) = zeta.strip_prefix(&col.p) {
                let twist = col.tau.compose(&col.sigma.inverse());
                return col.q.concat_ev(&w.permuted(&twist));
            }
        }
        unreachable!("complete domain code must cover every point")
    }

    /// Expansion: column i is replaced by the n columns
    /// `(p‖σ(j), σ, q‖τ(j), τ)` for j = 0..n-1.
    pub fn expand_column(&self, index: usize) -> Result<Table> {
        if index >= self.columns.len() {
            return Err(Error::ColumnIndexOutOfRange { index, len: self.columns.len() });
        }
        let mut columns = self.columns.clone();
        let col = columns.remove(index);
        for j in self.alphabet.letters() {
            columns.insert(
                index + j,
                Column::new(
                    col.p.child(col.sigma.apply(j)),
                    col.sigma.clone(),
                    col.q.child(col.tau.apply(j)),
                    col.tau.clone(),
                ),
            );
        }
        Ok(Table::assemble(self.group.clone(), columns))
    }

    /// Reduction: if some n columns are exactly the expansion of a single
    /// virtual column, merge them. Candidate parents are tried in dictionary
    /// order of the domain word, so the merge is deterministic. Returns
    /// `None` when no merge applies.
    pub fn reduce_once(&self) -> Option<Table> {
        let n = self.n();
        // (p-parent, σ, q-parent, τ) → the child slots already seen.
        type Parent = (Word, Perm, Word, Perm);
        let mut groups: BTreeMap<Parent, Vec<(usize, usize)>> = BTreeMap::new();
        for (idx, col) in self.columns.iter().enumerate() {
            let (Some((&pa, pp)), Some((&qa, qp))) =
                (col.p.letters().split_last(), col.q.letters().split_last())
            else {
                continue;
            };
            let j = col.sigma.inverse().apply(pa);
            if col.tau.apply(j) != qa {
                continue;
            }
            let p_parent = Word::from_letters(self.alphabet, pp.to_vec()).expect("parent word");
            let q_parent = Word::from_letters(self.alphabet, qp.to_vec()).expect("parent word");
            groups
                .entry((p_parent, col.sigma.clone(), q_parent, col.tau.clone()))
                .or_default()
                .push((j, idx));
        }
        for ((p, sigma, q, tau), slots) in groups {
            if slots.len() != n {
                continue;
            }
            let mut seen = vec![false; n];
            for &(j, _) in &slots {
                seen[j] = true;
            }
            if !seen.iter().all(|&b| b) {
                continue;
            }
            let first = slots.iter().map(|&(_, idx)| idx).min().expect("nonempty");
            let remove: Vec<usize> = slots.iter().map(|&(_, idx)| idx).collect();
            let mut columns = Vec::with_capacity(self.columns.len() - n + 1);
            for (idx, col) in self.columns.iter().enumerate() {
                if idx == first {
                    columns.push(Column::new(p.clone(), sigma.clone(), q.clone(), tau.clone()));
                }
                if !remove.contains(&idx) {
                    columns.push(col.clone());
                }
            }
            return Some(Table::assemble(self.group.clone(), columns));
        }
        None
    }

    /// Moves all torsion to the bottom row: columns become (p, id, q, τσ⁻¹).
    pub fn push_down(&self) -> Table {
        let id = Perm::identity(self.n());
        let columns = self
            .columns
            .iter()
            .map(|c| {
                Column::new(c.p.clone(), id.clone(), c.q.clone(), c.tau.compose(&c.sigma.inverse()))
            })
            .collect();
        Table::assemble(self.group.clone(), columns)
    }

    /// Moves all torsion to the top row: columns become (p, στ⁻¹, q, id).
    pub fn push_up(&self) -> Table {
        let id = Perm::identity(self.n());
        let columns = self
            .columns
            .iter()
            .map(|c| {
                Column::new(c.p.clone(), c.sigma.compose(&c.tau.inverse()), c.q.clone(), id.clone())
            })
            .collect();
        Table::assemble(self.group.clone(), columns)
    }

    /// Swaps the two code rows together with their permutations.
    pub fn inverse(&self) -> Table {
        let columns = self
            .columns
            .iter()
            .map(|c| Column::new(c.q.clone(), c.tau.clone(), c.p.clone(), c.sigma.clone()))
            .collect();
        Table::assemble(self.group.clone(), columns)
    }

    /// Composition `self ∘ first` (`first` applied first). Both tables are
    /// refined to a common intermediate code, `first` is pushed up and
    /// `self` pushed down, and the columns are spliced along that code.
    pub fn compose(&self, first: &Table) -> Result<Table> {
        self.check_compatible(first)?;
        let mid = first.range_code().common_refinement(&self.domain_code());

        // Refine `first` so its range code becomes `mid`.
        let mut lower: BTreeMap<Word, Column> = BTreeMap::new();
        for col in &first.columns {
            let shift = col.sigma.compose(&col.tau.inverse());
            for s in mid.words() {
                if let Some(w) = strip_word(s, &col.q) {
                    lower.insert(
                        s.clone(),
                        Column::new(
                            col.p.concat(&w.permuted(&shift)),
                            col.sigma.clone(),
                            s.clone(),
                            col.tau.clone(),
                        ),
                    );
                }
            }
        }

        // Refine `self` so its domain code becomes `mid`.
        let mut upper: BTreeMap<Word, Column> = BTreeMap::new();
        for col in &self.columns {
            let twist = col.tau.compose(&col.sigma.inverse());
            for s in mid.words() {
                if let Some(w) = strip_word(s, &col.p) {
                    upper.insert(
                        s.clone(),
                        Column::new(
                            s.clone(),
                            col.sigma.clone(),
                            col.q.concat(&w.permuted(&twist)),
                            col.tau.clone(),
                        ),
                    );
                }
            }
        }

        let columns = mid
            .words()
            .iter()
            .map(|s| {
                let u = &lower[s];
                let v = &upper[s];
                Column::new(
                    u.p.clone(),
                    u.sigma.compose(&u.tau.inverse()),
                    v.q.clone(),
                    v.tau.compose(&v.sigma.inverse()),
                )
            })
            .collect();
        Ok(Table::assemble(self.group.clone(), columns))
    }

    /// Whether the table describes the identity homeomorphism: after pushing
    /// down, every column must fix its cylinder with trivial twist.
    pub fn is_identity(&self) -> bool {
        self.push_down().columns.iter().all(|c| c.p == c.q && c.tau.is_identity())
    }

    /// Semantic equality: `g` equals `h` iff `g ∘ h⁻¹` is the identity.
    pub fn equals(&self, other: &Table) -> Result<bool> {
        Ok(self.compose(&other.inverse())?.is_identity())
    }

    /// Canonical representative: push down, reduce to exhaustion, then sort
    /// columns by dictionary order of the domain word.
    pub fn canonical(&self) -> Element {
        let mut t = self.push_down();
        while let Some(next) = t.reduce_once() {
            t = next;
        }
        t.columns.sort_by(|a, b| a.p.cmp(&b.p));
        Element(t)
    }

    /// Deterministic random element: ≤ `depth` expansions for each code row,
    /// a random pairing between them, and random permutations from H.
    pub fn random(group: Arc<PermGroup>, depth: usize, seed: u64) -> Table {
        let mut rng = Rng::new(seed);
        Table::random_with(group, depth, &mut rng)
    }

    pub fn random_with(group: Arc<PermGroup>, depth: usize, rng: &mut Rng) -> Table {
        let alphabet = Alphabet::new(group.degree()).expect("degree at least 2");
        let expansions = rng.below(depth + 1);
        let p_code = random_code(alphabet, expansions, rng);
        let q_code = random_code(alphabet, expansions, rng);
        let elements: Vec<&Perm> = group.elements().collect();
        let mut pairing: Vec<usize> = (0..p_code.len()).collect();
        for i in (1..pairing.len()).rev() {
            pairing.swap(i, rng.below(i + 1));
        }
        let columns = p_code
            .words()
            .iter()
            .zip(&pairing)
            .map(|(p, &qi)| {
                Column::new(
                    p.clone(),
                    elements[rng.below(elements.len())].clone(),
                    q_code.words()[qi].clone(),
                    elements[rng.below(elements.len())].clone(),
                )
            })
            .collect();
        Table::assemble(group, columns)
    }

    /// Deterministic random element of the subgroup generated by V_n and the
    /// letterwise copies of H: a random prefix map composed with one global
    /// letterwise twist, so every column carries the same pushed twist.
    ///
    /// Tables built by [`Table::random`] may mix different twists across
    /// columns; such tables describe homeomorphisms outside that subgroup.
    pub fn random_uniform(group: Arc<PermGroup>, depth: usize, seed: u64) -> Table {
        let mut rng = Rng::new(seed);
        let alphabet = Alphabet::new(group.degree()).expect("degree at least 2");
        let expansions = rng.below(depth + 1);
        let p_code = random_code(alphabet, expansions, &mut rng);
        let q_code = random_code(alphabet, expansions, &mut rng);
        let elements: Vec<&Perm> = group.elements().collect();
        let twist = elements[rng.below(elements.len())].clone();
        let id = Perm::identity(group.degree());
        let mut pairing: Vec<usize> = (0..p_code.len()).collect();
        for i in (1..pairing.len()).rev() {
            pairing.swap(i, rng.below(i + 1));
        }
        let columns = p_code
            .words()
            .iter()
            .zip(&pairing)
            .map(|(p, &qi)| {
                Column::new(p.clone(), id.clone(), q_code.words()[qi].permuted(&twist), twist.clone())
            })
            .collect();
        Table::assemble(group, columns)
    }

    fn check_compatible(&self, other: &Table) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::GroupMismatch(format!(
                "alphabet sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        if self.group != other.group && *self.group != *other.group {
            return Err(Error::GroupMismatch("different groups H".into()));
        }
        Ok(())
    }
}

fn strip_word(long: &Word, prefix: &Word) -> Option<Word> {
    long.letters()
        .strip_prefix(prefix.letters())
        .map(|rest| Word::from_letters(long.alphabet(), rest.to_vec()).expect("suffix letters"))
}

fn random_code(alphabet: Alphabet, expansions: usize, rng: &mut Rng) -> PrefixCode {
    let mut code = PrefixCode::root(alphabet);
    for _ in 0..expansions {
        code = code.expand_at(rng.below(code.len()));
    }
    code
}

/// All invariant violations of a prospective table, reported individually.
pub fn validation_errors(group: &PermGroup, columns: &[Column]) -> Vec<String> {
    let mut problems = Vec::new();
    let n = group.degree();
    if n < 2 {
        problems.push(format!("group degree {n} is smaller than 2"));
        return problems;
    }
    let alphabet = Alphabet::new(n).expect("checked degree");
    if columns.is_empty() {
        problems.push("table has no columns".into());
        return problems;
    }
    for (i, col) in columns.iter().enumerate() {
        if col.p.alphabet() != alphabet || col.q.alphabet() != alphabet {
            problems.push(format!("column {i}: word alphabet differs from n = {n}"));
        }
        for (name, perm) in [("sigma", &col.sigma), ("tau", &col.tau)] {
            if perm.degree() != n {
                problems.push(format!(
                    "column {i}: {name} has degree {}, expected {n}",
                    perm.degree()
                ));
            } else if !group.contains(perm) {
                problems.push(format!("column {i}: {name} = {perm} is not an element of H"));
            }
        }
    }
    if problems.is_empty() {
        for (row, words) in [
            ("domain", columns.iter().map(|c| c.p.clone()).collect::<Vec<_>>()),
            ("range", columns.iter().map(|c| c.q.clone()).collect::<Vec<_>>()),
        ] {
            let mut sorted = words;
            sorted.sort();
            sorted.dedup();
            if sorted.len() != columns.len() {
                problems.push(format!("{row} row has repeated words"));
                continue;
            }
            if let Err(e) = PrefixCode::new(alphabet, sorted) {
                problems.push(format!("{row} row is not a complete prefix code: {e}"));
            }
        }
    }
    problems
}

/// A table in canonical form. Equality is semantic, via [`Table::equals`].
#[derive(Clone, Debug)]
pub struct Element(Table);

impl Element {
    pub fn table(&self) -> &Table {
        &self.0
    }

    pub fn into_table(self) -> Table {
        self.0
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.0.equals(&other.0).unwrap_or(false)
    }
}

impl Eq for Element {}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(n: usize) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, ab(n)).unwrap()
    }

    fn ev(s: &str, n: usize) -> EvWord {
        EvWord::parse(s, ab(n)).unwrap()
    }

    fn sym(n: usize) -> Arc<PermGroup> {
        Arc::new(PermGroup::symmetric(n))
    }

    fn trivial(n: usize) -> Arc<PermGroup> {
        Arc::new(PermGroup::trivial(n))
    }

    fn id_col(p: &str, q: &str, n: usize) -> Column {
        Column::new(w(p, n), Perm::identity(n), w(q, n), Perm::identity(n))
    }

    /// The V_2 element swapping the cylinders 0 and 1.
    fn swap_table() -> Table {
        Table::new(trivial(2), vec![id_col("0", "1", 2), id_col("1", "0", 2)]).unwrap()
    }

    #[test]
    fn validation_collects_problems() {
        let h = trivial(2);
        assert!(Table::new(h.clone(), vec![id_col("", "", 2)]).is_ok());

        let errs = validation_errors(&h, &[id_col("0", "0", 2), id_col("11", "00", 2)]);
        assert!(errs.iter().any(|e| e.contains("domain row")), "{errs:?}");
        assert!(errs.iter().any(|e| e.contains("range row")), "{errs:?}");

        let swap = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let bad = vec![Column::new(w("", 2), Perm::identity(2), w("", 2), swap)];
        let errs = validation_errors(&h, &bad);
        assert!(errs.iter().any(|e| e.contains("not an element of H")), "{errs:?}");
    }

    #[test]
    fn evaluate_identity_and_swap() {
        let id = Table::identity(trivial(2));
        for z in ["(0)", "10(01)", "(10)"] {
            assert_eq!(id.evaluate(&ev(z, 2)), ev(z, 2));
        }
        assert_eq!(swap_table().evaluate(&ev("0(1)", 2)), ev("1(1)", 2));
    }

    #[test]
    fn evaluate_letterwise_permutation() {
        let h = sym(2);
        let swap = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let t = Table::from_perm(h, swap).unwrap();
        assert_eq!(t.evaluate(&ev("(01)", 2)), ev("(10)", 2));
    }

    #[test]
    fn expansion_of_identity() {
        let t = Table::identity(trivial(2)).expand_column(0).unwrap();
        assert_eq!(t.columns(), &[id_col("0", "0", 2), id_col("1", "1", 2)]);
        assert!(Table::identity(trivial(2)).expand_column(1).is_err());
    }

    #[test]
    fn expansion_lists_domain_children_through_sigma() {
        let h = sym(2);
        let swap = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let t = Table::new(
            h,
            vec![Column::new(w("", 2), swap.clone(), w("", 2), Perm::identity(2))],
        )
        .unwrap();
        let e = t.expand_column(0).unwrap();
        assert_eq!(
            e.columns(),
            &[
                Column::new(w("1", 2), swap.clone(), w("0", 2), Perm::identity(2)),
                Column::new(w("0", 2), swap, w("1", 2), Perm::identity(2)),
            ]
        );
    }

    #[test]
    fn moves_preserve_evaluation() {
        let mut rng = Rng::new(42);
        let h = sym(3);
        for round in 0..20 {
            let t = Table::random(h.clone(), 3, 1000 + round);
            let z = EvWord::random(ab(3), 4, 3, &mut rng);
            let image = t.evaluate(&z);
            let idx = rng.below(t.len());
            assert_eq!(t.expand_column(idx).unwrap().evaluate(&z), image);
            assert_eq!(t.push_down().evaluate(&z), image);
            assert_eq!(t.push_up().evaluate(&z), image);
            let expanded = t.expand_column(idx).unwrap();
            let reduced = expanded.reduce_once().expect("expansion must be reducible");
            assert_eq!(reduced.evaluate(&z), image);
        }
    }

    #[test]
    fn reduction_undoes_expansion() {
        let t = swap_table();
        let exp = t.expand_column(1).unwrap();
        let red = exp.reduce_once().unwrap();
        assert_eq!(red.canonical().table(), t.canonical().table());
        assert!(Table::identity(trivial(2)).reduce_once().is_none());
    }

    #[test]
    fn irreducible_table_stays_put() {
        let t = Table::new(
            trivial(2),
            vec![id_col("0", "10", 2), id_col("10", "11", 2), id_col("11", "0", 2)],
        )
        .unwrap();
        assert!(t.reduce_once().is_none());
    }

    #[test]
    fn pushes() {
        let h = sym(2);
        let swap = Perm::from_cycles(2, &[vec![0, 1]]).unwrap();
        let t = Table::new(
            h,
            vec![Column::new(w("", 2), swap.clone(), w("", 2), swap.clone())],
        )
        .unwrap();
        let down = t.push_down();
        assert!(down.columns()[0].sigma.is_identity());
        assert!(down.columns()[0].tau.is_identity());
        let up = t.push_up();
        assert!(up.columns()[0].sigma.is_identity());
        assert!(up.columns()[0].tau.is_identity());
    }

    #[test]
    fn push_down_twist_is_tau_sigma_inverse() {
        let h = sym(3);
        let sigma = Perm::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let tau = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let t = Table::new(
            h,
            vec![Column::new(w("", 3), sigma.clone(), w("", 3), tau.clone())],
        )
        .unwrap();
        let down = t.push_down();
        assert_eq!(down.columns()[0].tau, tau.compose(&sigma.inverse()));
    }

    #[test]
    fn compose_matches_pointwise_composition() {
        let h = sym(3);
        let mut rng = Rng::new(7);
        for round in 0..10 {
            let u = Table::random(h.clone(), 3, 2000 + round);
            let v = Table::random(h.clone(), 3, 3000 + round);
            let vu = v.compose(&u).unwrap();
            for _ in 0..50 {
                let z = EvWord::random(ab(3), 3, 3, &mut rng);
                assert_eq!(vu.evaluate(&z), v.evaluate(&u.evaluate(&z)));
            }
        }
    }

    #[test]
    fn inverse_and_identity_laws() {
        let h = sym(3);
        let mut rng = Rng::new(8);
        for round in 0..10 {
            let g = Table::random(h.clone(), 3, 4000 + round);
            assert!(g.compose(&g.inverse()).unwrap().is_identity());
            assert!(g.inverse().compose(&g).unwrap().is_identity());
            assert!(g.equals(&Table::identity(h.clone()).compose(&g).unwrap()).unwrap());
            assert_eq!(g.inverse().inverse(), g);
            for _ in 0..20 {
                let z = EvWord::random(ab(3), 3, 3, &mut rng);
                assert_eq!(g.inverse().evaluate(&g.evaluate(&z)), z);
            }
        }
    }

    #[test]
    fn equality_via_identity_test() {
        let g = swap_table();
        assert!(g.equals(&g).unwrap());
        assert!(g.equals(&g.expand_column(0).unwrap()).unwrap());
        assert!(!g.equals(&Table::identity(trivial(2))).unwrap());
        // distinct elements differ at a witness point
        let id = Table::identity(trivial(2));
        let z = ev("0(1)", 2);
        assert_ne!(g.evaluate(&z), id.evaluate(&z));
    }

    #[test]
    fn canonical_is_constant_on_move_orbits() {
        let h = sym(3);
        for round in 0..10 {
            let t = Table::random(h.clone(), 2, 5000 + round);
            let c = t.canonical();
            for idx in 0..t.len() {
                assert_eq!(t.expand_column(idx).unwrap().canonical().table(), c.table());
            }
            assert_eq!(t.push_up().canonical().table(), c.table());
            assert_eq!(t.push_down().canonical().table(), c.table());
            // idempotent
            assert_eq!(c.table().canonical().table(), c.table());
        }
    }

    #[test]
    fn random_tables_are_valid_and_deterministic() {
        let h = sym(3);
        for seed in 0..100 {
            let t = Table::random(h.clone(), 4, seed);
            assert!(validation_errors(&h, t.columns()).is_empty());
        }
        assert_eq!(Table::random(h.clone(), 4, 9), Table::random(h.clone(), 4, 9));
        let zero = Table::random(trivial(2), 0, 1);
        assert!(zero.is_identity());
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn compose_rejects_mismatched_groups() {
        let a = Table::identity(trivial(2));
        let b = Table::identity(sym(2));
        assert!(a.compose(&b).is_err());
        let c = Table::identity(trivial(3));
        assert!(a.compose(&c).is_err());
    }
}
