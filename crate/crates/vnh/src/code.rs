//! Complete prefix codes of the Cantor space: expansion, strict prefixes,
//! common refinement, invariance under a permutation group, and the search
//! for invariant codes of a prescribed size.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::words::{Alphabet, Word};

/// A complete prefix code: a finite antichain of words such that every
/// infinite word has exactly one element as a prefix. Equivalently the leaf
/// set of a finite n-ary tree; the size is always ≡ 1 mod (n-1).
///
/// Words are stored sorted in dictionary order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PrefixCode {
    alphabet: Alphabet,
    words: Vec<Word>,
}

impl PrefixCode {
    pub fn new(alphabet: Alphabet, mut words: Vec<Word>) -> Result<Self> {
        for w in &words {
            assert_eq!(w.alphabet(), alphabet, "alphabet mismatch");
        }
        words.sort();
        for pair in words.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateWord(pair[0].to_string()));
            }
        }
        check_code(alphabet, &words)?;
        Ok(PrefixCode { alphabet, words })
    }

    /// The one-element code {ε}.
    pub fn root(alphabet: Alphabet) -> Self {
        PrefixCode { alphabet, words: vec![Word::empty(alphabet)] }
    }

    pub(crate) fn from_sorted_unchecked(alphabet: Alphabet, words: Vec<Word>) -> Self {
        debug_assert!(check_code(alphabet, &words).is_ok());
        PrefixCode { alphabet, words }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// A complete code always contains at least {ε}.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Words in dictionary order.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Position of a word in the dictionary order of the code.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.words.binary_search(w).ok()
    }

    /// The unique code element that is a prefix of the given word, if any.
    pub fn prefix_of(&self, w: &Word) -> Option<&Word> {
        self.words.iter().find(|p| p.is_prefix_of(w))
    }

    /// Replaces a code element by its n children.
    pub fn expand(&self, w: &Word) -> Result<PrefixCode> {
        let at = self.index_of(w).ok_or_else(|| Error::WordNotInCode(w.to_string()))?;
        Ok(self.expand_at(at))
    }

    pub fn expand_at(&self, index: usize) -> PrefixCode {
        let mut words = self.words.clone();
        let w = words.remove(index);
        for j in self.alphabet.letters() {
            words.insert(index + j, w.child(j));
        }
        PrefixCode::from_sorted_unchecked(self.alphabet, words)
    }

    /// The set of strict prefixes of code elements (the internal nodes of
    /// the code's tree), in dictionary order.
    pub fn strict_prefixes(&self) -> Vec<Word> {
        strict_prefixes(&self.words)
    }

    /// The coarsest code refining both: every element has a prefix in each
    /// input code. Computed as the leaf set of the union of the two trees.
    pub fn common_refinement(&self, other: &PrefixCode) -> PrefixCode {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let internal: BTreeSet<Word> = self
            .words
            .iter()
            .chain(&other.words)
            .flat_map(|w| w.strict_prefixes())
            .collect();
        if internal.is_empty() {
            return PrefixCode::root(self.alphabet);
        }
        let mut words = Vec::new();
        for node in &internal {
            for j in self.alphabet.letters() {
                let child = node.child(j);
                if !internal.contains(&child) {
                    words.push(child);
                }
            }
        }
        words.sort();
        PrefixCode::from_sorted_unchecked(self.alphabet, words)
    }

    /// Letterwise image of the code, again a complete prefix code.
    pub fn permuted(&self, sigma: &Perm) -> PrefixCode {
        let mut words: Vec<Word> = self.words.iter().map(|w| w.permuted(sigma)).collect();
        words.sort();
        PrefixCode::from_sorted_unchecked(self.alphabet, words)
    }

    /// Whether the letterwise action of every generator maps the word set
    /// onto itself.
    pub fn is_invariant(&self, group: &PermGroup) -> bool {
        assert_eq!(group.degree(), self.alphabet.size(), "degree mismatch");
        group.generators().iter().all(|g| self.permuted(g).words == self.words)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }
}

impl fmt::Display for PrefixCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

/// The set of strict prefixes of the given words, in dictionary order.
/// Defined for any word set, not just complete codes: the successor
/// machinery applies it to antichains living under a fixed first letter.
pub fn strict_prefixes(words: &[Word]) -> Vec<Word> {
    let set: BTreeSet<Word> = words.iter().flat_map(|w| w.strict_prefixes()).collect();
    set.into_iter().collect()
}

/// Whether a set of words is a complete prefix code over the alphabet.
pub fn is_complete(alphabet: Alphabet, words: &[Word]) -> bool {
    let mut sorted: Vec<Word> = words.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != words.len() {
        return false;
    }
    check_code(alphabet, &sorted).is_ok()
}

/// Checks a sorted, deduplicated word list for the complete-antichain
/// property, reporting the first violation with a witness.
fn check_code(alphabet: Alphabet, sorted: &[Word]) -> Result<()> {
    fn rec(alphabet: Alphabet, words: &[Word], depth: usize, path: &Word) -> Result<()> {
        if words.is_empty() {
            return Err(Error::IncompleteCode { missing: path.to_string() });
        }
        if words[0].len() == depth {
            if words.len() > 1 {
                return Err(Error::NotAnAntichain {
                    prefix: words[0].to_string(),
                    extension: words[1].to_string(),
                });
            }
            return Ok(());
        }
        let mut lo = 0;
        for j in alphabet.letters() {
            let hi = words[lo..].partition_point(|w| w.letters()[depth] == j) + lo;
            rec(alphabet, &words[lo..hi], depth + 1, &path.child(j))?;
            lo = hi;
        }
        Ok(())
    }
    rec(alphabet, sorted, 0, &Word::empty(alphabet))
}

/// A triple (m, n, G) with G ≤ Sym(m) and n ≡ 1 mod (m-1); the shape data
/// for which invariant codes are sought.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Triple {
    m: usize,
    n: usize,
    group: PermGroup,
}

impl Triple {
    pub fn new(group: PermGroup, n: usize) -> Result<Self> {
        let m = group.degree();
        if m < 2 || n < m || !(n - 1).is_multiple_of(m - 1) {
            return Err(Error::HigmanCondition { m, n });
        }
        Ok(Triple { m, n, group })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }
}

/// Breadth-first search for a G-invariant complete prefix code with exactly
/// n elements, all of length at most `max_depth`.
///
/// The search walks invariant codes only: at each step an entire G-orbit of
/// leaves is expanded at once (expanding one leaf of an orbit forces its
/// images), orbits taken in order of their dict-least representative. The
/// first code found is therefore deterministic, and the search is exhaustive
/// up to the depth bound. A `None` means no solution exists up to that
/// depth, not that the triple is unsatisfiable.
pub fn find_solution(triple: &Triple, max_depth: usize) -> Option<PrefixCode> {
    let alphabet = Alphabet::new(triple.m).expect("triple degree");
    let start = PrefixCode::root(alphabet);
    if start.len() == triple.n {
        return Some(start);
    }
    let mut visited: BTreeSet<Vec<Word>> = BTreeSet::from([start.words().to_vec()]);
    let mut queue = VecDeque::from([start]);
    while let Some(code) = queue.pop_front() {
        for orbit in leaf_orbits(&code, triple.group()) {
            if orbit[0].len() >= max_depth {
                continue;
            }
            let child = expand_orbit(&code, &orbit);
            if child.len() == triple.n {
                debug_assert!(child.is_invariant(triple.group()));
                return Some(child);
            }
            if child.len() < triple.n && visited.insert(child.words().to_vec()) {
                queue.push_back(child);
            }
        }
    }
    None
}

/// Partitions the leaves of an invariant code into G-orbits, listed by
/// dict-least representative; each orbit is sorted.
fn leaf_orbits(code: &PrefixCode, group: &PermGroup) -> Vec<Vec<Word>> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut orbits = Vec::new();
    for w in code.words() {
        if seen.contains(w) {
            continue;
        }
        let orbit: BTreeSet<Word> = group.elements().map(|g| w.permuted(g)).collect();
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

fn expand_orbit(code: &PrefixCode, orbit: &[Word]) -> PrefixCode {
    let mut out = code.clone();
    for w in orbit {
        out = out.expand(w).expect("orbit word in code");
    }
    out
}
