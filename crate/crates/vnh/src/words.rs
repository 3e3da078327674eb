//! Alphabets, finite words, and eventually periodic infinite words, together
//! with the prefix and dictionary orders and the letterwise permutation action.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rng::Rng;

/// The alphabet {0, .., n-1} for some n ≥ 2. Letters are plain integers so
/// arbitrary sizes round-trip exactly through the text forms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Alphabet(usize);

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size < 2 {
            return Err(Error::AlphabetTooSmall(size));
        }
        Ok(Alphabet(size))
    }

    pub fn size(&self) -> usize {
        self.0
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> {
        0..self.0
    }
}

/// Outcome of comparing two words in the prefix order. Equal words report
/// `Prefix` (witnessed by the empty word).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrefixRel {
    /// The first word is a prefix of the second.
    Prefix,
    /// The second word is a prefix of the first.
    Extension,
    Incomparable,
}

/// A finite word over an alphabet; the empty word is allowed.
///
/// The derived ordering on the letter sequence is exactly the dictionary
/// order: a proper prefix is smaller, otherwise the first differing letter
/// decides.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<usize>,
}

impl Word {
    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn from_letters(alphabet: Alphabet, letters: Vec<usize>) -> Result<Self> {
        for &l in &letters {
            if l >= alphabet.size() {
                return Err(Error::LetterOutOfRange { letter: l, size: alphabet.size() });
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with one letter appended.
    pub fn child(&self, letter: usize) -> Word {
        assert!(letter < self.alphabet.size(), "letter out of range");
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { alphabet: self.alphabet, letters }
    }

    pub fn concat(&self, tail: &Word) -> Word {
        assert_eq!(self.alphabet, tail.alphabet, "alphabet mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&tail.letters);
        Word { alphabet: self.alphabet, letters }
    }

    pub fn concat_ev(&self, tail: &EvWord) -> EvWord {
        assert_eq!(self.alphabet, tail.alphabet, "alphabet mismatch");
        let mut head = self.letters.clone();
        head.extend_from_slice(&tail.head);
        EvWord::from_parts(self.alphabet, head, tail.period.clone())
    }

    pub fn prefix_cmp(&self, other: &Word) -> PrefixRel {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        if other.letters.starts_with(&self.letters) {
            PrefixRel::Prefix
        } else if self.letters.starts_with(&other.letters) {
            PrefixRel::Extension
        } else {
            PrefixRel::Incomparable
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.prefix_cmp(other) == PrefixRel::Prefix
    }

    pub fn dict_cmp(&self, other: &Word) -> Ordering {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        self.letters.cmp(&other.letters)
    }

    /// All strict prefixes, shortest first (starting from the empty word).
    pub fn strict_prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.letters.len()).map(move |k| Word {
            alphabet: self.alphabet,
            letters: self.letters[..k].to_vec(),
        })
    }

    /// Letterwise image under a permutation of the alphabet.
    pub fn permuted(&self, sigma: &Perm) -> Word {
        assert_eq!(sigma.degree(), self.alphabet.size(), "degree mismatch");
        Word {
            alphabet: self.alphabet,
            letters: self.letters.iter().map(|&l| sigma.apply(l)).collect(),
        }
    }

    /// Same letters read over a (typically larger) alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Word> {
        Word::from_letters(alphabet, self.letters.clone())
    }

    /// Parses the text form: a digit string when the alphabet has at most ten
    /// letters, or a bracketed comma list like `[2,0,1]` for any size.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Word> {
        let s = s.trim();
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("malformed word {s:?}")))?;
            let letters: Vec<usize> = inner
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<_>>()?;
            return Word::from_letters(alphabet, letters);
        }
        if alphabet.size() > 10 && !s.is_empty() {
            return Err(Error::Parse(format!(
                "alphabet of size {} needs the bracketed word form, got {s:?}",
                alphabet.size()
            )));
        }
        let letters: Vec<usize> = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word {s:?}")))
            })
            .collect::<Result<_>>()?;
        Word::from_letters(alphabet, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size() <= 10 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            write!(f, "[")?;
            for (i, l) in self.letters.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")
        }
    }
}

/// An eventually periodic infinite word `head‖period^ω`, the computable
/// sample points of the Cantor space of infinite words.
///
/// Values are kept in canonical form (the period is primitive and the head
/// does not end with the last period letter), so structural equality decides
/// equality of the underlying infinite sequences.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EvWord {
    alphabet: Alphabet,
    head: Vec<usize>,
    period: Vec<usize>,
}

impl EvWord {
    pub fn new(alphabet: Alphabet, head: Vec<usize>, period: Vec<usize>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Parse("period must be nonempty".into()));
        }
        for &l in head.iter().chain(&period) {
            if l >= alphabet.size() {
                return Err(Error::LetterOutOfRange { letter: l, size: alphabet.size() });
            }
        }
        Ok(EvWord::from_parts(alphabet, head, period))
    }

    /// The constant word `letter^ω`.
    pub fn constant(alphabet: Alphabet, letter: usize) -> Result<Self> {
        EvWord::new(alphabet, Vec::new(), vec![letter])
    }

    pub(crate) fn from_parts(alphabet: Alphabet, mut head: Vec<usize>, mut period: Vec<usize>) -> Self {
        // Replace the period by its primitive root.
        let len = period.len();
        for d in 1..=len / 2 {
            if len.is_multiple_of(d) && period.chunks(d).all(|c| c == &period[..d]) {
                period.truncate(d);
                break;
            }
        }
        // Rotate trailing head letters into the period while they match its
        // last letter; this drains the head to its unique minimal form.
        while head.last() == period.last() && !head.is_empty() {
            head.pop();
            period.rotate_right(1);
        }
        EvWord { alphabet, head, period }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn period(&self) -> &[usize] {
        &self.period
    }

    pub fn letter_at(&self, index: usize) -> usize {
        if index < self.head.len() {
            self.head[index]
        } else {
            self.period[(index - self.head.len()) % self.period.len()]
        }
    }

    pub fn has_prefix(&self, w: &Word) -> bool {
        assert_eq!(self.alphabet, w.alphabet(), "alphabet mismatch");
        w.letters().iter().enumerate().all(|(i, &l)| self.letter_at(i) == l)
    }

    /// Removes a finite prefix, unrolling the period as needed.
    pub fn strip_prefix(&self, w: &Word) -> Option<EvWord> {
        if !self.has_prefix(w) {
            return None;
        }
        if w.len() <= self.head.len() {
            return Some(EvWord::from_parts(
                self.alphabet,
                self.head[w.len()..].to_vec(),
                self.period.clone(),
            ));
        }
        let shift = (w.len() - self.head.len()) % self.period.len();
        let mut period = self.period.clone();
        period.rotate_left(shift);
        Some(EvWord::from_parts(self.alphabet, Vec::new(), period))
    }

    /// Letterwise image under a permutation of the alphabet; eventual
    /// periodicity is preserved.
    pub fn permuted(&self, sigma: &Perm) -> EvWord {
        assert_eq!(sigma.degree(), self.alphabet.size(), "degree mismatch");
        EvWord::from_parts(
            self.alphabet,
            self.head.iter().map(|&l| sigma.apply(l)).collect(),
            self.period.iter().map(|&l| sigma.apply(l)).collect(),
        )
    }

    /// Same letters read over a (typically larger) alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<EvWord> {
        EvWord::new(alphabet, self.head.clone(), self.period.clone())
    }

    /// Seeded random point with bounded head and period lengths.
    pub fn random(alphabet: Alphabet, max_head: usize, max_period: usize, rng: &mut Rng) -> EvWord {
        let head = (0..rng.below(max_head + 1)).map(|_| rng.below(alphabet.size())).collect();
        let period = (0..rng.below(max_period) + 1).map(|_| rng.below(alphabet.size())).collect();
        EvWord::from_parts(alphabet, head, period)
    }

    /// Parses `head(period)`, each part in the word text form.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<EvWord> {
        let s = s.trim();
        let open = s
            .rfind('(')
            .ok_or_else(|| Error::Parse(format!("expected head(period), got {s:?}")))?;
        let inner = s[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("expected head(period), got {s:?}")))?;
        let head = Word::parse(&s[..open], alphabet)?;
        let period = Word::parse(inner, alphabet)?;
        EvWord::new(alphabet, head.letters().to_vec(), period.letters().to_vec())
    }
}

impl fmt::Display for EvWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = Word { alphabet: self.alphabet, letters: self.head.clone() };
        let period = Word { alphabet: self.alphabet, letters: self.period.clone() };
        write!(f, "{head}({period})")
    }
}
