//! Permutations of {0, .., n-1}, cycle types, and finite permutation groups
//! given by generators with a fully enumerated closure.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation in one-line notation: `image[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { image: (0..degree).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation(image));
            }
            seen[v] = true;
        }
        Ok(Perm { image })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::NotAPermutation(cycle.clone()));
                }
                if seen[x] {
                    return Err(Error::NotAPermutation(cycle.clone()));
                }
                seen[x] = true;
                image[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.image[point]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self.compose(&first)` applies `first` and then `self`, so the result
    /// is the product written `self · first`.
    pub fn compose(&self, first: &Perm) -> Perm {
        assert_eq!(self.degree(), first.degree(), "degree mismatch");
        Perm { image: first.image.iter().map(|&i| self.image[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Perm { image }
    }

    /// Multiset of orbit lengths of the cyclic group generated by `self`.
    pub fn cycle_type(&self) -> CycleType {
        let mut lengths = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image[x];
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(lengths)
    }

    /// Nontrivial cycles, each written least element first, sorted by least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Same action on 0..degree(), identity on the added points.
    pub fn extend(&self, degree: usize) -> Result<Perm> {
        if degree < self.degree() {
            return Err(Error::BadExtension { from: self.degree(), to: degree });
        }
        let mut image = self.image.clone();
        image.extend(self.degree()..degree);
        Ok(Perm { image })
    }

    /// Accepts one-line notation `[1,0,2]`, cycle notation `(0 1)(2)`, or `id`.
    pub fn parse(s: &str, degree: usize) -> Result<Perm> {
        let s = s.trim();
        if s == "id" || s == "()" {
            return Ok(Perm::identity(degree));
        }
        if s.starts_with('[') {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("malformed permutation {s:?}")))?;
            let image = parse_usize_list(inner)?;
            if image.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: image.len() });
            }
            return Perm::from_image(image);
        }
        if s.starts_with('(') {
            let mut cycles = Vec::new();
            for chunk in s.split('(').filter(|c| !c.trim().is_empty()) {
                let chunk = chunk
                    .trim()
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("malformed cycle in {s:?}")))?;
                let entries: Vec<usize> = chunk
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?;
                if !entries.is_empty() {
                    cycles.push(entries);
                }
            }
            return Perm::from_cycles(degree, &cycles);
        }
        Err(Error::Parse(format!("unrecognized permutation {s:?}")))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

/// Multiset of cycle lengths, sorted in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub const DEFAULT_CAP: usize = 1_000_000;

/// A finite permutation group with its closure enumerated up front.
///
/// The intended groups are tiny; the cap turns runaway inputs into errors
/// instead of unbounded enumeration.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: BTreeSet<Perm>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            elements: BTreeSet::from([Perm::identity(degree)]),
        }
    }

    /// Closure of the generators by breadth-first multiplication.
    pub fn generate(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let id = Perm::identity(degree);
        let mut elements = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in &generators {
                let f = e.compose(g);
                if elements.insert(f.clone()) {
                    if elements.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    queue.push_back(f);
                }
            }
        }
        Ok(PermGroup { degree, generators, elements })
    }

    /// Full symmetric group; intended for small degrees only.
    pub fn symmetric(degree: usize) -> Self {
        let mut generators = Vec::new();
        if degree >= 2 {
            generators.push(Perm::from_cycles(degree, &[vec![0, 1]]).unwrap());
        }
        if degree >= 3 {
            generators.push(Perm::from_cycles(degree, &[(0..degree).collect()]).unwrap());
        }
        PermGroup::generate(degree, generators, DEFAULT_CAP).expect("symmetric group over cap")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = &Perm> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    /// The copy of this group acting on 0..degree() inside Sym(degree),
    /// identity on the added points.
    pub fn extend(&self, degree: usize) -> Result<PermGroup> {
        let generators: Vec<Perm> =
            self.generators.iter().map(|g| g.extend(degree)).collect::<Result<_>>()?;
        let elements: BTreeSet<Perm> =
            self.elements.iter().map(|g| g.extend(degree)).collect::<Result<_>>()?;
        Ok(PermGroup { degree, generators, elements })
    }

    pub(crate) fn from_parts(degree: usize, generators: Vec<Perm>, elements: BTreeSet<Perm>) -> Self {
        PermGroup { degree, generators, elements }
    }
}

/// Group equality is equality of the underlying element sets.
impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

/// Searches for `c` with `c·h·c⁻¹ ∈ h2` for every `h ∈ h1`, which together
/// with equal orders makes conjugation by `c` an isomorphism h1 → h2
/// preserving every cycle type. Returns the least such image vector, or
/// `None` when the groups are not conjugate in the ambient symmetric group.
pub fn find_cyclic_isomorphism(h1: &PermGroup, h2: &PermGroup) -> Option<Perm> {
    assert_eq!(h1.degree(), h2.degree(), "degree mismatch");
    let n = h1.degree();
    if h1.order() != h2.order() {
        return None;
    }
    let mut t1: Vec<CycleType> = h1.elements().map(Perm::cycle_type).collect();
    let mut t2: Vec<CycleType> = h2.elements().map(Perm::cycle_type).collect();
    t1.sort();
    t2.sort();
    if t1 != t2 {
        return None;
    }

    // Backtracking over point images, pruning with the set of h2-elements
    // still compatible with each generator under the partial map.
    let gens: Vec<&Perm> = h1.generators.iter().collect();
    let mut img: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];

    fn consistent(g: &Perm, h: &Perm, img: &[Option<usize>]) -> bool {
        img.iter().enumerate().all(|(x, &ix)| match (ix, img[g.apply(x)]) {
            (Some(cx), Some(cgx)) => h.apply(cx) == cgx,
            _ => true,
        })
    }

    fn rec(
        point: usize,
        n: usize,
        gens: &[&Perm],
        h2: &PermGroup,
        img: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if point == n {
            return true;
        }
        for y in 0..n {
            if used[y] {
                continue;
            }
            img[point] = Some(y);
            used[y] = true;
            let ok = gens.iter().all(|g| {
                let ct = g.cycle_type();
                h2.elements().any(|h| h.cycle_type() == ct && consistent(g, h, img))
            });
            if ok && rec(point + 1, n, gens, h2, img, used) {
                return true;
            }
            img[point] = None;
            used[y] = false;
        }
        false
    }

    if !rec(0, n, &gens, h2, &mut img, &mut used) {
        return None;
    }
    let c = Perm::from_image(img.into_iter().map(Option::unwrap).collect()).unwrap();
    let cinv = c.inverse();
    for g in h1.elements() {
        if !h2.contains(&c.compose(g).compose(&cinv)) {
            return None;
        }
    }
    Some(c)
}
