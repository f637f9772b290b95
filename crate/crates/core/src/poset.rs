//! Finite posets stored as irredundant cover relations.
//!
//! Elements are indexed `0..size`. The strict order `x ≺ y` is the transitive
//! closure of the covers and is computed once at construction.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("a poset needs at least one element")]
    Empty,
    #[error("relation ({0}, {1}) refers to an element outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("element {0} cannot be covered by itself")]
    SelfLoop(usize),
    #[error("relations contain a cycle: {}", format_cycle(.0))]
    Cycle(Vec<usize>),
}

fn format_cycle(cycle: &[usize]) -> String {
    let mut parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
    if let Some(first) = cycle.first() {
        parts.push(first.to_string());
    }
    parts.join(" -> ")
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    // above[x][y] <=> x ≺ y
    above: Vec<Vec<bool>>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("size", &self.size)
            .field("covers", &self.covers)
            .finish()
    }
}

impl Poset {
    /// Builds the poset generated by `relations`, where `(i, j)` means `i ≺ j`.
    ///
    /// Relations need not be covers; the stored cover set is the transitive
    /// reduction of their closure.
    pub fn from_relations(size: usize, relations: &[(usize, usize)]) -> Result<Self, PosetError> {
        Self::from_covers(size, relations).map(|(p, _)| p)
    }

    /// Like [`Poset::from_relations`], additionally returning the input pairs
    /// that were not covers (implied by transitivity, or repeated).
    pub fn from_covers(
        size: usize,
        pairs: &[(usize, usize)],
    ) -> Result<(Self, Vec<(usize, usize)>), PosetError> {
        if size == 0 {
            return Err(PosetError::Empty);
        }
        let mut succ = vec![Vec::new(); size];
        for &(i, j) in pairs {
            if i >= size || j >= size {
                return Err(PosetError::OutOfRange(i, j, size));
            }
            if i == j {
                return Err(PosetError::SelfLoop(i));
            }
            succ[i].push(j);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        let order = topological_order(&succ)?;

        let mut above = vec![vec![false; size]; size];
        for &x in order.iter().rev() {
            for &s in &succ[x] {
                above[x][s] = true;
                for y in 0..size {
                    if above[s][y] {
                        above[x][y] = true;
                    }
                }
            }
        }

        let mut covers = Vec::new();
        for x in 0..size {
            for y in 0..size {
                if above[x][y] && !(0..size).any(|k| above[x][k] && above[k][y]) {
                    covers.push((x, y));
                }
            }
        }

        let mut dropped = Vec::new();
        let mut seen = vec![vec![false; size]; size];
        for &(i, j) in pairs {
            if seen[i][j] || covers.binary_search(&(i, j)).is_err() {
                dropped.push((i, j));
            }
            seen[i][j] = true;
        }

        let mut upper = vec![Vec::new(); size];
        let mut lower = vec![Vec::new(); size];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        Ok((
            Self {
                size,
                covers,
                upper,
                lower,
                above,
            },
            dropped,
        ))
    }

    pub fn antichain(size: usize) -> Result<Self, PosetError> {
        Self::from_relations(size, &[])
    }

    /// The chain `0 ≺ 1 ≺ … ≺ size-1`.
    pub fn chain(size: usize) -> Result<Self, PosetError> {
        let covers: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        Self::from_relations(size, &covers)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// `x ≺ y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.above[x][y]
    }

    /// `x ⪯ y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.above[x][y]
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size).filter(|&x| self.upper[x].is_empty()).collect()
    }

    /// If the cover set is literally that of `zigzag_poset(n)`, returns `n`.
    pub fn zigzag_order(&self) -> Option<usize> {
        (self.covers == zigzag_covers(self.size)).then_some(self.size)
    }

    /// Every nonempty chain, listed bottom to top, in lexicographic order.
    pub fn all_chains(&self) -> Vec<Chain> {
        fn extend(p: &Poset, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
            out.push(Chain(stack.clone()));
            let last = *stack.last().expect("nonempty");
            for y in 0..p.size {
                if p.above[last][y] {
                    stack.push(y);
                    extend(p, stack, out);
                    stack.pop();
                }
            }
        }
        let mut out = Vec::new();
        for x in 0..self.size {
            extend(self, &mut vec![x], &mut out);
        }
        out.sort();
        out
    }

    /// Chains that cannot be extended by any element: exactly the saturated
    /// chains running from a minimal to a maximal element.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        fn walk(p: &Poset, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
            let last = *stack.last().expect("nonempty");
            if p.upper[last].is_empty() {
                out.push(Chain(stack.clone()));
                return;
            }
            for &y in &p.upper[last] {
                stack.push(y);
                walk(p, stack, out);
                stack.pop();
            }
        }
        let mut out = Vec::new();
        for x in self.minimal_elements() {
            walk(self, &mut vec![x], &mut out);
        }
        out.sort();
        out
    }

    /// Length of the longest chain ending at each element.
    fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.size];
        for x in self.lex_smallest_extension() {
            h[x] = self.lower[x].iter().map(|&l| h[l] + 1).max().unwrap_or(0);
        }
        h
    }

    /// A longest chain ending at `x` (every step is a cover).
    fn longest_chain_to(&self, x: usize, heights: &[usize]) -> Vec<usize> {
        let mut chain = vec![x];
        let mut cur = x;
        while let Some(&l) = self.lower[cur].iter().find(|&&l| heights[l] + 1 == heights[cur]) {
            chain.push(l);
            cur = l;
        }
        chain.reverse();
        chain
    }

    fn extend_upward(&self, chain: &mut Vec<usize>) {
        while let Some(&u) = self.upper[*chain.last().expect("nonempty")].first() {
            chain.push(u);
        }
    }

    /// The rank function, if every maximal chain has the same length.
    pub fn rank_function(&self) -> Result<RankFunction, NotGraded> {
        let h = self.heights();
        for &(x, y) in &self.covers {
            if h[y] != h[x] + 1 {
                let mut short = self.longest_chain_to(x, &h);
                short.push(y);
                self.extend_upward(&mut short);
                let mut long = self.longest_chain_to(y, &h);
                self.extend_upward(&mut long);
                return Err(NotGraded {
                    longer: Chain(long),
                    shorter: Chain(short),
                });
            }
        }
        let maxima = self.maximal_elements();
        let rank = h[maxima[0]];
        if let Some(&other) = maxima.iter().find(|&&m| h[m] != rank) {
            let (a, b) = (
                self.longest_chain_to(maxima[0], &h),
                self.longest_chain_to(other, &h),
            );
            let (longer, shorter) = if a.len() > b.len() { (a, b) } else { (b, a) };
            return Err(NotGraded {
                longer: Chain(longer),
                shorter: Chain(shorter),
            });
        }
        Ok(RankFunction { rho: h, rank })
    }

    fn lex_smallest_extension(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.lower.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = (0..self.size)
            .filter(|&x| indeg[x] == 0)
            .map(Reverse)
            .collect();
        let mut out = Vec::with_capacity(self.size);
        while let Some(Reverse(x)) = heap.pop() {
            out.push(x);
            for &y in &self.upper[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        out
    }

    /// Labels elements in the order of the lexicographically smallest linear
    /// extension.
    pub fn natural_labeling(&self) -> Labeling {
        Labeling::from_extension(&self.lex_smallest_extension())
    }

    /// Streams every linear extension in lexicographic order.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// Number of linear extensions, by dynamic programming over order ideals.
    ///
    /// Returns `None` when the poset has more than 128 elements or some layer
    /// of the ideal lattice holds more than `state_cap` ideals.
    pub fn count_linear_extensions(&self, state_cap: usize) -> Option<BigUint> {
        if self.size > 128 {
            return None;
        }
        let below: Vec<u128> = self
            .lower
            .iter()
            .map(|ls| ls.iter().fold(0u128, |m, &l| m | (1u128 << l)))
            .collect();
        let mut layer: HashMap<u128, BigUint> = HashMap::from([(0u128, BigUint::one())]);
        for _ in 0..self.size {
            let mut next: HashMap<u128, BigUint> = HashMap::new();
            for (ideal, ways) in &layer {
                for x in 0..self.size {
                    let bit = 1u128 << x;
                    if ideal & bit == 0 && below[x] & !ideal == 0 {
                        *next.entry(ideal | bit).or_insert_with(BigUint::zero) += ways;
                    }
                }
            }
            if next.len() > state_cap {
                return None;
            }
            layer = next;
        }
        layer.into_values().next()
    }

    /// Serializes in the cover-list text format accepted by [`parse_poset`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.size);
        for &(i, j) in &self.covers {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Result<Vec<usize>, PosetError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    let mut post = Vec::with_capacity(n);
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // (node, next successor slot)
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (x, ref mut slot)) = stack.last_mut() {
            if let Some(&y) = succ[x].get(*slot) {
                *slot += 1;
                match mark[y] {
                    Mark::New => {
                        mark[y] = Mark::Active;
                        stack.push((y, 0));
                    }
                    Mark::Active => {
                        let start = stack.iter().position(|&(z, _)| z == y).expect("on stack");
                        return Err(PosetError::Cycle(
                            stack[start..].iter().map(|&(z, _)| z).collect(),
                        ));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[x] = Mark::Done;
                post.push(x);
                stack.pop();
            }
        }
    }
    post.reverse();
    Ok(post)
}

fn zigzag_covers(n: usize) -> Vec<(usize, usize)> {
    let mut covers: Vec<_> = (0..n.saturating_sub(1))
        .map(|k| if k % 2 == 0 { (k, k + 1) } else { (k + 1, k) })
        .collect();
    covers.sort_unstable();
    covers
}

/// The fence `a1 ≺ a2 ≻ a3 ≺ a4 ≻ …` on `n` elements; `a_{k+1}` is index `k`.
pub fn zigzag_poset(n: usize) -> Result<Poset, PosetError> {
    Poset::from_relations(n, &zigzag_covers(n))
}

/// Element indices listed bottom to top. Length counts covers, so a
/// singleton has length 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain(pub Vec<usize>);

impl Chain {
    pub fn elems(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    pub rho: Vec<usize>,
    pub rank: usize,
}

/// Two maximal chains of different lengths.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("poset is not graded: maximal chains {longer:?} and {shorter:?} differ in length")]
pub struct NotGraded {
    pub longer: Chain,
    pub shorter: Chain,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labels must be a permutation of 1..={0}")]
    NotBijective(usize),
}

/// A bijection from elements onto `1..=size`; `labels[x]` is the label of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self, LabelingError> {
        let d = labels.len();
        let mut seen = vec![false; d + 1];
        for &l in &labels {
            if l == 0 || l > d || seen[l] {
                return Err(LabelingError::NotBijective(d));
            }
            seen[l] = true;
        }
        Ok(Self { labels })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            labels: (1..=size).collect(),
        }
    }

    /// Element `extension[k]` gets label `k + 1`.
    pub fn from_extension(extension: &[usize]) -> Self {
        let mut labels = vec![0; extension.len()];
        for (k, &x) in extension.iter().enumerate() {
            labels[x] = k + 1;
        }
        Self { labels }
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// `x ⪯ y ⇒ ω(x) ≤ ω(y)`; checking covers is enough by transitivity.
pub fn is_natural(poset: &Poset, labeling: &Labeling) -> bool {
    labeling.len() == poset.size()
        && poset
            .covers()
            .iter()
            .all(|&(x, y)| labeling.label(x) < labeling.label(y))
}

/// Lexicographic stream of linear extensions.
///
/// Use [`LinearExtensions::advance`] to visit extensions without allocating.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    pending: Vec<usize>,
    placed: Vec<bool>,
    prefix: Vec<usize>,
    cursor: Vec<usize>,
    done: bool,
    just_emitted: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(poset: &'a Poset) -> Self {
        let d = poset.size();
        Self {
            poset,
            pending: poset.lower.iter().map(Vec::len).collect(),
            placed: vec![false; d],
            prefix: Vec::with_capacity(d),
            cursor: vec![0; d + 1],
            done: false,
            just_emitted: false,
        }
    }

    fn pop(&mut self) {
        let x = self.prefix.pop().expect("nonempty prefix");
        self.placed[x] = false;
        for &y in &self.poset.upper[x] {
            self.pending[y] += 1;
        }
    }

    /// Moves to the next extension and returns it.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        let d = self.poset.size();
        if self.just_emitted {
            self.pop();
            self.just_emitted = false;
        }
        loop {
            let depth = self.prefix.len();
            if depth == d {
                self.just_emitted = true;
                return Some(&self.prefix);
            }
            let next = (self.cursor[depth]..d).find(|&c| !self.placed[c] && self.pending[c] == 0);
            match next {
                Some(c) => {
                    self.cursor[depth] = c + 1;
                    self.cursor[depth + 1] = 0;
                    self.placed[c] = true;
                    self.prefix.push(c);
                    for &y in &self.poset.upper[c] {
                        self.pending[y] -= 1;
                    }
                }
                None if depth == 0 => {
                    self.done = true;
                    return None;
                }
                None => self.pop(),
            }
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: PosetError,
    },
}

/// A parsed poset file together with the input pairs that were dropped as
/// non-covers (implied by transitivity or repeated).
#[derive(Debug, Clone)]
pub struct ParsedPoset {
    pub poset: Poset,
    pub dropped: Vec<(usize, usize)>,
}

/// Parses the text format: first line `d`, then lines `i j` meaning `j`
/// covers `i`. Blank lines and `#` comments are ignored.
pub fn parse_poset(text: &str) -> Result<ParsedPoset, ParseError> {
    let mut size: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut pair_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                message: format!("expected a nonnegative integer, found `{s}`"),
            })
        };
        match (size, fields.as_slice()) {
            (None, [d]) => size = Some((parse(d)?, line)),
            (None, _) => {
                return Err(ParseError::Syntax {
                    line,
                    message: "first line must hold the element count".into(),
                })
            }
            (Some(_), [i, j]) => {
                pairs.push((parse(i)?, parse(j)?));
                pair_lines.push(line);
            }
            (Some(_), _) => {
                return Err(ParseError::Syntax {
                    line,
                    message: "expected `i j`".into(),
                })
            }
        }
    }
    let Some((d, size_line)) = size else {
        return Err(ParseError::Syntax {
            line: text.lines().count().max(1),
            message: "missing element count".into(),
        });
    };
    match Poset::from_covers(d, &pairs) {
        Ok((poset, dropped)) => Ok(ParsedPoset { poset, dropped }),
        Err(source) => {
            let line = match &source {
                PosetError::OutOfRange(i, j, _) => pairs
                    .iter()
                    .position(|p| p == &(*i, *j))
                    .map_or(size_line, |k| pair_lines[k]),
                PosetError::SelfLoop(x) => pairs
                    .iter()
                    .position(|p| p == &(*x, *x))
                    .map_or(size_line, |k| pair_lines[k]),
                PosetError::Cycle(cycle) => {
                    let (a, b) = (cycle[0], cycle[1 % cycle.len()]);
                    pairs
                        .iter()
                        .position(|p| p == &(a, b))
                        .map_or(size_line, |k| pair_lines[k])
                }
                PosetError::Empty => size_line,
            };
            Err(ParseError::Invalid { line, source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chains(v: &[&[usize]]) -> Vec<Chain> {
        v.iter().map(|c| Chain(c.to_vec())).collect()
    }

    /// Brute-force oracle: a subset is a chain iff it is totally ordered.
    fn chains_by_subsets(p: &Poset) -> Vec<Chain> {
        let d = p.size();
        let mut out = Vec::new();
        for mask in 1u32..(1 << d) {
            let mut elems: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
            let total = elems
                .iter()
                .all(|&a| elems.iter().all(|&b| p.comparable(a, b)));
            if total {
                elems.sort_by(|&a, &b| {
                    if p.lt(a, b) {
                        std::cmp::Ordering::Less
                    } else if p.lt(b, a) {
                        std::cmp::Ordering::Greater
                    } else {
                        std::cmp::Ordering::Equal
                    }
                });
                out.push(Chain(elems));
            }
        }
        out.sort();
        out
    }

    fn permutations(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(d - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, d - 1);
                out.push(q);
            }
        }
        out.sort();
        out
    }

    fn extensions_by_permutations(p: &Poset) -> Vec<Vec<usize>> {
        permutations(p.size())
            .into_iter()
            .filter(|perm| {
                let mut pos = vec![0; perm.len()];
                for (k, &x) in perm.iter().enumerate() {
                    pos[x] = k;
                }
                p.covers().iter().all(|&(x, y)| pos[x] < pos[y])
            })
            .collect()
    }

    #[test]
    fn zigzag_covers_match_fence_shape() {
        let z1 = zigzag_poset(1).unwrap();
        assert_eq!(z1.size(), 1);
        assert!(z1.covers().is_empty());
        assert_eq!(zigzag_poset(3).unwrap().covers(), &[(0, 1), (2, 1)]);
        assert_eq!(zigzag_poset(4).unwrap().covers(), &[(0, 1), (2, 1), (2, 3)]);
        assert_eq!(zigzag_poset(0), Err(PosetError::Empty));
    }

    #[test]
    fn zigzag_recognition_is_literal() {
        assert_eq!(zigzag_poset(5).unwrap().zigzag_order(), Some(5));
        // 0 ≻ 1 ≺ 2 is a fence too, but under a different indexing
        let flipped = Poset::from_relations(3, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(flipped.zigzag_order(), None);
        assert_eq!(Poset::antichain(1).unwrap().zigzag_order(), Some(1));
    }

    #[test]
    fn chains_small_examples() {
        assert_eq!(Poset::antichain(2).unwrap().all_chains(), chains(&[&[0], &[1]]));
        assert_eq!(
            zigzag_poset(3).unwrap().all_chains(),
            chains(&[&[0], &[0, 1], &[1], &[2], &[2, 1]])
        );
        assert_eq!(Poset::chain(3).unwrap().all_chains().len(), 7);
    }

    #[test]
    fn chains_match_subset_oracle() {
        let cases: Vec<Poset> = vec![
            zigzag_poset(6).unwrap(),
            Poset::chain(5).unwrap(),
            Poset::antichain(4).unwrap(),
            Poset::from_relations(6, &[(0, 2), (1, 2), (2, 3), (2, 4), (4, 5), (1, 5)]).unwrap(),
            Poset::from_relations(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]).unwrap(),
        ];
        for p in cases {
            assert_eq!(p.all_chains(), chains_by_subsets(&p), "{p:?}");
        }
    }

    #[test]
    fn maximal_chains_of_fences() {
        assert_eq!(
            zigzag_poset(5).unwrap().maximal_chains(),
            chains(&[&[0, 1], &[2, 1], &[2, 3], &[4, 3]])
        );
        assert_eq!(Poset::antichain(1).unwrap().maximal_chains(), chains(&[&[0]]));
        let m4 = zigzag_poset(4).unwrap().maximal_chains();
        assert_eq!(m4.len(), 3);
        assert!(m4.iter().all(|c| c.length() == 1));
        for n in 2..=12 {
            let m = zigzag_poset(n).unwrap().maximal_chains();
            assert_eq!(m.len(), n - 1);
            assert!(m.iter().all(|c| c.length() == 1));
        }
    }

    #[test]
    fn maximal_chains_are_maximal_among_all_chains() {
        let p = Poset::from_relations(6, &[(0, 2), (1, 2), (2, 3), (2, 4), (4, 5), (1, 5)]).unwrap();
        let all = chains_by_subsets(&p);
        let is_sub = |a: &Chain, b: &Chain| a != b && a.elems().iter().all(|x| b.elems().contains(x));
        let expected: Vec<Chain> = all
            .iter()
            .filter(|c| !all.iter().any(|o| is_sub(c, o)))
            .cloned()
            .collect();
        assert_eq!(p.maximal_chains(), expected);
    }

    #[test]
    fn rank_of_fences() {
        let r = zigzag_poset(6).unwrap().rank_function().unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.rho, vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(zigzag_poset(1).unwrap().rank_function().unwrap().rank, 0);
        for n in 2..=15 {
            assert_eq!(zigzag_poset(n).unwrap().rank_function().unwrap().rank, 1);
        }
    }

    #[test]
    fn ungraded_witness() {
        // a=0 ≺ b=1 ≺ c=2, d=3 ≺ c
        let p = Poset::from_relations(4, &[(0, 1), (1, 2), (3, 2)]).unwrap();
        let err = p.rank_function().unwrap_err();
        assert_eq!(err.longer, Chain(vec![0, 1, 2]));
        assert_eq!(err.shorter, Chain(vec![3, 2]));

        // two components of different heights
        let q = Poset::from_relations(3, &[(0, 1)]).unwrap();
        let err = q.rank_function().unwrap_err();
        assert_eq!(err.longer.length(), 1);
        assert_eq!(err.shorter.length(), 0);
    }

    #[test]
    fn naturality() {
        let z3 = zigzag_poset(3).unwrap();
        assert!(is_natural(&z3, &Labeling::new(vec![1, 3, 2]).unwrap()));
        assert!(!is_natural(&z3, &Labeling::identity(3)));
        assert!(is_natural(&Poset::antichain(4).unwrap(), &Labeling::identity(4)));
    }

    #[test]
    fn natural_labeling_examples() {
        assert_eq!(Poset::chain(2).unwrap().natural_labeling().labels(), &[1, 2]);
        assert_eq!(zigzag_poset(3).unwrap().natural_labeling().labels(), &[1, 3, 2]);
        assert_eq!(zigzag_poset(4).unwrap().natural_labeling().labels(), &[1, 3, 2, 4]);
        assert_eq!(Poset::antichain(3).unwrap().natural_labeling(), Labeling::identity(3));
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 1]).is_err());
        assert!(Labeling::new(vec![0, 1]).is_err());
        assert!(Labeling::new(vec![3, 1]).is_err());
        assert!(Labeling::new(vec![2, 1]).is_ok());
    }

    #[test]
    fn extensions_match_permutation_oracle() {
        assert_eq!(
            zigzag_poset(3).unwrap().linear_extensions().collect::<Vec<_>>(),
            vec![vec![0, 2, 1], vec![2, 0, 1]]
        );
        assert_eq!(zigzag_poset(4).unwrap().linear_extensions().count(), 5);
        assert_eq!(Poset::chain(5).unwrap().linear_extensions().count(), 1);
        let p = Poset::from_relations(6, &[(0, 2), (1, 2), (2, 3), (2, 4), (4, 5), (1, 5)]).unwrap();
        for q in [p, zigzag_poset(6).unwrap(), Poset::antichain(4).unwrap()] {
            let streamed: Vec<_> = q.linear_extensions().collect();
            assert_eq!(streamed, extensions_by_permutations(&q));
        }
    }

    #[test]
    fn fence_extension_counts_are_euler_numbers() {
        // Oracle: alternating permutations w1 < w2 > w3 < ... of 1..n.
        for n in 1..=8usize {
            let alternating = permutations(n)
                .into_iter()
                .filter(|w| {
                    w.windows(2)
                        .enumerate()
                        .all(|(k, pair)| (pair[0] < pair[1]) == (k % 2 == 0))
                })
                .count();
            let z = zigzag_poset(n).unwrap();
            assert_eq!(z.linear_extensions().count(), alternating, "n={n}");
            assert_eq!(
                z.count_linear_extensions(usize::MAX).unwrap(),
                BigUint::from(alternating)
            );
        }
    }

    #[test]
    fn extension_count_cap() {
        assert!(Poset::antichain(12).unwrap().count_linear_extensions(100).is_none());
        assert_eq!(
            Poset::antichain(6).unwrap().count_linear_extensions(1000),
            Some(BigUint::from(720u32))
        );
    }

    #[test]
    fn redundant_covers_are_dropped() {
        let (p, dropped) = Poset::from_covers(3, &[(0, 1), (1, 2), (0, 2), (0, 1)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(dropped, vec![(0, 2), (0, 1)]);
    }

    #[test]
    fn cycles_are_named() {
        let err = Poset::from_relations(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        let PosetError::Cycle(c) = &err else { panic!("{err}") };
        assert_eq!(c.len(), 3);
        assert_eq!(err.to_string(), "relations contain a cycle: 0 -> 1 -> 2 -> 0");
        assert_eq!(
            Poset::from_relations(2, &[(1, 1)]),
            Err(PosetError::SelfLoop(1))
        );
    }

    #[test]
    fn parse_text_format() {
        let text = "# a fence\n3\n\n0 1  # a1 < a2\n2 1\n";
        let parsed = parse_poset(text).unwrap();
        assert_eq!(parsed.poset, zigzag_poset(3).unwrap());
        assert!(parsed.dropped.is_empty());
        assert_eq!(parse_poset(&parsed.poset.to_text()).unwrap().poset, parsed.poset);

        let err = parse_poset("3\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err, ParseError::Syntax { line: 3, message: "expected a nonnegative integer, found `x`".into() });
        let err = parse_poset("3\n0 1\n1 2\n2 0\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { source: PosetError::Cycle(_), .. }));
        let err = parse_poset("2\n0 5\n").unwrap_err();
        assert!(matches!(err, ParseError::Invalid { line: 2, .. }));
        assert!(parse_poset("# nothing\n").is_err());
        assert!(parse_poset("0\n").is_err());
    }
}
