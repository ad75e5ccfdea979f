//! Words over `{x, y}` and compositions (finite sequences of positive integers).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// Longest word that fits the packed representation.
pub const MAX_WORD_LEN: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    fn bit(self) -> u64 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::X
        } else {
            Letter::Y
        }
    }

    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }
}

/// A word in the letters `x < y`, packed as a bit string (`x = 0`, `y = 1`).
///
/// The first letter is the most significant bit, so for words of equal
/// length the integer order of `bits` is the lexicographic order. The
/// derived `Ord` is shortlex: shorter words first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn letter(l: Letter) -> Word {
        Word { len: 1, bits: l.bit() }
    }

    pub fn x() -> Word {
        Word::letter(Letter::X)
    }

    pub fn y() -> Word {
        Word::letter(Letter::Y)
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Word {
        assert!(n <= MAX_WORD_LEN);
        Word { len: n as u8, bits: 0 }
    }

    /// `x^a y x^b`.
    pub fn deg1(a: usize, b: usize) -> Word {
        Word::x_pow(a).concat(&Word::y()).concat(&Word::x_pow(b))
    }

    /// `x^a y x^b y x^c`.
    pub fn deg2(a: usize, b: usize, c: usize) -> Word {
        Word::deg1(a, b).concat(&Word::deg1(0, c))
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn y_degree(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn x_degree(&self) -> usize {
        self.len() - self.y_degree()
    }

    pub fn get(&self, i: usize) -> Letter {
        assert!(i < self.len());
        Letter::from_bit(self.bits >> (self.len() - 1 - i))
    }

    pub fn first(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(0))
    }

    pub fn last(&self) -> Option<Letter> {
        (!self.is_empty()).then(|| self.get(self.len() - 1))
    }

    pub fn push(&mut self, l: Letter) {
        assert!(self.len() < MAX_WORD_LEN, "word too long");
        self.bits = (self.bits << 1) | l.bit();
        self.len += 1;
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert!(self.len() + other.len() <= MAX_WORD_LEN, "word too long");
        let bits = if other.len() == 64 { other.bits } else { (self.bits << other.len) | other.bits };
        Word { len: self.len + other.len, bits }
    }

    /// Letters `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        assert!(start <= end && end <= self.len());
        let n = end - start;
        if n == 0 {
            return Word::empty();
        }
        let shifted = self.bits >> (self.len() - end);
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Word { len: n as u8, bits: shifted & mask }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Inserts `l` before position `pos` (0 ≤ pos ≤ len).
    pub fn insert(&self, pos: usize, l: Letter) -> Word {
        self.slice(0, pos).concat(&Word::letter(l)).concat(&self.slice(pos, self.len()))
    }

    /// `w(y, x)`: exchange the two letters.
    pub fn swap_letters(&self) -> Word {
        let mask = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        Word { len: self.len, bits: !self.bits & mask }
    }

    /// Maximal runs as `(letter, count)` pairs.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for l in self.letters() {
            match out.last_mut() {
                Some((last, n)) if *last == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Lengths of the x-runs separating the y's: `x^a₀ y x^a₁ y … y x^a_k`.
    pub fn x_gaps(&self) -> Vec<usize> {
        let mut gaps = vec![0];
        for l in self.letters() {
            match l {
                Letter::X => *gaps.last_mut().unwrap() += 1,
                Letter::Y => gaps.push(0),
            }
        }
        gaps
    }

    /// `(a, b)` with `self = x^a y x^b`, if the y-degree is one.
    pub fn as_deg1(&self) -> Option<(usize, usize)> {
        match self.x_gaps()[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    /// `(a, b, c)` with `self = x^a y x^b y x^c`, if the y-degree is two.
    pub fn as_deg2(&self) -> Option<(usize, usize, usize)> {
        match self.x_gaps()[..] {
            [a, b, c] => Some((a, b, c)),
            _ => None,
        }
    }

    /// Empty, or starts with `x` and ends with `y`.
    pub fn is_admissible(&self) -> bool {
        self.is_empty() || (self.first() == Some(Letter::X) && self.last() == Some(Letter::Y))
    }

    /// The composition `(n₁,…,n_k)` of an admissible word `x^{n₁−1}y⋯x^{n_k−1}y`.
    pub fn to_composition(&self) -> Option<Composition> {
        if self.last() == Some(Letter::X) {
            return None;
        }
        let gaps = self.x_gaps();
        let parts = gaps[..gaps.len() - 1].iter().map(|&g| g as u32 + 1).collect();
        Some(Composition::new(parts))
    }

    /// Lexicographic comparison with `x < y`, a proper prefix being smaller.
    pub fn lex_cmp(&self, other: &Word) -> Ordering {
        let n = self.len().min(other.len());
        let a = self.slice(0, n).bits;
        let b = other.slice(0, n).bits;
        a.cmp(&b).then(self.len.cmp(&other.len))
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        let k = k % self.len().max(1);
        self.slice(k, self.len()).concat(&self.slice(0, k))
    }

    /// Parses `("x"|"y") ("^" uint)?` repeated, with whitespace ignored.
    /// The single character `1` denotes the empty word.
    pub fn parse(text: &str) -> Result<Word, ParseError> {
        if text.trim() == "1" {
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        let mut last: Option<Letter> = None;
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (off, ch) = chars[i];
            match ch {
                'x' | 'y' => {
                    let l = if ch == 'x' { Letter::X } else { Letter::Y };
                    if w.len() >= MAX_WORD_LEN {
                        return Err(ParseError::TooLong { max: MAX_WORD_LEN });
                    }
                    w.push(l);
                    last = Some(l);
                    i += 1;
                }
                '^' => {
                    let l = last.take().ok_or(ParseError::DanglingExponent(off))?;
                    let mut j = i + 1;
                    while j < chars.len() && chars[j].1.is_whitespace() {
                        j += 1;
                    }
                    let start = j;
                    while j < chars.len() && chars[j].1.is_ascii_digit() {
                        j += 1;
                    }
                    if start == j {
                        return Err(ParseError::MissingExponent(off));
                    }
                    let digits: String = chars[start..j].iter().map(|c| c.1).collect();
                    let n: usize = digits.parse().map_err(|_| ParseError::TooLong { max: MAX_WORD_LEN })?;
                    if n == 0 {
                        return Err(ParseError::ZeroExponent(off));
                    }
                    if w.len() - 1 + n > MAX_WORD_LEN {
                        return Err(ParseError::TooLong { max: MAX_WORD_LEN });
                    }
                    for _ in 1..n {
                        w.push(l);
                    }
                    i = j;
                }
                c if c.is_whitespace() => i += 1,
                c if c.is_ascii_digit() => return Err(ParseError::DanglingExponent(off)),
                c => return Err(ParseError::UnexpectedChar(c, off)),
            }
        }
        Ok(w)
    }

    /// All words of length `len` with y-degree at most `max_y`, in lexicographic order.
    pub fn all(len: usize, max_y: usize) -> Vec<Word> {
        assert!(len < 64);
        (0u64..(1u64 << len))
            .filter(|b| b.count_ones() as usize <= max_y)
            .map(|bits| Word { len: len as u8, bits })
            .collect()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then(self.bits.cmp(&other.bits))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for (l, n) in self.runs() {
            let c = if l == Letter::X { 'x' } else { 'y' };
            if n == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{n}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

/// A finite sequence of positive integers, the index of `ζ(n₁,…,n_k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Composition {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be positive");
        Composition(parts)
    }

    pub fn empty() -> Composition {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Empty, or first part at least 2.
    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|&n| n >= 2)
    }

    /// `x^{n₁−1} y ⋯ x^{n_k−1} y`.
    pub fn to_word(&self) -> Word {
        let mut w = Word::empty();
        for &n in &self.0 {
            w = w.concat(&Word::deg1(n as usize - 1, 0));
        }
        w
    }

    pub fn split_first(&self) -> Option<(u32, Composition)> {
        self.0.split_first().map(|(n, rest)| (*n, Composition(rest.to_vec())))
    }

    pub fn prepend(&self, n: u32) -> Composition {
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.0);
        Composition::new(parts)
    }

    pub fn parse(text: &str) -> Result<Composition, ParseError> {
        let bad = || ParseError::BadComposition(text.to_string());
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(bad());
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Composition {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::parse(s)
    }
}

impl From<&[u32]> for Composition {
    fn from(parts: &[u32]) -> Self {
        Composition::new(parts.to_vec())
    }
}
