//! Seeded workload generators and list construction.
//!
//! Two request-sequence families are supported: a 92-symbol alphabet of
//! letters, digits and keyboard punctuation, and numeric alphabets whose size
//! equals the base (binary, octal, decimal, hexadecimal). Generation is
//! uniform i.i.d. over the family's alphabet and fully determined by a 64-bit
//! seed.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::list::{ListConfiguration, RequestSequence, Symbol};
use crate::{Error, Result};

/// Number of symbols in the alphabetic/special-character alphabet:
/// 52 letters, 10 digits and 30 punctuation characters.
pub const ALPHA_SPECIAL_SIZE: usize = 92;

/// The 30 punctuation symbols: the first 30 ASCII punctuation characters in
/// code-point order.
const SPECIAL_CHARS: [char; 30] = [
    '!', '"', '#', '$', '%', '&', '\'', '(', ')', '*', '+', ',', '-', '.', '/', ':', ';', '<', '=',
    '>', '?', '@', '[', '\\', ']', '^', '_', '`', '{', '|',
];

const HEX_DIGITS: [char; 16] = [
    '0', '1', '2', '3', '4', '5', '6', '7', '8', '9', 'A', 'B', 'C', 'D', 'E', 'F',
];

fn alpha_special_symbols() -> &'static [Symbol] {
    static SYMBOLS: OnceLock<Vec<Symbol>> = OnceLock::new();
    SYMBOLS.get_or_init(|| {
        ('a'..='z')
            .chain('A'..='Z')
            .chain('0'..='9')
            .chain(SPECIAL_CHARS)
            .map(Symbol::new)
            .collect()
    })
}

fn hex_symbols() -> &'static [Symbol] {
    static SYMBOLS: OnceLock<Vec<Symbol>> = OnceLock::new();
    SYMBOLS.get_or_init(|| HEX_DIGITS.map(Symbol::new).to_vec())
}

/// A supported number base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Binary,
    Octal,
    Decimal,
    Hexadecimal,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::Binary, Base::Octal, Base::Decimal, Base::Hexadecimal];

    pub fn value(self) -> usize {
        match self {
            Base::Binary => 2,
            Base::Octal => 8,
            Base::Decimal => 10,
            Base::Hexadecimal => 16,
        }
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self> {
        match value {
            2 => Ok(Base::Binary),
            8 => Ok(Base::Octal),
            10 => Ok(Base::Decimal),
            16 => Ok(Base::Hexadecimal),
            other => Err(Error::InvalidBase(other)),
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Which alphabet a sequence draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Letters (both cases), digits and 30 punctuation characters.
    AlphaSpecial,
    /// The first `base` digit symbols, `0..=9` then `A..=F`.
    Numeric(Base),
}

impl Family {
    /// The family's alphabet in its canonical order.
    pub fn alphabet(&self) -> &'static [Symbol] {
        match self {
            Family::AlphaSpecial => alpha_special_symbols(),
            Family::Numeric(base) => &hex_symbols()[..base.value()],
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet().len()
    }

    /// Membership test for a raw character. Numeric digits are canonically
    /// upper case; lower-case hex digits are not members (parsers fold case
    /// before calling this).
    pub fn contains(&self, c: char) -> bool {
        match self {
            Family::AlphaSpecial => c.is_ascii_alphanumeric() || SPECIAL_CHARS.contains(&c),
            Family::Numeric(base) => HEX_DIGITS[..base.value()].contains(&c),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::AlphaSpecial => write!(f, "alpha"),
            Family::Numeric(base) => write!(f, "numeric({base})"),
        }
    }
}

/// A reproducible generation request: family, length and seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
}

/// Draws `spec.n` symbols uniformly from the family's alphabet. The same spec
/// always yields the same sequence.
pub fn gen_sequence(spec: &GenSpec) -> RequestSequence {
    let alphabet = spec.family.alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.n)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect()
}

/// Builds the initial list from a sequence's distinct symbols, in order of
/// first occurrence.
pub fn build_list(seq: &RequestSequence) -> Result<ListConfiguration> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut seen = HashSet::new();
    let mut items = Vec::new();
    for &s in seq.requests() {
        if seen.insert(s) {
            items.push(s);
        }
    }
    ListConfiguration::new(items)
}

/// Summary statistics describing how much a sequence re-requests symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalityStats {
    pub distinct_count: usize,
    /// Requests per symbol, keyed in symbol order.
    pub frequencies: BTreeMap<Symbol, usize>,
    /// Mean number of requests between consecutive occurrences of the same
    /// symbol; `None` when no symbol repeats.
    pub mean_reuse_distance: Option<f64>,
}

pub fn locality_stats(seq: &RequestSequence) -> Result<LocalityStats> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }

    let mut frequencies = BTreeMap::new();
    let mut last_seen: HashMap<Symbol, usize> = HashMap::new();
    let mut distance_sum = 0usize;
    let mut reuse_count = 0usize;
    for (i, &s) in seq.requests().iter().enumerate() {
        *frequencies.entry(s).or_insert(0) += 1;
        if let Some(prev) = last_seen.insert(s, i) {
            distance_sum += i - prev - 1;
            reuse_count += 1;
        }
    }

    Ok(LocalityStats {
        distinct_count: frequencies.len(),
        frequencies,
        mean_reuse_distance: (reuse_count > 0).then(|| distance_sum as f64 / reuse_count as f64),
    })
}
