//! The self-organizing list and its cost accounting.
//!
//! Positions are 1-based everywhere: the front of the list is position 1.
//! Accessing position `i` costs `i` under [`CostModel::Full`] and `i - 1`
//! under [`CostModel::Partial`]. Moving a just-accessed element forward is a
//! free exchange; swapping any two adjacent elements is a paid exchange of
//! cost 1.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result};

/// One element of the alphabet a list and its request sequence draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(c: char) -> Self {
        Symbol(c)
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl From<char> for Symbol {
    fn from(c: char) -> Self {
        Symbol(c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered list of pairwise-distinct symbols, addressed by 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListConfiguration {
    items: Vec<Symbol>,
}

impl ListConfiguration {
    /// Builds a list, rejecting empty input and duplicate symbols.
    pub fn new(items: Vec<Symbol>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyList);
        }
        let mut seen = HashSet::with_capacity(items.len());
        for &s in &items {
            if !seen.insert(s) {
                return Err(Error::DuplicateSymbol(s));
            }
        }
        Ok(ListConfiguration { items })
    }

    /// Builds a list with one symbol per character of `text`.
    pub fn from_chars(text: &str) -> Result<Self> {
        Self::new(text.chars().map(Symbol::new).collect())
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// Always false; an empty list cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.items
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.items.contains(&s)
    }

    /// Linear scan for `s`, returning its 1-based position.
    pub fn find_position(&self, s: Symbol) -> Result<usize> {
        self.items
            .iter()
            .position(|&x| x == s)
            .map(|i| i + 1)
            .ok_or(Error::SymbolNotInList(s))
    }

    /// The symbol at a 1-based position.
    pub fn symbol_at(&self, position: usize) -> Result<Symbol> {
        self.check_position(position, self.len())?;
        Ok(self.items[position - 1])
    }

    /// Free exchange: moves the element at `position` to the front, keeping
    /// the relative order of all other elements. Charges nothing.
    pub fn move_to_front(&mut self, position: usize) -> Result<()> {
        self.check_position(position, self.len())?;
        let s = self.items.remove(position - 1);
        self.items.insert(0, s);
        Ok(())
    }

    /// Paid exchange: swaps the elements at `position` and `position + 1`
    /// and returns the unit cost.
    pub fn paid_exchange(&mut self, position: usize) -> Result<u64> {
        self.check_position(position, self.len().saturating_sub(1))?;
        self.items.swap(position - 1, position);
        Ok(1)
    }

    fn check_position(&self, position: usize, max: usize) -> Result<()> {
        if position < 1 || position > max {
            return Err(Error::PositionOutOfRange {
                position,
                len: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ListConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.items {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The requests to serve, in order. May be empty; indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RequestSequence {
    requests: Vec<Symbol>,
}

impl RequestSequence {
    pub fn new(requests: Vec<Symbol>) -> Self {
        RequestSequence { requests }
    }

    /// One request per character of `text`.
    pub fn from_chars(text: &str) -> Self {
        RequestSequence {
            requests: text.chars().map(Symbol::new).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.requests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.requests.is_empty()
    }

    pub fn requests(&self) -> &[Symbol] {
        &self.requests
    }

    /// The request at a 1-based index, if any.
    pub fn get(&self, index: usize) -> Option<Symbol> {
        index
            .checked_sub(1)
            .and_then(|i| self.requests.get(i))
            .copied()
    }
}

impl From<Vec<Symbol>> for RequestSequence {
    fn from(requests: Vec<Symbol>) -> Self {
        RequestSequence { requests }
    }
}

impl FromIterator<Symbol> for RequestSequence {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        RequestSequence {
            requests: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for RequestSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.requests {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// How an access at 1-based position `i` is charged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostModel {
    /// Charges `i` per access.
    Full,
    /// Charges `i - 1` comparisons per access.
    Partial,
}

impl CostModel {
    pub fn access_cost(self, position: usize) -> u64 {
        assert!(position >= 1, "positions are 1-based");
        match self {
            CostModel::Full => position as u64,
            CostModel::Partial => (position - 1) as u64,
        }
    }
}

impl fmt::Display for CostModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostModel::Full => write!(f, "full"),
            CostModel::Partial => write!(f, "partial"),
        }
    }
}

/// The outcome of serving a request sequence with one policy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostReport {
    /// One entry per request, in order.
    pub per_access_costs: Vec<u64>,
    /// Paid adjacent swaps performed (zero for every shipped policy).
    pub paid_exchange_count: u64,
    /// Free exchanges performed.
    pub move_count: u64,
    /// Sum of access costs plus paid exchanges.
    pub total_cost: u64,
    /// List configuration after the last request.
    pub final_list: ListConfiguration,
}
