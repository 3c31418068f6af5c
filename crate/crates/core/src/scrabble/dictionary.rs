//! Word list with a prefix trie.

use std::io::BufRead;

use crate::error::{Error, Result};

pub const MIN_WORD_LEN: usize = 2;
pub const MAX_WORD_LEN: usize = 15;

/// Letters are stored as `0..26`.
pub(crate) type Letter = u8;

pub(crate) const NO_NODE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct TrieNode {
    next: [u32; 26],
    /// Bit `l` set when `next[l]` exists.
    mask: u32,
    terminal: bool,
}

impl TrieNode {
    fn new() -> Self {
        TrieNode { next: [NO_NODE; 26], mask: 0, terminal: false }
    }
}

#[derive(Clone, Debug)]
pub struct Dictionary {
    nodes: Vec<TrieNode>,
    words: usize,
}

impl Default for Dictionary {
    fn default() -> Self {
        Dictionary { nodes: vec![TrieNode::new()], words: 0 }
    }
}

/// Uppercases `raw` and returns its letters as `0..26` if it is a playable word.
pub(crate) fn normalize(raw: &str) -> Option<Vec<Letter>> {
    let word = raw.trim();
    if !(MIN_WORD_LEN..=MAX_WORD_LEN).contains(&word.len()) {
        return None;
    }
    word.bytes()
        .map(|b| b.is_ascii_alphabetic().then(|| b.to_ascii_uppercase() - b'A'))
        .collect()
}

pub(crate) fn letter_char(l: Letter) -> char {
    (b'A' + l) as char
}

pub(crate) fn letters_of(word: &str) -> Vec<Letter> {
    word.bytes().map(|b| b.to_ascii_uppercase() - b'A').collect()
}

impl Dictionary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reads one word per line. Words are uppercased; lines with characters
    /// outside A-Z or a length outside 2..=15 are skipped.
    pub fn load<R: BufRead>(source: R) -> Result<Self> {
        let mut dict = Dictionary::new();
        for (i, line) in source.lines().enumerate() {
            let line = line.map_err(|e| Error::input(format!("dictionary line {}: {e}", i + 1)))?;
            dict.insert(&line);
        }
        Ok(dict)
    }

    pub fn from_words<'a, I: IntoIterator<Item = &'a str>>(words: I) -> Self {
        let mut dict = Dictionary::new();
        for w in words {
            dict.insert(w);
        }
        dict
    }

    /// Returns whether the word was new and valid.
    pub fn insert(&mut self, raw: &str) -> bool {
        let Some(letters) = normalize(raw) else { return false };
        let mut node = 0usize;
        for l in letters {
            let next = self.nodes[node].next[l as usize];
            node = if next == NO_NODE {
                let id = self.nodes.len();
                self.nodes.push(TrieNode::new());
                self.nodes[node].next[l as usize] = id as u32;
                self.nodes[node].mask |= 1 << l;
                id
            } else {
                next as usize
            };
        }
        let fresh = !self.nodes[node].terminal;
        self.nodes[node].terminal = true;
        self.words += fresh as usize;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words == 0
    }

    pub fn contains(&self, word: &str) -> bool {
        self.walk_str(word).is_some_and(|n| self.nodes[n as usize].terminal)
    }

    pub fn is_prefix(&self, s: &str) -> bool {
        self.walk_str(s).is_some()
    }

    fn walk_str(&self, s: &str) -> Option<u32> {
        if !s.bytes().all(|b| b.is_ascii_alphabetic()) {
            return None;
        }
        self.walk(0, s.bytes().map(|b| b.to_ascii_uppercase() - b'A'))
    }

    #[inline]
    pub(crate) fn root(&self) -> u32 {
        0
    }

    #[inline]
    pub(crate) fn child(&self, node: u32, l: Letter) -> u32 {
        self.nodes[node as usize].next[l as usize]
    }

    #[inline]
    pub(crate) fn child_mask(&self, node: u32) -> u32 {
        self.nodes[node as usize].mask
    }

    #[inline]
    pub(crate) fn is_terminal(&self, node: u32) -> bool {
        self.nodes[node as usize].terminal
    }

    pub(crate) fn walk<I: IntoIterator<Item = Letter>>(&self, from: u32, letters: I) -> Option<u32> {
        let mut node = from;
        for l in letters {
            node = self.child(node, l);
            if node == NO_NODE {
                return None;
            }
        }
        Some(node)
    }

    pub(crate) fn contains_letters(&self, letters: &[Letter]) -> bool {
        self.walk(0, letters.iter().copied()).is_some_and(|n| self.is_terminal(n))
    }

    /// All words in lexicographic order.
    pub fn words(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.words);
        let mut buf = String::new();
        self.collect(0, &mut buf, &mut out);
        out
    }

    fn collect(&self, node: u32, buf: &mut String, out: &mut Vec<String>) {
        if self.is_terminal(node) {
            out.push(buf.clone());
        }
        for l in 0..26u8 {
            let next = self.child(node, l);
            if next != NO_NODE {
                buf.push(letter_char(l));
                self.collect(next, buf, out);
                buf.pop();
            }
        }
    }
}
