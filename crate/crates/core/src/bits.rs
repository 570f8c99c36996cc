//! Word-level helpers for fixed-width bit rows.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn get(row: &[u64], i: usize) -> bool {
    row[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub fn set(row: &mut [u64], i: usize) {
    row[i >> 6] |= 1 << (i & 63);
}

#[inline]
pub fn clear(row: &mut [u64], i: usize) {
    row[i >> 6] &= !(1 << (i & 63));
}

pub fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// Iterator over the positions of set bits, ascending.
pub struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub fn new(row: &'a [u64]) -> Self {
        Ones {
            row,
            word: 0,
            cur: row.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word * 64 + bit)
    }
}

pub fn ones(row: &[u64]) -> Ones<'_> {
    Ones::new(row)
}

/// A growable-by-construction bit set of fixed capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; words_for(n)],
        }
    }

    pub fn insert(&mut self, i: usize) {
        set(&mut self.words, i);
    }

    pub fn remove(&mut self, i: usize) {
        clear(&mut self.words, i);
    }

    pub fn contains(&self, i: usize) -> bool {
        get(&self.words, i)
    }

    pub fn clear_all(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn len(&self) -> usize {
        count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        is_empty(&self.words)
    }

    pub fn as_words(&self) -> &[u64] {
        &self.words
    }

    pub fn as_words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    pub fn iter(&self) -> Ones<'_> {
        ones(&self.words)
    }
}
