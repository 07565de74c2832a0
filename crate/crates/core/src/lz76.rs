//! Exhaustive-history parsing of binary strings.
//!
//! The string is cut into consecutive components. Starting at position `p`,
//! a component grows one bit at a time and stops at the first endpoint `e`
//! for which `x[p..e]` is *not* a substring of `x[0..e-1]` (copies may
//! overlap the component itself). The final component may end at the string
//! boundary without becoming new. The number of components is the
//! production complexity of the string.
//!
//! Reproducibility is tested against an online suffix automaton of the
//! prefix, so a parse is linear in the string length.

use std::ops::Range;

const NONE: u32 = u32::MAX;

#[derive(Clone)]
struct State {
    len: usize,
    link: u32,
    next: [u32; 2],
}

struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
}

impl SuffixAutomaton {
    fn with_capacity(n: usize) -> Self {
        let mut states = Vec::with_capacity(2 * n + 1);
        states.push(State {
            len: 0,
            link: NONE,
            next: [NONE; 2],
        });
        Self { states, last: 0 }
    }

    fn next(&self, s: u32, bit: bool) -> Option<u32> {
        match self.states[s as usize].next[bit as usize] {
            NONE => None,
            t => Some(t),
        }
    }

    /// Appends one bit. Returns `(split, clone)` when an existing state was
    /// split: strings of `split` no longer than `len(clone)` now live in `clone`.
    fn extend(&mut self, bit: bool) -> Option<(u32, u32)> {
        let c = bit as usize;
        let cur = self.states.len() as u32;
        self.states.push(State {
            len: self.states[self.last as usize].len + 1,
            link: NONE,
            next: [NONE; 2],
        });
        let mut p = self.last;
        self.last = cur;
        while p != NONE && self.states[p as usize].next[c] == NONE {
            self.states[p as usize].next[c] = cur;
            p = self.states[p as usize].link;
        }
        if p == NONE {
            self.states[cur as usize].link = 0;
            return None;
        }
        let q = self.states[p as usize].next[c];
        if self.states[p as usize].len + 1 == self.states[q as usize].len {
            self.states[cur as usize].link = q;
            return None;
        }
        let clone = self.states.len() as u32;
        let mut cloned = self.states[q as usize].clone();
        cloned.len = self.states[p as usize].len + 1;
        self.states.push(cloned);
        while p != NONE && self.states[p as usize].next[c] == q {
            self.states[p as usize].next[c] = clone;
            p = self.states[p as usize].link;
        }
        self.states[q as usize].link = clone;
        self.states[cur as usize].link = clone;
        Some((q, clone))
    }
}

/// Splits `bits` into its exhaustive-history components, returned as
/// consecutive index ranges covering the whole input.
pub fn decompose(bits: &[bool]) -> Vec<Range<usize>> {
    let n = bits.len();
    let mut components = Vec::new();
    let mut sam = SuffixAutomaton::with_capacity(n);
    // The automaton recognises exactly the substrings of bits[..built].
    let mut built = 0;
    let mut start = 0;
    while start < n {
        let mut state = 0u32;
        let mut matched = 0usize;
        let mut end = start + 1;
        loop {
            while built < end - 1 {
                if let Some((split, clone)) = sam.extend(bits[built]) {
                    if state == split && matched <= sam.states[clone as usize].len {
                        state = clone;
                    }
                }
                built += 1;
            }
            match sam.next(state, bits[end - 1]) {
                Some(t) if end < n => {
                    state = t;
                    matched += 1;
                    end += 1;
                }
                _ => break,
            }
        }
        components.push(start..end);
        start = end;
    }
    components
}

/// Number of components in the exhaustive history of `bits`.
pub fn complexity(bits: &[bool]) -> usize {
    decompose(bits).len()
}
