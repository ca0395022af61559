//! A deterministic list of every quadruple machine.
//!
//! Machines are grouped by their number of quadruples `k = 1, 2, ...`.
//! Group `k` draws from states `q0..=q(2k)`; it holds every deterministic
//! set of `k` quadruples over that alphabet, each written with its
//! quadruples sorted ascending, and the sets are listed lexicographically.
//! Quadruples compare field by field with `0 < 1` and `P < E < L < R`.
//!
//! Because the quadruples of a deterministic machine have pairwise distinct
//! `(state, symbol)` keys, group `k` has exactly
//! `C(2s, k) * (4s)^k` members with `s = 2k + 1`, and any index can be
//! unranked directly without generating its predecessors.

use thiserror::Error;

use crate::tm::{Action, Machine, Quadruple, State, Symbol};

/// Position in the machine list, 0-based.
pub type MachineIndex = u64;

pub const DEFAULT_GENERATION_BUDGET: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("machine index {requested} is beyond the generation budget of {budget}")]
    ResourceLimit { requested: u64, budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumeration {
    budget: u64,
}

impl Default for Enumeration {
    fn default() -> Self {
        Enumeration { budget: DEFAULT_GENERATION_BUDGET }
    }
}

impl Enumeration {
    /// Indices `>= budget` (and prefixes longer than `budget`) are refused.
    pub fn with_budget(budget: u64) -> Self {
        Enumeration { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn machine_at(&self, n: MachineIndex) -> Result<Machine, EnumerationError> {
        if n >= self.budget {
            return Err(EnumerationError::ResourceLimit { requested: n, budget: self.budget });
        }
        Ok(unrank(n))
    }

    pub fn enumerate_prefix(&self, count: u64) -> Result<Vec<Machine>, EnumerationError> {
        if count > self.budget {
            return Err(EnumerationError::ResourceLimit { requested: count, budget: self.budget });
        }
        Ok(Machines::from(0).take(count as usize).collect())
    }

    /// Streams machines starting at index `start`, ignoring the budget.
    pub fn iter_from(&self, start: MachineIndex) -> Machines {
        Machines::from(start)
    }
}

/// Number of states available to group `k`.
pub fn group_states(k: usize) -> usize {
    2 * k + 1
}

/// Size of group `k` (saturating at `u128::MAX`).
pub fn group_size(k: usize) -> u128 {
    let s = group_states(k);
    let keys = 2 * s;
    let choices = 4 * s as u128;
    binomial(keys, k).saturating_mul(pow(choices, k))
}

/// Index of the first machine of group `k >= 1`.
pub fn group_start(k: usize) -> u128 {
    (1..k).fold(0u128, |acc, g| acc.saturating_add(group_size(g)))
}

/// Index of `machine` in the list, treating its quadruples as a set.
///
/// `None` when the machine is empty, nondeterministic, mentions a state
/// outside its group's alphabet, or its index does not fit in a `u64`.
pub fn index_of(machine: &Machine) -> Option<MachineIndex> {
    let k = machine.len();
    if k == 0 {
        return None;
    }
    let s = group_states(k);
    let keys = 2 * s;
    let m = 4 * s;
    let mut quads = machine.quadruples().to_vec();
    quads.sort();
    let mut rank: u128 = 0;
    let mut next_key = 0;
    for (i, q) in quads.iter().enumerate() {
        if q.state_in.0 as usize >= s || q.state_out.0 as usize >= s {
            return None;
        }
        let key = key_of(q);
        let choice = choice_of(q, s);
        let tail = completions(keys, m, k, i, key);
        for skipped in next_key..key {
            rank = rank.checked_add((m as u128).checked_mul(completions(keys, m, k, i, skipped))?)?;
        }
        rank = rank.checked_add((choice as u128).checked_mul(tail)?)?;
        next_key = key + 1;
    }
    let index = group_start(k).checked_add(rank)?;
    u64::try_from(index).ok()
}

fn key_of(q: &Quadruple) -> usize {
    q.state_in.0 as usize * 2 + usize::from(q.symbol_in == Symbol::One)
}

fn choice_of(q: &Quadruple, s: usize) -> usize {
    let action = Action::ALL.iter().position(|a| *a == q.action).unwrap();
    action * s + q.state_out.0 as usize
}

fn quadruple(key: usize, choice: usize, s: usize) -> Quadruple {
    Quadruple {
        state_in: State((key / 2) as u32),
        symbol_in: Symbol::ALL[key % 2],
        action: Action::ALL[choice / s],
        state_out: State((choice % s) as u32),
    }
}

/// Ways to complete a machine whose quadruple at position `pos` has key
/// `key`, given any fixed choice for that quadruple.
fn completions(keys: usize, m: usize, k: usize, pos: usize, key: usize) -> u128 {
    let remaining = k - pos - 1;
    binomial(keys - key - 1, remaining).saturating_mul(pow(m as u128, remaining))
}

fn unrank(n: MachineIndex) -> Machine {
    let mut rank = n as u128;
    let mut k = 1;
    loop {
        let size = group_size(k);
        if rank < size {
            break;
        }
        rank -= size;
        k += 1;
    }
    let s = group_states(k);
    let keys = 2 * s;
    let m = 4 * s;
    let mut quads = Vec::with_capacity(k);
    let mut key = 0;
    for pos in 0..k {
        loop {
            let tail = completions(keys, m, k, pos, key);
            let block = tail.saturating_mul(m as u128);
            if rank < block {
                let choice = (rank / tail) as usize;
                rank %= tail;
                quads.push(quadruple(key, choice, s));
                key += 1;
                break;
            }
            rank -= block;
            key += 1;
        }
    }
    Machine::new(quads).expect("distinct keys are deterministic")
}

/// Sequential walk over the list; much cheaper per machine than repeated
/// [`Enumeration::machine_at`].
#[derive(Debug, Clone)]
pub struct Machines {
    k: usize,
    keys: Vec<usize>,
    choices: Vec<usize>,
}

impl Machines {
    fn from(start: MachineIndex) -> Self {
        let first = unrank(start);
        let s = group_states(first.len());
        Machines {
            k: first.len(),
            keys: first.quadruples().iter().map(key_of).collect(),
            choices: first.quadruples().iter().map(|q| choice_of(q, s)).collect(),
        }
    }

    fn current(&self) -> Machine {
        let s = group_states(self.k);
        let quads = self.keys.iter().zip(&self.choices).map(|(&key, &choice)| quadruple(key, choice, s)).collect();
        Machine::new(quads).expect("distinct keys are deterministic")
    }

    fn advance(&mut self) {
        let s = group_states(self.k);
        let n_keys = 2 * s;
        let m = 4 * s;
        for pos in (0..self.k).rev() {
            let after = self.k - 1 - pos;
            if self.choices[pos] + 1 < m {
                self.choices[pos] += 1;
            } else if self.keys[pos] + 1 + after < n_keys {
                self.keys[pos] += 1;
                self.choices[pos] = 0;
            } else {
                continue;
            }
            for j in pos + 1..self.k {
                self.keys[j] = self.keys[j - 1] + 1;
                self.choices[j] = 0;
            }
            return;
        }
        self.k += 1;
        self.keys = (0..self.k).collect();
        self.choices = vec![0; self.k];
    }
}

impl Iterator for Machines {
    type Item = Machine;

    fn next(&mut self) -> Option<Machine> {
        let machine = self.current();
        self.advance();
        Some(machine)
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut c: u128 = 1;
    for i in 0..r {
        c = c * (n - i) as u128 / (i + 1) as u128;
    }
    c
}

fn pow(base: u128, exp: usize) -> u128 {
    base.checked_pow(exp as u32).unwrap_or(u128::MAX)
}
