//! Quadruple Turing machines over the binary alphabet `{0, 1}`.
//!
//! A machine is a finite, deterministic set of instructions
//! `(state_in, symbol_in, action, state_out)`. One step looks up the
//! instruction for the current state and the symbol under the head,
//! performs exactly one action (print a 1, erase, move left, move right)
//! and switches state. When no instruction applies the machine halts and
//! its output is the number of 1s left anywhere on the tape.
//!
//! Every run is fuel bounded, so partiality shows up as
//! [`RunOutcome::Exhausted`] instead of a hung process.

mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use parse::{parse_machine, ParseError};

/// Upper bound on the fuel accepted by [`trace`] unless the caller picks another cap.
pub const DEFAULT_TRACE_CAP: u64 = 100_000;

/// Internal state `q<n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct State(pub u32);

impl State {
    pub const START: State = State(0);
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}", self.0)
    }
}

/// Tape symbol. `Zero` is the blank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
}

impl Symbol {
    pub const ALL: [Symbol; 2] = [Symbol::Zero, Symbol::One];

    fn index(self) -> usize {
        match self {
            Symbol::Zero => 0,
            Symbol::One => 1,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
        })
    }
}

/// The four operations a quadruple can perform. The declaration order
/// (`P < E < L < R`) is the order used by the machine enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    /// Write a 1 on the scanned cell (a no-op if it already holds one).
    Print,
    /// Write a 0 on the scanned cell.
    Erase,
    MoveLeft,
    MoveRight,
}

impl Action {
    pub const ALL: [Action; 4] = [Action::Print, Action::Erase, Action::MoveLeft, Action::MoveRight];

    pub fn letter(self) -> char {
        match self {
            Action::Print => 'P',
            Action::Erase => 'E',
            Action::MoveLeft => 'L',
            Action::MoveRight => 'R',
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One instruction. Field order matters: the derived `Ord` is the
/// lexicographic order on `(state_in, symbol_in, action, state_out)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadruple {
    pub state_in: State,
    pub symbol_in: Symbol,
    pub action: Action,
    pub state_out: State,
}

impl Quadruple {
    pub fn new(state_in: State, symbol_in: Symbol, action: Action, state_out: State) -> Self {
        Quadruple { state_in, symbol_in, action, state_out }
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.state_in, self.symbol_in, self.action, self.state_out)
    }
}

/// Two quadruples share the same `(state, symbol)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("nondeterministic machine: more than one quadruple for ({state}, {symbol})")]
pub struct DeterminismError {
    pub state: State,
    pub symbol: Symbol,
}

/// A deterministic quadruple machine.
///
/// Equality and hashing only look at the quadruple list; the name is a label.
#[derive(Debug, Clone)]
pub struct Machine {
    quadruples: Vec<Quadruple>,
    name: Option<String>,
    // (state, symbol) -> (action, state_out), indexed by 2 * state + symbol.
    table: Vec<Option<(Action, State)>>,
}

impl Machine {
    /// Builds a machine, keeping the quadruples in the given order.
    pub fn new(quadruples: Vec<Quadruple>) -> Result<Self, DeterminismError> {
        let slots = quadruples.iter().map(|q| q.state_in.0 as usize + 1).max().unwrap_or(0) * 2;
        let mut table = vec![None; slots];
        for q in &quadruples {
            let slot = &mut table[q.state_in.0 as usize * 2 + q.symbol_in.index()];
            if slot.is_some() {
                return Err(DeterminismError { state: q.state_in, symbol: q.symbol_in });
            }
            *slot = Some((q.action, q.state_out));
        }
        Ok(Machine { quadruples, name: None, table })
    }

    /// The machine with no instructions; it halts at once on every input.
    pub fn empty() -> Self {
        Machine { quadruples: Vec::new(), name: None, table: Vec::new() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn quadruples(&self) -> &[Quadruple] {
        &self.quadruples
    }

    pub fn len(&self) -> usize {
        self.quadruples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadruples.is_empty()
    }

    /// The instruction that fires in `state` when `symbol` is scanned.
    pub fn lookup(&self, state: State, symbol: Symbol) -> Option<(Action, State)> {
        self.table.get(state.0 as usize * 2 + symbol.index()).copied().flatten()
    }

    /// Applies one step in place. Returns `false` (leaving `config`
    /// untouched) when no quadruple matches, i.e. the machine halts.
    pub fn apply(&self, config: &mut Configuration) -> bool {
        let Some((action, next)) = self.lookup(config.state, config.read()) else {
            return false;
        };
        match action {
            Action::Print => config.tape.write(config.head, Symbol::One),
            Action::Erase => config.tape.write(config.head, Symbol::Zero),
            Action::MoveLeft => config.head -= 1,
            Action::MoveRight => config.head += 1,
        }
        config.state = next;
        true
    }
}

impl PartialEq for Machine {
    fn eq(&self, other: &Self) -> bool {
        self.quadruples == other.quadruples
    }
}

impl Eq for Machine {}

impl std::hash::Hash for Machine {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.quadruples.hash(state);
    }
}

/// Machine file format: one quadruple per line, an optional `# name` header.
impl fmt::Display for Machine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "# {name}")?;
        }
        for q in &self.quadruples {
            writeln!(f, "{q}")?;
        }
        Ok(())
    }
}

/// Two-way infinite binary tape holding finitely many 1s.
///
/// Cell indices are `i128`: the head moves at most one cell per step and
/// fuel is a `u64`, so no reachable index can overflow.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tape {
    ones: BTreeSet<i128>,
}

impl Tape {
    pub fn blank() -> Self {
        Tape::default()
    }

    pub fn from_ones(cells: impl IntoIterator<Item = i128>) -> Self {
        Tape { ones: cells.into_iter().collect() }
    }

    pub fn read(&self, cell: i128) -> Symbol {
        if self.ones.contains(&cell) {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn write(&mut self, cell: i128, symbol: Symbol) {
        match symbol {
            Symbol::One => self.ones.insert(cell),
            Symbol::Zero => self.ones.remove(&cell),
        };
    }

    /// Cells holding a 1, ascending.
    pub fn ones(&self) -> impl Iterator<Item = i128> + '_ {
        self.ones.iter().copied()
    }

    pub fn count_ones(&self) -> u64 {
        self.ones.len() as u64
    }
}

/// Snapshot of a running machine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: State,
    pub tape: Tape,
    pub head: i128,
}

impl Configuration {
    pub fn read(&self) -> Symbol {
        self.tape.read(self.head)
    }
}

/// Initial configuration for the given arguments.
///
/// Each argument `x` becomes a block of `x` consecutive 1s; blocks are
/// separated by a single 0. The first block starts at cell 0, where the
/// head rests in state `q0`. An argument of 0 contributes an empty block,
/// so `[0]` is the blank tape.
pub fn encode_input(args: &[u64]) -> Configuration {
    let mut ones = BTreeSet::new();
    let mut cell: i128 = 0;
    for (i, &x) in args.iter().enumerate() {
        if i > 0 {
            cell += 1;
        }
        for _ in 0..x {
            ones.insert(cell);
            cell += 1;
        }
    }
    Configuration { state: State::START, tape: Tape { ones }, head: 0 }
}

/// Result of a single [`step`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Next(Configuration),
    Halt,
}

pub fn step(machine: &Machine, config: &Configuration) -> Step {
    let mut next = config.clone();
    if machine.apply(&mut next) {
        Step::Next(next)
    } else {
        Step::Halt
    }
}

/// Outcome of a fuel-bounded run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunOutcome {
    /// No instruction applied after `steps` steps; `output` counts the 1s on the tape.
    Halted { output: u64, steps: u64 },
    /// Every unit of fuel was spent without halting.
    Exhausted { fuel: u64 },
}

impl RunOutcome {
    pub fn is_halted(&self) -> bool {
        matches!(self, RunOutcome::Halted { .. })
    }
}

impl fmt::Display for RunOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunOutcome::Halted { output, steps } => write!(f, "halted output={output} steps={steps}"),
            RunOutcome::Exhausted { fuel } => write!(f, "exhausted fuel={fuel}"),
        }
    }
}

/// A run that can be resumed with more fuel. Resuming is equivalent to
/// starting over with the larger budget.
#[derive(Debug, Clone)]
pub struct Execution {
    config: Configuration,
    steps: u64,
    halted: bool,
}

impl Execution {
    pub fn new(input: &[u64]) -> Self {
        Execution::from_config(encode_input(input))
    }

    pub fn from_config(config: Configuration) -> Self {
        Execution { config, steps: 0, halted: false }
    }

    /// Steps until halted or until `total_fuel` steps have been applied in total.
    pub fn advance(&mut self, machine: &Machine, total_fuel: u64) -> RunOutcome {
        while !self.halted && self.steps < total_fuel {
            if machine.apply(&mut self.config) {
                self.steps += 1;
            } else {
                self.halted = true;
            }
        }
        // Halting is detected without spending fuel.
        if !self.halted && machine.lookup(self.config.state, self.config.read()).is_none() {
            self.halted = true;
        }
        self.outcome(total_fuel)
    }

    fn outcome(&self, fuel: u64) -> RunOutcome {
        if self.halted {
            RunOutcome::Halted { output: self.config.tape.count_ones(), steps: self.steps }
        } else {
            RunOutcome::Exhausted { fuel }
        }
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }
}

/// Runs `machine` on `input` for at most `fuel` steps.
pub fn run(machine: &Machine, input: &[u64], fuel: u64) -> RunOutcome {
    Execution::new(input).advance(machine, fuel)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("trace of {fuel} steps exceeds the trace cap of {cap}")]
pub struct TraceCapExceeded {
    pub fuel: u64,
    pub cap: u64,
}

/// Every configuration visited, starting with the initial one. The last
/// element is either the halting configuration or the one reached when
/// fuel ran out.
pub fn trace(machine: &Machine, input: &[u64], fuel: u64, cap: u64) -> Result<Vec<Configuration>, TraceCapExceeded> {
    if fuel > cap {
        return Err(TraceCapExceeded { fuel, cap });
    }
    let mut config = encode_input(input);
    let mut visited = vec![config.clone()];
    for _ in 0..fuel {
        if !machine.apply(&mut config) {
            break;
        }
        visited.push(config.clone());
    }
    Ok(visited)
}

/// `step=<n> state=<q> head=<i> ones=<cells>`
pub fn trace_line(step: usize, config: &Configuration) -> String {
    let ones: Vec<String> = config.tape.ones().map(|c| c.to_string()).collect();
    format!("step={} state={} head={} ones={}", step, config.state, config.head, ones.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(text: &str) -> Machine {
        parse_machine(text).unwrap()
    }

    #[test]
    fn encodes_single_and_multiple_arguments() {
        let c = encode_input(&[3]);
        assert_eq!(c.tape.ones().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!((c.head, c.state), (0, State(0)));

        let c = encode_input(&[0]);
        assert_eq!(c.tape.count_ones(), 0);
        assert_eq!(c.head, 0);

        let c = encode_input(&[2, 1]);
        assert_eq!(c.tape.ones().collect::<Vec<_>>(), vec![0, 1, 3]);
    }

    #[test]
    fn loop_machine_step_is_a_fixed_point() {
        let machine = m("q0 1 P q0");
        let config = encode_input(&[1]);
        assert_eq!(step(&machine, &config), Step::Next(config.clone()));
    }

    #[test]
    fn no_matching_quadruple_halts() {
        let machine = m("q0 1 P q0");
        assert_eq!(step(&machine, &encode_input(&[0])), Step::Halt);
    }

    #[test]
    fn erase_step() {
        let machine = m("q0 1 E q1");
        let Step::Next(c) = step(&machine, &encode_input(&[1])) else { panic!("halted") };
        assert_eq!(c.state, State(1));
        assert_eq!(c.tape.count_ones(), 0);
        assert_eq!(c.head, 0);
    }

    #[test]
    fn run_examples() {
        assert_eq!(run(&m("q0 1 P q0"), &[1], 1000), RunOutcome::Exhausted { fuel: 1000 });
        assert_eq!(run(&Machine::empty(), &[5], 10), RunOutcome::Halted { output: 5, steps: 0 });
        // Zero fuel still notices an immediate halt.
        assert_eq!(run(&Machine::empty(), &[2], 0), RunOutcome::Halted { output: 2, steps: 0 });
        assert_eq!(run(&m("q0 1 R q0"), &[3], 2), RunOutcome::Exhausted { fuel: 2 });
        assert_eq!(run(&m("q0 1 R q0"), &[3], 3), RunOutcome::Halted { output: 3, steps: 3 });
    }

    #[test]
    fn head_may_walk_left_of_the_input() {
        let machine = m("q0 1 L q1\nq1 0 P q2");
        let out = run(&machine, &[2], 10);
        assert_eq!(out, RunOutcome::Halted { output: 3, steps: 2 });
    }

    #[test]
    fn trace_examples() {
        let t = trace(&m("q0 1 P q0"), &[1], 3, DEFAULT_TRACE_CAP).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|c| *c == t[0]));

        let t = trace(&Machine::empty(), &[0], 5, DEFAULT_TRACE_CAP).unwrap();
        assert_eq!(t, vec![encode_input(&[0])]);

        let t = trace(&m("q0 1 E q1"), &[1], 5, DEFAULT_TRACE_CAP).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[1].state, State(1));
        assert_eq!(t[1].tape.count_ones(), 0);

        assert_eq!(trace(&Machine::empty(), &[0], 11, 10), Err(TraceCapExceeded { fuel: 11, cap: 10 }));
    }

    #[test]
    fn trace_line_format() {
        let c = encode_input(&[2, 1]);
        assert_eq!(trace_line(0, &c), "step=0 state=q0 head=0 ones=0,1,3");
        assert_eq!(trace_line(7, &encode_input(&[0])), "step=7 state=q0 head=0 ones=");
    }

    #[test]
    fn resumed_execution_matches_fresh_run() {
        let machine = m("q0 1 R q0\nq0 0 P q1\nq1 1 R q0");
        let mut exec = Execution::new(&[2]);
        for fuel in 0..12 {
            assert_eq!(exec.advance(&machine, fuel), run(&machine, &[2], fuel));
        }
    }

    #[test]
    fn rejects_nondeterminism_at_construction() {
        let q = |a| Quadruple::new(State(0), Symbol::One, a, State(0));
        let err = Machine::new(vec![q(Action::Print), q(Action::Erase)]).unwrap_err();
        assert_eq!(err, DeterminismError { state: State(0), symbol: Symbol::One });
    }
}
