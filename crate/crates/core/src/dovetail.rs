//! The halting set, approached from the only side that is reachable.
//!
//! Pairs `(n, x)` such that machine `n` halts on input `x` can be listed by
//! dovetailing: every pair gets ever more fuel, so every halting pair is
//! eventually witnessed. The complement cannot be listed, and nothing in
//! this module ever claims divergence: a [`Verdict`] is either a replayable
//! [`HaltCertificate`] or `Unknown`.

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::{EnumerationError, MachineIndex};
use crate::pairing::PairCode;
use crate::tm::{run, Execution, Machine, RunOutcome};
use crate::Enumeration;

pub const DEFAULT_ROUND_CAP: u64 = 200;
pub const DEFAULT_AUDIT_STEP_CAP: u64 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DovetailError {
    #[error("rounds must be at least 1")]
    NoRounds,
    #[error("{requested} rounds exceed the configured cap of {cap}")]
    RoundLimit { requested: u64, cap: u64 },
    #[error("audit would simulate up to {requested} steps, above the cap of {cap}")]
    StepLimit { requested: u128, cap: u64 },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
}

/// Machine `machine_index` halts on `input` after exactly `steps` steps,
/// leaving `output` ones on the tape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HaltCertificate {
    pub machine_index: MachineIndex,
    pub input: u64,
    pub steps: u64,
    pub output: u64,
}

impl HaltCertificate {
    /// Cantor code of `(machine_index, input)`: the element of the halting set as a natural number.
    pub fn code(&self) -> PairCode {
        PairCode::of(self.machine_index, self.input)
    }

    /// Re-runs the machine with exactly `steps` fuel.
    pub fn replay(&self, enumeration: &Enumeration) -> Result<bool, EnumerationError> {
        let machine = enumeration.machine_at(self.machine_index)?;
        Ok(run(&machine, &[self.input], self.steps) == RunOutcome::Halted { output: self.output, steps: self.steps })
    }
}

/// A certificate together with the dovetailing round that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Emission {
    pub round: u64,
    pub certificate: HaltCertificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Halts {
        certificate: HaltCertificate,
    },
    /// No halt within `fuel_spent` steps. Says nothing about divergence.
    Unknown {
        fuel_spent: u64,
    },
}

/// A halting decider's answer for one `(n, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    Converges,
    Diverges,
}

/// A total procedure that claims to decide halting.
pub trait HaltingDecider {
    fn decide(&self, n: MachineIndex, x: u64) -> Claim;
}

impl<F: Fn(MachineIndex, u64) -> Claim> HaltingDecider for F {
    fn decide(&self, n: MachineIndex, x: u64) -> Claim {
        self(n, x)
    }
}

/// Says `Converges` iff the machine halts within a fixed fuel budget.
#[derive(Debug, Clone)]
pub struct BudgetDecider {
    pub enumeration: Enumeration,
    pub fuel: u64,
}

impl HaltingDecider for BudgetDecider {
    fn decide(&self, n: MachineIndex, x: u64) -> Claim {
        match self.enumeration.machine_at(n) {
            Ok(machine) if run(&machine, &[x], self.fuel).is_halted() => Claim::Converges,
            _ => Claim::Diverges,
        }
    }
}

/// Evidence that a decider answered `Diverges` for a halting pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub n: MachineIndex,
    pub x: u64,
    pub claim: Claim,
    pub certificate: HaltCertificate,
}

/// Value of the diagonal function `g(n) = f_n(n) + 1`, when it has one within the fuel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalValue {
    Defined { value: u64, certificate: HaltCertificate },
    Unknown { fuel_spent: u64 },
}

#[derive(Debug, Clone)]
pub struct Dovetailer {
    pub enumeration: Enumeration,
    pub round_cap: u64,
    pub audit_step_cap: u64,
}

impl Default for Dovetailer {
    fn default() -> Self {
        Dovetailer {
            enumeration: Enumeration::default(),
            round_cap: DEFAULT_ROUND_CAP,
            audit_step_cap: DEFAULT_AUDIT_STEP_CAP,
        }
    }
}

impl Dovetailer {
    /// Certificates for every pair witnessed in rounds `1..=rounds`.
    ///
    /// Round `r` gives each pair `(n, x)` with `n, x <= r` a total of `r`
    /// steps. A pair is emitted in the first round where it halts; within a
    /// round, emissions are ordered by `n` then `x`. A pair that halts after
    /// `s` steps is emitted by round `max(1, n, x, s)`.
    pub fn dovetail(&self, rounds: u64) -> Result<Vec<Emission>, DovetailError> {
        if rounds == 0 {
            return Err(DovetailError::NoRounds);
        }
        if rounds > self.round_cap {
            return Err(DovetailError::RoundLimit { requested: rounds, cap: self.round_cap });
        }
        let mut schedule = Schedule::new(self.enumeration);
        let mut out = Vec::new();
        for _ in 0..rounds {
            out.extend(schedule.next_round()?);
        }
        Ok(out)
    }

    /// Answers `Halts` with a certificate, or `Unknown`; never "does not halt".
    pub fn membership_in_k(&self, n: MachineIndex, x: u64, fuel: u64) -> Result<Verdict, DovetailError> {
        let machine = self.enumeration.machine_at(n)?;
        Ok(verdict(&machine, n, x, fuel))
    }

    /// Searches `n = 0..=search_limit` for a diagonal pair `(n, n)` on which
    /// `decider` claims divergence although the machine halts within
    /// `refutation_fuel` steps.
    ///
    /// `Ok(None)` does not mean the decider is right. `Converges` claims are
    /// never checked: finite fuel cannot refute them.
    pub fn audit<D: HaltingDecider + Sync>(
        &self,
        decider: &D,
        search_limit: MachineIndex,
        refutation_fuel: u64,
    ) -> Result<Option<Counterexample>, DovetailError> {
        let worst = (search_limit as u128 + 1) * refutation_fuel as u128;
        if worst > self.audit_step_cap as u128 {
            return Err(DovetailError::StepLimit { requested: worst, cap: self.audit_step_cap });
        }
        for n in 0..=search_limit {
            if decider.decide(n, n) != Claim::Diverges {
                continue;
            }
            let machine = self.enumeration.machine_at(n)?;
            if let Verdict::Halts { certificate } = verdict(&machine, n, n, refutation_fuel) {
                return Ok(Some(Counterexample { n, x: n, claim: Claim::Diverges, certificate }));
            }
        }
        Ok(None)
    }

    pub fn diagonal_value(&self, n: MachineIndex, fuel: u64) -> Result<DiagonalValue, DovetailError> {
        Ok(match self.membership_in_k(n, n, fuel)? {
            Verdict::Halts { certificate } => DiagonalValue::Defined { value: certificate.output + 1, certificate },
            Verdict::Unknown { fuel_spent } => DiagonalValue::Unknown { fuel_spent },
        })
    }
}

fn verdict(machine: &Machine, n: MachineIndex, x: u64, fuel: u64) -> Verdict {
    match run(machine, &[x], fuel) {
        RunOutcome::Halted { output, steps } => {
            Verdict::Halts { certificate: HaltCertificate { machine_index: n, input: x, steps, output } }
        }
        RunOutcome::Exhausted { fuel } => Verdict::Unknown { fuel_spent: fuel },
    }
}

/// Incremental dovetailing state: each live pair keeps its configuration
/// between rounds, so round `r` only pays for one more step per pair.
#[derive(Debug)]
pub struct Schedule {
    enumeration: Enumeration,
    round: u64,
    rows: Vec<Row>,
}

#[derive(Debug)]
struct Row {
    machine: Machine,
    // Indexed by input; `None` once the pair has been emitted.
    cells: Vec<Option<Execution>>,
}

impl Schedule {
    pub fn new(enumeration: Enumeration) -> Self {
        Schedule { enumeration, round: 0, rows: Vec::new() }
    }

    pub fn round(&self) -> u64 {
        self.round
    }

    pub fn next_round(&mut self) -> Result<Vec<Emission>, EnumerationError> {
        self.round += 1;
        let r = self.round;
        while (self.rows.len() as u64) <= r {
            let n = self.rows.len() as u64;
            self.rows.push(Row { machine: self.enumeration.machine_at(n)?, cells: Vec::new() });
        }
        for row in &mut self.rows {
            while (row.cells.len() as u64) <= r {
                let x = row.cells.len() as u64;
                row.cells.push(Some(Execution::new(&[x])));
            }
        }
        let emitted: Vec<Vec<Emission>> = self
            .rows
            .par_iter_mut()
            .enumerate()
            .map(|(n, row)| {
                let machine = &row.machine;
                row.cells
                    .iter_mut()
                    .enumerate()
                    .filter_map(|(x, cell)| {
                        let exec = cell.as_mut()?;
                        let RunOutcome::Halted { output, steps } = exec.advance(machine, r) else {
                            return None;
                        };
                        *cell = None;
                        Some(Emission {
                            round: r,
                            certificate: HaltCertificate { machine_index: n as u64, input: x as u64, steps, output },
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(emitted.into_iter().flatten().collect())
    }
}
