use thiserror::Error;

use super::{Action, DeterminismError, Machine, Quadruple, State, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Determinism {
        line: usize,
        #[source]
        source: DeterminismError,
    },
}

/// Parses the machine file format.
///
/// One quadruple per line, `<state_in> <symbol_in> <action> <state_out>`,
/// separated by single spaces. Lines starting with `#` and blank lines are
/// skipped. A trailing `\r` is tolerated.
pub fn parse_machine(text: &str) -> Result<Machine, ParseError> {
    let mut quadruples = Vec::new();
    let mut lines_of = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        quadruples.push(parse_quadruple(line).map_err(|message| ParseError::Syntax { line: line_no, message })?);
        lines_of.push(line_no);
    }
    Machine::new(quadruples.clone()).map_err(|source| {
        // Report the line of the second quadruple using the pair.
        let line = quadruples
            .iter()
            .zip(&lines_of)
            .filter(|(q, _)| q.state_in == source.state && q.symbol_in == source.symbol)
            .nth(1)
            .map(|(_, &l)| l)
            .unwrap_or(0);
        ParseError::Determinism { line, source }
    })
}

fn parse_quadruple(line: &str) -> Result<Quadruple, String> {
    let tokens: Vec<&str> = line.split(' ').collect();
    if tokens.len() != 4 || tokens.iter().any(|t| t.is_empty()) {
        return Err(format!("expected `<state> <symbol> <action> <state>` separated by single spaces, got {line:?}"));
    }
    Ok(Quadruple {
        state_in: parse_state(tokens[0])?,
        symbol_in: parse_symbol(tokens[1])?,
        action: parse_action(tokens[2])?,
        state_out: parse_state(tokens[3])?,
    })
}

fn parse_state(token: &str) -> Result<State, String> {
    let digits = token
        .strip_prefix('q')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .ok_or_else(|| format!("bad state {token:?}: expected q followed by decimal digits"))?;
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(format!("bad state {token:?}: leading zeros are not allowed"));
    }
    digits.parse().map(State).map_err(|_| format!("state number too large in {token:?}"))
}

fn parse_symbol(token: &str) -> Result<Symbol, String> {
    match token {
        "0" => Ok(Symbol::Zero),
        "1" => Ok(Symbol::One),
        _ => Err(format!("bad symbol {token:?}: expected 0 or 1")),
    }
}

fn parse_action(token: &str) -> Result<Action, String> {
    match token {
        "P" => Ok(Action::Print),
        "E" => Ok(Action::Erase),
        "L" => Ok(Action::MoveLeft),
        "R" => Ok(Action::MoveRight),
        _ => Err(format!("unknown action {token:?}: expected one of P, E, L, R")),
    }
}
