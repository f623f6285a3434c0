//! 3-literal CNF formulas: the source problem for the tree gadgets.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest variable count [`sat_bruteforce`] accepts.
pub const SAT_BRUTEFORCE_VARIABLE_LIMIT: usize = 24;

/// A CNF formula in which every clause has exactly three literals.
///
/// Literals use the DIMACS convention: `3` means variable 3 positive,
/// `-3` means variable 3 negated, and variables are numbered `1..=variables`.
/// A clause may repeat a variable, so `(x1 | x1 | x2)` is well formed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CnfFormula {
    /// Number of distinct variables.
    pub variables: usize,
    /// Clauses as literal triples.
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Number of clauses.
    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Checks that every literal names a declared variable.
    pub fn ensure_valid(&self) -> Result<()> {
        for (j, clause) in self.clauses.iter().enumerate() {
            for &lit in clause {
                if lit == 0 {
                    return Err(Error::Usage(format!("clause {j}: literal 0 is reserved")));
                }
                let var = lit.unsigned_abs() as usize;
                if var > self.variables {
                    return Err(Error::Usage(format!(
                        "clause {j}: literal {lit} exceeds the {} declared variables",
                        self.variables
                    )));
                }
            }
        }
        Ok(())
    }

    /// Evaluates the formula under an assignment (`assignment[i]` is the
    /// value of variable `i + 1`).
    pub fn eval(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.variables, "assignment length");
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let value = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    value
                } else {
                    !value
                }
            })
        })
    }

    /// Renders the formula in DIMACS CNF format.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variables, self.clauses.len());
        for clause in &self.clauses {
            out.push_str(&format!(
                "{} {} {} 0\n",
                clause[0], clause[1], clause[2]
            ));
        }
        out
    }

    /// Parses DIMACS CNF text.
    ///
    /// Comment lines start with `c`. The `p cnf <variables> <clauses>`
    /// header must come before the clauses, every clause must hold exactly
    /// three literals before its terminating `0`, and the clause count must
    /// match the header. Clauses may span lines.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut tokens: Vec<i64> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                if header.is_some() {
                    return Err(Error::Parse("duplicate DIMACS header".into()));
                }
                let fields: Vec<&str> = rest.split_whitespace().collect();
                if fields.len() != 3 || fields[0] != "cnf" {
                    return Err(Error::Parse(format!("malformed DIMACS header: {line:?}")));
                }
                let variables = fields[1]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad variable count {:?}", fields[1])))?;
                let clauses = fields[2]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad clause count {:?}", fields[2])))?;
                header = Some((variables, clauses));
                continue;
            }
            if header.is_none() {
                return Err(Error::Parse(format!(
                    "clause data before the DIMACS header: {line:?}"
                )));
            }
            for word in line.split_whitespace() {
                let value = word
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad DIMACS token {word:?}")))?;
                tokens.push(value);
            }
        }
        let Some((variables, clause_count)) = header else {
            return Err(Error::Parse("missing DIMACS header".into()));
        };

        let mut clauses = Vec::with_capacity(clause_count);
        let mut current: Vec<i32> = Vec::new();
        for value in tokens {
            if value == 0 {
                let lits: [i32; 3] = current.as_slice().try_into().map_err(|_| {
                    Error::Parse(format!(
                        "clause {} has {} literals; exactly 3 required",
                        clauses.len(),
                        current.len()
                    ))
                })?;
                clauses.push(lits);
                current.clear();
            } else {
                let lit = i32::try_from(value)
                    .map_err(|_| Error::Parse(format!("literal {value} out of range")))?;
                current.push(lit);
            }
        }
        if !current.is_empty() {
            return Err(Error::Parse("unterminated final clause".into()));
        }
        if clauses.len() != clause_count {
            return Err(Error::Parse(format!(
                "header promises {clause_count} clauses, found {}",
                clauses.len()
            )));
        }
        let formula = CnfFormula { variables, clauses };
        formula.ensure_valid()?;
        Ok(formula)
    }
}

/// Exhaustively decides satisfiability.
///
/// Returns the first satisfying assignment in ascending binary order
/// (variable 1 is the lowest bit), or `None` when every assignment fails.
/// Refuses formulas with more than [`SAT_BRUTEFORCE_VARIABLE_LIMIT`]
/// variables.
pub fn sat_bruteforce(formula: &CnfFormula) -> Result<Option<Vec<bool>>> {
    formula.ensure_valid()?;
    if formula.variables > SAT_BRUTEFORCE_VARIABLE_LIMIT {
        return Err(Error::Budget(format!(
            "brute-force satisfiability handles at most {SAT_BRUTEFORCE_VARIABLE_LIMIT} \
             variables, got {}",
            formula.variables
        )));
    }
    let mut assignment = vec![false; formula.variables];
    for mask in 0u64..(1u64 << formula.variables) {
        for (i, slot) in assignment.iter_mut().enumerate() {
            *slot = (mask >> i) & 1 == 1;
        }
        if formula.eval(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Samples a random 3-literal formula.
///
/// Each literal slot independently draws a uniform variable and sign, so
/// clauses may repeat variables.
pub fn random_formula(variables: usize, clauses: usize, rng: &mut impl Rng) -> CnfFormula {
    assert!(variables >= 1, "need at least one variable");
    let clauses = (0..clauses)
        .map(|_| {
            let mut clause = [0i32; 3];
            for slot in &mut clause {
                let var = rng.random_range(1..=variables as i32);
                *slot = if rng.random_bool(0.5) { var } else { -var };
            }
            clause
        })
        .collect();
    CnfFormula { variables, clauses }
}

/// The eight-clause formula over three variables that lists every sign
/// pattern once.
///
/// Each assignment falsifies exactly the clause matching its complement
/// pattern, so the formula is unsatisfiable, and it is a smallest standard
/// example of an unsatisfiable 3-literal CNF.
pub fn forced_unsat_formula() -> CnfFormula {
    let mut clauses = Vec::with_capacity(8);
    for pattern in 0u8..8 {
        let mut clause = [0i32; 3];
        for (i, slot) in clause.iter_mut().enumerate() {
            let var = i as i32 + 1;
            *slot = if (pattern >> i) & 1 == 1 { -var } else { var };
        }
        clauses.push(clause);
    }
    CnfFormula {
        variables: 3,
        clauses,
    }
}
