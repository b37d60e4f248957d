use serde::Serialize;

use crate::automata::{determinize, is_reverse_deterministic, minimize, Dfa, Nfa};
use crate::error::Result;
use crate::freeness::FreenessClass;
use crate::witnesses::{reversal_bound, reversal_witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReversalCheck {
    pub class: FreenessClass,
    pub n: usize,
    /// Quotients of the reverse language, counting the empty one.
    pub kappa: usize,
    pub bound: usize,
    pub meets: bool,
    /// The reversed witness, dead states removed, reverses to a deterministic
    /// automaton, so its subset automaton is already minimal.
    pub reverse_deterministic: bool,
    /// Reachable subsets before minimization.
    pub subset_states: usize,
}

/// Quotients of the reverse of `d`'s language, and the number of reachable
/// subsets before minimization.
pub fn reversal_complexity(d: &Dfa) -> Result<(usize, usize)> {
    let trimmed = Nfa::from_dfa_trimmed(d);
    let subsets = determinize(&trimmed.reverse(), true)?;
    let states = subsets.len();
    if trimmed.initials().len() == 1 && is_reverse_deterministic(&trimmed.reverse()) {
        return Ok((states, states));
    }
    Ok((minimize(subsets.dfa()).n(), states))
}

/// Builds the reversal witness for `class` at degree `n` and compares its
/// reversal complexity with the bound.
pub fn verify_reversal_bound(class: FreenessClass, n: usize) -> Result<ReversalCheck> {
    let d = reversal_witness(class, n)?;
    let bound = reversal_bound(class, n)?;
    let (kappa, subset_states) = reversal_complexity(&d)?;
    Ok(ReversalCheck {
        class,
        n,
        kappa,
        bound,
        meets: kappa == bound,
        reverse_deterministic: is_reverse_deterministic(&Nfa::from_dfa_trimmed(&d).reverse()),
        subset_states,
    })
}
