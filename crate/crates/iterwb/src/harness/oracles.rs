//! Direct scan oracles, independent of the translation builders: ground
//! truth for max/argmax is computed by brute enumeration of initial
//! segments.

use crate::error::RunError;
use crate::iterators::StepFn;
use crate::word::{truncate_len, Word};

/// The shortest initial segment of `c` on which `psi` attains its length
/// maximum (first-attained wins).
pub fn scan_argmax(psi: &dyn StepFn, c: &Word) -> Result<Word, RunError> {
    let mut best = Word::empty();
    let mut best_len = psi.call(&best)?.len();
    for i in 1..=c.len() {
        let seg = truncate_len(c, i);
        let v = psi.call(&seg)?;
        if v.len() > best_len {
            best = seg;
            best_len = v.len();
        }
    }
    Ok(best)
}

/// The longest value of `psi` over initial segments of `c`.
pub fn scan_max(psi: &dyn StepFn, c: &Word) -> Result<Word, RunError> {
    psi.call(&scan_argmax(psi, c)?)
}
