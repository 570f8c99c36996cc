//! Stored colorings produced by the exact solver.

use super::{validate_coloring, Coloring};
use crate::error::{Error, Result};
use crate::families::johnson;

/// Five-coloring of `J(8,4,1)`, vertices in colex order.
const J841: [u32; 70] = [
    1, 1, 2, 3, 4, 1, 1, 1, 1, 1, 1, 1, 4, 3, 2, 1, 3, 4, 2, 4, 2, 3, 5, 5, 5, 1, 1, 1, 2, 4, 3, 3, 2, 4, 5, 1, 4, 2, 3, 3,
    4, 2, 5, 5, 5, 1, 1, 1, 3, 2, 4, 2, 4, 3, 5, 2, 3, 4, 5, 5, 5, 5, 5, 5, 2, 4, 3, 2, 5, 5,
];

/// The stored five-coloring of `J(8,4,1)`, checked before it is returned.
pub fn j841_five_coloring() -> Result<Coloring> {
    let c = Coloring::new(J841.to_vec())?;
    let verdict = validate_coloring(&johnson(8, 4, 1)?, &c)?;
    match verdict.violations.first() {
        Some(&(u, v)) => Err(Error::ImproperAssembly(u, v)),
        None => Ok(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::exact_chromatic;

    #[test]
    fn certificate_is_proper_with_five_colors() {
        assert_eq!(j841_five_coloring().unwrap().count(), 5);
    }

    #[test]
    fn solver_agrees_on_five() {
        let out = exact_chromatic(&johnson(8, 4, 1).unwrap(), 10_000_000).unwrap();
        assert_eq!(out.exact(), Some(5));
    }
}
