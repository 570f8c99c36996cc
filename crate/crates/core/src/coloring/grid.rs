use super::Coloring;
use crate::error::{invalid, Result};

/// Four-coloring of `(P_m ⊠ P_m)^[♮p]` by `p × p` blocks: vertex `(i, j)` (index `i*m + j`)
/// gets `1 + (i/p mod 2) + 2 (j/p mod 2)`.
pub fn grid_pattern_coloring(m: usize, p: usize) -> Result<Coloring> {
    if p == 0 || m < 2 * p {
        return Err(invalid(format!("need p >= 1 and m >= 2p, got m={m} p={p}")));
    }
    let colors = (0..m * m)
        .map(|v| {
            let (i, j) = (v / m, v % m);
            1 + ((i / p) % 2) as u32 + 2 * ((j / p) % 2) as u32
        })
        .collect();
    Coloring::new(colors)
}
