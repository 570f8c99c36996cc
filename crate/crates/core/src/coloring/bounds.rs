//! Closed-form lower and upper bounds on `χ(Q_n^[♮p])`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::families::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sourced {
    pub value: usize,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub n: usize,
    pub p: usize,
    pub lower: Sourced,
    pub upper: Sourced,
    pub exact: Option<usize>,
    /// Every formula that applied, best first within each side.
    pub lower_candidates: Vec<Sourced>,
    pub upper_candidates: Vec<Sourced>,
}

fn sourced(value: usize, source: impl Into<String>) -> Sourced {
    Sourced {
        value,
        source: source.into(),
    }
}

/// Known chromatic numbers of `J(n, n/2, 1)` used by the `p = n - 2` construction.
fn johnson_half_one(n: usize) -> Option<usize> {
    match n {
        6 => Some(6),
        8 => Some(5),
        _ => None,
    }
}

fn ceil_log2(x: u64) -> u32 {
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

pub fn chi_bound_formulas(n: usize, p: usize) -> Result<BoundRecord> {
    if p == 0 || p > n || n > 40 {
        return Err(invalid(format!("need 1 <= p <= n <= 40, got n={n} p={p}")));
    }
    let mut lows = vec![sourced(2, "edges exist, so at least two colors")];
    let mut ups = Vec::new();

    if p % 2 == 1 {
        ups.push(sourced(2, "odd p: bipartite, same parts as Q_n"));
    }
    if p == n {
        ups.push(sourced(2, "p = n: antipodal perfect matching"));
    }
    if p % 2 == 0 && p < n {
        lows.push(sourced(n - p + 2, format!("induced Kneser J({n},{},0), chromatic number n-p+2", p / 2)));
        if n % 2 == 0 {
            let i = (n - p) / 2;
            lows.push(sourced(i + 2, format!("middle level J({n},{},{i}) needs at least i+2 colors", n / 2)));
        }
    }
    if n % 2 == 1 && n >= 3 && p == n - 1 {
        lows.push(sourced(4, "odd n, p = n-1: chromatic number is 4"));
        ups.push(sourced(4, "odd n, p = n-1: chromatic number is 4"));
    }
    let fu = 1u64 << ceil_log2(1 + binomial((n - 1) as u64, (p - 1) as u64));
    ups.push(sourced(fu as usize, format!("2^ceil(log2(1 + C({},{})))", n - 1, p - 1)));

    if n % 2 == 0 && n >= 4 && p + 2 == n {
        ups.push(sourced(8, "p = n-2: chi(J(n,n/2,1)) + 2 <= 8"));
        if let Some(j) = johnson_half_one(n) {
            ups.push(sourced(j + 2, format!("p = n-2: chi(J({n},{},1)) + 2 with chi(J) = {j}", n / 2)));
        }
    }
    if n % 2 == 1 && n >= 5 && p + 3 == n {
        ups.push(sourced(15, "p = n-3: chi(K(7,3,1)) + 6 <= 15"));
    }
    if n % 2 == 0 && n >= 6 && p + 4 == n {
        ups.push(sourced(26, "p = n-4: 2 chi(K(8,3,1)) + 2 <= 26"));
    }
    match (n, p) {
        (6, 4) => {
            lows.push(sourced(7, "known value chi(Q_6^[4]) = 7"));
            ups.push(sourced(7, "known value chi(Q_6^[4]) = 7"));
        }
        (7, 4) | (8, 4) | (9, 4) => {
            lows.push(sourced(8, format!("known value chi(Q_{n}^[4]) = 8")));
            ups.push(sourced(8, format!("known value chi(Q_{n}^[4]) = 8")));
        }
        (8, 6) => ups.push(sourced(8, "known bound chi(Q_8^[6]) <= 8")),
        (9, 6) => ups.push(sourced(16, "known bound chi(Q_9^[6]) <= 16")),
        _ => {}
    }

    lows.sort_by_key(|s| std::cmp::Reverse(s.value));
    ups.sort_by_key(|s| s.value);
    let lower = lows[0].clone();
    let upper = ups[0].clone();
    debug_assert!(lower.value <= upper.value, "({n},{p}): {lower:?} > {upper:?}");
    Ok(BoundRecord {
        n,
        p,
        exact: (lower.value == upper.value).then_some(lower.value),
        lower,
        upper,
        lower_candidates: lows,
        upper_candidates: ups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(n: usize, p: usize) -> (usize, usize) {
        let r = chi_bound_formulas(n, p).unwrap();
        (r.lower.value, r.upper.value)
    }

    #[test]
    fn bracket_cells() {
        assert_eq!(pair(9, 6), (5, 15));
        assert_eq!(pair(10, 6), (6, 26));
        assert_eq!(pair(8, 6), (4, 7));
    }

    #[test]
    fn exact_cells() {
        assert_eq!(chi_bound_formulas(8, 8).unwrap().exact, Some(2));
        assert_eq!(chi_bound_formulas(7, 6).unwrap().exact, Some(4));
        assert_eq!(chi_bound_formulas(6, 4).unwrap().exact, Some(7));
        assert_eq!(chi_bound_formulas(5, 3).unwrap().exact, Some(2));
    }

    #[test]
    fn log_bound_arithmetic() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(9), 4);
        assert_eq!(ceil_log2(16), 4);
        // (4,2): 1 + C(3,1) = 4
        assert_eq!(pair(4, 2), (4, 4));
    }

    #[test]
    fn never_inverted() {
        for n in 1..=12 {
            for p in 1..=n {
                let r = chi_bound_formulas(n, p).unwrap();
                assert!(r.lower.value <= r.upper.value, "({n},{p})");
                if let Some(x) = r.exact {
                    assert!(r.lower.value <= x && x <= r.upper.value);
                }
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(chi_bound_formulas(4, 0).is_err());
        assert!(chi_bound_formulas(4, 5).is_err());
    }
}
