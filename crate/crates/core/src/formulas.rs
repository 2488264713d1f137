//! Closed-form counts and inequalities, evaluated exactly.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of a complement-of-regular-graphs example: `t` components,
/// each `D`-regular of the listed order, on `n = d + D` vertices in total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DevosParams {
    pub d: usize,
    #[serde(rename = "D")]
    pub regularity: usize,
    pub t: usize,
    pub n: usize,
    /// Component orders, non-increasing.
    pub parts: Vec<usize>,
}

/// `2d >= D^3 + 2D^2 + D + 2`, the doubled form of the finiteness bound.
pub fn devos_degree_admissible(d: usize, big_d: usize) -> bool {
    let (d, k) = (d as u128, big_d as u128);
    2 * d >= k * k * k + 2 * k * k + k + 2
}

fn odd_partitions(n: usize, parts: usize, min: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if parts == 0 {
        if n == 0 {
            out.push(acc.clone());
        }
        return;
    }
    if n < parts * min {
        return;
    }
    let mut p = max.min(n - (parts - 1) * min);
    if p.is_multiple_of(2) {
        p -= 1;
    }
    while p >= min {
        acc.push(p);
        odd_partitions(n - p, parts - 1, min, p, acc, out);
        acc.pop();
        if p < 2 {
            break;
        }
        p -= 2;
    }
}

/// Every admissible `(D, t, orders)`. Components are odd cycles for `D = 2`;
/// for larger `D` only odd component orders are listed, where a `D`-regular
/// graph is class 2 by parity, so odd `D` contributes nothing.
pub fn devos_feasible_params(d: usize) -> Vec<DevosParams> {
    let mut out = Vec::new();
    let mut big_d = 2;
    while devos_degree_admissible(d, big_d) {
        if big_d == 2 || big_d % 2 == 0 {
            let n = d + big_d;
            let min_part = (big_d + 1).max(3);
            let t_min = big_d * (big_d + 1) / 2 + 1;
            for t in t_min..=n / min_part {
                let mut found = Vec::new();
                odd_partitions(n, t, min_part, n, &mut Vec::new(), &mut found);
                out.extend(found.into_iter().map(|parts| DevosParams {
                    d,
                    regularity: big_d,
                    t,
                    n,
                    parts,
                }));
            }
        }
        big_d += 1;
    }
    out
}

/// Upper bound `n - tD` on the chromatic number of the complement graph.
pub fn devos_chromatic_bound(p: &DevosParams) -> Result<usize> {
    if p.t <= p.regularity * (p.regularity + 1) / 2 {
        return Err(Error::InfeasibleParams(format!(
            "t = {} must exceed D(D+1)/2 for D = {}",
            p.t, p.regularity
        )));
    }
    Ok(p.n - p.t * p.regularity)
}

/// `(d - 2) b (1 + (d + 1) p)`: vertices of `M^{d-2}_d` with `b` bays and `p`
/// pods on every dock vertex.
pub fn mk_vertex_count(d: usize, b: usize, p: usize) -> Result<usize> {
    if d < 9 || b == 0 || p == 0 {
        return Err(Error::InfeasibleParams(
            "need d >= 9, b >= 1 and p >= 1".into(),
        ));
    }
    Ok((d - 2) * b * (1 + (d + 1) * p))
}

/// `|V| / (1 + m(d + 1))`, exact.
pub fn conjecture_fraction(graph_size: u64, m: u64, d: u64) -> Ratio<u64> {
    Ratio::new(graph_size, 1 + m * (d + 1))
}

/// `x(d - x) - (d - 2)`, positive when `x` corners on one side of a
/// `(d - 2)`-edge cut cannot be routed.
pub fn corner_split_margin(d: i64, x: i64) -> i64 {
    -x * x + d * x + 2 - d
}

/// `k(d - k) - 2(d - 3)`, the bay case of the dock argument.
pub fn bay_case_margin(d: i64, k: i64) -> i64 {
    -k * k + d * k - 2 * d + 6
}

pub fn corner_split_margin_positive(d: usize) -> bool {
    (1..d).all(|x| corner_split_margin(d as i64, x as i64) > 0)
}

pub fn bay_case_margin_positive(d: usize) -> bool {
    (2..=d.saturating_sub(2)).all(|k| bay_case_margin(d as i64, k as i64) > 0)
}

/// `ceil((d - 2) / 2) <= d - 3`.
pub fn wiring_bound_holds(d: usize) -> bool {
    d >= 4 && (d - 2).div_ceil(2) <= d - 3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DevosRow {
    pub params: DevosParams,
    pub chromatic_bound: usize,
}

/// Everything `analyze` prints for one `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub d: usize,
    pub admissible_regularities: Vec<usize>,
    pub devos: Vec<DevosRow>,
    pub corner_split_positive: bool,
    pub bay_case_positive: bool,
    pub wiring_bound: bool,
}

pub fn analyze(d: usize) -> Analysis {
    let devos = devos_feasible_params(d)
        .into_iter()
        .map(|params| DevosRow {
            chromatic_bound: devos_chromatic_bound(&params).expect("enumerated params are valid"),
            params,
        })
        .collect();
    Analysis {
        d,
        admissible_regularities: (2..).take_while(|&k| devos_degree_admissible(d, k)).collect(),
        devos,
        corner_split_positive: corner_split_margin_positive(d),
        bay_case_positive: bay_case_margin_positive(d),
        wiring_bound: wiring_bound_holds(d),
    }
}
