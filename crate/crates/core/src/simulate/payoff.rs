//! Game payoffs for a strategy profile (`x_i = 1` cooperates).
//!
//! The functions are generic over the scalar so that they can be checked
//! exactly in rational arithmetic; the simulator runs them in `f64`.

use crate::graph::Graph;
use crate::theory::{PayoffScheme, Scalar};

/// Public goods game payoffs. Each node `l` hosts a game among its group
/// `𝒢_l = {l} ∪ N_l` of size `G_l = k_l + 1`; cooperators pay `c` into every
/// game they join and the pot, multiplied by `r`, is shared equally. Node
/// `i` plays the `G_i` games hosted by itself and its neighbours; the
/// averaged scheme divides the total by `G_i`.
pub fn payoff_pgg<T: Scalar>(g: &Graph, x: &[u8], scheme: PayoffScheme, r: T, c: T) -> Vec<T> {
    let coop_in_group: Vec<usize> =
        (0..g.n()).map(|l| x[l] as usize + g.neighbors(l).iter().map(|&m| x[m] as usize).sum::<usize>()).collect();
    (0..g.n()).map(|i| pgg_payoff_at(g, x, &coop_in_group, scheme, &r, &c, i)).collect()
}

/// Payoff of one node given the cooperator count of every group.
pub(crate) fn pgg_payoff_at<T: Scalar>(
    g: &Graph,
    x: &[u8],
    coop_in_group: &[usize],
    scheme: PayoffScheme,
    r: &T,
    c: &T,
    i: usize,
) -> T {
    let share = |l: usize| T::count(coop_in_group[l]) / T::count(g.degree(l) + 1);
    let groups = g.degree(i) + 1;
    let returns = g.neighbors(i).iter().fold(share(i), |acc, &l| acc + share(l));
    let total = r.clone() * c.clone() * returns - T::count(groups * x[i] as usize) * c.clone();
    match scheme {
        PayoffScheme::Averaged => total / T::count(groups),
        PayoffScheme::Accumulated => total,
    }
}

/// Donation game payoffs: every cooperator pays `c` per neighbour and gives
/// each neighbour `b`. The averaged scheme divides by the `k_i` games.
pub fn payoff_dg<T: Scalar>(g: &Graph, x: &[u8], scheme: PayoffScheme, b: T, c: T) -> Vec<T> {
    (0..g.n())
        .map(|i| {
            let received = g.neighbors(i).iter().map(|&l| x[l] as usize).sum::<usize>();
            dg_payoff_at(g.degree(i), x[i], received, scheme, &b, &c)
        })
        .collect()
}

/// Donation game payoff of a node with `degree` neighbours, own strategy
/// `xi` and `cooperating_neighbours` donors.
pub(crate) fn dg_payoff_at<T: Scalar>(
    degree: usize,
    xi: u8,
    cooperating_neighbours: usize,
    scheme: PayoffScheme,
    b: &T,
    c: &T,
) -> T {
    let donors = T::count(cooperating_neighbours);
    match scheme {
        PayoffScheme::Averaged => b.clone() * donors / T::count(degree) - T::count(xi as usize) * c.clone(),
        PayoffScheme::Accumulated => b.clone() * donors - T::count(degree * xi as usize) * c.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, star};

    #[test]
    fn all_defectors_earn_nothing() {
        let g = star(4).unwrap();
        let x = vec![0; 5];
        assert!(payoff_pgg(&g, &x, PayoffScheme::Averaged, 3.0, 1.0).iter().all(|&f| f == 0.0));
        assert!(payoff_dg(&g, &x, PayoffScheme::Accumulated, 3.0, 1.0).iter().all(|&f| f == 0.0));
    }

    #[test]
    fn all_cooperators_on_a_regular_graph() {
        let g = cycle(6).unwrap();
        let x = vec![1; 6];
        for f in payoff_pgg(&g, &x, PayoffScheme::Averaged, 3.5, 1.0) {
            assert!((f - 2.5).abs() < 1e-12);
        }
        for f in payoff_dg(&g, &x, PayoffScheme::Averaged, 4.0, 1.0) {
            assert!((f - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn hub_only_cooperator_on_small_star() {
        let g = star(2).unwrap();
        let x = vec![1, 0, 0];
        let (r, c) = (3.0, 1.0);
        let f = payoff_pgg(&g, &x, PayoffScheme::Averaged, r, c);
        let expected_hub = (r * c * (1.0 / 3.0 + 0.5 + 0.5) - 3.0 * c) / 3.0;
        assert!((f[0] - expected_hub).abs() < 1e-12);
        let leaf = (r * c * (1.0 / 3.0 + 0.5)) / 2.0;
        assert!((f[1] - leaf).abs() < 1e-12);
    }

    #[test]
    fn donation_game_examples() {
        let g = star(3).unwrap();
        let f = payoff_dg(&g, &[1, 0, 0, 0], PayoffScheme::Accumulated, 5.0, 1.0);
        assert_eq!(f, vec![-3.0, 5.0, 5.0, 5.0]);
        let h = cycle(4).unwrap();
        let f = payoff_dg(&h, &[0, 1, 1, 1], PayoffScheme::Averaged, 5.0, 1.0);
        assert_eq!(f[0], 5.0);
    }
}
