//! Two-player, two-strategy commons games: dominance, pure Nash equilibria,
//! best social outcome, equality gaps, and corrective (Pigouvian)
//! interventions.
//!
//! Mixed strategies are out of scope; games with no pure equilibrium are
//! flagged, not solved.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A 2x2 payoff matrix. `payoffs[i][j]` is the (row, column) payoff pair
/// when player 1 plays strategy `i` and player 2 plays strategy `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Game2x2 {
    pub strategy_labels: [String; 2],
    pub payoffs: [[(f64, f64); 2]; 2],
}

impl Game2x2 {
    pub fn new(labels: [&str; 2], payoffs: [[(f64, f64); 2]; 2]) -> Result<Self> {
        for row in &payoffs {
            for &(a, b) in row {
                if !a.is_finite() || !b.is_finite() {
                    return Err(Error::param("payoffs", "all payoffs must be finite"));
                }
            }
        }
        Ok(Game2x2 {
            strategy_labels: [labels[0].to_string(), labels[1].to_string()],
            payoffs,
        })
    }

    /// The commons game: Light/Heavy grazing with payoffs
    /// (50,50) (20,60) / (60,20) (30,30).
    pub fn commons() -> Self {
        Game2x2::new(
            ["Light", "Heavy"],
            [[(50.0, 50.0), (20.0, 60.0)], [(60.0, 20.0), (30.0, 30.0)]],
        )
        .unwrap()
    }

    pub fn strategy_index(&self, label: &str) -> Result<usize> {
        self.strategy_labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownStrategy(label.to_string()))
    }

    pub fn payoff(&self, s1: usize, s2: usize) -> (f64, f64) {
        self.payoffs[s1][s2]
    }

    fn payoff_for(&self, player: usize, own: usize, other: usize) -> f64 {
        match player {
            0 => self.payoffs[own][other].0,
            _ => self.payoffs[other][own].1,
        }
    }

    /// A game is symmetric iff `payoff(i,j).p1 == payoff(j,i).p2` for all
    /// cells.
    pub fn is_symmetric(&self) -> bool {
        (0..2).all(|i| (0..2).all(|j| self.payoffs[i][j].0 == self.payoffs[j][i].1))
    }

    pub fn profile(&self, s1: usize, s2: usize) -> Profile {
        Profile {
            s1,
            s2,
            payoffs: self.payoffs[s1][s2],
        }
    }
}

/// A strategy profile with its payoffs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub s1: usize,
    pub s2: usize,
    pub payoffs: (f64, f64),
}

impl Profile {
    pub fn payoff_sum(&self) -> f64 {
        self.payoffs.0 + self.payoffs.1
    }
}

/// Result of a dominance check for one player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dominance {
    /// One strategy beats the other against every opponent strategy.
    Strict(usize),
    /// One strategy is never worse and sometimes better.
    Weak(usize),
    /// Both strategies tie against every opponent strategy.
    AllTied,
    None,
}

/// Dominant strategy for `player` (0 or 1), with strictness.
pub fn dominant_strategy(game: &Game2x2, player: usize) -> Dominance {
    let beats = |s: usize, o: usize| -> (bool, bool) {
        // (weakly_ge_everywhere, strictly_gt_everywhere)
        let mut ge = true;
        let mut gt = true;
        for opp in 0..2 {
            let a = game.payoff_for(player, s, opp);
            let b = game.payoff_for(player, o, opp);
            ge &= a >= b;
            gt &= a > b;
        }
        (ge, gt)
    };
    let (ge0, gt0) = beats(0, 1);
    let (ge1, gt1) = beats(1, 0);
    if gt0 {
        Dominance::Strict(0)
    } else if gt1 {
        Dominance::Strict(1)
    } else if ge0 && ge1 {
        Dominance::AllTied
    } else if ge0 {
        Dominance::Weak(0)
    } else if ge1 {
        Dominance::Weak(1)
    } else {
        Dominance::None
    }
}

/// All cells where neither player gains from a unilateral deviation,
/// row-major order.
pub fn pure_nash(game: &Game2x2) -> Vec<Profile> {
    let mut out = Vec::new();
    for s1 in 0..2 {
        for s2 in 0..2 {
            let p1_ok = game.payoff_for(0, s1, s2) >= game.payoff_for(0, 1 - s1, s2);
            let p2_ok = game.payoff_for(1, s2, s1) >= game.payoff_for(1, 1 - s2, s1);
            if p1_ok && p2_ok {
                out.push(game.profile(s1, s2));
            }
        }
    }
    out
}

/// The cell maximizing the payoff sum; ties break row-major-first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestSocialOutcome {
    pub profile: Profile,
    pub tied: bool,
}

pub fn best_social_outcome(game: &Game2x2) -> BestSocialOutcome {
    let mut best = game.profile(0, 0);
    let mut tie_count = 0usize;
    for s1 in 0..2 {
        for s2 in 0..2 {
            let p = game.profile(s1, s2);
            if p.payoff_sum() > best.payoff_sum() {
                best = p;
            }
        }
    }
    for s1 in 0..2 {
        for s2 in 0..2 {
            if game.profile(s1, s2).payoff_sum() == best.payoff_sum() {
                tie_count += 1;
            }
        }
    }
    BestSocialOutcome {
        profile: best,
        tied: tie_count > 1,
    }
}

/// |p1 - p2| for a profile: the within-cell inequality measure.
pub fn equality_gap(profile: &Profile) -> f64 {
    (profile.payoffs.0 - profile.payoffs.1).abs()
}

/// Full diagnosis: equilibria, social optimum, and the efficiency loss
/// between them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TragedyDiagnosis {
    pub nash: Vec<Profile>,
    pub bso: BestSocialOutcome,
    /// True when every pure equilibrium has a strictly lower payoff sum
    /// than the social optimum.
    pub is_tragedy: bool,
    /// BSO sum minus the best equilibrium sum (zero when no pure NE).
    pub efficiency_loss: f64,
    pub no_pure_nash: bool,
    pub equality_at_nash: Vec<f64>,
    pub equality_at_bso: f64,
}

pub fn tragedy_diagnosis(game: &Game2x2) -> TragedyDiagnosis {
    let nash = pure_nash(game);
    let bso = best_social_outcome(game);
    let no_pure_nash = nash.is_empty();
    let is_tragedy = !no_pure_nash
        && nash.iter().all(|p| p.payoff_sum() < bso.profile.payoff_sum());
    let efficiency_loss = if no_pure_nash {
        0.0
    } else {
        let best_ne = nash
            .iter()
            .map(Profile::payoff_sum)
            .fold(f64::NEG_INFINITY, f64::max);
        bso.profile.payoff_sum() - best_ne
    };
    TragedyDiagnosis {
        equality_at_nash: nash.iter().map(equality_gap).collect(),
        equality_at_bso: equality_gap(&bso.profile),
        nash,
        bso,
        is_tragedy,
        efficiency_loss,
        no_pure_nash,
    }
}

/// Subtract `tau` from each player's payoff in every cell where that player
/// plays the taxed strategy.
pub fn apply_tax(game: &Game2x2, strategy_label: &str, tau: f64) -> Result<Game2x2> {
    if tau < 0.0 {
        return Err(Error::param("tau", "must be non-negative"));
    }
    let s = game.strategy_index(strategy_label)?;
    let mut taxed = game.clone();
    for i in 0..2 {
        for j in 0..2 {
            if i == s {
                taxed.payoffs[i][j].0 -= tau;
            }
            if j == s {
                taxed.payoffs[i][j].1 -= tau;
            }
        }
    }
    Ok(taxed)
}

/// Subsidy on a strategy: equivalent to taxing the complement up to a
/// constant shift of the player's payoffs, so best-response sets match.
pub fn apply_subsidy(game: &Game2x2, strategy_label: &str, sigma: f64) -> Result<Game2x2> {
    if sigma < 0.0 {
        return Err(Error::param("sigma", "must be non-negative"));
    }
    let s = game.strategy_index(strategy_label)?;
    let mut out = game.clone();
    for i in 0..2 {
        for j in 0..2 {
            if i == s {
                out.payoffs[i][j].0 += sigma;
            }
            if j == s {
                out.payoffs[i][j].1 += sigma;
            }
        }
    }
    Ok(out)
}

/// Smallest tax on the complement strategy making the target the unique
/// strict pure equilibrium for every rate strictly above it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrectiveTax {
    pub taxed_strategy: String,
    pub infimum_tau: f64,
    /// True when indifference holds at exactly `infimum_tau`, so the rate
    /// must be strictly above the infimum.
    pub strict_above: bool,
}

/// Closed-form infimum over the finitely many deviation constraints.
///
/// The target must be a diagonal profile of the untaxed strategy; the tax
/// falls on the complement.
pub fn min_corrective_tax(game: &Game2x2, target: usize) -> Result<CorrectiveTax> {
    if target > 1 {
        return Err(Error::InfeasibleTarget(format!(
            "strategy index {target} out of range"
        )));
    }
    let s = target;
    let h = 1 - target;
    // Target is a strict NE of the taxed game iff tau exceeds both
    // unilateral-deviation gains.
    let a1 = game.payoffs[h][s].0 - game.payoffs[s][s].0;
    let a2 = game.payoffs[s][h].1 - game.payoffs[s][s].1;
    // (h, h) stops being an equilibrium once either player prefers to
    // deviate to the untaxed strategy.
    let a3 = (game.payoffs[h][h].0 - game.payoffs[s][h].0)
        .min(game.payoffs[h][h].1 - game.payoffs[h][s].1);
    let infimum = a1.max(a2).max(a3).max(0.0);
    // Off-diagonal profiles (h, s) and (s, h) fail the same a1/a2
    // constraints, so no separate bound arises. A binding constraint at
    // the infimum means indifference holds there.
    let strict_above = a1.max(a2).max(a3) == infimum;
    Ok(CorrectiveTax {
        taxed_strategy: game.strategy_labels[h].clone(),
        infimum_tau: infimum,
        strict_above,
    })
}
