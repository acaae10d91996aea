//! Step-by-step replay of the twist factorizations of the pillar switchings.
//!
//! Each chain starts from one loop and applies the factors of a twist word
//! one at a time, rightmost first. After every step the engine's reduced
//! image is compared with each recorded expression for that step (several
//! when the hand computation simplifies in place). Recorded expressions use
//! `z<k>` as shorthand for the loop `z_k` and are expanded before comparing.
//!
//! Templates use `{i-1}`, `{i}`, `{i+1}` for the middle family and
//! `{g-1}`, `{g}` for the last pillar switching.

use crate::error::Result;

use super::report::{CaseReport, Mismatch, VerificationReport};
use super::surface::{expand_z, pillar_switching_action};
use super::twist::{dehn_twist_action, TwistWord};

struct Chain {
    start: &'static str,
    steps: &'static [&'static [&'static str]],
}

struct Factorization {
    label: &'static str,
    factors: &'static str,
    chains: &'static [Chain],
}

const SIGMA_FIRST: Factorization = Factorization {
    label: "sigma0",
    factors: "a2^-1 w1 a1 b1 w1 a1 b1",
    chains: &[
        Chain {
            start: "x1",
            steps: &[
                &["x1 y1"],
                &["x1 y1 x1^-1"],
                &["z1^-1 y2 x2 y2^-1 y1 z1 y2 x2^-1 y2^-1 z1", "z1^-1 y2 x2 y2^-1 y1 x1^-1 z1"],
                &["z1^-1 y1 y2 x2 y2^-1 x1^-1 y1^-1 z1"],
                &["z1^-1 y1 z1 y1^-1 z1"],
                &["z1^-1 y1 z1 y1^-1 z1"],
                &["z1^-1 y1 z1 y1^-1 z1"],
            ],
        },
        Chain {
            start: "y1",
            steps: &[
                &["y1"],
                &["y1 x1^-1"],
                &["y1 z1 y2 x2^-1 y2^-1 z1"],
                &["z1 y2 x2^-1 y2^-1 y1^-1 z1"],
                &["y1^-1 z1"],
                &["z1^-1 y1^-1 z1"],
                &["z1^-1 y1^-1 z1"],
            ],
        },
        Chain {
            start: "y2",
            steps: &[
                &["y2"],
                &["y2"],
                &["z1^-1 y2"],
                &["z1^-1 y1 y2"],
                &["z1^-1 y1 x1^-1 y2"],
                &["z1^-1 y1 z1 y2 x2^-1 y2^-1 z1 z1^-1 y2", "z1^-1 y1 z1 y2 x2^-1"],
                &["z1^-1 y1 z1 y2 x2 x2^-1", "z1^-1 y1 z1 y2"],
            ],
        },
        Chain {
            start: "z1",
            steps: &[
                &["y1^-1 z1"],
                &["x1 y1^-1 z1"],
                &["z1^-1 y2 x2 y2^-1 z1^-1 y1^-1 z1"],
                &["z1^-1 y1 y2 x2 y2^-1 z1^-1 y1 y1^-1 y1^-1 z1", "z1^-1 y1 y2 x2 y2^-1 z1^-1 y1^-1 z1"],
                &["z1^-1 y1 x1^-1 y2 x2 y2^-1 z1^-1 x1 y1^-1 z1"],
                &[
                    "z1^-1 y1 z1 y2 x2^-1 y2^-1 z1 z1^-1 y2 x2 y2^-1 z1 z1^-1 z1^-1 y2 x2 y2^-1 z1^-1 y1^-1 z1",
                    "z1^-1 y1 y2 x2 y2^-1 z1^-1 y1^-1 z1",
                ],
                &["z1^-1 y1 x1 y1^-1 z1"],
            ],
        },
    ],
};

const SIGMA_MIDDLE: Factorization = Factorization {
    label: "sigma{i-1}",
    factors: "a{i+1}^-1 a{i} b{i} w{i} w{i-1} a{i-1}^-1 b{i} a{i}",
    chains: &[
        Chain {
            start: "x{i-1}",
            steps: &[
                &["x{i-1}"],
                &["x{i-1}"],
                &["x{i-1}"],
                &["z{i-1}^-1 y{i} x{i} y{i}^-1"],
                &[
                    "z{i-1}^-1 y{i} z{i} z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
                    "z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
                ],
                &[
                    "y{i}^-1 z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i} y{i}^-1",
                    "y{i}^-1 z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1",
                ],
                &["x{i} y{i}^-1 z{i-1}^-1 y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1", "y{i}^-1 x{i-1} y{i}"],
                &["y{i}^-1 x{i-1} y{i}"],
            ],
        },
        Chain {
            start: "x{i}",
            steps: &[
                &["x{i}"],
                &["x{i} y{i}"],
                &["x{i} y{i}"],
                &["x{i} z{i-1}^-1 y{i}"],
                &["z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i-1}^-1 y{i} z{i}"],
                &[
                    "z{i}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 y{i}^-1 z{i-1}^-1 y{i} y{i}^-1 z{i}",
                    "z{i}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 y{i}^-1 z{i-1}^-1 z{i}",
                ],
                &[
                    "z{i}^-1 y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 x{i} y{i}^-1 z{i-1}^-1 z{i}",
                    "z{i}^-1 y{i} z{i} y{i}^-1 x{i-1} z{i}",
                ],
                &["z{i}^-1 y{i} z{i} y{i}^-1 x{i-1} z{i}"],
            ],
        },
        Chain {
            start: "y{i-1}",
            steps: &[
                &["y{i-1}"],
                &["y{i-1}"],
                &["y{i-1} x{i-1}"],
                &["y{i-1} z{i-1} z{i-1}^-1 y{i} x{i} y{i}^-1", "y{i-1} y{i} x{i} y{i}^-1"],
                &[
                    "y{i-1} y{i} z{i} z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
                    "y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
                ],
                &[
                    "y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i} y{i}^-1",
                    "y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1",
                ],
                &["y{i-1} y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1", "y{i-1} y{i}"],
                &["y{i-1} y{i}"],
            ],
        },
        Chain {
            start: "y{i}",
            steps: &[
                &["y{i} x{i}^-1"],
                &["y{i} y{i}^-1 x{i}^-1", "x{i}^-1"],
                &["x{i}^-1"],
                &["x{i}^-1"],
                &["y{i+1} x{i+1}^-1 y{i+1}^-1 z{i}"],
                &["y{i+1} x{i+1}^-1 y{i+1}^-1 y{i}^-1 z{i}"],
                &["y{i+1} x{i+1}^-1 y{i+1}^-1 x{i} y{i}^-1 z{i}", "z{i}^-1 y{i}^-1 z{i}"],
                &["z{i}^-1 y{i}^-1 z{i}"],
            ],
        },
        Chain {
            start: "y{i+1}",
            steps: &[
                &["y{i+1}"],
                &["y{i+1}"],
                &["y{i+1}"],
                &["y{i+1}"],
                &["z{i}^-1 y{i+1}"],
                &["z{i}^-1 y{i} y{i+1}"],
                &["z{i}^-1 y{i} x{i}^-1 y{i+1}"],
                &["z{i}^-1 y{i} x{i}^-1 y{i+1} x{i+1}", "z{i}^-1 y{i} z{i} y{i+1}"],
            ],
        },
        Chain {
            start: "z{i-1}",
            steps: &[
                &["z{i-1}"],
                &["z{i-1} y{i}"],
                &["z{i-1} y{i}"],
                &["z{i-1} z{i-1}^-1 y{i}", "y{i}"],
                &["y{i} z{i}"],
                &["y{i} y{i}^-1 z{i}", "z{i}"],
                &["z{i}"],
                &["z{i}"],
            ],
        },
        Chain {
            start: "z{i}",
            steps: &[
                &["z{i}"],
                &["y{i}^-1 z{i}"],
                &["y{i}^-1 z{i}"],
                &["y{i}^-1 z{i-1} z{i}"],
                &["z{i}^-1 y{i}^-1 z{i-1} z{i}"],
                &["z{i}^-1 y{i} y{i}^-1 z{i-1} y{i} y{i}^-1 z{i}", "z{i}^-1 z{i-1} z{i}"],
                &["z{i}^-1 z{i-1} z{i}"],
                &["z{i}^-1 z{i-1} z{i}"],
            ],
        },
    ],
};

const SIGMA_LAST: Factorization = Factorization {
    label: "sigma{g-1}",
    factors: "w{g-1} a{g} b{g} w{g-1} a{g} b{g} a{g-1}^-1",
    chains: &[
        Chain {
            start: "x{g-1}",
            steps: &[
                &["x{g-1}"],
                &["x{g-1}"],
                &["x{g-1}"],
                &["z{g-1}^-1 y{g} x{g} y{g}^-1"],
                &["y{g}^-1 z{g-1}^-1 y{g} x{g} y{g} y{g}^-1", "y{g}^-1 z{g-1}^-1 y{g} x{g}"],
                &["x{g} y{g}^-1 z{g-1}^-1 y{g} x{g}^-1 x{g}", "y{g}^-1 x{g-1} y{g}"],
                &[
                    "y{g}^-1 z{g-1} z{g-1}^-1 y{g} x{g} y{g}^-1 z{g-1}^-1 y{g}",
                    "x{g} y{g}^-1 z{g-1}^-1 y{g}",
                    "y{g}^-1 x{g-1} y{g}",
                ],
            ],
        },
        Chain {
            start: "x{g}",
            steps: &[
                &["x{g}"],
                &["x{g} y{g}"],
                &["x{g} y{g} x{g}^-1"],
                &["x{g} z{g-1}^-1 y{g} x{g}^-1"],
                &["x{g} y{g} y{g}^-1 z{g-1}^-1 y{g} y{g}^-1 x{g}^-1", "x{g} z{g-1}^-1 x{g}^-1"],
                &["x{g} z{g-1}^-1 x{g}^-1"],
                &["x{g} z{g-1}^-1 x{g}^-1"],
            ],
        },
        Chain {
            start: "y{g-1}",
            steps: &[
                &["y{g-1} x{g-1}"],
                &["y{g-1} x{g-1}"],
                &["y{g-1} x{g-1}"],
                &["y{g-1} z{g-1} z{g-1}^-1 y{g} x{g} y{g}^-1", "y{g-1} y{g} x{g} y{g}^-1"],
                &["y{g-1} y{g} x{g} y{g} y{g}^-1", "y{g-1} y{g} x{g}"],
                &["y{g-1} y{g} x{g}^-1 x{g}", "y{g-1} y{g}"],
                &["y{g-1} z{g-1} z{g-1}^-1 y{g}", "y{g-1} y{g}"],
            ],
        },
        Chain {
            start: "y{g}",
            steps: &[
                &["y{g}"],
                &["y{g}"],
                &["y{g} x{g}^-1"],
                &["z{g-1}^-1 y{g} x{g}^-1"],
                &["y{g}^-1 z{g-1}^-1 y{g} y{g}^-1 x{g}^-1", "y{g}^-1 z{g-1}^-1 x{g}^-1"],
                &["x{g} y{g}^-1 z{g-1}^-1 x{g}^-1"],
                &["x{g} y{g}^-1 z{g-1} z{g-1}^-1 x{g}^-1", "x{g} y{g}^-1 x{g}^-1"],
            ],
        },
        Chain {
            start: "z{g-1}",
            steps: &[
                &["z{g-1}"],
                &["z{g-1} y{g}"],
                &["z{g-1} y{g} x{g}^-1"],
                &["z{g-1} z{g-1}^-1 y{g} x{g}^-1", "y{g} x{g}^-1"],
                &["y{g} y{g}^-1 x{g}^-1", "x{g}^-1"],
                &["x{g}^-1"],
                &["x{g}^-1"],
            ],
        },
    ],
};

fn instantiate(template: &str, i: u32, g: u32) -> String {
    template
        .replace("{i-1}", &(i - 1).to_string())
        .replace("{i+1}", &(i + 1).to_string())
        .replace("{i}", &i.to_string())
        .replace("{g-1}", &(g - 1).to_string())
        .replace("{g}", &g.to_string())
}

/// Number of recorded step lines (one per factor per starting loop) across
/// all three factorization shapes.
pub fn recorded_step_count() -> usize {
    [SIGMA_FIRST, SIGMA_MIDDLE, SIGMA_LAST].iter().map(|f| f.chains.iter().map(|c| c.steps.len()).sum::<usize>()).sum()
}

fn replay(fact: &Factorization, sigma_index: u32, i: u32, genus: u32, report: &mut VerificationReport) -> Result<()> {
    let g = genus;
    let word = TwistWord::parse(&instantiate(fact.factors, i, g), g)?;
    let sigma = pillar_switching_action(sigma_index, g)?;
    let label = instantiate(fact.label, i, g);
    let applied: Vec<_> = word.symbols().iter().rev().copied().collect();
    for chain in fact.chains {
        let start_name = instantiate(chain.start, i, g);
        let mut mismatches = Vec::new();
        let mut current = expand_z(&start_name, g)?;
        assert_eq!(chain.steps.len(), applied.len(), "chain for {start_name} in {label}");
        for (k, (&symbol, forms)) in applied.iter().zip(chain.steps).enumerate() {
            current = dehn_twist_action(symbol, g)?.apply(&current)?;
            for form in forms.iter() {
                let text = instantiate(form, i, g);
                let printed = expand_z(&text, g)?;
                if printed != current {
                    mismatches.push(Mismatch {
                        generator: format!("{start_name} step {} ({symbol}): {text}", k + 1),
                        lhs: current.clone(),
                        rhs: printed,
                    });
                }
            }
        }
        let expected = sigma.apply(&expand_z(&start_name, g)?)?;
        if expected != current {
            mismatches.push(Mismatch {
                generator: format!("{start_name} final vs {label} action"),
                lhs: current.clone(),
                rhs: expected,
            });
        }
        report.cases.push(CaseReport::new(format!("chain/{label}/{start_name}"), mismatches));
    }
    Ok(())
}

/// Replays every recorded chain that fits in the given genus: the `σ_0` and
/// `σ_{g-1}` chains, and the middle chains for every `2 ≤ i ≤ g - 1`.
/// Besides the per-step lines, each chain's last image is checked against
/// the pillar-switching action applied to the starting loop.
pub fn replay_proof_chains(genus: u32) -> Result<VerificationReport> {
    if genus < 2 {
        return Err(crate::error::Error::Genus { genus, reason: "pillar switchings need genus at least 2" });
    }
    let mut report = VerificationReport::new(genus);
    replay(&SIGMA_FIRST, 0, 2, genus, &mut report)?;
    for i in 2..genus {
        replay(&SIGMA_MIDDLE, i - 1, i, genus, &mut report)?;
    }
    replay(&SIGMA_LAST, genus - 1, 2, genus, &mut report)?;
    Ok(report)
}

/// Replays only the middle chains for one value of `i` (`σ_{i-1}`).
pub fn replay_middle_chain(i: u32, genus: u32) -> Result<VerificationReport> {
    if i < 2 || i + 1 > genus {
        return Err(crate::error::Error::IndexOutOfRange {
            name: format!("i = {i}"),
            context: format!("middle factorizations at genus {genus}"),
        });
    }
    let mut report = VerificationReport::new(genus);
    replay(&SIGMA_MIDDLE, i - 1, i, genus, &mut report)?;
    Ok(report)
}
