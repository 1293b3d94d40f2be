use std::fmt;

use serde::{Deserialize, Serialize};

use super::{diagram_automorphisms, RootSystem, SimpleType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    /// Even rank and every diagram automorphism is an even permutation.
    Example,
    NoOddRank,
    NoOddAutomorphism,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Example => "EXAMPLE",
            Verdict::NoOddRank => "NO_ODD_RANK",
            Verdict::NoOddAutomorphism => "NO_ODD_AUTOMORPHISM",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub simple_type: SimpleType,
    pub verdict: Verdict,
    /// Other label of the same isomorphism class (B2 = C2, A3 = D3).
    pub isomorphic_to: Option<SimpleType>,
    pub note: Option<String>,
}

const RANK_TWO_NOTE: &str = "B2 = C2 form one isomorphism class; the B_2n / C_2n series is \
     commonly indexed from n >= 2, and this row is its n = 1 member";

/// Classifies every simple type of rank at most `max_rank`.
///
/// The rank test comes first, so odd-rank types report `NoOddRank` even when
/// they also carry odd diagram automorphisms.
pub fn classify_examples(max_rank: usize) -> Vec<Classification> {
    SimpleType::all_up_to_rank(max_rank)
        .into_iter()
        .map(classify_one)
        .collect()
}

pub(crate) fn classify_one(t: SimpleType) -> Classification {
    let verdict = if t.rank() % 2 == 1 {
        Verdict::NoOddRank
    } else {
        let rs = RootSystem::new(t);
        if diagram_automorphisms(&rs).iter().all(|d| d.is_even()) {
            Verdict::Example
        } else {
            Verdict::NoOddAutomorphism
        }
    };
    let isomorphic_to = t.isomorphic_label();
    let note = (t.rank() == 2 && isomorphic_to.is_some()).then(|| RANK_TWO_NOTE.to_string());
    Classification {
        simple_type: t,
        verdict,
        isomorphic_to,
        note,
    }
}
