use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Relation checked between the two sides of a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

/// Registered bounds and identities on `pd(G ⊙ H)` and `dim(G ⊙ H)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::C1,
        ClaimId::C2,
        ClaimId::C3,
        ClaimId::C4,
        ClaimId::C5,
        ClaimId::C6,
        ClaimId::C7,
        ClaimId::C8,
        ClaimId::C9,
        ClaimId::C10,
        ClaimId::C11,
        ClaimId::C12,
        ClaimId::C13,
        ClaimId::C14,
        ClaimId::C15,
        ClaimId::C16,
        ClaimId::C17,
        ClaimId::C18,
    ];

    pub fn relation(self) -> Relation {
        use ClaimId::*;
        match self {
            C1 | C2 | C5 | C6 | C7 | C8 | C12 => Relation::Le,
            C3 | C4 | C9 | C13 | C14 => Relation::Ge,
            C10 | C11 | C15 | C16 | C17 | C18 => Relation::Eq,
        }
    }

    /// Statement and hypotheses, as evaluated.
    pub fn statement(self) -> &'static str {
        use ClaimId::*;
        match self {
            C1 => "pd(G⊙H) <= dim(G⊙H) + 1; G connected",
            C2 => "pd(G⊙H) <= dim(G⊙H)/n1 + pd(G) + 1; G connected, n1 >= 2",
            C3 => "dim(G⊙H) >= n1/(n1-1) pd(G); G, H connected, n1, n2 >= 2, not K_n1⊙P_2 or K_n1⊙P_3",
            C4 => "dim(G⊙H) >= n1 dim(H); G, H connected, n1, n2 >= 2",
            C5 => "dim(G⊙H) <= n1(n2-α-1) | n1(n2-α) | n1(n2-1) by (α,β) case; α = components of order >= 2; n1, n2 >= 2",
            C6 => "pd(G⊙H) <= pd(G)+n2-α | pd(G)+n2-α+1 | pd(G)+n2 by (α,β) case; n1, n2 >= 2",
            C7 => "pd(G⊙H) <= pd(G) + pd(H); G, H connected, n1, n2 >= 2, D(H) <= 2",
            C8 => "pd(G⊙H) <= dim(G) + dim(H) + 2; G, H connected, n1, n2 >= 2, D(H) <= 2",
            C9 => "pd(G⊙H) >= pd(H); G, H connected, n2 >= 2",
            C10 => "a minimum resolving partition of G⊙H induces a resolving partition on every copy of H; G, H connected",
            C11 => "a minimum resolving set of G⊙H meets every copy and avoids the centres; G connected, n1, n2 >= 2",
            C12 => "every resolving partition of G⊙K_n with n+1 blocks has d(v,A) <= 3; corona order <= 10",
            C13 => "pd(G⊙H) >= c(H) + 2; G connected, n1 > 2c(H)+1 >= 5",
            C14 => "pd(G⊙H) >= β(H) + 1; G connected, n1 > β(H) >= 2",
            C15 => "pd(P_n1⊙K_n2) = n2 + 2; n1 > 2n2+1 >= 5",
            C16 => "pd(P_n1⊙N_n2) = n2 + 1; n1 >= n2 >= 2",
            C17 => "pd(G⊙K_1,n) = n; G connected, n >= 2n1 >= 4 or n > 2n1 = 2",
            C18 => "pd(K_1,n) = n; n >= 2 (evaluated on H)",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", *self as usize + 1)
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let idx = s
            .trim()
            .strip_prefix(['C', 'c'])
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| (1..=ClaimId::ALL.len()).contains(&k))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))?;
        Ok(ClaimId::ALL[idx - 1])
    }
}

/// Parses `all` or a comma-separated list of claim ids.
pub fn parse_claim_list(s: &str) -> Result<Vec<ClaimId>, Error> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(ClaimId::ALL.to_vec());
    }
    let mut ids = s
        .split(',')
        .map(str::parse)
        .collect::<Result<Vec<ClaimId>, _>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}
