use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::corona::{corona, CoronaGraph};
use crate::error::{Error, Result};

/// Largest family parameter accepted by the spec grammar.
const MAX_PARAM: usize = 4096;

/// Named graph family with canonical labelling.
///
/// Grammar: `path:n`, `cycle:n`, `complete:n`, `star:n`, `empty:n` and
/// `corona(SPEC,SPEC)` where neither argument is itself a corona.
/// Whitespace is ignored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    /// `0 - 1 - ... - (n-1)`, `n >= 1`.
    Path(usize),
    /// `n >= 3`.
    Cycle(usize),
    /// `n >= 1`.
    Complete(usize),
    /// `K_{1,n}`: order `n + 1`, centre 0, `n >= 1`.
    Star(usize),
    /// `N_n`, `n >= 1`.
    Empty(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn corona_of(g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec::Corona(Box::new(g), Box::new(h))
    }

    fn validate(&self) -> Result<()> {
        let (name, n, min) = match *self {
            FamilySpec::Path(n) => ("path", n, 1),
            FamilySpec::Cycle(n) => ("cycle", n, 3),
            FamilySpec::Complete(n) => ("complete", n, 1),
            FamilySpec::Star(n) => ("star", n, 1),
            FamilySpec::Empty(n) => ("empty", n, 1),
            FamilySpec::Corona(ref g, ref h) => {
                if g.is_corona() || h.is_corona() {
                    return Err(Error::MalformedSpec(format!(
                        "{self}: nested corona products are not supported"
                    )));
                }
                g.validate()?;
                return h.validate();
            }
        };
        if n < min || n > MAX_PARAM {
            return Err(Error::OutOfRange(format!(
                "{name}:{n} requires {min} <= n <= {MAX_PARAM}"
            )));
        }
        Ok(())
    }

    pub fn is_corona(&self) -> bool {
        matches!(self, FamilySpec::Corona(..))
    }

    /// Builds the graph. Corona specs fail when the base graph is disconnected.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
            FamilySpec::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
            FamilySpec::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
            }
            FamilySpec::Star(n) => Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))?,
            FamilySpec::Empty(n) => Graph::empty(n),
            FamilySpec::Corona(..) => self.build_corona()?.graph,
        })
    }

    /// Builds a corona spec with its centre/copy labelling.
    pub fn build_corona(&self) -> Result<CoronaGraph> {
        match self {
            FamilySpec::Corona(g, h) => {
                self.validate()?;
                corona(&g.build()?, &h.build()?)
            }
            _ => Err(Error::MalformedSpec(format!("{self} is not a corona spec"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Corona(g, h) => write!(f, "corona({g},{h})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let spec = parse_compact(&compact).ok_or_else(|| Error::MalformedSpec(s.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }
}

fn parse_compact(s: &str) -> Option<FamilySpec> {
    if let Some(inner) = s.strip_prefix("corona(").and_then(|r| r.strip_suffix(')')) {
        let split = split_top_level_comma(inner)?;
        let g = parse_compact(&inner[..split])?;
        let h = parse_compact(&inner[split + 1..])?;
        return Some(FamilySpec::corona_of(g, h));
    }
    let (name, param) = s.split_once(':')?;
    if param.is_empty() || !param.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = param.parse().ok()?;
    Some(match name {
        "path" => FamilySpec::Path(n),
        "cycle" => FamilySpec::Cycle(n),
        "complete" => FamilySpec::Complete(n),
        "star" => FamilySpec::Star(n),
        "empty" => FamilySpec::Empty(n),
        _ => return None,
    })
}

fn split_top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    let mut found = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn path_edges() {
        assert_eq!(
            build("path:3").edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
    }

    #[test]
    fn empty_has_no_edges() {
        let g = build("empty:3");
        assert_eq!((g.order(), g.edge_count()), (3, 0));
    }

    #[test]
    fn star_degree_sequence() {
        let g = build("star:4");
        assert_eq!(g.order(), 5);
        let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "path:1",
            "cycle:7",
            "complete:4",
            "star:2",
            "empty:5",
            "corona(path:6,complete:2)",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert_eq!(
            " corona( path:3 , star:2 ) "
                .parse::<FamilySpec>()
                .unwrap()
                .to_string(),
            "corona(path:3,star:2)"
        );
    }

    #[test]
    fn rejects_bad_specs() {
        for s in [
            "",
            "path",
            "path:",
            "path:x",
            "tree:3",
            "path:-1",
            "corona(path:2)",
            "corona(path:2,path:2,path:2)",
        ] {
            assert!(
                matches!(s.parse::<FamilySpec>(), Err(Error::MalformedSpec(_))),
                "{s}"
            );
        }
        for s in ["path:0", "cycle:2", "star:0", "empty:0", "complete:0"] {
            assert!(
                matches!(s.parse::<FamilySpec>(), Err(Error::OutOfRange(_))),
                "{s}"
            );
        }
        assert!(matches!(
            "corona(corona(path:2,path:2),path:2)".parse::<FamilySpec>(),
            Err(Error::MalformedSpec(_))
        ));
    }

    #[test]
    fn corona_of_disconnected_base_is_rejected() {
        let spec: FamilySpec = "corona(empty:2,path:2)".parse().unwrap();
        assert_eq!(spec.build(), Err(Error::Disconnected));
    }
}
