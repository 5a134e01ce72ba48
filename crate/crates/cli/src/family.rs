//! Family specs (`name:args`) and graph inputs.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use totdom::closed_forms::*;
use totdom::enumeration::total_domination_polynomial;
use totdom::{edgelist, graph, EnumerationConfig, Graph, Polynomial};

use crate::CliError;

/// A graph family with a closed-form polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Friendship(usize),
    Book(usize),
    Kmn(usize, usize),
    /// `P_n ∘ K̄_m`; the polynomial does not depend on the base graph.
    CoronaEmpty(usize, usize),
}

pub const FAMILY_NAMES: [&str; 5] = ["complete", "friendship", "book", "kmn", "corona-empty"];

fn args(name: &str, text: &str, want: usize) -> Result<Vec<usize>, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != want {
        return Err(CliError::Usage(format!(
            "family '{name}' takes {want} argument(s), got '{text}'"
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad argument '{p}' for family '{name}'")))
        })
        .collect()
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("'{s}' is not of the form name:args")))?;
        Ok(match name {
            "complete" => Family::Complete(args(name, rest, 1)?[0]),
            "friendship" => Family::Friendship(args(name, rest, 1)?[0]),
            "book" => Family::Book(args(name, rest, 1)?[0]),
            "kmn" => {
                let a = args(name, rest, 2)?;
                Family::Kmn(a[0], a[1])
            }
            "corona-empty" => {
                let a = args(name, rest, 2)?;
                Family::CoronaEmpty(a[0], a[1])
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "unknown family '{name}' (expected one of {})",
                    FAMILY_NAMES.join(", ")
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Friendship(n) => write!(f, "friendship:{n}"),
            Family::Book(n) => write!(f, "book:{n}"),
            Family::Kmn(m, n) => write!(f, "kmn:{m},{n}"),
            Family::CoronaEmpty(n, m) => write!(f, "corona-empty:{n},{m}"),
        }
    }
}

impl Family {
    pub fn graph(&self) -> totdom::Result<Graph> {
        match *self {
            Family::Complete(n) => graph::complete(n),
            Family::Friendship(n) => graph::friendship(n),
            Family::Book(n) => graph::book(n),
            Family::Kmn(m, n) => graph::complete_bipartite(m, n),
            Family::CoronaEmpty(n, m) => graph::corona(&graph::path(n)?, &graph::empty_graph(m)?),
        }
    }

    pub fn polynomial(&self) -> totdom::Result<Polynomial> {
        match *self {
            Family::Complete(n) => dt_complete(n),
            Family::Friendship(n) => dt_friendship(n),
            Family::Book(n) => dt_book(n),
            Family::Kmn(m, n) => dt_complete_bipartite(m, n),
            Family::CoronaEmpty(n, m) => dt_corona_empty(n, m),
        }
    }
}

/// A family spec or a path to an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Family(Family),
    File(PathBuf),
}

impl Input {
    /// `name:args` with a known family name is a family spec; anything else
    /// names a file. An unknown `name:` prefix that is not an existing file
    /// is reported as an unknown family.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if let Some((name, _)) = s.split_once(':') {
            if FAMILY_NAMES.contains(&name) {
                return Ok(Input::Family(s.parse()?));
            }
            if !std::path::Path::new(s).exists() {
                return Err(s.parse::<Family>().unwrap_err());
            }
        }
        Ok(Input::File(PathBuf::from(s)))
    }
}

/// A graph input with its total domination polynomial.
pub struct Resolved {
    pub label: String,
    pub graph: Graph,
    pub polynomial: Polynomial,
}

/// Builds the graph and its polynomial: closed form for families, capped
/// enumeration for files.
pub fn resolve(input: &Input, cfg: &EnumerationConfig) -> Result<Resolved, CliError> {
    match input {
        Input::Family(f) => Ok(Resolved {
            label: f.to_string(),
            graph: f.graph()?,
            polynomial: f.polynomial()?,
        }),
        Input::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            let graph = edgelist::parse(&text)?;
            let polynomial = total_domination_polynomial(&graph, cfg)?;
            Ok(Resolved {
                label: path.display().to_string(),
                graph,
                polynomial,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_specs() {
        assert_eq!(
            "complete:10".parse::<Family>().unwrap(),
            Family::Complete(10)
        );
        assert_eq!("kmn:3,7".parse::<Family>().unwrap(), Family::Kmn(3, 7));
        assert_eq!(
            "corona-empty:4,2".parse::<Family>().unwrap(),
            Family::CoronaEmpty(4, 2)
        );
        assert!("kmn:3".parse::<Family>().is_err());
        assert!("book:x".parse::<Family>().is_err());
        assert!(Input::parse("wheel:5").is_err());
        assert_eq!(
            Input::parse("graphs/c4.txt").unwrap(),
            Input::File("graphs/c4.txt".into())
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "complete:3",
            "friendship:2",
            "book:4",
            "kmn:3,7",
            "corona-empty:4,2",
        ] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn closed_forms_match_graphs() {
        let cfg = EnumerationConfig::default();
        for s in [
            "complete:5",
            "friendship:3",
            "book:3",
            "kmn:2,4",
            "corona-empty:3,2",
        ] {
            let f: Family = s.parse().unwrap();
            let counted = total_domination_polynomial(&f.graph().unwrap(), &cfg).unwrap();
            assert_eq!(counted, f.polynomial().unwrap(), "{s}");
        }
    }
}
