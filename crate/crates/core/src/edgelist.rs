//! Plain-text edge lists: the first non-comment line holds the order `n`,
//! each following line one 0-indexed edge `u v`. `#` starts a comment.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_num = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("expected a nonnegative integer, found {s:?}"),
            })
        };
        match order {
            None => {
                if fields.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected the vertex count on its own line".into(),
                    });
                }
                order = Some(parse_num(fields[0])?);
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("expected `u v`, found {line:?}"),
                    });
                }
                let (u, v) = (parse_num(fields[0])?, parse_num(fields[1])?);
                if u >= n || v >= n || u == v {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("invalid edge ({u}, {v}) for order {n}"),
                    });
                }
                edges.push((u, v));
            }
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    Graph::from_edge_list(n, &edges)
}

pub fn render(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
