use num::{One, Signed};
use thiserror::Error;

use super::{Insert, Network, NetworkBuilder, NetworkError, NetworkKind, NodeId};
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected {expected} tokens, found {found}")]
    TokenCount { expected: &'static str, found: usize },
    #[error("invalid weight {0:?}")]
    BadWeight(String),
    #[error("weight must be positive, got {0:?}")]
    NonPositiveWeight(String),
    #[error("missing '->' or '<->' arrow")]
    MissingArrow,
    #[error("both sides of the hyperedge are empty")]
    EmptyHyperedge,
    #[error("empty node name")]
    EmptyNode,
    #[error("reversible reaction '<->' requires splitting reversible reactions")]
    ReversibleNotSplit,
    #[error("edge-list parsing needs a graph kind, got {0}")]
    WrongKind(NetworkKind),
}

/// A parsed network together with the clean-up counts.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub network: Network,
    /// Repeated edges collapsed into an earlier one.
    pub duplicates: usize,
    /// Self-loops dropped.
    pub self_loops: usize,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_weight(token: &str, line: usize) -> Result<Rational, ParseError> {
    let w = parse_rational(token).ok_or_else(|| ParseError {
        line,
        kind: ParseErrorKind::BadWeight(token.to_owned()),
    })?;
    if !w.is_positive() {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::NonPositiveWeight(token.to_owned()),
        });
    }
    Ok(w)
}

/// Reads a whitespace-separated edge list, one `u v` (or `u v w` when
/// `weighted`) per line. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str, kind: NetworkKind, weighted: bool) -> Result<Loaded, ParseError> {
    if !kind.is_graph() {
        return Err(ParseError {
            line: 0,
            kind: ParseErrorKind::WrongKind(kind),
        });
    }
    let mut builder = NetworkBuilder::new(kind).weighted(weighted);
    let mut duplicates = 0;
    let mut self_loops = 0;
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let weight = match (tokens.len(), weighted) {
            (2, _) => Rational::one(),
            (3, true) => parse_weight(tokens[2], line)?,
            (found, _) => {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::TokenCount {
                        expected: if weighted { "2 or 3" } else { "2" },
                        found,
                    },
                })
            }
        };
        if tokens[0] == tokens[1] {
            self_loops += 1;
            continue;
        }
        let t = builder.node(tokens[0]);
        let h = builder.node(tokens[1]);
        match builder.add_edge(t, h, weight) {
            Ok(Insert::Added(_)) => {}
            Ok(Insert::Merged(_)) => duplicates += 1,
            Ok(Insert::SelfLoopDropped) => self_loops += 1,
            Err(_) => unreachable!("weight and nodes validated above"),
        }
    }
    Ok(Loaded {
        network: builder.build(),
        duplicates,
        self_loops,
    })
}

fn parse_side(side: &str, line: usize) -> Result<Vec<&str>, ParseError> {
    let side = side.trim();
    if side.is_empty() {
        return Ok(Vec::new());
    }
    side.split(',')
        .map(|t| {
            let t = t.trim();
            if t.is_empty() {
                Err(ParseError {
                    line,
                    kind: ParseErrorKind::EmptyNode,
                })
            } else {
                Ok(t)
            }
        })
        .collect()
}

/// Reads directed hyperedges, one per line:
///
/// ```text
/// adp,h,pi -> atp,h2o | ATPS
/// g6p <-> f6p | PGI
/// -> glc | EX_glc | 2.5
/// ```
///
/// The optional trailing fields are a label and a positive weight. With
/// `split_reversible`, every `<->` line becomes a forward hyperedge followed
/// by its reverse (labelled `<label>_rev`).
pub fn parse_hyperedges(text: &str, split_reversible: bool) -> Result<Loaded, ParseError> {
    let mut builder = NetworkBuilder::hypergraph();
    let mut weighted = false;
    for (line, content) in content_lines(text) {
        let mut fields = content.split('|');
        let reaction = fields.next().unwrap_or_default();
        let label = fields.next().map(str::trim).unwrap_or_default();
        let weight = match fields.next() {
            Some(w) => {
                weighted = true;
                parse_weight(w.trim(), line)?
            }
            None => Rational::one(),
        };
        if fields.next().is_some() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::TokenCount {
                    expected: "at most 3 '|'-separated",
                    found: content.split('|').count(),
                },
            });
        }

        let (lhs, rhs, reversible) = if let Some((l, r)) = reaction.split_once("<->") {
            (l, r, true)
        } else if let Some((l, r)) = reaction.split_once("->") {
            (l, r, false)
        } else {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::MissingArrow,
            });
        };
        if reversible && !split_reversible {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::ReversibleNotSplit,
            });
        }
        let tail = parse_side(lhs, line)?;
        let head = parse_side(rhs, line)?;
        if tail.is_empty() && head.is_empty() {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::EmptyHyperedge,
            });
        }
        let t: Vec<NodeId> = tail.iter().map(|l| builder.node(l)).collect();
        let h: Vec<NodeId> = head.iter().map(|l| builder.node(l)).collect();
        let insert = |b: &mut NetworkBuilder, t: &[NodeId], h: &[NodeId], label: &str| {
            b.add_hyperedge(t, h, weight.clone(), label)
                .map_err(|e| match e {
                    NetworkError::EmptyHyperedge => ParseError {
                        line,
                        kind: ParseErrorKind::EmptyHyperedge,
                    },
                    other => unreachable!("validated hyperedge rejected: {other}"),
                })
        };
        insert(&mut builder, &t, &h, label)?;
        if reversible {
            let rev_label = if label.is_empty() {
                String::new()
            } else {
                format!("{label}_rev")
            };
            insert(&mut builder, &h, &t, &rev_label)?;
        }
    }
    Ok(Loaded {
        network: builder.weighted(weighted).build(),
        duplicates: 0,
        self_loops: 0,
    })
}
