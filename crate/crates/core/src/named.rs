//! Named graph families used throughout the toolkit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A recipe for a named graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `K_n`.
    Complete(usize),
    /// `P_l`, the path on `l` vertices.
    Path(usize),
    /// `C_l`, `l >= 3`.
    Cycle(usize),
    /// `K_{l,m}`.
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    /// `k K_2`.
    Matching(usize),
    /// `K_{1,l}`.
    Star(usize),
    /// `Y_{m+2}`: the path `P_m` with two pendant edges at one endpoint.
    YGraph(usize),
    /// Three paths of length two sharing an endpoint.
    Spider222,
    Union(Vec<Family>),
    Join(Box<Family>, Box<Family>),
    /// `K_n \ H`: the complement of `H` padded with isolated vertices to order `n`.
    KnMinus(usize, Graph),
}

fn check(what: &'static str, n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::capacity(what, n, MAX_VERTICES))
    } else {
        Ok(())
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

pub fn path(l: usize) -> Result<Graph> {
    let mut g = Graph::empty(l)?;
    for i in 1..l {
        g.add_edge(i - 1, i);
    }
    Ok(g)
}

pub fn cycle(l: usize) -> Result<Graph> {
    if l < 3 {
        return Err(Error::Argument(format!(
            "cycle needs at least 3 vertices, got {l}"
        )));
    }
    let mut g = path(l)?;
    g.add_edge(0, l - 1);
    Ok(g)
}

pub fn complete_bipartite(l: usize, m: usize) -> Result<Graph> {
    complete_multipartite(&[l, m])
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    check("complete multipartite", parts.iter().sum())?;
    parts
        .iter()
        .try_fold(Graph::empty(0)?, |g, &p| g.join(&Graph::empty(p)?))
}

pub fn matching(k: usize) -> Result<Graph> {
    check("matching", 2 * k)?;
    let mut g = Graph::empty(2 * k)?;
    for i in 0..k {
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

pub fn star(l: usize) -> Result<Graph> {
    complete_bipartite(1, l)
}

/// `Y_{m+2}`; `y_graph(2)` is the claw `K_{1,3}`.
pub fn y_graph(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::Argument("y_graph needs m >= 1".into()));
    }
    let mut g = path(m)?.pad(2)?;
    g.add_edge(0, m);
    g.add_edge(0, m + 1);
    Ok(g)
}

/// Center 0 with legs 0-1-2, 0-3-4, 0-5-6.
pub fn spider222() -> Graph {
    Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).expect("fixed spider is valid")
}

pub fn kn_minus(n: usize, h: &Graph) -> Result<Graph> {
    check("K_n minus H", n)?;
    if h.order() > n {
        return Err(Error::Argument(format!(
            "H has {} vertices, more than n = {n}",
            h.order()
        )));
    }
    Ok(h.pad(n - h.order())?.complement())
}

pub fn union_all(graphs: &[Graph]) -> Result<Graph> {
    graphs
        .iter()
        .try_fold(Graph::empty(0)?, |acc, g| acc.disjoint_union(g))
}

pub fn make_named(family: &Family) -> Result<Graph> {
    match family {
        Family::Complete(n) => complete(*n),
        Family::Path(l) => path(*l),
        Family::Cycle(l) => cycle(*l),
        Family::CompleteBipartite(l, m) => complete_bipartite(*l, *m),
        Family::CompleteMultipartite(parts) => complete_multipartite(parts),
        Family::Matching(k) => matching(*k),
        Family::Star(l) => star(*l),
        Family::YGraph(m) => y_graph(*m),
        Family::Spider222 => Ok(spider222()),
        Family::Union(list) => {
            let gs = list.iter().map(make_named).collect::<Result<Vec<_>>>()?;
            union_all(&gs)
        }
        Family::Join(a, b) => make_named(a)?.join(&make_named(b)?),
        Family::KnMinus(n, h) => kn_minus(*n, h),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, xs: &[usize]| {
            let s: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            f.write_str(&s.join(","))
        };
        match self {
            Family::Complete(n) => write!(f, "complete({n})"),
            Family::Path(l) => write!(f, "path({l})"),
            Family::Cycle(l) => write!(f, "cycle({l})"),
            Family::CompleteBipartite(l, m) => write!(f, "complete_bipartite({l},{m})"),
            Family::CompleteMultipartite(p) => {
                f.write_str("complete_multipartite(")?;
                list(f, p)?;
                f.write_str(")")
            }
            Family::Matching(k) => write!(f, "matching({k})"),
            Family::Star(l) => write!(f, "star({l})"),
            Family::YGraph(m) => write!(f, "y_graph({m})"),
            Family::Spider222 => f.write_str("spider222"),
            Family::Union(xs) => {
                f.write_str("union(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
            Family::Join(a, b) => write!(f, "join({a},{b})"),
            Family::KnMinus(n, h) => write!(f, "kn_minus({n},g6:{h})"),
        }
    }
}

/// Parses a family expression such as `kn_minus(7, union(star(4), complete(2)))`.
///
/// Graph arguments to `kn_minus` may be nested expressions or `g6:<graph6>`.
pub fn parse_family(text: &str) -> Result<Family> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let fam = p.family()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(Error::parse(p.pos, "trailing input after expression"));
    }
    Ok(fam)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a family name"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(start, "expected a number"))
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        self.eat(b'(')?;
        let mut out = vec![self.number()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.number()?);
        }
        self.eat(b')')?;
        Ok(out)
    }

    fn arity(&self, start: usize, args: &[usize], want: usize) -> Result<()> {
        if args.len() == want {
            Ok(())
        } else {
            Err(Error::parse(
                start,
                format!("expected {want} argument(s), got {}", args.len()),
            ))
        }
    }

    fn graph_arg(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(b"g6:") {
            self.pos += 3;
            let start = self.pos;
            while self.pos < self.s.len() && (63..=126).contains(&self.s[self.pos]) {
                if self.s[self.pos] == b')' || self.s[self.pos] == b',' {
                    break;
                }
                self.pos += 1;
            }
            let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
            return crate::graph6::from_graph6(text).map_err(|e| match e {
                Error::Parse { offset, message } => Error::parse(start + offset, message),
                other => other,
            });
        }
        make_named(&self.family()?)
    }

    fn family(&mut self) -> Result<Family> {
        let start = self.pos;
        let name = self.ident()?;
        let fam = match name.as_str() {
            "spider222" => Family::Spider222,
            "complete" | "path" | "cycle" | "matching" | "star" | "y_graph" => {
                let a = self.numbers()?;
                self.arity(start, &a, 1)?;
                match name.as_str() {
                    "complete" => Family::Complete(a[0]),
                    "path" => Family::Path(a[0]),
                    "cycle" => Family::Cycle(a[0]),
                    "matching" => Family::Matching(a[0]),
                    "star" => Family::Star(a[0]),
                    _ => Family::YGraph(a[0]),
                }
            }
            "complete_bipartite" => {
                let a = self.numbers()?;
                self.arity(start, &a, 2)?;
                Family::CompleteBipartite(a[0], a[1])
            }
            "complete_multipartite" => Family::CompleteMultipartite(self.numbers()?),
            "union" => {
                self.eat(b'(')?;
                let mut xs = vec![self.family()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    xs.push(self.family()?);
                }
                self.eat(b')')?;
                Family::Union(xs)
            }
            "join" => {
                self.eat(b'(')?;
                let a = self.family()?;
                self.eat(b',')?;
                let b = self.family()?;
                self.eat(b')')?;
                Family::Join(Box::new(a), Box::new(b))
            }
            "kn_minus" => {
                self.eat(b'(')?;
                let n = self.number()?;
                self.eat(b',')?;
                let h = self.graph_arg()?;
                self.eat(b')')?;
                Family::KnMinus(n, h)
            }
            other => return Err(Error::parse(start, format!("unknown family '{other}'"))),
        };
        Ok(fam)
    }
}
