use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Activation,
    Repression,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interaction {
    pub source: usize,
    pub target: usize,
    pub sign: Sign,
}

/// Node logic as a product of sums; each inner list holds edge indices.
pub type Logic = Vec<Vec<usize>>;

/// Signed regulatory network with product-of-sums node logics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegulatoryNetwork {
    nodes: Vec<String>,
    edges: Vec<Interaction>,
    logic: Vec<Logic>,
    targets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: unknown source node `{name}`")]
    UnknownSource { line: usize, name: String },
    #[error("line {line}: duplicate edge {from} -> {target}")]
    DuplicateEdge { line: usize, from: String, target: String },
    #[error("line {line}: node `{name}` has an empty logic")]
    EmptyLogic { line: usize, name: String },
    #[error("line {line}: node `{name}` defined twice")]
    DuplicateNode { line: usize, name: String },
    #[error("network has no nodes")]
    NoNodes,
    #[error("logic of node {node} is malformed: {message}")]
    BadLogic { node: usize, message: String },
}

impl RegulatoryNetwork {
    /// Assemble from parts, checking the structural rules: at most one edge
    /// per ordered pair and every in-edge used exactly once in its target's logic.
    pub fn new(nodes: Vec<String>, edges: Vec<Interaction>, logic: Vec<Logic>) -> Result<Self, NetworkError> {
        if nodes.is_empty() {
            return Err(NetworkError::NoNodes);
        }
        let n = nodes.len();
        if logic.len() != n {
            return Err(NetworkError::BadLogic { node: n, message: "one logic per node required".into() });
        }
        for (i, e) in edges.iter().enumerate() {
            if e.source >= n || e.target >= n {
                return Err(NetworkError::BadLogic { node: e.target, message: "edge endpoint out of range".into() });
            }
            if edges[..i].iter().any(|f| f.source == e.source && f.target == e.target) {
                return Err(NetworkError::DuplicateEdge {
                    line: 0,
                    from: nodes[e.source].clone(),
                    target: nodes[e.target].clone(),
                });
            }
        }
        let mut used = alloc::vec![0usize; edges.len()];
        for (node, groups) in logic.iter().enumerate() {
            if groups.is_empty() || groups.iter().any(Vec::is_empty) {
                return Err(NetworkError::BadLogic { node, message: "empty group".into() });
            }
            for &e in groups.iter().flatten() {
                if e >= edges.len() || edges[e].target != node {
                    return Err(NetworkError::BadLogic { node, message: "term is not an in-edge".into() });
                }
                used[e] += 1;
            }
        }
        if let Some(e) = used.iter().position(|&c| c != 1) {
            return Err(NetworkError::BadLogic {
                node: edges[e].target,
                message: alloc::format!("in-edge {e} must appear in exactly one group"),
            });
        }
        let mut targets = alloc::vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            targets[e.source].push(i);
        }
        Ok(RegulatoryNetwork { nodes, edges, logic, targets })
    }

    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Interaction] {
        &self.edges
    }

    pub fn edge_index(&self, source: usize, target: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.source == source && e.target == target)
    }

    pub fn logic(&self, node: usize) -> &Logic {
        &self.logic[node]
    }

    /// Out-edge indices of `node`; each contributes one threshold.
    pub fn out_edges(&self, node: usize) -> &[usize] {
        &self.targets[node]
    }

    pub fn edge_name(&self, e: usize) -> String {
        let edge = &self.edges[e];
        let arrow = match edge.sign {
            Sign::Activation => "->",
            Sign::Repression => "-|",
        };
        alloc::format!("{}{}{}", self.nodes[edge.source], arrow, self.nodes[edge.target])
    }
}

impl fmt::Display for RegulatoryNetwork {
    /// Writes the network back in the text format accepted by [`parse_network`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (node, groups) in self.logic.iter().enumerate() {
            write!(f, "{} :", self.nodes[node])?;
            for group in groups {
                f.write_str(" (")?;
                for (k, &e) in group.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    if self.edges[e].sign == Sign::Repression {
                        f.write_str("~")?;
                    }
                    f.write_str(&self.nodes[self.edges[e].source])?;
                }
                f.write_str(")")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Term {
    name: String,
    repressed: bool,
}

struct Line {
    number: usize,
    name: String,
    groups: Vec<Vec<Term>>,
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '.'
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or_else(|| self.chars.len() + 1, |c| c.0 + 1)
    }

    fn error(&self, message: impl Into<String>) -> NetworkError {
        NetworkError::Syntax { line: self.line, column: self.column(), message: message.into() }
    }

    fn name(&mut self) -> Result<String, NetworkError> {
        let start = self.pos;
        while self.peek().is_some_and(is_name_char) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a node name"));
        }
        Ok(self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn term(&mut self) -> Result<Term, NetworkError> {
        self.skip_ws();
        let repressed = self.peek() == Some('~');
        if repressed {
            self.pos += 1;
            self.skip_ws();
        }
        Ok(Term { name: self.name()?, repressed })
    }
}

fn parse_line(number: usize, text: &str) -> Result<Line, NetworkError> {
    let mut cur = Cursor {
        chars: text.chars().enumerate().collect(),
        pos: 0,
        line: number,
    };
    cur.skip_ws();
    let name = cur.name()?;
    cur.skip_ws();
    if cur.peek() != Some(':') {
        return Err(cur.error("expected `:` after node name"));
    }
    cur.pos += 1;
    let mut groups = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('(') => {
                cur.pos += 1;
                let mut group = alloc::vec![cur.term()?];
                loop {
                    cur.skip_ws();
                    match cur.peek() {
                        Some('+') => {
                            cur.pos += 1;
                            group.push(cur.term()?);
                        }
                        Some(')') => {
                            cur.pos += 1;
                            break;
                        }
                        _ => return Err(cur.error("expected `+` or `)`")),
                    }
                }
                groups.push(group);
            }
            Some(c) if c == '~' || is_name_char(c) => groups.push(alloc::vec![cur.term()?]),
            Some(c) => return Err(cur.error(alloc::format!("unexpected `{c}`"))),
        }
    }
    Ok(Line { number, name, groups })
}

/// Parse the network text format.
///
/// One line per node, `NAME : GROUP GROUP …`, where juxtaposed groups are
/// multiplied, a group is `(TERM + TERM …)` or a bare `TERM`, and a term is
/// `NAME` (activation) or `~NAME` (repression). `#` starts a comment.
pub fn parse_network(text: &str) -> Result<RegulatoryNetwork, NetworkError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        lines.push(parse_line(i + 1, body)?);
    }
    if lines.is_empty() {
        return Err(NetworkError::NoNodes);
    }
    let mut nodes: Vec<String> = Vec::new();
    for line in &lines {
        if nodes.contains(&line.name) {
            return Err(NetworkError::DuplicateNode { line: line.number, name: line.name.clone() });
        }
        nodes.push(line.name.clone());
    }
    let mut edges: Vec<Interaction> = Vec::new();
    let mut logic = Vec::new();
    for (target, line) in lines.iter().enumerate() {
        if line.groups.is_empty() {
            return Err(NetworkError::EmptyLogic { line: line.number, name: line.name.clone() });
        }
        let mut groups = Vec::new();
        for group in &line.groups {
            let mut terms = Vec::new();
            for term in group {
                let source = nodes.iter().position(|n| *n == term.name).ok_or_else(|| {
                    NetworkError::UnknownSource { line: line.number, name: term.name.clone() }
                })?;
                if edges.iter().any(|e| e.source == source && e.target == target) {
                    return Err(NetworkError::DuplicateEdge {
                        line: line.number,
                        from: term.name.clone(),
                        target: line.name.clone(),
                    });
                }
                let sign = if term.repressed { Sign::Repression } else { Sign::Activation };
                terms.push(edges.len());
                edges.push(Interaction { source, target, sign });
            }
            groups.push(terms);
        }
        logic.push(groups);
    }
    RegulatoryNetwork::new(nodes, edges, logic)
}

impl core::str::FromStr for RegulatoryNetwork {
    type Err = NetworkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_network(s)
    }
}
