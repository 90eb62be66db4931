//! Named graph families.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// A named family instance. `build` constructs the explicit graph (subject
/// to the 64-vertex cap); closed-form polynomial routes elsewhere accept the
/// same spec without the cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    /// K_{1,n}: one center, n leaves (order n+1).
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    /// K_{1,2,...,n}: one part of each size 1..=n.
    TriangularMultipartite(usize),
}

impl FamilySpec {
    pub fn complete(n: usize) -> Self {
        FamilySpec::Complete(n)
    }
    pub fn empty(n: usize) -> Self {
        FamilySpec::Empty(n)
    }
    pub fn path(n: usize) -> Self {
        FamilySpec::Path(n)
    }
    pub fn cycle(n: usize) -> Self {
        FamilySpec::Cycle(n)
    }
    pub fn star(n: usize) -> Self {
        FamilySpec::Star(n)
    }
    pub fn complete_multipartite(parts: Vec<usize>) -> Self {
        FamilySpec::CompleteMultipartite(parts)
    }
    pub fn triangular_multipartite(n: usize) -> Self {
        FamilySpec::TriangularMultipartite(n)
    }

    /// Vertex count of the instance (may exceed the explicit cap).
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n) => *n,
            FamilySpec::Star(n) => n + 1,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::TriangularMultipartite(n) => n * (n + 1) / 2,
        }
    }

    fn validate(&self) -> Result<()> {
        let positive = |x: usize, what: &str| {
            if x == 0 {
                Err(Error::Precondition(format!("{what} size must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            FamilySpec::Complete(n) | FamilySpec::Empty(n) | FamilySpec::Path(n) => {
                positive(*n, "family")
            }
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    Err(Error::Precondition("cycle needs at least 3 vertices".into()))
                } else {
                    Ok(())
                }
            }
            FamilySpec::Star(n) => positive(*n, "star leaf count"),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return Err(Error::Precondition("multipartite needs parts".into()));
                }
                for &p in parts {
                    positive(p, "part")?;
                }
                Ok(())
            }
            FamilySpec::TriangularMultipartite(n) => positive(*n, "part count"),
        }
    }

    /// Builds the explicit graph.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let order = self.order();
        if order > MAX_VERTICES {
            return Err(Error::SizeOverflow(format!(
                "{self:?} has order {order}, above the explicit cap {MAX_VERTICES}"
            )));
        }
        match self {
            FamilySpec::Empty(n) => Graph::empty(*n),
            FamilySpec::Complete(n) => {
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                Graph::new(*n, &edges)
            }
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
                Graph::new(*n, &edges)
            }
            FamilySpec::Cycle(n) => {
                let mut edges: Vec<_> = (1..*n).map(|v| (v - 1, v)).collect();
                edges.push((n - 1, 0));
                Graph::new(*n, &edges)
            }
            FamilySpec::Star(n) => {
                let edges: Vec<_> = (1..=*n).map(|v| (0, v)).collect();
                Graph::new(n + 1, &edges)
            }
            FamilySpec::CompleteMultipartite(parts) => build_multipartite(parts),
            FamilySpec::TriangularMultipartite(n) => {
                let parts: Vec<usize> = (1..=*n).collect();
                build_multipartite(&parts)
            }
        }
    }

    /// Parses CLI shorthand like `star:5`, `cmp:3,3`, `tri:4`.
    pub fn parse(s: &str) -> Result<FamilySpec> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            msg: msg.to_string(),
        };
        let (kind, params) = s
            .split_once(':')
            .ok_or_else(|| bad("family spec must look like kind:params"))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad("family parameters must be positive integers"))?;
        let single = || -> Result<usize> {
            if nums.len() == 1 {
                Ok(nums[0])
            } else {
                Err(bad("this family takes one parameter"))
            }
        };
        Ok(match kind {
            "complete" | "k" => FamilySpec::Complete(single()?),
            "empty" | "e" => FamilySpec::Empty(single()?),
            "path" | "p" => FamilySpec::Path(single()?),
            "cycle" | "c" => FamilySpec::Cycle(single()?),
            "star" | "s" => FamilySpec::Star(single()?),
            "cmp" | "multipartite" => FamilySpec::CompleteMultipartite(nums),
            "tri" | "triangular" => FamilySpec::TriangularMultipartite(single()?),
            other => return Err(bad(&format!("unknown family kind {other:?}"))),
        })
    }
}

fn build_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut edges = Vec::new();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut acc = 0;
    for &p in parts {
        offsets.push(acc);
        acc += p;
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in offsets[i]..offsets[i] + parts[i] {
                for v in offsets[j]..offsets[j] + parts[j] {
                    edges.push((u, v));
                }
            }
        }
    }
    Graph::new(n, &edges)
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                write!(f, "cmp:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            FamilySpec::TriangularMultipartite(n) => write!(f, "tri:{n}"),
        }
    }
}
