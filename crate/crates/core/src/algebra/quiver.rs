use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A path: a trivial path at a vertex, or arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

/// Finite quiver with 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize, String)>) -> Result<Self> {
        for (s, t, _) in &arrows {
            for &v in [s, t] {
                if v >= vertices {
                    return Err(Error::IndexOutOfRange { index: v, len: vertices });
                }
            }
        }
        let arrows = arrows.into_iter().map(|(source, target, label)| Arrow { source, target, label }).collect();
        Ok(Quiver { vertices, arrows })
    }

    /// `1 ⇉ 2` with arrows `a`, `b`.
    pub fn kronecker() -> Self {
        Quiver::new(2, vec![(0, 1, "a".into()), (0, 1, "b".into())]).unwrap()
    }

    /// `1 → 2`.
    pub fn a2() -> Self {
        Quiver::new(2, vec![(0, 1, "a".into())]).unwrap()
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn source(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.arrows[a[0]].source,
        }
    }

    pub fn target(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.arrows[*a.last().unwrap()].target,
        }
    }

    /// `p·q`: first `q`, then `p`.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.source(p) != self.target(q) {
            return None;
        }
        Some(match (p, q) {
            (Path::Trivial(_), _) => q.clone(),
            (_, Path::Trivial(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => Path::Arrows([b.clone(), a.clone()].concat()),
        })
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.vertices];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == self.vertices
    }

    /// All paths: trivial ones by vertex, then by length and arrow indices.
    pub fn paths(&self) -> Result<Vec<Path>> {
        if !self.is_acyclic() {
            return Err(Error::CyclicQuiver);
        }
        let mut out: Vec<Path> = (0..self.vertices).map(Path::Trivial).collect();
        let mut layer: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        while !layer.is_empty() {
            out.extend(layer.iter().cloned().map(Path::Arrows));
            let mut next = Vec::new();
            for p in &layer {
                let end = self.arrows[*p.last().unwrap()].target;
                for (b, arrow) in self.arrows.iter().enumerate() {
                    if arrow.source == end {
                        let mut q = p.clone();
                        q.push(b);
                        next.push(q);
                    }
                }
            }
            next.sort();
            layer = next;
        }
        Ok(out)
    }

    /// Trivial paths are `e1, e2, …`; longer paths are written in
    /// composition order, `b*a` for "first `a`, then `b`".
    pub fn path_name(&self, p: &Path) -> String {
        match p {
            Path::Trivial(v) => format!("e{}", v + 1),
            Path::Arrows(a) => a.iter().rev().map(|&x| self.arrows[x].label.as_str()).collect::<Vec<_>>().join("*"),
        }
    }
}
