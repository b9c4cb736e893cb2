//! Crystal graph fragments `x --i--> f_i x` on a coordinate box, as DOT.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cartan::Word;
use crate::crystal::CrystalElement;
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_CAP: u64 = 100_000;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphOptions {
    pub radius: i64,
    /// Also draw edges leaving the box, adding their targets as extra vertices.
    pub frontier: bool,
    pub vertex_cap: u64,
}

impl Default for GraphOptions {
    fn default() -> Self {
        GraphOptions {
            radius: 1,
            frontier: false,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub letter: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    pub word: Word,
    /// z-coordinates; box points first in lexicographic order, then frontier points.
    pub vertices: Vec<Vec<i64>>,
    pub in_box: usize,
    pub edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.from == v).count()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph crystal {{");
        let _ = writeln!(s, "  // word {}", self.word);
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for (k, z) in self.vertices.iter().enumerate() {
            let label = z.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
            if k < self.in_box {
                let _ = writeln!(s, "  v{k} [label=\"({label})\"];");
            } else {
                let _ = writeln!(s, "  v{k} [label=\"({label})\", style=dashed];");
            }
        }
        for e in &self.edges {
            let color = PALETTE[(e.letter - 1) % PALETTE.len()];
            let _ = writeln!(
                s,
                "  v{} -> v{} [label=\"{}\", color=\"{color}\", fontcolor=\"{color}\"];",
                e.from, e.to, e.letter
            );
        }
        s.push_str("}\n");
        s
    }
}

fn box_index(z: &[i64], r: i64) -> Option<usize> {
    let side = 2 * r + 1;
    let mut idx = 0usize;
    for &c in z {
        if c.abs() > r {
            return None;
        }
        idx = idx * side as usize + (c + r) as usize;
    }
    Some(idx)
}

/// The `f_i`-edges of the cellular crystal on `word` restricted to `[-r, r]^l`.
pub fn crystal_graph(word: &Word, opts: GraphOptions) -> Result<CrystalGraph> {
    if opts.radius < 0 {
        return Err(Error::Parse(format!("negative radius {}", opts.radius)));
    }
    let l = word.len() as u32;
    let side = (2 * opts.radius + 1) as u128;
    let count = side.checked_pow(l).unwrap_or(u128::MAX);
    if count > opts.vertex_cap as u128 {
        return Err(Error::BoxTooLarge {
            vertices: count,
            cap: opts.vertex_cap,
        });
    }
    let count = count as usize;
    let mut letters: Vec<usize> = word.letters().to_vec();
    letters.sort_unstable();
    letters.dedup();

    let r = opts.radius;
    let mut vertices = Vec::with_capacity(count);
    let mut z = vec![-r; word.len()];
    for _ in 0..count {
        vertices.push(z.clone());
        for c in z.iter_mut().rev() {
            if *c < r {
                *c += 1;
                break;
            }
            *c = -r;
        }
    }

    let mut extra: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut extra_list = Vec::new();
    let mut edges = Vec::new();
    for (k, v) in vertices.iter().enumerate() {
        let x = CrystalElement::new(word.clone(), v.clone())?;
        for &i in &letters {
            let y = x.f_tilde(i)?;
            let to = match box_index(y.z(), r) {
                Some(t) => t,
                None if opts.frontier => {
                    let next = count + extra_list.len();
                    *extra.entry(y.z().to_vec()).or_insert_with(|| {
                        extra_list.push(y.z().to_vec());
                        next
                    })
                }
                None => continue,
            };
            edges.push(Edge {
                from: k,
                to,
                letter: i,
            });
        }
    }
    vertices.extend(extra_list);
    Ok(CrystalGraph {
        word: word.clone(),
        vertices,
        in_box: count,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanDatum;

    fn word(d: &str, w: &str) -> Word {
        let datum: CartanDatum = d.parse().unwrap();
        Word::parse(&datum, w).unwrap()
    }

    #[test]
    fn single_factor_path() {
        let g = crystal_graph(
            &word("A1", "1"),
            GraphOptions {
                radius: 2,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert_eq!(g.edges.len(), 4);
        assert!(g.edges.iter().all(|e| e.to + 1 == e.from && e.letter == 1));
    }

    #[test]
    fn radius_zero() {
        let g = crystal_graph(
            &word("A2", "121"),
            GraphOptions {
                radius: 0,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn frontier_gives_full_out_degree() {
        let g = crystal_graph(
            &word("A2", "121"),
            GraphOptions {
                radius: 1,
                frontier: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g.in_box, 27);
        assert!((0..g.in_box).all(|v| g.out_degree(v) == 2));
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("style=dashed"));
    }

    #[test]
    fn cap_enforced() {
        let err = crystal_graph(
            &word("A3", "121321"),
            GraphOptions {
                radius: 10,
                frontier: false,
                vertex_cap: 1000,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::BoxTooLarge { .. }));
    }
}
