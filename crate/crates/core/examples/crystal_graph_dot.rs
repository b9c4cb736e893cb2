//! Writes a crystal-graph fragment in DOT. Pipe into `dot -Tsvg`.

use cellular_crystals::graph::{crystal_graph, GraphOptions};
use cellular_crystals::{CartanDatum, Word};

fn main() -> cellular_crystals::Result<()> {
    let a2: CartanDatum = "A2".parse()?;
    let word = Word::parse(&a2, "121")?;
    let g = crystal_graph(
        &word,
        GraphOptions {
            radius: 1,
            frontier: true,
            ..Default::default()
        },
    )?;
    eprintln!(
        "{} box vertices, {} frontier vertices, {} edges",
        g.in_box,
        g.vertices.len() - g.in_box,
        g.edges.len()
    );
    print!("{}", g.to_dot());
    Ok(())
}
