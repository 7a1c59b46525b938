//! Heavy-hex coupling maps: the 127-qubit preset and the generated family.
//!
//! ```text
//! cargo run --example heavy_hex_graph
//! ```

use gsbench::enumerate::enumerate_unit_cells;
use gsbench::{build_heavy_hex, two_color, Graph};

fn describe(label: &str, g: &Graph) {
    let coloring = two_color(g);
    let sizes: Vec<usize> = coloring.classes().iter().map(Vec::len).collect();
    println!(
        "{label:>14}: {:>3} qubits, {:>3} couplers, max degree {}, color classes {:?}, {} unit cells",
        g.n(),
        g.edges().len(),
        g.max_degree(),
        sizes,
        enumerate_unit_cells(g).len()
    );
}

fn main() -> gsbench::Result<()> {
    for d in [3, 5, 7] {
        describe(&format!("heavy-hex d={d}"), &build_heavy_hex(d)?);
    }
    let eagle = Graph::preset("heavy-hex-127")?;
    describe("heavy-hex-127", &eagle);

    // the graph document format used by --graph
    let doc = serde_json::to_string(&build_heavy_hex(3)?.to_document())?;
    println!("\nd=3 as a graph document ({} bytes): {}...", doc.len(), &doc[..80.min(doc.len())]);
    Ok(())
}
