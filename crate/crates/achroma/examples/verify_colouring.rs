//! Parsing the two file formats and checking a colouring: proper means no
//! positively-joined equal pair, complete means proper with every colour pair
//! meeting in every possible sign. Inferred colourings record a magnitude and
//! a flag per vertex and stand for a colouring of some switch of the graph.

use achroma::colouring::{is_complete, is_inferred_complete, is_proper, realize, reduce};
use achroma::format::{parse_colouring, parse_graph, serialize_graph, ColouringFile};

const GRAPH: &str = "\
# five vertices, mixed signature
sg 5
0 1 -
0 2 +
1 2 +
1 4 -
2 3 +
2 4 +
3 4 +
";

const PLAIN: &str = "\
col 4
0 +1
1 +2
2 -1
3 -2
4 +2
";

const INFERRED: &str = "\
col 4
0 1+
1 2+
2 1-
3 2-
4 2+
";

fn main() -> achroma::Result<()> {
    let g = parse_graph(GRAPH)?;
    println!("parsed graph:\n{}", serialize_graph(&g));

    let ColouringFile::Plain(phi) = parse_colouring(PLAIN)? else {
        unreachable!("plain tokens parse as a plain colouring");
    };
    println!("proper: {}", is_proper(&g, &phi)?);
    println!("complete: {}", is_complete(&g, &phi)?);

    // The reduction maps vertices to their colour magnitudes; completeness
    // means it carries every type the palette allows.
    let reduced = reduce(&g, &phi)?;
    println!("reduction has {} classes and {} types", reduced.order(), reduced.size());

    let ColouringFile::Inferred(gamma) = parse_colouring(INFERRED)? else {
        unreachable!("flagged tokens parse as an inferred colouring");
    };
    println!("inferred complete: {}", is_inferred_complete(&g, &gamma)?);
    let (switched, plain) = realize(&g, &gamma)?;
    assert!(is_complete(&switched, &plain)?);
    println!("realized on the switched graph:\n{}", serialize_graph(&switched));
    Ok(())
}
