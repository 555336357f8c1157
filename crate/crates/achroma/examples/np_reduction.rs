//! The hardness reduction: a signed graph whose achromatic number reaches
//! 2(N + k), N = (n + k)^2, exactly when the unsigned input graph has a
//! complete k-colouring. The forward lift is verified mechanically here.

use achroma::colouring::is_complete;
use achroma::families::{gen_np_reduction, np_forward_colouring};
use achroma::graph::{complete_graph, Sign};

fn main() -> achroma::Result<()> {
    // K_3 has the complete 3-colouring {1, 2, 3}.
    let g = complete_graph(3, Sign::Positive);
    let k = 3;
    let reduction = gen_np_reduction(&g, k)?;
    let n = g.order();
    let big = (n + k) * (n + k);
    println!(
        "input order {n}, target palette {k}: reduction has order {} and size {}",
        reduction.order(),
        reduction.size()
    );
    assert_eq!(reduction.order(), n + k + 2 * big);

    let lifted = np_forward_colouring(&g, k, &[1, 2, 3])?;
    println!("lifted colouring uses {} colours", lifted.k());
    assert_eq!(lifted.k(), 2 * (big + k));
    assert!(is_complete(&reduction, &lifted)?);
    println!("the lift is a complete colouring, as the equivalence promises");

    // A graph without a complete 2-colouring: K_3 needs three colours, and
    // the reduction's threshold moves accordingly.
    let small = gen_np_reduction(&g, 2)?;
    println!(
        "with k = 2 the reduction drops to order {} and threshold {}",
        small.order(),
        2 * ((n + 2) * (n + 2) + 2)
    );
    Ok(())
}
