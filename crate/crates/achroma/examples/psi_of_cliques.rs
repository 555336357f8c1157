//! Closed-form achromatic numbers of signed complete graphs, checked against
//! the exact solver: n for all-positive, 2 for all-negative (n >= 5), and 3
//! once a non-empty matching is removed from the all-negative clique.

use achroma::formulas::{psi_complete, CompleteVariant};
use achroma::graph::{complete_graph, Sign};
use achroma::solver::{psi, SearchOptions};

fn main() -> achroma::Result<()> {
    let opts = SearchOptions::default();

    println!("all-positive cliques");
    for n in 1..=7 {
        let g = complete_graph(n, Sign::Positive);
        let solved = psi(&g, &opts)?;
        let formula = psi_complete(n, CompleteVariant::AllPositive)?;
        println!("  psi((K_{n}, +)) = {} (formula {formula})", solved.value);
        assert_eq!(solved.value, formula);
    }

    println!("all-negative cliques");
    for n in 5..=7 {
        let g = complete_graph(n, Sign::Negative);
        let solved = psi(&g, &opts)?;
        let formula = psi_complete(n, CompleteVariant::AllNegative)?;
        println!("  psi((K_{n}, -)) = {} (formula {formula})", solved.value);
        assert_eq!(solved.value, formula);
    }

    println!("all-negative cliques minus a matching");
    for n in 5..=7 {
        for m in 1..=2 {
            let mut g = complete_graph(n, Sign::Negative);
            for i in 0..m {
                g.remove_edge(2 * i, 2 * i + 1)?;
            }
            let solved = psi(&g, &opts)?;
            let formula = psi_complete(n, CompleteVariant::NegativeMinusMatching(m))?;
            println!("  psi((K_{n} - M_{m}, -)) = {} (formula {formula})", solved.value);
            assert_eq!(solved.value, formula);
        }
    }

    println!("every value matches its closed form");
    Ok(())
}
