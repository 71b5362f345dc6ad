//! Recovers C-matrices without any matrix recurrence by running the
//! Y-dynamics in the tropical semifield, then compares against the engine.
//!
//! The coefficients start as the unit monomials y_1..y_n; each mutation
//! applies the Y-rule with tropical addition (componentwise minimum of
//! exponent vectors). The exponent vector of y_{j;t} is exactly the j-th
//! c-vector, so the two computations must agree to the last digit.
//!
//! ```bash
//! cargo run --example tropical_oracle
//! ```

use tropdual::{tropical_y_walk, walk_matrices, words_up_to_depth, ExchangeMatrix};

fn main() {
    let b = ExchangeMatrix::from_i64(&[[0, 2], [-1, 0]]).unwrap();

    let word = "1,2,1".parse().unwrap();
    let from_semifield = tropical_y_walk(&b, &word).unwrap();
    let from_engine = walk_matrices(&b, &word).unwrap().c;
    println!("tropical Y-walk at {word}: {from_semifield}");
    println!("engine C-matrix at {word}: {from_engine}");
    assert_eq!(from_semifield, from_engine);

    // Exhaustive agreement over every word up to depth 8.
    let mut cases = 0;
    for w in words_up_to_depth(b.size(), 8) {
        assert_eq!(
            tropical_y_walk(&b, &w).unwrap(),
            walk_matrices(&b, &w).unwrap().c,
            "disagreement at {w}"
        );
        cases += 1;
    }
    println!("oracle agreement on all {cases} words up to depth 8");
}
