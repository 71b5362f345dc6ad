//! Walks a mutation word from an initial exchange matrix and prints the
//! pattern data at the endpoint: the mutated exchange matrix, the C- and
//! G-matrices, and the F-polynomials.
//!
//! ```bash
//! cargo run --example walk_basics
//! ```

use tropdual::{walk, ExchangeMatrix, MutationWord};

fn main() {
    // Rank-3 initial exchange matrix (a linear quiver) with its canonical
    // skew-symmetrizer computed on construction.
    let b = ExchangeMatrix::from_i64(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]).unwrap();
    println!("initial B = {b}, symmetrizer D = {:?}", b.symmetrizer());

    let word: MutationWord = "1,2,3,1".parse().unwrap();
    let point = walk(&b, &word).unwrap();

    println!("\nafter the word {word}:");
    println!("  B_t = {}", point.b_t);
    println!("  C   = {}", point.c);
    println!("  G   = {}", point.g);
    for (j, f) in point.f.iter().enumerate() {
        println!("  F_{} = {f}", j + 1);
    }

    // Columns of C are c-vectors, columns of G are g-vectors; both matrices
    // are unimodular at every vertex, and the initial point is the identity.
    let root = walk(&b, &MutationWord::empty()).unwrap();
    assert!(root.c.is_identity() && root.g.is_identity());
    assert!(root.f.iter().all(|f| f.is_one()));
    println!("\nroot point is (B, I, I, 1..1), as it must be");
}
