//! Verifies the tropical duality identities relating G- and C-matrices
//! across the swaps B <-> -B^T and t0 <-> t, on the three rank-2 types and
//! a rank-3 quiver:
//!
//! ```text
//! (G_t^{B;t0})^T = (C_t^{-B^T;t0})^{-1}
//! C_t^{B;t0}     = (C_{t0}^{-B_t;t})^{-1}
//! (G_t^{B;t0})^T = C_{t0}^{B_t^T;t}
//! ```
//!
//! Every side is computed by an independent walk with transformed initial
//! data, and equality is exact.
//!
//! ```bash
//! cargo run --example duality_identities
//! ```

use tropdual::{verify_auxiliary, verify_theorem, words_up_to_depth, ExchangeMatrix};

fn main() {
    let cases = [
        ("A2", ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap()),
        ("B2", ExchangeMatrix::from_i64(&[[0, 2], [-1, 0]]).unwrap()),
        ("G2", ExchangeMatrix::from_i64(&[[0, 3], [-1, 0]]).unwrap()),
        ("A3", ExchangeMatrix::from_i64(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]).unwrap()),
    ];
    for (name, b) in &cases {
        let words = words_up_to_depth(b.size(), 6);
        let mut passes = 0;
        for w in &words {
            let theorem = verify_theorem(b, w);
            let auxiliary = verify_auxiliary(b, w);
            assert!(theorem.is_pass(), "{name} {w}: {:?}", theorem);
            assert!(auxiliary.is_pass(), "{name} {w}: {:?}", auxiliary);
            passes += 2;
        }
        println!("{name}: {passes} identity verdicts pass over {} words", words.len());
    }
}
