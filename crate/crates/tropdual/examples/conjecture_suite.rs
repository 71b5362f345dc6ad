//! Runs the structural conjecture suite: constant term 1 and a dominating
//! top monomial for every F-polynomial, row-wise sign-coherence and
//! unimodularity of G, and the g-vector transformation rule under a change
//! of the initial seed.
//!
//! ```bash
//! cargo run --example conjecture_suite
//! ```

use tropdual::{analyze_f, verify_conjecture41, walk, words_up_to_depth, ExchangeMatrix};

fn main() {
    let b = ExchangeMatrix::from_i64(&[[0, 1, 0], [-1, 0, 1], [0, -1, 0]]).unwrap();

    // The F-polynomial structure at one vertex.
    let word = "1,2,3".parse().unwrap();
    let point = walk(&b, &word).unwrap();
    for (j, f) in point.f.iter().enumerate() {
        let analysis = analyze_f(f);
        println!(
            "F_{} = {f}  (constant term 1: {}, dominating monomial: {})",
            j + 1,
            analysis.constant_term_one,
            analysis.unique_max_monomial
        );
        assert!(analysis.constant_term_one && analysis.unique_max_monomial);
    }

    // Full suite over every word and direction up to depth 4.
    let mut verdicts = 0;
    for w in words_up_to_depth(b.size(), 4) {
        for k in 1..=b.size() {
            let verdict = verify_conjecture41(&b, k, &w);
            assert!(verdict.is_pass(), "k={k} word={w}: {verdict:?}");
            verdicts += 1;
        }
    }
    println!("\nconjecture suite: {verdicts} verdicts, all pass");
}
