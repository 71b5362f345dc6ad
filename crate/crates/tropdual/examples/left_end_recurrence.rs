//! Moves the root of a pattern across an edge without recomputing the walk:
//! the left-end recurrence multiplies the C-matrix by an elementary factor
//! on the left, with the sign read off the inverse matrix.
//!
//! The verifier cross-checks the result against a fresh walk rooted on the
//! other side, and checks the sign-flip relation between the two roots.
//!
//! ```bash
//! cargo run --example left_end_recurrence
//! ```

use tropdual::{
    mutate_matrix, step_left, verify_step_left, walk_matrices, words_up_to_depth, ExchangeMatrix,
    MutationWord,
};

fn main() {
    let b = ExchangeMatrix::from_i64(&[[0, 1], [-1, 0]]).unwrap();
    let word: MutationWord = "2".parse().unwrap();
    let k = 1;

    let at_t = walk_matrices(&b, &word).unwrap();
    println!("C at word {word} seen from t0: {}", at_t.c);

    // Root moved across the edge labeled k, by the recurrence...
    let moved = step_left(&b, k, &at_t.c).unwrap();
    println!("same vertex seen from t1 = mu_{k}(t0): {moved}");

    // ...and by a fresh walk rooted at t1.
    let b1 = mutate_matrix(&b, k).unwrap();
    let direct = walk_matrices(&b1, &word.viewed_from_neighbor(k)).unwrap();
    assert_eq!(moved, direct.c);
    println!("fresh walk from t1 agrees: {}", direct.c);

    // Sweep both directions over all words up to depth 5.
    let mut verdicts = 0;
    for w in words_up_to_depth(b.size(), 5) {
        for k in 1..=b.size() {
            let verdict = verify_step_left(&b, k, &w);
            assert!(verdict.is_pass(), "k={k} word={w}: {verdict:?}");
            verdicts += 1;
        }
    }
    println!("\nleft-end recurrence verified: {verdicts} verdicts, all pass");
}
