//! Build affine Weyl group elements from generator words and read off their
//! Shi coefficient vectors, their length by two independent routes, and the
//! admitted vector extracted from the coefficients.
//!
//! Generator alphabet: 0 is the affine reflection through the highest short
//! root at level 1; 1..=rank are the simple reflections.
//!
//! Run with: cargo run --example shi_vectors

use shi_variety::shi::lambda_extract;
use shi_variety::weyl::element_of_word;
use shi_variety::{CartanType, RootSystem};

fn tuple(v: &[i64]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(", "))
}

fn main() {
    let rs = RootSystem::new(CartanType::new('A', 2).unwrap()).unwrap();
    let names: Vec<String> = (0..rs.num_positive_roots())
        .map(|i| rs.root_name(i))
        .collect();
    println!("A2 coefficient order: {}", names.join(", "));
    println!();

    let words: &[&[usize]] = &[&[], &[0], &[1, 0, 1], &[0, 1, 2, 0], &[1, 2, 1, 0, 1, 2]];
    for word in words {
        let w = element_of_word(&rs, word).unwrap();
        let k = w.shi_vector(&rs).unwrap();
        let by_sum = w.length_from_shi(&rs).unwrap();
        let by_bfs = w.length_bfs(&rs, word.len()).unwrap();
        let lambda = lambda_extract(&rs, &k).unwrap();
        println!(
            "word {:<19} k = {:<13} length = {} (coefficient sum) = {} (graph distance)",
            format!("{word:?}"),
            tuple(&k),
            by_sum,
            by_bfs
        );
        println!("{:>25} lambda = {}", "", tuple(lambda.coords()));
    }

    // a pure translation: coefficients are exactly the coroot pairings
    let tau = shi_variety::weyl::translation_element(&rs, &[2, -1]);
    println!();
    println!(
        "translation by 2a1 - a2: k = {}, length = {}",
        tuple(&tau.shi_vector(&rs).unwrap()),
        tau.length_from_shi(&rs).unwrap()
    );
}
