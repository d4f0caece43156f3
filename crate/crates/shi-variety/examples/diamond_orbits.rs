//! The diamond action of the affine Weyl group on admitted vectors: simple
//! reflections generate a single orbit, translations act trivially, and the
//! action composes like the group.
//!
//! Run with: cargo run --example diamond_orbits

use std::collections::BTreeSet;

use shi_variety::components::enumerate_admitted_bfs;
use shi_variety::phirep::{diamond_action, diamond_reflection};
use shi_variety::shi::zero_vector;
use shi_variety::weyl::{element_of_word, translation_element};
use shi_variety::{AdmittedVector, CartanType, RootSystem};

fn tuple(v: &[i64]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(", "))
}

fn main() {
    let rs = RootSystem::new(CartanType::new('B', 2).unwrap()).unwrap();
    let admitted = enumerate_admitted_bfs(&rs).unwrap();
    println!("B2 admitted set has {} vectors", admitted.len());

    // orbit of the zero vector under the simple diamond reflections
    let zero = zero_vector(&rs);
    let mut seen: BTreeSet<AdmittedVector> = BTreeSet::new();
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    println!(
        "orbit walk from {}:",
        tuple(seen.iter().next().unwrap().coords())
    );
    while let Some(lambda) = frontier.pop() {
        for i in 0..rs.rank() {
            let next = diamond_reflection(&rs, i, &lambda).unwrap();
            if seen.insert(next.clone()) {
                println!(
                    "  s_{{{}}} diamond {} = {}",
                    rs.root_name(i),
                    tuple(lambda.coords()),
                    tuple(next.coords())
                );
                frontier.push(next);
            }
        }
    }
    println!(
        "orbit size {} == admitted count {}",
        seen.len(),
        admitted.len()
    );

    // translations never move a vector
    let tau = translation_element(&rs, &[3, -2]);
    let lambda = admitted.last().unwrap();
    println!();
    println!(
        "translation by 3a1 - 2a2 fixes {}: {}",
        tuple(lambda.coords()),
        tuple(diamond_action(&rs, &tau, lambda).unwrap().coords())
    );

    // the action composes like the group
    let w1 = element_of_word(&rs, &[0, 1]).unwrap();
    let w2 = element_of_word(&rs, &[2, 0]).unwrap();
    let composed = diamond_action(&rs, &w1.compose(&w2), lambda).unwrap();
    let stepped = diamond_action(&rs, &w1, &diamond_action(&rs, &w2, lambda).unwrap()).unwrap();
    println!(
        "(w1 w2) diamond lambda = {} = w1 diamond (w2 diamond lambda) = {}",
        tuple(composed.coords()),
        tuple(stepped.coords())
    );
}
