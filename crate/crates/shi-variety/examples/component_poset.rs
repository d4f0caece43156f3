//! Build the componentwise order on admitted vectors and walk its structure:
//! bottom, top, cover relations with their root labels, and meets and joins
//! of arbitrary pairs.
//!
//! Run with: cargo run --example component_poset

use shi_variety::components::{build_poset, enumerate_admitted_bfs};
use shi_variety::{CartanType, RootSystem};

fn tuple(v: &[i64]) -> String {
    let body: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", body.join(", "))
}

fn main() {
    let rs = RootSystem::new(CartanType::new('A', 3).unwrap()).unwrap();
    let poset = build_poset(&rs, enumerate_admitted_bfs(&rs).unwrap()).unwrap();

    let names: Vec<String> = rs
        .display_order()
        .iter()
        .map(|&i| rs.root_name(i))
        .collect();
    println!(
        "A3, {} elements, coordinates on ({})",
        poset.len(),
        names.join(", ")
    );
    for (i, v) in poset.elements().iter().enumerate() {
        println!("  [{i}] {}", tuple(&v.display_coords(&rs)));
    }

    println!("bottom = [{}], top = [{}]", poset.bottom(), poset.top());

    println!("cover relations (lower -> upper, incremented root):");
    for &(lo, hi) in poset.covers() {
        let lower = poset.element(lo).coords();
        let upper = poset.element(hi).coords();
        let alpha = (0..rs.num_positive_roots())
            .find(|&i| lower[i] != upper[i])
            .unwrap();
        println!("  [{lo}] -> [{hi}]  via {}", rs.root_name(alpha));
    }

    println!("all pairwise meets and joins:");
    for a in 0..poset.len() {
        for b in (a + 1)..poset.len() {
            let m = poset.meet(a, b).unwrap();
            let j = poset.join(a, b).unwrap();
            if !poset.leq(a, b) && !poset.leq(b, a) {
                println!("  [{a}] ^ [{b}] = [{m}],  [{a}] v [{b}] = [{j}]   (incomparable pair)");
            }
        }
    }
}
