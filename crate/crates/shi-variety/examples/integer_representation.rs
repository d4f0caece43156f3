//! The integer representation of the affine Weyl group on coefficient
//! vectors: each generator becomes an integer affine map on Z^m, composition
//! is matrix composition, and applying the map to a coefficient vector
//! matches composing the group elements.
//!
//! Run with: cargo run --example integer_representation

use shi_variety::phirep::{phi_rep, reflection_map};
use shi_variety::weyl::element_of_word;
use shi_variety::{CartanType, RootSystem};

fn main() {
    let rs = RootSystem::new(CartanType::new('A', 2).unwrap()).unwrap();
    let names: Vec<String> = (0..rs.num_positive_roots())
        .map(|i| rs.root_name(i))
        .collect();
    println!("A2 coefficient order: {}", names.join(", "));

    // the three finite reflections and the affine generator as integer maps
    for (label, alpha, level) in [
        ("s_{a1} level 0", 0, 0),
        ("s_{a2} level 0", 1, 0),
        ("s_{a1+a2} level 1", 2, 1),
    ] {
        let f = reflection_map(&rs, alpha, level).unwrap();
        println!("{label}: offset {:?}, matrix rows:", f.offset());
        for row in f.linear() {
            println!("  {row:?}");
        }
    }

    // the map of a word is the composite of the generator maps, and it
    // transports coefficient vectors exactly
    let w = element_of_word(&rs, &[0, 1]).unwrap();
    let u = element_of_word(&rs, &[2, 0, 1]).unwrap();
    let f = phi_rep(&rs, &w).unwrap();
    let image = f.apply(&u.shi_vector(&rs).unwrap());
    let direct = w.compose(&u).shi_vector(&rs).unwrap();
    println!();
    println!("F(w) k(u)  = {image:?}");
    println!("k(w u)     = {direct:?}");
    assert_eq!(image, direct);
}
