//! Construct root systems and inspect their exact data: positive roots in
//! simple-root coordinates, heights, dual heights, squared norms, coroots,
//! and the Cartan matrix.
//!
//! Run with: cargo run --example build_root_system

use shi_variety::linalg::qstr;
use shi_variety::{CartanType, RootSystem};

fn show(letter: char, rank: usize) {
    let rs = RootSystem::new(CartanType::new(letter, rank).unwrap()).unwrap();
    println!("== {letter}{rank} ==");
    println!(
        "{} positive roots, Weyl order {}, weight lattice index {}",
        rs.num_positive_roots(),
        rs.cartan_type().weyl_order(),
        rs.cartan_type().weight_lattice_index()
    );

    println!("Cartan matrix:");
    for row in rs.cartan() {
        println!("  {row:?}");
    }

    println!(
        "{:<12} {:<14} {:>6} {:>6} {:>6}",
        "root", "coords", "height", "|.|^2", "dual"
    );
    for i in 0..rs.num_positive_roots() {
        println!(
            "{:<12} {:<14} {:>6} {:>6} {:>6}",
            rs.root_name(i),
            format!("{:?}", rs.root(i)),
            rs.height(i),
            qstr(rs.norm_sq(i)),
            rs.dual_height(i),
        );
    }

    let theta = rs.highest_short_root();
    println!(
        "highest short root: {} (dual height {})",
        rs.root_name(theta),
        rs.dual_height(theta)
    );
    println!();
}

fn main() {
    show('A', 3);
    show('B', 2);
    show('G', 2);
}
