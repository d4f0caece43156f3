//! Run the full verification battery over a range of types: every meet and
//! join exists, both semidistributive laws hold, every cover edge is a unit
//! increment realized by a reflection, the poset is the weak-order interval
//! below its top element, and the integer representation commutes with the
//! embedding on random samples.
//!
//! Run with: cargo run --example verify_structure

use shi_variety::cli::check_diagram;
use shi_variety::components::{
    build_poset, check_cover_geometry, check_lattice, check_semidistributive,
    check_weak_order_interval, enumerate_admitted_bfs,
};
use shi_variety::{CartanType, RootSystem};

fn main() {
    for (letter, rank) in [('A', 2), ('A', 3), ('B', 2), ('B', 3), ('C', 3), ('G', 2)] {
        let rs = RootSystem::new(CartanType::new(letter, rank).unwrap()).unwrap();
        let poset = build_poset(&rs, enumerate_admitted_bfs(&rs).unwrap()).unwrap();
        println!("== {letter}{rank}: {} elements ==", poset.len());

        let mut reports = vec![
            check_lattice(&poset),
            check_semidistributive(&poset),
            check_cover_geometry(&rs, &poset).unwrap(),
            check_diagram(&rs, 100).unwrap(),
        ];
        match check_weak_order_interval(&rs, &poset) {
            Ok(r) => reports.push(r),
            Err(e) => println!("  interval: skipped ({e})"),
        }

        for r in reports {
            let verdict = if r.passed() { "pass" } else { "FAIL" };
            println!("  {:<18} {verdict} ({} examined)", r.name, r.checked);
            for w in &r.witnesses {
                println!("    witness: {w}");
            }
        }
    }
}
