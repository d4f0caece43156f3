//! Enumerate the admitted vectors of several types by pruned graph search,
//! cross-check against the box filter where the box is small, and compare
//! both counts with the closed-form oracle |W| / [P : Q].
//!
//! Run with: cargo run --example enumerate_components

use std::collections::BTreeSet;

use shi_variety::components::{count_oracle, enumerate_admitted_bfs, enumerate_admitted_filter};
use shi_variety::{CartanType, RootSystem};

fn main() {
    println!(
        "{:<6} {:>8} {:>8} {:>8}  agreement",
        "type", "bfs", "filter", "oracle"
    );
    for (letter, rank) in [
        ('A', 1),
        ('A', 2),
        ('A', 3),
        ('A', 4),
        ('B', 2),
        ('B', 3),
        ('C', 3),
        ('D', 4),
        ('G', 2),
        ('F', 4),
    ] {
        let rs = RootSystem::new(CartanType::new(letter, rank).unwrap()).unwrap();
        let bfs: BTreeSet<_> = enumerate_admitted_bfs(&rs).unwrap().into_iter().collect();
        let oracle = count_oracle(&rs);
        match enumerate_admitted_filter(&rs) {
            Ok(filtered) => {
                let filtered: BTreeSet<_> = filtered.into_iter().collect();
                let verdict = if filtered == bfs {
                    "sets equal"
                } else {
                    "MISMATCH"
                };
                println!(
                    "{:<6} {:>8} {:>8} {:>8}  {verdict}",
                    format!("{letter}{rank}"),
                    bfs.len(),
                    filtered.len(),
                    oracle
                );
            }
            Err(e) => {
                // the box filter refuses oversized boxes; graph search still runs
                println!(
                    "{:<6} {:>8} {:>8} {:>8}  filter skipped: {e}",
                    format!("{letter}{rank}"),
                    bfs.len(),
                    "-",
                    oracle
                );
            }
        }
        assert_eq!(bfs.len() as u64, oracle);
    }

    println!();
    let rs = RootSystem::new(CartanType::new('B', 2).unwrap()).unwrap();
    let names: Vec<String> = rs
        .display_order()
        .iter()
        .map(|&i| rs.root_name(i))
        .collect();
    println!(
        "B2 admitted vectors, coordinates on ({}):",
        names.join(", ")
    );
    for v in enumerate_admitted_bfs(&rs).unwrap() {
        println!("  {:?}", v.display_coords(&rs));
    }
}
