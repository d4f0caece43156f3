//! Export the Hasse diagram of a component poset as Graphviz DOT, with cover
//! edges labeled by the reflection that realizes them.
//!
//! Run with: cargo run --example export_dot
//! Render with: cargo run --example export_dot | dot -Tsvg > b3.svg

use shi_variety::cli::{cmd_enumerate, Format, Method};
use shi_variety::{CartanType, RootSystem};

fn main() {
    let rs = RootSystem::new(CartanType::new('B', 3).unwrap()).unwrap();
    let out = cmd_enumerate(&rs, Method::Bfs, Format::Dot).unwrap();
    print!("{}", out.stdout);
}
