//! Builds the deterministic scale-free graph and prints its degree profile.
//!
//! `cargo run --example scale_free_network -- [iterations] [out.edges]`

use std::collections::BTreeMap;
use std::fs::File;
use std::io::BufWriter;

use syncagents::*;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let k: u32 = args.next().map(|a| a.parse().expect("iterations")).unwrap_or(4);

    for i in 0..=k {
        let g = deterministic_scale_free(i)?;
        println!("k={i}: {}", g.describe());
    }

    let g = deterministic_scale_free(k)?;
    let mut histogram = BTreeMap::new();
    for d in g.degrees() {
        *histogram.entry(d).or_insert(0usize) += 1;
    }
    println!("degree  count");
    for (d, c) in histogram.iter().rev() {
        println!("{d:6}  {c:5}");
    }
    if let Some(levels) = g.levels() {
        println!("creation rounds 0..={}", levels.iter().max().unwrap());
    }

    if let Some(path) = args.next() {
        save_adjacency(&g, BufWriter::new(File::create(&path)?))?;
        println!("wrote {path}");
    }
    Ok(())
}
