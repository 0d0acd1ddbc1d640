//! Regenerates the `K_{2^q}` certificate files.
//!
//! cargo run --release --example build_k2q_cache -- [DIR] [MAX_Q]

use std::path::PathBuf;

use interval_coloring::constructions::{certificate_text, certify_k2q, k2q_colors};
use interval_coloring::graph::{make_complete, Tag, VertexLabel};
use interval_coloring::solver::SolveBudget;

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/k2q").into()));
    let max_q: u32 = args.next().map_or(3, |s| s.parse().expect("MAX_Q must be a number"));
    std::fs::create_dir_all(&dir).expect("create output directory");
    for q in 1..=max_q {
        let k = 1usize << q;
        let g = make_complete(k)
            .and_then(|g| g.with_labels((0..k).map(|j| (j, VertexLabel::indexed(Tag::V, j as u32 + 1)))))
            .expect("clique");
        let budget = SolveBudget { max_nodes: u64::MAX, max_seconds: None };
        match certify_k2q(q, budget) {
            Ok(c) => {
                let path = dir.join(format!("q{q}.col"));
                std::fs::write(&path, certificate_text(&g, &c)).expect("write certificate");
                println!("q={q}: {} colors -> {}", k2q_colors(q), path.display());
            }
            Err(e) => {
                eprintln!("q={q}: {e}");
                std::process::exit(1);
            }
        }
    }
}
