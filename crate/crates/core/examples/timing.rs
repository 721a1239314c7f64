//! Single-threaded search times: `cargo run --release -p monodromy-core --example timing -- 6 7 8`.

use monodromy_core::enumerate::enumerate_fixed_sigma;
use monodromy_core::SearchOptions;

fn main() {
    for arg in std::env::args().skip(1) {
        let n: usize = arg.parse().expect("degree");
        let r = enumerate_fixed_sigma(n, &SearchOptions::default()).expect("degree in range");
        println!("n={n} fixed={} total={} {:.2?}", r.fixed_count, r.total_count, r.elapsed);
    }
}
