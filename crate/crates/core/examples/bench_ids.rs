use dimdata::lp::{lp_poly, LpKind};
use std::time::Instant;
fn main() {
    for n in 6..=11 {
        let t = Instant::now();
        let a = lp_poly(LpKind::A, n);
        println!("a_{n}: {} terms in {:.2?}", a.num_terms(), t.elapsed());
    }
    for n in 5..=6 {
        let t = Instant::now();
        let b = lp_poly(LpKind::B, n);
        println!("b_{n}: {} terms in {:.2?}", b.num_terms(), t.elapsed());
    }
}
