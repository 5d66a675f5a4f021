use qid_core::verify::verify;
use qid_core::{AlphaMode, Mode, Params};
use std::time::Instant;

fn main() {
    for (id, p, mode) in [
        ("gf-main", Params::new(8).with_rs(1, -1).with_alpha(AlphaMode::Symbolic), Mode::SeriesExact),
        ("gf-main", Params::new(8).with_rs(1, -1).with_alpha(AlphaMode::Symbolic), Mode::RatPointEval),
        ("qde-membership", Params::new(0).with_n(6).with_rs(-2, 2).with_alpha(AlphaMode::Symbolic), Mode::SeriesExact),
        ("rogers-main", Params::new(8).with_rs(1, -1).with_alpha(AlphaMode::Symbolic), Mode::SeriesExact),
        ("mixed-main", Params::new(8).with_rs(1, -1).with_alpha(AlphaMode::Symbolic), Mode::SeriesExact),
        ("toperator-lemma", Params::new(8).with_k(4), Mode::SeriesExact),
        ("mixed-Fn", Params::new(8), Mode::SeriesExact),
        ("rogers-Fn", Params::new(8), Mode::SeriesExact),
        ("gf-cauchy-2phi1", Params::new(4).with_n(4).with_alpha(AlphaMode::Symbolic).with_points(25), Mode::RatPointEval),
        ("chu-vandermonde", Params::new(0).with_n(10), Mode::SeriesExact),
    ] {
        let t = Instant::now();
        let rep = verify(id, &p, mode).unwrap();
        println!("{:<22} {:<8} {:>8.2?}  {:?}", id, mode.label(), t.elapsed(), rep.status);
    }
}
