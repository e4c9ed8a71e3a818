//! Class rewrites and the polynomial relations they carry.
//!
//! cargo run --example transforms

use oddinv::oracle::build_bucket_table;
use oddinv::transforms::{self, TransformResult};
use oddinv::{ClassSpec, Interval, Population};

fn report(label: &str, c: &ClassSpec, r: &TransformResult) {
    let table = build_bucket_table(c.n()).unwrap();
    println!("{label}: {c}  ->  {}", r.new_spec);
    println!("  factor {} reciprocal {} populations {:?}", r.factor, r.reciprocal, r.population_map);
    for pop in [Population::FullSn, Population::ChessEven, Population::ChessOdd] {
        let Some(target) = r.corresponding_population(pop) else { continue };
        let old = table.signed_poly(c, pop).unwrap();
        let predicted = r.predict_old(&table.signed_poly(&r.new_spec, target).unwrap());
        println!("  {:<3} {old}  {}", pop.flag(), if old == predicted { "holds" } else { "FAILS" });
    }
}

fn main() {
    let c = ClassSpec::from_lists(7, &[1, 2, 3], &[6]).unwrap();
    report("right ascent shift", &c, &transforms::shift_right_ascent(&c, 1, 1).unwrap());

    let c = ClassSpec::from_lists(7, &[4], &[1]).unwrap();
    report("left ascent shift", &c, &transforms::shift_left_ascent(&c, 3, 0).unwrap());

    let c = ClassSpec::from_lists(7, &[], &[2, 3, 4]).unwrap();
    report("right descent shift", &c, &transforms::shift_right_descent(&c, 2, 1).unwrap());

    let c = ClassSpec::from_lists(6, &[5], &[2, 3]).unwrap();
    report("reversal", &c, &transforms::reverse_descent_component(&c, Interval::new(2, 3).unwrap()).unwrap());

    let c = ClassSpec::from_lists(6, &[1], &[3, 5]).unwrap();
    report("complement", &c, &transforms::complement(&c));

    let c = ClassSpec::from_lists(7, &[1], &[2, 3]).unwrap();
    report("mixed shift (conjectured)", &c, &transforms::conjectured_mixed_shift(&c, 1, 1).unwrap());
}
