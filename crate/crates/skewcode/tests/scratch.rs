use skewcode::construction::evaluate_construction;
use skewcode::distance::DistanceBudget;
use skewcode::doublecode::{Components, DoubleCodeSpec};
use skewcode::field::Field;
use skewcode::gray::GrayMatrix;
use skewcode::skewpoly::parse_poly;
use std::sync::Arc;

#[test]
fn probe_construction1() {
    let f = Arc::new(Field::with_default_modulus(3, 3).unwrap());
    let pp = |s: &str| parse_poly(&f, 1, s).unwrap();
    let comp = Components {
        g_v: pp("x^3 + t^17*x^2 + t^22*x + t^25"),
        g_vp: pp("x^3 + t^19*x^2 + t^21*x + 1"),
        l_v: pp("x^2 + t^2*x + t"),
        l_vp: pp("x^2 + t^5*x + t^2"),
        h_v: pp("x + t^25"),
        h_vp: pp("x + t^19"),
    };
    let code = DoubleCodeSpec::from_components(f.clone(), 1, 6, 3, &comp).validate().unwrap();
    let n = GrayMatrix::default_for(&f).unwrap();
    let t0 = std::time::Instant::now();
    let out = evaluate_construction(&code, &n, &DistanceBudget::with_ops(2_000_000_000)).unwrap();
    let dp = out.d_plain.unwrap();
    let db = out.d_built.unwrap();
    println!("plain: k={} d=[{},{}] exact={}", out.k_plain, dp.lower, dp.upper, dp.exact);
    println!("built: k={} d=[{},{}] exact={} elapsed={:?}", out.k_built, db.lower, db.upper, db.exact, t0.elapsed());
}
