use logdamp::quadrature::weighted_power_integral;
fn main() {
    let theta = 0.25; let a = 2.0 * theta;
    for &t in &[1e4f64, 1e6] {
        let v = weighted_power_integral(t, a, 0.0, 1.0).unwrap();
        println!("a=0.5 t={t:e}: v={v:e} scaled={:e}", theta * v * t.powf(1.0 / (2.0 * theta)));
    }
    let theta2 = 0.3; let a2 = 2.0 - 2.0 * theta2;
    for &t in &[1e5f64, 1e7] {
        let v = weighted_power_integral(t, a2, 0.2, 0.4).unwrap();
        println!("a=1.4 t={t:e}: v={v:e} scaled={:e}", v * t.powf(1.2 / a2));
    }
}
