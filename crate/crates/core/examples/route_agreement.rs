//! Sweep the variation d/dc ξ_c'(0) over a dense c-grid and report the worst
//! disagreement between the integral route and the sector/residue route.

use zvar_core::barnes::ParameterC;
use zvar_core::bessel_zeta::{dxi_dc_integral, dxi_dc_sector};

fn main() {
    let mut grid: Vec<f64> = (0..300).map(|i| 1.01 + 0.03 * f64::from(i)).collect();
    // near-integer values exercise the sin(pi c) * (peaked integral) regime
    for j in 2..=9 {
        for &d in &[1e-4, 1e-3, 5e-3, 0.019] {
            grid.push(f64::from(j) + d);
            grid.push(f64::from(j) - d);
        }
    }
    let mut worst = (0.0f64, 0.0f64);
    let mut count = 0u32;
    for &cv in &grid {
        if cv <= 1.0 || (cv - cv.round()).abs() <= 1e-9 {
            continue;
        }
        let c = ParameterC::new(cv).unwrap();
        let integral = dxi_dc_integral(c).unwrap().value;
        let sector = dxi_dc_sector(c).unwrap().value;
        let diff = (integral - sector).abs();
        count += 1;
        if diff > worst.1 {
            worst = (cv, diff);
        }
    }
    println!(
        "{count} grid points: worst |integral - sector| = {:.3e} at c = {}",
        worst.1, worst.0
    );
}
