//! Continuity and differentiability probes for the squaring map.

use ivspace::analysis::{
    case_one_directions, continuity_probe, diff_probe, differential_candidate, geometric_radii, poly_eval, q2,
    uniform_directions, Grid,
};
use ivspace::GClass;

fn main() {
    for x0 in [GClass::new(1.0, 2.0), GClass::new(-2.0, 3.0), GClass::new(-3.0, -1.0)] {
        for eps in [0.5, 0.1] {
            let eta = continuity_probe(q2, x0, eps, Grid::default());
            println!("q2 at {x0}, eps {eps}: eta {eta:?}");
        }
    }
    let cubic = |x| poly_eval(&[1.0, 0.0, -2.0, 1.0], x);
    println!("1 - 2X^2 + X^3 at [1,2]: {}", cubic(GClass::new(1.0, 2.0)));

    let x0 = GClass::new(1.0, 2.0);
    let l = differential_candidate(x0);
    let radii = geometric_radii(1e-2, 1e-6, 5);
    println!("\nall directions around {x0}:");
    print!("{}", diff_probe(q2, x0, l, &radii, &uniform_directions(64)).to_csv());
    println!("\ndirections with 0 < d.inf < d.sup:");
    print!("{}", diff_probe(q2, x0, l, &radii, &case_one_directions(16)).to_csv());
}
