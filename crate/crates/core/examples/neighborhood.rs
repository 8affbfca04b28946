//! Balls of the norm are parallelograms in the endpoint plane.
//!
//! Prints the four vertices and a coarse picture of the ball around `[1,2]`.

use ivspace::metric::{ball_contains, neighborhood_vertices};
use ivspace::GClass;

fn main() {
    let (x0, eps) = (GClass::new(1.0, 2.0), 0.5);
    let p = neighborhood_vertices(x0, eps).unwrap();
    for (i, (u, v)) in p.vertices.iter().enumerate() {
        let d = GClass::new(*u, *v).distance(&x0);
        println!("A{} = ({u}, {v}), distance {d}", i + 1);
    }

    println!("\nsup ^   (# inside the open ball)");
    for row in 0..=16 {
        let v = 2.6 - row as f64 * 0.075;
        let line: String = (0..=32)
            .map(|col| {
                let u = 0.4 + col as f64 * 0.0375;
                if ball_contains(x0, eps, GClass::new(u, v)) { '#' } else { '.' }
            })
            .collect();
        println!("{v:5.2} {line}");
    }
    println!("      inf from 0.4 to 1.6");
}
