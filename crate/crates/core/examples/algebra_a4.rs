//! The algebra A4: products, inverses, zero divisors and the order on images.

use ivspace::embedding::{key, phi, psi};
use ivspace::{Interval, A4};

fn main() {
    let x = A4::new(2.0, 4.0, 0.0, 0.0);
    let y = A4::new(0.0, 2.0, 4.0, 0.0);
    println!("x = {x}, y = {y}, x * y = {}", x * y);
    println!("unit = {}, e1 * e2 = {}", A4::unit(), A4::e(1) * A4::e(2));

    for z in [x, y, A4::new(1.0, 3.0, 1.0, 2.0)] {
        match z.inverse() {
            Ok(inv) => println!("{z}: inverse {inv}, check {}", z * inv),
            Err(e) => println!("{z}: {e}"),
        }
    }

    let k = key(y);
    println!("key of {y} = ({}, {}), psi = {}", k.u, k.v, psi(y));

    let iv = |a, b| Interval::new(a, b).unwrap();
    let pairs = [
        (iv(1.0, 2.0), iv(0.5, 3.0)),
        (iv(1.0, 2.0), iv(-1.0, 3.0)),
        (iv(-3.0, -1.0), iv(-2.0, 1.0)),
        (iv(-1.0, 2.0), iv(1.0, 3.0)),
    ];
    for (a, b) in pairs {
        println!("phi({a}) <= phi({b}): {:?}", phi(a).leq(&phi(b)));
    }
}
