//! Classes of interval pairs as a real vector space.
//!
//! Run with `cargo run --example quotient_space`.

use ivspace::{Canonical, GClass, Interval};

fn main() {
    let a = GClass::new(2.0, 4.0);
    let b: GClass = "dual[6,1]".parse().unwrap();
    println!("a = {a}, b = {b}, a + b = {}", a + b);

    // every class has an additive inverse, unlike a classical interval
    println!("a + (-a) = {}", a + (-a));
    println!("-a = {}  (not the interval [-4,-2])", -a);
    println!("-1 * a = {}, classical -[2,4] = {}", -1.0 * a, Interval::new(-4.0, -2.0).unwrap());

    // a class is also the class of many pairs
    let pair = GClass::from_pair(Interval::new(3.0, 10.0).unwrap(), Interval::new(1.0, 6.0).unwrap());
    println!("class of ([3,10], [1,6]) = {pair}");

    for x in [a, b, GClass::scalar(-2.5), GClass::ZERO] {
        let canon = match x.canonical() {
            Canonical::Positive(i) => format!("({i}, 0)"),
            Canonical::Negative(i) => format!("(0, {i})"),
            Canonical::Scalar(s) => format!("point {s}"),
        };
        let (u1, u2) = x.basis_coordinates();
        println!(
            "{x:>12}: canonical {canon}, length {}, center {}, norm {}, = {u1} X1 + {u2} X2",
            x.length(),
            x.center(),
            x.norm()
        );
    }
}
