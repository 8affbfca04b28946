//! The total product on classes against the classical interval product.

use ivspace::embedding::{bullet, contains};
use ivspace::{GClass, Interval};

fn main() {
    let iv = |a, b| Interval::new(a, b).unwrap();
    let cases = [
        (iv(1.0, 2.0), iv(3.0, 4.0)),
        (iv(-3.0, -1.0), iv(-2.0, 5.0)),
        (iv(-4.0, 2.0), iv(-2.0, 3.0)),
        (iv(-1.0, 1.0), iv(-1.0, 1.0)),
    ];
    for (x, y) in cases {
        let b = bullet(x.to_class(), y.to_class());
        let classical = (x * y).to_class();
        let note = if b == classical { "equal" } else { "wider" };
        println!(
            "{x} * {y}: bullet {b}, classical {classical}, {note}, contains: {}",
            contains(b, classical).unwrap()
        );
    }

    // the product is defined for negative classes too
    let neg = -GClass::new(1.0, 2.0);
    println!("{neg} * {neg} = {}", bullet(neg, neg));
    println!("{neg} * [1,3] = {}", bullet(neg, GClass::new(1.0, 3.0)));
}
