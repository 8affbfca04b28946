//! Exact division and division with remainder.

use ivspace::division::divide;
use ivspace::GClass;

fn main() {
    let cases = [
        (GClass::new(2.0, 6.0), GClass::new(1.0, 2.0)),
        (GClass::new(1.0, 3.0), GClass::new(1.0, 4.0)),
        (GClass::new(-2.0, 3.0), GClass::new(-4.0, 2.0)),
        (GClass::new(-7.0, 2.0), GClass::new(-3.0, 1.0)),
        (GClass::new(-2.0, 3.0), GClass::new(-1.0, 1.0)),
        (GClass::new(-1.0, 2.0), GClass::new(3.0, 4.0)),
    ];
    for (y, x) in cases {
        match divide(y, x) {
            Ok(r) => println!(
                "{y} / {x}: Z = {}, R = {}, exact = {}, X*Z + R = {}",
                r.quotient,
                r.remainder,
                r.exact,
                r.reconstruct(x)
            ),
            Err(e) => println!("{y} / {x}: {e}"),
        }
    }
}
