//! Evaluating expressions over class literals, as the `eval` subcommand does.

use ivspace::expr::eval;

fn main() {
    for src in [
        "[2,4] + dual[6,1]",
        "[1,2] * [3,4] - point 1",
        "2 * [1,2] - 3 * [0,1]",
        "([-4,2] • [-2,3]) ∖ [-12,8]",
        "[1,2] + 3",
    ] {
        match eval(src) {
            Ok(v) => println!("{src:<30} = {}", v.into_class()),
            Err(e) => println!("{src:<30} : {e}"),
        }
    }
}
