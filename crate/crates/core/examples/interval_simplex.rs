//! The simplex method with interval right-hand sides.

use ivspace::linprog::{solve_observed, IntervalLp};
use ivspace::{GClass, DEFAULT_TOL};

fn main() {
    let lp = IntervalLp::new(vec![3.0, 2.0])
        .le(vec![1.0, 1.0], GClass::new(4.0, 6.0))
        .le(vec![1.0, 0.0], GClass::new(2.0, 3.0));

    let sol = solve_observed(&lp, DEFAULT_TOL, |t| {
        let rhs: Vec<String> = t.rhs.iter().map(|b| b.to_string()).collect();
        println!("after pivot {}: basis {:?}, rhs {}", t.iterations, t.basis, rhs.join(" "));
    })
    .unwrap();

    println!("status {:?}, trace {:?}", sol.status, sol.trace);
    for (i, x) in sol.variables.iter().enumerate() {
        println!("x{} = {x}", i + 1);
    }
    println!("objective = {}", sol.objective);
    println!("\n{}", serde_json::to_string_pretty(&sol).unwrap());
}
