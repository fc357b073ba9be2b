//! The curve spec-file grammar and the machine-readable report format —
//! the same surfaces the CLI exposes, driven from the library.
//!
//! Run with: cargo run --example curve_files

use cartier_manin::cli;
use cartier_manin::curve::parse_curve_spec;

fn main() {
    // A curve file is five fixed-order keys; `modulus` appears exactly
    // when e > 1. `#` comments and blank lines are fine.
    let spec = "\
# genus-2 curve over F_27, a^3 - a + 1 = 0
p = 3
e = 3
modulus = [1,2,0,1]
genus = 2
f = [0,g^1,g^2,0,0,1]
";
    let x = parse_curve_spec(spec).unwrap();
    println!("parsed: {x}");
    println!();

    // Errors carry line anchors and split into parse vs validation.
    let bad = "p = 3\ne = 1\nf = [0,1,0,1]\n";
    println!("missing genus  -> {}", parse_curve_spec(bad).unwrap_err());
    let bad = "p = 2\ne = 1\ngenus = 1\nf = [0,1,0,1]\n";
    println!("p = 2          -> {}", parse_curve_spec(bad).unwrap_err());
    println!();

    // The machine report format round-trips exactly.
    let report = cli::cmd_invariants(spec).unwrap();
    let emitted = cli::report_machine(&report);
    println!("--- machine report ---");
    print!("{emitted}");
    let parsed = cli::parse_machine_report(&emitted).unwrap();
    assert_eq!(parsed, report);
    assert_eq!(cli::report_machine(&parsed), emitted);
    println!("--- round trip OK ---");
}
