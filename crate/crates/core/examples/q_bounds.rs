//! The two linear lower-bound chains, with every one-sided rounding they use.

use pentile::analysis::q_bound_check;

fn main() {
    let r = q_bound_check();
    println!("reference P5(3, π) = {:.10}", r.reference);
    println!("{}: {:.6} ({})", r.p3_linearisation.label, r.p3_linearisation.computed, r.p3_linearisation.holds);
    for q in [&r.q3, &r.q4] {
        println!(
            "{}: printed {:.4}, four-decimal {:.4}, doubles {:.6}, bracket {:.6}, minimum {:.4} > {:.4}: {}",
            q.name,
            q.printed_constant,
            q.constant_four_decimal,
            q.constant_double,
            q.bracket,
            q.min_over_domain,
            r.reference,
            q.exceeds_reference
        );
        for c in &q.roundings {
            println!("  {:<28} exact {:+.8}  {}", c.label, c.exact, if c.valid { "ok" } else { "WRONG SIDE" });
        }
    }
}
