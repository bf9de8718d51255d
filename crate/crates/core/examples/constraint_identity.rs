//! Samples tuples satisfying the angle and edge-count constraints and checks
//! the rewritten form used to eliminate the pentagon terms.

use pentile::analysis::{constraint_identity_check, sample_constraint_tuple, constraint_identity_scan};
use pentile::sampling::substream;

fn main() {
    let mut rng = substream(7, 0);
    let t = sample_constraint_tuple(&mut rng);
    println!("sample tuple: {t:?}");
    println!("identity holds: {:?}", constraint_identity_check(&t));
    let scan = constraint_identity_scan(10_000, 7);
    println!(
        "{} of {} samples hold, worst residual {:.1e}",
        scan.holds, scan.samples, scan.worst_residual
    );
}
