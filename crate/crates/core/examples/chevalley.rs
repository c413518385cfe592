//! Structure constants and the short-root ideal check.

use flagrec::cartan::{catalog, Family};
use flagrec::chevalley;
use flagrec::roots::RootSystem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::new(&catalog(Family::G, 2)?)?;
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if let Ok(s) = chevalley::m_const(&rs, a, b) {
                if s.m > 1 {
                    println!("{:?} + {:?}: m = {}", rs.root(a).coords, rs.root(b).coords, s.m);
                }
            }
        }
    }
    let report = chevalley::short_ideal_check(&rs, 3)?;
    println!("G2 at p = 3: {} checks, {} violations", report.checks.len(), report.violations);
    Ok(())
}
