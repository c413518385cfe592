//! Roots, coroots and root strings of G2.

use flagrec::cartan::{catalog, Family};
use flagrec::roots::RootSystem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::new(&catalog(Family::G, 2)?)?;
    for r in rs.positive() {
        println!("{:?}  coroot {:?}  height {}  {:?}", r.coords, r.coroot, r.height, r.length);
    }
    let s = rs.root_string(&rs.root(1).coords, 0)?;
    println!("α1-string through α2: r = {}, s = {}", s.r, s.s);
    for m in s.members(&rs) {
        println!("  {m:?}");
    }
    Ok(())
}
