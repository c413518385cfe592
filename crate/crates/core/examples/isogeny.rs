//! Special isogenies in small characteristic.

use flagrec::cartan::{catalog, Family};
use flagrec::isogeny::{self, enumerate_special};
use flagrec::rootdata::PinnedRootDatum;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (f, n, p) in [(Family::B, 2, 2), (Family::F, 4, 2), (Family::G, 2, 3)] {
        for phi in enumerate_special(f, n, p) {
            println!("{f}{n} p={p}: u = {:?}, q = {:?}, f = {:?}", phi.u, phi.q, phi.f);
            let twice = isogeny::compose(&phi, &enumerate_special(f, n, p)[0])?;
            println!("  composed with itself: q = {:?}, constant {}", twice.q, twice.is_constant());
        }
    }
    let a2 = PinnedRootDatum::adjoint(&catalog(Family::A, 2)?)?;
    let frob = isogeny::frobenius(&a2, 5, 2);
    let (_, k) = isogeny::factor_primitive_constant(&frob)?;
    println!("A2 Frobenius at 25 factors with exponent {k}");
    Ok(())
}
