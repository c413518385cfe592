//! Fundamental groups, intermediate lattices and pinned isomorphisms.

use flagrec::cartan::{catalog, Family};
use flagrec::rootdata::{self, PinnedRootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = catalog(Family::D, 4)?;
    println!("π1(D4) invariant factors {:?}", rootdata::fundamental_group(&c)?);
    let lattices = rootdata::intermediate_lattices(&c)?;
    println!("{} lattices between Q and P", lattices.len());
    let data: Vec<PinnedRootDatum> =
        lattices.iter().map(|b| PinnedRootDatum::from_lattice(&c, b)).collect::<Result<_, _>>()?;
    for (i, a) in data.iter().enumerate() {
        let iso: Vec<usize> = (0..data.len()).filter(|&j| rootdata::pinned_isomorphism(a, &data[j]).is_some()).collect();
        println!("  lattice {i}: basis {:?}, pinned-isomorphic to {iso:?}", lattices[i]);
    }
    Ok(())
}
