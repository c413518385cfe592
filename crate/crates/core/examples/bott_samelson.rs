//! Push a weight down a Bott–Samelson word, keeping cohomological degree.

use flagrec::bottsam;
use flagrec::cartan::{catalog, Family};
use flagrec::roots::WeightVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = catalog(Family::A, 2)?;
    let minus_alpha1 = WeightVector(vec![-2, 1]);
    let out = bottsam::pushforward_word(&c, &[0, 1], &minus_alpha1)?;
    for (w, degree, mult) in out.iter() {
        println!("weight {w:?} in degree {degree} with multiplicity {mult}");
    }
    for i in 0..2 {
        println!("h0 rank for α{} on word s1 s2 s1: {}", i + 1, bottsam::h0_rank(&c, &[0, 1, 0], i)?);
    }
    Ok(())
}
