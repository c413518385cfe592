//! Weyl dimensions and the volume polynomial.

use flagrec::cartan::{catalog, Family};
use flagrec::charformula::EulerData;
use flagrec::roots::{RootSystem, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::new(&catalog(Family::G, 2)?)?;
    let e = EulerData::new(&rs);
    for lambda in [[0, 0], [1, 0], [0, 1], [1, 1], [2, 0]] {
        println!("dim V{lambda:?} = {}", e.weyl_dim(&WeightVector(lambda.to_vec()))?);
    }
    let a2 = EulerData::new(&RootSystem::new(&catalog(Family::A, 2)?)?);
    println!("A2: vol(2ρ) = {}", a2.vol(&WeightVector(vec![2, 2]))?);
    println!("A2: χ(ρ) = {}", a2.euler_char_shifted(&WeightVector::rho(2))?);
    Ok(())
}
