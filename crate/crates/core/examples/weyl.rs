//! Enumerate a Weyl group and inspect its longest element.

use flagrec::cartan::{catalog, Family};
use flagrec::roots::RootSystem;
use flagrec::weyl::{self, WeylGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::new(&catalog(Family::B, 3)?)?;
    let w = WeylGroup::enumerate(&rs, weyl::cap_from_env())?;
    println!("|W(B3)| = {}", w.order());
    println!("Poincaré {:?}", w.poincare());
    let w0 = w.longest();
    let word: Vec<usize> = weyl::reduced_word(&rs, w0).iter().map(|i| i + 1).collect();
    println!("w0 has length {} and reduced word {word:?}", w0.length());
    let dem = weyl::demazure_product(&rs, &[0, 0, 1, 0, 1])?;
    println!("Demazure product of s1 s1 s2 s1 s2 has length {}", dem.length());
    Ok(())
}
