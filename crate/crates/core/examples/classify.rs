//! Recognize a Cartan matrix given in any node order.

use flagrec::cartan::{classify, symmetrizer, Gcm};
use flagrec::roots::RootSystem;
use flagrec::weyl::weyl_order;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // B3 ⊕ A1 with the nodes shuffled
    let c = Gcm::new(vec![
        vec![2, 0, -1, 0],
        vec![0, 2, 0, 0],
        vec![-2, 0, 2, -1],
        vec![0, 0, -1, 2],
    ])?;
    let t = classify(&c)?;
    println!("type {t}");
    for comp in &t.components {
        println!("  {}{} on nodes {:?}", comp.family, comp.rank, comp.nodes);
    }
    println!("squared lengths {:?}", symmetrizer(&c)?.d);
    println!("|Φ₊| = {}", RootSystem::new(&c)?.num_positive());
    println!("|W| = {}", weyl_order(&t));
    Ok(())
}
