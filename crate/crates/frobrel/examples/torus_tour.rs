//! Walk through the torus object: build it, extract its structure, and
//! evaluate a few closed surfaces against it.

use frobrel::correspondence::frob_to_simplicial;
use frobrel::exterior::SubsetSpec;
use frobrel::term::genus_invariant;

fn main() {
    let spec = SubsetSpec::torus();
    let f = spec.build_frobenius().expect("the torus set is closed");
    println!("carrier: {}", f.carrier());
    println!("verify: {}", f.verify());

    let derived = f.extract_alpha().expect("verified");
    println!("alpha-hat: {}", derived.alpha_hat());
    println!("nakayama: {}", derived.nakayama());
    println!("commutative: {}", f.is_commutative());
    println!("dagger: {}", f.is_dagger());

    let a = frob_to_simplicial(&f).expect("verified");
    println!(
        "simplicial levels: {} vertices, {} edges, {} triangles",
        a.base().x0().len(),
        a.base().x1().len(),
        a.base().x2().len()
    );

    for genus in 0..=3 {
        println!("genus {genus}: {}", genus_invariant(&f, genus));
    }
}
