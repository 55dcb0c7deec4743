//! Arithmetic in GF(3^2) and its embedding into GF(3^6).

use galois_points::field::{embed, extension, make_field, restrict};

fn main() -> galois_points::Result<()> {
    let k = make_field(3, 2, 0)?;
    let big = extension(&k, 3)?;
    println!("GF({}) with modulus {:?}, inside GF({})", k.order(), k.modulus(), big.order());

    let a = k.primitive_element();
    println!("primitive element {} has order {}", k.format(a), k.multiplicative_order(a));
    for x in k.elements().take(4) {
        let y = embed(x, &k, &big)?;
        // embedding commutes with Frobenius and restricts back
        assert_eq!(embed(k.frobenius(x), &k, &big)?, big.frobenius(y));
        assert_eq!(restrict(y, &big, &k)?, Some(x));
        println!("{} -> {}", k.format(x), big.format(y));
    }

    let zeta = big.root_of_unity(7)?;
    println!("a primitive 7th root of unity in GF({}): {}", big.order(), big.format(zeta));
    Ok(())
}
