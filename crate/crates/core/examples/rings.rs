//! Building rings from structure constants and multiplying basis elements.

use ringcheck::algebra::{make_full, make_grassmann, make_rat, make_u3star, u3star_embed_oracle, RingElement};

fn main() {
    let e = make_grassmann(3).unwrap();
    let v = |l: &str| RingElement::basis_by_label(&e, l).unwrap();
    println!("{}: dim {}", e.name(), e.dim());
    println!("  v1 v2 = {}", v("v1").mul(&v("v2")));
    println!("  v2 v1 = {}", v("v2").mul(&v("v1")));
    println!("  v2 v1,3 = {}", v("v2").mul(&v("v1,3")));
    println!("  [v1, v2] = {}", v("v1").commutator(&v("v2")));

    let u = make_u3star(&make_rat()).unwrap();
    let b = |l: &str| RingElement::basis_by_label(&u, l).unwrap();
    println!("{}: labels {:?}", u.name(), u.labels());
    println!("  E12 E23 = {}, E23 E12 = {}", b("E12").mul(&b("E23")), b("E23").mul(&b("E12")));
    let m = u3star_embed_oracle(&b("E12").add(&b("E23"))).unwrap();
    for row in &m {
        let cells: Vec<_> = row.iter().map(|x| x.to_string()).collect();
        println!("  | {} |", cells.join("  "));
    }

    let uu = make_u3star(&u).unwrap();
    println!("{}: dim {}, {} nonzero basis products", uu.name(), uu.dim(), uu.nonzero_products());

    let m2 = make_full(2).unwrap();
    println!("{}: associative {:?}, unit {:?}", m2.name(), m2.check_associativity(), m2.check_unit());
}
