//! 2x2 matrices over a noncommutative ring; traces are never moved.

use ringcheck::algebra::{make_full, RingElement};
use ringcheck::matrix::Mat2;

fn main() {
    let m2 = make_full(2).unwrap();
    let e = |l: &str| RingElement::basis_by_label(&m2, l).unwrap();
    let z = RingElement::zero(&m2);
    let m = Mat2::from_rows(e("E21"), z.clone(), z.clone(), z).unwrap();
    let r = e("E12");
    println!("M =\n{m}");
    println!("r M =\n{}", Mat2::scalar_left(&r, &m));
    println!("M r =\n{}", Mat2::scalar_right(&m, &r));

    let n = Mat2::from_rows(RingElement::zero(&m2), e("E12"), e("E21"), RingElement::zero(&m2)).unwrap();
    println!("N^2 =\n{}", n.pow(2));
    println!("tr(N^2) = {}", n.pow(2).trace());
}
