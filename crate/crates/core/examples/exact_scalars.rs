//! Exact rationals and sparse commutative polynomials.

use ringcheck::poly::{Polynomial, VarAllocator};
use ringcheck::scalar::Rational;

fn main() {
    let big = Rational::from_int(i64::MAX);
    let sum = &big + &big;
    println!("{big} + {big} = {sum} (inline: {})", sum.is_inline());
    println!("1/3 + 1/6 = {}", &Rational::new(1, 3) + &Rational::new(1, 6));

    let vars = VarAllocator::new();
    let t = vars.fresh_vars(2);
    let (t0, t1) = (Polynomial::var(t[0]), Polynomial::var(t[1]));
    let p = t0.add(&t1).mul(&t0.sub(&t1));
    println!("(t0 + t1)(t0 - t1) = {p}");
    let half = Polynomial::constant(Rational::half());
    println!("(1/2 t0 + 1/2)^2 = {}", half.mul(&t0).add(&half).mul(&half.mul(&t0).add(&half)));
}
