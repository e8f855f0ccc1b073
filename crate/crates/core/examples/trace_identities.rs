//! The commutator-matrix identities evaluated at a concrete Grassmann matrix,
//! and the expanded degree-4 trace identity.

use ringcheck::algebra::{make_grassmann, RingElement};
use ringcheck::identities::{cor32_display, prop31_display, prop31_lhs, thm37_expr, thm37_residual, cor36_residual};
use ringcheck::matrix::Mat2;
use ringcheck::poly::VarAllocator;

fn main() {
    let e = make_grassmann(4).unwrap();
    let v = |i: u32| RingElement::basis_by_label(&e, &format!("v{i}")).unwrap();
    let a = Mat2::from_rows(v(1), v(2), v(3), v(4)).unwrap();
    println!("A =\n{a}");
    println!("A^2 - tr(A)A + 1/2(tr^2(A) - tr(A^2))I =\n{}", prop31_lhs(&a));
    println!("commutator matrix =\n{}", prop31_display(&a));

    let b = Mat2::traceless(&v(1), &v(2), &v(3)).unwrap();
    println!("B^2 - 1/2 tr(B^2)I for B = [[v1, v2], [v3, -v1]] =\n{}", cor32_display(&b).unwrap());

    let expr = thm37_expr();
    println!("{} terms: {}", expr.terms().len(), expr.render());
    let generic = Mat2::generic(&e, &VarAllocator::new());
    let residual = thm37_residual(&generic);
    println!("over {}: zero {}, equals the centred expansion {}", e.name(), residual.is_zero(), residual == cor36_residual(&generic));
}
