//! C_{k+1} = C_k^2 - 1/2 tr(C_k^2) I from a generic traceless C.

use ringcheck::algebra::RingElement;
use ringcheck::identities::ck_sequence;
use ringcheck::matrix::Mat2;
use ringcheck::poly::VarAllocator;
use ringcheck::spec::AlgebraSpec;

fn main() {
    for s in ["grassmann:4", "u3star(u3star(rat))", "full:2"] {
        let ring = AlgebraSpec::parse(s).unwrap().build().unwrap();
        let vars = VarAllocator::new();
        let xs: Vec<_> = (0..3).map(|_| RingElement::generic(&ring, &vars)).collect();
        let c = Mat2::traceless(&xs[0], &xs[1], &xs[2]).unwrap();
        let seq = ck_sequence(&c, 2).unwrap();
        let zero: Vec<_> = seq.iter().map(|m| m.is_zero()).collect();
        let traceless = seq.iter().all(|m| m.trace().is_zero());
        println!("{s}: C_i = 0 for i = 0, 1, 2: {zero:?}; all traceless: {traceless}");
    }
}
