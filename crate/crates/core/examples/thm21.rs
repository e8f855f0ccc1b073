//! Hypotheses on S and the conclusion on U3*(S), for a few choices of S.

use ringcheck::spec::AlgebraSpec;
use ringcheck::verifier::verify_thm21_hypotheses;

fn main() {
    for s in ["rat", "u3star(rat)", "grassmann:2", "full:2"] {
        let ring = AlgebraSpec::parse(s).unwrap().build().unwrap();
        let t = verify_thm21_hypotheses(&ring).unwrap();
        println!(
            "S = {s}: [x,y][u,v]=0 {}, [[x,y],z]=0 {}, [[x,y],[u,v]]=0 on {} {}{}",
            t.comm_product.holds,
            t.double_comm_z.holds,
            t.conclusion.algebra,
            t.conclusion.holds,
            if t.vacuous() { " (implication untested)" } else { "" }
        );
    }
}
