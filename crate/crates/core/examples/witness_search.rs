//! U3*(U3*(Q)) satisfies [[x,y],[u,v]] = 0 but neither [x,y][u,v] = 0 nor
//! [[x,y],z] = 0: the first generically, the other two by basis witnesses.

use ringcheck::algebra::{make_rat, make_u3star};
use ringcheck::identities::{IdentityId, Params};
use ringcheck::report::verify_text;
use ringcheck::verifier::{search_witness, verify_generic, WitnessPool};

fn main() {
    let ring = make_u3star(&make_u3star(&make_rat()).unwrap()).unwrap();
    let params = Params::default();
    print!("{}", verify_text("verify", &verify_generic(IdentityId::LieSolv2, &params, &ring).unwrap()));
    let pool = WitnessPool::basis(&ring);
    for id in [IdentityId::CommProduct, IdentityId::DoubleCommZ] {
        let report = search_witness(id, &params, &ring, &pool, u64::MAX, 2).unwrap();
        print!("{}", verify_text("search", &report));
        let w = report.witness.expect("witness");
        assert_eq!(w.replay(id, &params).unwrap(), w.value);
    }
}
