//! Generic verification of the headline identity and a failing control.
//!
//! `cargo run --example verify_generic -- thm37 "u3star(u3star(rat))"`

use ringcheck::identities::{IdentityId, Params};
use ringcheck::report::verify_text;
use ringcheck::spec::AlgebraSpec;
use ringcheck::verifier::verify_generic;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cases: Vec<(String, String)> = match args.as_slice() {
        [id, algebra] => vec![(id.clone(), algebra.clone())],
        _ => vec![
            ("thm37".into(), "u3star(u3star(rat))".into()),
            ("thm37".into(), "grassmann:4".into()),
            ("thm37".into(), "full:2".into()),
        ],
    };
    for (id, algebra) in cases {
        let id: IdentityId = id.parse().unwrap();
        let ring = AlgebraSpec::parse(&algebra).unwrap().build().unwrap();
        let report = verify_generic(id, &Params::default(), &ring).unwrap();
        print!("{}", verify_text("verify", &report));
    }
}
