//! Looks for a ring satisfying [[x,y],[x,z]] = 0 but not [[x,y],[u,v]] = 0.

use ringcheck::spec::AlgebraSpec;
use ringcheck::verifier::{probe_question, WitnessPool};

fn main() {
    for s in ["u3star(u3star(rat))", "grassmann:4", "u3star(grassmann:2)", "full:2"] {
        let ring = AlgebraSpec::parse(s).unwrap().build().unwrap();
        let probe = probe_question(&ring, &WitnessPool::basis(&ring), 1 << 20, 2).unwrap();
        println!("{s}: {}", probe.status.as_str());
    }
}
