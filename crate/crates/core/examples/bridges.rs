//! Identities that hold over every ring, checked with a term-level diff.

use ringcheck::report::bridge_text;
use ringcheck::spec::AlgebraSpec;
use ringcheck::verifier::{check_bridge, Bridge};

fn main() {
    for s in ["full:2", "grassmann:3", "u3star(u3star(rat))"] {
        let ring = AlgebraSpec::parse(s).unwrap().build().unwrap();
        for b in Bridge::ALL {
            print!("{}", bridge_text(&check_bridge(b, &ring).unwrap()));
        }
    }
}
