//! The algebra-spec grammar, its canonical rendering and its errors.

use ringcheck::spec::AlgebraSpec;

fn main() {
    for text in ["u3star(u3star(rat))", "grassmann:4", "u3star(poly)", "u3star(grassmann:9", "full:7", "u3star(rat))"] {
        match AlgebraSpec::parse(text) {
            Ok(spec) => println!("{text:>22} -> {spec} (dim {})", spec.dim()),
            Err(e) => println!("{text:>22} -> error: {e}"),
        }
    }
}
