//! Acceptance gate: one PASS/FAIL line per criterion, exact equality
//! throughout. Exits nonzero if any criterion fails.

use std::time::Instant;

use ringcheck::algebra::{make_full, make_grassmann, make_rat, make_u3star, Ring, RingElement};
use ringcheck::identities::{self, IdentityId, Params};
use ringcheck::matrix::Mat2;
use ringcheck::poly::VarAllocator;
use ringcheck::report::{bridge_json, verify_json, without_timing};
use ringcheck::spec::AlgebraSpec;
use ringcheck::verifier::{
    self, check_bridge, kernel_checks, probe_question, search_witness, verify_generic, verify_thm21_hypotheses,
    Bridge, ProbeStatus, VerifyReport, WitnessPool, STANDARD_ALGEBRAS,
};
use serde_json::Value;

struct Outcome {
    pass: bool,
    detail: String,
    reports: Vec<Value>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, detail: String::new(), reports: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            if !self.detail.is_empty() {
                self.detail += "; ";
            }
            self.detail += &what.into();
        }
    }
}

fn ring(name: &str) -> Ring {
    AlgebraSpec::parse(name).unwrap().build().unwrap()
}

fn uu() -> Ring {
    ring("u3star(u3star(rat))")
}

fn p() -> Params {
    Params::default()
}

fn record(o: &mut Outcome, command: &str, r: &VerifyReport) {
    o.reports.push(verify_json(command, r));
}

fn kernel_soundness() -> Outcome {
    let mut o = Outcome::new();
    for name in STANDARD_ALGEBRAS {
        let k = kernel_checks(&ring(name));
        o.check(k.associativity.is_ok(), format!("{name}: associativity {:?}", k.associativity));
        o.check(k.unit.is_ok(), format!("{name}: unit {:?}", k.unit));
        o.check(
            k.embedding.is_some() == name.starts_with("u3star") && !matches!(k.embedding, Some(Err(_))),
            format!("{name}: embedding {:?}", k.embedding),
        );
    }
    o
}

fn unconditional_identities() -> Outcome {
    let mut o = Outcome::new();
    for name in STANDARD_ALGEBRAS {
        let r = ring(name);
        for b in Bridge::ALL {
            let report = check_bridge(b, &r).unwrap();
            let diff: Vec<_> = report.diff.iter().map(|d| d.to_string()).collect();
            o.check(report.holds, format!("{b} over {name}: {} terms differ: {}", report.differing_terms, diff.join(", ")));
            o.reports.push(bridge_json(&report));
        }
    }
    o
}

fn degree4_on_16_dim() -> Outcome {
    let mut o = Outcome::new();
    for r in [uu(), make_grassmann(4).unwrap()] {
        let report = verify_generic(IdentityId::Thm37, &p(), &r).unwrap();
        o.check(report.holds, format!("thm37 fails over {}", r.name()));
        o.check(report.generic_vars == 64, format!("{} generic variables", report.generic_vars));
        record(&mut o, "verify", &report);
    }
    o
}

fn separation_suite() -> Outcome {
    let mut o = Outcome::new();
    let t = verify_thm21_hypotheses(&make_u3star(&make_rat()).unwrap()).unwrap();
    o.check(t.comm_product.holds, "[x,y][u,v] = 0 fails on u3star(rat)");
    o.check(t.double_comm_z.holds, "[[x,y],z] = 0 fails on u3star(rat)");
    o.check(t.conclusion.holds, "[[x,y],[u,v]] = 0 fails on u3star(u3star(rat))");
    for r in t.reports() {
        record(&mut o, "thm21", r);
    }

    let ring = uu();
    let pool = WitnessPool::basis(&ring);
    o.check(pool.len() == 16, "basis pool size");
    for id in [IdentityId::CommProduct, IdentityId::DoubleCommZ] {
        let r = search_witness(id, &p(), &ring, &pool, 16u64.pow(4), 1).unwrap();
        match &r.witness {
            Some(w) => o.check(
                w.is_concrete() && !w.value.is_zero() && w.replay(id, &p()).unwrap() == w.value,
                format!("{id}: witness does not replay"),
            ),
            None => o.check(false, format!("{id}: no witness in the basis pool")),
        }
        record(&mut o, "search", &r);
    }
    let r = verify_generic(IdentityId::LieSolv2, &p(), &ring).unwrap();
    o.check(r.holds, "lie_solv2 fails generically on u3star(u3star(rat))");
    record(&mut o, "verify", &r);
    o
}

fn negative_controls() -> Outcome {
    let mut o = Outcome::new();
    let m2 = make_full(2).unwrap();
    for id in [IdentityId::WeakSolv2, IdentityId::LieSolv2, IdentityId::Thm37, IdentityId::Domokos] {
        let r = verify_generic(id, &p(), &m2).unwrap();
        o.check(!r.holds, format!("{id} holds over full:2"));
        match &r.witness {
            Some(w) => {
                let again = w.replay(id, &p()).unwrap();
                o.check(!again.is_zero() && again == w.value, format!("{id}: replay {again} != {}", w.value));
                o.check(again.to_string() == w.value.to_string(), format!("{id}: rendering differs"));
            }
            None => o.check(false, format!("{id}: no witness")),
        }
        record(&mut o, "verify", &r);
    }
    o
}

fn domokos_identity() -> Outcome {
    let mut o = Outcome::new();
    for r in [make_grassmann(4).unwrap(), make_u3star(&make_rat()).unwrap()] {
        let report = verify_generic(IdentityId::Domokos, &p(), &r).unwrap();
        o.check(report.holds, format!("domokos fails over {}", r.name()));
    }
    o
}

/// Entry `(i, j)` of `M N` by explicit sums of ring products.
fn oracle_entry(m: &Mat2, n: &Mat2, i: usize, j: usize) -> RingElement {
    m.get(i, 0).mul(n.get(0, j)).add(&m.get(i, 1).mul(n.get(1, j)))
}

fn oracle_mul(m: &Mat2, n: &Mat2) -> Mat2 {
    Mat2::from_rows(oracle_entry(m, n, 0, 0), oracle_entry(m, n, 0, 1), oracle_entry(m, n, 1, 0), oracle_entry(m, n, 1, 1))
        .unwrap()
}

fn odd_entry_family() -> Outcome {
    let mut o = Outcome::new();
    let e6 = make_grassmann(6).unwrap();
    let vars = VarAllocator::new();
    let [c, d, e] = [(); 3].map(|_| RingElement::generic_odd(&e6, &vars).unwrap());
    let m = Mat2::from_rows(c.clone(), d, e, c.neg()).unwrap();
    let m2 = oracle_mul(&m, &m);
    let m4 = oracle_mul(&m2, &m2);
    let trace = |x: &Mat2| x.get(0, 0).add(x.get(1, 1));
    o.check(trace(&m).is_zero(), "tr(C) != 0");
    o.check(trace(&m2).is_zero(), "tr(C^2) != 0");
    o.check(trace(&m4).is_zero(), "tr(C^4) != 0");
    o.check(m4.is_zero(), "oracle C^4 != 0");
    match identities::cor35_check(&m) {
        Ok(c4) => o.check(c4 == m4, "cor35_check disagrees with the oracle"),
        Err(err) => o.check(false, format!("cor35_check: {err}")),
    }
    let r = verify_generic(IdentityId::Cor35, &p(), &e6).unwrap();
    o.check(r.holds, "generic cor35 fails over grassmann:6");
    o
}

fn recursion() -> Outcome {
    let mut o = Outcome::new();
    for (r, vanishes) in [(make_grassmann(4).unwrap(), true), (uu(), true), (make_full(2).unwrap(), false)] {
        let vars = VarAllocator::new();
        let xs: Vec<_> = (0..3).map(|_| RingElement::generic(&r, &vars)).collect();
        let c = Mat2::traceless(&xs[0], &xs[1], &xs[2]).unwrap();
        let seq = identities::ck_sequence(&c, 2).unwrap();
        o.check(seq.iter().all(|ci| ci.trace().is_zero()), format!("nonzero trace over {}", r.name()));
        o.check(seq[2].is_zero() == vanishes, format!("C_2 = 0 is {} over {}", seq[2].is_zero(), r.name()));
        let (report, traceless) = verifier::verify_ck(&r, 2).unwrap();
        o.check(report.holds == vanishes && traceless, format!("verify_ck disagrees over {}", r.name()));
    }
    o
}

fn probe() -> Outcome {
    let mut o = Outcome::new();
    let ring = uu();
    let r = probe_question(&ring, &WitnessPool::basis(&ring), u64::MAX, 1).unwrap();
    o.check(r.hypothesis.holds, "[[x,y],[x,z]] = 0 fails");
    o.check(r.status == ProbeStatus::ConsistentNotProof, format!("status {}", r.status.as_str()));
    let flagged = r.search.as_ref().and_then(|s| s.note.as_deref()).is_some_and(|n| n.contains("consistent, not a proof"));
    o.check(flagged, "report not flagged as consistent, not a proof");
    o
}

fn determinism() -> Outcome {
    let mut o = Outcome::new();
    let run = || -> Vec<String> {
        [unconditional_identities(), degree4_on_16_dim(), separation_suite(), negative_controls()]
            .into_iter()
            .flat_map(|c| c.reports)
            .map(|v| serde_json::to_string(&without_timing(&v)).unwrap())
            .collect()
    };
    let (first, second) = (run(), run());
    o.check(!first.is_empty() && first.len() == second.len(), "report counts differ");
    for (k, (a, b)) in first.iter().zip(&second).enumerate() {
        o.check(a == b, format!("report {k} differs"));
    }
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("kernel soundness", kernel_soundness),
        ("unconditional identities", unconditional_identities),
        ("degree-4 trace identity on 16-dim rings", degree4_on_16_dim),
        ("U3* separation suite", separation_suite),
        ("negative controls", negative_controls),
        ("left-coefficient trace identity", domokos_identity),
        ("odd-entry nilpotent family", odd_entry_family),
        ("recursion", recursion),
        ("probe", probe),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        let secs = start.elapsed().as_secs_f64();
        let status = if o.pass { "PASS" } else { "FAIL" };
        if o.pass {
            println!("{status} criterion {}: {name} ({secs:.2}s)", k + 1);
        } else {
            failed += 1;
            println!("{status} criterion {}: {name} ({secs:.2}s): {}", k + 1, o.detail);
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
