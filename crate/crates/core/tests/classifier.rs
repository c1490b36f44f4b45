use holant3::arith::{int, rat, Rat};
use holant3::classify::{certificate_check, certify, dichotomy, replay, Verdict};
use holant3::signature::{classify_form, flip, SymSig3};

fn grid_values() -> Vec<Rat> {
    [(0, 1), (1, 2), (-1, 2), (1, 1), (-1, 1), (3, 2), (-3, 2), (2, 1), (-2, 1)]
        .into_iter()
        .map(|(n, d)| rat(n, d))
        .collect()
}

fn grid() -> impl Iterator<Item = SymSig3> {
    let v = grid_values();
    let mut out = Vec::new();
    for a in &v {
        for b in &v {
            for c in &v {
                out.push(SymSig3::normalized(a.clone(), b.clone(), c.clone()));
            }
        }
    }
    out.into_iter()
}

#[test]
fn verdict_matches_criterion_on_grid() {
    for f in grid() {
        assert_eq!(dichotomy(&f).is_ptime(), classify_form(&f).is_tractable(), "{f}");
    }
}

#[test]
fn hard_certificates_replay_on_grid() {
    let mut ungrounded = Vec::new();
    for f in grid() {
        let v = dichotomy(&f);
        if let Some(cert) = v.certificate() {
            if let Err(e) = replay(cert) {
                panic!("{f}: {e}\n{cert}");
            }
            if !cert.is_grounded() {
                ungrounded.push(f.to_string());
            }
        }
    }
    assert!(ungrounded.is_empty(), "{} ungrounded: {:?}", ungrounded.len(), ungrounded);
}

#[test]
fn zero_end_branches() {
    for v in [[0, 1, 3, 0], [0, -2, 5, 0], [0, 0, 4, 0], [0, 3, 3, 0]] {
        let f = SymSig3::from_ints(v);
        let cert = certify(&f);
        assert!(certificate_check(&cert) && cert.is_grounded(), "{cert}");
    }
}

#[test]
fn flip_and_scale_invariance_on_grid() {
    let scales = [int(3), rat(-2, 5)];
    for f in grid().step_by(7) {
        let kind = dichotomy(&f).kind();
        assert_eq!(dichotomy(&flip(&f)).kind(), kind, "{f}");
        for s in &scales {
            let g = f.scale(s);
            assert_eq!(dichotomy(&g).is_ptime(), dichotomy(&f).is_ptime(), "{g}");
        }
    }
}

#[test]
fn verdict_json_shape() {
    let v = dichotomy(&SymSig3::from_ints([1, 0, -1, 2]));
    let j = serde_json::to_value(&v).unwrap();
    assert_eq!(j["kind"], "SharpPHardButPlanarPTime");
    assert_eq!(j["a"], "1/2");
    assert!(j["certificate"]["steps"].as_array().unwrap().len() > 1);
    let p = dichotomy(&SymSig3::from_ints([0, 0, 0, 0]));
    assert!(matches!(p, Verdict::PTime { note: Some(_), .. }));
}
