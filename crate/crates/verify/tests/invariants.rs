use skein_verify::{
    check_uvkm, check_uvkm_stated, hoste_przytycki, sphere_slide_chain, FormalVModule, Registry, RunConfig,
};
use stated_skein::ring::{CyclotomicField, CyclotomicSpec, RingMode};
use stated_skein::tl::{jones_wenzl, TLElement};

#[test]
fn both_calculi_agree_on_the_lemma() {
    for s in 1..=3 {
        for k in 1..=s {
            let m = s - k;
            assert_eq!(check_uvkm(k, m).unwrap(), check_uvkm_stated(k, m), "k={k} m={m}");
            assert!(check_uvkm_stated(k, m));
        }
    }
}

#[test]
fn n_equals_two() {
    let field = CyclotomicField::new(16);
    assert_eq!(CyclotomicSpec::new(16).ord_q4(), 2);
    // f_1 is a plain strand
    assert_eq!(*jones_wenzl(&field, 1).unwrap(), TLElement::identity(&field, 1));
    let r = sphere_slide_chain(&CyclotomicSpec::new(16)).unwrap();
    assert_eq!(r.certificate.as_deref(), Some("v_{0,1} = 0"));
}

#[test]
fn formal_module_needs_both_relations() {
    // without the slide there is nothing to telescope: u_{k,m} survives
    let f = FormalVModule::new(4);
    let lemma = f.lemma_relation(2, 1);
    assert!(lemma.keys().any(|s| matches!(s, skein_verify::Sym::U(2, 1))));
    let step = f.step_relation(2, 1);
    assert!(step.keys().all(|s| matches!(s, skein_verify::Sym::V(..))));
}

#[test]
fn corrected_hp_statement_over_many_orders() {
    for m in 3..=60u64 {
        let r = hoste_przytycki(RingMode::Cyclotomic(m));
        assert!(r.corrected_claim, "m={m}");
        if m % 8 != 0 && r.n.unwrap() >= 3 {
            assert_eq!(r.x_n_minus_2, Some(true), "m={m}");
        }
    }
}

#[test]
fn registry_selection() {
    let reg = Registry::default();
    assert_eq!(reg.names().len(), 15);
    assert_eq!(reg.select("disk,hh0").unwrap().len(), 2);
    assert!(reg.select("disk,nope").is_err());
    let report = reg.run("hh0,disk,catalan", &RunConfig::default()).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["catalan", "disk", "hh0"]);
    assert!(report.all_passed);
}

#[test]
fn report_json_shape() {
    let reg = Registry::default();
    let report = reg.run("frobenius", &RunConfig { n: Some(2), ..RunConfig::default() }).unwrap();
    let v = serde_json::to_value(&report).unwrap();
    assert_eq!(v["checks"][0]["status"], "pass");
    assert!(v["checks"][0]["wall_ms"].is_number());
    assert_eq!(v["config"]["rings"][1], "cyclo:16");
    assert_eq!(v["checks"][0]["details"]["reports"][0]["cofactor"], "x");
}
