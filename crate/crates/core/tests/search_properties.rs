use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use qcsd_core::search::{canonical_form, divisor_filter, Candidates};
use qcsd_core::{
    prescreen_min_weight, run_search, weight_distribution, DivisorMode, QcCode, SearchConfig,
};

fn small_config(mode: DivisorMode) -> SearchConfig {
    SearchConfig {
        k: 21,
        window_min: 5,
        window_max: 12,
        weights: BTreeSet::from([5, 7]),
        divisor_mode: mode,
        target_d: 8,
        prescreen_info_weight: 3,
        workers: 2,
    }
}

fn canon_set(cfg: &SearchConfig) -> BTreeSet<String> {
    run_search(cfg)
        .unwrap()
        .into_iter()
        .map(|h| h.poly)
        .collect()
}

#[test]
fn hits_meet_the_target() {
    let cfg = small_config(DivisorMode::Any);
    let hits = run_search(&cfg).unwrap();
    assert!(!hits.is_empty());
    for hit in &hits {
        let p = hit.poly.parse().unwrap();
        let code = QcCode::new(p, cfg.k).unwrap();
        assert!(code.is_self_dual());
        assert_eq!(hit.poly, canonical_form(&p, hit.window).unwrap());
        assert!(hit.report.d.unwrap() >= cfg.target_d);
        assert!(cfg.weights.contains(&hit.weight));
        assert!((cfg.window_min..=cfg.window_max).contains(&hit.window));
    }
}

#[test]
fn repeated_search_is_identical_and_unique() {
    let cfg = small_config(DivisorMode::RequireNontrivial);
    let first = run_search(&cfg).unwrap();
    let second = run_search(&SearchConfig {
        workers: 1,
        ..cfg.clone()
    })
    .unwrap();
    let strip = |hits: &[qcsd_core::SearchHit]| {
        hits.iter()
            .map(|h| (h.poly.clone(), h.window, h.weight, h.report.d, h.report.a12))
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&first), strip(&second));
    let unique: BTreeSet<&str> = first.iter().map(|h| h.poly.as_str()).collect();
    assert_eq!(unique.len(), first.len());
}

#[test]
fn any_mode_contains_nontrivial_mode() {
    let strict = canon_set(&small_config(DivisorMode::RequireNontrivial));
    let loose = canon_set(&small_config(DivisorMode::Any));
    assert!(strict.is_subset(&loose), "{strict:?} not in {loose:?}");
    assert!(!strict.is_empty());
    assert!(loose.len() >= strict.len());
}

#[test]
fn prescreen_rejects_are_confirmed() {
    let cfg = small_config(DivisorMode::Any);
    let mut rejects: Vec<QcCode> = Candidates::new(&cfg)
        .filter(|p| divisor_filter(p, cfg.k, cfg.divisor_mode))
        .map(|p| QcCode::new(p, cfg.k).unwrap())
        .filter(|c| {
            prescreen_min_weight(c, cfg.prescreen_info_weight, cfg.target_d as u32).is_some()
        })
        .collect();
    rejects.shuffle(&mut StdRng::seed_from_u64(0x5ea7_c400));
    assert!(rejects.len() >= 20);
    for code in rejects.iter().take(40) {
        let dist = weight_distribution(code, 1).unwrap();
        let light = dist.min_distance().map_or(true, |d| d < cfg.target_d);
        assert!(
            light || code.rank_from_gcd() < cfg.k,
            "prescreen wrongly rejected {}",
            code.p()
        );
    }
}
