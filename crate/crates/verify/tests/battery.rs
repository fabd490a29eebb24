use std::time::{Duration, Instant};

use finsleroid_verify::{registry, run_all, run_checks, summary_table, to_json, Family, DEFAULT_GRID};

#[test]
fn default_battery_passes_quickly() {
    let start = Instant::now();
    let reports = run_all(&DEFAULT_GRID, 42, 4);
    let elapsed = start.elapsed();
    println!("{}", summary_table(&reports));
    assert_eq!(reports.len(), registry().len());
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    assert!(failed.is_empty(), "failed: {failed:?}");
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
}

#[test]
fn reports_are_sorted_and_reproducible() {
    let checks: Vec<_> = registry()
        .into_iter()
        .filter(|c| c.family == Family::Map)
        .collect();
    let a = run_checks(&checks, &[-1.0, 0.5], 7, 4);
    let b = run_checks(&checks, &[-1.0, 0.5], 7, 4);
    assert_eq!(to_json(&a), to_json(&b));
    let names: Vec<&String> = a.iter().map(|r| &r.name).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn zero_grid_collapses_to_classical_norms() {
    let reports = run_all(&[0.0], 42, 4);
    println!("{}", summary_table(&reports));
    for r in &reports {
        assert!(r.pass, "{} failed at g = 0", r.name);
        // finite-difference checks are limited by the stencil, not by g
        if r.tolerance <= 1e-10 {
            assert!(r.max_residual <= 1e-12, "{}: {}", r.name, r.max_residual);
        }
    }
}

#[test]
fn out_of_range_g_yields_failed_reports_without_aborting() {
    let reports = run_all(&[0.5, 2.5], 42, 4);
    assert_eq!(reports.len(), registry().len());
    for r in &reports {
        let needs_pd = r.family != Family::Sr;
        let fixed_scope = r.name.ends_with("_reduction");
        if needs_pd && !fixed_scope {
            assert!(!r.pass, "{} should fail for g = 2.5", r.name);
            assert!(r.max_residual.is_infinite());
            assert!(r.diagnostic.as_deref().unwrap().contains("2.5"));
        } else {
            assert!(r.pass, "{}", r.name);
        }
    }
}

#[test]
fn json_report_is_an_array_of_objects() {
    let checks: Vec<_> = registry().into_iter().filter(|c| c.name.starts_with("sr.land")).collect();
    let json = to_json(&run_checks(&checks, &[1.0], 42, 4));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert_eq!(arr[0]["name"], "sr.landmarks");
    assert_eq!(arr[0]["family"], "SR");
    assert_eq!(arr[0]["pass"], true);
    assert_eq!(arr[0]["worst_case_input"]["g"].as_f64(), Some(1.0));
}
