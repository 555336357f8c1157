//! The randomized harness behind `achroma check`: thirteen suites covering
//! switching invariance, operation bounds, class operations, brute-force
//! cross-checks, formula agreement, and structural consequences. A fixed
//! seed makes the whole report reproducible byte for byte.

use achroma::harness::check_harness;
use achroma::solver::SearchOptions;

fn main() {
    let report = check_harness(1, 5, 60, &SearchOptions::default());
    print!("{}", report.render_text());
    let violations = report
        .harness
        .as_ref()
        .map(|h| h.suites.iter().filter(|s| s.violation.is_some()).count())
        .unwrap_or(0);
    assert_eq!(violations, 0, "all suites hold on this stream");
}
