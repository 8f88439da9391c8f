//! The acceptance gate: twelve numbered checks, one test each, every one
//! printing a single `ACCEPTANCE n: PASS/FAIL` line (visible with
//! `--nocapture`). Each check recomputes its claimed values from scratch via
//! `reproduce::criterion_cases`; failures list every offending case.

use dem_cli::reproduce::{criterion_cases, RunOptions};

fn run(criterion: u32, label: &str) {
    let cases = criterion_cases(criterion, &RunOptions::default())
        .unwrap_or_else(|e| panic!("ACCEPTANCE {criterion}: ERROR — {e}"));
    assert!(!cases.is_empty(), "check {criterion} produced no cases");
    let failures: Vec<_> = cases.iter().filter(|c| !c.pass).collect();
    if failures.is_empty() {
        println!("ACCEPTANCE {criterion}: PASS ({} cases) — {label}", cases.len());
    } else {
        println!(
            "ACCEPTANCE {criterion}: FAIL ({}/{} cases) — {label}",
            failures.len(),
            cases.len()
        );
        for c in &failures {
            println!("  {}: expected `{}`, computed `{}`", c.id, c.expected, c.computed);
        }
        panic!("check {criterion} failed on {} of {} cases", failures.len(), cases.len());
    }
}

#[test]
fn acceptance_01_family_closed_forms() {
    run(1, "closed-form family values match the exact solver");
}

#[test]
fn acceptance_02_single_deletions_move_the_value_by_two() {
    run(2, "one edge deletion raises g8_star by 2 and lowers g6_prime by 2");
}

#[test]
fn acceptance_03_failing_probe_sets_leave_the_listed_edges_dark() {
    run(3, "all eight 3-probe rows on g6_prime miss exactly the listed edges");
}

#[test]
fn acceptance_04_deletion_bounds_hold_exhaustively() {
    run(4, "deletion bounds on every connected graph with n <= 6");
}

#[test]
fn acceptance_05_monitored_edge_structure() {
    run(5, "fast = naive, incident edges present, no monitored cycle (n <= 6)");
}

#[test]
fn acceptance_06_vertex_covers_monitor() {
    run(6, "dem <= cover number and every minimum cover monitors (n <= 6)");
}

#[test]
fn acceptance_07_sparse_graphs_track_the_cycle_space() {
    run(7, "dem <= fes + 1, equality on trees and unicyclic graphs (n <= 7)");
}

#[test]
fn acceptance_08_restriction_reduces_to_tree_covers() {
    run(8, "restricted monitoring in complete graphs equals subtree cover numbers");
}

#[test]
fn acceptance_09_hub_deletions_hit_their_gaps() {
    run(9, "fan, spider and cone hub deletions land on their predicted values");
}

#[test]
fn acceptance_10_large_preserving_deletions_exist() {
    run(10, "removing 2n-6 book edges preserves the value 2");
}

#[test]
fn acceptance_11_big_cone_by_formula_alone() {
    run(11, "conical:100,402 evaluates to 716 by formula, ratio 0.561453");
}

#[test]
fn acceptance_12_revalidation_is_consistent_and_fast() {
    run(12, "revalidation never contradicts the solver and stays under 50 ms");
}
