//! Acceptance suite: every headline statement at its stated scale, one
//! pass/fail line per criterion (run with `--nocapture` to see them all).

use std::time::{Duration, Instant};

use sgcolor::campaigns::{self, Options};
use sgcolor::constructions::{self, NegTarget};
use sgcolor::families;
use sgcolor::matching::{self, Mode};
use sgcolor::{solver, topo, Error};

fn criterion(id: &str, what: &str, ok: bool) {
    println!("criterion {id} ({what}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {what}");
}

fn opts() -> Options {
    Options { seed: 0, ..Default::default() }
}

#[test]
fn criterion_01_chi_b_of_hat_kneser_graphs() {
    let start = Instant::now();
    let rep = campaigns::signed_kneser(&Options { max_n: Some(5), ..opts() }).unwrap();
    let chi_records = rep.records.iter().filter(|r| r.stat == "chi_b").count();
    let within_budget = start.elapsed() <= Duration::from_secs(600);
    criterion(
        "1",
        "chi_b(hat KS(n,k)) = n-k+1 for 1 <= k <= n <= 5, within 10 minutes",
        rep.passed() && chi_records == 15 && within_budget,
    );

    // extended tier: n = 6, 10-minute per-instance budget, timeouts recorded
    for k in 1..=6usize {
        let fam = families::kneser_signed_hat(6, k).unwrap();
        match solver::chi_b_exact(&fam.graph, Some(7 - k), Some(Duration::from_secs(600))) {
            Ok(res) => {
                println!("  extended n=6 k={k}: chi_b = {} (expected {})", res.value, 7 - k);
                assert_eq!(res.value, 7 - k);
            }
            Err(Error::Timeout { lower, upper }) => {
                println!("  extended n=6 k={k}: timeout, bounds [{lower}, {upper}]");
            }
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
}

#[test]
fn criterion_02_hat_schrijver_graphs_are_critical() {
    let start = Instant::now();
    let rep = campaigns::signed_schrijver(&Options { max_n: Some(6), ..opts() }).unwrap();
    let crit_records = rep.records.iter().filter(|r| r.stat == "vertex-critical").count();
    criterion(
        "2",
        "chi_b(hat SS(n,k)) = n-k+1 and vertex-critical for n <= 6, within 5 minutes",
        rep.passed() && crit_records == 21 && start.elapsed() <= Duration::from_secs(300),
    );
}

#[test]
fn criterion_03_negative_subgraphs_of_hat_graphs() {
    let rep = campaigns::negative_hat(&Options { max_n: Some(5), ..opts() }).unwrap();
    criterion(
        "3",
        "chi of hat KS/SS negative subgraphs = n-k+1 for n <= 5",
        rep.passed() && rep.records.len() == 30,
    );
}

#[test]
fn criterion_04_negative_subgraphs_of_full_graphs() {
    let rep = campaigns::negative_full(&Options { max_n: Some(5), ..opts() }).unwrap();
    // k = 1 degenerates: SS(n,1) = KS(n,1), so its negative subgraph is
    // K_{2n} with chi = 2n; the n-k+2 formula is checked for k >= 2.
    criterion(
        "4",
        "chi(KS-) = 2n-2k+2 and chi(SS-) = n-k+2 (k >= 2; k = 1 checked at its true value 2n)",
        rep.passed() && rep.records.len() == 30,
    );
}

#[test]
fn criterion_05_balanced_chromatic_wrappers() {
    let rep = campaigns::prop14(&Options { samples: Some(500), ..opts() }).unwrap();
    criterion(
        "5",
        "chi_b(G,-) = ceil(chi/2) and chi_b(G,±) = chi, exhaustive n <= 5 plus 500 samples n = 6..7",
        rep.passed(),
    );
}

#[test]
fn criteria_06_07_oracle_agreement() {
    let rep = campaigns::prop24(&Options { samples: Some(200), ..opts() }).unwrap();
    let switching_rec = rep.records.iter().find(|r| r.key.contains("n<=10")).unwrap();
    criterion(
        "6",
        "chi_b_exact = chi_b_via_switchings on 200 seeded graphs, order <= 10",
        switching_rec.ok,
    );
    let brute_rec = rep.records.iter().find(|r| r.key.contains("n<=9")).unwrap();
    criterion(
        "7",
        "chi_b_exact = chi_b_brute_force on 200 seeded graphs, order <= 9",
        brute_rec.ok,
    );
}

#[test]
fn criterion_08_staircase_matchings() {
    let start = Instant::now();
    let rep = campaigns::k2_matching(&Options {
        max_n: Some(5),
        samples: Some(10_000),
        ..opts()
    })
    .unwrap();
    let exhaustive: u64 = rep
        .records
        .iter()
        .filter(|r| r.key.contains("exhaustive"))
        .filter(|r| r.key.contains("n=4") || r.key.contains("n=5"))
        .count() as u64;
    criterion(
        "8",
        "matching of size n-1 in every flip: exhaustive n <= 5 (1088 instances at n = 4, 5) \
         and 10^4 samples at n = 8, 10, 12, within 1 minute",
        rep.passed() && exhaustive == 2 && start.elapsed() <= Duration::from_secs(60),
    );
}

#[test]
fn criterion_09_hemispheres_and_general_position() {
    let start = Instant::now();
    let rep = campaigns::gale(&Options { samples: Some(10_000), max_n: Some(8), ..opts() }).unwrap();
    criterion(
        "9",
        "10^4 hemispheres always contain an alternating k-set (n <= 8, n-k <= 3) and the \
         general-position determinants are nonzero, within 2 minutes",
        rep.passed() && start.elapsed() <= Duration::from_secs(120),
    );
}

#[test]
fn criterion_10_construction_certificates() {
    let mut ok = true;
    // index covers of hat Kneser graphs, n <= 7
    for n in 1..=7usize {
        for k in 1..=n {
            let idx: Vec<usize> = (1..=n - k + 1).collect();
            let (fam, coloring) = constructions::cover_b_i(n, k, &idx).unwrap();
            ok &= coloring.class_count() == n - k + 1
                && fam.graph.verify_balanced_coloring(&coloring.colors).unwrap().is_accepted();
            // a non-initial index set must work as well
            let idx: Vec<usize> = (k..=n).collect();
            let (fam, coloring) = constructions::cover_b_i(n, k, &idx).unwrap();
            ok &= fam.graph.verify_balanced_coloring(&coloring.colors).unwrap().is_accepted();
        }
    }
    // one-vertex-deleted covers of hat Schrijver graphs, n <= 6, all vertices
    for n in 1..=6usize {
        for k in 1..=n {
            let fam = families::schrijver_signed_hat(n, k).unwrap();
            for a in &fam.vertices {
                let cover = constructions::critical_cover(n, k, a).unwrap();
                let expected_classes = if k == n { 0 } else { n - k };
                ok &= cover.coloring.class_count() == expected_classes
                    && cover.vertices.len() == fam.vertices.len() - 1
                    && !cover.vertices.contains(a)
                    && cover
                        .graph
                        .verify_balanced_coloring(&cover.coloring.colors)
                        .unwrap()
                        .is_accepted();
            }
        }
    }
    // positive-element colourings of negative subgraphs, n <= 5
    for n in 1..=5usize {
        for k in 1..=n {
            for (target, count) in [
                (NegTarget::HatKneser, n - k + 1),
                (NegTarget::HatSchrijver, n - k + 1),
                (NegTarget::Schrijver, n - k + 2),
            ] {
                if target == NegTarget::Schrijver && k == 1 {
                    // negative singletons carry no positive element; the
                    // construction is defined for k >= 2 (see Theorem 2.6's
                    // k = 1 degeneration)
                    assert!(constructions::cover_b_i_plus(n, k, count, target).is_err());
                    continue;
                }
                let cover = constructions::cover_b_i_plus(n, k, count, target).unwrap();
                ok &= cover
                    .graph
                    .edges()
                    .iter()
                    .all(|&(u, v)| cover.colors[u] != cover.colors[v]);
            }
        }
    }
    // equator covers at eps = 0.05 for d <= 2
    for (d, res) in [(1usize, 256usize), (2, 1000)] {
        let disc = topo::borsuk_discretization(d, 0.05, res, 41).unwrap();
        let coloring = constructions::equator_cover(&disc, 0.05).unwrap();
        ok &= coloring.class_count() <= d + 1
            && disc.graph.verify_balanced_coloring(&coloring.colors).unwrap().is_accepted();
    }
    criterion(
        "10",
        "cover certificates re-verify: index covers n <= 7, deleted covers n <= 6, negative \
         colourings n <= 5, equator covers d <= 2",
        ok,
    );
}

#[test]
fn criterion_11_schrijver_embedding() {
    let mut ok = true;
    for n in 1..=5usize {
        for k in 1..=n {
            let emb = families::embed_schrijver_negative(n, k).unwrap();
            ok &= emb.verified();
        }
    }
    criterion("11", "S(2n,k) embeds on negative edges of KS(n,k), exhaustive n <= 5", ok);
}

#[test]
fn criterion_12_borsuk_to_schrijver_homomorphism() {
    let rep = campaigns::hom(&opts()).unwrap();
    criterion(
        "12",
        "Borsuk discretizations map sign-preservingly into SS: d = 1 (256 points) and d = 2 \
         (~2000 points) at eps = 0.02, zero violations",
        rep.passed() && rep.records.len() == 2,
    );
}

#[test]
fn criterion_13_discrete_borsuk_chromatic() {
    let rep = campaigns::borsuk_d1(&opts()).unwrap();
    let circle = rep.records.iter().find(|r| r.key.starts_with("circle")).unwrap();
    let sphere = rep.records.iter().find(|r| r.key.starts_with("sphere")).unwrap();
    println!("  d=2 report: {} -> {}", sphere.stat, sphere.observed);
    criterion(
        "13",
        "chi_b(circle discretization, res 64) = 2 exactly; d = 2 value reported with \
         chi_b <= d+1 certified by the equator cover",
        circle.ok && sphere.ok,
    );
}

#[test]
fn criterion_14_vertex_count_formulas() {
    let rep = campaigns::counts(&Options { max_n: Some(8), ..opts() }).unwrap();
    criterion(
        "14",
        "|KS| = 2^k C(n,k), |hat KS| = 2^(k-1) C(n,k), |SS| = 2 C(n,k), |hat SS| = C(n,k) \
         for n <= 8",
        rep.passed() && rep.records.len() == 36,
    );
}

#[test]
fn antipodal_connectivity_demonstration() {
    // the finite stand-in for the continuous statements: on 100 seeded
    // symmetric 2-class cap covers of the sphere, some class connects an
    // antipodal pair
    let rep = campaigns::borsuk_d1(&opts()).unwrap();
    let caps = rep.records.iter().find(|r| r.key.contains("cap covers")).unwrap();
    criterion(
        "note",
        "antipodal connectivity on 100 seeded cap covers of the sphere",
        caps.ok,
    );
}

#[test]
fn conjecture_exploration_is_recorded() {
    // observational: the report must exist and carry per-case records, but
    // misses are observations rather than failures
    let rep = campaigns::conjecture(&opts()).unwrap();
    assert_eq!(rep.records.len(), 5);
    for r in &rep.records {
        println!("  conjecture {}: {}", r.key, r.observed);
    }
    // the proved cases (k = 1 and k = 2) must have found the subgraph in
    // every switching
    for r in rep.records.iter().filter(|r| r.key.contains("k=1") || r.key.contains("k=2")) {
        let found_all = r
            .observed
            .split('/')
            .next()
            .zip(r.observed.split('/').nth(1).and_then(|s| s.split(' ').next()))
            .map(|(a, b)| a == b)
            .unwrap_or(false);
        assert!(found_all, "proved case should always find the subgraph: {}", r.observed);
    }
}
