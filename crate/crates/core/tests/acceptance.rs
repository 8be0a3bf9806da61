//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use kanforge::abelian::IntMatrix;
use kanforge::abelian::{dold_kan_gamma, dold_kan_round_trip, random_complex, FgAbGroup, RandomComplexShape};
use kanforge::classifying::{k_space, w_bar_group, w_bar_sset, w_total};
use kanforge::corpus;
use kanforge::homalg::{
    acyclic_assembly_check, balanced_check, group_cohomology_all, group_homology_all, lhs_report, periodic_cohomology,
    random_exact_rows, seeded_rng, shapiro_check, AssemblyOutcome, GModule, GroupExtension, RandomGrid,
};
use kanforge::homotopy::{pi0, pi_n, pi_n_group, FinGroup, SimplicialGroup};
use kanforge::relations::{adjunction_oracles, relation_oracles};
use kanforge::simplicial::sset::is_isomorphism;
use kanforge::simplicial::standard::{horn, simplex};
use kanforge::simplicial::{ex, ex_horns_fill, is_fibration, is_kan, LiftMode, PointedTruncSSet, TruncSSet};
use kanforge::Result;

type Outcome = Result<std::result::Result<(), String>>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

macro_rules! check {
    ($cond:expr, $($fmt:tt)+) => {
        if let Err(m) = ensure($cond, || format!($($fmt)+)) {
            return Ok(Err(m));
        }
    };
}

fn pointed(x: TruncSSet) -> PointedTruncSSet {
    PointedTruncSSet::new(Arc::new(x), 0).expect("vertex 0")
}

fn relations_exhaustive() -> Outcome {
    for o in relation_oracles(4) {
        check!(o.holds(), "{}: {:?}", o.name, o.first_failure);
    }
    Ok(Ok(()))
}

fn delta_adjunction() -> Outcome {
    for o in adjunction_oracles(3) {
        check!(o.holds() && o.cases > 0, "{}: {:?}", o.name, o.first_failure);
    }
    Ok(Ok(()))
}

fn kan_and_fibrations() -> Outcome {
    let d = 3;
    for (name, x) in corpus::discrete_sets(d) {
        check!(is_kan(&x)?, "{name} is not Kan");
    }
    for (name, g) in corpus::simplicial_groups(d)? {
        check!(is_kan(g.underlying())?, "underlying {name} is not Kan");
    }
    check!(!is_kan(&simplex(1, d).sset)?, "Δ¹ reported Kan");
    check!(!is_kan(&horn(2, 1, d)?.sset)?, "Λ²₁ reported Kan");
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::symmetric3()] {
        let w = w_total(&SimplicialGroup::discrete(&g, d))?;
        check!(is_fibration(&w.projection, LiftMode::Horn)?.holds, "UW → UW̄ not a fibration for |G| = {}", g.order());
    }
    Ok(Ok(()))
}

fn ex_machinery() -> Outcome {
    let budget = 100_000;
    let d = 2;
    for (name, x) in corpus::simplicial_sets(d) {
        let x = Arc::new(x);
        let (_, eps) = ex(&x, 1, budget)?;
        check!(eps.is_valid() && eps.is_levelwise_injective(), "ε not injective on {name}");
        let r = ex_horns_fill(&x, 2, budget)?;
        check!(r.holds(), "{name}: horn {:?} of Ex does not fill in Ex²", r.failure);
    }
    for (name, x) in corpus::discrete_sets(d) {
        let (e, eps) = ex(&x, 1, budget)?;
        check!(is_isomorphism(&eps) && e.cell_counts() == x.cell_counts(), "Ex({name}) ≇ {name}");
    }
    Ok(Ok(()))
}

fn classifying_homotopy() -> Outcome {
    let d = 4;
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::cyclic(4), FinGroup::symmetric3()] {
        let disc = SimplicialGroup::discrete(&g, d);
        let x = pointed(w_bar_sset(&disc)?);
        let mut loop_orders = Vec::new();
        for n in 1..d {
            loop_orders.push(pi_n(&x, n)?.len());
        }
        let want: Vec<usize> = (1..d).map(|n| if n == 1 { g.order() } else { 1 }).collect();
        check!(loop_orders == want, "|πₙ W̄G| = {loop_orders:?} for |G| = {}", g.order());
        // Moore side: πₙ(W̄G) ≅ πₙ₋₁(G), and πₙ of W̄G itself when it is a simplicial group
        for n in 1..d {
            let moore = pi_n_group(&disc, n - 1)?.order();
            check!(moore == loop_orders[n - 1], "Moore |π_{} G| = {moore} vs loop route", n - 1);
        }
        if g.is_abelian() {
            let wb = w_bar_group(&disc)?;
            for n in 1..d {
                let moore = pi_n_group(&wb, n)?.order();
                check!(moore == loop_orders[n - 1], "Moore |π_{n} W̄G| = {moore} vs loop route");
            }
        }
    }
    let k = SimplicialGroup::from_ab(&k_space(&FgAbGroup::cyclic(3), 2, d)?)?;
    let x = pointed(k.underlying().as_ref().clone());
    for n in 1..d {
        let (lp, moore) = (pi_n(&x, n)?.len(), pi_n_group(&k, n)?.order());
        let want = if n == 2 { 3 } else { 1 };
        check!(lp == want && moore == want, "K(ℤ/3,2): π_{n} loop {lp}, Moore {moore}");
    }
    Ok(Ok(()))
}

fn dold_kan() -> Outcome {
    let mut rng = seeded_rng(0);
    let shape = RandomComplexShape { max_length: 3, max_rank: 2, orders: vec![0, 2, 3, 4] };
    for i in 0..50 {
        let b = random_complex(&mut rng, &shape);
        let r = dold_kan_round_trip(&b, 3)?;
        check!(r.holds(), "complex {i}: {r:?}");
    }
    // finite complexes small enough to enumerate U Γ(B)
    let finite = RandomComplexShape { max_length: 2, max_rank: 1, orders: vec![2, 3, 4] };
    let mut checked = 0;
    while checked < 12 {
        let b = random_complex(&mut rng, &finite);
        let d = b.length() + 1;
        let gamma = dold_kan_gamma(&b, d)?;
        if gamma.levels().iter().any(|l| l.cardinality().unwrap() > 4096) {
            continue;
        }
        checked += 1;
        let sg = SimplicialGroup::from_ab(&gamma)?;
        let x = pointed(sg.underlying().as_ref().clone());
        let h0 = b.homology(0).cardinality().unwrap() as usize;
        check!(pi0(&x.space)?.len() == h0, "|π₀ UΓB| ≠ |H₀ B| for {b:?}");
        for n in 1..d {
            let h = b.homology(n).cardinality().unwrap() as usize;
            let (lp, moore) = (pi_n(&x, n)?.len(), pi_n_group(&sg, n)?.order());
            check!(lp == h && moore == h, "π_{n}: loop {lp}, Moore {moore}, |H_{n}| = {h} for {b:?}");
        }
    }
    Ok(Ok(()))
}

fn group_cohomology() -> Outcome {
    for m in [2, 3, 4, 6] {
        let a = GModule::integers(&FinGroup::cyclic(m));
        let (bar, oracle) = (group_cohomology_all(&a, 4)?, periodic_cohomology(&a, 4)?);
        check!(bar == oracle, "Hⁿ(ℤ/{m}, ℤ): bar {bar:?} vs periodic {oracle:?}");
    }
    for g in [FinGroup::symmetric3(), FinGroup::cyclic(4), FinGroup::quaternion()] {
        let h1 = group_homology_all(&GModule::integers(&g), 1)?[1].clone();
        check!(h1.is_isomorphic(&g.abelianization()), "H₁ ≠ G^ab for |G| = {}", g.order());
    }
    let s3 = FinGroup::symmetric3();
    let t = (1..6).find(|&x| s3.element_order(x) == 2).expect("a transposition");
    for (g, iota) in [(FinGroup::cyclic(4), vec![0, 2]), (s3.clone(), vec![0, t])] {
        let a = GModule::integers(&FinGroup::cyclic(2));
        let c = shapiro_check(&a, &g, &iota, 3)?;
        check!(c.holds(), "Shapiro for ℤ/2 ≤ |G| = {}: {:?} vs {:?}", g.order(), c.left, c.right);
    }
    let z2 = FinGroup::cyclic(2);
    let sign = GModule::from_generator_action(z2.clone(), FgAbGroup::integers(), &[(1, IntMatrix::diagonal(&[-1]))])?;
    for (m, n) in
        [(GModule::integers(&z2), GModule::integers(&z2)), (sign.clone(), GModule::integers(&z2)), (sign.clone(), sign)]
    {
        let r = balanced_check(&m, &n, 4)?;
        check!(r.holds(), "balanced check: {r:?}");
    }
    let z3 = FinGroup::cyclic(3);
    let r = balanced_check(&GModule::regular(&z3), &GModule::integers(&z3), 4)?;
    check!(r.holds(), "balanced check (regular ℤ/3): {r:?}");
    Ok(Ok(()))
}

fn acyclic_assembly() -> Outcome {
    let mut rng = seeded_rng(0);
    for i in 0..100 {
        let d = random_exact_rows(&mut rng, RandomGrid::default());
        let r = acyclic_assembly_check(&d);
        check!(r == AssemblyOutcome::Holds, "double complex {i}: {r:?}");
    }
    Ok(Ok(()))
}

fn lhs() -> Outcome {
    let z6 = FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(3));
    let exts = [
        ("ℤ/2 → ℤ/4 → ℤ/2", GroupExtension::from_normal_subgroup(&FinGroup::cyclic(4), &[0, 2])?),
        ("ℤ/3 → ℤ/2×ℤ/3 → ℤ/2", GroupExtension::from_normal_subgroup(&z6, &[0, 1, 2])?),
    ];
    for (name, ext) in exts {
        let a = GModule::integers(&ext.g);
        let r = lhs_report(&ext, &a, 4, 6)?;
        check!(r.e2_holds(), "{name}: E₂ differs from Hᵖ(Q, H^q(H, ℤ))");
        check!(r.abutment_holds(), "{name}: abutment {:?}", r.abutment);
    }
    Ok(Ok(()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("relation calculus, carriers <= 4", relations_exhaustive, Duration::from_secs(10)),
        ("exact-completion adjunction, carriers <= 3", delta_adjunction, Duration::from_secs(30)),
        ("Kan and fibration checkers", kan_and_fibrations, Duration::from_secs(120)),
        ("Ex machinery", ex_machinery, Duration::from_secs(120)),
        ("homotopy of classifying complexes", classifying_homotopy, Duration::from_secs(300)),
        ("Dold-Kan round trips and homotopy", dold_kan, Duration::from_secs(120)),
        ("group cohomology", group_cohomology, Duration::from_secs(300)),
        ("acyclic assembly, 100 double complexes", acyclic_assembly, Duration::from_secs(60)),
        ("LHS spectral sequence", lhs, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match outcome {
            Ok(Ok(())) if took <= *limit => "PASS".to_string(),
            Ok(Ok(())) => format!("FAIL (took {took:.1?}, limit {limit:?})"),
            Ok(Err(m)) => format!("FAIL ({m})"),
            Err(e) => format!("FAIL (error: {e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {}: {verdict} - {name} [{took:.2?}]", i + 1);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
