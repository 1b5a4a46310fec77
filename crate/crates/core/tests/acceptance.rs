//! Acceptance gate: each criterion prints one PASS/FAIL line; any failure
//! makes the binary exit nonzero. Every comparison is exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::*;
use grassbounds::bounds::*;
use grassbounds::cli;
use grassbounds::face_vectors::*;
use grassbounds::gf2_ring::{height_w1_formula, make_ring, Gf2Polynomial};
use grassbounds::poincare::{poincare_polynomial, q_binomial, reduced_betti, BettiVector, IntegerPolynomial};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn poly(s: &str) -> Gf2Polynomial {
    s.parse().expect("test expression parses")
}

fn golden_table() -> Check {
    let out = cli::run(["grassbounds", "report", "--k", "3", "--n", "8", "--format", "csv"]);
    ensure!(out.code == 0, "exit {}: {}", out.code, out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    ensure!(lines.len() == 18, "expected header, 16 rows and sum, got {} lines", lines.len());
    let header: Vec<&str> = lines[0].split(',').collect();
    let cols: Vec<usize> = ["lbt", "lbtm", "slbtm"]
        .iter()
        .map(|m| header.iter().position(|h| h == m).ok_or(format!("missing column {m}")))
        .collect::<std::result::Result<_, _>>()?;
    ensure!(lines[1].starts_with("0,117,"), "f0 is not 117: {}", lines[1]);
    for (i, expected) in G3_R8_TABLE.iter().enumerate() {
        let row: Vec<&str> = lines[i + 1].split(',').collect();
        ensure!(row[0] == i.to_string(), "row {i} labelled {}", row[0]);
        for (c, want) in cols.iter().zip(expected) {
            ensure!(row[*c] == want.to_string(), "f_{i} {}: {} != {want}", header[*c], row[*c]);
        }
    }
    let sum: Vec<&str> = lines[17].split(',').collect();
    ensure!(sum[0] == "sum", "last row is not the sum row");
    for (c, want) in cols.iter().zip(G3_R8_SUMS) {
        ensure!(sum[*c] == want.to_string(), "sum {}: {} != {want}", header[*c], sum[*c]);
    }
    Ok(())
}

fn vertex_bounds() -> Check {
    for (k, n, want) in [(3, 8, 117), (3, 9, 185), (3, 16, 665), (3, 17, 905), (4, 8, 123)] {
        let got = delta_lower_bound(k, n).map_err(|e| e.to_string())?.value;
        ensure!(got == big(want), "delta({k},{n}) = {got}, expected {want}");
    }
    let r = grassmannian_report(4, 9, &[Method::Lbt]).map_err(|e| e.to_string())?;
    ensure!(r.delta.value == big(222), "delta(4,9) = {}", r.delta.value);
    ensure!(
        r.notes.iter().any(|n| n.contains("242")),
        "no note mentions 242: {:?}",
        r.notes
    );
    Ok(())
}

fn facet_bounds() -> Check {
    let f = lbt_face_bounds(&big(185), 18).map_err(|e| e.to_string())?;
    ensure!(f[18] == big(2990), "lbt facet (3,9) = {}", f[18]);
    ensure!(f[18] == big(185 * 18 - 20 * 17), "facet disagrees with 185*18-20*17");
    let r = grassmannian_report(3, 9, &[Method::Lbt]).map_err(|e| e.to_string())?;
    let lbt = r.method(Method::Lbt).ok_or("lbt missing")?;
    ensure!(r.f0 == big(185), "report f0 = {}", r.f0);
    ensure!(lbt.total == big(87555764u64), "lbt total = {}", lbt.total);
    let by_hand: BigInt = lbt.bounds.iter().sum();
    ensure!(by_hand == lbt.total, "total is not the row sum");
    let stated = big(2) * ((big(185) - 18i64) * (BigInt::from(1u64 << 19) - 1i64) + 1i64);
    ensure!(
        r.notes.iter().any(|n| n.contains(&stated.to_string())),
        "no aggregate note quoting {stated}: {:?}",
        r.notes
    );
    Ok(())
}

fn cohomology_oracle() -> Check {
    let mut cases: Vec<(usize, usize)> = (2..=4)
        .flat_map(|k| (2 * k..=10).map(move |n| (k, n)))
        .collect();
    cases.extend([(2, 11), (2, 12)]);
    for (k, n) in cases {
        let ring = make_ring(k, n).map_err(|e| e.to_string())?;
        let formula = height_w1_formula(k, n).map_err(|e| e.to_string())?;
        ensure!(ring.height_w1() == formula, "({k},{n}) height {} vs formula {formula}", ring.height_w1());
        ensure!(formula == stong_height(k, n), "({k},{n}) formula {formula} vs oracle {}", stong_height(k, n));
        for w in stong_witness_candidates(k, n).map_err(|e| e.to_string())? {
            let nonzero = ring
                .is_nonzero_class(&Gf2Polynomial::from(w.to_monomial()))
                .map_err(|e| e.to_string())?;
            ensure!(nonzero, "({k},{n}) witness {w} reduces to zero");
        }
    }
    let ring = make_ring(2, 5).map_err(|e| e.to_string())?;
    ensure!(
        ring.ideal_generators() == [poly("w1^4+w1^2*w2+w2^2"), poly("w1^3*w2")],
        "ring(2,5) generators {:?}",
        ring.ideal_generators().iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );
    ensure!(
        ring.normal_form(&poly("w1^3*w2")).map_err(|e| e.to_string())?.is_zero(),
        "w1^3*w2 is not zero in ring(2,5)"
    );
    Ok(())
}

fn dimension_symmetry() -> Check {
    let t = pascal(16);
    let mut cases: Vec<(usize, usize)> = (2..=4)
        .flat_map(|k| (2 * k..=10).map(move |n| (k, n)))
        .collect();
    cases.extend([(2, 11), (2, 12)]);
    for (k, n) in cases {
        let betti = make_ring(k, n).map_err(|e| e.to_string())?.gf2_betti();
        let d = k * (n - k);
        ensure!(betti.len() == d + 1, "({k},{n}) has {} degrees", betti.len());
        let total: u64 = betti.iter().sum();
        ensure!(big(total) == choose(&t, n as i64, k as i64), "({k},{n}) total {total}");
        for (j, b) in betti.iter().enumerate() {
            let oracle = box_partitions(k, n - k, j);
            ensure!(*b == oracle, "({k},{n}) degree {j}: {b} vs {oracle} partitions");
            ensure!(*b == betti[d - j], "({k},{n}) not palindromic at {j}");
        }
    }
    Ok(())
}

fn poincare_suite() -> Check {
    let p = poincare_polynomial(3, 8).map_err(|e| e.to_string())?;
    ensure!(p.to_string() == "1+t^4+t^7+t^8+t^11+t^15", "P(3,8) = {p}");
    for n in 1..=12 {
        for k in 0..=n {
            let q = q_binomial(n, k).map_err(|e| e.to_string())?;
            let mirror = q_binomial(n, n - k).map_err(|e| e.to_string())?;
            ensure!(q == mirror, "[{n} {k}] != [{n} {}]", n - k);
            if k >= 1 && k < n {
                // the other Pascal rule: [n k] = q^{n-k}[n-1 k-1] + [n-1 k]
                let a = q_binomial(n - 1, k - 1).map_err(|e| e.to_string())?.shift(n - k);
                let b = q_binomial(n - 1, k).map_err(|e| e.to_string())?;
                ensure!(q == a.add(&b), "recurrence fails at [{n} {k}]");
            }
            let at_one: BigInt = q.coefficients().iter().sum();
            ensure!(at_one == choose(&pascal(12), n as i64, k as i64), "[{n} {k}](1)");
        }
    }
    for n in (2..=12).step_by(2) {
        for k in 1..n {
            let p = poincare_polynomial(k, n).map_err(|e| e.to_string())?;
            let d = k * (n - k);
            ensure!(p.degree() == Some(d), "P({k},{n}) has degree {:?}", p.degree());
            let rev: Vec<BigInt> = p.coefficients().iter().rev().cloned().collect();
            ensure!(
                IntegerPolynomial::from_coefficients(rev) == p,
                "P({k},{n}) is not palindromic"
            );
        }
    }
    Ok(())
}

fn random_face_vector(rng: &mut StdRng, d: usize) -> FaceVector {
    FaceVector::new((0..=d).map(|_| big(rng.gen_range(0..1_000_000u64))).collect()).unwrap()
}

fn face_vector_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let d = rng.gen_range(0..=20);
        let fv = random_face_vector(&mut rng, d);
        let back = h_to_f(&f_to_h(&fv)).map_err(|e| e.to_string())?;
        ensure!(back == fv, "round trip failed for {:?}", fv.as_slice());
    }

    let torus = FaceVector::new(vec![big(7), big(21), big(14)]).unwrap();
    let h = f_to_h(&torus);
    ensure!(h.as_slice() == [big(1), big(4), big(10), big(-1)], "torus h {:?}", h.as_slice());
    let b = BettiVector::from_reduced(2, &[big(0), big(2), big(1)]).map_err(|e| e.to_string())?;
    let hpp = h_double_prime(&h, &b).map_err(|e| e.to_string())?;
    ensure!(hpp.as_slice() == [big(1), big(4), big(4), big(1)], "torus h'' {:?}", hpp.as_slice());
    ensure!(check_dehn_sommerville(&hpp), "torus fails Dehn-Sommerville");

    let seq = |v: &[i64]| v.iter().map(|&x| big(x)).collect::<Vec<_>>();
    ensure!(is_m_sequence(&seq(&[1, 2, 3, 4])), "(1,2,3,4) rejected");
    ensure!(!is_m_sequence(&seq(&[1, 2, 4])), "(1,2,4) accepted");

    let t = pascal(20);
    for _ in 0..200 {
        let d = rng.gen_range(1..=16);
        let fv = random_face_vector(&mut rng, d);
        let betas: Vec<BigInt> = (0..=d).map(|_| big(rng.gen_range(0..50u64))).collect();
        let b = BettiVector::from_reduced(d, &betas).unwrap();
        let hpp = h_double_prime(&f_to_h(&fv), &b).map_err(|e| e.to_string())?;
        let fpp = f_double_prime(&hpp).map_err(|e| e.to_string())?;
        for i in 1..=d + 1 {
            // at the facet row beta_d drops out, as in h''_{d+1}
            let top = if i == d + 1 { d } else { i };
            let correction: BigInt = (1..=top)
                .map(|k| choose(&t, i as i64 - 1, k as i64 - 1) * b.beta(k as i64 - 1))
                .sum();
            let want = fv.get(i as i64 - 1) - choose(&t, d as i64 + 1, i as i64) * correction;
            ensure!(fpp.get(i as i64) == want, "f'' bridge fails at d={d}, i={i}");
        }
    }
    Ok(())
}

fn exponential_bounds() -> Check {
    let t = pascal(40);
    for n in (6..=16).step_by(2) {
        let d = 2 * (n - 2);
        let betti = reduced_betti(2, n).map_err(|e| e.to_string())?;
        // the exponential bound comes from the generic vertex count n(n+1)/2
        let f0 = big(n * (n + 1) / 2);
        let row = lbtm_face_bounds(&f0, d, &betti).map_err(|e| e.to_string())?;
        let bound = g2_exponential_facet_bound(n).map_err(|e| e.to_string())?;
        ensure!(bound == row[d], "n={n}: exponential {bound} vs lbtm facet {}", row[d]);
    }
    for m in 2..=10usize {
        let direct: BigInt = (1..=m as i64 - 2).map(|k| choose(&t, 4 * m as i64 - 4, 4 * k)).sum();
        let e = 2 * m as u32 - 3;
        let sign = if m % 2 == 1 { big(1) } else { big(-1) };
        let closed = BigInt::from(1) << (2 * e) as usize;
        let closed = closed + sign * (BigInt::from(1) << e as usize) - 2;
        ensure!(direct == closed, "m={m}: sum {direct} vs {closed}");
        ensure!(g2_betti_binomial_sum(m) == direct, "library sum differs at m={m}");
    }
    let betti = reduced_betti(3, 7).map_err(|e| e.to_string())?;
    let hpp = h_nonneg_facet_bound(12, &betti).map_err(|e| e.to_string())?;
    ensure!(hpp >= big(495), "h_nonneg facet (3,7) = {hpp} < C(12,4) = 495");
    ensure!(hpp == big(991), "h_nonneg facet (3,7) = {hpp}, expected 991");
    Ok(())
}

fn lbt_family_properties() -> Check {
    let mut rng = StdRng::seed_from_u64(0xb0b);
    for _ in 0..500 {
        let d = rng.gen_range(1..=30usize);
        let f0 = big(rng.gen_range(d as u64 + 2..=d as u64 + 10_000));
        let betas: Vec<BigInt> = (0..=d).map(|_| big(rng.gen_range(0..20u64))).collect();
        let b = BettiVector::from_reduced(d, &betas).unwrap();
        let lbt = lbt_face_bounds(&f0, d).map_err(|e| e.to_string())?;
        let lbtm = lbtm_face_bounds(&f0, d, &b).map_err(|e| e.to_string())?;
        let slbtm = slbtm_face_bounds(&f0, d, &b).map_err(|e| e.to_string())?;
        ensure!(dominates(&lbtm, &lbt), "lbtm < lbt at d={d}, f0={f0}");
        ensure!(dominates(&slbtm, &lbtm), "slbtm < lbtm at d={d}, f0={f0}");
        let sum: BigInt = lbt.iter().sum();
        let closed = big(2) * ((&f0 - d) * ((BigInt::from(1) << d) - 1) + 1);
        ensure!(sum == closed, "d={d}, f0={f0}: sum {sum} vs {closed}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("golden G_3(R^8) table", golden_table),
        ("vertex bounds", vertex_bounds),
        ("facet bounds", facet_bounds),
        ("cohomology oracle", cohomology_oracle),
        ("dimension and symmetry", dimension_symmetry),
        ("Poincare polynomials", poincare_suite),
        ("face-vector transforms", face_vector_suite),
        ("exponential facet bounds", exponential_bounds),
        ("LBT family properties", lbt_family_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(()) => println!("PASS {} {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} ({ms} ms): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
