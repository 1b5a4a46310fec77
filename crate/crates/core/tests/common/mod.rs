//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's arithmetic; each value is rebuilt by a different route.

#![allow(dead_code)]

use num_bigint::BigInt;

/// The G_3(R^8) table at f0 = 117: columns lbt, lbtm, slbtm for f_0..f_15.
pub const G3_R8_TABLE: [[u64; 3]; 16] = [
    [117, 117, 117],
    [1736, 1736, 1736],
    [12680, 12680, 12680],
    [58380, 58380, 58380],
    [188188, 192556, 194376],
    [449176, 489216, 511056],
    [820248, 991848, 1111968],
    [1168310, 1631630, 2043470],
    [1311310, 2215070, 3207490],
    [1163448, 2532816, 4294576],
    [813176, 2451176, 4773496],
    [442988, 1946308, 4186728],
    [184380, 1189020, 2721460],
    [56680, 512200, 1214720],
    [12136, 136936, 330376],
    [1517, 17117, 41297],
];
pub const G3_R8_SUMS: [u64; 3] = [6684470, 14378806, 24703926];

pub fn big(x: impl Into<BigInt>) -> BigInt {
    x.into()
}

/// Pascal's triangle up to row `rows`, as big integers.
pub fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = vec![vec![big(1)]];
    for r in 1..=rows {
        let prev = &t[r - 1];
        let mut row = vec![big(1); r + 1];
        for c in 1..r {
            row[c] = &prev[c - 1] + &prev[c];
        }
        t.push(row);
    }
    t
}

/// `C(a, b)` looked up in a triangle, zero outside `0 <= b <= a`.
pub fn choose(t: &[Vec<BigInt>], a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        big(0)
    } else {
        t[a as usize][b as usize].clone()
    }
}

/// Number of partitions of `j` into at most `rows` parts each at most `cols`,
/// i.e. Young diagrams of size `j` inside a `rows x cols` box.
pub fn box_partitions(rows: usize, cols: usize, j: usize) -> u64 {
    fn go(parts_left: usize, cap: usize, rest: usize) -> u64 {
        if rest == 0 {
            return 1;
        }
        if parts_left == 0 || cap == 0 {
            return 0;
        }
        (1..=cap.min(rest))
            .map(|p| go(parts_left - 1, p, rest - p))
            .sum()
    }
    go(rows, cols, j)
}
/// Height of `w1` in `H^*(G_k(R^n); Z/2)`, from the closed form with `s` found
/// by a loop rather than bit tricks.
pub fn stong_height(k: usize, n: usize) -> usize {
    if k == 1 {
        return n - 1;
    }
    let mut s = 0usize;
    while (1usize << (s + 1)) < n {
        s += 1;
    }
    // now 2^s < n <= 2^{s+1}
    let full = (1usize << (s + 1)) - 1;
    if k == 2 || (k == 3 && n == (1 << s) + 1) {
        full - 1
    } else {
        full
    }
}

/// f-vector from an h-vector by `f_{i-1} = sum_j C(d+1-j, i-j) h_j`.
pub fn f_from_h(t: &[Vec<BigInt>], d: usize, h: &[BigInt]) -> Vec<BigInt> {
    (1..=d + 1)
        .map(|i| {
            (0..=i)
                .map(|j| choose(t, (d + 1 - j) as i64, (i - j) as i64) * &h[j])
                .sum()
        })
        .collect()
}

/// Converts h'' back to h: `h_j = h''_j + C(d+1, j) sum_{i<=j} (-1)^{j-i} beta_{i-1}`
/// for `j <= d`, and the top entry with the range stopping at `i = d`.
/// `beta[i]` holds `beta_{i-1}`.
pub fn h_from_hpp(t: &[Vec<BigInt>], d: usize, hpp: &[BigInt], beta: &[BigInt]) -> Vec<BigInt> {
    let alt = |j: usize, top: usize| -> BigInt {
        (0..=top)
            .map(|i| {
                let b = beta[i].clone();
                if (j - i).is_multiple_of(2) {
                    b
                } else {
                    -b
                }
            })
            .sum()
    };
    (0..=d + 1)
        .map(|j| {
            if j <= d {
                &hpp[j] + choose(t, d as i64 + 1, j as i64) * alt(j, j)
            } else {
                &hpp[j] + alt(j, d)
            }
        })
        .collect()
}

/// Minimal f-vectors implied by the three lower bound theorems, built from
/// the extremal h''-vectors: stacked (lbt), stacked plus Betti correction
/// (lbtm) and the extremal g-tilde vector (slbtm). `beta[i]` is `beta_{i-1}`.
pub fn lbt_oracle(f0: &BigInt, d: usize) -> Vec<BigInt> {
    let t = pascal(d + 2);
    let mut h = vec![f0 - (d as i64) - 1i64; d + 2];
    h[0] = big(1);
    h[d + 1] = big(1);
    f_from_h(&t, d, &h)
}

pub fn lbtm_oracle(f0: &BigInt, d: usize, beta: &[BigInt]) -> Vec<BigInt> {
    let t = pascal(d + 2);
    // h''_1 is fixed by f0; the extremal case has h''_j = h''_1 for 1 <= j <= d
    let h1 = f0 - (d as i64) - 1i64;
    let mut hpp = vec![h1.clone(); d + 2];
    hpp[0] = big(1);
    hpp[d + 1] = big(1);
    f_from_h(&t, d, &h_from_hpp(&t, d, &hpp, beta))
}

pub fn slbtm_oracle(f0: &BigInt, d: usize, beta: &[BigInt]) -> Vec<BigInt> {
    let t = pascal(d + 2);
    let half = d.div_ceil(2);
    let mut hpp = vec![big(0); d + 2];
    hpp[0] = big(1);
    hpp[1] = f0 - (d as i64) - 1i64;
    for j in 2..=half {
        hpp[j] = &hpp[j - 1] + choose(&t, d as i64 + 1, j as i64 - 1) * &beta[j];
    }
    for j in half + 1..=d + 1 {
        hpp[j] = hpp[d + 1 - j].clone();
    }
    f_from_h(&t, d, &h_from_hpp(&t, d, &hpp, beta))
}

/// Reduced Betti numbers of G_3(R^8), nonzero at 4, 7, 8, 11 and 15, read off
/// `1+t^4+t^7+t^8+t^11+t^15`. Indexed as `beta[i] = beta_{i-1}`.
pub fn g3_r8_beta() -> Vec<BigInt> {
    let mut beta = vec![big(0); 17];
    for i in [4, 7, 8, 11, 15] {
        beta[i + 1] = big(1);
    }
    beta
}
