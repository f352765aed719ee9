//! Two-route verification: every closed form is checked against either its
//! recursion or a direct brute-force enumeration written independently here.

use combinatorics::{
    bell, binomial, catalan, count_set_partitions, factorial, fuss_catalan, motzkin_number,
    num_standard_tableaux, parity_block_counts, parity_block_counts_rec, partitions_of,
    planar_even_dim, riordan_number, stirling2, stirling2_closed, stirling2_min2, triangle,
    BlockCount, Int, MinBlock, Parity, TriangleKind,
};

/// Enumerate all set partitions of `[n]` as block lists; the oracle used to
/// pin Stirling/Bell values.
fn brute_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, n, blocks, out);
        blocks.pop();
    }
    rec(0, n, &mut blocks, &mut out);
    out
}

#[test]
fn stirling_and_bell_against_enumeration() {
    for n in 0..=8 {
        let parts = brute_set_partitions(n);
        assert_eq!(bell(n), Int::from(parts.len()));
        for k in 0..=n {
            let count = parts.iter().filter(|p| p.len() == k).count();
            assert_eq!(stirling2(n, k), Int::from(count), "S({n},{k})");
            let count2 = parts
                .iter()
                .filter(|p| p.len() == k && p.iter().all(|b| b.len() >= 2))
                .count();
            assert_eq!(stirling2_min2(n, k), Int::from(count2), "S2({n},{k})");
        }
    }
    assert_eq!(count_set_partitions(4, BlockCount::All, MinBlock::One), Int::from(15));
    assert_eq!(count_set_partitions(4, BlockCount::Exactly(2), MinBlock::Two), Int::from(3));
    assert_eq!(count_set_partitions(6, BlockCount::Exactly(6), MinBlock::One), Int::from(1));
}

#[test]
fn stirling_closed_form_matches_recursion() {
    for n in 0..=12 {
        for k in 0..=n {
            assert_eq!(stirling2(n, k), stirling2_closed(n, k));
        }
        let total: Int = (0..=n).map(|k| stirling2(n, k)).sum();
        assert_eq!(total, bell(n));
    }
}

#[test]
fn bell_known_values() {
    let expect: [(usize, u64); 9] = [
        (0, 1),
        (1, 1),
        (2, 2),
        (3, 5),
        (4, 15),
        (5, 52),
        (6, 203),
        (8, 4140),
        (10, 115975),
    ];
    for (n, v) in expect {
        assert_eq!(bell(n), Int::from(v));
    }
    assert_eq!(bell(16), "10480142147".parse::<Int>().unwrap());
}

#[test]
fn parity_counts_both_routes_and_enumeration() {
    for n in 0..=14 {
        for k in 0..=n {
            assert_eq!(
                parity_block_counts(Parity::Odd, n, k),
                parity_block_counts_rec(Parity::Odd, n, k),
                "O({n},{k})"
            );
            assert_eq!(
                parity_block_counts(Parity::Even, n, k),
                parity_block_counts_rec(Parity::Even, n, k),
                "E({n},{k})"
            );
        }
    }
    for n in 0..=8 {
        let parts = brute_set_partitions(n);
        for k in 0..=n {
            let odd = parts
                .iter()
                .filter(|p| p.len() == k && p.iter().all(|b| b.len() % 2 == 1))
                .count();
            let even = parts
                .iter()
                .filter(|p| p.len() == k && p.iter().all(|b| b.len() % 2 == 0))
                .count();
            assert_eq!(parity_block_counts(Parity::Odd, n, k), Int::from(odd));
            assert_eq!(parity_block_counts(Parity::Even, n, k), Int::from(even));
        }
    }
    assert_eq!(parity_block_counts(Parity::Even, 4, 2), Int::from(3));
    assert_eq!(parity_block_counts(Parity::Odd, 3, 1), Int::from(1));
    assert_eq!(parity_block_counts(Parity::Odd, 5, 2), Int::from(0));
}

#[test]
fn triangle_squared_sums() {
    // Catalan: sum over k of C_{n-k,k}^2 = C_n; Motzkin and Riordan rows
    // square-sum to the doubled-index sequence value.
    for n in 0..=8 {
        let mut cat = Int::from(0);
        for k in 0..=n / 2 {
            let e = triangle(TriangleKind::Catalan, n - k, k).unwrap();
            cat += &e * &e;
        }
        assert_eq!(cat, catalan(n), "catalan row {n}");

        let mut mot = Int::from(0);
        for k in 0..=n {
            let e = triangle(TriangleKind::Motzkin, n, k).unwrap();
            mot += &e * &e;
        }
        assert_eq!(mot, motzkin_number(2 * n), "motzkin row {n}");

        let mut rio = Int::from(0);
        for k in 0..=n {
            let e = triangle(TriangleKind::Riordan, n, k).unwrap();
            rio += &e * &e;
        }
        assert_eq!(rio, riordan_number(2 * n), "riordan row {n}");
    }
}

#[test]
fn fuss_catalan_values() {
    assert_eq!(fuss_catalan(3, 2), Int::from(4));
    assert_eq!(fuss_catalan(7, 0), Int::from(1));
    assert_eq!(fuss_catalan(1, 3), Int::from(5));
    let threes: Vec<Int> = (0..=5).map(|n| fuss_catalan(3, n)).collect();
    let expect = [1u64, 1, 4, 22, 140, 969];
    for (got, want) in threes.iter().zip(expect) {
        assert_eq!(*got, Int::from(want));
    }
}

#[test]
fn planar_even_dims() {
    let expect = [1u64, 1, 3, 12, 55, 273, 1428, 7752];
    for (n, want) in expect.iter().enumerate() {
        assert_eq!(planar_even_dim(n), Int::from(*want));
    }
}

/// Count standard Young tableaux by direct backtracking.
fn brute_syt(parts: &[usize]) -> u64 {
    let rows = parts.len();
    let k: usize = parts.iter().sum();
    let mut fill = vec![0usize; rows];
    fn rec(next: usize, k: usize, parts: &[usize], fill: &mut Vec<usize>) -> u64 {
        if next == k {
            return 1;
        }
        let mut total = 0;
        for r in 0..parts.len() {
            if fill[r] < parts[r] && (r == 0 || fill[r - 1] > fill[r]) {
                fill[r] += 1;
                total += rec(next + 1, k, parts, fill);
                fill[r] -= 1;
            }
        }
        total
    }
    rec(0, k, parts, &mut fill)
}

#[test]
fn hook_length_counts_match_enumeration() {
    for k in 0..=6 {
        let mut square_sum = Int::from(0);
        for lambda in partitions_of(k) {
            let f = num_standard_tableaux(&lambda);
            assert_eq!(f, Int::from(brute_syt(lambda.parts())), "f_{lambda}");
            square_sum += &f * &f;
        }
        assert_eq!(square_sum, factorial(k), "sum of f^2 over k={k}");
    }
    let f4: Int = partitions_of(4)
        .iter()
        .map(|l| {
            let f = num_standard_tableaux(l);
            &f * &f
        })
        .sum();
    assert_eq!(f4, Int::from(24));
}

#[test]
fn binomial_symmetry_spot() {
    for n in 0..=20 {
        for k in 0..=n {
            assert_eq!(binomial(n, k), binomial(n, n - k));
        }
    }
}
