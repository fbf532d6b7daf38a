//! Independent oracles shared by the integration tests and the acceptance
//! runner. Nothing here calls the library's own algorithms for the quantity
//! being checked.
#![allow(dead_code)]

use dual_towers::group::FiniteGroup;
use nalgebra::DMatrix;

/// Standard Young tableaux of a shape, by trying every filling.
pub fn brute_force_syt(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut filling: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    loop {
        let at = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j)).map(|k| filling[k]);
        let standard = cells.iter().enumerate().all(|(k, &(i, j))| {
            let v = filling[k];
            at(i, j + 1).map_or(true, |w| v < w) && at(i + 1, j).map_or(true, |w| v < w)
        });
        if standard {
            count += 1;
        }
        if !next_permutation(&mut filling) {
            break;
        }
    }
    count
}

/// `n! / prod hooks`.
pub fn hook_length(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let mut num: u128 = (1..=n as u128).product();
    let mut den: u128 = 1;
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
            den *= (arm + leg + 1) as u128;
        }
    }
    num /= den;
    num as u64
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Textbook row insertion, written out independently.
pub fn schensted(word: &[usize]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in word.iter().enumerate() {
        let mut bump = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![bump]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > bump) {
                Some(k) => {
                    bump = std::mem::replace(&mut p[row][k], bump);
                    row += 1;
                }
                None => {
                    p[row].push(bump);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

/// Longest increasing subsequence, by dynamic programming.
pub fn longest_increasing(word: &[usize]) -> usize {
    let mut best = vec![1; word.len()];
    for i in 0..word.len() {
        for j in 0..i {
            if word[j] < word[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Conjugacy classes by direct orbit computation.
pub fn brute_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        classes.push(class);
    }
    classes
}

/// Degrees of the irreducible characters, read off the regular
/// representation: a generic real combination of the symmetrised class sums
/// acts on the isotypic component of `chi` by one scalar, so eigenvalue
/// multiplicities are `d^2` for a real character and `2 d^2` for a pair of
/// complex conjugate characters.
pub fn regular_character_degrees(g: &FiniteGroup) -> Vec<u64> {
    let n = g.order();
    let classes = brute_classes(g);
    let primes = [2.0f64, 3.0, 5.0, 7.0, 11.0, 13.0, 17.0, 19.0, 23.0, 29.0, 31.0, 37.0, 41.0, 43.0];
    let mut z = DMatrix::<f64>::zeros(n, n);
    for (c, class) in classes.iter().enumerate() {
        let weight = primes[c % primes.len()].sqrt() * (1.0 + c as f64 / 7.0).ln_1p();
        for &x in class {
            // left multiplication by x and by x^-1
            for y in 0..n {
                z[(g.mul(x, y), y)] += weight;
                z[(g.mul(g.inv(x), y), y)] += weight;
            }
        }
    }
    let mut eig: Vec<f64> = z.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let scale = eig.iter().fold(1.0f64, |m, e| m.max(e.abs()));
    let mut clusters: Vec<usize> = Vec::new();
    let mut last = f64::NEG_INFINITY;
    for e in eig {
        if e - last > 1e-7 * scale {
            clusters.push(0);
        }
        *clusters.last_mut().unwrap() += 1;
        last = e;
    }
    let mut degrees = Vec::new();
    for m in clusters {
        let m = m as u64;
        let d = (m as f64).sqrt().round() as u64;
        if d * d == m {
            degrees.push(d);
        } else {
            let h = ((m / 2) as f64).sqrt().round() as u64;
            assert_eq!(2 * h * h, m, "cluster of size {m} is neither d^2 nor 2d^2");
            degrees.extend([h, h]);
        }
    }
    degrees.sort_unstable();
    degrees
}
