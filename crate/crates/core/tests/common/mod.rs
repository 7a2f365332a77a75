//! Independent brute-force oracles. Nothing here calls the library's
//! property, structure or translatability code; tables are plain row vectors.

#![allow(dead_code)]

pub type Grid = Vec<Vec<usize>>;

/// Residue in `1..=n` under the 0 = n convention.
pub fn md(x: i64, n: usize) -> usize {
    let r = x.rem_euclid(n as i64) as usize;
    if r == 0 {
        n
    } else {
        r
    }
}

/// `i·j = a_[k - ki + j]` written out directly.
pub fn grid(n: usize, k: usize, a: &[usize]) -> Grid {
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| a[md(k as i64 - (k * i) as i64 + j as i64, n) - 1])
                .collect()
        })
        .collect()
}

pub fn m(g: &Grid, x: usize, y: usize) -> usize {
    g[x - 1][y - 1]
}

pub fn order(g: &Grid) -> usize {
    g.len()
}

pub fn associative(g: &Grid) -> bool {
    let n = order(g);
    for x in 1..=n {
        for y in 1..=n {
            let xy = m(g, x, y);
            for z in 1..=n {
                if m(g, xy, z) != m(g, x, m(g, y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn all2(g: &Grid, f: impl Fn(usize, usize) -> bool) -> bool {
    let n = order(g);
    (1..=n).all(|x| (1..=n).all(|y| f(x, y)))
}

pub fn all3(g: &Grid, f: impl Fn(usize, usize, usize) -> bool) -> bool {
    let n = order(g);
    (1..=n).all(|x| (1..=n).all(|y| (1..=n).all(|z| f(x, y, z))))
}

pub fn all4(g: &Grid, f: impl Fn(usize, usize, usize, usize) -> bool) -> bool {
    let n = order(g);
    (1..=n).all(|x| (1..=n).all(|y| (1..=n).all(|z| (1..=n).all(|w| f(x, y, z, w)))))
}

/// The defining identity of a named property.
pub fn property(g: &Grid, name: &str) -> bool {
    let p = |x, y| m(g, x, y);
    match name {
        "idempotent" => (1..=order(g)).all(|x| p(x, x) == x),
        "commutative" => all2(g, |x, y| p(x, y) == p(y, x)),
        "associative" => associative(g),
        "elastic" => all2(g, |x, y| p(x, p(y, x)) == p(p(x, y), x)),
        "strongly-elastic" => all2(g, |x, y| {
            let a = p(x, p(y, x));
            a == p(p(x, y), x) && a == p(p(y, x), y)
        }),
        "bookend" => all2(g, |i, j| p(p(j, i), p(i, j)) == i),
        "left-distributive" => all3(g, |x, y, z| p(x, p(y, z)) == p(p(x, y), p(x, z))),
        "right-distributive" => all3(g, |x, y, z| p(p(y, z), x) == p(p(y, x), p(z, x))),
        "left-modular" => all3(g, |i, j, z| p(p(i, j), z) == p(p(z, j), i)),
        "right-modular" => all3(g, |i, j, z| p(i, p(j, z)) == p(z, p(j, i))),
        "medial" => all4(g, |i, j, w, z| p(p(i, j), p(w, z)) == p(p(i, w), p(j, z))),
        "paramedial" => all4(g, |i, j, w, z| p(p(i, j), p(w, z)) == p(p(z, j), p(w, i))),
        "alterable" => all4(g, |i, j, w, z| p(i, j) != p(w, z) || p(j, w) == p(z, i)),
        "left-cancellative" => left_cancellative(g),
        "right-cancellative" => left_cancellative(&transpose(g)),
        other => panic!("no oracle for `{other}`"),
    }
}

pub fn left_cancellative(g: &Grid) -> bool {
    g.iter().all(|row| is_perm(row))
}

pub fn is_perm(row: &[usize]) -> bool {
    let mut seen = vec![false; row.len() + 1];
    row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

pub fn transpose(g: &Grid) -> Grid {
    let n = order(g);
    (0..n).map(|j| (0..n).map(|i| g[i][j]).collect()).collect()
}

/// Each row is the previous one rotated right by `k`.
pub fn shifts_by(g: &Grid, k: usize) -> bool {
    let n = order(g);
    (0..n).all(|i| (0..n).all(|j| g[(i + 1) % n][(j + k) % n] == g[i][j]))
}

pub fn steps(g: &Grid) -> Vec<usize> {
    (1..order(g)).filter(|&k| shifts_by(g, k)).collect()
}

pub fn left_neutrals(g: &Grid) -> Vec<usize> {
    let n = order(g);
    (1..=n).filter(|&e| (1..=n).all(|x| m(g, e, x) == x)).collect()
}

pub fn idempotents(g: &Grid) -> Vec<usize> {
    (1..=order(g)).filter(|&x| m(g, x, x) == x).collect()
}

/// Whether `map` (1-based images) is an isomorphism from `a` onto `b`.
pub fn is_iso(a: &Grid, b: &Grid, map: &[usize]) -> bool {
    let n = order(a);
    order(b) == n
        && is_perm(map)
        && all2(a, |x, y| map[m(a, x, y) - 1] == m(b, map[x - 1], map[y - 1]))
}

/// Lexicographic permutations of `1..=n`.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

/// Every first row in `1..=n`^n, lexicographic.
pub fn rows(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![1; n];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n).rev().find(|&i| cur[i] < n) else {
            return out;
        };
        cur[i] += 1;
        for c in &mut cur[i + 1..] {
            *c = 1;
        }
    }
}

/// Brute-force isomorphism search over all bijections.
pub fn isomorphic(a: &Grid, b: &Grid) -> bool {
    order(a) == order(b) && perms(order(a)).iter().any(|p| is_iso(a, b, p))
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether the elements `set` form a cyclic group under `g`.
pub fn cyclic_group(g: &Grid, set: &[usize]) -> bool {
    let closed = set.iter().all(|&x| set.iter().all(|&y| set.contains(&m(g, x, y))));
    let Some(&e) = set
        .iter()
        .find(|&&e| set.iter().all(|&x| m(g, e, x) == x && m(g, x, e) == x))
    else {
        return false;
    };
    closed
        && set.iter().any(|&x| {
            let mut seen = vec![x];
            let mut p = m(g, x, x);
            while p != x {
                seen.push(p);
                p = m(g, p, x);
            }
            seen.len() == set.len() && seen.contains(&e)
        })
}
