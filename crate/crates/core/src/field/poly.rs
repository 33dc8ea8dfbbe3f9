//! Dense polynomials over `Z_p`, coefficients constant term first. Only what
//! the field constructor needs: products, remainders, gcd and irreducibility.

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^{p-2}
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    out.into_iter().map(|c| c as u32).collect()
}

/// Remainder of `a` modulo a nonzero `b`.
pub(super) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p) as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let p64 = p as u64;
    while let Some(dr) = r.iter().rposition(|&c| c != 0) {
        if dr < db {
            break;
        }
        let factor = r[dr] * lead_inv % p64;
        let shift = dr - db;
        for (j, &c) in b.iter().enumerate().take(db + 1) {
            r[shift + j] = (r[shift + j] + p64 - factor * c as u64 % p64) % p64;
        }
    }
    trim(r.into_iter().map(|c| c as u32).collect())
}

fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    trim(
        (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !is_zero(&b) {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn powmod(base: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Ben-Or test: a monic `f` of degree `r` is irreducible iff
/// `gcd(f, X^{p^d} - X) = 1` for every `1 <= d <= r/2`.
pub(super) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let r = match degree(f) {
        Some(r) if r >= 1 => r,
        _ => return false,
    };
    let x = vec![0u32, 1];
    let mut h = x.clone();
    for _ in 1..=r / 2 {
        h = powmod(&h, p as u64, f, p);
        let g = gcd(f, &sub(&h, &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Product of two base-`p` encoded residues modulo a monic `modulus`.
pub(super) fn mul_encoded(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let r = modulus.len() - 1;
    let decode = |mut v: u32| {
        (0..r)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect::<Vec<u32>>()
    };
    let prod = rem(&mul(&decode(a), &decode(b), p), modulus, p);
    prod.iter()
        .take(r)
        .rev()
        .fold(0u32, |acc, &c| acc * p + c)
}
