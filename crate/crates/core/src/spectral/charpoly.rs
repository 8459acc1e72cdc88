//! Independent eigenvalue oracle: exact integer characteristic polynomial
//! (Faddeev–LeVerrier) and its largest real root via a Sturm chain with
//! rational bisection. No floating point until the final conversion, so the
//! result cross-checks the power iteration rather than sharing its failure
//! modes.

use crate::error::{Error, Result};
use crate::graph::Graph;
use num::{BigInt, BigRational, Zero};

/// The oracle is exact but dense; past this order the integer coefficients
/// and chain work stop being worth it.
pub const ORACLE_MAX_VERTICES: usize = 12;

fn overflow() -> Error {
    Error::InvalidParameter("integer overflow in characteristic polynomial".into())
}

/// Coefficients of det(λI − A), ascending: index i holds the λ^i
/// coefficient. Exact for any graph within the oracle order cap.
pub fn char_poly(g: &Graph) -> Result<Vec<i128>> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "oracle vertices",
            got: n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let a = |i: usize, j: usize| -> i128 { i128::from(g.has_edge(i, j)) };
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    // b starts as the identity; each round maps b <- a·b + c·I
    let mut b: Vec<i128> = (0..n * n).map(|t| i128::from(t % (n + 1) == 0)).collect();
    let mut m = vec![0i128; n * n];
    for k in 1..=n {
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for l in 0..n {
                    if a(i, l) != 0 {
                        acc = acc.checked_add(b[l * n + j]).ok_or_else(overflow)?;
                    }
                }
                m[i * n + j] = acc;
            }
        }
        let mut trace = 0i128;
        for i in 0..n {
            trace = trace.checked_add(m[i * n + i]).ok_or_else(overflow)?;
        }
        debug_assert_eq!(trace % (k as i128), 0, "trace divisibility");
        let c = -trace / (k as i128);
        coeffs[n - k] = c;
        b.copy_from_slice(&m);
        for i in 0..n {
            b[i * n + i] = b[i * n + i].checked_add(c).ok_or_else(overflow)?;
        }
    }
    Ok(coeffs)
}

type Poly = Vec<BigRational>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    let mut d: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
        .collect();
    trim(&mut d);
    d
}

/// Remainder of a / b, b nonzero.
fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while !is_zero_poly(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        r[dr] = BigRational::zero();
        trim(&mut r);
        if dr == 0 {
            break;
        }
    }
    r
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Exact quotient a / b (b must divide a).
fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while !is_zero_poly(&r) && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let factor = &r[dr] / &lead;
        q[dr - db] = factor.clone();
        for i in 0..=db {
            let t = &b[i] * &factor;
            r[dr - db + i] -= t;
        }
        trim(&mut r);
        if dr == db {
            break;
        }
    }
    debug_assert!(is_zero_poly(&r), "division was not exact");
    trim(&mut q);
    q
}

fn eval_sign(p: &Poly, x: &BigRational) -> i8 {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    match acc.cmp(&BigRational::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

fn sign_changes(chain: &[Poly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let s = eval_sign(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots in (a, b].
fn roots_in(chain: &[Poly], a: &BigRational, b: &BigRational) -> usize {
    sign_changes(chain, a) - sign_changes(chain, b)
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let k = chain.len();
        if is_zero_poly(&chain[k - 1]) {
            chain.pop();
            break;
        }
        if chain[k - 1].len() == 1 {
            break;
        }
        let r = poly_rem(&chain[k - 2], &chain[k - 1]);
        if is_zero_poly(&r) {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
    }
    chain
}

/// Largest real root of det(λI − A), bisected to an interval narrower than
/// 1e-13 before conversion; with the oracle order cap that is well inside
/// f64 precision. Works for any graph, connected or not (the square-free
/// reduction makes multiple roots harmless).
pub fn char_poly_radius_oracle(g: &Graph) -> Result<f64> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0.0);
    }
    let coeffs = char_poly(g)?;
    let p: Poly = coeffs
        .iter()
        .map(|&c| BigRational::from(BigInt::from(c)))
        .collect();
    let gcd = poly_gcd(&p, &derivative(&p));
    let squarefree = if gcd.len() > 1 {
        poly_div_exact(&p, &gcd)
    } else {
        p
    };
    let chain = sturm_chain(&squarefree);

    // all eigenvalues of a graph lie in [-(n-1), n-1]
    let mut lo = BigRational::from(BigInt::from(-(n as i64)));
    let mut hi = BigRational::from(BigInt::from(n as i64));
    debug_assert!(roots_in(&chain, &lo, &hi) >= 1);
    let two = BigRational::from(BigInt::from(2));
    // 2n / 2^61 < 1e-16 even at the order cap
    for _ in 0..61 {
        let mid = (&lo + &hi) / &two;
        if roots_in(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mid = (&lo + &hi) / &two;
    num::ToPrimitive::to_f64(&mid)
        .ok_or_else(|| Error::InvalidParameter("root interval did not convert to f64".into()))
}
