//! Small combinatorial helpers shared by the dimension formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient with the convention C(a, b) = 0 for b < 0 or b > a.
/// All callers have a >= 0; negative a also yields 0.
pub fn binom(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u64 = 1;
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// All compositions of `total` into `parts` strictly positive integers,
/// in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(vec![]);
        }
        return out;
    }
    let mut cur = Vec::with_capacity(parts);
    fn rec(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total >= 1 {
                cur.push(total);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 1..=(total.saturating_sub(parts as u32 - 1)) {
            cur.push(first);
            rec(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    rec(total, parts, &mut cur, &mut out);
    out
}

/// Expands Σ_k coeffs[k] · C(i + shift, k) into a polynomial in i over Q,
/// returned as coefficients by ascending power.
pub fn binomial_basis_to_polynomial(coeffs: &[u64], shift: i64) -> Vec<BigRational> {
    let mut poly: Vec<BigRational> = vec![];
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // C(i + shift, k) = (i + shift)(i + shift - 1) ... (i + shift - k + 1) / k!
        let mut term: Vec<BigRational> = vec![BigRational::one()];
        let mut kfact = BigInt::one();
        for t in 0..k {
            // multiply by (i + shift - t)
            let mut next = vec![BigRational::zero(); term.len() + 1];
            let tr = BigRational::from(BigInt::from(shift - t as i64));
            for (p, v) in term.iter().enumerate() {
                next[p + 1] += v;
                next[p] += v * &tr;
            }
            term = next;
            kfact *= BigInt::from((t + 1) as u64);
        }
        let scale = BigRational::new(BigInt::from(c), kfact);
        if poly.len() < term.len() {
            poly.resize(term.len(), BigRational::zero());
        }
        for (p, v) in term.into_iter().enumerate() {
            poly[p] += v * &scale;
        }
    }
    while poly.last().is_some_and(|v| v.is_zero()) {
        poly.pop();
    }
    poly
}

/// Renders a polynomial in the variable `i`, e.g. "3 + 3i" or "1/2i^2 - 1/2i".
pub fn render_polynomial(poly: &[BigRational]) -> String {
    let mut parts: Vec<(bool, String)> = vec![];
    for (p, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let var = match p {
            0 => String::new(),
            1 => "i".to_string(),
            _ => format!("i^{p}"),
        };
        let coeff = if mag.is_one() && p > 0 {
            String::new()
        } else if mag.denom().is_one() {
            mag.numer().to_string()
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        parts.push((c.is_negative(), format!("{coeff}{var}")));
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (neg, text)) in parts.into_iter().enumerate() {
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&text);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(4, 0), 1);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(2, 3), 0);
        assert_eq!(binom(-1, 0), 0);
        assert_eq!(binom(0, 0), 1);
    }

    #[test]
    fn compositions_enumeration() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(0, 0), vec![Vec::<u32>::new()]);
        assert!(compositions(2, 3).is_empty());
        // |compositions(r, k)| = C(r-1, k-1)
        for r in 1..=7u32 {
            for k in 1..=r as usize {
                assert_eq!(
                    compositions(r, k).len() as u64,
                    binom(r as i64 - 1, k as i64 - 1)
                );
            }
        }
    }

    #[test]
    fn polynomial_rendering() {
        // 3·C(i,0) + 3·C(i,1) = 3 + 3i
        let poly = binomial_basis_to_polynomial(&[3, 3], 0);
        assert_eq!(render_polynomial(&poly), "3 + 3i");
        // C(i,2) = 1/2 i^2 - 1/2 i
        let poly2 = binomial_basis_to_polynomial(&[0, 0, 1], 0);
        assert_eq!(render_polynomial(&poly2), "-1/2i + 1/2i^2");
        assert_eq!(render_polynomial(&[]), "0");
    }
}
