//! Closed-form total domination polynomials for graph families, expanded to
//! exact coefficient vectors.

use num_bigint::BigInt;
use num_traits::One;

use crate::enumeration::{total_domination_polynomial, EnumerationConfig};
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

fn x_pow(k: usize) -> Polynomial {
    Polynomial::monomial(BigInt::one(), k)
}

fn big(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `D_t(K_n, x) = (x + 1)^n - n x - 1`.
pub fn dt_complete(n: usize) -> Result<Polynomial> {
    if n < 1 {
        return invalid("closed form for K_n needs n >= 1");
    }
    let linear = Polynomial::new(vec![BigInt::one(), big(n)]);
    Ok(&Polynomial::binomial_shift(n) - &linear)
}

/// `D_t(F_n, x) = x (x + 1)^{2n} + x^{2n} - x`.
pub fn dt_friendship(n: usize) -> Result<Polynomial> {
    if n < 1 {
        return invalid("closed form for F_n needs n >= 1");
    }
    let lead = Polynomial::binomial_shift(2 * n).mul_x_pow(1);
    Ok(&(&lead + &x_pow(2 * n)) - &x_pow(1))
}

/// `D_t(B_n, x) = x^2 (x + 1)^{2n} + 2 x^{n+1} (x + 1)^n + x^{2n}
///             = (x (x + 1)^n + x^n)^2`.
///
/// Of the `C(2n+2, 2n)` vertex sets of size `2n`, the `2n` that omit a spine
/// vertex together with the far page vertex adjacent to the other spine
/// vertex leave a page vertex undominated, so the `x^{2n}` coefficient is
/// `C(2n+2, 2) - 2n`. See [`dt_book_published`] for the variant with
/// `(2n + 1) x^{2n}`, which disagrees with exhaustive counts.
pub fn dt_book(n: usize) -> Result<Polynomial> {
    if n < 1 {
        return invalid("closed form for B_n needs n >= 1");
    }
    Ok(&book_common_terms(n) + &x_pow(2 * n))
}

/// `x^2 (x + 1)^{2n} + 2 x^{n+1} (x + 1)^n + (2n + 1) x^{2n}`, the book-graph
/// formula as usually quoted. Kept for comparison against [`dt_book`]; the
/// two differ by `2n x^{2n}`.
pub fn dt_book_published(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return invalid("closed form for B_n needs n >= 2");
    }
    Ok(&book_common_terms(n) + &Polynomial::monomial(big(2 * n + 1), 2 * n))
}

fn book_common_terms(n: usize) -> Polynomial {
    let a = Polynomial::binomial_shift(2 * n).mul_x_pow(2);
    let b = Polynomial::binomial_shift(n)
        .mul_x_pow(n + 1)
        .scale(&big(2));
    &a + &b
}

/// `D_t(K_{m,n}, x) = ((x + 1)^m - 1)((x + 1)^n - 1)`.
pub fn dt_complete_bipartite(m: usize, n: usize) -> Result<Polynomial> {
    if m < 1 || n < 1 {
        return invalid("closed form for K_{m,n} needs m, n >= 1");
    }
    let one = Polynomial::one();
    let a = &Polynomial::binomial_shift(m) - &one;
    let b = &Polynomial::binomial_shift(n) - &one;
    Ok(&a * &b)
}

/// `D_t(G ∘ K̄_m, x) = x^{n_g} (x + 1)^{m n_g}` for any `G` of order `n_g`
/// without isolated vertices. An isolated vertex of `G` also needs one of
/// its own leaves, which this form does not count.
pub fn dt_corona_empty(n_g: usize, m: usize) -> Result<Polynomial> {
    if n_g < 2 || m < 1 {
        return invalid("closed form for G∘K̄_m needs order >= 2 and m >= 1");
    }
    Ok(Polynomial::binomial_shift(m * n_g).mul_x_pow(n_g))
}

/// `D_t(K_1 ∘ H, x) = x (1 + x)^{|H|} - x + D_t(H, x)`, with `D_t(H)` by
/// enumeration.
pub fn dt_k1_corona(h: &Graph, cfg: &EnumerationConfig) -> Result<Polynomial> {
    if h.order() == 0 {
        return invalid("K_1∘H needs a nonempty H");
    }
    let dh = total_domination_polynomial(h, cfg)?;
    let hub = &Polynomial::binomial_shift(h.order()).mul_x_pow(1) - &x_pow(1);
    Ok(&hub + &dh)
}

/// `D_t(K̄_m ∘ H, x) = D_t(K_1 ∘ H, x)^m`.
pub fn dt_empty_corona(h: &Graph, m: usize, cfg: &EnumerationConfig) -> Result<Polynomial> {
    if m < 1 {
        return invalid("K̄_m∘H needs m >= 1");
    }
    let m = u32::try_from(m).map_err(|_| crate::Error::InvalidInput("m too large".into()))?;
    Ok(dt_k1_corona(h, cfg)?.pow(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::total_domination_polynomial as enumerate;
    use crate::graph;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    fn cfg() -> EnumerationConfig {
        EnumerationConfig::default()
    }

    #[test]
    fn complete_graph() {
        assert_eq!(dt_complete(3).unwrap(), p(&[0, 0, 3, 1]));
        assert_eq!(dt_complete(4).unwrap(), p(&[0, 0, 6, 4, 1]));
        assert_eq!(dt_complete(2).unwrap(), p(&[0, 0, 1]));
        assert!(dt_complete(1).unwrap().is_zero());
        assert!(dt_complete(0).is_err());
    }

    #[test]
    fn friendship_graph() {
        let f2 = dt_friendship(2).unwrap();
        assert_eq!(f2, p(&[0, 0, 4, 6, 5, 1]));
        assert_eq!(
            f2,
            enumerate(&graph::friendship(2).unwrap(), &cfg()).unwrap()
        );
        for n in 2..30 {
            let f = dt_friendship(n).unwrap();
            assert_eq!(f.coeff(2), big(2 * n));
            assert_eq!(f.eval_int(&BigInt::one()), BigInt::one() << (2 * n));
        }
        assert_eq!(
            dt_friendship(1).unwrap(),
            enumerate(&graph::complete(3).unwrap(), &cfg()).unwrap()
        );
        assert!(dt_friendship(0).is_err());
    }

    #[test]
    fn book_graph() {
        // Exhaustive counts for B_2 and B_3 (64 and 256 subsets).
        assert_eq!(dt_book(2).unwrap(), p(&[0, 0, 1, 6, 11, 6, 1]));
        assert_eq!(dt_book(3).unwrap(), p(&[0, 0, 1, 6, 17, 26, 22, 8, 1]));
        for n in 2..=5 {
            let e = enumerate(&graph::book(n).unwrap(), &cfg()).unwrap();
            assert_eq!(dt_book(n).unwrap(), e);
            assert_eq!(e.lowest_degree().unwrap(), 2);
            let published = dt_book_published(n).unwrap();
            assert_eq!(&published - &e, Polynomial::monomial(big(2 * n), 2 * n));
        }
        assert_eq!(
            dt_book(1).unwrap(),
            enumerate(&graph::cycle(4).unwrap(), &cfg()).unwrap()
        );
        let n = 4;
        let root = &Polynomial::binomial_shift(n).mul_x_pow(1) + &x_pow(n);
        assert_eq!(dt_book(n).unwrap(), root.pow(2));
    }

    #[test]
    fn complete_bipartite_graph() {
        assert_eq!(dt_complete_bipartite(1, 1).unwrap(), p(&[0, 0, 1]));
        assert_eq!(dt_complete_bipartite(2, 2).unwrap(), p(&[0, 0, 4, 4, 1]));
        assert_eq!(
            dt_complete_bipartite(2, 3).unwrap(),
            enumerate(&graph::complete_bipartite(2, 3).unwrap(), &cfg()).unwrap()
        );
        for m in 1..8 {
            for n in 1..8 {
                let direct = &(&(&Polynomial::binomial_shift(m + n)
                    - &Polynomial::binomial_shift(m))
                    - &Polynomial::binomial_shift(n))
                    + &Polynomial::one();
                assert_eq!(dt_complete_bipartite(m, n).unwrap(), direct);
                assert_eq!(
                    dt_complete_bipartite(m, n).unwrap(),
                    dt_complete_bipartite(n, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn corona_with_empty_graph() {
        let p4 = enumerate(&graph::path(4).unwrap(), &cfg()).unwrap();
        assert_eq!(dt_corona_empty(2, 1).unwrap(), p4);
        assert_eq!(dt_corona_empty(5, 3).unwrap().coeff(5), BigInt::one());
        let k2 = graph::empty_graph(2).unwrap();
        for g in [graph::cycle(3).unwrap(), graph::path(3).unwrap()] {
            let c = graph::corona(&g, &k2).unwrap();
            assert_eq!(
                dt_corona_empty(3, 2).unwrap(),
                enumerate(&c, &cfg()).unwrap()
            );
        }
    }

    #[test]
    fn corona_with_hub() {
        let k1 = graph::complete(1).unwrap();
        assert_eq!(dt_k1_corona(&k1, &cfg()).unwrap(), p(&[0, 0, 1]));
        let k2 = graph::complete(2).unwrap();
        assert_eq!(dt_k1_corona(&k2, &cfg()).unwrap(), p(&[0, 0, 3, 1]));
        let e2 = graph::empty_graph(2).unwrap();
        assert_eq!(dt_k1_corona(&e2, &cfg()).unwrap(), p(&[0, 0, 2, 1]));
        assert_eq!(
            dt_k1_corona(&e2, &cfg()).unwrap(),
            enumerate(&graph::path(3).unwrap(), &cfg()).unwrap()
        );
    }

    #[test]
    fn corona_of_empty_graph() {
        let k2 = graph::complete(2).unwrap();
        assert_eq!(
            dt_empty_corona(&k2, 1, &cfg()).unwrap(),
            dt_k1_corona(&k2, &cfg()).unwrap()
        );
        let k1 = graph::complete(1).unwrap();
        let two_p2 = graph::corona(&graph::empty_graph(2).unwrap(), &k1).unwrap();
        assert_eq!(
            dt_empty_corona(&k1, 2, &cfg()).unwrap(),
            p(&[0, 0, 0, 0, 1])
        );
        assert_eq!(
            dt_empty_corona(&k1, 2, &cfg()).unwrap(),
            enumerate(&two_p2, &cfg()).unwrap()
        );
        let c = graph::corona(&graph::empty_graph(2).unwrap(), &k2).unwrap();
        assert_eq!(
            dt_empty_corona(&k2, 2, &cfg()).unwrap(),
            enumerate(&c, &cfg()).unwrap()
        );
    }
}
