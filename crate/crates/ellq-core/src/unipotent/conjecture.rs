use num_traits::Zero;

use crate::elliptic::elliptic_fake_degree;
use crate::error::{Error, Result};
use crate::exactq::{RatFunc, Rational};
use crate::fourier::SmallGroup;
use crate::weylgrp::{ClassFunction, WeylGroup};

fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// φ(1) / (|A(x)| |Z(G^∨)|) · m_x(q).
pub fn product_formal_degree(m: &RatFunc, phi_degree: i64, a_x: usize, center: u32) -> RatFunc {
    m.scale(&ratio(phi_degree, a_x as i64 * i64::from(center)))
}

/// (1/|Z|) Σ_{ρ′} {(y,ρ),(1,ρ′)} F_ρ′ over the Springer-type characters ρ′
/// of Γ_u; every other entry of M(Γ_u)′ has F = 0.
pub fn conjecture_rhs(gamma: &SmallGroup, pair: &str, fakes: &[(String, RatFunc)], center: u32) -> Result<RatFunc> {
    let block = gamma.fourier_matrix()?;
    let mut terms = Vec::new();
    for (rho, f) in fakes {
        let e = block.rational_entry(pair, &format!("(1,{rho})"))?;
        if !e.is_zero() {
            terms.push(f.scale(&e));
        }
    }
    Ok(RatFunc::sum(&terms).scale(&ratio(1, i64::from(center))))
}

fn char_value(gamma: &SmallGroup, rho: &str, class: usize) -> Result<Rational> {
    let chi = &gamma.irreducibles()[gamma.irreducible_index(rho)?];
    chi.value(gamma.class_rep(class))
        .and_then(|v| v.to_rational())
        .ok_or_else(|| Error::Unsupported(format!("irrational value of {rho} on {}", gamma.class_label(class))))
}

/// φ(1) / (|C_Γ(s)| |Z|) Σ_{φ′} φ′(s) F_φ′, with s given by its class in Γ_u.
pub fn conj_equiv(
    gamma: &SmallGroup,
    s_class: &str,
    phi_degree: i64,
    fakes: &[(String, RatFunc)],
    center: u32,
) -> Result<RatFunc> {
    let c = gamma.class_index(s_class)?;
    let mut terms = Vec::new();
    for (rho, f) in fakes {
        terms.push(f.scale(&char_value(gamma, rho, c)?));
    }
    let pre = ratio(phi_degree, gamma.centralizer_order(c) as i64 * i64::from(center));
    Ok(RatFunc::sum(&terms).scale(&pre))
}

/// H^•(B_u)^s = Σ_{φ′} φ′(s) X(u,φ′) as a virtual W-character.
pub fn springer_class_function(
    w: &WeylGroup,
    gamma: &SmallGroup,
    s_class: &str,
    springer: &[(String, ClassFunction)],
) -> Result<ClassFunction> {
    let c = gamma.class_index(s_class)?;
    let mut out = vec![Rational::zero(); w.num_classes()];
    for (rho, x) in springer {
        let v = char_value(gamma, rho, c)?;
        for (o, xi) in out.iter_mut().zip(x) {
            *o += &v * xi;
        }
    }
    Ok(out)
}

/// (1-q)^l ⟨H, 1/det(1-q·)⟩^el_W, the predicted q-part of the formal degree.
pub fn q_part_prediction(w: &WeylGroup, h: &[Rational]) -> RatFunc {
    // (1-q)^l⟨H,·⟩ = (q-1)^l⟨H⊗sgn,·⟩ = F_[H⊗sgn]
    let sgn = w.sign();
    let twisted: Vec<Rational> = h.iter().zip(&sgn).map(|(a, b)| a * b).collect();
    elliptic_fake_degree(w, &twisted)
}

/// (1-q)^l φ(1) / (|A(su)| |Z|) ⟨H^•(B_u)^s, 1/det(1-q·)⟩^el_W.
pub fn conj_equiv_class_function(w: &WeylGroup, h: &[Rational], phi_degree: i64, a_su: usize, center: u32) -> RatFunc {
    q_part_prediction(w, h).scale(&ratio(phi_degree, a_su as i64 * i64::from(center)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefactor() {
        let m = RatFunc::one();
        assert_eq!(product_formal_degree(&m, 2, 6, 1), RatFunc::constant(ratio(1, 3)));
    }
}
