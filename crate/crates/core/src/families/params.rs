use std::fmt;

use crate::error::InvalidParams;
use crate::scalars::{gcd_u64, CycloScalar};

/// Parameters of one member of the classification list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    /// `k[Z^2]`
    GroupZ2,
    /// `k[Z ⋊ Z]` with `x y x^{-1} = y^{-1}`
    GroupZSemiZ,
    /// `U` of the two-dimensional abelian Lie algebra
    EnvAbelian,
    /// `U` of the Lie algebra with `[x, y] = y`
    EnvNonabelian,
    A { n: i64, q: CycloScalar },
    /// `p` holds `p_0, p_1, …, p_s`.
    B { n: u64, p: Vec<u64>, q: CycloScalar },
    C { n: u64 },
    CLift { n: u64, q: CycloScalar },
}

/// Quantities derived from valid B parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BData {
    pub n: u64,
    pub p0: u64,
    /// `p_1, …, p_s`
    pub ps: Vec<u64>,
    /// `m = p_1 ⋯ p_s`
    pub m: u64,
    /// `m_i = m / p_i`
    pub mi: Vec<u64>,
    /// `ℓ = (n / p_0) p_1 ⋯ p_s`
    pub ell: u64,
}

impl BData {
    pub fn s(&self) -> usize {
        self.ps.len()
    }
}

impl FamilyParams {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyParams::GroupZ2 => "GroupZ2",
            FamilyParams::GroupZSemiZ => "GroupZSemiZ",
            FamilyParams::EnvAbelian => "EnvAbelian",
            FamilyParams::EnvNonabelian => "EnvNonabelian",
            FamilyParams::A { .. } => "A",
            FamilyParams::B { .. } => "B",
            FamilyParams::C { .. } => "C",
            FamilyParams::CLift { .. } => "CLift",
        }
    }

    /// Parameter `q` where the family has one.
    pub fn q(&self) -> Option<&CycloScalar> {
        match self {
            FamilyParams::A { q, .. } | FamilyParams::B { q, .. } | FamilyParams::CLift { q, .. } => Some(q),
            _ => None,
        }
    }

    /// Level of the scalar field of the instance.
    pub fn level(&self) -> u32 {
        self.q().map_or(1, CycloScalar::level)
    }

    /// Checks the defining conditions of the family.
    pub fn validate(&self) -> Result<(), InvalidParams> {
        match self {
            FamilyParams::A { q, .. } => {
                if q.is_zero() {
                    return Err(InvalidParams::new("/q", "q must be nonzero"));
                }
                Ok(())
            }
            FamilyParams::B { n, p, q } => Self::b_data(*n, p).and_then(|d| {
                if q.order_of_unity() != Some(d.ell) {
                    return Err(InvalidParams::new(
                        "/q",
                        format!("order(q) ≠ ℓ: q must be a primitive {}-th root of unity", d.ell),
                    ));
                }
                Ok(())
            }),
            FamilyParams::C { n } => {
                if *n < 1 {
                    return Err(InvalidParams::new("/n", "n must be a positive integer"));
                }
                Ok(())
            }
            FamilyParams::CLift { n, q } => {
                if *n < 1 {
                    return Err(InvalidParams::new("/n", "n must be a positive integer"));
                }
                if q.is_zero() {
                    return Err(InvalidParams::new("/q", "q must be nonzero"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Derived data for B parameters, checking everything except `q`.
    pub fn b_data(n: u64, p: &[u64]) -> Result<BData, InvalidParams> {
        if n < 1 {
            return Err(InvalidParams::new("/n", "n must be a positive integer"));
        }
        if p.len() < 3 {
            return Err(InvalidParams::new("/p", "p must list p0, p1, ..., ps with s >= 2"));
        }
        if let Some(i) = p.iter().position(|&v| v == 0) {
            return Err(InvalidParams::new(format!("/p/{i}"), "p entries must be positive"));
        }
        let ps = &p[1..];
        if ps[0] <= 1 || ps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(InvalidParams::new("/p", "p must satisfy 1 < p1 < ... < ps"));
        }
        if n % p[0] != 0 {
            return Err(InvalidParams::new("/p/0", "p0 must divide n"));
        }
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if gcd_u64(p[i], p[j]) != 1 {
                    return Err(InvalidParams::new("/p", "p not pairwise coprime"));
                }
            }
        }
        let m: u64 = ps.iter().product();
        Ok(BData {
            n,
            p0: p[0],
            ps: ps.to_vec(),
            m,
            mi: ps.iter().map(|pi| m / pi).collect(),
            ell: (n / p[0]) * m,
        })
    }

    /// Whether the algebra is commutative, read off the parameters.
    pub fn is_commutative(&self) -> bool {
        match self {
            FamilyParams::GroupZ2 | FamilyParams::EnvAbelian => true,
            FamilyParams::GroupZSemiZ | FamilyParams::EnvNonabelian | FamilyParams::B { .. } => false,
            FamilyParams::A { q, .. } => q.is_one(),
            FamilyParams::C { n } => *n == 1,
            FamilyParams::CLift { n, q } => *n == 1 && q.is_one(),
        }
    }
}

fn fmt_q(q: &CycloScalar) -> String {
    if let Some(r) = q.as_rational() {
        return r.to_string();
    }
    if let Some(o) = q.order_of_unity() {
        for k in 1..o as i64 {
            if CycloScalar::root_of_unity(o as u32, k) == *q {
                return if k == 1 { format!("z{o}") } else { format!("z{o}^{k}") };
            }
        }
    }
    format!("({q})")
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::A { n, q } => write!(f, "A({n}, {})", fmt_q(q)),
            FamilyParams::B { n, p, q } => {
                let ps: Vec<String> = p.iter().map(u64::to_string).collect();
                write!(f, "B({n}, {}, {})", ps.join(", "), fmt_q(q))
            }
            FamilyParams::C { n } => write!(f, "C({n})"),
            FamilyParams::CLift { n, q } => write!(f, "CLift({n}, {})", fmt_q(q)),
            other => write!(f, "{}", other.tag()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::root_of_unity;

    #[test]
    fn b_examples() {
        let ok = FamilyParams::B { n: 1, p: vec![1, 2, 3], q: root_of_unity(6, 1) };
        assert!(ok.validate().is_ok());
        let d = FamilyParams::b_data(1, &[1, 2, 3]).unwrap();
        assert_eq!((d.m, d.mi.clone(), d.ell), (6, vec![3, 2], 6));

        let bad = FamilyParams::B { n: 1, p: vec![1, 2, 4], q: root_of_unity(8, 1) };
        let e = bad.validate().unwrap_err();
        assert_eq!(e.message, "p not pairwise coprime");

        let wrong_q = FamilyParams::B { n: 1, p: vec![1, 2, 3], q: root_of_unity(3, 1) };
        assert!(wrong_q.validate().unwrap_err().message.starts_with("order(q) ≠ ℓ"));

        assert!(FamilyParams::b_data(1, &[1, 2]).is_err());
        assert!(FamilyParams::b_data(3, &[2, 3, 5]).is_err());
        assert!(FamilyParams::b_data(1, &[1, 3, 2]).is_err());
    }

    #[test]
    fn remark_example_ell() {
        let d = FamilyParams::b_data(7, &[1, 3, 5]).unwrap();
        assert_eq!((d.m, d.ell), (15, 105));
        let d = FamilyParams::b_data(2, &[1, 2, 3]).unwrap();
        assert_eq!(d.ell, 12);
    }

    #[test]
    fn display() {
        let a = FamilyParams::A { n: 2, q: root_of_unity(3, 2) };
        assert_eq!(a.to_string(), "A(2, z3^2)");
        assert_eq!(FamilyParams::A { n: 0, q: CycloScalar::from_int(2) }.to_string(), "A(0, 2)");
    }
}
