//! Real root counting with Sturm sequences.

use super::poly::Poly1;
use crate::rat::Rat;

/// Interval endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    At(Rat),
    PosInf,
}

impl From<Rat> for Bound {
    fn from(r: Rat) -> Self {
        Bound::At(r)
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...`. Every member is rescaled by a
/// positive constant to a primitive integer polynomial, which leaves all
/// signs intact and keeps coefficients small.
pub fn sturm_sequence(p: &Poly1) -> Vec<Poly1> {
    let mut seq = vec![p.primitive()];
    if p.is_constant() {
        return seq;
    }
    seq.push(p.derivative().primitive());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn sign_at(p: &Poly1, at: &Bound) -> i8 {
    let lc = p.leading_coeff().signum();
    match at {
        Bound::At(x) => p.eval(x).signum(),
        Bound::PosInf => lc,
        Bound::NegInf => {
            if p.degree().unwrap_or(0).is_multiple_of(2) {
                lc
            } else {
                -lc
            }
        }
    }
}

fn variations(seq: &[Poly1], at: &Bound) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| sign_at(p, at))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(lo, hi]`. The polynomial is
/// reduced to its squarefree part first. The zero polynomial reports 0.
pub fn sturm_real_roots(p: &Poly1, lo: &Bound, hi: &Bound) -> usize {
    if p.is_constant() {
        return 0;
    }
    let seq = sturm_sequence(&p.squarefree_part());
    variations(&seq, lo).saturating_sub(variations(&seq, hi))
}
