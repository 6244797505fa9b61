//! Monomials in the graded-commutative ring generated by `f` (degree 2),
//! `a` (degree 4), `b1..b2g` (degree 3) and the degree-6 gamma classes
//! `gamma_i = b_i b_{i+g}`, `gamma = 2 * sum_i gamma_i`.
//!
//! A [`Monomial`] keeps its `b` letters in written order; [`normalize`]
//! sorts them, accumulating the Koszul sign (odd classes anticommute) and
//! collapsing any square of an odd letter to zero. Powers of the summed
//! class `gamma` stay symbolic here; the pairing engine expands them,
//! because which index tuples survive depends on the other factors.

use crate::error::{Error, Result};
use crate::exact::Rational;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Genus of the underlying surface, at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Genus> {
        if g < 1 {
            Err(Error::GenusOutOfRange(format!("genus {g} is below 1")))
        } else {
            Ok(Genus(g))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Real dimension of the moduli space: `6g - 6`, the top degree any
    /// pairing can see.
    pub fn top_degree(self) -> u32 {
        6 * self.0 - 6
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A product of generators exactly as written: `b` letters in user order,
/// `gamma_i` symbols as a multiset, and a symbolic power of the summed
/// class `gamma`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    pub coeff: Rational,
    pub f_exp: u32,
    pub a_exp: u32,
    /// Indices in `1..=2g`; order is significant until normalization.
    pub b_word: Vec<u32>,
    /// Indices in `1..=g`; these commute, repeats square to zero.
    pub gamma_indices: Vec<u32>,
    /// Power of the summed class `gamma`.
    pub gamma_full_exp: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            coeff: Rational::one(),
            f_exp: 0,
            a_exp: 0,
            b_word: Vec::new(),
            gamma_indices: Vec::new(),
            gamma_full_exp: 0,
        }
    }

    pub fn degree(&self) -> u32 {
        2 * self.f_exp
            + 4 * self.a_exp
            + 3 * self.b_word.len() as u32
            + 6 * self.gamma_indices.len() as u32
            + 6 * self.gamma_full_exp
    }
}

/// A monomial in normal form: `b` indices strictly increasing with the
/// Koszul sign folded into the coefficient, `gamma` indices strictly
/// increasing. The zero monomial is the canonical all-empty value with
/// coefficient 0, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedMonomial {
    pub coeff: Rational,
    pub f_exp: u32,
    pub a_exp: u32,
    pub b_set: Vec<u32>,
    pub gamma_set: Vec<u32>,
    pub gamma_full_exp: u32,
}

impl NormalizedMonomial {
    pub fn zero() -> Self {
        NormalizedMonomial {
            coeff: Rational::zero(),
            f_exp: 0,
            a_exp: 0,
            b_set: Vec::new(),
            gamma_set: Vec::new(),
            gamma_full_exp: 0,
        }
    }

    pub fn one() -> Self {
        NormalizedMonomial {
            coeff: Rational::one(),
            ..Self::zero()
        }
    }

    /// Monomial with a single generator power, unit coefficient.
    pub fn from_exponents(f_exp: u32, a_exp: u32, b_set: Vec<u32>) -> Self {
        debug_assert!(b_set.windows(2).all(|w| w[0] < w[1]));
        NormalizedMonomial {
            coeff: Rational::one(),
            f_exp,
            a_exp,
            b_set,
            gamma_set: Vec::new(),
            gamma_full_exp: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn degree(&self) -> u32 {
        2 * self.f_exp
            + 4 * self.a_exp
            + 3 * self.b_set.len() as u32
            + 6 * self.gamma_set.len() as u32
            + 6 * self.gamma_full_exp
    }

    /// Back to the free form (already sorted, so re-normalizing is a
    /// no-op up to the identical result).
    pub fn to_monomial(&self) -> Monomial {
        Monomial {
            coeff: self.coeff.clone(),
            f_exp: self.f_exp,
            a_exp: self.a_exp,
            b_word: self.b_set.clone(),
            gamma_indices: self.gamma_set.clone(),
            gamma_full_exp: self.gamma_full_exp,
        }
    }

    pub fn key(&self) -> MonomialKey {
        MonomialKey {
            f_exp: self.f_exp,
            a_exp: self.a_exp,
            b_set: self.b_set.clone(),
            gamma_set: self.gamma_set.clone(),
        }
    }

    /// Bare monomial text (coefficient not included); the unit monomial
    /// renders as `1`, the zero monomial as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        render_parts(
            self.f_exp,
            self.a_exp,
            &self.b_set,
            &self.gamma_set,
            self.gamma_full_exp,
        )
    }
}

impl fmt::Display for NormalizedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn render_parts(f_exp: u32, a_exp: u32, b_set: &[u32], gamma_set: &[u32], gamma_full: u32) -> String {
    let mut parts: Vec<String> = Vec::new();
    let push_power = |parts: &mut Vec<String>, base: String, exp: u32| match exp {
        0 => {}
        1 => parts.push(base),
        _ => parts.push(format!("{base}^{exp}")),
    };
    push_power(&mut parts, "f".into(), f_exp);
    push_power(&mut parts, "a".into(), a_exp);
    for &i in b_set {
        parts.push(format!("b{i}"));
    }
    for &i in gamma_set {
        parts.push(format!("gamma{i}"));
    }
    push_power(&mut parts, "gamma".into(), gamma_full);
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// Sorts the `b` word with the Koszul sign, sorts the commuting `gamma`
/// symbols without one, and collapses any repeated odd letter (or
/// repeated `gamma_i`, whose square contains one) to the zero monomial.
/// Powers of the summed class `gamma` are left symbolic.
pub fn normalize(m: &Monomial, g: Genus) -> Result<NormalizedMonomial> {
    let max_b = 2 * g.get();
    for &i in &m.b_word {
        if i < 1 || i > max_b {
            return Err(Error::IndexOutOfRange(format!(
                "b{i} is outside b1..b{max_b} at genus {g}"
            )));
        }
    }
    for &i in &m.gamma_indices {
        if i < 1 || i > g.get() {
            return Err(Error::IndexOutOfRange(format!(
                "gamma{i} is outside gamma1..gamma{g} at genus {g}"
            )));
        }
    }
    if m.coeff.is_zero() {
        return Ok(NormalizedMonomial::zero());
    }

    let mut inversions = 0usize;
    for i in 0..m.b_word.len() {
        for j in (i + 1)..m.b_word.len() {
            match m.b_word[i].cmp(&m.b_word[j]) {
                Ordering::Greater => inversions += 1,
                Ordering::Equal => return Ok(NormalizedMonomial::zero()),
                Ordering::Less => {}
            }
        }
    }
    let mut b_set = m.b_word.clone();
    b_set.sort_unstable();

    let mut gamma_set = m.gamma_indices.clone();
    gamma_set.sort_unstable();
    if gamma_set.windows(2).any(|w| w[0] == w[1]) {
        return Ok(NormalizedMonomial::zero());
    }

    let mut coeff = m.coeff.clone();
    if inversions % 2 == 1 {
        coeff = -coeff;
    }
    Ok(NormalizedMonomial {
        coeff,
        f_exp: m.f_exp,
        a_exp: m.a_exp,
        b_set,
        gamma_set,
        gamma_full_exp: m.gamma_full_exp,
    })
}

/// Ring product of two normal forms. Exponents add, the `b` sets merge
/// with the Koszul sign of the interleaving, and a letter shared by both
/// factors squares to zero.
pub fn multiply(x: &NormalizedMonomial, y: &NormalizedMonomial) -> NormalizedMonomial {
    if x.is_zero() || y.is_zero() {
        return NormalizedMonomial::zero();
    }
    // Inversions of the concatenation x.b_set ++ y.b_set relative to the
    // merged order; both halves are already sorted.
    let mut inversions = 0usize;
    for &xi in &x.b_set {
        for &yj in &y.b_set {
            match xi.cmp(&yj) {
                Ordering::Greater => inversions += 1,
                Ordering::Equal => return NormalizedMonomial::zero(),
                Ordering::Less => {}
            }
        }
    }
    let mut b_set = Vec::with_capacity(x.b_set.len() + y.b_set.len());
    b_set.extend_from_slice(&x.b_set);
    b_set.extend_from_slice(&y.b_set);
    b_set.sort_unstable();

    let mut gamma_set = Vec::with_capacity(x.gamma_set.len() + y.gamma_set.len());
    gamma_set.extend_from_slice(&x.gamma_set);
    gamma_set.extend_from_slice(&y.gamma_set);
    gamma_set.sort_unstable();
    if gamma_set.windows(2).any(|w| w[0] == w[1]) {
        return NormalizedMonomial::zero();
    }

    let mut coeff = &x.coeff * &y.coeff;
    if inversions % 2 == 1 {
        coeff = -coeff;
    }
    NormalizedMonomial {
        coeff,
        f_exp: x.f_exp + y.f_exp,
        a_exp: x.a_exp + y.a_exp,
        b_set,
        gamma_set,
        gamma_full_exp: x.gamma_full_exp + y.gamma_full_exp,
    }
}

/// Upper bound on the expanded letter count of a parsed monomial; beyond
/// this the pairing is zero anyway and expansion would only burn memory.
const MAX_EXPANDED_LETTERS: usize = 4096;

/// Parses monomial text against the grammar
///
/// ```text
/// monomial := term { WS term } ;
/// term     := base [ "^" UINT ] ;
/// base     := "f" | "a" | "b" UINT | "gamma" [ UINT ] | "1" ;
/// ```
///
/// `gamma` with an index denotes `gamma_k`, bare `gamma` the summed
/// class. `*` is accepted as a separator alongside whitespace, and `1`
/// stands for the empty product. Written order is preserved (it decides
/// the sign), and exponents expand to repeated letters.
pub fn parse_monomial(text: &str, g: Genus) -> Result<Monomial> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let mut out = Monomial::one();
    let mut saw_term = false;

    let syntax = |offset: usize, message: &str| Error::Syntax {
        offset,
        message: message.into(),
    };

    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*' {
            pos += 1;
            continue;
        }
        let term_start = pos;
        enum Base {
            F,
            A,
            B(u32),
            GammaIndexed(u32),
            GammaFull,
            One,
        }
        let base = if bytes[pos].is_ascii_digit() {
            let (value, next) = read_uint(bytes, pos)?;
            if value != 1 {
                return Err(syntax(term_start, "a bare number other than 1 is not a term"));
            }
            pos = next;
            Base::One
        } else if bytes[pos].is_ascii_lowercase() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_lowercase() {
                pos += 1;
            }
            match &text[start..pos] {
                "f" => Base::F,
                "a" => Base::A,
                "b" => {
                    if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                        return Err(syntax(pos, "expected an index after `b`"));
                    }
                    let (idx, next) = read_uint(bytes, pos)?;
                    pos = next;
                    if idx < 1 || idx > 2 * g.get() {
                        return Err(Error::IndexOutOfRange(format!(
                            "b{idx} is outside b1..b{} at genus {g}",
                            2 * g.get()
                        )));
                    }
                    Base::B(idx)
                }
                "gamma" => {
                    if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        let (idx, next) = read_uint(bytes, pos)?;
                        pos = next;
                        if idx < 1 || idx > g.get() {
                            return Err(Error::IndexOutOfRange(format!(
                                "gamma{idx} is outside gamma1..gamma{g} at genus {g}"
                            )));
                        }
                        Base::GammaIndexed(idx)
                    } else {
                        Base::GammaFull
                    }
                }
                other => {
                    return Err(syntax(start, &format!("unknown generator `{other}`")));
                }
            }
        } else {
            return Err(syntax(pos, "expected a generator"));
        };

        let mut exp = 1u32;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            if pos >= bytes.len() || !bytes[pos].is_ascii_digit() {
                return Err(syntax(pos, "expected an exponent after `^`"));
            }
            let (value, next) = read_uint(bytes, pos)?;
            exp = value;
            pos = next;
        }
        if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() && bytes[pos] != b'*' {
            return Err(syntax(pos, "unexpected character inside term"));
        }

        match base {
            Base::F => out.f_exp += exp,
            Base::A => out.a_exp += exp,
            Base::One => {}
            Base::GammaFull => out.gamma_full_exp += exp,
            Base::B(idx) => {
                if out.b_word.len() + exp as usize > MAX_EXPANDED_LETTERS {
                    return Err(syntax(term_start, "expanded monomial is too long"));
                }
                out.b_word.extend(std::iter::repeat_n(idx, exp as usize));
            }
            Base::GammaIndexed(idx) => {
                if out.gamma_indices.len() + exp as usize > MAX_EXPANDED_LETTERS {
                    return Err(syntax(term_start, "expanded monomial is too long"));
                }
                out.gamma_indices
                    .extend(std::iter::repeat_n(idx, exp as usize));
            }
        }
        saw_term = true;
    }

    if !saw_term {
        return Err(syntax(0, "empty monomial"));
    }
    Ok(out)
}

fn read_uint(bytes: &[u8], mut pos: usize) -> Result<(u32, usize)> {
    let start = pos;
    let mut value: u64 = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        value = value * 10 + u64::from(bytes[pos] - b'0');
        if value > u32::MAX as u64 {
            return Err(Error::Syntax {
                offset: start,
                message: "number too large".into(),
            });
        }
        pos += 1;
    }
    Ok((value as u32, pos))
}

/// Key of a normal-form monomial with the coefficient stripped; ordered
/// canonically: by `b`-length, then `b` indices, then the `gamma` block,
/// then ascending `f` exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialKey {
    pub f_exp: u32,
    pub a_exp: u32,
    pub b_set: Vec<u32>,
    pub gamma_set: Vec<u32>,
}

impl MonomialKey {
    pub fn render(&self) -> String {
        render_parts(self.f_exp, self.a_exp, &self.b_set, &self.gamma_set, 0)
    }
}

impl Ord for MonomialKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.b_set.len(), &self.b_set, self.gamma_set.len(), &self.gamma_set, self.f_exp, self.a_exp)
            .cmp(&(
                other.b_set.len(),
                &other.b_set,
                other.gamma_set.len(),
                &other.gamma_set,
                other.f_exp,
                other.a_exp,
            ))
    }
}

impl PartialOrd for MonomialKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite formal rational combination of normal-form monomials. No zero
/// coefficients are stored, so equality is structural.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CohClass {
    terms: BTreeMap<MonomialKey, Rational>,
}

impl CohClass {
    pub fn zero() -> Self {
        CohClass::default()
    }

    pub fn from_monomial(nm: &NormalizedMonomial) -> Self {
        debug_assert_eq!(nm.gamma_full_exp, 0, "CohClass carries no gamma powers");
        let mut class = CohClass::zero();
        if !nm.is_zero() {
            class.add_term(nm.key(), nm.coeff.clone());
        }
        class
    }

    pub fn add_term(&mut self, key: MonomialKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CohClass) -> CohClass {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> CohClass {
        let mut out = CohClass::zero();
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.add_term(k.clone(), c * v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MonomialKey, &Rational)> {
        self.terms.iter()
    }

    /// Text form such as `b3`, `-1/4 f` or `a + -2 f^2`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(key, coeff)| {
                let m = key.render();
                if m == "1" {
                    coeff.to_string()
                } else if coeff.is_one() {
                    m
                } else if (-coeff.clone()).is_one() {
                    format!("-{m}")
                } else {
                    format!("{coeff} {m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn genus(g: u32) -> Genus {
        Genus::new(g).unwrap()
    }

    fn b_word(word: &[u32]) -> Monomial {
        Monomial {
            b_word: word.to_vec(),
            ..Monomial::one()
        }
    }

    #[test]
    fn normalize_swap_picks_up_sign() {
        let nm = normalize(&b_word(&[3, 1]), genus(2)).unwrap();
        assert_eq!(nm.b_set, vec![1, 3]);
        assert_eq!(nm.coeff, -Rational::one());
    }

    #[test]
    fn normalize_square_of_odd_letter_is_zero() {
        let nm = normalize(&b_word(&[1, 1]), genus(2)).unwrap();
        assert_eq!(nm, NormalizedMonomial::zero());
    }

    #[test]
    fn normalize_sorted_word_keeps_sign() {
        let nm = normalize(&b_word(&[1, 2, 4, 5]), genus(3)).unwrap();
        assert_eq!(nm.b_set, vec![1, 2, 4, 5]);
        assert_eq!(nm.coeff, Rational::one());
    }

    #[test]
    fn normalize_repeated_gamma_symbol_is_zero() {
        let m = Monomial {
            gamma_indices: vec![2, 2],
            ..Monomial::one()
        };
        assert_eq!(normalize(&m, genus(3)).unwrap(), NormalizedMonomial::zero());
    }

    #[test]
    fn normalize_rejects_out_of_range_indices() {
        assert!(matches!(
            normalize(&b_word(&[5]), genus(2)),
            Err(Error::IndexOutOfRange(_))
        ));
        let m = Monomial {
            gamma_indices: vec![3],
            ..Monomial::one()
        };
        assert!(matches!(
            normalize(&m, genus(2)),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn multiply_examples() {
        let g = genus(2);
        let b1 = normalize(&b_word(&[1]), g).unwrap();
        let b3 = normalize(&b_word(&[3]), g).unwrap();
        let p = multiply(&b1, &b3);
        assert_eq!(p.b_set, vec![1, 3]);
        assert_eq!(p.coeff, Rational::one());
        let q = multiply(&b3, &b1);
        assert_eq!(q.b_set, vec![1, 3]);
        assert_eq!(q.coeff, -Rational::one());
        assert_eq!(multiply(&b1, &b1), NormalizedMonomial::zero());
    }

    #[test]
    fn parse_examples() {
        let m = parse_monomial("f^2 a", genus(2)).unwrap();
        assert_eq!((m.f_exp, m.a_exp), (2, 1));
        let m = parse_monomial("b1 b2 b4 b5", genus(3)).unwrap();
        assert_eq!(m.b_word, vec![1, 2, 4, 5]);
        let m = parse_monomial("gamma^2", genus(2)).unwrap();
        assert_eq!(m.gamma_full_exp, 2);
        let m = parse_monomial("gamma2 * f", genus(3)).unwrap();
        assert_eq!(m.gamma_indices, vec![2]);
        assert_eq!(m.f_exp, 1);
        let m = parse_monomial("1", genus(2)).unwrap();
        assert_eq!(m.degree(), 0);
        let m = parse_monomial("b2^3", genus(2)).unwrap();
        assert_eq!(m.b_word, vec![2, 2, 2]);
    }

    #[test]
    fn parse_errors_carry_byte_offsets() {
        match parse_monomial("f^2 c3", genus(2)) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_monomial("f^", genus(2)) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_monomial("b", genus(2)) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(matches!(
            parse_monomial("b9", genus(2)),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            parse_monomial("", genus(2)),
            Err(Error::Syntax { offset: 0, .. })
        ));
    }

    #[test]
    fn render_unit_and_powers() {
        assert_eq!(NormalizedMonomial::one().render(), "1");
        assert_eq!(NormalizedMonomial::zero().render(), "0");
        let m = NormalizedMonomial {
            coeff: Rational::one(),
            f_exp: 2,
            a_exp: 1,
            b_set: vec![1, 3],
            gamma_set: vec![2],
            gamma_full_exp: 2,
        };
        assert_eq!(m.render(), "f^2 a b1 b3 gamma2 gamma^2");
    }

    #[test]
    fn cohclass_render() {
        let g = genus(2);
        let f = normalize(&parse_monomial("f", g).unwrap(), g).unwrap();
        let quarter = CohClass::from_monomial(&f).scale(&"-1/4".parse().unwrap());
        assert_eq!(quarter.render(), "-1/4 f");
        let b3 = normalize(&parse_monomial("b3", g).unwrap(), g).unwrap();
        assert_eq!(CohClass::from_monomial(&b3).render(), "b3");
    }

    prop_compose! {
        fn arb_b_word(g: u32)(word in proptest::collection::vec(1..=2 * g, 0..6)) -> Vec<u32> {
            word
        }
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(word in arb_b_word(3), f_exp in 0u32..4, a_exp in 0u32..4) {
            let g = genus(3);
            let m = Monomial { f_exp, a_exp, b_word: word, ..Monomial::one() };
            let once = normalize(&m, g).unwrap();
            let twice = normalize(&once.to_monomial(), g).unwrap();
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn multiply_anticommutes_with_koszul_sign(u in arb_b_word(3), v in arb_b_word(3)) {
            let g = genus(3);
            let x = normalize(&b_word(&u), g).unwrap();
            let y = normalize(&b_word(&v), g).unwrap();
            if x.is_zero() || y.is_zero() {
                return Ok(());
            }
            let xy = multiply(&x, &y);
            let yx = multiply(&y, &x);
            let sign_flips = (x.b_set.len() * y.b_set.len()) % 2 == 1;
            let expected = if sign_flips {
                NormalizedMonomial { coeff: -yx.coeff.clone(), ..yx.clone() }
            } else {
                yx.clone()
            };
            prop_assert_eq!(xy, expected);
        }

        #[test]
        fn degree_adds_when_product_nonzero(u in arb_b_word(3), v in arb_b_word(3)) {
            let g = genus(3);
            let x = normalize(&b_word(&u), g).unwrap();
            let y = normalize(&b_word(&v), g).unwrap();
            let p = multiply(&x, &y);
            if !p.is_zero() {
                prop_assert_eq!(p.degree(), x.degree() + y.degree());
            }
        }

        #[test]
        fn render_parse_round_trip(
            word in arb_b_word(3),
            f_exp in 0u32..4,
            a_exp in 0u32..4,
            gamma_full in 0u32..3,
        ) {
            let g = genus(3);
            let m = Monomial { f_exp, a_exp, b_word: word, gamma_full_exp: gamma_full, ..Monomial::one() };
            let nm = normalize(&m, g).unwrap();
            if nm.is_zero() {
                return Ok(());
            }
            // render() emits the bare monomial, so compare up to the
            // (unit-magnitude) coefficient.
            let reparsed = normalize(&parse_monomial(&nm.render(), g).unwrap(), g).unwrap();
            let expected = NormalizedMonomial { coeff: Rational::one(), ..nm };
            prop_assert_eq!(expected, reparsed);
        }
    }
}
