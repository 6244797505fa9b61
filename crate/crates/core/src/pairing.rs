//! Evaluation of intersection pairings against the fundamental class,
//! Gram matrices of the Poincaré pairing, dual partners of the ring
//! generators, and the `a^g = 0` vanishing check.
//!
//! All values reduce to the closed form for `f^m a^n` pairings: a
//! Bernoulli-number expression that vanishes whenever `m < g - 1`, times
//! the handle recursion `<f^m a^n gamma^p> = 2g * <f^m a^n gamma^(p-1)>`
//! one genus down, fully unrolled. The nonzero pairings of `b` monomials
//! are exactly those whose index set splits into pairs `{i, i+g}`, each
//! pair contributing one `gamma_i`.

use crate::error::{Error, Result};
use crate::exact::{bernoulli, binomial, factorial, factorial_quotient, Rational};
use crate::monomial::{multiply, CohClass, Genus, NormalizedMonomial};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

/// Global sign in the closed-form pairing.
///
/// `Consistent` uses `(-1)^g`, which gives the empty pairing at genus 1
/// the value +1 (one point). `PaperLiteral` keeps `(-1)^(g-1)` exactly as
/// the formula is usually printed; it flips every nonzero value and is
/// retained for auditing.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SignConvention {
    #[default]
    Consistent,
    PaperLiteral,
}

/// Closed form for `<f^m a^n>[M_g]` (the `a` exponent is determined by
/// the degree and does not enter):
///
/// ```text
/// sign(g) * m!/(m-g+1)! * 2^(2g-2) * (2^(m-g+1) - 2) * B_(m-g+1)
/// ```
///
/// with `sign(g) = (-1)^g` or `(-1)^(g-1)` per [`SignConvention`]. The
/// factorial quotient is zero for `m < g - 1`, which encodes all the
/// vanishing `a`-power pairings.
pub fn closed_form_pairing(g: Genus, f_exp: u32, conv: SignConvention) -> Rational {
    let k = f_exp as i64 - g.get() as i64 + 1;
    if k < 0 {
        return Rational::zero();
    }
    let sign_exp = match conv {
        SignConvention::Consistent => g.get(),
        SignConvention::PaperLiteral => g.get() - 1,
    };
    let mut value = factorial_quotient(f_exp as u64, k)
        * Rational::pow_of_two(2 * g.get() - 2)
        * (Rational::pow_of_two(k as u32) - Rational::from_int(2))
        * bernoulli(k as u32);
    if sign_exp % 2 == 1 {
        value = -value;
    }
    value
}

/// Exponent triple `f^m a^n gamma^p` to pair against `[M_g]`.
///
/// `f_exp` is the degree-2 exponent (`m`), `a_exp` the degree-4 exponent
/// (`n`), `gamma_exp` the power of the summed class (`p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingQuery {
    pub genus: Genus,
    pub f_exp: u32,
    pub a_exp: u32,
    pub gamma_exp: u32,
}

impl PairingQuery {
    /// The pairing can only be nonzero in top degree:
    /// `m + 2n + 3p = 3g - 3`.
    pub fn is_admissible(&self) -> bool {
        self.f_exp + 2 * self.a_exp + 3 * self.gamma_exp == 3 * self.genus.get() - 3
    }
}

/// `<f^m a^n gamma^p>[M_g]`: zero off top degree, otherwise the handle
/// recursion unrolled onto the closed form,
/// `2^p * g!/(g-p)! * closed_form_pairing(g - p, m)`.
pub fn power_pairing(q: &PairingQuery, conv: SignConvention) -> Rational {
    if !q.is_admissible() {
        return Rational::zero();
    }
    let g = q.genus.get();
    let p = q.gamma_exp;
    // Admissibility forces m + 2n = 3(g - p) - 3 >= 0, so g - p >= 1.
    let base = Genus::new(g - p).expect("admissible query keeps the base genus at least 1");
    Rational::pow_of_two(p)
        * factorial_quotient(g as u64, (g - p) as i64)
        * closed_form_pairing(base, q.f_exp, conv)
}

/// The common value of `<f^m a^n gamma_{i1}..gamma_{ip}>[M_g]` over any
/// `p` distinct indices: `power_pairing / (2^p * p! * C(g, p))`. Zero off
/// top degree.
pub fn gamma_subset_pairing(
    g: Genus,
    f_exp: u32,
    a_exp: u32,
    p: u32,
    conv: SignConvention,
) -> Rational {
    assert!(p <= g.get(), "at most g distinct gamma indices exist");
    let q = PairingQuery {
        genus: g,
        f_exp,
        a_exp,
        gamma_exp: p,
    };
    if !q.is_admissible() {
        return Rational::zero();
    }
    let divisor = Rational::pow_of_two(p)
        * Rational::from_bigint(factorial(p as u64))
        * Rational::from_bigint(binomial(g.get() as u64, p as i64));
    power_pairing(&q, conv) / divisor
}

/// Pairs a normal-form monomial against `[M_g]`.
///
/// Zero unless the total degree is `6g - 6` and the `b` indices split
/// into pairs `{i, i+g}`; the sorted pair block regroups into gamma
/// classes at the interleaving cost `(-1)^(q(q-1)/2)`. Powers of the
/// summed class expand over the gamma indices not already in play (each
/// choice contributes the same amount, `2^e * e!` per ordered selection).
pub fn pair_monomial(nm: &NormalizedMonomial, g: Genus, conv: SignConvention) -> Rational {
    if nm.is_zero() || nm.degree() != g.top_degree() {
        return Rational::zero();
    }
    let gg = g.get();

    // The b indices must form a union of pairs {i, i+g}.
    let lows: Vec<u32> = nm.b_set.iter().copied().filter(|&i| i <= gg).collect();
    let highs: Vec<u32> = nm.b_set.iter().copied().filter(|&i| i > gg).collect();
    if lows.len() != highs.len() || lows.iter().zip(&highs).any(|(&l, &h)| l + gg != h) {
        return Rational::zero();
    }
    let q = lows.len() as u32;

    // A gamma index already consumed by a b pair repeats, hence zero.
    if intersects(&lows, &nm.gamma_set) {
        return Rational::zero();
    }
    let used = q + nm.gamma_set.len() as u32;

    // gamma^e spreads over e-subsets of the free indices; each ordered
    // selection carries the factor 2 per letter from gamma = 2*sum.
    let e = nm.gamma_full_exp;
    let choices = binomial((gg - used) as u64, e as i64);
    if choices.is_zero() {
        return Rational::zero();
    }
    let expansion = Rational::pow_of_two(e)
        * Rational::from_bigint(factorial(e as u64))
        * Rational::from_bigint(choices);

    let mut value =
        nm.coeff.clone() * expansion * gamma_subset_pairing(g, nm.f_exp, nm.a_exp, used + e, conv);
    if (q * q.saturating_sub(1) / 2) % 2 == 1 {
        value = -value;
    }
    value
}

/// Both inputs strictly increasing.
fn intersects(xs: &[u32], ys: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// All monomials `f^x a^y b_S` of the given degree, in canonical order:
/// by `b`-length, then `b` indices lexicographically, then ascending `f`
/// exponent. Gamma symbols are excluded (they are `b` products).
pub fn enumerate_monomials(g: Genus, degree: u32) -> Result<Vec<NormalizedMonomial>> {
    if degree > g.top_degree() {
        return Err(Error::DegreeOutOfRange {
            degree: degree as i64,
            max: g.top_degree(),
        });
    }
    let mut out = Vec::new();
    let max_len = (degree / 3).min(2 * g.get());
    for b_len in 0..=max_len {
        let rem = degree - 3 * b_len;
        let mut exps = Vec::new();
        for f_exp in 0..=rem / 2 {
            let rest = rem - 2 * f_exp;
            if rest.is_multiple_of(4) {
                exps.push((f_exp, rest / 4));
            }
        }
        if exps.is_empty() {
            continue;
        }
        for b_set in subsets_lex(2 * g.get(), b_len as usize) {
            for &(f_exp, a_exp) in &exps {
                out.push(NormalizedMonomial::from_exponents(f_exp, a_exp, b_set.clone()));
            }
        }
    }
    Ok(out)
}

/// Size-`k` subsets of `1..=n` in lexicographic order.
fn subsets_lex(n: u32, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if k > n as usize {
        return out;
    }
    let mut cur: Vec<u32> = (1..=k as u32).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) as u32 {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exact matrix of the Poincaré pairing between the canonical monomial
/// bases of two complementary degrees.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub genus: Genus,
    pub degree: u32,
    pub rows: Vec<NormalizedMonomial>,
    pub cols: Vec<NormalizedMonomial>,
    pub entries: Vec<Vec<Rational>>,
}

/// Builds the Gram matrix of degree `d` rows against degree `6g-6-d`
/// columns. Cells are independent and evaluated in parallel; the result
/// is assembled in canonical order, so output is schedule-independent.
pub fn gram(g: Genus, degree: u32, conv: SignConvention) -> Result<GramMatrix> {
    let rows = enumerate_monomials(g, degree)?;
    let cols = enumerate_monomials(g, g.top_degree() - degree)?;
    let entries: Vec<Vec<Rational>> = rows
        .par_iter()
        .map(|row| {
            cols.iter()
                .map(|col| pair_monomial(&multiply(row, col), g, conv))
                .collect()
        })
        .collect();
    Ok(GramMatrix {
        genus: g,
        degree,
        rows,
        cols,
        entries,
    })
}

impl GramMatrix {
    /// CSV form: header of column labels, one row per row monomial,
    /// entries in machine form `p/q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push(',');
        out.push_str(
            &self
                .cols
                .iter()
                .map(|c| c.render())
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
        for (row, entries) in self.rows.iter().zip(&self.entries) {
            out.push_str(&row.render());
            for e in entries {
                out.push(',');
                out.push_str(&e.machine_form());
            }
            out.push('\n');
        }
        out
    }

    /// JSON object `{genus, degree, rows, cols, entries}` with labels in
    /// canonical text form and entries as `{"num", "den"}` strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "genus": self.genus.get(),
            "degree": self.degree,
            "rows": self.rows.iter().map(|m| m.render()).collect::<Vec<_>>(),
            "cols": self.cols.iter().map(|m| m.render()).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

/// Exact rank of the Gram matrix over the rationals, plus a basis of its
/// left radical as combinations of the row monomials.
///
/// Rows are scaled integral, then reduced by fraction-free (Bareiss)
/// elimination with an identity block carried along; rows that eliminate
/// to zero hand back integer combinations vanishing against every column,
/// normalized by content with a positive leading coefficient.
pub fn rank_and_radical(gm: &GramMatrix) -> (usize, Vec<CohClass>) {
    let nrows = gm.rows.len();
    let ncols = gm.cols.len();
    let width = ncols + nrows;

    let mut scales: Vec<BigInt> = Vec::with_capacity(nrows);
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(nrows);
    for (i, row) in gm.entries.iter().enumerate() {
        let mut lcm = BigInt::one();
        for e in row {
            lcm = lcm.lcm(e.denom());
        }
        let mut w: Vec<BigInt> = Vec::with_capacity(width);
        for e in row {
            w.push(e.numer() * (&lcm / e.denom()));
        }
        w.resize(width, BigInt::zero());
        w[ncols + i] = BigInt::one();
        scales.push(lcm);
        work.push(w);
    }

    let mut prev = BigInt::one();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row >= nrows {
            break;
        }
        let Some(pr) = (pivot_row..nrows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(pivot_row, pr);
        let (pivot_part, rest) = work.split_at_mut(pivot_row + 1);
        let pivot = &pivot_part[pivot_row];
        for row in rest.iter_mut() {
            for j in (col + 1)..width {
                let num = &pivot[col] * &row[j] - &row[col] * &pivot[j];
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = quot;
            }
            row[col] = BigInt::zero();
        }
        prev = work[pivot_row][col].clone();
        pivot_row += 1;
    }

    let rank = pivot_row;
    let mut radical = Vec::with_capacity(nrows - rank);
    for row in work.iter().skip(rank) {
        debug_assert!(row[..ncols].iter().all(|e| e.is_zero()));
        // Undo the row scaling: the kernel vector of the original matrix
        // has components u_j * s_j.
        let mut vec: Vec<BigInt> = row[ncols..]
            .iter()
            .zip(&scales)
            .map(|(u, s)| u * s)
            .collect();
        let mut content = BigInt::zero();
        for v in &vec {
            content = content.gcd(v);
        }
        if let Some(first) = vec.iter().find(|v| !v.is_zero()) {
            if first.is_negative() {
                content = -content;
            }
        }
        if !content.is_zero() {
            for v in &mut vec {
                *v = &*v / &content;
            }
        }
        let mut class = CohClass::zero();
        for (j, v) in vec.into_iter().enumerate() {
            if !v.is_zero() {
                class.add_term(gm.rows[j].key(), Rational::from_bigint(v));
            }
        }
        radical.push(class);
    }
    (rank, radical)
}

/// A ring generator whose dual partner can be requested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    F,
    A,
    B(u32),
}

impl Generator {
    /// Parses the CLI token forms `f`, `a`, `b<k>`.
    pub fn parse(token: &str, g: Genus) -> Result<Generator> {
        match token {
            "f" => Ok(Generator::F),
            "a" => Ok(Generator::A),
            _ => {
                if let Some(idx) = token.strip_prefix('b') {
                    let k: u32 = idx.parse().map_err(|_| Error::Syntax {
                        offset: 1,
                        message: format!("bad b index {idx:?}"),
                    })?;
                    if k < 1 || k > 2 * g.get() {
                        return Err(Error::IndexOutOfRange(format!(
                            "b{k} is outside b1..b{} at genus {g}",
                            2 * g.get()
                        )));
                    }
                    Ok(Generator::B(k))
                } else {
                    Err(Error::Syntax {
                        offset: 0,
                        message: format!("unknown generator {token:?}; expected f, a or b<k>"),
                    })
                }
            }
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Generator::F => 2,
            Generator::A => 4,
            Generator::B(_) => 3,
        }
    }

    pub fn monomial(&self) -> NormalizedMonomial {
        match self {
            Generator::F => NormalizedMonomial::from_exponents(1, 0, vec![]),
            Generator::A => NormalizedMonomial::from_exponents(0, 1, vec![]),
            Generator::B(k) => NormalizedMonomial::from_exponents(0, 0, vec![*k]),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Generator::F => "f".into(),
            Generator::A => "a".into(),
            Generator::B(k) => format!("b{k}"),
        }
    }
}

/// The pairing vector `<x * m_i>` of `x` against the canonical monomials
/// of the complementary degree, in canonical order.
pub fn functional(
    g: Genus,
    x: &NormalizedMonomial,
    conv: SignConvention,
) -> Result<Vec<Rational>> {
    let deg = x.degree();
    if deg > g.top_degree() {
        return Err(Error::DegreeOutOfRange {
            degree: deg as i64,
            max: g.top_degree(),
        });
    }
    Ok(enumerate_monomials(g, g.top_degree() - deg)?
        .iter()
        .map(|m| pair_monomial(&multiply(x, m), g, conv))
        .collect())
}

/// The dual partner of a generator: the first complementary-degree
/// monomial (canonical order) pairing nonzero against it, scaled so the
/// pairing is exactly 1. Any valid partner differs by radical elements,
/// so this deterministic representative is as good as any.
pub fn dual_partner(g: Genus, generator: Generator, conv: SignConvention) -> Result<CohClass> {
    if g.get() < 2 {
        return Err(Error::GenusOutOfRange(format!(
            "dual partners need genus >= 2, got {g}"
        )));
    }
    let gen_monomial = generator.monomial();
    let complement = g.top_degree() - generator.degree();
    for candidate in enumerate_monomials(g, complement)? {
        let value = pair_monomial(&multiply(&gen_monomial, &candidate), g, conv);
        if !value.is_zero() {
            return Ok(CohClass::from_monomial(&candidate).scale(&value.recip()));
        }
    }
    Err(Error::NoDualFound(generator.render()))
}

/// Result of the `a^g = 0` vanishing check.
#[derive(Clone, Debug, Serialize)]
pub struct NewsteadReport {
    pub genus: u32,
    /// True below genus 3, where `a^g` already exceeds the top degree.
    pub vacuous: bool,
    pub checked: usize,
    /// Labels and values of any nonzero pairing (always empty unless the
    /// engine is broken).
    pub violations: Vec<String>,
}

impl NewsteadReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Checks that `a^g` pairs to zero against every monomial of the
/// complementary degree `2g - 6`.
pub fn newstead_check(g: Genus, conv: SignConvention) -> NewsteadReport {
    let gg = g.get();
    if 4 * gg > g.top_degree() {
        return NewsteadReport {
            genus: gg,
            vacuous: true,
            checked: 0,
            violations: Vec::new(),
        };
    }
    let a_power = NormalizedMonomial::from_exponents(0, gg, vec![]);
    let complement = g.top_degree() - 4 * gg;
    let witnesses =
        enumerate_monomials(g, complement).expect("complement degree is within range");
    let mut violations = Vec::new();
    for z in &witnesses {
        let value = pair_monomial(&multiply(&a_power, z), g, conv);
        if !value.is_zero() {
            violations.push(format!("<a^{gg} * {}> = {}", z.render(), value));
        }
    }
    NewsteadReport {
        genus: gg,
        vacuous: false,
        checked: witnesses.len(),
        violations,
    }
}

/// One admissible exponent triple with its pairing.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub f_exp: u32,
    pub a_exp: u32,
    pub gamma_exp: u32,
    pub value: Rational,
}

/// JSON form of [`table`]: `{genus, sign_convention, rows}` with rows
/// `{m, n, p, value}` and values as `{"num", "den"}` strings.
pub fn table_json(g: Genus, conv: SignConvention) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = table(g, conv)
        .iter()
        .map(|r| {
            serde_json::json!({
                "m": r.f_exp,
                "n": r.a_exp,
                "p": r.gamma_exp,
                "value": r.value,
            })
        })
        .collect();
    serde_json::json!({
        "genus": g.get(),
        "sign_convention": conv,
        "rows": rows,
    })
}

/// JSON form of a dual-partner query: the partner class and the full
/// pairing vector of the generator with monomial labels.
pub fn dual_json(g: Genus, generator: Generator, conv: SignConvention) -> Result<serde_json::Value> {
    let partner = dual_partner(g, generator, conv)?;
    let basis = enumerate_monomials(g, g.top_degree() - generator.degree())?;
    let values = functional(g, &generator.monomial(), conv)?;
    let terms: Vec<serde_json::Value> = partner
        .iter()
        .map(|(key, coeff)| serde_json::json!({"monomial": key.render(), "coeff": coeff}))
        .collect();
    let vector: Vec<serde_json::Value> = basis
        .iter()
        .zip(&values)
        .map(|(m, v)| serde_json::json!({"monomial": m.render(), "value": v}))
        .collect();
    Ok(serde_json::json!({
        "genus": g.get(),
        "generator": generator.render(),
        "partner": partner.render(),
        "partner_terms": terms,
        "functional": vector,
    }))
}

/// All admissible `(m, n, p)` triples with their pairings, ordered
/// lexicographically by `(p, n, m)` (the `f` exponent is determined by
/// the other two).
pub fn table(g: Genus, conv: SignConvention) -> Vec<TableRow> {
    let top = 3 * g.get() - 3;
    let mut rows = Vec::new();
    for gamma_exp in 0..=top / 3 {
        for a_exp in 0..=(top - 3 * gamma_exp) / 2 {
            let f_exp = top - 3 * gamma_exp - 2 * a_exp;
            let query = PairingQuery {
                genus: g,
                f_exp,
                a_exp,
                gamma_exp,
            };
            rows.push(TableRow {
                f_exp,
                a_exp,
                gamma_exp,
                value: power_pairing(&query, conv),
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{normalize, parse_monomial};

    fn genus(g: u32) -> Genus {
        Genus::new(g).unwrap()
    }

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pair_text(text: &str, g: u32) -> Rational {
        let g = genus(g);
        let nm = normalize(&parse_monomial(text, g).unwrap(), g).unwrap();
        pair_monomial(&nm, g, SignConvention::Consistent)
    }

    const CONSISTENT: SignConvention = SignConvention::Consistent;

    #[test]
    fn closed_form_anchors() {
        assert_eq!(closed_form_pairing(genus(1), 0, CONSISTENT), rat("1"));
        assert_eq!(closed_form_pairing(genus(2), 3, CONSISTENT), rat("4"));
        assert_eq!(closed_form_pairing(genus(2), 1, CONSISTENT), rat("-4"));
        assert_eq!(closed_form_pairing(genus(3), 0, CONSISTENT), rat("0"));
    }

    #[test]
    fn sign_convention_contrast_at_genus_one() {
        assert_eq!(
            closed_form_pairing(genus(1), 0, SignConvention::PaperLiteral),
            rat("-1")
        );
        assert_eq!(closed_form_pairing(genus(1), 0, CONSISTENT), rat("1"));
    }

    fn query(g: u32, m: u32, n: u32, p: u32) -> PairingQuery {
        PairingQuery {
            genus: genus(g),
            f_exp: m,
            a_exp: n,
            gamma_exp: p,
        }
    }

    #[test]
    fn power_pairing_anchors() {
        assert_eq!(power_pairing(&query(1, 0, 0, 0), CONSISTENT), rat("1"));
        assert_eq!(power_pairing(&query(2, 0, 0, 1), CONSISTENT), rat("4"));
        assert_eq!(power_pairing(&query(3, 0, 0, 2), CONSISTENT), rat("24"));
        assert_eq!(power_pairing(&query(2, 1, 1, 0), CONSISTENT), rat("-4"));
        assert_eq!(power_pairing(&query(3, 0, 3, 0), CONSISTENT), rat("0"));
        // degree mismatch
        assert_eq!(power_pairing(&query(2, 1, 0, 0), CONSISTENT), rat("0"));
    }

    #[test]
    fn gamma_subset_anchors() {
        assert_eq!(gamma_subset_pairing(genus(2), 0, 0, 1, CONSISTENT), rat("1"));
        assert_eq!(gamma_subset_pairing(genus(3), 0, 0, 2, CONSISTENT), rat("1"));
        assert_eq!(gamma_subset_pairing(genus(3), 1, 1, 1, CONSISTENT), rat("-4"));
    }

    #[test]
    fn pair_monomial_examples() {
        assert_eq!(pair_text("b1 b3", 2), rat("1"));
        assert_eq!(pair_text("b1 b2 b4 b5", 3), rat("-1"));
        assert_eq!(pair_text("gamma gamma1", 3), rat("4"));
        assert_eq!(pair_text("b1 b2", 2), rat("0"));
        assert_eq!(pair_text("f^3", 2), rat("4"));
        assert_eq!(pair_text("f a", 2), rat("-4"));
        assert_eq!(pair_text("f", 2), rat("0")); // degree gate
        assert_eq!(pair_text("gamma^2", 3), rat("24"));
        assert_eq!(pair_text("gamma1 gamma2", 3), rat("1"));
        // b pair colliding with an explicit gamma symbol
        assert_eq!(pair_text("b1 b4 gamma1", 3), rat("0"));
    }

    #[test]
    fn gamma_power_expansion_matches_power_pairing() {
        for g in 1..=5u32 {
            for row in table(genus(g), CONSISTENT) {
                let nm = NormalizedMonomial {
                    coeff: Rational::one(),
                    f_exp: row.f_exp,
                    a_exp: row.a_exp,
                    b_set: vec![],
                    gamma_set: vec![],
                    gamma_full_exp: row.gamma_exp,
                };
                assert_eq!(
                    pair_monomial(&nm, genus(g), CONSISTENT),
                    row.value,
                    "g={g} m={} n={} p={}",
                    row.f_exp,
                    row.a_exp,
                    row.gamma_exp
                );
            }
        }
    }

    #[test]
    fn gamma_subset_value_is_index_independent() {
        // pair_monomial over every p-subset of gamma indices agrees with
        // the common subset value, exhaustively for g <= 5.
        for g in 1..=5u32 {
            for row in table(genus(g), CONSISTENT) {
                let p = row.gamma_exp as usize;
                let expected =
                    gamma_subset_pairing(genus(g), row.f_exp, row.a_exp, row.gamma_exp, CONSISTENT);
                for subset in subsets_lex(g, p) {
                    let nm = NormalizedMonomial {
                        coeff: Rational::one(),
                        f_exp: row.f_exp,
                        a_exp: row.a_exp,
                        b_set: vec![],
                        gamma_set: subset.clone(),
                        gamma_full_exp: 0,
                    };
                    assert_eq!(
                        pair_monomial(&nm, genus(g), CONSISTENT),
                        expected,
                        "g={g} subset={subset:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumerate_canonical_order() {
        let labels = |g, d| {
            enumerate_monomials(genus(g), d)
                .unwrap()
                .iter()
                .map(|m| m.render())
                .collect::<Vec<_>>()
        };
        assert_eq!(labels(2, 4), vec!["a", "f^2"]);
        assert_eq!(labels(2, 3), vec!["b1", "b2", "b3", "b4"]);
        assert_eq!(labels(2, 1), Vec::<String>::new());
        assert_eq!(labels(2, 0), vec!["1"]);
        assert_eq!(
            labels(2, 6),
            vec!["f a", "f^3", "b1 b2", "b1 b3", "b1 b4", "b2 b3", "b2 b4", "b3 b4"]
        );
        assert!(matches!(
            enumerate_monomials(genus(2), 7),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn gram_genus_two_degree_three() {
        let gm = gram(genus(2), 3, CONSISTENT).unwrap();
        let expect = [
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"],
            ["-1", "0", "0", "0"],
            ["0", "-1", "0", "0"],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                assert_eq!(gm.entries[i][j], rat(cell), "entry ({i},{j})");
            }
        }
        let (rank, radical) = rank_and_radical(&gm);
        assert_eq!(rank, 4);
        assert!(radical.is_empty());
    }

    #[test]
    fn gram_genus_two_degree_zero_row() {
        let gm = gram(genus(2), 0, CONSISTENT).unwrap();
        assert_eq!(gm.rows.len(), 1);
        let labeled: Vec<(String, String)> = gm
            .cols
            .iter()
            .zip(&gm.entries[0])
            .map(|(c, e)| (c.render(), e.to_string()))
            .collect();
        for (label, value) in [("f a", "-4"), ("f^3", "4"), ("b1 b3", "1"), ("b2 b4", "1"), ("b1 b2", "0")] {
            assert!(
                labeled.contains(&(label.to_string(), value.to_string())),
                "missing {label} -> {value} in {labeled:?}"
            );
        }
    }

    #[test]
    fn gram_genus_one_is_unit() {
        let gm = gram(genus(1), 0, CONSISTENT).unwrap();
        assert_eq!(gm.rows.len(), 1);
        assert_eq!(gm.cols.len(), 1);
        assert_eq!(gm.entries[0][0], rat("1"));
    }

    #[test]
    fn graded_transpose_identity_small() {
        let g = genus(2);
        for d in 0..=g.top_degree() {
            let gm = gram(g, d, CONSISTENT).unwrap();
            let gm_t = gram(g, g.top_degree() - d, CONSISTENT).unwrap();
            for (i, row) in gm.entries.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    let mirrored = &gm_t.entries[j][i];
                    let s = gm.rows[i].b_set.len();
                    let t = gm.cols[j].b_set.len();
                    let expected = if (s * t) % 2 == 1 {
                        -mirrored.clone()
                    } else {
                        mirrored.clone()
                    };
                    assert_eq!(*v, expected, "d={d} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn radical_of_zero_matrix_is_every_row() {
        let g = genus(2);
        let rows = enumerate_monomials(g, 3).unwrap();
        let gm = GramMatrix {
            genus: g,
            degree: 3,
            cols: rows.clone(),
            entries: vec![vec![Rational::zero(); rows.len()]; rows.len()],
            rows,
        };
        let (rank, radical) = rank_and_radical(&gm);
        assert_eq!(rank, 0);
        let rendered: Vec<String> = radical.iter().map(|c| c.render()).collect();
        assert_eq!(rendered, vec!["b1", "b2", "b3", "b4"]);
    }

    #[test]
    fn radical_annihilates_the_matrix() {
        // rank + radical dimension = rows, and every radical vector
        // pairs to zero against every column.
        for d in [4u32, 6, 9, 12] {
            let gm = gram(genus(3), d, CONSISTENT).unwrap();
            let (rank, radical) = rank_and_radical(&gm);
            assert_eq!(rank + radical.len(), gm.rows.len(), "d={d}");
            let index_of = |key: &crate::monomial::MonomialKey| {
                gm.rows
                    .iter()
                    .position(|r| &r.key() == key)
                    .expect("radical key is a row monomial")
            };
            for class in &radical {
                for col in 0..gm.cols.len() {
                    let mut dot = Rational::zero();
                    for (key, coeff) in class.iter() {
                        dot += coeff.clone() * gm.entries[index_of(key)][col].clone();
                    }
                    assert!(dot.is_zero(), "d={d} col={col}: {} pairs to {dot}", class.render());
                }
            }
        }
    }

    #[test]
    fn a_cubed_lies_in_radical_at_genus_three() {
        let gm = gram(genus(3), 12, CONSISTENT).unwrap();
        let (_rank, radical) = rank_and_radical(&gm);
        assert!(
            radical.iter().any(|c| c.render() == "a^3"),
            "radical should contain a^3: {:?}",
            radical.iter().map(|c| c.render()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn dual_partner_anchors() {
        let g = genus(2);
        assert_eq!(dual_partner(g, Generator::B(1), CONSISTENT).unwrap().render(), "b3");
        assert_eq!(dual_partner(g, Generator::A, CONSISTENT).unwrap().render(), "-1/4 f");
        assert_eq!(dual_partner(g, Generator::F, CONSISTENT).unwrap().render(), "-1/4 a");
        assert!(matches!(
            dual_partner(genus(1), Generator::F, CONSISTENT),
            Err(Error::GenusOutOfRange(_))
        ));
    }

    #[test]
    fn dual_partner_pairs_to_one() {
        for g in 2..=4u32 {
            let g = genus(g);
            let mut generators = vec![Generator::F, Generator::A];
            generators.extend((1..=2 * g.get()).map(Generator::B));
            for gen in generators {
                let partner = dual_partner(g, gen, CONSISTENT).unwrap();
                let mut paired = Rational::zero();
                for (key, coeff) in partner.iter() {
                    let nm = NormalizedMonomial {
                        coeff: coeff.clone(),
                        f_exp: key.f_exp,
                        a_exp: key.a_exp,
                        b_set: key.b_set.clone(),
                        gamma_set: key.gamma_set.clone(),
                        gamma_full_exp: 0,
                    };
                    paired += pair_monomial(&multiply(&gen.monomial(), &nm), g, CONSISTENT);
                }
                assert!(paired.is_one(), "<{} * partner> = {paired}", gen.render());
            }
        }
    }

    #[test]
    fn functional_anchors() {
        let g = genus(2);
        let f = Generator::F.monomial();
        assert_eq!(functional(g, &f, CONSISTENT).unwrap(), vec![rat("-4"), rat("4")]);
        let b1 = Generator::B(1).monomial();
        assert_eq!(
            functional(g, &b1, CONSISTENT).unwrap(),
            vec![rat("0"), rat("0"), rat("1"), rat("0")]
        );
        let one = NormalizedMonomial::one();
        let gm = gram(g, 0, CONSISTENT).unwrap();
        assert_eq!(functional(g, &one, CONSISTENT).unwrap(), gm.entries[0]);
    }

    #[test]
    fn newstead_reports() {
        let r = newstead_check(genus(3), CONSISTENT);
        assert!(!r.vacuous);
        assert_eq!(r.checked, 1);
        assert!(r.passed());
        let r = newstead_check(genus(4), CONSISTENT);
        assert!(!r.vacuous && r.passed() && r.checked > 0);
        let r = newstead_check(genus(2), CONSISTENT);
        assert!(r.vacuous && r.passed());
    }

    #[test]
    fn table_anchors() {
        let rows = |g: u32| {
            table(genus(g), CONSISTENT)
                .iter()
                .map(|r| (r.f_exp, r.a_exp, r.gamma_exp, r.value.to_string()))
                .collect::<Vec<_>>()
        };
        assert_eq!(rows(1), vec![(0, 0, 0, "1".to_string())]);
        assert_eq!(
            rows(2),
            vec![
                (3, 0, 0, "4".to_string()),
                (1, 1, 0, "-4".to_string()),
                (0, 0, 1, "4".to_string()),
            ]
        );
        let g3 = rows(3);
        for expected in [
            (6, 0, 0, "224".to_string()),
            (4, 1, 0, "-64".to_string()),
            (2, 2, 0, "32".to_string()),
            (0, 3, 0, "0".to_string()),
            (0, 0, 2, "24".to_string()),
        ] {
            assert!(g3.contains(&expected), "missing {expected:?} in {g3:?}");
        }
    }

    #[test]
    fn degree_gate_rejects_everything_off_top_degree() {
        let g = genus(3);
        for d in 0..g.top_degree() {
            for nm in enumerate_monomials(g, d).unwrap() {
                assert!(
                    pair_monomial(&nm, g, CONSISTENT).is_zero(),
                    "degree {d} monomial {} paired nonzero",
                    nm.render()
                );
            }
        }
    }
}
