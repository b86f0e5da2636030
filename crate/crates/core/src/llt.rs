//! Unicellular LLT polynomials and chromatic quasisymmetric functions.
//!
//! Two engines: direct enumeration of colourings, and a recursion driven by the
//! base case `K_n`, multiplicativity over blocks, and the modular law.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hessenberg::{find_triples, HessFn, ModularTriple, Role};
use crate::partition::{partitions, Partition};
use crate::qpoly::{q_factorial, q_falling, QPoly, Rational};
use crate::symfunc::{Basis, SymFunc};

/// Colour of each vertex, `γ(1..n)`.
pub type Coloring = Vec<usize>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    /// Sum over all colourings.
    Llt,
    /// Sum over proper colourings.
    Csf,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Llt => "llt",
            Engine::Csf => "csf",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "llt" => Ok(Engine::Llt),
            "csf" => Ok(Engine::Csf),
            other => Err(format!("unknown engine {other:?}")),
        }
    }
}

/// `|{(i,j) ∈ E : γ(i) < γ(j)}|`.
pub fn asc(h: &HessFn, gamma: &[usize]) -> usize {
    assert_eq!(gamma.len(), h.n(), "colouring length must equal n");
    h.edges()
        .into_iter()
        .filter(|&(i, j)| gamma[i - 1] < gamma[j - 1])
        .count()
}

/// For each vertex `j`, the earlier vertices `i` adjacent to it.
fn back_neighbours(h: &HessFn) -> Vec<Vec<usize>> {
    let n = h.n();
    let mut back = vec![Vec::new(); n];
    for (i, j) in h.edges() {
        back[j - 1].push(i - 1);
    }
    back
}

/// Ascent distribution over all arrangements of the colour multiset `content`.
fn ascent_counts(back: &[Vec<usize>], content: &[usize], proper: bool) -> Vec<u64> {
    struct Walk<'a> {
        back: &'a [Vec<usize>],
        proper: bool,
        remaining: Vec<usize>,
        colours: Vec<usize>,
        counts: Vec<u64>,
    }
    impl Walk<'_> {
        fn go(&mut self, pos: usize, asc: usize) {
            if pos == self.back.len() {
                if self.counts.len() <= asc {
                    self.counts.resize(asc + 1, 0);
                }
                self.counts[asc] += 1;
                return;
            }
            for c in 0..self.remaining.len() {
                if self.remaining[c] == 0 {
                    continue;
                }
                let mut gained = 0;
                let mut clash = false;
                for &i in &self.back[pos] {
                    let ci = self.colours[i];
                    if ci < c {
                        gained += 1;
                    } else if ci == c {
                        clash = true;
                    }
                }
                if clash && self.proper {
                    continue;
                }
                self.remaining[c] -= 1;
                self.colours[pos] = c;
                self.go(pos + 1, asc + gained);
                self.remaining[c] += 1;
            }
        }
    }
    let mut walk = Walk {
        back,
        proper,
        remaining: content.to_vec(),
        colours: vec![0; back.len()],
        counts: Vec::new(),
    };
    walk.go(0, 0);
    walk.counts
}

fn direct(h: &HessFn, proper: bool) -> SymFunc {
    let back = back_neighbours(h);
    let terms = partitions(h.n()).into_iter().map(|l| {
        let counts = ascent_counts(&back, l.parts(), proper);
        let coeffs: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
        (l, QPoly::from_ints(&coeffs))
    });
    SymFunc::from_terms(h.n(), Basis::M, terms).expect("partitions of n")
}

/// `LLT_h(q) = ∑_γ q^{asc(γ)} x^γ`, in the monomial basis.
pub fn llt_direct(h: &HessFn) -> SymFunc {
    direct(h, false)
}

/// `csf_h(q)`: as [`llt_direct`] over proper colourings only.
pub fn csf_direct(h: &HessFn) -> SymFunc {
    direct(h, true)
}

pub fn direct_engine(engine: Engine, h: &HessFn) -> SymFunc {
    match engine {
        Engine::Llt => llt_direct(h),
        Engine::Csf => csf_direct(h),
    }
}

/// `K_n = ∑_{i=1}^n (q-1)^{i-1} ([n-1]_q!/[n-i]_q!) e_i K_{n-i}`, `K_0 = 1`, in the monomial basis.
pub fn k_poly(n: usize) -> SymFunc {
    let mut ks: Vec<SymFunc> = vec![SymFunc::one()];
    let q_minus_one = QPoly::from_ints(&[-1, 1]);
    for m in 1..=n {
        let mut acc = SymFunc::zero(m, Basis::M);
        for i in 1..=m {
            let c = &q_minus_one.pow(i - 1) * &q_falling(m - 1, m - i);
            let term = (&SymFunc::e(i) * &ks[m - i]).scale(&c);
            acc = &acc + &term;
        }
        ks.push(acc);
    }
    ks.pop().expect("nonempty")
}

/// Base case of the recursion for the complete graph on `n` vertices.
pub fn base_case(engine: Engine, n: usize) -> SymFunc {
    match engine {
        Engine::Llt => k_poly(n),
        Engine::Csf => SymFunc::e(n).scale(&q_factorial(n)).convert(Basis::M),
    }
}

/// `∑_{w ∈ S_n} q^{asc_h(w)}`, extracted as `<LLT_h, h_1^n>`.
pub fn poincare(h: &HessFn) -> QPoly {
    let ones = Partition::from_unsorted(vec![1; h.n()]);
    llt_direct(h)
        .hall_pairing(&SymFunc::basis_element(Basis::H, ones))
        .expect("same degree")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    BaseK,
    Multiplicativity,
    ModularLower,
    ModularMiddle,
    /// Several modular relations around `h`, solved jointly.
    ModularSystem,
    Fallback,
}

/// One memo entry: the value of `F(h)` and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemoEntry {
    pub value: SymFunc,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<ModularTriple>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<HessFn>,
    /// The other unknowns of a joint solve.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub system: Vec<HessFn>,
}

/// The tree of rule applications behind a recursive evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub h: HessFn,
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<ModularTriple>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub system: Vec<HessFn>,
    /// Marks a subproblem whose subtree was already given earlier.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub repeated: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Derivation>,
}

impl Derivation {
    pub fn uses_fallback(&self) -> bool {
        self.rule == Rule::Fallback || self.children.iter().any(Derivation::uses_fallback)
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(Derivation::node_count)
            .sum::<usize>()
    }
}

/// Recursive evaluator with a memo table keyed by the values of `h`.
#[derive(Clone, Debug)]
pub struct Recursion {
    engine: Engine,
    memo: HashMap<HessFn, MemoEntry>,
    bases: HashMap<usize, SymFunc>,
}

impl Recursion {
    pub fn new(engine: Engine) -> Self {
        Self {
            engine,
            memo: HashMap::new(),
            bases: HashMap::new(),
        }
    }

    pub fn with_memo(engine: Engine, memo: HashMap<HessFn, MemoEntry>) -> Self {
        Self {
            engine,
            memo,
            bases: HashMap::new(),
        }
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn memo(&self) -> &HashMap<HessFn, MemoEntry> {
        &self.memo
    }

    pub fn into_memo(self) -> HashMap<HessFn, MemoEntry> {
        self.memo
    }

    /// `F(h)` in the monomial basis.
    pub fn eval(&mut self, h: &HessFn) -> Result<SymFunc> {
        if let Some(e) = self.memo.get(h) {
            return Ok(e.value.clone());
        }
        let entry = self.compute(h)?;
        let value = entry.value.clone();
        self.memo.insert(h.clone(), entry);
        Ok(value)
    }

    fn base(&mut self, n: usize) -> SymFunc {
        let engine = self.engine;
        self.bases
            .entry(n)
            .or_insert_with(|| base_case(engine, n))
            .clone()
    }

    fn compute(&mut self, g: &HessFn) -> Result<MemoEntry> {
        if g.is_maximal() {
            return Ok(MemoEntry {
                value: self.base(g.n()),
                rule: Rule::BaseK,
                triple: None,
                children: Vec::new(),
                system: Vec::new(),
            });
        }
        if g.is_decomposable() {
            let blocks = g.decompose();
            let mut value = SymFunc::one();
            for b in &blocks {
                value = &value * &self.eval(b)?;
            }
            return Ok(MemoEntry {
                value,
                rule: Rule::Multiplicativity,
                triple: None,
                children: blocks,
                system: Vec::new(),
            });
        }
        if let Some(t) = find_triples(g, Role::Lower, 1).into_iter().next() {
            let mid = self.eval(&t.h_mid)?;
            let plus = self.eval(&t.h_plus)?;
            let value = (&mid.scale(&QPoly::from_ints(&[1, 1])) - &plus).exact_div(&QPoly::q())?;
            return Ok(MemoEntry {
                value,
                rule: Rule::ModularLower,
                children: vec![t.h_mid.clone(), t.h_plus.clone()],
                triple: Some(t),
                system: Vec::new(),
            });
        }
        if let Some(t) = find_triples(g, Role::Middle, 1)
            .into_iter()
            .find(|t| t.h_minus.is_decomposable())
        {
            let minus = self.eval(&t.h_minus)?;
            let plus = self.eval(&t.h_plus)?;
            let value =
                (&plus + &minus.scale(&QPoly::q())).exact_div(&QPoly::from_ints(&[1, 1]))?;
            return Ok(MemoEntry {
                value,
                rule: Rule::ModularMiddle,
                children: vec![t.h_minus.clone(), t.h_plus.clone()],
                triple: Some(t),
                system: Vec::new(),
            });
        }
        if let Some(entry) = self.solve_locally(g)? {
            return Ok(entry);
        }
        log::warn!("no recursion rule applies to {g}; falling back to direct enumeration");
        Ok(MemoEntry {
            value: direct_engine(self.engine, g),
            rule: Rule::Fallback,
            triple: None,
            children: Vec::new(),
            system: Vec::new(),
        })
    }

    /// Treat `g` and nearby functions of no larger value sum as unknowns, and the
    /// `r = 1` modular relations among them as linear equations over `Q[q]`.
    /// Functions that are maximal, decomposable, or of larger value sum are
    /// evaluated by recursion and enter on the right-hand side. The unknown set
    /// grows outward from `g` until `g` is determined.
    fn solve_locally(&mut self, g: &HessFn) -> Result<Option<MemoEntry>> {
        const MAX_UNKNOWNS: usize = 256;
        let bound = g.value_sum();
        let is_known = |x: &HessFn| x.is_maximal() || x.is_decomposable() || x.value_sum() > bound;
        let mut unknowns: Vec<HessFn> = vec![g.clone()];
        loop {
            let mut equations: Vec<ModularTriple> = Vec::new();
            let mut frontier: Vec<HessFn> = Vec::new();
            for u in &unknowns {
                let around = find_triples(u, Role::Middle, 1)
                    .into_iter()
                    .chain(find_triples(u, Role::Lower, 1));
                for t in around {
                    let nodes = [&t.h_minus, &t.h_mid, &t.h_plus];
                    let mut closed = true;
                    for x in nodes {
                        if !is_known(x) && !unknowns.contains(x) {
                            closed = false;
                            if !frontier.contains(x) {
                                frontier.push(x.clone());
                            }
                        }
                    }
                    if closed && !equations.contains(&t) {
                        equations.push(t);
                    }
                }
            }
            if let Some(entry) = self.try_solve(g, &unknowns, &equations, &is_known)? {
                return Ok(Some(entry));
            }
            if frontier.is_empty() || unknowns.len() + frontier.len() > MAX_UNKNOWNS {
                return Ok(None);
            }
            frontier.sort();
            unknowns.extend(frontier);
        }
    }

    fn try_solve(
        &mut self,
        g: &HessFn,
        unknowns: &[HessFn],
        equations: &[ModularTriple],
        is_known: &dyn Fn(&HessFn) -> bool,
    ) -> Result<Option<MemoEntry>> {
        // Columns: the unknowns other than g, then g, then one per partition.
        let others: Vec<&HessFn> = unknowns.iter().filter(|u| *u != g).collect();
        let k = others.len() + 1;
        let col = |x: &HessFn| -> usize {
            if x == g {
                k - 1
            } else {
                others.iter().position(|o| *o == x).expect("unknown")
            }
        };
        let parts = partitions(g.n());
        let width = k + parts.len();
        let mut knowns: Vec<HessFn> = Vec::new();
        let mut rows: Vec<Vec<QPoly>> = Vec::with_capacity(equations.len());
        for t in equations {
            let mut row = vec![QPoly::zero(); width];
            let terms = [
                (&t.h_mid, QPoly::from_ints(&[1, 1])),
                (&t.h_plus, QPoly::from_ints(&[-1])),
                (&t.h_minus, QPoly::from_ints(&[0, -1])),
            ];
            for (x, c) in terms {
                if is_known(x) {
                    // Move to the right-hand side.
                    let value = self.eval(x)?;
                    for (p, lambda) in parts.iter().enumerate() {
                        row[k + p] -= &(&c * &value.coeff(lambda));
                    }
                    if !knowns.contains(x) {
                        knowns.push(x.clone());
                    }
                } else {
                    row[col(x)] += &c;
                }
            }
            rows.push(row);
        }
        let Some(pivot_row) = eliminate_for_last(&mut rows, k) else {
            return Ok(None);
        };
        let lead = pivot_row[k - 1].clone();
        let terms = parts
            .into_iter()
            .zip(&pivot_row[k..])
            .map(|(l, c)| c.exact_div(&lead).map(|c| (l, c)))
            .collect::<Result<Vec<_>>>()?;
        let value = SymFunc::from_terms(g.n(), Basis::M, terms)?;
        knowns.sort();
        let mut system: Vec<HessFn> = others.into_iter().cloned().collect();
        system.sort();
        Ok(Some(MemoEntry {
            value,
            rule: Rule::ModularSystem,
            triple: None,
            children: knowns,
            system,
        }))
    }

    /// Rebuild the derivation tree of an evaluated `h` from the memo table.
    /// A subproblem already expanded earlier in the tree appears again only as
    /// a marked leaf, which keeps the tree linear in the number of subproblems.
    pub fn derivation(&mut self, h: &HessFn) -> Result<Derivation> {
        self.eval(h)?;
        let mut seen = HashSet::new();
        Ok(self.tree(h, &mut seen))
    }

    fn tree(&self, h: &HessFn, seen: &mut HashSet<HessFn>) -> Derivation {
        let e = &self.memo[h];
        let first = seen.insert(h.clone());
        Derivation {
            h: h.clone(),
            rule: e.rule,
            triple: e.triple.clone(),
            system: e.system.clone(),
            warning: (e.rule == Rule::Fallback)
                .then(|| "no recursion rule applied; value from direct enumeration".to_string()),
            repeated: !first,
            children: if first {
                e.children.iter().map(|c| self.tree(c, seen)).collect()
            } else {
                Vec::new()
            },
        }
    }

    /// Whether any subproblem below an evaluated `h` was settled by the fallback.
    pub fn uses_fallback(&mut self, h: &HessFn) -> Result<bool> {
        self.eval(h)?;
        let mut stack = vec![h.clone()];
        let mut seen = HashSet::new();
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            let e = &self.memo[&x];
            if e.rule == Rule::Fallback {
                return Ok(true);
            }
            stack.extend(e.children.iter().cloned());
        }
        Ok(false)
    }
}

/// Fraction-free row reduction over `Q[q]` on the first `k` columns, with each row
/// divided by the gcd of its entries to keep degrees down. Returns a row whose
/// first `k - 1` entries vanish and whose entry `k - 1` does not, if one exists.
fn eliminate_for_last(rows: &mut [Vec<QPoly>], k: usize) -> Option<Vec<QPoly>> {
    fn normalise(row: &mut [QPoly]) {
        let g = row.iter().fold(QPoly::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return;
        }
        if !g.is_one() {
            for x in row.iter_mut() {
                *x = x.exact_div(&g).expect("gcd divides");
            }
        }
        // Strip the rational content as well, so integer sizes stay bounded.
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in row.iter().flat_map(|x| x.coeffs()) {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let content = Rational::new(num, den);
        if !content.is_one() {
            let inv = Rational::one() / content;
            for x in row.iter_mut() {
                *x = x.scale(&inv);
            }
        }
    }
    let mut next = 0;
    for c in 0..k {
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let pivot = rows[next].clone();
        #[allow(clippy::needless_range_loop)]
        for r in next + 1..rows.len() {
            let a = rows[r][c].clone();
            if a.is_zero() {
                continue;
            }
            let row = &mut rows[r];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &(&*x * &pivot[c]) - &(&a * y);
            }
            normalise(row);
        }
        if c == k - 1 {
            return Some(rows[next].clone());
        }
        next += 1;
    }
    None
}

/// `LLT_h` by the recursion, with its derivation.
pub fn llt_recursive(h: &HessFn) -> Result<(SymFunc, Derivation)> {
    let mut r = Recursion::new(Engine::Llt);
    let d = r.derivation(h)?;
    Ok((r.eval(h)?, d))
}

/// `csf_h` by the recursion, with its derivation.
pub fn csf_recursive(h: &HessFn) -> Result<(SymFunc, Derivation)> {
    let mut r = Recursion::new(Engine::Csf);
    let d = r.derivation(h)?;
    Ok((r.eval(h)?, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::enumerate_hessenberg;
    use crate::qpoly::rat;

    fn hf(v: &[usize]) -> HessFn {
        HessFn::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ascents() {
        assert_eq!(asc(&hf(&[2, 2]), &[1, 2]), 1);
        assert_eq!(asc(&hf(&[2, 2]), &[1, 1]), 0);
        assert_eq!(asc(&hf(&[2, 3, 3]), &[1, 2, 3]), 2);
    }

    #[test]
    fn direct_small() {
        let f = llt_direct(&hf(&[1, 2]));
        assert_eq!(f.coeff(&part(&[2])), QPoly::one());
        assert_eq!(f.coeff(&part(&[1, 1])), QPoly::from_ints(&[2]));
        let f = llt_direct(&hf(&[2, 2]));
        assert_eq!(f.coeff(&part(&[2])), QPoly::one());
        assert_eq!(f.coeff(&part(&[1, 1])), QPoly::from_ints(&[1, 1]));
        assert_eq!(
            llt_direct(&HessFn::maximal(3)).coeff(&part(&[1, 1, 1])),
            q_factorial(3)
        );
        let c = csf_direct(&hf(&[2, 2]));
        assert_eq!(c.terms().len(), 1);
        assert_eq!(c.coeff(&part(&[1, 1])), QPoly::from_ints(&[1, 1]));
        assert_eq!(csf_direct(&hf(&[1, 2])), llt_direct(&hf(&[1, 2])));
    }

    #[test]
    fn k_poly_values() {
        assert!(k_poly(1).same_as(&SymFunc::e(1)));
        let e1 = SymFunc::e(1);
        let k2 = &(&e1 * &e1) + &SymFunc::e(2).scale(&QPoly::from_ints(&[-1, 1]));
        assert!(k_poly(2).same_as(&k2));
        let e1e2 = &e1 * &SymFunc::e(2);
        let k3 = &(&(&(&e1 * &e1) * &e1) + &e1e2.scale(&QPoly::from_ints(&[-2, 1, 1])))
            + &SymFunc::e(3).scale(&QPoly::from_ints(&[1, -1, -1, 1]));
        assert!(k_poly(3).same_as(&k3));
        for n in 1..=5 {
            assert_eq!(k_poly(n), llt_direct(&HessFn::maximal(n)));
        }
    }

    #[test]
    fn recursion_examples() {
        let (v, d) = llt_recursive(&HessFn::maximal(3)).unwrap();
        assert_eq!(d.rule, Rule::BaseK);
        assert_eq!(v, k_poly(3));

        let (v, d) = llt_recursive(&hf(&[2, 3, 3])).unwrap();
        assert_eq!(d.rule, Rule::ModularMiddle);
        let t = d.triple.as_ref().unwrap();
        assert_eq!(
            (t.h_minus.clone(), t.h_plus.clone()),
            (hf(&[1, 3, 3]), hf(&[3, 3, 3]))
        );
        assert_eq!(v, llt_direct(&hf(&[2, 3, 3])));

        // (2,2,3) splits at 2, so multiplicativity takes priority; the lower
        // relation through ((2,2,3),(2,3,3),(3,3,3)) must still hold.
        let (v, d) = llt_recursive(&hf(&[2, 2, 3])).unwrap();
        assert_eq!(d.rule, Rule::Multiplicativity);
        assert_eq!(v, llt_direct(&hf(&[2, 2, 3])));
        let lower = (&llt_direct(&hf(&[2, 3, 3])).scale(&QPoly::from_ints(&[1, 1])) - &k_poly(3))
            .exact_div(&QPoly::q())
            .unwrap();
        assert_eq!(lower, v);

        let (v, d) = llt_recursive(&hf(&[2, 4, 4, 4])).unwrap();
        assert_eq!(d.rule, Rule::ModularLower);
        assert_eq!(v, llt_direct(&hf(&[2, 4, 4, 4])));

        let (v, _) = csf_recursive(&hf(&[2, 2])).unwrap();
        assert!(v.same_as(&SymFunc::e(2).scale(&QPoly::from_ints(&[1, 1]))));
        let (v, d) = csf_recursive(&hf(&[1, 2])).unwrap();
        assert_eq!(d.rule, Rule::Multiplicativity);
        assert!(v.same_as(&(&SymFunc::e(1) * &SymFunc::e(1))));
    }

    #[test]
    fn engines_agree_small() {
        for n in 1..=5 {
            for h in enumerate_hessenberg(n) {
                assert_eq!(llt_recursive(&h).unwrap().0, llt_direct(&h), "{h}");
                assert_eq!(csf_recursive(&h).unwrap().0, csf_direct(&h), "{h}");
            }
        }
    }

    #[test]
    fn poincare_values() {
        assert_eq!(poincare(&hf(&[2, 2])), QPoly::from_ints(&[1, 1]));
        assert_eq!(poincare(&hf(&[2, 3, 3])), QPoly::from_ints(&[1, 4, 1]));
        assert_eq!(poincare(&HessFn::maximal(3)), q_factorial(3));
    }

    #[test]
    fn q_one_specialisation() {
        for h in enumerate_hessenberg(4) {
            let ones = SymFunc::basis_element(Basis::P, part(&[1, 1, 1, 1]));
            assert!(llt_direct(&h).at_q_one().same_as(&ones));
            assert!(llt_direct(&h).all_coeffs_nonnegative_integral());
            assert!(csf_direct(&h).all_coeffs_nonnegative_integral());
            let total: i64 = 24;
            assert_eq!(poincare(&h).eval(&rat(1)), rat(total));
        }
    }
}
