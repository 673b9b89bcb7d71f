//! Bracketed formulae as binary trees over the ordered variables `p1..pn`.
//!
//! A [`Formula`] carries no connective; the same tree is evaluated under any
//! of the four [`Connective`] semantics. Subtrees are reference counted so
//! that the `C_n` bracketings produced by [`enumerate_bracketings`] share
//! their common sub-bracketings.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::census::RowCase;
use crate::{Error, Result};

/// Largest variable count accepted by [`enumerate_bracketings`]
/// (`C_16 = 9_694_845` trees).
pub const MAX_ENUMERATION_VARIABLES: usize = 16;

/// The binary connective joining every pair of subformulae.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    /// `ψ → φ`, false only on `(1, 0)`.
    Imp,
    /// `ψ ⇀ φ ≡ ψ → ¬φ`, false only on `(1, 1)`.
    MImp1,
    /// `ψ ↽ φ ≡ ¬ψ → φ`, false only on `(0, 0)`.
    MImp2,
    /// `ψ ⇌ φ ≡ ¬ψ → ¬φ`, false only on `(0, 1)`.
    MImp3,
}

/// Glyph set used by [`render_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GlyphStyle {
    #[default]
    Ascii,
    Unicode,
}

impl Connective {
    pub const ALL: [Connective; 4] = [
        Connective::Imp,
        Connective::MImp1,
        Connective::MImp2,
        Connective::MImp3,
    ];

    /// The one `(ψ, φ)` combination on which the connective is false.
    pub const fn false_pair(self) -> (bool, bool) {
        match self {
            Connective::Imp => (true, false),
            Connective::MImp1 => (true, true),
            Connective::MImp2 => (false, false),
            Connective::MImp3 => (false, true),
        }
    }

    pub fn apply(self, left: bool, right: bool) -> bool {
        (left, right) != self.false_pair()
    }

    /// Case label of the row `(ψ, φ) = (left, right)`.
    ///
    /// Each connective numbers its three true combinations differently;
    /// `Case4` is always the false one.
    ///
    /// | connective | case 1 | case 2 | case 3 | case 4 |
    /// |------------|--------|--------|--------|--------|
    /// | `Imp`      | (1,1)  | (0,1)  | (0,0)  | (1,0)  |
    /// | `MImp1`    | (0,0)  | (0,1)  | (1,0)  | (1,1)  |
    /// | `MImp2`    | (1,1)  | (1,0)  | (0,1)  | (0,0)  |
    /// | `MImp3`    | (1,1)  | (1,0)  | (0,0)  | (0,1)  |
    pub fn classify(self, left: bool, right: bool) -> RowCase {
        use RowCase::*;
        match (self, left, right) {
            (Connective::Imp, true, true) => Case1,
            (Connective::Imp, false, true) => Case2,
            (Connective::Imp, false, false) => Case3,
            (Connective::Imp, true, false) => Case4,

            (Connective::MImp1, false, false) => Case1,
            (Connective::MImp1, false, true) => Case2,
            (Connective::MImp1, true, false) => Case3,
            (Connective::MImp1, true, true) => Case4,

            (Connective::MImp2, true, true) => Case1,
            (Connective::MImp2, true, false) => Case2,
            (Connective::MImp2, false, true) => Case3,
            (Connective::MImp2, false, false) => Case4,

            (Connective::MImp3, true, true) => Case1,
            (Connective::MImp3, true, false) => Case2,
            (Connective::MImp3, false, false) => Case3,
            (Connective::MImp3, false, true) => Case4,
        }
    }

    pub const fn glyph(self, style: GlyphStyle) -> &'static str {
        match (style, self) {
            (GlyphStyle::Ascii, Connective::Imp) => "->",
            (GlyphStyle::Ascii, Connective::MImp1) => "-.",
            (GlyphStyle::Ascii, Connective::MImp2) => ".-",
            (GlyphStyle::Ascii, Connective::MImp3) => "..",
            (GlyphStyle::Unicode, Connective::Imp) => "→",
            (GlyphStyle::Unicode, Connective::MImp1) => "⇀",
            (GlyphStyle::Unicode, Connective::MImp2) => "↽",
            (GlyphStyle::Unicode, Connective::MImp3) => "⇌",
        }
    }

    /// Command-line spelling.
    pub const fn name(self) -> &'static str {
        match self {
            Connective::Imp => "imp",
            Connective::MImp1 => "mimp1",
            Connective::MImp2 => "mimp2",
            Connective::MImp3 => "mimp3",
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Connective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Connective::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownConnective(s.to_string()))
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub enum Node {
    /// 1-based variable position.
    Leaf(usize),
    Branch(Formula, Formula),
}

/// One bracketing of `p1 ∘ … ∘ pn`; cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Formula(Arc<Node>);

impl Formula {
    pub fn leaf(var: usize) -> Self {
        Formula(Arc::new(Node::Leaf(var)))
    }

    pub fn node(left: Formula, right: Formula) -> Self {
        Formula(Arc::new(Node::Branch(left, right)))
    }

    pub fn as_node(&self) -> &Node {
        &self.0
    }

    pub fn is_leaf(&self) -> bool {
        matches!(*self.0, Node::Leaf(_))
    }

    /// `(ψ, φ)` for a branch, `None` for a variable.
    pub fn split(&self) -> Option<(&Formula, &Formula)> {
        match &*self.0 {
            Node::Leaf(_) => None,
            Node::Branch(l, r) => Some((l, r)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match &*self.0 {
            Node::Leaf(_) => 1,
            Node::Branch(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn internal_count(&self) -> usize {
        match &*self.0 {
            Node::Leaf(_) => 0,
            Node::Branch(l, r) => 1 + l.internal_count() + r.internal_count(),
        }
    }

    /// Variable indices in left-to-right order.
    pub fn variables(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out
    }

    fn collect_variables(&self, out: &mut Vec<usize>) {
        match &*self.0 {
            Node::Leaf(v) => out.push(*v),
            Node::Branch(l, r) => {
                l.collect_variables(out);
                r.collect_variables(out);
            }
        }
    }

    /// True when the leaves read `1, 2, …, n` from left to right.
    pub fn is_well_formed(&self) -> bool {
        self.variables().into_iter().eq(1..=self.leaf_count())
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, Connective::Imp))
    }
}

/// Truth values of `p1..pn`; `bits[i]` is the value of `p(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Valuation(Vec<bool>);

impl Valuation {
    pub fn new(bits: Vec<bool>) -> Self {
        Valuation(bits)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Valuation(bits.iter().map(|&b| b != 0).collect())
    }

    /// Row `row` of an `n`-variable truth table read as a binary number
    /// `p1 p2 … pn`, most significant bit first.
    pub fn from_row(n: usize, row: u64) -> Self {
        Valuation((1..=n).map(|i| (row >> (n - i)) & 1 == 1).collect())
    }

    /// All `2^n` valuations, descending from all-true to all-false.
    pub fn all_descending(n: usize) -> impl Iterator<Item = Valuation> {
        (0..1u64 << n)
            .rev()
            .map(move |row| Valuation::from_row(n, row))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

/// Every bracketing of `n` variables, `C_n` of them.
///
/// Order is by top-level split point: the left part takes `1, 2, …, n-1`
/// variables, and for each split the left bracketings form the outer loop.
pub fn enumerate_bracketings(n: usize) -> Result<Vec<Formula>> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    if n > MAX_ENUMERATION_VARIABLES {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_ENUMERATION_VARIABLES,
        });
    }
    // by_span[len][start - 1] holds the bracketings of p_start..p_(start+len-1)
    let mut by_span: Vec<Vec<Vec<Formula>>> = vec![Vec::new()];
    by_span.push((1..=n).map(|v| vec![Formula::leaf(v)]).collect());
    for len in 2..=n {
        let row = (1..=n + 1 - len)
            .map(|start| {
                let mut out = Vec::new();
                for left_len in 1..len {
                    let lefts = &by_span[left_len][start - 1];
                    let rights = &by_span[len - left_len][start + left_len - 1];
                    for l in lefts {
                        for r in rights {
                            out.push(Formula::node(l.clone(), r.clone()));
                        }
                    }
                }
                out
            })
            .collect();
        by_span.push(row);
    }
    Ok(by_span.swap_remove(n).swap_remove(0))
}

/// Truth value of `f` under `v`.
pub fn evaluate(f: &Formula, c: Connective, v: &Valuation) -> Result<bool> {
    let n = f.leaf_count();
    if v.len() != n {
        return Err(Error::ValuationLength {
            expected: n,
            got: v.len(),
        });
    }
    Ok(eval_unchecked(f, c, v))
}

fn eval_unchecked(f: &Formula, c: Connective, v: &Valuation) -> bool {
    match f.as_node() {
        Node::Leaf(var) => v.get(*var),
        Node::Branch(l, r) => c.apply(eval_unchecked(l, c, v), eval_unchecked(r, c, v)),
    }
}

/// Case of the row `v` of `f`, decided by the values of its two top-level
/// subformulae.
pub fn top_split_case(f: &Formula, c: Connective, v: &Valuation) -> Result<RowCase> {
    let n = f.leaf_count();
    if v.len() != n {
        return Err(Error::ValuationLength {
            expected: n,
            got: v.len(),
        });
    }
    let (l, r) = f.split().ok_or(Error::LeafHasNoSplit)?;
    Ok(c.classify(eval_unchecked(l, c, v), eval_unchecked(r, c, v)))
}

/// Infix rendering with ASCII glyphs, e.g. `p1->(p2->p3)`.
pub fn render(f: &Formula, c: Connective) -> String {
    render_with(f, c, GlyphStyle::Ascii)
}

pub fn render_with(f: &Formula, c: Connective, style: GlyphStyle) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, c.glyph(style), true);
    out
}

fn write_formula(out: &mut String, f: &Formula, glyph: &str, outermost: bool) {
    match f.as_node() {
        Node::Leaf(v) => {
            out.push('p');
            out.push_str(&v.to_string());
        }
        Node::Branch(l, r) => {
            if !outermost {
                out.push('(');
            }
            write_formula(out, l, glyph, false);
            out.push_str(glyph);
            write_formula(out, r, glyph, false);
            if !outermost {
                out.push(')');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(i: usize) -> Formula {
        Formula::leaf(i)
    }

    fn right_nested3() -> Formula {
        Formula::node(leaf(1), Formula::node(leaf(2), leaf(3)))
    }

    fn left_nested3() -> Formula {
        Formula::node(Formula::node(leaf(1), leaf(2)), leaf(3))
    }

    #[test]
    fn enumerates_small_cases() {
        let one = enumerate_bracketings(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0], leaf(1));

        let three: Vec<_> = enumerate_bracketings(3)
            .unwrap()
            .iter()
            .map(|f| render(f, Connective::Imp))
            .collect();
        assert_eq!(three, ["p1->(p2->p3)", "(p1->p2)->p3"]);

        assert_eq!(enumerate_bracketings(4).unwrap().len(), 5);
    }

    #[test]
    fn enumeration_order_for_four_variables() {
        let four: Vec<_> = enumerate_bracketings(4)
            .unwrap()
            .iter()
            .map(|f| render(f, Connective::Imp))
            .collect();
        assert_eq!(
            four,
            [
                "p1->(p2->(p3->p4))",
                "p1->((p2->p3)->p4)",
                "(p1->p2)->(p3->p4)",
                "(p1->(p2->p3))->p4",
                "((p1->p2)->p3)->p4",
            ]
        );
    }

    #[test]
    fn rejects_zero_and_oversized() {
        assert_eq!(enumerate_bracketings(0), Err(Error::NoVariables));
        assert!(matches!(
            enumerate_bracketings(17),
            Err(Error::TooManyVariables { n: 17, max: 16 })
        ));
    }

    #[test]
    fn bracketings_are_distinct_and_well_formed() {
        for n in 1..=9 {
            let all = enumerate_bracketings(n).unwrap();
            let unique: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(unique.len(), all.len());
            for f in &all {
                assert!(f.is_well_formed());
                assert_eq!(f.leaf_count(), n);
                assert_eq!(f.internal_count(), n - 1);
            }
        }
    }

    #[test]
    fn evaluates_table_rows() {
        let v = Valuation::from_bits(&[0, 1, 0]);
        assert!(!evaluate(&left_nested3(), Connective::Imp, &v).unwrap());
        assert!(evaluate(&right_nested3(), Connective::Imp, &v).unwrap());

        let zeros = Valuation::from_bits(&[0, 0, 0]);
        assert!(!evaluate(&left_nested3(), Connective::MImp2, &zeros).unwrap());

        for c in Connective::ALL {
            assert!(evaluate(&leaf(1), c, &Valuation::from_bits(&[1])).unwrap());
        }
    }

    #[test]
    fn evaluate_rejects_wrong_length() {
        let err = evaluate(
            &right_nested3(),
            Connective::Imp,
            &Valuation::from_bits(&[1, 0]),
        );
        assert_eq!(
            err,
            Err(Error::ValuationLength {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn top_split_cases() {
        let v = Valuation::from_bits(&[1, 0, 0]);
        assert_eq!(
            top_split_case(&left_nested3(), Connective::Imp, &v),
            Ok(RowCase::Case3)
        );
        let v = Valuation::from_bits(&[0, 1, 0]);
        assert_eq!(
            top_split_case(&right_nested3(), Connective::Imp, &v),
            Ok(RowCase::Case3)
        );
        let v = Valuation::from_bits(&[0, 0, 0]);
        assert_eq!(
            top_split_case(&right_nested3(), Connective::MImp1, &v),
            Ok(RowCase::Case2)
        );
        assert_eq!(
            top_split_case(&leaf(1), Connective::Imp, &Valuation::from_bits(&[1])),
            Err(Error::LeafHasNoSplit)
        );
    }

    #[test]
    fn case4_is_the_false_combination() {
        for c in Connective::ALL {
            for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
                assert_eq!(c.classify(a, b) == RowCase::Case4, !c.apply(a, b));
            }
        }
    }

    #[test]
    fn renders() {
        assert_eq!(render(&right_nested3(), Connective::Imp), "p1->(p2->p3)");
        assert_eq!(render(&leaf(1), Connective::Imp), "p1");
        assert_eq!(render(&left_nested3(), Connective::MImp2), "(p1.-p2).-p3");
        assert_eq!(
            render_with(&right_nested3(), Connective::MImp1, GlyphStyle::Unicode),
            "p1⇀(p2⇀p3)"
        );
    }

    #[test]
    fn valuation_rows_are_msb_first() {
        assert_eq!(
            Valuation::from_row(3, 0b100),
            Valuation::from_bits(&[1, 0, 0])
        );
        let rows: Vec<_> = Valuation::all_descending(2).collect();
        assert_eq!(rows[0], Valuation::from_bits(&[1, 1]));
        assert_eq!(rows[3], Valuation::from_bits(&[0, 0]));
    }

    #[test]
    fn connective_names_round_trip() {
        for c in Connective::ALL {
            assert_eq!(c.name().parse::<Connective>(), Ok(c));
        }
        assert!("nand".parse::<Connective>().is_err());
    }
}
