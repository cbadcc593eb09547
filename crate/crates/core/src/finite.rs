//! Finite semirings given by addition and multiplication tables.
//!
//! Elements are indices into the carrier `0..order`. Files and enumerated
//! instances always place the additive identity at index 0 and the
//! multiplicative identity at index 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`FiniteSemiring::enumerate_ideals`] unless a
/// caller passes its own cap.
pub const DEFAULT_IDEAL_ORDER_CAP: usize = 6;

/// Tables with more elements than this are rejected when building a
/// descriptor, since capability flags need a full ideal scan.
pub const MAX_TABLE_ORDER: usize = 16;

const MAX_ENUMERATION_ORDER: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    names: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    AddCommutative,
    AddAssociative,
    MulCommutative,
    MulAssociative,
    AddIdentity,
    MulIdentity,
    Distributive,
    AbsorbingZero,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::AddCommutative,
        Axiom::AddAssociative,
        Axiom::MulCommutative,
        Axiom::MulAssociative,
        Axiom::AddIdentity,
        Axiom::MulIdentity,
        Axiom::Distributive,
        Axiom::AbsorbingZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::AddCommutative => "additive-commutativity",
            Axiom::AddAssociative => "additive-associativity",
            Axiom::MulCommutative => "multiplicative-commutativity",
            Axiom::MulAssociative => "multiplicative-associativity",
            Axiom::AddIdentity => "additive-identity",
            Axiom::MulIdentity => "multiplicative-identity",
            Axiom::Distributive => "distributivity",
            Axiom::AbsorbingZero => "absorbing-zero",
        }
    }

    /// Number of element indices in a counterexample for this axiom.
    pub fn arity(self) -> usize {
        match self {
            Axiom::AddIdentity | Axiom::MulIdentity | Axiom::AbsorbingZero => 1,
            Axiom::AddCommutative | Axiom::MulCommutative => 2,
            Axiom::AddAssociative | Axiom::MulAssociative | Axiom::Distributive => 3,
        }
    }

    /// Whether the axiom instance at `args` holds in `t`.
    pub fn holds_at(self, t: &FiniteSemiring, args: &[usize]) -> bool {
        let (z, o) = (t.zero_index(), t.one_index());
        match (self, args) {
            (Axiom::AddCommutative, &[a, b]) => t.add(a, b) == t.add(b, a),
            (Axiom::AddAssociative, &[a, b, c]) => t.add(t.add(a, b), c) == t.add(a, t.add(b, c)),
            (Axiom::MulCommutative, &[a, b]) => t.mul(a, b) == t.mul(b, a),
            (Axiom::MulAssociative, &[a, b, c]) => t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c)),
            (Axiom::AddIdentity, &[a]) => t.add(a, z) == a && t.add(z, a) == a,
            (Axiom::MulIdentity, &[a]) => t.mul(a, o) == a && t.mul(o, a) == a,
            (Axiom::Distributive, &[a, b, c]) => {
                t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
            }
            (Axiom::AbsorbingZero, &[s]) => t.mul(s, z) == z && t.mul(z, s) == z,
            _ => panic!("{} takes {} arguments", self.name(), self.arity()),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    /// First failing tuple in lexicographic order, if any.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.counterexample.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| c.counterexample.is_some())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Maximum number of candidate table pairs to examine.
    pub nodes: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { nodes: 10_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Canonical representatives in ascending canonical order.
    pub semirings: Vec<FiniteSemiring>,
    /// False when the budget ran out before the search space was covered.
    pub complete: bool,
}

impl FiniteSemiring {
    /// Builds a table semiring from element names and row-major tables.
    /// Only the shape is validated here; see [`FiniteSemiring::check_axioms`].
    pub fn new(names: Vec<String>, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n < 2 {
            return Err(Error::Shape {
                line: 0,
                message: format!("order must be at least 2, got {n}"),
            });
        }
        let flatten = |table: Vec<Vec<usize>>, what: &str| -> Result<Vec<usize>> {
            if table.len() != n || table.iter().any(|row| row.len() != n) {
                return Err(Error::Shape {
                    line: 0,
                    message: format!("{what} table is not {n}x{n}"),
                });
            }
            let flat: Vec<usize> = table.into_iter().flatten().collect();
            if let Some(bad) = flat.iter().find(|&&v| v >= n) {
                return Err(Error::Shape {
                    line: 0,
                    message: format!("{what} table entry {bad} out of range"),
                });
            }
            Ok(flat)
        };
        let add = flatten(add, "add")?;
        let mul = flatten(mul, "mul")?;
        Ok(FiniteSemiring { names, add, mul })
    }

    fn from_flat(names: Vec<String>, add: Vec<usize>, mul: Vec<usize>) -> Self {
        debug_assert_eq!(add.len(), names.len() * names.len());
        debug_assert_eq!(mul.len(), names.len() * names.len());
        FiniteSemiring { names, add, mul }
    }

    fn numbered(order: usize, add: Vec<usize>, mul: Vec<usize>) -> Self {
        Self::from_flat((0..order).map(|i| i.to_string()).collect(), add, mul)
    }

    /// The two-element Boolean semiring ({0, 1}, OR, AND).
    pub fn boolean() -> Self {
        Self::numbered(2, vec![0, 1, 1, 1], vec![0, 0, 0, 1])
    }

    /// The ring of integers modulo `n`.
    pub fn integers_mod(n: usize) -> Self {
        let add = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let mul = (0..n * n).map(|k| (k / n) * (k % n) % n).collect();
        Self::numbered(n, add, mul)
    }

    /// {0, ..., cap} with addition and multiplication saturating at `cap`.
    pub fn saturating(cap: usize) -> Self {
        let n = cap + 1;
        let add = (0..n * n).map(|k| (k / n + k % n).min(cap)).collect();
        let mul = (0..n * n).map(|k| (k / n * (k % n)).min(cap)).collect();
        Self::numbered(n, add, mul)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn one_index(&self) -> usize {
        1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    /// Returns a copy with one table cell overwritten.
    pub fn with_cell(&self, table: TableKind, row: usize, col: usize, value: usize) -> Self {
        let mut out = self.clone();
        let n = self.order();
        match table {
            TableKind::Add => out.add[row * n + col] = value,
            TableKind::Mul => out.mul[row * n + col] = value,
        }
        out
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let checks = Axiom::ALL
            .iter()
            .map(|&axiom| AxiomCheck {
                axiom,
                counterexample: tuples(self.order(), axiom.arity())
                    .find(|args| !axiom.holds_at(self, args)),
            })
            .collect();
        AxiomReport { checks }
    }

    pub fn is_ideal(&self, members: &[bool]) -> bool {
        let n = self.order();
        if !members[self.zero_index()] {
            return false;
        }
        for a in (0..n).filter(|&a| members[a]) {
            for b in (0..n).filter(|&b| members[b]) {
                if !members[self.add(a, b)] {
                    return false;
                }
            }
            if (0..n).any(|s| !members[self.mul(s, a)]) {
                return false;
            }
        }
        true
    }

    /// Every ideal, by scanning all subsets. Sorted by size, then elements.
    pub fn enumerate_ideals(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let n = self.order();
        if n > cap {
            return Err(Error::OrderTooLarge { order: n, max: cap });
        }
        Ok(self.ideals_unchecked())
    }

    pub(crate) fn ideals_unchecked(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut out: Vec<Vec<usize>> = (0u32..1 << n)
            .filter_map(|mask| {
                let members: Vec<bool> = (0..n).map(|i| mask & (1 << i) != 0).collect();
                self.is_ideal(&members)
                    .then(|| (0..n).filter(|&i| members[i]).collect())
            })
            .collect();
        out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Applies a carrier permutation to both tables (element `i` becomes
    /// `perm[i]`). Names are kept positionally.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                add[perm[i] * n + perm[j]] = perm[self.add(i, j)];
                mul[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        Self::from_flat(self.names.clone(), add, mul)
    }

    /// Lexicographically minimal (add, mul) table pair over all
    /// permutations fixing 0 and 1.
    pub fn canonical_form(&self) -> Self {
        let n = self.order();
        let mut best: Option<FiniteSemiring> = None;
        for tail in permutations(&(2..n).collect::<Vec<_>>()) {
            let mut perm = vec![0, 1];
            perm.extend(tail);
            let candidate = self.relabel(&perm);
            if best.as_ref().is_none_or(|b| candidate.table_key() < b.table_key()) {
                best = Some(candidate);
            }
        }
        best.expect("at least the identity permutation")
    }

    pub fn is_isomorphic(&self, other: &FiniteSemiring) -> bool {
        self.order() == other.order()
            && self.canonical_form().table_key() == other.canonical_form().table_key()
    }

    fn table_key(&self) -> (&[usize], &[usize]) {
        (&self.add, &self.mul)
    }

    /// Parses the line-oriented table format. Axioms are not checked.
    pub fn parse(text: &str) -> Result<Self> {
        parse_table_file(text)
    }

    /// Serializes to the table file format accepted by [`FiniteSemiring::parse`].
    pub fn to_file_string(&self) -> String {
        let n = self.order();
        let mut out = format!("order {n}\nelements {}\n", self.names.join(" "));
        for (label, table) in [("add", &self.add), ("mul", &self.mul)] {
            out.push_str(label);
            out.push('\n');
            for row in table.chunks(n) {
                let names: Vec<&str> = row.iter().map(|&v| self.names[v].as_str()).collect();
                out.push_str(&names.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Add,
    Mul,
}

/// All `arity`-tuples over `0..n` in lexicographic order.
pub(crate) fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(arity as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = k % n;
            k /= n;
        }
        t
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every commutative semiring on `{0, ..., order-1}` with 0 and 1 as the
/// identities, one representative per isomorphism class.
pub fn enumerate_semirings(order: usize, budget: EnumerationBudget) -> Result<Enumeration> {
    if order < 2 {
        return Err(Error::OrderTooSmall { order, min: 2 });
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let n = order;
    let mut spent = 0u64;
    let mut exhausted = false;

    let add_cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mul_cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();

    let mut add_base = vec![0; n * n];
    for i in 0..n {
        add_base[i] = i;
        add_base[i * n] = i;
    }
    let mut mul_base = vec![0; n * n];
    for i in 0..n {
        mul_base[n + i] = i;
        mul_base[i * n + 1] = i;
    }

    let fill = |base: &[usize], cells: &[(usize, usize)], code: usize| {
        let mut t = base.to_vec();
        let mut k = code;
        for &(i, j) in cells.iter().rev() {
            let v = k % n;
            k /= n;
            t[i * n + j] = v;
            t[j * n + i] = v;
        }
        t
    };
    let associative = |t: &[usize]| {
        tuples(n, 3).all(|a| t[t[a[0] * n + a[1]] * n + a[2]] == t[a[0] * n + t[a[1] * n + a[2]]])
    };

    let adds: Vec<Vec<usize>> = (0..n.pow(add_cells.len() as u32))
        .map(|code| fill(&add_base, &add_cells, code))
        .filter(|t| associative(t))
        .collect();
    let muls: Vec<Vec<usize>> = (0..n.pow(mul_cells.len() as u32))
        .map(|code| fill(&mul_base, &mul_cells, code))
        .filter(|t| associative(t))
        .collect();

    let mut found: BTreeMap<(Vec<usize>, Vec<usize>), FiniteSemiring> = BTreeMap::new();
    'outer: for add in &adds {
        for mul in &muls {
            if spent >= budget.nodes {
                exhausted = true;
                break 'outer;
            }
            spent += 1;
            let distributive = tuples(n, 3).all(|a| {
                mul[a[0] * n + add[a[1] * n + a[2]]]
                    == add[mul[a[0] * n + a[1]] * n + mul[a[0] * n + a[2]]]
            });
            if !distributive {
                continue;
            }
            let t = FiniteSemiring::numbered(n, add.clone(), mul.clone());
            debug_assert!(t.check_axioms().passed());
            let canon = t.canonical_form();
            found
                .entry((canon.add.clone(), canon.mul.clone()))
                .or_insert(canon);
        }
    }

    Ok(Enumeration {
        semirings: found.into_values().collect(),
        complete: !exhausted,
    })
}

struct Lines<'a> {
    rows: Vec<(usize, Vec<(usize, &'a str)>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let content = line.split('#').next().unwrap_or("");
                let words = words_with_columns(content);
                (!words.is_empty()).then_some((i + 1, words))
            })
            .collect();
        Lines { rows, pos: 0 }
    }

    fn next(&mut self) -> Option<&(usize, Vec<(usize, &'a str)>)> {
        let row = self.rows.get(self.pos);
        if row.is_some() {
            self.pos += 1;
        }
        row
    }

    fn peek(&self) -> Option<&(usize, Vec<(usize, &'a str)>)> {
        self.rows.get(self.pos)
    }

    fn last_line(&self) -> usize {
        self.rows.last().map_or(0, |r| r.0)
    }
}

fn words_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn valid_element_name(name: &str) -> bool {
    name != "x" && !name.contains(['+', '*', '^', ',', '(', ')'])
}

fn parse_table_file(text: &str) -> Result<FiniteSemiring> {
    let mut lines = Lines::new(text);

    let (line, words) = lines.next().ok_or(Error::MissingSection("order"))?.clone();
    if words[0].1 != "order" {
        return Err(Error::Syntax {
            line,
            column: words[0].0,
            message: format!("expected `order`, found `{}`", words[0].1),
        });
    }
    let (col, literal) = *words.get(1).ok_or(Error::Syntax {
        line,
        column: words[0].0 + words[0].1.len(),
        message: "missing order value".into(),
    })?;
    if words.len() > 2 {
        return Err(Error::Syntax {
            line,
            column: words[2].0,
            message: "unexpected token after order".into(),
        });
    }
    let n: usize = literal.parse().map_err(|_| Error::Syntax {
        line,
        column: col,
        message: format!("`{literal}` is not a natural number"),
    })?;
    if n < 2 {
        return Err(Error::Shape {
            line,
            message: format!("order must be at least 2, got {n}"),
        });
    }

    let (line, words) = lines.next().ok_or(Error::MissingSection("elements"))?.clone();
    if words[0].1 != "elements" {
        return Err(Error::Syntax {
            line,
            column: words[0].0,
            message: format!("expected `elements`, found `{}`", words[0].1),
        });
    }
    let names: Vec<String> = words[1..].iter().map(|w| w.1.to_string()).collect();
    if names.len() != n {
        return Err(Error::Shape {
            line,
            message: format!("expected {n} element names, found {}", names.len()),
        });
    }
    for (i, (col, name)) in words[1..].iter().enumerate() {
        if !valid_element_name(name) {
            return Err(Error::Syntax {
                line,
                column: *col,
                message: format!("`{name}` cannot be used as an element name"),
            });
        }
        if names[..i].iter().any(|prev| prev == name) {
            return Err(Error::Syntax {
                line,
                column: *col,
                message: format!("duplicate element name `{name}`"),
            });
        }
    }

    let mut read_table = |section: &'static str| -> Result<Vec<Vec<usize>>> {
        let (line, words) = lines.next().ok_or(Error::MissingSection(section))?.clone();
        if words[0].1 != section {
            return Err(Error::Syntax {
                line,
                column: words[0].0,
                message: format!("expected `{section}`, found `{}`", words[0].1),
            });
        }
        if words.len() > 1 {
            return Err(Error::Syntax {
                line,
                column: words[1].0,
                message: format!("unexpected token after `{section}`"),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let at_keyword = matches!(lines.peek(), Some((_, w)) if w[0].1 == "mul" || w[0].1 == "add");
            if at_keyword || lines.peek().is_none() {
                let line = lines.peek().map_or(lines.last_line(), |r| r.0);
                return Err(Error::Shape {
                    line,
                    message: format!("{section} table has {r} rows, expected {n}"),
                });
            }
            let (line, words) = lines.next().expect("peeked").clone();
            if words.len() != n {
                return Err(Error::Shape {
                    line,
                    message: format!("{section} row has {} entries, expected {n}", words.len()),
                });
            }
            let row = words
                .iter()
                .map(|(_, w)| {
                    names.iter().position(|name| name == w).ok_or_else(|| Error::Shape {
                        line,
                        message: format!("`{w}` is not a declared element"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(rows)
    };
    let add = read_table("add")?;
    let mul = read_table("mul")?;

    if let Some((line, words)) = lines.next() {
        return Err(Error::Syntax {
            line: *line,
            column: words[0].0,
            message: "unexpected content after mul table".into(),
        });
    }
    FiniteSemiring::new(names, add, mul)
}

#[cfg(test)]
mod tests {
    use super::*;

    const N3: &str = "\
# saturating counting semiring
order 3
elements 0 1 2
add
0 1 2
1 2 2
2 2 2
mul
0 0 0
0 1 2
0 2 2
";

    #[test]
    fn parses_saturating_file() {
        let t = FiniteSemiring::parse(N3).unwrap();
        assert_eq!(t, FiniteSemiring::saturating(2));
        assert!(t.check_axioms().passed());
    }

    #[test]
    fn bool_file_indices() {
        let t = FiniteSemiring::parse("order 2\nelements f t\nadd\nf t\nt t\nmul\nf f\nf t\n").unwrap();
        assert_eq!(t.zero_index(), 0);
        assert_eq!(t.one_index(), 1);
        assert_eq!(t.index_of("t"), Some(1));
    }

    #[test]
    fn long_row_is_shape_error() {
        let text = N3.replace("1 2 2\n2 2 2\nmul", "1 2 2 2\n2 2 2\nmul");
        assert!(matches!(FiniteSemiring::parse(&text), Err(Error::Shape { line: 6, .. })));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(FiniteSemiring::parse("# empty\n"), Err(Error::MissingSection("order")));
        assert!(matches!(
            FiniteSemiring::parse("order three"),
            Err(Error::Syntax { line: 1, column: 7, .. })
        ));
        let no_mul = N3.split("mul").next().unwrap();
        assert_eq!(FiniteSemiring::parse(no_mul), Err(Error::MissingSection("mul")));
        let unknown = N3.replace("0 2 2\n", "0 2 7\n");
        assert!(matches!(FiniteSemiring::parse(&unknown), Err(Error::Shape { .. })));
        assert!(matches!(
            FiniteSemiring::parse("order 2\nelements 0 x\n"),
            Err(Error::Syntax { line: 2, column: 12, .. })
        ));
        let short = N3.replace("1 2 2\n2 2 2\nmul", "1 2 2\nmul");
        assert!(matches!(FiniteSemiring::parse(&short), Err(Error::Shape { .. })));
    }

    #[test]
    fn axiom_mutations_from_examples() {
        let b = FiniteSemiring::boolean();
        let r = b.with_cell(TableKind::Mul, 1, 0, 1).check_axioms();
        let absorbing = r.checks.iter().find(|c| c.axiom == Axiom::AbsorbingZero).unwrap();
        assert_eq!(absorbing.counterexample, Some(vec![1]));

        let r = b.with_cell(TableKind::Add, 0, 1, 0).check_axioms();
        let identity = r.checks.iter().find(|c| c.axiom == Axiom::AddIdentity).unwrap();
        assert_eq!(identity.counterexample, Some(vec![1]));
    }

    #[test]
    fn ideals_of_small_tables() {
        assert_eq!(
            FiniteSemiring::boolean().enumerate_ideals(6).unwrap(),
            vec![vec![0], vec![0, 1]]
        );
        assert_eq!(
            FiniteSemiring::saturating(2).enumerate_ideals(6).unwrap(),
            vec![vec![0], vec![0, 2], vec![0, 1, 2]]
        );
        assert_eq!(
            FiniteSemiring::integers_mod(3).enumerate_ideals(6).unwrap(),
            vec![vec![0], vec![0, 1, 2]]
        );
        assert!(matches!(
            FiniteSemiring::integers_mod(7).enumerate_ideals(6),
            Err(Error::OrderTooLarge { order: 7, max: 6 })
        ));
    }

    #[test]
    fn order_two_catalog() {
        let e = enumerate_semirings(2, EnumerationBudget::default()).unwrap();
        assert!(e.complete);
        assert_eq!(e.semirings.len(), 2);
        assert!(e.semirings.iter().any(|t| t.is_isomorphic(&FiniteSemiring::boolean())));
        assert!(e.semirings.iter().any(|t| t.is_isomorphic(&FiniteSemiring::integers_mod(2))));
    }

    #[test]
    fn enumeration_range() {
        assert!(matches!(
            enumerate_semirings(5, EnumerationBudget::default()),
            Err(Error::OrderTooLarge { order: 5, .. })
        ));
        let e = enumerate_semirings(3, EnumerationBudget { nodes: 0 }).unwrap();
        assert!(!e.complete);
        assert!(e.semirings.is_empty());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let z4 = FiniteSemiring::integers_mod(4);
        let swapped = z4.relabel(&[0, 1, 3, 2]);
        assert_ne!(z4, swapped);
        assert!(z4.is_isomorphic(&swapped));
        assert!(!z4.is_isomorphic(&FiniteSemiring::saturating(3)));
    }
}
