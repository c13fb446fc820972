//! Weyl group elements as integer matrices on the root lattice.
//!
//! Column `j` of an element's matrix holds `w(alpha_j)` over the simple roots.
//! Equality and hashing use the matrix only; reduced words are derived on
//! demand and cached.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Family, Root, RootSystem};

/// Default element cap for lower Bruhat interval enumeration.
pub const DEFAULT_INTERVAL_CAP: usize = 200_000;

/// Inversion set as a bitset over the positive-root order of its root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct InversionSet(u128);

impl InversionSet {
    pub fn from_bits(bits: u128) -> Self {
        InversionSet(bits)
    }

    pub fn full(rs: &RootSystem) -> Self {
        let n = rs.num_positive();
        InversionSet(if n == 128 { u128::MAX } else { (1u128 << n) - 1 })
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..128).filter(move |&p| self.contains(p))
    }

    pub fn roots<'a>(&'a self, rs: &'a RootSystem) -> impl Iterator<Item = &'a Root> + 'a {
        self.indices().map(move |p| &rs.positive_roots()[p])
    }

    /// Closed under sums inside the set, and the complement in the positive
    /// roots is closed likewise.
    pub fn is_biconvex(&self, rs: &RootSystem) -> bool {
        let full = InversionSet::full(rs);
        let complement = InversionSet(full.0 & !self.0);
        let closed = |set: &InversionSet| {
            let members: Vec<usize> = set.indices().collect();
            members.iter().all(|&a| {
                members.iter().all(|&b| {
                    let sum: Vec<i32> = rs.positive_roots()[a]
                        .coords()
                        .iter()
                        .zip(rs.positive_roots()[b].coords())
                        .map(|(x, y)| x + y)
                        .collect();
                    match rs.lookup(&sum) {
                        Some(ix) => set.contains(ix.index),
                        None => true,
                    }
                })
            })
        };
        closed(self) && closed(&complement)
    }
}

/// A finite sequence of nonzero integers with distinct absolute values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedSequence(Vec<i32>);

impl SignedSequence {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &e in &entries {
            if e == 0 {
                return Err(Error::ZeroEntry);
            }
            if !seen.insert(e.abs()) {
                return Err(Error::RepeatedValue(e.abs()));
            }
        }
        Ok(SignedSequence(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Human rendering with a combining overline in place of the minus sign.
    pub fn to_bar_string(&self) -> String {
        self.0
            .iter()
            .map(|&e| if e < 0 { format!("{}\u{0305}", -e) } else { e.to_string() })
            .collect::<Vec<_>>()
            .join(if self.0.iter().any(|e| e.abs() > 9) { "," } else { "" })
    }
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for SignedSequence {
    type Err = Error;

    /// Accepts `(-2,-3,1)`, `-2 -3 1` and similar.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        SignedSequence::new(entries)
    }
}

/// Parses a word such as `3 2 3 4`, `3,2,3,4` or, below rank 10, `3234`.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut word = Vec::new();
    for token in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        if !token.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad generator `{token}`")));
        }
        if rank < 10 && token.len() > 1 {
            word.extend(token.chars().map(|c| c.to_digit(10).unwrap() as usize));
        } else {
            word.push(token.parse::<usize>().map_err(|e| Error::Parse(e.to_string()))?);
        }
    }
    for &letter in &word {
        if letter == 0 || letter > rank {
            return Err(Error::LetterOutOfRange { letter, rank });
        }
    }
    Ok(word)
}

pub struct WeylElement {
    rs: Arc<RootSystem>,
    /// Column-major: entry `j * r + i` is the `alpha_i` coefficient of `w(alpha_j)`.
    matrix: Box<[i32]>,
    word: OnceLock<Vec<usize>>,
}

impl Clone for WeylElement {
    fn clone(&self) -> Self {
        WeylElement { rs: self.rs.clone(), matrix: self.matrix.clone(), word: self.word.clone() }
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs.cartan_type() == other.rs.cartan_type() && self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.cartan_type().hash(state);
        self.matrix.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({}, {:?})", self.rs.cartan_type(), self.reduced_word())
    }
}

impl fmt::Display for WeylElement {
    /// Canonical reduced word, `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.reduced_word();
        if word.is_empty() {
            return write!(f, "e");
        }
        let sep = if self.rank() < 10 { "" } else { " " };
        let parts: Vec<String> = word.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl WeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let r = rs.rank();
        let mut matrix = vec![0; r * r].into_boxed_slice();
        for i in 0..r {
            matrix[i * r + i] = 1;
        }
        let word = OnceLock::new();
        let _ = word.set(Vec::new());
        WeylElement { rs: rs.clone(), matrix, word }
    }

    pub fn simple(rs: &Arc<RootSystem>, i: usize) -> Result<Self> {
        Self::from_word(rs, &[i])
    }

    /// Product `s_{i_1} ... s_{i_k}`; the word need not be reduced.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let rank = rs.rank();
        if let Some(&letter) = word.iter().find(|&&l| l == 0 || l > rank) {
            return Err(Error::LetterOutOfRange { letter, rank });
        }
        let mut w = Self::identity(rs);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn cartan_type(&self) -> CartanType {
        self.rs.cartan_type()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn matrix(&self) -> Vec<Vec<i32>> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.matrix[j * r + i]).collect()).collect()
    }

    fn column(&self, j: usize) -> &[i32] {
        let r = self.rank();
        &self.matrix[j * r..(j + 1) * r]
    }

    fn with_matrix(&self, matrix: Box<[i32]>) -> Self {
        WeylElement { rs: self.rs.clone(), matrix, word: OnceLock::new() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.rs)
    }

    /// `w(beta)` for `beta` over the simple roots.
    pub fn apply(&self, beta: &[i32]) -> Vec<i32> {
        let r = self.rank();
        let mut out = vec![0; r];
        for (j, &b) in beta.iter().enumerate() {
            if b != 0 {
                for (o, c) in out.iter_mut().zip(self.column(j)) {
                    *o += b * c;
                }
            }
        }
        out
    }

    /// `w * s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let r = self.rank();
        let a = self.rs.cartan_matrix();
        let col_i: Vec<i32> = self.column(i - 1).to_vec();
        let mut m = self.matrix.clone();
        for j in 0..r {
            let c = a[i - 1][j];
            if c != 0 {
                for k in 0..r {
                    m[j * r + k] -= c * col_i[k];
                }
            }
        }
        self.with_matrix(m)
    }

    /// `s_i * w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let r = self.rank();
        let row = &self.rs.cartan_matrix()[i - 1];
        let mut m = self.matrix.clone();
        for j in 0..r {
            let pair: i32 = (0..r).map(|k| m[j * r + k] * row[k]).sum();
            m[j * r + i - 1] -= pair;
        }
        self.with_matrix(m)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.cartan_type() != other.cartan_type() {
            return Err(Error::MismatchedTypes(self.cartan_type(), other.cartan_type()));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let r = self.rank();
        let mut m = vec![0; r * r].into_boxed_slice();
        for j in 0..r {
            let col = self.apply(other.column(j));
            m[j * r..(j + 1) * r].copy_from_slice(&col);
        }
        Ok(self.with_matrix(m))
    }

    pub fn inverse(&self) -> Self {
        let mut word = self.reduced_word().to_vec();
        word.reverse();
        let mut w = Self::identity(&self.rs);
        for &i in &word {
            w = w.mul_simple_right(i);
        }
        let _ = w.word.set(lex_min_word(&w));
        w
    }

    /// `{beta > 0 : w^{-1} beta < 0}`, obtained as `-w(gamma)` over positive
    /// `gamma` with `w(gamma) < 0`.
    pub fn inversion_set(&self) -> InversionSet {
        let mut set = InversionSet::default();
        for gamma in self.rs.positive_roots() {
            let img = self.apply(gamma.coords());
            if img.iter().any(|&c| c < 0) {
                let ix = self.rs.lookup(&img).expect("Weyl group permutes roots");
                set.insert(ix.index);
            }
        }
        set
    }

    pub fn length(&self) -> usize {
        if let Some(w) = self.word.get() {
            return w.len();
        }
        self.rs.positive_roots().iter().filter(|g| self.apply(g.coords()).iter().any(|&c| c < 0)).count()
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        self.column(i - 1).iter().any(|&c| c < 0)
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        // s_i w < w iff w^{-1} alpha_i < 0 iff alpha_i lies in the inversion set
        let alpha = Root::simple(self.rank(), i);
        self.rs.positive_roots().iter().any(|g| {
            let img = self.apply(g.coords());
            img.iter().zip(alpha.coords()).all(|(x, y)| *x == -y)
        })
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> &[usize] {
        self.word.get_or_init(|| lex_min_word(self))
    }

    fn inverse_by_right_peeling(&self) -> Self {
        let mut cur = self.with_matrix(self.matrix.clone());
        let mut letters = Vec::new();
        while let Some(i) = (1..=self.rank()).find(|&i| cur.has_right_descent(i)) {
            cur = cur.mul_simple_right(i);
            letters.push(i);
        }
        // w = s_{letters[k-1]} ... s_{letters[0]}, so w^{-1} is the product in order
        let mut inv = Self::identity(&self.rs);
        for &i in &letters {
            inv = inv.mul_simple_right(i);
        }
        inv
    }

    pub fn one_line(&self) -> Result<SignedSequence> {
        let ct = self.cartan_type();
        if !ct.is_classical() {
            return Err(Error::NotClassical(ct));
        }
        let n = ct.rank();
        let size = if ct.family() == Family::A { n + 1 } else { n };
        let mut seq: Vec<i32> = (1..=size as i32).collect();
        for &i in self.reduced_word() {
            apply_one_line_generator(ct, &mut seq, i);
        }
        Ok(SignedSequence(seq))
    }

    pub fn from_one_line(rs: &Arc<RootSystem>, seq: &SignedSequence) -> Result<Self> {
        let ct = rs.cartan_type();
        if !ct.is_classical() {
            return Err(Error::NotClassical(ct));
        }
        validate_one_line(ct, seq.entries())?;
        let mut cur = seq.entries().to_vec();
        let mut letters = Vec::new();
        loop {
            let len = one_line_length(ct, &cur);
            if len == 0 {
                break;
            }
            let next = (1..=ct.rank()).find_map(|i| {
                let mut cand = cur.clone();
                apply_one_line_generator(ct, &mut cand, i);
                (one_line_length(ct, &cand) < len).then_some((i, cand))
            });
            let (i, cand) = next.expect("a non-identity element has a descent");
            letters.push(i);
            cur = cand;
        }
        letters.reverse();
        Self::from_word(rs, &letters)
    }

    pub fn longest(rs: &Arc<RootSystem>) -> Self {
        let word = word_from_inversions(rs, InversionSet::full(rs)).expect("all positive roots form an inversion set");
        let w = Self::from_word(rs, &word).expect("letters in range");
        let _ = w.word.set(lex_min_word(&w));
        w
    }

    /// Bruhat order by the lifting property: with `s` a right descent of `w`,
    /// `v <= w` iff `vs <= ws` when `s` is a descent of `v`, else iff `v <= ws`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_same(other)?;
        let mut v = self.clone();
        let mut w = other.clone();
        loop {
            if v.length() > w.length() {
                return Ok(false);
            }
            let Some(s) = (1..=w.rank()).find(|&i| w.has_right_descent(i)) else {
                return Ok(v.is_identity());
            };
            if v.has_right_descent(s) {
                v = v.mul_simple_right(s);
            }
            w = w.mul_simple_right(s);
        }
    }

    /// `{v : v <= w}` by the subword property, memoized per element.
    pub fn lower_interval(&self, cap: usize) -> Result<Arc<Vec<WeylElement>>> {
        type Memo = Mutex<HashMap<WeylElement, Arc<Vec<WeylElement>>>>;
        static MEMO: LazyLock<Memo> = LazyLock::new(|| Mutex::new(HashMap::new()));
        if let Some(hit) = MEMO.lock().expect("interval memo poisoned").get(self) {
            if hit.len() <= cap {
                return Ok(hit.clone());
            }
            return Err(Error::OracleBudgetExceeded { cap });
        }
        let mut set: HashSet<WeylElement> = HashSet::from([Self::identity(&self.rs)]);
        for &s in self.reduced_word() {
            let grown: Vec<WeylElement> = set.iter().map(|x| x.mul_simple_right(s)).collect();
            set.extend(grown);
            if set.len() > cap {
                return Err(Error::OracleBudgetExceeded { cap });
            }
        }
        let mut elems: Vec<WeylElement> = set.into_iter().collect();
        elems.sort_by_cached_key(|x| (x.length(), x.reduced_word().to_vec()));
        let elems = Arc::new(elems);
        MEMO.lock().expect("interval memo poisoned").insert(self.clone(), elems.clone());
        Ok(elems)
    }

    /// Parses a word, a parenthesized one-line form, or `w0` followed by a word
    /// (meaning `w0` times that word).
    pub fn parse(rs: &Arc<RootSystem>, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('(') {
            return Self::from_one_line(rs, &t.parse()?);
        }
        let lower = t.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("w0") {
            let tail = Self::from_word(rs, &parse_word(rest, rs.rank())?)?;
            return Self::longest(rs).multiply(&tail);
        }
        Self::from_word(rs, &parse_word(t, rs.rank())?)
    }

    /// Every element of the group, by length then canonical word.
    pub fn enumerate_group(rs: &Arc<RootSystem>) -> Vec<WeylElement> {
        let w0 = Self::longest(rs);
        let all = w0.lower_interval(usize::MAX).expect("no cap");
        all.as_ref().clone()
    }
}

/// Lex-min reduced word of `w`, read from `w^{-1}` by repeatedly removing its
/// smallest right descent.
fn lex_min_word(w: &WeylElement) -> Vec<usize> {
    let mut cur = w.inverse_by_right_peeling();
    let mut word = Vec::new();
    while let Some(i) = (1..=cur.rank()).find(|&i| cur.has_right_descent(i)) {
        word.push(i);
        cur = cur.mul_simple_right(i);
    }
    word
}

/// Peels simple roots off an inversion set; the result multiplies to the
/// unique element with that inversion set.
pub fn word_from_inversions(rs: &RootSystem, set: InversionSet) -> Result<Vec<usize>> {
    let mut bits = set.bits();
    let mut word = Vec::new();
    while bits != 0 {
        let Some(i) = (1..=rs.rank()).find(|&i| bits >> rs.simple_root_index(i) & 1 == 1) else {
            return Err(Error::NotAnInversionSet { remaining: bits.count_ones() as usize });
        };
        let alpha = rs.simple_root_index(i);
        let mut next = 0u128;
        for p in 0..rs.num_positive() {
            if p != alpha && bits >> p & 1 == 1 {
                let q = rs.simple_reflection_of(i, p).expect("only alpha_i leaves the positive roots");
                next |= 1 << q;
            }
        }
        bits = next;
        word.push(i);
    }
    Ok(word)
}

/// Right action of `s_i` on a one-line form.
fn apply_one_line_generator(ct: CartanType, seq: &mut [i32], i: usize) {
    let n = ct.rank();
    match ct.family() {
        Family::A => seq.swap(i - 1, i),
        Family::B | Family::C if i == n => seq[0] = -seq[0],
        Family::D if i == n => {
            let (a, b) = (seq[0], seq[1]);
            seq[0] = -b;
            seq[1] = -a;
        }
        _ => seq.swap(n - i - 1, n - i),
    }
}

fn validate_one_line(ct: CartanType, entries: &[i32]) -> Result<()> {
    let n = ct.rank();
    let bad = |reason: String| Err(Error::InvalidOneLine { cartan_type: ct, reason });
    let size = if ct.family() == Family::A { n + 1 } else { n };
    if entries.len() != size {
        return bad(format!("expected {size} entries, got {}", entries.len()));
    }
    if let Some(e) = entries.iter().find(|e| e.unsigned_abs() as usize > size) {
        return bad(format!("entry {e} exceeds {size}"));
    }
    let negatives = entries.iter().filter(|&&e| e < 0).count();
    if ct.family() == Family::A && negatives > 0 {
        return bad("type A entries must be positive".into());
    }
    if ct.family() == Family::D && negatives % 2 == 1 {
        return bad("type D needs an even number of negative entries".into());
    }
    Ok(())
}

/// Coxeter length read off a one-line form.
fn one_line_length(ct: CartanType, v: &[i32]) -> usize {
    let mut inv = 0;
    let mut nsp = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
            if v[i] + v[j] < 0 {
                nsp += 1;
            }
        }
    }
    let neg = v.iter().filter(|&&e| e < 0).count();
    match ct.family() {
        Family::A => inv,
        Family::B | Family::C => inv + neg + nsp,
        Family::D => inv + nsp,
        _ => unreachable!("one-line forms exist for classical types only"),
    }
}
