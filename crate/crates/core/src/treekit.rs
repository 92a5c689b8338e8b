//! Multilinear planar binary trees.
//!
//! A monomial of arity `n` is a planar binary tree whose leaves carry the
//! labels `1..=n`, each exactly once. Monomials are indexed canonically:
//!
//! ```text
//! index = shape_rank * n! + label_rank
//! ```
//!
//! Shapes are ordered by the leaf count of the left subtree, descending,
//! ties broken by the left subtree and then the right subtree. `label_rank`
//! is the lexicographic rank of the leaf labels read left to right. In arity
//! three this gives the order
//!
//! ```text
//!  0 ((a*b)*c)   1 ((a*c)*b)   2 ((b*a)*c)   3 ((b*c)*a)   4 ((c*a)*b)   5 ((c*b)*a)
//!  6 (a*(b*c))   7 (a*(c*b))   8 (b*(a*c))   9 (b*(c*a))  10 (c*(a*b))  11 (c*(b*a))
//! ```

use std::fmt;

use crate::{Error, Result};

/// Largest arity [`enumerate_multilinear`] accepts without an explicit cap.
pub const DEFAULT_MAX_ARITY: usize = 7;

const ALPHABET: [char; 26] = [
    'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k', 'l', 'm', 'n', 'o', 'p', 'q', 'r', 's',
    't', 'u', 'v', 'w', 'x', 'y', 'z',
];

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The Catalan number `C_n`.
pub fn catalan(n: usize) -> usize {
    let mut c = vec![1usize; n + 1];
    for k in 1..=n {
        c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
    }
    c[n]
}

/// Number of planar binary tree shapes with `n >= 1` leaves.
pub fn shape_count(n: usize) -> usize {
    catalan(n - 1)
}

/// Number of multilinear monomials of arity `n >= 1`: `n! * C_{n-1}`.
pub fn monomial_count(n: usize) -> usize {
    factorial(n) * shape_count(n)
}

/// An unlabeled planar binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

// Rank offset of the block of shapes with `left` leaves in the left subtree.
fn left_block_offset(n: usize, left: usize) -> usize {
    ((left + 1)..n)
        .map(|l| shape_count(l) * shape_count(n - l))
        .sum()
}

impl Shape {
    pub fn node(left: Shape, right: Shape) -> Shape {
        Shape::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Position of this shape in the canonical order of shapes of its arity.
    pub fn rank(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node(l, r) => {
                let (nl, nr) = (l.leaf_count(), r.leaf_count());
                left_block_offset(nl + nr, nl) + l.rank() * shape_count(nr) + r.rank()
            }
        }
    }

    /// Inverse of [`Shape::rank`]. Panics if `rank >= shape_count(n)`.
    pub fn unrank(n: usize, mut rank: usize) -> Shape {
        assert!(n >= 1 && rank < shape_count(n), "shape rank out of range");
        if n == 1 {
            return Shape::Leaf;
        }
        for left in (1..n).rev() {
            let block = shape_count(left) * shape_count(n - left);
            if rank < block {
                let right_count = shape_count(n - left);
                return Shape::node(
                    Shape::unrank(left, rank / right_count),
                    Shape::unrank(n - left, rank % right_count),
                );
            }
            rank -= block;
        }
        unreachable!()
    }

    /// All shapes with `n` leaves in canonical order.
    pub fn all(n: usize) -> Vec<Shape> {
        (0..shape_count(n)).map(|r| Shape::unrank(n, r)).collect()
    }

    pub fn mirror(&self) -> Shape {
        match self {
            Shape::Leaf => Shape::Leaf,
            Shape::Node(l, r) => Shape::node(r.mirror(), l.mirror()),
        }
    }

    /// Replace the leaf at 0-based left-to-right position `pos` by `inner`.
    pub fn graft(&self, pos: usize, inner: &Shape) -> Shape {
        fn go(s: &Shape, pos: &mut usize, inner: &Shape) -> Shape {
            match s {
                Shape::Leaf => {
                    let here = *pos == 0;
                    *pos = pos.wrapping_sub(1);
                    if here {
                        inner.clone()
                    } else {
                        Shape::Leaf
                    }
                }
                Shape::Node(l, r) => {
                    let l = go(l, pos, inner);
                    Shape::node(l, go(r, pos, inner))
                }
            }
        }
        assert!(pos < self.leaf_count(), "graft position out of range");
        let mut p = pos;
        go(self, &mut p, inner)
    }
}

/// Lexicographic rank of a permutation of `1..=n` given as a sequence.
pub fn label_rank(labels: &[u8]) -> usize {
    let n = labels.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = labels[i + 1..].iter().filter(|&&x| x < labels[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

/// Inverse of [`label_rank`].
pub fn label_unrank(n: usize, mut rank: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// Canonical index of the monomial with the given shape rank and leaf labels.
pub fn encode(shape_rank: usize, labels: &[u8]) -> usize {
    shape_rank * factorial(labels.len()) + label_rank(labels)
}

/// A labeled planar binary tree. Labels are not required to be normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(u8),
    Branch(Box<Node>, Box<Node>),
}

impl Node {
    pub fn branch(left: Node, right: Node) -> Node {
        Node::Branch(Box::new(left), Box::new(right))
    }

    /// Build a tree of the given shape, reading labels left to right.
    pub fn from_shape(shape: &Shape, labels: &[u8]) -> Node {
        fn go(s: &Shape, it: &mut std::slice::Iter<'_, u8>) -> Node {
            match s {
                Shape::Leaf => Node::Leaf(*it.next().expect("too few labels for shape")),
                Shape::Node(l, r) => {
                    let l = go(l, it);
                    Node::branch(l, go(r, it))
                }
            }
        }
        let mut it = labels.iter();
        let node = go(shape, &mut it);
        assert!(it.next().is_none(), "too many labels for shape");
        node
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Branch(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Leaf labels read left to right.
    pub fn labels(&self) -> Vec<u8> {
        fn go(n: &Node, out: &mut Vec<u8>) {
            match n {
                Node::Leaf(l) => out.push(*l),
                Node::Branch(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn shape(&self) -> Shape {
        match self {
            Node::Leaf(_) => Shape::Leaf,
            Node::Branch(l, r) => Shape::node(l.shape(), r.shape()),
        }
    }

    pub fn map_labels(&self, f: &impl Fn(u8) -> u8) -> Node {
        match self {
            Node::Leaf(l) => Node::Leaf(f(*l)),
            Node::Branch(a, b) => Node::branch(a.map_labels(f), b.map_labels(f)),
        }
    }

    pub fn mirror(&self) -> Node {
        match self {
            Node::Leaf(l) => Node::Leaf(*l),
            Node::Branch(a, b) => Node::branch(b.mirror(), a.mirror()),
        }
    }

    fn write(&self, f: &mut impl fmt::Write, alphabet: &[char]) -> fmt::Result {
        match self {
            Node::Leaf(l) => match alphabet.get(*l as usize - 1) {
                Some(c) => f.write_char(*c),
                None => write!(f, "x{l}"),
            },
            Node::Branch(a, b) => {
                f.write_char('(')?;
                a.write(f, alphabet)?;
                f.write_char('*')?;
                b.write(f, alphabet)?;
                f.write_char(')')
            }
        }
    }
}

/// Canonical position of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIndex {
    pub arity: usize,
    pub shape_rank: usize,
    pub label_rank: usize,
}

impl MonomialIndex {
    pub fn total(&self) -> usize {
        self.shape_rank * factorial(self.arity) + self.label_rank
    }

    pub fn from_total(arity: usize, total: usize) -> Result<MonomialIndex> {
        if arity == 0 || total >= monomial_count(arity) {
            return Err(Error::Argument(format!(
                "index {total} out of range for arity {arity}"
            )));
        }
        let f = factorial(arity);
        Ok(MonomialIndex {
            arity,
            shape_rank: total / f,
            label_rank: total % f,
        })
    }
}

/// A multilinear monomial: a planar binary tree with leaves labeled `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeMonomial {
    root: Node,
    arity: usize,
}

impl TreeMonomial {
    /// Validates that the leaf labels are exactly `1..=n`.
    pub fn new(root: Node) -> Result<TreeMonomial> {
        let labels = root.labels();
        let n = labels.len();
        let mut seen = vec![false; n];
        for &l in &labels {
            let i = (l as usize).wrapping_sub(1);
            if i >= n || seen[i] {
                return Err(Error::Argument(format!(
                    "leaf labels {labels:?} are not a permutation of 1..={n}"
                )));
            }
            seen[i] = true;
        }
        Ok(TreeMonomial { root, arity: n })
    }

    pub fn leaf() -> TreeMonomial {
        TreeMonomial {
            root: Node::Leaf(1),
            arity: 1,
        }
    }

    /// The monomial `(1*2)`.
    pub fn generator() -> TreeMonomial {
        TreeMonomial {
            root: Node::branch(Node::Leaf(1), Node::Leaf(2)),
            arity: 2,
        }
    }

    pub fn from_parts(shape: &Shape, labels: &[u8]) -> Result<TreeMonomial> {
        if shape.leaf_count() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: shape.leaf_count(),
                found: labels.len(),
            });
        }
        TreeMonomial::new(Node::from_shape(shape, labels))
    }

    pub fn from_index(arity: usize, total: usize) -> Result<TreeMonomial> {
        let idx = MonomialIndex::from_total(arity, total)?;
        let shape = Shape::unrank(arity, idx.shape_rank);
        TreeMonomial::from_parts(&shape, &label_unrank(arity, idx.label_rank))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn labels(&self) -> Vec<u8> {
        self.root.labels()
    }

    pub fn shape(&self) -> Shape {
        self.root.shape()
    }

    pub fn index(&self) -> MonomialIndex {
        MonomialIndex {
            arity: self.arity,
            shape_rank: self.shape().rank(),
            label_rank: label_rank(&self.labels()),
        }
    }

    /// Operadic partial composition: the leaf labeled `slot` is replaced by
    /// `inner`.
    ///
    /// Labels are renumbered order-preservingly along the sequence "outer
    /// labels below `slot`, inner labels, outer labels above `slot`": outer
    /// label `j < slot` stays `j`, inner label `k` becomes `k + slot - 1`,
    /// and outer label `j > slot` becomes `j + m - 1` where `m` is the arity
    /// of `inner`.
    pub fn graft(&self, slot: usize, inner: &TreeMonomial) -> Result<TreeMonomial> {
        if slot == 0 || slot > self.arity {
            return Err(Error::Argument(format!(
                "slot {slot} is not a leaf of an arity-{} monomial",
                self.arity
            )));
        }
        let m = inner.arity;
        let shift = |l: u8| {
            let l = l as usize;
            (if l < slot { l } else { l + m - 1 }) as u8
        };
        let inner_root = inner.root.map_labels(&|k| (k as usize + slot - 1) as u8);
        fn go(n: &Node, slot: u8, inner: &Node, shift: &impl Fn(u8) -> u8) -> Node {
            match n {
                Node::Leaf(l) if *l == slot => inner.clone(),
                Node::Leaf(l) => Node::Leaf(shift(*l)),
                Node::Branch(a, b) => {
                    Node::branch(go(a, slot, inner, shift), go(b, slot, inner, shift))
                }
            }
        }
        Ok(TreeMonomial {
            root: go(&self.root, slot as u8, &inner_root, &shift),
            arity: self.arity + m - 1,
        })
    }

    /// Each leaf label `i` becomes `sigma(i)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<TreeMonomial> {
        if sigma.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                found: sigma.len(),
            });
        }
        Ok(TreeMonomial {
            root: self.root.map_labels(&|l| sigma.apply(l)),
            arity: self.arity,
        })
    }

    /// Swap left and right subtrees at every internal node.
    pub fn mirror(&self) -> TreeMonomial {
        TreeMonomial {
            root: self.root.mirror(),
            arity: self.arity,
        }
    }

    /// Render with `alphabet[i - 1]` standing for label `i`.
    pub fn render_with(&self, alphabet: &[char]) -> String {
        let mut s = String::new();
        self.root
            .write(&mut s, alphabet)
            .expect("writing to a String");
        s
    }
}

impl fmt::Display for TreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.write(f, &ALPHABET)
    }
}

/// Default letters for labels `1, 2, 3, ...`.
pub fn default_alphabet() -> &'static [char] {
    &ALPHABET
}

/// A permutation of `1..=n`, stored as its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let i = (x as usize).wrapping_sub(1);
            if i >= n || seen[i] {
                return Err(Error::Argument(format!(
                    "{images:?} is not a permutation of 1..={n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n as u8).collect())
    }

    /// Every permutation of `1..=n` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..factorial(n))
            .map(|r| Permutation(label_unrank(n, r)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i8 {
        sequence_sign(&self.0)
    }
}

/// Sign of the permutation that sorts `seq` (a sequence of distinct values).
pub fn sequence_sign(seq: &[u8]) -> i8 {
    let inversions = (0..seq.len())
        .flat_map(|i| ((i + 1)..seq.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| seq[i] > seq[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All monomials of arity `n` in canonical index order.
pub fn enumerate_multilinear(n: usize) -> Result<Vec<TreeMonomial>> {
    enumerate_multilinear_capped(n, DEFAULT_MAX_ARITY)
}

pub fn enumerate_multilinear_capped(n: usize, max_arity: usize) -> Result<Vec<TreeMonomial>> {
    if n == 0 {
        return Err(Error::Argument("arity must be positive".into()));
    }
    if n > max_arity {
        return Err(Error::Capacity {
            arity: n,
            limit: max_arity,
        });
    }
    let perms: Vec<Vec<u8>> = (0..factorial(n)).map(|r| label_unrank(n, r)).collect();
    let mut out = Vec::with_capacity(monomial_count(n));
    for shape in Shape::all(n) {
        for labels in &perms {
            out.push(TreeMonomial {
                root: Node::from_shape(&shape, labels),
                arity: n,
            });
        }
    }
    Ok(out)
}
