//! Maps of the positive integers given by a finite head table and
//! per-residue translations on the tail.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::index_set::{ExactSet, IndexSet, Progression};

/// `f(n) = head[n - 1]` for `n <= head.len()`, and `f(n) = n + offsets[n % modulus]` beyond.
///
/// Canonical: the head is as short as possible and the modulus is the
/// smallest period of the offset table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModularMap {
    head: Vec<usize>,
    modulus: usize,
    offsets: Vec<i64>,
}

impl ModularMap {
    pub fn new(head: Vec<usize>, modulus: usize, offsets: Vec<i64>) -> Result<Self> {
        if modulus == 0 || offsets.len() != modulus {
            return Err(Error::InvalidPermutation(format!(
                "offset table has {} entries for modulus {}",
                offsets.len(),
                modulus
            )));
        }
        if let Some(pos) = head.iter().position(|&v| v == 0) {
            return Err(Error::InvalidPermutation(format!("head maps {} to 0", pos + 1)));
        }
        let first_tail = head.len() + 1;
        for (residue, &d) in offsets.iter().enumerate() {
            let n = first_in_class(first_tail, residue, modulus);
            if (n as i64) + d < 1 {
                return Err(Error::InvalidPermutation(format!(
                    "tail rule for residue {residue} maps {n} to {}",
                    n as i64 + d
                )));
            }
        }
        let mut map = ModularMap { head, modulus, offsets };
        map.canonicalize();
        Ok(map)
    }

    pub fn identity() -> Self {
        ModularMap { head: Vec::new(), modulus: 1, offsets: vec![0] }
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    /// First index governed by the tail rule.
    pub fn tail_start(&self) -> usize {
        self.head.len() + 1
    }

    pub fn offset_for(&self, n: usize) -> i64 {
        self.offsets[n % self.modulus]
    }

    pub fn apply(&self, n: usize) -> usize {
        assert!(n >= 1, "indices start at 1");
        if n <= self.head.len() {
            self.head[n - 1]
        } else {
            (n as i64 + self.offset_for(n)) as usize
        }
    }

    /// Largest displacement `|f(n) - n|` over all `n`.
    pub fn reach(&self) -> usize {
        let head = self.head.iter().enumerate().map(|(i, &v)| (v as i64 - (i as i64 + 1)).unsigned_abs());
        let tail = self.offsets.iter().map(|d| d.unsigned_abs());
        head.chain(tail).max().unwrap_or(0) as usize
    }

    pub fn is_identity(&self) -> bool {
        self.head.is_empty() && self.offsets.iter().all(|&d| d == 0)
    }

    fn canonicalize(&mut self) {
        let p = self.modulus;
        let shortest = (1..=p)
            .filter(|d| p % d == 0)
            .find(|&d| (0..p).all(|r| self.offsets[r] == self.offsets[r % d]))
            .unwrap_or(p);
        self.offsets.truncate(shortest);
        self.modulus = shortest;
        while let Some(&last) = self.head.last() {
            let n = self.head.len();
            if (n as i64 + self.offsets[n % self.modulus]) as usize != last {
                break;
            }
            self.head.pop();
        }
    }

    /// The orbit `{f^(k+1)(n), f^(k+2)(n), ...}`.
    ///
    /// Iteration stops when the orbit revisits a point (finite orbit) or when
    /// it enters a residue cycle with positive drift that stays in the tail,
    /// in which case the remainder is a union of arithmetic progressions.
    /// If neither happens within the step budget the result is the enumerated
    /// prefix of the orbit, qualified by `window`.
    pub fn orbit(&self, k: usize, n: usize, window: usize) -> IndexSet {
        let budget = self.orbit_budget(n);
        let mut x = n;
        for _ in 0..=k {
            x = self.apply(x);
        }
        let mut visited: Vec<usize> = Vec::new();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for _ in 0..budget {
            if seen.contains_key(&x) {
                return IndexSet::Exact(ExactSet::finite(visited));
            }
            if let Some(tails) = self.escaping_tails(x) {
                return IndexSet::Exact(ExactSet::new(visited, tails));
            }
            seen.insert(x, visited.len());
            visited.push(x);
            x = self.apply(x);
        }
        IndexSet::WindowEnumerated {
            members: visited.into_iter().filter(|&v| v <= window).collect::<BTreeSet<_>>(),
            verified_up_to: window,
        }
    }

    fn orbit_budget(&self, n: usize) -> usize {
        let max_head = self.head.iter().copied().max().unwrap_or(0);
        10 * (self.tail_start() + self.modulus) + 2 * self.modulus * (n.max(max_head) + 1)
    }

    /// If the orbit from `x` runs through a whole residue cycle inside the
    /// tail and comes back to the same residue strictly higher, every later
    /// point is a translate of that cycle.
    fn escaping_tails(&self, x: usize) -> Option<Vec<Progression>> {
        let start = self.tail_start();
        if x < start {
            return None;
        }
        let mut cycle = vec![x];
        let mut y = x;
        // the residue walk of a non-injective map need not return to x's class
        let mut returned = false;
        for _ in 0..self.modulus {
            y = self.apply(y);
            if y % self.modulus == x % self.modulus {
                returned = true;
                break;
            }
            if y < start {
                return None;
            }
            cycle.push(y);
        }
        if !returned || y <= x {
            return None;
        }
        let drift = y - x;
        Some(cycle.into_iter().map(|s| Progression::new(s, drift)).collect())
    }
}

fn first_in_class(from: usize, residue: usize, modulus: usize) -> usize {
    let r = from % modulus;
    from + (residue + modulus - r) % modulus
}

impl fmt::Display for ModularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "head {:?}, n -> n + {:?}[n mod {}] beyond", self.head, self.offsets, self.modulus)
    }
}

/// Bijection of the positive integers in [`ModularMap`] form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModularPermutation {
    map: ModularMap,
}

impl ModularPermutation {
    /// Validates bijectivity: the residue map `r -> (r + d_r) mod p` must be a
    /// permutation, the head images must be distinct and avoid the tail
    /// images, and every value below the last tail threshold must be hit.
    pub fn new(head: Vec<usize>, modulus: usize, offsets: Vec<i64>) -> Result<Self> {
        Self::from_map(ModularMap::new(head, modulus, offsets)?)
    }

    pub fn from_map(map: ModularMap) -> Result<Self> {
        let p = map.modulus;
        let mut residues_hit = vec![false; p];
        for (r, &d) in map.offsets.iter().enumerate() {
            let s = (r as i64 + d).rem_euclid(p as i64) as usize;
            if residues_hit[s] {
                return Err(Error::InvalidPermutation(format!(
                    "tail rules send two residue classes to residue {s} mod {p}"
                )));
            }
            residues_hit[s] = true;
        }
        let first_images = first_tail_images(&map);
        let is_tail_image = |v: usize| v >= first_images[v % p];
        let mut head_images = BTreeSet::new();
        for (i, &v) in map.head.iter().enumerate() {
            if !head_images.insert(v) {
                return Err(Error::InvalidPermutation(format!("value {v} has two preimages (one is {})", i + 1)));
            }
            if is_tail_image(v) {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is hit by both head index {} and the tail rule",
                    i + 1
                )));
            }
        }
        let bound = first_images.iter().copied().max().unwrap_or(1);
        if let Some(missed) = (1..bound).find(|&v| !is_tail_image(v) && !head_images.contains(&v)) {
            return Err(Error::InvalidPermutation(format!("value {missed} has no preimage")));
        }
        Ok(ModularPermutation { map })
    }

    pub fn identity() -> Self {
        ModularPermutation { map: ModularMap::identity() }
    }

    /// Swap of `a` and `b`, identity elsewhere.
    pub fn transposition(a: usize, b: usize) -> Self {
        let hi = a.max(b);
        let mut head: Vec<usize> = (1..=hi).collect();
        head.swap(a - 1, b - 1);
        Self::new(head, 1, vec![0]).expect("transposition is a bijection")
    }

    pub fn as_map(&self) -> &ModularMap {
        &self.map
    }

    pub fn apply(&self, n: usize) -> usize {
        self.map.apply(n)
    }

    pub fn reach(&self) -> usize {
        self.map.reach()
    }

    pub fn inverse(&self) -> ModularPermutation {
        let map = &self.map;
        let p = map.modulus;
        let first_images = first_tail_images(map);
        let new_start = first_images.iter().copied().max().unwrap_or(1);
        let mut offsets = vec![0i64; p];
        for (r, &d) in map.offsets.iter().enumerate() {
            let s = (r as i64 + d).rem_euclid(p as i64) as usize;
            offsets[s] = -d;
        }
        let mut head = vec![0usize; new_start - 1];
        for (i, &v) in map.head.iter().enumerate() {
            head[v - 1] = i + 1;
        }
        for (v, slot) in head.iter_mut().enumerate() {
            let v = v + 1;
            if *slot == 0 {
                *slot = (v as i64 + offsets[v % p]) as usize;
            }
        }
        let inverse = ModularMap::new(head, p, offsets).expect("inverse of a bijection is well formed");
        ModularPermutation { map: inverse }
    }

    /// Window form of bijectivity: injective on `[1, B]` and every index
    /// below the head threshold has a preimage there, with
    /// `B = N_head + 2p(1 + max|d_r|)`.
    pub fn check_window(&self) -> bool {
        let map = &self.map;
        let max_d = map.offsets.iter().map(|d| d.unsigned_abs() as usize).max().unwrap_or(0);
        let bound = map.tail_start() + 2 * map.modulus * (1 + max_d);
        let images: Vec<usize> = (1..=bound).map(|n| map.apply(n)).collect();
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        distinct.len() == images.len() && (1..map.tail_start()).all(|v| distinct.contains(&v))
    }
}

/// For each residue class `s` of the image, the smallest tail image in that class.
fn first_tail_images(map: &ModularMap) -> Vec<usize> {
    let p = map.modulus;
    let mut first = vec![usize::MAX; p];
    for (r, &d) in map.offsets.iter().enumerate() {
        let n = first_in_class(map.tail_start(), r, p);
        let v = (n as i64 + d) as usize;
        let s = v % p;
        first[s] = first[s].min(v);
    }
    first
}

impl fmt::Display for ModularPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.map.fmt(f)
    }
}
