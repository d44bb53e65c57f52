use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use super::normal_form::NormalForm;
use super::simple::Simple;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Default cap on super summit set size.
pub const DEFAULT_SSS_CAP: usize = 1_000_000;

/// Conjugacy-class fingerprint: summit inf, summit sup and `|SSS|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SummitInvariant {
    pub inf: i64,
    pub sup: i64,
    pub summit_set_size: usize,
}

/// Conjugates `u` into its super summit set by cycling then decycling.
/// Returns the summit element `x` and `g` with `x = g^{-1} u g`.
pub fn summit_element(u: &BraidWord) -> Result<(NormalForm, BraidWord)> {
    let n = u.n();
    let mut x = NormalForm::of_word(u)?;
    let mut g: Vec<i32> = Vec::new();
    // inf is maximal once |Δ| consecutive cyclings fail to raise it, and
    // dually for sup under decycling.
    let patience = n * (n - 1) / 2;
    loop {
        let mut improved = false;
        let mut stale = 0;
        while x.canonical_length() > 0 && stale < patience {
            let (y, c) = x.cycling();
            g.extend(c.to_letters());
            if y.inf() > x.inf() {
                stale = 0;
                improved = true;
            } else {
                stale += 1;
            }
            x = y;
        }
        stale = 0;
        while x.canonical_length() > 0 && stale < patience {
            let (y, d) = x.decycling();
            g.extend(d.to_letters().iter().rev().map(|l| -l));
            if y.sup() < x.sup() {
                stale = 0;
                improved = true;
            } else {
                stale += 1;
            }
            x = y;
        }
        if !improved {
            break;
        }
    }
    let g = BraidWord::from_trusted(n, g).free_reduced();
    Ok((x, g))
}

/// The super summit set of a braid: all conjugates with maximal inf and
/// minimal sup, with a conjugator path back to the entry element.
#[derive(Debug, Clone)]
pub struct SummitSet {
    n: usize,
    elements: Vec<NormalForm>,
    /// `elements[i] = s^{-1} · elements[parent] · s`
    parents: Vec<Option<(usize, Simple)>>,
    index: HashMap<NormalForm, usize>,
    entry_conjugator: BraidWord,
    canonical: usize,
}

impl SummitSet {
    /// Closes the summit element of `u` under conjugation by every simple
    /// element, keeping summit elements only. Fails with
    /// [`Error::ResourceExhausted`] once more than `cap` elements are found.
    pub fn compute(u: &BraidWord, cap: usize) -> Result<SummitSet> {
        let (entry, entry_conjugator) = summit_element(u)?;
        let n = u.n();
        let (inf, sup) = (entry.inf(), entry.sup());
        let mut set = SummitSet {
            n,
            elements: vec![entry.clone()],
            parents: vec![None],
            index: HashMap::from([(entry, 0)]),
            entry_conjugator,
            canonical: 0,
        };
        if sup == inf {
            return Ok(set);
        }
        let simples: Vec<Simple> = Simple::all(n).into_iter().skip(1).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(idx) = queue.pop_front() {
            for s in &simples {
                let y = set.elements[idx].conjugate_simple(s);
                if y.inf() != inf || y.sup() != sup || set.index.contains_key(&y) {
                    continue;
                }
                if set.elements.len() >= cap {
                    return Err(Error::ResourceExhausted {
                        cap,
                        explored: set.elements.len(),
                    });
                }
                let id = set.elements.len();
                set.index.insert(y.clone(), id);
                set.elements.push(y);
                set.parents.push(Some((idx, *s)));
                queue.push_back(id);
            }
        }
        set.canonical = (0..set.elements.len())
            .min_by(|&a, &b| set.elements[a].cmp(&set.elements[b]))
            .unwrap_or(0);
        Ok(set)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn inf(&self) -> i64 {
        self.elements[0].inf()
    }

    pub fn sup(&self) -> i64 {
        self.elements[0].sup()
    }

    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn contains(&self, nf: &NormalForm) -> bool {
        self.index.contains_key(nf)
    }

    /// Smallest element; equal for two braids iff they are conjugate.
    pub fn canonical(&self) -> &NormalForm {
        &self.elements[self.canonical]
    }

    pub fn invariant(&self) -> SummitInvariant {
        SummitInvariant {
            inf: self.inf(),
            sup: self.sup(),
            summit_set_size: self.len(),
        }
    }

    /// `g` with `g^{-1} u g` equal to the entry element.
    pub fn entry_conjugator(&self) -> &BraidWord {
        &self.entry_conjugator
    }

    /// `h` with `elements[idx] = h^{-1} · elements[0] · h`.
    pub fn path_from_entry(&self, mut idx: usize) -> BraidWord {
        let mut steps = Vec::new();
        while let Some((parent, s)) = self.parents[idx] {
            steps.push(s);
            idx = parent;
        }
        let letters = steps.iter().rev().flat_map(|s| s.to_letters()).collect();
        BraidWord::from_trusted(self.n, letters).free_reduced()
    }

    /// `g` with `g^{-1} u g = nf`, when `nf` belongs to the set.
    pub fn conjugator_to(&self, nf: &NormalForm) -> Option<BraidWord> {
        let idx = *self.index.get(nf)?;
        let h = self.path_from_entry(idx);
        self.entry_conjugator.compose(&h).ok()
    }

    pub fn canonical_conjugator(&self) -> BraidWord {
        self.conjugator_to(self.canonical())
            .expect("canonical element is a member")
    }
}

/// Memoized summit sets, shared by every braid whose summit element lands
/// in a set already computed.
#[derive(Debug, Default)]
pub struct SummitCache {
    cap: usize,
    sets: Vec<Arc<SummitSet>>,
    member_of: HashMap<NormalForm, usize>,
}

impl SummitCache {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            sets: Vec::new(),
            member_of: HashMap::new(),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Registers a set computed elsewhere (e.g. on a worker thread).
    pub fn insert(&mut self, set: SummitSet) -> Arc<SummitSet> {
        if let Some(&id) = self.member_of.get(set.canonical()) {
            return self.sets[id].clone();
        }
        let id = self.sets.len();
        for e in set.elements() {
            self.member_of.insert(e.clone(), id);
        }
        let set = Arc::new(set);
        self.sets.push(set.clone());
        set
    }

    /// Summit set of `u`, plus the conjugator from `u` into it: the pair
    /// `(S, g)` satisfies `g^{-1} u g ∈ S`, and `g^{-1} u g` is returned too.
    pub fn lookup(&mut self, u: &BraidWord) -> Result<(Arc<SummitSet>, NormalForm, BraidWord)> {
        let (x, g) = summit_element(u)?;
        if let Some(&id) = self.member_of.get(&x) {
            return Ok((self.sets[id].clone(), x, g));
        }
        let set = SummitSet::compute(u, self.cap)?;
        let set = self.insert(set);
        Ok((set, x, g))
    }
}
