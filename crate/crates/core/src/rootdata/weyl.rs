//! Breadth-first enumeration of a Weyl group from its simple reflections.

use std::collections::HashMap;

use crate::exact::matrix::rat_mul;
use crate::exact::Rational;

pub type RatMatrix = Vec<Vec<Rational>>;

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Shortlex-minimal reduced word in simple reflection indices.
    pub word: Vec<usize>,
    /// Matrix on V in the realization basis (`v -> matrix * v`).
    pub matrix: RatMatrix,
    /// Matrix on V-dual, the inverse transpose of `matrix`.
    pub dual: RatMatrix,
    pub length: usize,
}

impl WeylElement {
    pub fn sign(&self) -> i64 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Enumerated Weyl group. Element 0 is the identity and elements are listed
/// by length, then shortlex order of their reduced words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    rank: usize,
    rmul: Vec<Vec<usize>>,
    mul: Vec<usize>,
    inverse: Vec<usize>,
    longest: usize,
}

impl WeylGroup {
    pub(crate) fn generate(simple: &[RatMatrix], simple_dual: &[RatMatrix]) -> WeylGroup {
        let rank = simple.len();
        let dim = simple.first().map_or(0, Vec::len);
        let identity = crate::exact::matrix::rat_identity(dim);
        let mut index: HashMap<RatMatrix, usize> = HashMap::new();
        index.insert(identity.clone(), 0);
        let mut elements = vec![WeylElement {
            word: Vec::new(),
            matrix: identity.clone(),
            dual: identity,
            length: 0,
        }];
        let mut rmul: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(rank);
            for i in 0..rank {
                let m = rat_mul(&elements[head].matrix, &simple[i]);
                let idx = match index.get(&m) {
                    Some(&idx) => idx,
                    None => {
                        let idx = elements.len();
                        let mut word = elements[head].word.clone();
                        word.push(i);
                        let dual = rat_mul(&elements[head].dual, &simple_dual[i]);
                        elements.push(WeylElement {
                            length: word.len(),
                            word,
                            matrix: m.clone(),
                            dual,
                        });
                        index.insert(m, idx);
                        idx
                    }
                };
                row.push(idx);
            }
            rmul.push(row);
            head += 1;
        }
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let mut z = x;
                for &i in &elements[y].word {
                    z = rmul[z][i];
                }
                mul[x * n + y] = z;
            }
        }
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mul[x * n + y] == 0).expect("group"))
            .collect();
        let longest = n - 1;
        WeylGroup {
            elements,
            rank,
            rmul,
            mul,
            inverse,
            longest,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.elements[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.elements[w].length
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.elements[w].word
    }

    pub fn simple(&self, i: usize) -> usize {
        self.rmul[0][i]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order() + y]
    }

    /// `x * s_i`.
    pub fn rmul_simple(&self, x: usize, i: usize) -> usize {
        self.rmul[x][i]
    }

    /// `s_i * x`.
    pub fn lmul_simple(&self, i: usize, x: usize) -> usize {
        self.mul(self.simple(i), x)
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |x, &i| self.rmul[x][i])
    }

    /// Looks up the element whose reduced word is exactly `word`, if the word
    /// is reduced.
    pub fn from_reduced_word(&self, word: &[usize]) -> Option<usize> {
        let w = self.from_word(word);
        (self.length(w) == word.len()).then_some(w)
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// True when `x * s_i` is shorter than `x`.
    pub fn is_right_descent(&self, x: usize, i: usize) -> bool {
        self.length(self.rmul[x][i]) < self.length(x)
    }

    /// Every reduced word of `x`.
    pub fn reduced_words(&self, x: usize) -> Vec<Vec<usize>> {
        if x == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            if self.is_right_descent(x, i) {
                for mut w in self.reduced_words(self.rmul[x][i]) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out
    }

    /// Conjugacy classes, each listed in element order.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![x];
            class_of[x] = id;
            let mut head = 0;
            while head < members.len() {
                let y = members[head];
                for i in 0..self.rank {
                    let z = self.conjugate(self.simple(i), y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                    }
                }
                head += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}
