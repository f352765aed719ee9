//! Permutations in one-line notation, 0-based internally.

use std::fmt;

use itertools::Itertools;

use crate::DomainError;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(k: usize) -> Self {
        Perm { img: (0..k).collect() }
    }

    /// Build from 0-based one-line notation `i -> img[i]`.
    pub fn from_images(img: Vec<usize>) -> Result<Self, DomainError> {
        let k = img.len();
        let mut seen = vec![false; k];
        for &v in &img {
            if v >= k || seen[v] {
                return Err(DomainError(format!("not a permutation: {img:?}")));
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    /// Transposition swapping `a` and `b` in a permutation of degree `k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut img: Vec<usize> = (0..k).collect();
        img.swap(a, b);
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    /// `self . other` maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm { img: other.img.iter().map(|&i| self.img[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.img.len()];
        let mut sign = 1i64;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.img[v];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }
}

impl fmt::Display for Perm {
    /// One-line notation with 1-based values, `[2,1,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.img.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// All permutations of degree `k` in lexicographic order of one-line notation.
pub fn all_perms(k: usize) -> Vec<Perm> {
    (0..k)
        .permutations(k)
        .map(|img| Perm { img })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_and_compose() {
        let s = Perm::transposition(3, 0, 1);
        assert_eq!(s.sign(), -1);
        assert_eq!(s.compose(&s), Perm::identity(3));
        let c = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(c.sign(), 1);
        assert_eq!(c.compose(&c.inverse()), Perm::identity(3));
        // compose applies the right factor first
        let t = Perm::transposition(3, 1, 2);
        let st = s.compose(&t);
        assert_eq!(st.apply(0), 1);
        assert_eq!(st.apply(1), 2);
        assert_eq!(st.apply(2), 0);
        let ts = t.compose(&s);
        assert_eq!(ts.apply(0), 2);
        assert_eq!(ts.apply(1), 0);
        assert_eq!(ts.apply(2), 1);
    }

    #[test]
    fn all_perms_count() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0).len(), 1);
    }
}
