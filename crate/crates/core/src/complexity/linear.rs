use crate::seq::BinarySequence;

/// Length of the shortest LFSR over GF(2) producing the finite sequence `s`.
pub fn berlekamp_massey(s: &[bool]) -> usize {
    let n = s.len();
    // connection polynomials, coefficient of x^j at index j
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut l = 0usize;
    let mut m = 1usize; // steps since b was last updated
    for i in 0..n {
        let disc = (1..=l).fold(s[i], |acc, j| acc ^ (c[j] & s[i - j]));
        if !disc {
            m += 1;
            continue;
        }
        let prev = c.clone();
        for j in 0..=n - m {
            c[j + m] ^= b[j];
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            m = 1;
        } else {
            m += 1;
        }
    }
    l
}

/// Linear complexity of the periodic sequence, from two full periods.
pub fn linear_complexity(s: &BinarySequence) -> usize {
    let two: Vec<bool> = s.bits().iter().chain(s.bits()).copied().collect();
    berlekamp_massey(&two)
}
