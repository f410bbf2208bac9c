//! Periodic binary sequences and the interleaved period-`4p` construction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::ConstructionParams;

/// One period of a periodic binary sequence, stored densely.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    bits: Vec<bool>,
}

impl BinarySequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidSequence("period must be positive".into()));
        }
        Ok(Self { bits })
    }

    /// From a slice of `0`/`1` values.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let bits = bits
            .iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::InvalidSequence(format!("bit value {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }

    /// Sequence of the given period whose support is `support` (indices reduced mod period).
    pub fn from_support<I>(period: usize, support: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut bits = vec![false; period];
        if period == 0 {
            return Self::new(bits);
        }
        for t in support {
            bits[(t % period as u64) as usize] = true;
        }
        Self::new(bits)
    }

    pub fn zeros(period: usize) -> Result<Self> {
        Self::new(vec![false; period])
    }

    pub fn ones(period: usize) -> Result<Self> {
        Self::new(vec![true; period])
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    /// Bit at index `i mod N`.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i % self.bits.len()]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Positions holding a one, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    /// Cyclic left shift: `result[i] = self[(i + e) mod N]`.
    pub fn shift(&self, e: i64) -> Self {
        let n = self.period();
        let e = e.rem_euclid(n as i64) as usize;
        let mut bits = Vec::with_capacity(n);
        bits.extend_from_slice(&self.bits[e..]);
        bits.extend_from_slice(&self.bits[..e]);
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// Adds a constant bit: complement when `b` is set.
    pub fn add_bit(&self, b: bool) -> Self {
        if b {
            self.complement()
        } else {
            self.clone()
        }
    }

    /// Row-major reading of the matrix whose columns are `columns`:
    /// `u[i*M + j] = columns[j][i]`.
    pub fn interleave(columns: &[BinarySequence]) -> Result<Self> {
        let first = columns
            .first()
            .ok_or_else(|| Error::InvalidSequence("interleave needs at least one column".into()))?;
        let n = first.period();
        if let Some((index, c)) = columns.iter().enumerate().find(|(_, c)| c.period() != n) {
            return Err(Error::PeriodMismatch {
                index,
                expected: n,
                found: c.period(),
            });
        }
        let bits = (0..n)
            .flat_map(|i| columns.iter().map(move |c| c.bits[i]))
            .collect();
        Self::new(bits)
    }

    /// Inverse of [`BinarySequence::interleave`] for `m` columns.
    pub fn deinterleave(&self, m: usize) -> Result<Vec<Self>> {
        if m == 0 || !self.period().is_multiple_of(m) {
            return Err(Error::InvalidSequence(format!(
                "period {} is not a multiple of {m}",
                self.period()
            )));
        }
        (0..m)
            .map(|j| Self::new(self.bits.iter().skip(j).step_by(m).copied().collect()))
            .collect()
    }
}

/// Text form: `N=<period>` on the first line, the bits as `0`/`1` on the second.
impl fmt::Display for BinarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "N={}", self.period())?;
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        writeln!(f)
    }
}

impl FromStr for BinarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_suffix('\n')
            .ok_or_else(|| Error::Parse("missing trailing newline".into()))?;
        let (header, bits) = body
            .split_once('\n')
            .ok_or_else(|| Error::Parse("expected two lines".into()))?;
        let period: usize = header
            .strip_prefix("N=")
            .ok_or_else(|| Error::Parse("first line must be N=<period>".into()))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad period in {header:?}")))?;
        if period == 0 {
            return Err(Error::Parse("period must be positive".into()));
        }
        let bits = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.len() != period {
            return Err(Error::Parse(format!(
                "header says N={period} but {} bits follow",
                bits.len()
            )));
        }
        Self::new(bits)
    }
}

/// Column offsets `(b0, b1, b2, b3)` with `b0 = b2` and `b1 = b3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BVector([bool; 4]);

impl BVector {
    /// `(0,1,0,1)`.
    pub const ALTERNATING: BVector = BVector([false, true, false, true]);
    /// `(0,0,0,0)`.
    pub const ZERO: BVector = BVector([false; 4]);
    /// The four admissible vectors.
    pub const ALL: [BVector; 4] = [
        BVector([false, false, false, false]),
        BVector([false, true, false, true]),
        BVector([true, false, true, false]),
        BVector([true, true, true, true]),
    ];

    pub fn new(bits: [bool; 4]) -> Result<Self> {
        if bits[0] != bits[2] {
            return Err(Error::InvalidBVector("b0 != b2".into()));
        }
        if bits[1] != bits[3] {
            return Err(Error::InvalidBVector("b1 != b3".into()));
        }
        Ok(Self(bits))
    }

    pub fn bit(&self, j: usize) -> bool {
        self.0[j]
    }

    pub fn complement(&self) -> Self {
        Self(self.0.map(|b| !b))
    }

    /// Whether this vector belongs to the `(0,1,0,1)` / `(1,0,1,0)` pair.
    pub fn is_alternating(&self) -> bool {
        self.0[0] != self.0[1]
    }
}

impl fmt::Display for BVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 4 {
            return Err(Error::InvalidBVector(format!(
                "expected 4 characters, got {:?}",
                s
            )));
        }
        let mut bits = [false; 4];
        for (slot, c) in bits.iter_mut().zip(chars) {
            *slot = match c {
                '0' => false,
                '1' => true,
                other => {
                    return Err(Error::InvalidBVector(format!("unexpected character {other:?}")))
                }
            };
        }
        Self::new(bits)
    }
}

/// The three Ding-Helleseth-Lam sequences of period `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhlSequences {
    /// Support `D_0 ∪ D_1`.
    pub s1: BinarySequence,
    /// Support `D_0 ∪ D_3`.
    pub s2: BinarySequence,
    /// Support `D_1 ∪ D_2`.
    pub s3: BinarySequence,
}

pub fn dhl_sequences(params: &ConstructionParams) -> DhlSequences {
    let p = params.p as usize;
    let c = &params.classes;
    let build = |a, b| {
        BinarySequence::from_support(p, c.union(a, b)).expect("p is a positive period")
    };
    DhlSequences {
        s1: build(0, 1),
        s2: build(0, 3),
        s3: build(1, 2),
    }
}

/// The four period-`p` columns `(s3 + b0, L^d s2 + b1, L^{2d} s1 + b2, L^{3d} s1 + b3)`.
pub fn columns(params: &ConstructionParams, b: BVector) -> [BinarySequence; 4] {
    let DhlSequences { s1, s2, s3 } = dhl_sequences(params);
    let p = params.p;
    let d = params.d;
    [
        s3.add_bit(b.bit(0)),
        s2.shift((d % p) as i64).add_bit(b.bit(1)),
        s1.shift((2 * d % p) as i64).add_bit(b.bit(2)),
        s1.shift((3 * d % p) as i64).add_bit(b.bit(3)),
    ]
}

/// The interleaved sequence of period `4p` with autocorrelation in `{0, ±4}`.
pub fn construct_u(params: &ConstructionParams, b: BVector) -> BinarySequence {
    BinarySequence::interleave(&columns(params, b)).expect("columns share period p")
}
