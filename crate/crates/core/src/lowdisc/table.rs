use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::OnceLock;

use super::DyadicFraction;
use crate::error::{Error, Result};

/// Number of levels generated for the built-in tables. Indices below `2^32`
/// can be expanded.
pub const BUILTIN_LEVELS: u32 = 32;

/// Numerators every table must reproduce for dimensions 1..=4 and levels
/// 1..=5 (row = level). These are the directions behind the worked points
/// `Q_13 = (11/16, 13/16, 13/16, 15/16)` and `Q_22 = (13/32, 29/32, 25/32, 3/32)`.
pub const REFERENCE_NUMERATORS: [[u64; 4]; 5] = [
    [1, 1, 1, 1],
    [1, 3, 1, 3],
    [1, 5, 7, 1],
    [1, 15, 11, 5],
    [1, 17, 13, 31],
];

/// Primitive polynomials (bit-encoded, both end terms included) and free
/// initial numerators for dimensions 2..=40, in the order of Sobol and
/// Levitan's table as published by Bratley and Fox (ACM TOMS 659).
/// Dimension 1 is the van der Corput sequence and is not listed.
const SOBOL_LEVITAN: [(u32, &[u64]); 39] = [
    (3, &[1]),
    (7, &[1, 1]),
    (11, &[1, 3, 7]),
    (13, &[1, 1, 5]),
    (19, &[1, 3, 1, 1]),
    (25, &[1, 1, 3, 7]),
    (37, &[1, 3, 3, 9, 9]),
    (59, &[1, 3, 7, 13, 3]),
    (47, &[1, 1, 5, 11, 27]),
    (61, &[1, 3, 5, 1, 15]),
    (55, &[1, 1, 7, 3, 29]),
    (41, &[1, 3, 7, 7, 21]),
    (67, &[1, 1, 1, 9, 23, 37]),
    (97, &[1, 3, 3, 5, 19, 33]),
    (91, &[1, 1, 3, 13, 11, 7]),
    (109, &[1, 1, 7, 13, 25, 5]),
    (103, &[1, 3, 5, 11, 7, 11]),
    (115, &[1, 1, 1, 3, 13, 39]),
    (131, &[1, 3, 1, 15, 17, 63, 13]),
    (193, &[1, 1, 5, 5, 1, 27, 33]),
    (137, &[1, 3, 3, 3, 25, 17, 115]),
    (145, &[1, 1, 3, 15, 29, 15, 41]),
    (143, &[1, 3, 1, 7, 3, 23, 79]),
    (241, &[1, 3, 7, 9, 31, 29, 17]),
    (157, &[1, 1, 5, 13, 11, 3, 29]),
    (185, &[1, 3, 1, 9, 5, 21, 119]),
    (167, &[1, 1, 3, 1, 23, 13, 75]),
    (229, &[1, 3, 3, 11, 27, 31, 73]),
    (171, &[1, 1, 7, 7, 19, 25, 105]),
    (213, &[1, 3, 5, 5, 21, 9, 7]),
    (191, &[1, 1, 1, 15, 5, 49, 59]),
    (253, &[1, 1, 1, 1, 1, 33, 65]),
    (203, &[1, 3, 5, 15, 17, 19, 21]),
    (211, &[1, 1, 7, 11, 13, 29, 3]),
    (239, &[1, 3, 7, 5, 7, 11, 113]),
    (247, &[1, 1, 5, 3, 15, 19, 61]),
    (285, &[1, 3, 1, 1, 9, 27, 89, 7]),
    (369, &[1, 1, 3, 7, 31, 15, 45, 23]),
    (299, &[1, 3, 3, 9, 9, 25, 107, 39]),
];

/// Sobol direction numbers `V_j^s = numerator(j, s) / 2^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionTable {
    max_dim: usize,
    max_level: u32,
    // row-major: dimension j (0-based) then level s (0-based)
    numerators: Vec<u64>,
}

impl DirectionTable {
    /// The default 40-dimensional table.
    ///
    /// Identical to [`bratley_fox`](Self::bratley_fox) except dimension 4,
    /// whose free numerators are `(1, 3, 1)` so that the table reproduces
    /// [`REFERENCE_NUMERATORS`].
    pub fn embedded() -> &'static DirectionTable {
        static TABLE: OnceLock<DirectionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut rows = SOBOL_LEVITAN.to_vec();
            rows[2] = (11, &[1, 3, 1]);
            let table = Self::from_polynomials(&rows, BUILTIN_LEVELS).expect("built-in direction data is well formed");
            table
                .check_reference()
                .expect("built-in table matches the reference directions");
            table
        })
    }

    /// Sobol and Levitan's table exactly as published by Bratley and Fox.
    ///
    /// Dimension 4 starts from `(1, 3, 7)`, so `V_4^3 = 7/8` and this table
    /// fails [`check_reference`](Self::check_reference).
    pub fn bratley_fox() -> &'static DirectionTable {
        static TABLE: OnceLock<DirectionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            Self::from_polynomials(&SOBOL_LEVITAN, BUILTIN_LEVELS).expect("built-in direction data is well formed")
        })
    }

    /// Expands primitive polynomials and initial numerators with Sobol's
    /// recurrence
    /// `m_k = m_{k-d} ^ (m_{k-d} << d) ^ XOR_{t<d} a_t (m_{k-t} << t)`.
    /// Dimension 1 (all numerators 1) is prepended.
    pub fn from_polynomials(rows: &[(u32, &[u64])], max_level: u32) -> Result<Self> {
        if max_level == 0 || max_level > 52 {
            return Err(Error::Table(format!("max level {max_level} outside 1..=52")));
        }
        let levels = max_level as usize;
        let mut numerators = vec![1u64; levels];
        for (idx, &(poly, init)) in rows.iter().enumerate() {
            let degree = 31 - poly.leading_zeros() as usize;
            if poly & 1 == 0 || degree == 0 {
                return Err(Error::Table(format!(
                    "dimension {}: polynomial {poly} must have degree >= 1 and a constant term",
                    idx + 2
                )));
            }
            if init.len() != degree {
                return Err(Error::Table(format!(
                    "dimension {}: polynomial of degree {degree} needs {degree} initial numerators, got {}",
                    idx + 2,
                    init.len()
                )));
            }
            let mut m: Vec<u64> = init.to_vec();
            for k in degree..levels {
                let mut next = m[k - degree] ^ (m[k - degree] << degree);
                for t in 1..degree {
                    if (poly >> (degree - t)) & 1 == 1 {
                        next ^= m[k - t] << t;
                    }
                }
                m.push(next);
            }
            m.truncate(levels);
            numerators.extend_from_slice(&m);
        }
        let table = Self {
            max_dim: rows.len() + 1,
            max_level,
            numerators,
        };
        table.validate()?;
        Ok(table)
    }

    /// Parses the `j s numerator` text format. Blank lines and `#` comments
    /// are ignored; every `(j, s)` in `1..=max_dim x 1..=max_level` must
    /// appear exactly once. The result must agree with
    /// [`REFERENCE_NUMERATORS`] wherever it overlaps them.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Table(format!("line {}: {what}: {raw:?}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(bad("expected `j s numerator`"));
            }
            let j: usize = fields[0].parse().map_err(|_| bad("bad dimension"))?;
            let s: u32 = fields[1].parse().map_err(|_| bad("bad level"))?;
            let n: u64 = fields[2].parse().map_err(|_| bad("bad numerator"))?;
            if j == 0 || s == 0 {
                return Err(bad("dimension and level start at 1"));
            }
            if entries.insert((j, s), n).is_some() {
                return Err(bad("duplicate entry"));
            }
        }
        let max_dim = entries.keys().map(|&(j, _)| j).max().unwrap_or(0);
        let max_level = entries.keys().map(|&(_, s)| s).max().unwrap_or(0);
        if max_dim == 0 {
            return Err(Error::Table("no entries".into()));
        }
        if max_level > 52 {
            return Err(Error::Table(format!("max level {max_level} exceeds 52")));
        }
        let mut numerators = Vec::with_capacity(max_dim * max_level as usize);
        for j in 1..=max_dim {
            for s in 1..=max_level {
                let n = entries
                    .get(&(j, s))
                    .ok_or_else(|| Error::Table(format!("missing entry for j={j}, s={s}")))?;
                numerators.push(*n);
            }
        }
        let table = Self {
            max_dim,
            max_level,
            numerators,
        };
        table.validate()?;
        table.check_reference()?;
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Table(format!("cannot read {}: {e}", path.display())))?;
        Self::from_text(&text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# j s numerator  (V_j^s = numerator / 2^s)\n");
        for j in 1..=self.max_dim {
            for s in 1..=self.max_level {
                let _ = writeln!(out, "{j} {s} {}", self.numerator(j, s));
            }
        }
        out
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn max_level(&self) -> u32 {
        self.max_level
    }

    /// Numerator of `V_j^s`, both 1-based. Panics outside the table.
    pub fn numerator(&self, j: usize, s: u32) -> u64 {
        assert!((1..=self.max_dim).contains(&j) && (1..=self.max_level).contains(&s));
        self.numerators[(j - 1) * self.max_level as usize + (s - 1) as usize]
    }

    pub fn direction(&self, j: usize, s: u32) -> DyadicFraction {
        DyadicFraction::new(self.numerator(j, s), s).expect("validated numerator")
    }

    /// Numerators of dimension `j` (1-based), level 1 first.
    pub(crate) fn row(&self, j: usize) -> &[u64] {
        let levels = self.max_level as usize;
        &self.numerators[(j - 1) * levels..j * levels]
    }

    fn validate(&self) -> Result<()> {
        for j in 1..=self.max_dim {
            for s in 1..=self.max_level {
                let n = self.numerator(j, s);
                if n.is_multiple_of(2) || n >> s != 0 {
                    return Err(Error::Table(format!(
                        "V_{j}^{s} numerator {n} must be odd and below 2^{s}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Verifies the overlap with [`REFERENCE_NUMERATORS`].
    pub fn check_reference(&self) -> Result<()> {
        for (level_idx, row) in REFERENCE_NUMERATORS.iter().enumerate() {
            let s = level_idx as u32 + 1;
            if s > self.max_level {
                break;
            }
            for (dim_idx, &want) in row.iter().enumerate().take(self.max_dim) {
                let got = self.numerator(dim_idx + 1, s);
                if got != want {
                    return Err(Error::Table(format!(
                        "V_{}^{s} is {got}/{}, expected {want}/{}",
                        dim_idx + 1,
                        1u64 << s,
                        1u64 << s
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_table_shape() {
        let t = DirectionTable::embedded();
        assert_eq!(t.max_dim(), 40);
        assert!(t.max_level() >= 20);
        assert!(t.max_dim() >= 13);
        for j in 1..=t.max_dim() {
            assert_eq!(t.numerator(j, 1), 1);
        }
        t.check_reference().unwrap();
    }

    #[test]
    fn first_dimensions_follow_their_recurrences() {
        let t = DirectionTable::embedded();
        let dim2: Vec<u64> = (1..=6).map(|s| t.numerator(2, s)).collect();
        assert_eq!(dim2, [1, 3, 5, 15, 17, 51]);
        let dim3: Vec<u64> = (1..=6).map(|s| t.numerator(3, s)).collect();
        assert_eq!(dim3, [1, 1, 7, 11, 13, 61]);
        let dim4: Vec<u64> = (1..=6).map(|s| t.numerator(4, s)).collect();
        assert_eq!(dim4, [1, 3, 1, 5, 31, 29]);
    }

    #[test]
    fn seven_dimensional_third_level() {
        // Published V^3 for n = 7 is (1,5,7,1,5,7,3)/8; dimension 6 carries
        // Bratley and Fox's initial value 1 instead of 7.
        let t = DirectionTable::embedded();
        let level3: Vec<u64> = (1..=7).map(|j| t.numerator(j, 3)).collect();
        assert_eq!(level3, [1, 5, 7, 1, 5, 1, 3]);
        let published = [1u64, 5, 7, 1, 5, 7, 3];
        let agreeing = level3.iter().zip(published).filter(|(a, b)| **a == *b).count();
        assert_eq!(agreeing, 6);
    }

    #[test]
    fn bratley_fox_differs_only_in_dimension_four() {
        let bf = DirectionTable::bratley_fox();
        let emb = DirectionTable::embedded();
        assert_eq!(bf.max_dim(), emb.max_dim());
        for j in 1..=bf.max_dim() {
            let same = (1..=bf.max_level()).all(|s| bf.numerator(j, s) == emb.numerator(j, s));
            assert_eq!(same, j != 4, "dimension {j}");
        }
        assert_eq!(bf.numerator(4, 3), 7);
        assert!(matches!(bf.check_reference(), Err(Error::Table(_))));
    }

    #[test]
    fn text_round_trip() {
        let t = DirectionTable::embedded();
        let parsed = DirectionTable::from_text(&t.to_text()).unwrap();
        assert_eq!(&parsed, t);
    }

    #[test]
    fn small_text_table() {
        let text = "\
# four dimensions, two levels
1 1 1
1 2 1
2 1 1
2 2 3
3 1 1
3 2 1
4 1 1
4 2 3
";
        let t = DirectionTable::from_text(text).unwrap();
        assert_eq!((t.max_dim(), t.max_level()), (4, 2));
        assert_eq!(t.direction(2, 2), DyadicFraction::new(3, 2).unwrap());
    }

    #[test]
    fn text_errors() {
        assert!(DirectionTable::from_text("").is_err());
        assert!(DirectionTable::from_text("1 1 1\n1 1 1\n").is_err());
        assert!(DirectionTable::from_text("1 1 1\n1 2 1\n2 1 1\n").is_err());
        // even numerator
        assert!(DirectionTable::from_text("1 1 1\n2 1 1\n1 2 2\n2 2 3\n").is_err());
        // too large
        assert!(DirectionTable::from_text("1 1 3\n").is_err());
        // disagrees with the reference directions
        assert!(DirectionTable::from_text("1 1 1\n1 2 1\n2 1 1\n2 2 1\n").is_err());
        assert!(DirectionTable::from_text("1 1 one\n").is_err());
    }

    #[test]
    fn recurrence_rejects_inconsistent_rows() {
        assert!(DirectionTable::from_polynomials(&[(7, &[1])], 10).is_err());
        assert!(DirectionTable::from_polynomials(&[(6, &[1, 1])], 10).is_err());
        assert!(DirectionTable::from_polynomials(&[(7, &[1, 2])], 10).is_err());
        assert!(DirectionTable::from_polynomials(&[(3, &[1])], 0).is_err());
    }
}
