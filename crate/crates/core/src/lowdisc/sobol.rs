use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{DirectionTable, DyadicFraction, UnitPoint};
use crate::error::{Error, Result};

fn check_capacity(i: u64, dim: usize, table: &DirectionTable) -> Result<u32> {
    if i == 0 {
        return Err(Error::invalid("sequence index must be >= 1"));
    }
    if dim > table.max_dim() {
        return Err(Error::Capacity(format!(
            "Sobol point of dimension {dim} exceeds the direction table ({} dimensions)",
            table.max_dim()
        )));
    }
    let bits = 64 - i.leading_zeros();
    if bits > table.max_level() {
        return Err(Error::Capacity(format!(
            "index {i} has {bits} binary digits; the direction table has {} levels",
            table.max_level()
        )));
    }
    Ok(bits)
}

/// Sobol LP-tau point `i` as exact binary fractions.
///
/// With `i = e_m ... e_1` in binary, coordinate `j` is the mod-2 sum of the
/// `V_j^s` whose digit `e_s` is set. Every coordinate has level `m`.
pub fn sobol_point_exact(i: u64, dim: usize, table: &DirectionTable) -> Result<Vec<DyadicFraction>> {
    let bits = check_capacity(i, dim, table)?;
    Ok((1..=dim)
        .map(|j| {
            let row = table.row(j);
            let numerator = (0..bits)
                .filter(|s| (i >> s) & 1 == 1)
                .fold(0u64, |acc, s| acc ^ (row[s as usize] << (bits - 1 - s)));
            DyadicFraction::new(numerator, bits).expect("aligned numerator below 2^bits")
        })
        .collect())
}

pub fn sobol_point(i: u64, dim: usize, table: &DirectionTable) -> Result<UnitPoint> {
    Ok(UnitPoint::new(
        sobol_point_exact(i, dim, table)?
            .into_iter()
            .map(DyadicFraction::to_f64)
            .collect(),
    ))
}

/// Generator used for the pseudo-random coordinates of hybrid point `i`:
/// ChaCha with 8 rounds keyed by `seed`, stream number `i`. The algorithm is
/// fixed, so the coordinates are identical on every platform.
pub fn hybrid_rng(seed: u64, i: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    rng
}

/// Sobol coordinates for the dimensions the table covers, uniform
/// pseudo-random numbers in `[0, 1)` drawn from `rng` for the rest.
pub fn hybrid_point<R: Rng + ?Sized>(i: u64, dim: usize, table: &DirectionTable, rng: &mut R) -> Result<UnitPoint> {
    let covered = dim.min(table.max_dim());
    let mut coords = sobol_point(i, covered, table)?.into_inner();
    coords.extend((covered..dim).map(|_| rng.gen::<f64>()));
    Ok(UnitPoint::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> &'static DirectionTable {
        DirectionTable::embedded()
    }

    fn fractions(point: &[DyadicFraction]) -> Vec<(u64, u32)> {
        point
            .iter()
            .map(|d| (d.canonical().numerator(), d.canonical().level()))
            .collect()
    }

    #[test]
    fn worked_points() {
        let q13 = sobol_point_exact(13, 4, table()).unwrap();
        assert_eq!(fractions(&q13), [(11, 4), (13, 4), (13, 4), (15, 4)]);
        let q22 = sobol_point_exact(22, 4, table()).unwrap();
        assert_eq!(fractions(&q22), [(13, 5), (29, 5), (25, 5), (3, 5)]);
    }

    #[test]
    fn first_point_is_the_centre() {
        let p = sobol_point(1, 40, table()).unwrap();
        assert!(p.iter().all(|&c| c == 0.5));
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(sobol_point(1, 41, table()), Err(Error::Capacity(_))));
        assert!(matches!(sobol_point(1u64 << 32, 2, table()), Err(Error::Capacity(_))));
        assert!(sobol_point((1u64 << 32) - 1, 2, table()).is_ok());
        assert!(sobol_point(1u64 << 31, 2, table()).is_ok());
        assert!(matches!(sobol_point(0, 2, table()), Err(Error::InvalidArgument(_))));
        let shallow = DirectionTable::from_text(&shallow_table_text()).unwrap();
        assert!(sobol_point((1 << 20) - 1, 4, &shallow).is_ok());
        let err = sobol_point(1 << 20, 4, &shallow).unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
    }

    fn shallow_table_text() -> String {
        let t = table();
        let mut out = String::new();
        for j in 1..=4 {
            for s in 1..=20 {
                out.push_str(&format!("{j} {s} {}\n", t.numerator(j, s)));
            }
        }
        out
    }

    #[test]
    fn denominators_divide_two_to_the_bit_length() {
        for i in 1..5000u64 {
            let bits = 64 - i.leading_zeros();
            for c in sobol_point_exact(i, 40, table()).unwrap() {
                assert!(c.canonical().level() <= bits);
                assert!(c.numerator() > 0);
            }
        }
    }

    #[test]
    fn coordinates_are_distinct_within_dyadic_blocks() {
        let t = table();
        for m in 1..=10u32 {
            let n = (1u64 << m) - 1;
            for j in 1..=t.max_dim() {
                let mut seen: Vec<f64> = (1..=n).map(|i| sobol_point(i, j, t).unwrap()[j - 1]).collect();
                seen.sort_by(f64::total_cmp);
                seen.dedup();
                assert_eq!(seen.len() as u64, n, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn hybrid_without_missing_coordinates_is_sobol() {
        let t = table();
        let mut rng = hybrid_rng(7, 13);
        let h = hybrid_point(13, t.max_dim(), t, &mut rng).unwrap();
        assert_eq!(h, sobol_point(13, t.max_dim(), t).unwrap());
    }

    #[test]
    fn hybrid_extends_sobol_prefix() {
        let t = table();
        let dim = t.max_dim() + 2;
        let h = hybrid_point(13, dim, t, &mut hybrid_rng(42, 13)).unwrap();
        assert_eq!(h.dimension(), dim);
        assert_eq!(&h[..t.max_dim()], sobol_point(13, t.max_dim(), t).unwrap().coords());
        assert!(h[t.max_dim()..].iter().all(|c| (0.0..1.0).contains(c)));
    }

    #[test]
    fn hybrid_is_deterministic_per_seed_and_index() {
        let t = table();
        let dim = 60;
        let a = hybrid_point(99, dim, t, &mut hybrid_rng(5, 99)).unwrap();
        let b = hybrid_point(99, dim, t, &mut hybrid_rng(5, 99)).unwrap();
        assert_eq!(a, b);
        let c = hybrid_point(99, dim, t, &mut hybrid_rng(6, 99)).unwrap();
        assert_ne!(a, c);
        let d = hybrid_point(100, dim, t, &mut hybrid_rng(5, 100)).unwrap();
        assert_ne!(a[dim - 1], d[dim - 1]);
    }
}
