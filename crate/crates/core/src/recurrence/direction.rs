use serde::{Deserialize, Serialize};

use crate::config::ConfigMatrix;
use crate::error::{Error, Result};
use crate::hgm::fiber::FiberWalk;

/// A direction `H ∈ N_0·A` together with a certificate `h`, `Ah = H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Direction {
    #[serde(rename = "H")]
    pub big_h: Vec<i64>,
    pub h: Vec<u32>,
}

impl Direction {
    /// The column direction `a_i` with `h = e_i` (0-based `i`).
    pub fn column(a: &ConfigMatrix, i: usize) -> Self {
        let mut h = vec![0; a.n()];
        h[i] = 1;
        Direction { big_h: a.column(i), h }
    }
}

/// Minimizes `w·h` over `{h ∈ N_0^n : Ah = H}` by enumerating the fiber of
/// `H`; ties go to the lexicographically largest `h`. Default `w` is all ones.
pub fn decompose_direction(a: &ConfigMatrix, big_h: &[i64], w: Option<&[i64]>) -> Result<Direction> {
    a.check_len("H", big_h)?;
    if let Some(w) = w {
        if w.len() != a.n() {
            return Err(Error::invalid("weights", format!("expected {} entries, got {}", a.n(), w.len())));
        }
    }
    let weight = |u: &[u32]| -> i64 {
        match w {
            Some(w) => u.iter().zip(w).map(|(&x, &y)| x as i64 * y).sum(),
            None => u.iter().map(|&x| x as i64).sum(),
        }
    };
    let mut best: Option<(i64, Vec<u32>)> = None;
    FiberWalk::new(a).for_each(big_h, |u| {
        let c = weight(u);
        let better = match &best {
            None => true,
            Some((bc, bu)) => c < *bc || (c == *bc && u > bu.as_slice()),
        };
        if better {
            best = Some((c, u.to_vec()));
        }
        true
    });
    match best {
        Some((_, h)) => Ok(Direction {
            big_h: big_h.to_vec(),
            h,
        }),
        None => Err(Error::NotInSemigroup(big_h.to_vec())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_directions() {
        let a = ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(decompose_direction(&a, &[1, 1, 1], None).unwrap().h, vec![0, 0, 0, 1]);
        for i in 0..4 {
            assert_eq!(decompose_direction(&a, &a.column(i), None).unwrap(), Direction::column(&a, i));
        }
        assert_eq!(decompose_direction(&a, &[0, 0, 0], None).unwrap().h, vec![0; 4]);
        assert!(matches!(decompose_direction(&a, &[0, 1, 0], None), Err(Error::NotInSemigroup(_))));

        let cube = ConfigMatrix::new(vec![
            vec![1; 8],
            vec![0, 1, 0, 0, 1, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 0, 1, 1],
            vec![0, 0, 0, 1, 0, 1, 1, 1],
        ])
        .unwrap();
        let d = decompose_direction(&cube, &[3, 1, 1, 1], None).unwrap();
        assert_eq!(d.h, vec![2, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn weights_change_the_choice() {
        let a = ConfigMatrix::new(vec![vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        // (2,1,1) = a1 + a4 = a2 + a3
        assert_eq!(decompose_direction(&a, &[2, 1, 1], None).unwrap().h, vec![1, 0, 0, 1]);
        let w = [5, 1, 1, 5];
        assert_eq!(decompose_direction(&a, &[2, 1, 1], Some(&w)).unwrap().h, vec![0, 1, 1, 0]);
    }
}
