//! Closed-form structure predictions for fields with `D = {0}`.

use alloc::format;
use alloc::vec;

use crate::arith;
use crate::graph::Dist;
use crate::ring::FieldParams;
use crate::structure::{ComponentClass, StructureReport};
use crate::Error;

fn field_params(m: u64, n: u32) -> Result<(u64, u32, FieldParams), Error> {
    let (p, k) =
        arith::prime_power(m).ok_or_else(|| Error::OutOfDomain(format!("{m} is not a prime power")))?;
    Ok((p, k, FieldParams::new(m, n)?))
}

/// Whole graph of `F_m`, `m = 2^k`: `alpha` copies of `K_d` plus the isolated 0.
pub fn predict_field_char2(m: u64, n: u32) -> Result<StructureReport, Error> {
    let (p, _, fp) = field_params(m, n)?;
    if p != 2 {
        return Err(Error::OutOfDomain(format!("{m} is not a power of 2")));
    }
    let classes = vec![
        (ComponentClass::Complete(fp.d as u32), fp.alpha as usize),
        (ComponentClass::Isolated, 1),
    ];
    Ok(StructureReport::from_classes(classes).expect("no Other classes"))
}

/// Graph on `F_m \ {0}` for odd `m`: edgeless when `alpha` is odd, otherwise
/// `alpha/2` copies of `K_{d,d}`.
pub fn predict_field_odd_char(m: u64, n: u32) -> Result<StructureReport, Error> {
    let (p, _, fp) = field_params(m, n)?;
    if p == 2 {
        return Err(Error::OutOfDomain(format!("{m} is even")));
    }
    let classes = if fp.alpha % 2 == 1 {
        vec![(ComponentClass::Isolated, (m - 1) as usize)]
    } else {
        let d = fp.d as u32;
        vec![(ComponentClass::CompleteBipartite(d, d), (fp.alpha / 2) as usize)]
    };
    Ok(StructureReport::from_classes(classes).expect("no Other classes"))
}

/// Whether `F_m \ {0}` is connected for odd `m`: exactly when `d = (m-1)/2`.
pub fn predict_connectivity_corollary(m: u64, n: u32) -> Result<bool, Error> {
    let (p, _, fp) = field_params(m, n)?;
    if p == 2 {
        return Err(Error::OutOfDomain(format!("{m} is even")));
    }
    Ok(fp.d == (m - 1) / 2)
}

/// Range check on a field's `R \ D` report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RangeCheck {
    /// Every component diameter is 0, 1 or 2.
    pub component_diameters: bool,
    /// Whole-graph diameter is 0, 1, 2 or infinite.
    pub diameter: bool,
    /// Girth is 3, 4 or infinite.
    pub girth: bool,
}

impl RangeCheck {
    pub fn holds(&self) -> bool {
        self.component_diameters && self.diameter && self.girth
    }
}

pub fn predict_diam_girth_ranges(report: &StructureReport) -> RangeCheck {
    RangeCheck {
        component_diameters: report.component_diameters.iter().all(|&d| d <= 2),
        diameter: matches!(report.diameter, Dist::Finite(0..=2) | Dist::Infinite),
        girth: matches!(
            report.girth,
            Dist::Finite(3) | Dist::Finite(4) | Dist::Infinite
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char2_examples() {
        let r = predict_field_char2(4, 3).unwrap();
        assert_eq!(
            r.classes,
            vec![(ComponentClass::Isolated, 1), (ComponentClass::Complete(3), 1)]
        );
        let r = predict_field_char2(4, 5).unwrap();
        assert_eq!(r.classes, vec![(ComponentClass::Isolated, 4)]);
        assert!(r.totally_disconnected);
        let r = predict_field_char2(2, 7).unwrap();
        assert_eq!(r.classes, vec![(ComponentClass::Isolated, 2)]);
        assert!(predict_field_char2(9, 1).is_err());
        assert!(predict_field_char2(6, 1).is_err());
    }

    #[test]
    fn odd_char_examples() {
        let r = predict_field_odd_char(7, 3).unwrap();
        assert_eq!(r.classes, vec![(ComponentClass::CompleteBipartite(3, 3), 1)]);
        assert_eq!(r.diameter, Dist::Finite(2));
        assert_eq!(r.girth, Dist::Finite(4));
        let r = predict_field_odd_char(9, 5).unwrap();
        assert_eq!(r.classes, vec![(ComponentClass::CompleteBipartite(1, 1), 4)]);
        let r = predict_field_odd_char(5, 1).unwrap();
        assert_eq!(r.classes, vec![(ComponentClass::CompleteBipartite(1, 1), 2)]);
        // alpha = 6/gcd(2,6) = 3 is odd
        let r = predict_field_odd_char(7, 2).unwrap();
        assert!(r.totally_disconnected);
        assert!(predict_field_odd_char(8, 1).is_err());
    }

    #[test]
    fn corollary_examples() {
        assert!(predict_connectivity_corollary(7, 3).unwrap());
        assert!(!predict_connectivity_corollary(9, 5).unwrap());
        assert!(predict_connectivity_corollary(3, 1).unwrap());
    }

    #[test]
    fn ranges() {
        let r = predict_field_odd_char(7, 3).unwrap();
        assert!(predict_diam_girth_ranges(&r).holds());
        let r = predict_field_odd_char(9, 5).unwrap();
        let c = predict_diam_girth_ranges(&r);
        assert!(c.holds());
        assert_eq!(r.diameter, Dist::Infinite);
        assert_eq!(r.component_diameters, vec![1; 4]);
    }
}
