use crate::error::{Error, Result};
use crate::table::{is_associative, CayleyTable, Loop, Magma};

/// Chein double `M(G, 2)` on `G x {0, 1}`, with `(g, 1)` stored as `g + |G|`:
///
/// ```text
/// (g,0)(h,0) = (gh, 0)      (g,0)(h,1) = (hg, 1)
/// (g,1)(h,0) = (gh^-1, 1)   (g,1)(h,1) = (h^-1 g, 0)
/// ```
///
/// Moufang for every group, associative iff `G` is abelian.
pub fn chein_double(group: &Loop) -> Result<Loop> {
    if !is_associative(group).holds {
        return Err(Error::InvalidGroup("Chein doubling needs an associative base".into()));
    }
    let n = group.order();
    let m = Magma::from_fn(2 * n, |a, b| {
        let (g, s) = (a % n, a / n);
        let (h, t) = (b % n, b / n);
        match (s, t) {
            (0, 0) => group.mul(g, h),
            (0, _) => group.mul(h, g) + n,
            (_, 0) => group.mul(g, group.inv(h)) + n,
            _ => group.mul(group.inv(h), g),
        }
    });
    Loop::new(CayleyTable::new(m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::groups;
    use crate::table::{inverse_properties, is_moufang, is_right_bol};

    #[test]
    fn double_of_s3_is_nonassociative_moufang() {
        let m = chein_double(&groups::symmetric3()).unwrap();
        assert_eq!(m.order(), 12);
        assert!(is_moufang(&m).holds);
        assert!(is_right_bol(&m).holds);
        assert!(!is_associative(&m).holds);
        let ip = inverse_properties(&m);
        assert!(ip.right_ip && ip.left_ip);
    }

    #[test]
    fn double_of_abelian_group_is_a_group() {
        let m = chein_double(&groups::cyclic(3)).unwrap();
        assert!(is_associative(&m).holds);
    }
}
