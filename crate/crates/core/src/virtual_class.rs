//! Virtual fundamental classes `{c(E) ∩ s(X, Y)}_{dim Y - rank E}` for split
//! obstruction bundles, excess intersection, and cone-component contributions.

use crate::chow::{cap, chern_of_twists, dim_part, series_inverse, series_mul, Bundle, ChowClass};
use crate::cone::SchemePresentation;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::rational::rat;
use crate::segre::segre;

/// `E = ⊕ O(a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTwists(Vec<i64>);

impl ObstructionTwists {
    pub fn new(twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::Rank("an obstruction bundle needs rank at least 1".into()));
        }
        Ok(ObstructionTwists(twists))
    }

    pub fn twists(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn bundle(&self, ambient_dim: usize) -> Bundle {
        Bundle::from_twists(&self.0, ambient_dim)
    }
}

/// A class together with non-fatal diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualClass {
    pub class: ChowClass,
    pub virtual_dim: i64,
    pub warnings: Vec<String>,
}

/// The twists must be the generator degrees unless containment of the cone
/// in `E` is attested.
fn check_twists(x: &SchemePresentation, e: &ObstructionTwists, attested: bool) -> Result<()> {
    let mut degs: Vec<i64> = x.generators().iter().filter_map(|g| g.total_degree()).map(|d| d as i64).collect();
    let mut tw = e.twists().to_vec();
    degs.sort_unstable();
    tw.sort_unstable();
    if degs == tw || attested {
        Ok(())
    } else {
        Err(Error::UnattestedTwists(format!("twists {:?} differ from generator degrees {:?}", e.twists(), degs)))
    }
}

/// `{c(E) ∩ s(X, Y)}_{k - r}` with `k = dim Y` and `r = rank E`.
pub fn virtual_class(x: &SchemePresentation, e: &ObstructionTwists, ctx: &mut Context) -> Result<VirtualClass> {
    check_twists(x, e, ctx.options.attest_containment)?;
    let m = x.ambient_dim();
    let k = x.dim_y(&ctx.budget)?;
    let vd = k - e.rank() as i64;
    if vd < 0 {
        return Ok(VirtualClass {
            class: ChowClass::zero(m),
            virtual_dim: vd,
            warnings: vec![format!("negative virtual dimension {}", vd)],
        });
    }
    let s = segre(x, ctx)?;
    let class = dim_part(&cap(&chern_of_twists(e.twists(), m), &s)?, vd as usize)?;
    Ok(VirtualClass { class, virtual_dim: vd, warnings: Vec::new() })
}

/// For a regular embedding with normal bundle `N ⊂ E`:
/// `{c(E) c(N)^-1 ∩ [X]}_{dim X - (rank E - rank N)}`.
pub fn excess_virtual_class(normal: &Bundle, e: &ObstructionTwists, fundamental: &ChowClass) -> Result<ChowClass> {
    let m = fundamental.ambient_dim();
    if normal.chern.ambient_dim() != m {
        return Err(Error::DimensionMismatch(format!("normal bundle on P^{}, class on P^{}", normal.chern.ambient_dim(), m)));
    }
    if e.rank() < normal.rank {
        return Err(Error::Rank(format!("rank E = {} is less than rank N = {}", e.rank(), normal.rank)));
    }
    let Some(dx) = fundamental.top_dimension() else {
        return Ok(ChowClass::zero(m));
    };
    let excess = e.rank() - normal.rank;
    if excess > dx {
        return Ok(ChowClass::zero(m));
    }
    let c = series_mul(&chern_of_twists(e.twists(), m), &series_inverse(&normal.chern))?;
    dim_part(&cap(&c, fundamental)?, dx - excess)
}

/// A piece of the normal cone, described by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    /// A subbundle `W ⊂ E` over a support class.
    Subbundle { bundle: Bundle, support: ChowClass },
    /// The whole fiber of `E` over a point, with multiplicity.
    PointFiber { multiplicity: u64 },
}

/// `0_E^! [C_i]` for one cone component.
pub fn component_contribution(kind: &ComponentKind, e: &ObstructionTwists, ambient_dim: usize) -> Result<ChowClass> {
    match kind {
        ComponentKind::PointFiber { multiplicity } => Ok(ChowClass::point(ambient_dim, rat(*multiplicity as i64))),
        ComponentKind::Subbundle { bundle, support } => {
            if support.ambient_dim() != ambient_dim {
                return Err(Error::DimensionMismatch(format!("support on P^{}, expected P^{}", support.ambient_dim(), ambient_dim)));
            }
            if bundle.rank > e.rank() {
                return Err(Error::Rank(format!("subbundle of rank {} in E of rank {}", bundle.rank, e.rank())));
            }
            let Some(ds) = support.top_dimension() else {
                return Ok(ChowClass::zero(ambient_dim));
            };
            let vd = ds as i64 + bundle.rank as i64 - e.rank() as i64;
            if vd < 0 {
                return Ok(ChowClass::zero(ambient_dim));
            }
            let c = series_mul(&chern_of_twists(e.twists(), ambient_dim), &series_inverse(&bundle.chern))?;
            dim_part(&cap(&c, support)?, vd as usize)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::ChernSeries;
    use crate::poly::PolyRing;

    fn tw(v: &[i64]) -> ObstructionTwists {
        ObstructionTwists::new(v.to_vec()).unwrap()
    }

    fn class(m: usize, c: &[i64]) -> ChowClass {
        ChowClass::from_ints(m, c).unwrap()
    }

    #[test]
    fn double_point_line_plane_and_cubic() {
        let mut ctx = Context::new(0);
        let p2 = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let p3 = PolyRing::with_names(&["x", "y", "z", "w"]).unwrap();
        let x = SchemePresentation::projective(&p2, &["x^2", "x*y"]).unwrap();
        assert_eq!(virtual_class(&x, &tw(&[2, 2]), &mut ctx).unwrap().class, class(2, &[0, 0, 4]));
        let x = SchemePresentation::projective(&p3, &["x*z", "y*z"]).unwrap();
        assert_eq!(virtual_class(&x, &tw(&[2, 2]), &mut ctx).unwrap().class, class(3, &[0, 0, 4, 0]));
        let x = SchemePresentation::projective(&p3, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        assert_eq!(virtual_class(&x, &tw(&[2, 2, 2]), &mut ctx).unwrap().class, class(3, &[0, 0, 0, 8]));
    }

    #[test]
    fn twists_need_attestation() {
        let mut ctx = Context::new(0);
        let p2 = PolyRing::with_names(&["x", "y", "z"]).unwrap();
        let x = SchemePresentation::projective(&p2, &["x^2", "x*y"]).unwrap();
        assert!(matches!(virtual_class(&x, &tw(&[3, 3]), &mut ctx), Err(Error::UnattestedTwists(_))));
        ctx.options.attest_containment = true;
        assert!(virtual_class(&x, &tw(&[3, 3]), &mut ctx).is_ok());
        let v = virtual_class(&x, &tw(&[2, 2, 2, 2]), &mut ctx).unwrap();
        assert!(v.class.is_zero());
        assert_eq!(v.warnings.len(), 1);
    }

    #[test]
    fn excess() {
        let n = Bundle::new(2, ChernSeries::new(3, vec![rat(1), crate::rational::ratio(10, 3)]).unwrap());
        let c = class(3, &[0, 0, 3, 0]);
        assert_eq!(excess_virtual_class(&n, &tw(&[2, 2, 2]), &c).unwrap(), class(3, &[0, 0, 0, 8]));
        let line = class(3, &[0, 0, 1, 0]);
        let n = Bundle::from_twists(&[1, 1], 3);
        assert_eq!(excess_virtual_class(&n, &tw(&[1, 1]), &line).unwrap(), line);
        assert_eq!(excess_virtual_class(&n, &tw(&[1, 1, 2]), &line).unwrap(), class(3, &[0, 0, 0, 2]));
        assert!(matches!(excess_virtual_class(&n, &tw(&[1]), &line), Err(Error::Rank(_))));
    }

    #[test]
    fn components() {
        let e = tw(&[2, 2]);
        let pt = component_contribution(&ComponentKind::PointFiber { multiplicity: 2 }, &e, 2).unwrap();
        assert_eq!(pt, class(2, &[0, 0, 2]));
        let l = ComponentKind::Subbundle { bundle: Bundle::from_twists(&[2], 2), support: class(2, &[0, 1, 0]) };
        assert_eq!(component_contribution(&l, &e, 2).unwrap(), class(2, &[0, 0, 2]));
        let h = ComponentKind::Subbundle { bundle: Bundle::from_twists(&[2], 3), support: class(3, &[0, 1, 0, 0]) };
        assert_eq!(component_contribution(&h, &e, 3).unwrap(), class(3, &[0, 0, 2, 0]));
        let l1 = ComponentKind::Subbundle { bundle: Bundle::from_twists(&[2, 2], 3), support: class(3, &[0, 0, 1, 0]) };
        assert_eq!(component_contribution(&l1, &e, 3).unwrap(), class(3, &[0, 0, 1, 0]));
        let big = ComponentKind::Subbundle { bundle: Bundle::from_twists(&[2, 2, 2], 3), support: class(3, &[0, 0, 1, 0]) };
        assert!(matches!(component_contribution(&big, &e, 3), Err(Error::Rank(_))));
    }
}
