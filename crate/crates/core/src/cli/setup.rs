use std::str::FromStr;

use crate::dunkl::{DunklContext, Multiplicity};
use crate::error::{Error, Result};
use crate::groups::{build_dihedral, build_symmetric, build_symmetric_reduced, GroupKind};
use crate::invariants::GeneratorSet;
use crate::scalars::{Cyclotomic, RatFun, Rational};

/// How the multiplicity function is filled in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    /// One symbol per conjugacy class.
    Symbolic,
    /// One symbol `c` shared by all classes.
    Equal,
    /// Fixed rational values; a single value is used for every class.
    Values(Vec<Rational>),
}

impl FromStr for Params {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "symbolic" => Ok(Params::Symbolic),
            "equal" => Ok(Params::Equal),
            list => list.split(',').map(|t| t.trim().parse::<Rational>()).collect::<Result<_>>().map(Params::Values),
        }
    }
}

impl Params {
    fn multiplicity<S: crate::scalars::Scalar>(&self, classes: usize) -> Result<Multiplicity<S>> {
        match self {
            Params::Symbolic => Ok(Multiplicity::symbolic(classes)),
            Params::Equal => Ok(Multiplicity::equal(classes)),
            Params::Values(v) if v.len() == 1 => Ok(Multiplicity::rational(&vec![v[0].clone(); classes])),
            Params::Values(v) if v.len() == classes => Ok(Multiplicity::rational(v)),
            Params::Values(v) => Err(Error::ArityMismatch { expected: classes, found: v.len() }),
        }
    }
}

/// A Dunkl context with its standard generators, over the right coefficient field.
pub enum Setup {
    Symmetric(DunklContext<RatFun<Rational>>, GeneratorSet<RatFun<Rational>>),
    Dihedral(DunklContext<RatFun<Cyclotomic>>, GeneratorSet<RatFun<Cyclotomic>>),
}

impl Setup {
    pub fn new(kind: GroupKind, params: &Params) -> Result<Self> {
        Ok(match kind {
            GroupKind::Symmetric(n) => {
                let g = build_symmetric(n)?;
                let mult = params.multiplicity(g.num_classes())?;
                Setup::Symmetric(DunklContext::new(g, mult)?, GeneratorSet::elementary(n))
            }
            GroupKind::SymmetricReduced(n) => {
                let g = build_symmetric_reduced(n)?;
                let mult = params.multiplicity(g.num_classes())?;
                Setup::Symmetric(DunklContext::new(g, mult)?, GeneratorSet::centred(n))
            }
            GroupKind::Dihedral(m) => {
                let g = build_dihedral(m)?;
                let mult = params.multiplicity(g.num_classes())?;
                Setup::Dihedral(DunklContext::new(g, mult)?, GeneratorSet::dihedral(m))
            }
        })
    }

    /// Order of the root of unity named `zeta` in serialized coefficients.
    pub fn zeta_order(&self) -> Option<u32> {
        match self {
            Setup::Symmetric(..) => None,
            Setup::Dihedral(ctx, _) => ctx.group.reflections[0].matrix.get(1, 0).order().into(),
        }
    }
}

/// Runs `$body` with `$ctx` and `$gens` bound for whichever field the setup uses.
macro_rules! with_setup {
    ($setup:expr, $ctx:ident, $gens:ident, $body:block) => {
        match &$setup {
            $crate::cli::Setup::Symmetric($ctx, $gens) => $body,
            $crate::cli::Setup::Dihedral($ctx, $gens) => $body,
        }
    };
}
