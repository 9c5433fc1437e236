use qalg::gen::Generate;
use qalg::models::{Disks, FuncTuple, Functions, Intervals, MatrixSets, Reals, Unions};
use qalg::spectrum::Spectral;
use qalg::{Elem, Normed, Scalar, Tag};

/// A model the suite can run on: generation, norm, units and spectra,
/// plus conversion to the tagged element form used in reports.
pub trait Instance: Generate + Normed + Spectral {
    fn label(&self) -> String {
        self.tag().name().to_string()
    }

    fn to_elem(&self, x: &Self::Elem) -> Elem<Self::Scalar>;

    fn from_elem(&self, e: &Elem<Self::Scalar>) -> Option<Self::Elem>;

    /// Links built by the chain properties.
    fn chain_len(&self) -> usize {
        10
    }
}

impl<S: Scalar> Instance for Reals<S> {
    fn to_elem(&self, x: &S) -> Elem<S> {
        Elem::Real(x.clone())
    }

    fn from_elem(&self, e: &Elem<S>) -> Option<S> {
        match e {
            Elem::Real(v) => Some(v.clone()),
            _ => None,
        }
    }
}

impl<S: Scalar> Instance for Intervals<S> {
    fn to_elem(&self, x: &Self::Elem) -> Elem<S> {
        Elem::Interval(x.clone())
    }

    fn from_elem(&self, e: &Elem<S>) -> Option<Self::Elem> {
        match e {
            Elem::Interval(v) => Some(v.clone()),
            _ => None,
        }
    }
}

impl<S: Scalar> Instance for Unions<S> {
    fn to_elem(&self, x: &Self::Elem) -> Elem<S> {
        Elem::Union(x.clone())
    }

    fn from_elem(&self, e: &Elem<S>) -> Option<Self::Elem> {
        match e {
            Elem::Union(v) => Some(v.clone()),
            _ => None,
        }
    }
}

impl<S: Scalar> Instance for Disks<S> {
    fn to_elem(&self, x: &Self::Elem) -> Elem<S> {
        Elem::Disk(x.clone())
    }

    fn from_elem(&self, e: &Elem<S>) -> Option<Self::Elem> {
        match e {
            Elem::Disk(v) => Some(v.clone()),
            _ => None,
        }
    }
}

impl<S: Scalar> Instance for MatrixSets<S> {
    fn to_elem(&self, x: &Self::Elem) -> Elem<S> {
        Elem::MatrixSet(x.clone())
    }

    fn from_elem(&self, e: &Elem<S>) -> Option<Self::Elem> {
        match e {
            Elem::MatrixSet(v) => Some(v.clone()),
            _ => None,
        }
    }

    // Finite sets grow cubically along a chain.
    fn chain_len(&self) -> usize {
        2
    }
}

impl<M: Instance> Instance for Functions<M> {
    fn to_elem(&self, x: &FuncTuple<M::Elem>) -> Elem<M::Scalar> {
        Elem::Func(FuncTuple::new(x.values.iter().map(|v| self.base.to_elem(v)).collect()))
    }

    fn from_elem(&self, e: &Elem<M::Scalar>) -> Option<FuncTuple<M::Elem>> {
        match e {
            Elem::Func(f) if f.len() == self.size => {
                f.values.iter().map(|v| self.base.from_elem(v)).collect::<Option<Vec<_>>>().map(FuncTuple::new)
            }
            _ => None,
        }
    }

    fn chain_len(&self) -> usize {
        self.base.chain_len()
    }
}

/// Instances the suite knows by name.
pub const INSTANCES: [&str; 7] = ["real", "interval", "union", "disk", "matrixset", "func", "morphisms"];

pub fn is_known(name: &str) -> bool {
    INSTANCES.contains(&name)
}

/// Tag of a model instance name; `None` for the morphism suite.
pub fn instance_tag(name: &str) -> Option<Tag> {
    Tag::parse(name)
}
