use crate::boolean::{DecisionList, Depth2Circuit, DomCircuit, SymmetricProfile};

/// Reference evaluator for the function an anchor set claims to represent.
///
/// Inputs handed to [`Oracle::eval`] always have length [`Oracle::arity`].
pub trait Oracle: Sync {
    fn arity(&self) -> usize;

    fn eval(&self, x: &[bool]) -> bool;

    /// Top profile of a symmetric circuit, for type tracing.
    fn top_profile(&self) -> Option<&SymmetricProfile> {
        None
    }

    /// `|Z(X)|`, the number of firing first-layer gates.
    fn active_count(&self, _x: &[bool]) -> Option<usize> {
        None
    }
}

impl Oracle for Depth2Circuit {
    fn arity(&self) -> usize {
        Depth2Circuit::arity(self)
    }

    fn eval(&self, x: &[bool]) -> bool {
        Depth2Circuit::eval(self, x).expect("verifier passes full-width inputs")
    }

    fn top_profile(&self) -> Option<&SymmetricProfile> {
        Some(self.top())
    }

    fn active_count(&self, x: &[bool]) -> Option<usize> {
        Depth2Circuit::active_count(self, x).ok()
    }
}

impl Oracle for DecisionList {
    fn arity(&self) -> usize {
        DecisionList::arity(self)
    }

    fn eval(&self, x: &[bool]) -> bool {
        DecisionList::eval(self, x).expect("verifier passes full-width inputs")
    }
}

impl Oracle for DomCircuit {
    fn arity(&self) -> usize {
        DomCircuit::arity(self)
    }

    fn eval(&self, x: &[bool]) -> bool {
        DomCircuit::eval(self, x).expect("verifier passes full-width inputs")
    }
}

/// Wraps a plain function of the input bits.
pub struct FnOracle<F> {
    arity: usize,
    f: F,
}

impl<F: Fn(&[bool]) -> bool + Sync> FnOracle<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnOracle { arity, f }
    }
}

impl<F: Fn(&[bool]) -> bool + Sync> Oracle for FnOracle<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn eval(&self, x: &[bool]) -> bool {
        (self.f)(x)
    }
}

impl<O: Oracle + ?Sized> Oracle for &O {
    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn eval(&self, x: &[bool]) -> bool {
        (**self).eval(x)
    }

    fn top_profile(&self) -> Option<&SymmetricProfile> {
        (**self).top_profile()
    }

    fn active_count(&self, x: &[bool]) -> Option<usize> {
        (**self).active_count(x)
    }
}
