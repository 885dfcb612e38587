use crate::kernel::{Polynomial, VarName};
use crate::tower::{ChartString, Symbol};

/// `f, Df, D^2 f, ...` where `D = d/dx + y' d/dy + y'' d/dy' + ...` is the
/// total derivative along `y = y(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitSystem {
    pub x: VarName,
    pub y: VarName,
    pub equations: Vec<Polynomial>,
}

/// `y^(j)` as a variable; `y` itself for `j = 0`.
fn jet(y: &VarName, j: u32) -> VarName {
    if j == 0 {
        y.clone()
    } else {
        VarName::Jet(j)
    }
}

pub fn total_derivative(g: &Polynomial, x: &VarName, y: &VarName) -> Polynomial {
    let mut out = g.derivative(x);
    for v in g.variables() {
        let order = if v == *y {
            0
        } else if let VarName::Jet(j) = v {
            j
        } else {
            continue;
        };
        out = out + g.derivative(&v) * Polynomial::var(jet(y, order + 1));
    }
    out
}

/// The first `k` total derivatives of `f(x, y) = 0`, introducing the jet
/// variables `y', ..., y^(k)`. Any other variable is a constant.
pub fn implicit_system(f: &Polynomial, k: usize, x: &VarName, y: &VarName) -> ImplicitSystem {
    let mut equations = vec![f.clone()];
    for _ in 0..k {
        let next = total_derivative(equations.last().unwrap(), x, y);
        equations.push(next);
    }
    ImplicitSystem {
        x: x.clone(),
        y: y.clone(),
        equations,
    }
}

/// Chart coordinate standing for `y^(j)` in the all-regular chart
/// `C(1...1)`: `x2(1^j)`, the `j`-th derivative of `x2` by `x1`.
pub fn jet_coordinate(j: u32) -> VarName {
    VarName::coord(Symbol::Two, &ChartString::repeat(Symbol::One, j as usize))
}

impl ImplicitSystem {
    /// Rewrite in chart coordinates: `x -> x1`, `y -> x2`,
    /// `y^(j) -> x2(1^j)`.
    pub fn in_regular_chart(&self) -> Vec<Polynomial> {
        let rename = |v: &VarName| {
            if *v == self.x {
                VarName::x1()
            } else if *v == self.y {
                VarName::x2()
            } else if let VarName::Jet(j) = v {
                jet_coordinate(*j)
            } else {
                v.clone()
            }
        };
        self.equations.iter().map(|e| e.rename(rename)).collect()
    }
}
