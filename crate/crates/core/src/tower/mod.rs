//! Chart combinatorics of the monster tower.
//!
//! A chart `C(p1...pk)` on `S(k)` has `k + 2` coordinates: `x1`, `x2`, and one
//! new coordinate per level. Appending `q` to a chart introduces
//! `x_{q̄}(...q) = d x_{q̄}(...) / d x_q(...)` and keeps `x_q(...)` as the
//! retained coordinate; the parent's other active coordinate is deactivated.

mod chart;

use std::collections::BTreeSet;

use num_traits::Zero;
use thiserror::Error;

pub use chart::{ChartString, Symbol};

use crate::kernel::{Rational, VarName};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TowerError {
    #[error("invalid chart string {input:?}: unexpected {found:?} at position {position}")]
    BadChartString {
        input: String,
        position: usize,
        found: char,
    },
    #[error("cannot project {levels} levels from level {level}")]
    ProjectionTooDeep { levels: usize, level: usize },
    #[error("last coordinate is zero; the point lies in no sibling chart")]
    LastCoordinateZero,
    #[error("a point of the base chart has no fiber coordinate")]
    NoFiberCoordinate,
    #[error("chart {chart} has {expected} coordinates, got {got}")]
    WrongCoordinateCount {
        chart: String,
        expected: usize,
        got: usize,
    },
}

/// How a chart was obtained from its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// `N = dn/dr`; the appended symbol repeats the previous one.
    Regular,
    /// `N = dr/dn`; the appended symbol differs from the previous one.
    Critical,
}

impl std::fmt::Display for StepKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StepKind::Regular => "regular",
            StepKind::Critical => "critical",
        })
    }
}

/// Append `q` to `chart`. Level-1 steps are regular by convention.
pub fn child_chart(chart: &ChartString, q: Symbol) -> (ChartString, StepKind) {
    let kind = match chart.last() {
        Some(last) if last != q => StepKind::Critical,
        _ => StepKind::Regular,
    };
    (chart.child(q), kind)
}

/// Step kind of the last symbol of a nonempty chart.
pub fn step_kind(chart: &ChartString) -> Option<StepKind> {
    let q = chart.last()?;
    Some(child_chart(&chart.parent()?, q).1)
}

/// The `k + 2` non-redundant coordinates of a chart: `x1`, `x2`, then the
/// coordinate introduced at each level.
pub fn chart_coordinates(chart: &ChartString) -> Vec<VarName> {
    let mut out = vec![VarName::x1(), VarName::x2()];
    for len in 1..=chart.len() {
        let prefix = chart.prefix(len);
        let q = prefix.last().unwrap();
        out.push(VarName::coord(q.opposite(), &prefix));
    }
    out
}

/// The named coordinates of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartFrame {
    pub chart: ChartString,
    /// `n`: the coordinate introduced at the top level.
    pub new_coord: VarName,
    /// `r`: the other active coordinate.
    pub retained_coord: VarName,
    /// `d`: the parent's active coordinate that was not retained.
    pub deactivated_coord: Option<VarName>,
    /// Every coordinate other than `n` and `r`, in chart order.
    pub inactive_coords: Vec<VarName>,
    pub step_kind: Option<StepKind>,
}

/// Named coordinates of `chart`.
///
/// On the base chart both `x1` and `x2` are active and either may be
/// retained; the frame reports `n = x2`, `r = x1`.
pub fn chart_frame(chart: &ChartString) -> ChartFrame {
    let coords = chart_coordinates(chart);
    let (new_coord, retained_coord, deactivated_coord) = match chart.last() {
        None => (VarName::x2(), VarName::x1(), None),
        Some(q) => {
            let parent = chart.parent().unwrap();
            (
                VarName::coord(q.opposite(), chart),
                VarName::coord(q, chart),
                Some(VarName::coord(q.opposite(), &parent)),
            )
        }
    };
    let inactive_coords = coords
        .into_iter()
        .filter(|v| *v != new_coord && *v != retained_coord)
        .collect();
    ChartFrame {
        chart: chart.clone(),
        new_coord,
        retained_coord,
        deactivated_coord,
        inactive_coords,
        step_kind: step_kind(chart),
    }
}

/// A point of a chart, given by its `k + 2` coordinate values in
/// [`chart_coordinates`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerPoint {
    chart: ChartString,
    coords: Vec<Rational>,
}

impl TowerPoint {
    pub fn new(chart: ChartString, coords: Vec<Rational>) -> Result<Self, TowerError> {
        let expected = chart.len() + 2;
        if coords.len() != expected {
            return Err(TowerError::WrongCoordinateCount {
                chart: chart.to_string(),
                expected,
                got: coords.len(),
            });
        }
        Ok(TowerPoint { chart, coords })
    }

    /// The node `N(chart)`: the origin of its chart.
    pub fn node(chart: &ChartString) -> Self {
        TowerPoint {
            chart: chart.clone(),
            coords: vec![Rational::zero(); chart.len() + 2],
        }
    }

    pub fn chart(&self) -> &ChartString {
        &self.chart
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Image under `levels` projections: forget the top coordinates.
    pub fn project(&self, levels: usize) -> Result<TowerPoint, TowerError> {
        let chart = self.chart.project(levels)?;
        let keep = chart.len() + 2;
        Ok(TowerPoint {
            chart,
            coords: self.coords[..keep].to_vec(),
        })
    }

    /// The same point in the sibling chart at the top level: every
    /// coordinate unchanged except the last, which is inverted.
    pub fn transition_last(&self) -> Result<TowerPoint, TowerError> {
        let sibling = self.chart.sibling().ok_or(TowerError::NoFiberCoordinate)?;
        let last = self.coords.last().unwrap();
        if last.is_zero() {
            return Err(TowerError::LastCoordinateZero);
        }
        let mut coords = self.coords.clone();
        *coords.last_mut().unwrap() = last.recip();
        Ok(TowerPoint {
            chart: sibling,
            coords,
        })
    }
}

/// Every chart at the node's level that contains `N(chart)`.
///
/// A chart `C(c')` can only contain a point whose projections all lie in the
/// matching prefixes `C(c'[..i])`. At each level the projected node is
/// checked against its own chart and, through [`TowerPoint::transition_last`],
/// against the sibling; all `2^k` candidates are then filtered by those
/// per-level answers.
pub fn charts_containing_node(chart: &ChartString) -> BTreeSet<ChartString> {
    let k = chart.len();
    let node = TowerPoint::node(chart);
    // reachable[i]: level-(i+1) charts containing the projection of the node
    let reachable: Vec<BTreeSet<ChartString>> = (1..=k)
        .map(|level| {
            let image = node.project(k - level).unwrap();
            let mut set = BTreeSet::from([image.chart().clone()]);
            if let Ok(moved) = image.transition_last() {
                set.insert(moved.chart().clone());
            }
            set
        })
        .collect();
    ChartString::all_of_length(k)
        .into_iter()
        .filter(|candidate| {
            (1..=k).all(|level| reachable[level - 1].contains(&candidate.prefix(level)))
        })
        .collect()
}
