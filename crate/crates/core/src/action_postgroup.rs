//! Gauge post-groups `G^M` built from a finite right action of `G` on `M`.
//!
//! With the pointwise product and `(f ▷ g)(m) = g(m·f(m))`, the maps
//! `M → G` form a post-group whose Grossman–Larson product is
//! `(f * g)(m) = f(m).g(m·f(m))`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::finite_postgroup::{PostGroupError, PostGroupTable};
use crate::group::GroupTable;

pub const DEFAULT_SIZE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("duplicate or empty point name `{0}`")]
    PointName(String),
    #[error("action table has {found} rows for {expected} points")]
    Shape { found: usize, expected: usize },
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("action of {element} on {point} is missing")]
    Missing { point: String, element: String },
    #[error("unit law fails: {point}·e = {image}")]
    UnitLaw { point: String, image: String },
    #[error("right-action law fails: ({point}·{g})·{h} != {point}·({g}.{h})")]
    Composition { point: String, g: String, h: String },
    #[error("gauge maps do not match the action (expected {expected} points over {order} elements)")]
    Mismatch { expected: usize, order: usize },
    #[error("|G|^|M| = {order}^{points} exceeds the cap {cap}")]
    SizeCap { order: usize, points: usize, cap: usize },
    #[error("gauge tables are not a post-group: {0}")]
    NotPostGroup(PostGroupError),
}

/// A certified right action `M × G → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAction {
    group: GroupTable,
    points: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl RightAction {
    /// `table[m][g]` is `m·g`.
    pub fn new(group: GroupTable, points: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        for (i, p) in points.iter().enumerate() {
            if p.is_empty() || points[..i].contains(p) {
                return Err(ActionError::PointName(p.clone()));
            }
        }
        let (np, ng) = (points.len(), group.len());
        if table.len() != np || table.iter().any(|r| r.len() != ng || r.iter().any(|&q| q >= np)) {
            return Err(ActionError::Shape { found: table.len(), expected: np });
        }
        let e = group.unit();
        for m in 0..np {
            if table[m][e] != m {
                return Err(ActionError::UnitLaw { point: points[m].clone(), image: points[table[m][e]].clone() });
            }
        }
        for m in 0..np {
            for g in 0..ng {
                for h in 0..ng {
                    if table[table[m][g]][h] != table[m][group.mul(g, h)] {
                        return Err(ActionError::Composition {
                            point: points[m].clone(),
                            g: group.name(g).into(),
                            h: group.name(h).into(),
                        });
                    }
                }
            }
        }
        Ok(RightAction { group, points, table })
    }

    /// Builds from the nested name map used by the action file format.
    pub fn from_names(
        group: GroupTable,
        points: Vec<String>,
        action: &BTreeMap<String, BTreeMap<String, String>>,
    ) -> Result<Self, ActionError> {
        for p in action.keys() {
            if !points.contains(p) {
                return Err(ActionError::UnknownPoint(p.clone()));
            }
        }
        let mut table = Vec::with_capacity(points.len());
        for p in &points {
            let row = action.get(p);
            if let Some(row) = row {
                if let Some(g) = row.keys().find(|g| group.index_of(g).is_none()) {
                    return Err(ActionError::UnknownElement(g.clone()));
                }
            }
            let mut r = Vec::with_capacity(group.len());
            for g in group.names() {
                let target = row
                    .and_then(|row| row.get(g))
                    .ok_or_else(|| ActionError::Missing { point: p.clone(), element: g.clone() })?;
                let q = points
                    .iter()
                    .position(|x| x == target)
                    .ok_or_else(|| ActionError::UnknownPoint(target.clone()))?;
                r.push(q);
            }
            table.push(r);
        }
        RightAction::new(group, points, table)
    }

    /// `m·g = m` for every point.
    pub fn trivial(group: GroupTable, points: Vec<String>) -> Result<Self, ActionError> {
        let table = (0..points.len()).map(|m| vec![m; group.len()]).collect();
        RightAction::new(group, points, table)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn act(&self, m: usize, g: usize) -> usize {
        self.table[m][g]
    }

    pub fn name_map(&self) -> BTreeMap<String, BTreeMap<String, String>> {
        self.points
            .iter()
            .enumerate()
            .map(|(m, p)| {
                let row = self
                    .group
                    .names()
                    .iter()
                    .enumerate()
                    .map(|(g, gn)| (gn.clone(), self.points[self.table[m][g]].clone()))
                    .collect();
                (p.clone(), row)
            })
            .collect()
    }

    fn check(&self, f: &GaugeMap) -> Result<(), ActionError> {
        if f.0.len() != self.points.len() || f.0.iter().any(|&g| g >= self.group.len()) {
            return Err(ActionError::Mismatch { expected: self.points.len(), order: self.group.len() });
        }
        Ok(())
    }

    /// The constant map onto the unit.
    pub fn unit_map(&self) -> GaugeMap {
        GaugeMap(vec![self.group.unit(); self.points.len()])
    }

    /// `(f.g)(m) = f(m).g(m)`.
    pub fn gauge_dot(&self, f: &GaugeMap, g: &GaugeMap) -> Result<GaugeMap, ActionError> {
        self.check(f)?;
        self.check(g)?;
        Ok(GaugeMap(f.0.iter().zip(&g.0).map(|(&a, &b)| self.group.mul(a, b)).collect()))
    }

    /// `(f ▷ g)(m) = g(m·f(m))`.
    pub fn gauge_act(&self, f: &GaugeMap, g: &GaugeMap) -> Result<GaugeMap, ActionError> {
        self.check(f)?;
        self.check(g)?;
        Ok(GaugeMap((0..self.points.len()).map(|m| g.0[self.act(m, f.0[m])]).collect()))
    }

    /// `(f * g)(m) = f(m).g(m·f(m))`.
    pub fn gauge_gl(&self, f: &GaugeMap, g: &GaugeMap) -> Result<GaugeMap, ActionError> {
        self.check(f)?;
        self.check(g)?;
        Ok(GaugeMap(
            (0..self.points.len()).map(|m| self.group.mul(f.0[m], g.0[self.act(m, f.0[m])])).collect(),
        ))
    }

    /// All gauge maps, lexicographic with the first point most significant.
    pub fn enumerate_maps(&self, cap: usize) -> Result<Vec<GaugeMap>, ActionError> {
        let (order, points) = (self.group.len(), self.points.len());
        let too_big = || ActionError::SizeCap { order, points, cap };
        let total = u32::try_from(points)
            .ok()
            .and_then(|p| order.checked_pow(p))
            .filter(|&t| t <= cap)
            .ok_or_else(too_big)?;
        Ok((0..total)
            .map(|mut idx| {
                let mut v = vec![0; points];
                for slot in v.iter_mut().rev() {
                    *slot = idx % order;
                    idx /= order;
                }
                GaugeMap(v)
            })
            .collect())
    }

    pub fn map_name(&self, f: &GaugeMap) -> String {
        let parts: Vec<&str> = f.0.iter().map(|&g| self.group.name(g)).collect();
        format!("({})", parts.join(","))
    }

    fn map_index(&self, f: &GaugeMap) -> usize {
        f.0.iter().fold(0, |acc, &g| acc * self.group.len() + g)
    }

    /// Materializes `(G^M, ., ▷)` and validates it as a post-group.
    ///
    /// `f ▷ -` is a bijection only when `m ↦ m·f(m)` is one, which holds for
    /// every `f` exactly when the action is trivial; otherwise validation
    /// fails and the non-injective translation is returned as the witness.
    pub fn build_gauge_postgroup(&self, cap: usize) -> Result<PostGroupTable, ActionError> {
        let maps = self.enumerate_maps(cap)?;
        let names: Vec<String> = maps.iter().map(|f| self.map_name(f)).collect();
        let table = |op: &dyn Fn(&GaugeMap, &GaugeMap) -> GaugeMap| -> Vec<Vec<usize>> {
            maps.iter().map(|f| maps.iter().map(|g| self.map_index(&op(f, g))).collect()).collect()
        };
        let dot = table(&|f, g| self.gauge_dot(f, g).expect("enumerated maps"));
        let tri = table(&|f, g| self.gauge_act(f, g).expect("enumerated maps"));
        PostGroupTable::new(names, dot, tri).map_err(ActionError::NotPostGroup)
    }
}

/// A map `M → G`, one group element index per point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaugeMap(pub Vec<usize>);
