//! Gadget constructions that embed decision problems into clustered
//! shortest-path instances.
//!
//! Each construction produces an instance whose optimal value is at most
//! `satThreshold` exactly when the source problem has a solution, and at
//! least `unsatThreshold` otherwise; no instance lands strictly between
//! the two. The certificate carries everything needed to re-derive the
//! instance and check the gap.

use serde::Serialize;
use serde_json::Value;

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::instance::ClusteredInstance;
use crate::reductions::cnf::CnfFormula;
use crate::reductions::x3c::X3cInstance;

/// Refuse to materialize gadget graphs beyond this many vertices.
const GADGET_VERTEX_LIMIT: usize = 5_000_000;

/// Which construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GadgetKind {
    /// Unit-weight broadcast-tree gadget built from a 3-literal formula.
    #[serde(rename = "clubfs-sat")]
    ClubfsSat,
    /// Weighted broadcast-tree gadget built from a 3-literal formula.
    #[serde(rename = "cluspt-sat")]
    ClusptSat,
    /// Contiguous-path gadget built from an exact-cover instance.
    #[serde(rename = "clusp-x3c")]
    CluspX3c,
}

impl GadgetKind {
    /// The serialized spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            GadgetKind::ClubfsSat => "clubfs-sat",
            GadgetKind::ClusptSat => "cluspt-sat",
            GadgetKind::CluspX3c => "clusp-x3c",
        }
    }
}

impl std::fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Construction parameters recorded in a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetParameters {
    /// Variable count or cover size of the source problem.
    pub eta: usize,
    /// Clause count or collection size of the source problem.
    pub mu: usize,
    /// Padding length for the constructions that take one.
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Path destination vertex, for the path construction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
}

/// The decision problem a gadget was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SourceProblem {
    /// A 3-literal CNF formula.
    Formula(CnfFormula),
    /// An exact-cover-by-3-sets instance.
    SetSystem(X3cInstance),
}

/// A generated instance bundled with the threshold gap that makes it a
/// hardness witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GadgetCertificate {
    /// The generated clustered instance.
    pub instance: ClusteredInstance,
    /// Which construction produced it.
    pub kind: GadgetKind,
    /// Construction parameters.
    pub parameters: GadgetParameters,
    /// Solvable sources yield an optimum of at most this.
    pub sat_threshold: Cost,
    /// Unsolvable sources force the optimum to at least this.
    pub unsat_threshold: Cost,
    /// The problem the instance encodes.
    pub source_problem: SourceProblem,
}

impl GadgetCertificate {
    /// Serializes the certificate as pretty JSON.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    /// Parses a certificate, validating the embedded instance.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("certificate: expected a JSON object".into()))?;
        const KEYS: [&str; 6] = [
            "instance",
            "kind",
            "parameters",
            "satThreshold",
            "unsatThreshold",
            "sourceProblem",
        ];
        for key in obj.keys() {
            if !KEYS.contains(&key.as_str()) {
                return Err(Error::Parse(format!("certificate: unknown key {key:?}")));
            }
        }
        let field = |name: &str| {
            obj.get(name)
                .ok_or_else(|| Error::Parse(format!("certificate: missing key {name:?}")))
        };

        let kind = match field("kind")?.as_str() {
            Some("clubfs-sat") => GadgetKind::ClubfsSat,
            Some("cluspt-sat") => GadgetKind::ClusptSat,
            Some("clusp-x3c") => GadgetKind::CluspX3c,
            other => {
                return Err(Error::Parse(format!(
                    "certificate: unrecognized kind {other:?}"
                )))
            }
        };

        let instance_text = serde_json::to_string(field("instance")?)?;
        let instance = ClusteredInstance::from_json_checked(&instance_text)?;

        let pobj = field("parameters")?
            .as_object()
            .ok_or_else(|| Error::Parse("certificate: parameters must be an object".into()))?;
        for key in pobj.keys() {
            if !["eta", "mu", "M", "target"].contains(&key.as_str()) {
                return Err(Error::Parse(format!(
                    "certificate: unknown parameter {key:?}"
                )));
            }
        }
        let param_usize = |name: &str| -> Result<Option<usize>> {
            match pobj.get(name) {
                None => Ok(None),
                Some(v) => v
                    .as_u64()
                    .and_then(|x| usize::try_from(x).ok())
                    .map(Some)
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "certificate: parameter {name:?} must be a nonnegative integer"
                        ))
                    }),
            }
        };
        let parameters = GadgetParameters {
            eta: param_usize("eta")?
                .ok_or_else(|| Error::Parse("certificate: missing parameter \"eta\"".into()))?,
            mu: param_usize("mu")?
                .ok_or_else(|| Error::Parse("certificate: missing parameter \"mu\"".into()))?,
            m: param_usize("M")?,
            target: param_usize("target")?,
        };

        let threshold = |name: &str| -> Result<Cost> {
            field(name)?.as_u64().ok_or_else(|| {
                Error::Parse(format!("certificate: {name} must be a nonnegative integer"))
            })
        };
        let sat_threshold = threshold("satThreshold")?;
        let unsat_threshold = threshold("unsatThreshold")?;

        let source_value = field("sourceProblem")?.clone();
        let source_problem = match kind {
            GadgetKind::ClubfsSat | GadgetKind::ClusptSat => {
                let formula: CnfFormula = serde_json::from_value(source_value)
                    .map_err(|e| Error::Parse(format!("certificate source formula: {e}")))?;
                formula.ensure_valid()?;
                SourceProblem::Formula(formula)
            }
            GadgetKind::CluspX3c => {
                let x3c: X3cInstance = serde_json::from_value(source_value)
                    .map_err(|e| Error::Parse(format!("certificate source set system: {e}")))?;
                x3c.ensure_valid()?;
                SourceProblem::SetSystem(x3c)
            }
        };

        Ok(GadgetCertificate {
            instance,
            kind,
            parameters,
            sat_threshold,
            unsat_threshold,
            source_problem,
        })
    }

    /// Re-runs the construction from the stored source problem and checks
    /// that it reproduces this certificate exactly.
    pub fn recheck(&self) -> Result<()> {
        let rebuilt = match (&self.source_problem, self.kind) {
            (SourceProblem::Formula(formula), GadgetKind::ClubfsSat) => {
                gen_clubfs_from_3cnf(formula)?
            }
            (SourceProblem::Formula(formula), GadgetKind::ClusptSat) => {
                let m = self.parameters.m.ok_or_else(|| {
                    Error::InvalidInstance("certificate is missing its padding length".into())
                })?;
                gen_cluspt_from_3cnf(formula, m)?
            }
            (SourceProblem::SetSystem(x3c), GadgetKind::CluspX3c) => {
                let m = self.parameters.m.ok_or_else(|| {
                    Error::InvalidInstance("certificate is missing its padding length".into())
                })?;
                gen_clusp_from_x3c(x3c, m)?
            }
            _ => {
                return Err(Error::InvalidInstance(
                    "certificate kind does not match its source problem".into(),
                ))
            }
        };
        if rebuilt != *self {
            return Err(Error::InvalidInstance(
                "certificate does not match a fresh construction from its source problem".into(),
            ));
        }
        Ok(())
    }
}

/// Builds the unit-weight broadcast-tree gadget for a 3-literal formula.
///
/// The graph has a source `s`, a pair of adjacent vertices per variable
/// (each also adjacent to `s`), and a triangle per clause whose corners
/// attach to the vertex of their literal. Clusters are `{s}`, the variable
/// pairs, and the clause triangles. With `eta` variables and `mu` clauses
/// the graph has exactly `3*mu + 2*eta + 1` vertices and `6*mu + 3*eta`
/// edges, the optimal broadcast cost is at most `3*eta + 8*mu` when the
/// formula is satisfiable, and at least `3*eta + 8*mu + 3` otherwise.
pub fn gen_clubfs_from_3cnf(formula: &CnfFormula) -> Result<GadgetCertificate> {
    formula.ensure_valid()?;
    let eta = formula.variables;
    let mu = formula.clause_count();
    let n = 1 + 2 * eta + 3 * mu;
    if n > GADGET_VERTEX_LIMIT {
        return Err(Error::Budget(format!(
            "gadget would have {n} vertices; limit is {GADGET_VERTEX_LIMIT}"
        )));
    }

    let s = 0usize;
    let positive = |i: usize| 2 * i - 1;
    let negative = |i: usize| 2 * i;
    let corner = |j: usize, t: usize| 2 * eta + 3 * (j - 1) + t;

    let mut edges: Vec<(usize, usize, Cost)> = Vec::with_capacity(6 * mu + 3 * eta);
    let mut clusters: Vec<Vec<usize>> = Vec::with_capacity(1 + eta + mu);
    clusters.push(vec![s]);
    for i in 1..=eta {
        edges.push((s, positive(i), 1));
        edges.push((s, negative(i), 1));
        edges.push((positive(i), negative(i), 1));
        clusters.push(vec![positive(i), negative(i)]);
    }
    for (jz, clause) in formula.clauses.iter().enumerate() {
        let j = jz + 1;
        edges.push((corner(j, 1), corner(j, 2), 1));
        edges.push((corner(j, 2), corner(j, 3), 1));
        edges.push((corner(j, 1), corner(j, 3), 1));
        for (tz, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            let endpoint = if lit > 0 { positive(var) } else { negative(var) };
            edges.push((corner(j, tz + 1), endpoint, 1));
        }
        clusters.push(vec![corner(j, 1), corner(j, 2), corner(j, 3)]);
    }
    assert_eq!(edges.len(), 6 * mu + 3 * eta, "edge count identity");

    let mut instance = ClusteredInstance {
        n,
        weighted: false,
        edges,
        clusters,
        source: s,
    };
    instance.ensure_valid()?;
    instance.normalize();

    let low = (3 * eta + 8 * mu) as Cost;
    Ok(GadgetCertificate {
        instance,
        kind: GadgetKind::ClubfsSat,
        parameters: GadgetParameters {
            eta,
            mu,
            m: None,
            target: None,
        },
        sat_threshold: low,
        unsat_threshold: low + 3,
        source_problem: SourceProblem::Formula(formula.clone()),
    })
}

/// Builds the weighted broadcast-tree gadget for a 3-literal formula.
///
/// Like the unit-weight construction, but each clause triangle becomes a
/// star around a hub that also carries a padding path of `m` extra
/// vertices, all in one cluster. Every edge has weight zero except the
/// variable-pair edges, which weigh one. A satisfiable formula gives an
/// optimum of exactly `eta`; an unsatisfiable one forces at least
/// `eta + m + 4`, so growing `m` stretches the gap arbitrarily.
pub fn gen_cluspt_from_3cnf(formula: &CnfFormula, m: usize) -> Result<GadgetCertificate> {
    formula.ensure_valid()?;
    if m == 0 {
        return Err(Error::Usage("padding length must be at least 1".into()));
    }
    let eta = formula.variables;
    let mu = formula.clause_count();
    let n = 1 + 2 * eta + mu * (4 + m);
    if n > GADGET_VERTEX_LIMIT {
        return Err(Error::Budget(format!(
            "gadget would have {n} vertices; limit is {GADGET_VERTEX_LIMIT}"
        )));
    }

    let s = 0usize;
    let positive = |i: usize| 2 * i - 1;
    let negative = |i: usize| 2 * i;
    let block = |j: usize| 1 + 2 * eta + (j - 1) * (4 + m);

    let mut edges: Vec<(usize, usize, Cost)> = Vec::with_capacity(3 * eta + mu * (m + 6));
    let mut clusters: Vec<Vec<usize>> = Vec::with_capacity(1 + eta + mu);
    clusters.push(vec![s]);
    for i in 1..=eta {
        edges.push((s, positive(i), 0));
        edges.push((s, negative(i), 0));
        edges.push((positive(i), negative(i), 1));
        clusters.push(vec![positive(i), negative(i)]);
    }
    for (jz, clause) in formula.clauses.iter().enumerate() {
        let j = jz + 1;
        let base = block(j);
        let hub = base + 3;
        for t in 0..3 {
            edges.push((base + t, hub, 0));
        }
        let mut prev = hub;
        for q in 1..=m {
            edges.push((prev, hub + q, 0));
            prev = hub + q;
        }
        for (tz, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            let endpoint = if lit > 0 { positive(var) } else { negative(var) };
            edges.push((base + tz, endpoint, 0));
        }
        clusters.push((base..base + 4 + m).collect());
    }
    assert_eq!(edges.len(), 3 * eta + mu * (m + 6), "edge count identity");

    let mut instance = ClusteredInstance {
        n,
        weighted: true,
        edges,
        clusters,
        source: s,
    };
    instance.ensure_valid()?;
    instance.normalize();

    Ok(GadgetCertificate {
        instance,
        kind: GadgetKind::ClusptSat,
        parameters: GadgetParameters {
            eta,
            mu,
            m: Some(m),
            target: None,
        },
        sat_threshold: eta as Cost,
        unsat_threshold: (eta + m + 4) as Cost,
        source_problem: SourceProblem::Formula(formula.clone()),
    })
}

/// Builds the contiguous-path gadget for an exact-cover instance.
///
/// Per set `S_j` the graph has a chain segment `u_j^0..u_j^3` of singleton
/// vertices; consecutive segments are linked. Per item there is a hub
/// vertex with one length-`m` path per set containing the item, the whole
/// star forming one cluster, and the free endpoint of the `h`-th path
/// bridges the `k`-th hop of segment `j` when the item sits at position
/// `k` of its `h`-th containing set `S_j` (the six bridge edges of a
/// segment form its top path). For each of the `mu - eta` surplus sets
/// there is a similar hub cluster whose `j`-th endpoint shortcuts segment
/// `j` end to end (a two-edge bottom path). The walk from the first chain
/// vertex to the last must cross every segment via its top path, a bottom
/// path, or a costly hub detour, and cluster contiguity lets top paths
/// realize only disjoint sets: a solvable cover yields an optimal path
/// cost of at most `15 * mu`, an unsolvable one forces at least `m`. The
/// thresholds separate only when `m > 15 * mu`; the construction itself
/// accepts any positive `m`.
pub fn gen_clusp_from_x3c(x3c: &X3cInstance, m: usize) -> Result<GadgetCertificate> {
    x3c.ensure_valid()?;
    if m == 0 {
        return Err(Error::Usage("padding length must be at least 1".into()));
    }
    let eta = x3c.cover_size();
    let mu = x3c.set_count();
    if mu == 0 {
        return Err(Error::Usage("the path gadget needs at least one set".into()));
    }
    if mu < eta {
        return Err(Error::Usage(format!(
            "{mu} sets cannot cover {} items; need at least {eta}",
            x3c.items
        )));
    }
    let surplus = mu - eta;
    let n = 4 * mu + x3c.items + 3 * mu * m + surplus * (1 + mu * m);
    if n > GADGET_VERTEX_LIMIT {
        return Err(Error::Budget(format!(
            "gadget would have {n} vertices; limit is {GADGET_VERTEX_LIMIT}"
        )));
    }

    let chain = |j: usize, q: usize| 4 * (j - 1) + q;
    let source = chain(1, 0);
    let target = chain(mu, 3);

    let mut edges: Vec<(usize, usize, Cost)> = Vec::new();
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for j in 1..mu {
        edges.push((chain(j, 3), chain(j + 1, 0), 1));
    }
    for j in 1..=mu {
        for q in 0..4 {
            clusters.push(vec![chain(j, q)]);
        }
    }

    // Appends a fresh path of `m` unit edges starting at `from`, recording
    // the new vertices as cluster members, and returns the far endpoint.
    fn grow_path(
        next: &mut usize,
        m: usize,
        edges: &mut Vec<(usize, usize, Cost)>,
        members: &mut Vec<usize>,
        from: usize,
    ) -> usize {
        let mut prev = from;
        for _ in 0..m {
            let id = *next;
            *next += 1;
            edges.push((prev, id, 1));
            members.push(id);
            prev = id;
        }
        prev
    }

    let mut next = 4 * mu;

    // endpoint_of[i][h - 1] is the free endpoint of item i's h-th path.
    let mut endpoint_of: Vec<Vec<usize>> = vec![Vec::new(); x3c.items];
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); x3c.items];
    for (jz, set) in x3c.sets.iter().enumerate() {
        for &item in set {
            containing[item].push(jz + 1);
        }
    }
    for item in 0..x3c.items {
        let hub = next;
        next += 1;
        let mut members = vec![hub];
        for _ in 0..containing[item].len() {
            let endpoint = grow_path(&mut next, m, &mut edges, &mut members, hub);
            endpoint_of[item].push(endpoint);
        }
        clusters.push(members);
    }

    for (jz, set) in x3c.sets.iter().enumerate() {
        let j = jz + 1;
        for (kz, &item) in set.iter().enumerate() {
            let h = containing[item]
                .iter()
                .position(|&owner| owner == j)
                .expect("set listed among its item's containers");
            let endpoint = endpoint_of[item][h];
            edges.push((chain(j, kz), endpoint, 1));
            edges.push((chain(j, kz + 1), endpoint, 1));
        }
    }

    for _ in 0..surplus {
        let hub = next;
        next += 1;
        let mut members = vec![hub];
        for j in 1..=mu {
            let endpoint = grow_path(&mut next, m, &mut edges, &mut members, hub);
            edges.push((chain(j, 0), endpoint, 1));
            edges.push((chain(j, 3), endpoint, 1));
        }
        clusters.push(members);
    }

    assert_eq!(next, n, "vertex count identity");
    assert_eq!(
        edges.len(),
        (mu - 1) + 3 * mu * m + 6 * mu + surplus * mu * m + 2 * mu * surplus,
        "edge count identity"
    );

    let mut instance = ClusteredInstance {
        n,
        weighted: false,
        edges,
        clusters,
        source,
    };
    instance.ensure_valid()?;
    instance.normalize();

    Ok(GadgetCertificate {
        instance,
        kind: GadgetKind::CluspX3c,
        parameters: GadgetParameters {
            eta,
            mu,
            m: Some(m),
            target: Some(target),
        },
        sat_threshold: (15 * mu) as Cost,
        unsat_threshold: m as Cost,
        source_problem: SourceProblem::SetSystem(x3c.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{
        cluster_subset_solve, root_vector_solve, shortest_contiguous_path, ContiguousOptions,
        ContiguousResult, RootEnumOptions, SubsetDpOptions,
    };
    use crate::reductions::cnf::forced_unsat_formula;

    fn one_clause() -> CnfFormula {
        CnfFormula {
            variables: 3,
            clauses: vec![[1, 2, 3]],
        }
    }

    #[test]
    fn unit_weight_gadget_has_the_promised_shape() {
        let cert = gen_clubfs_from_3cnf(&one_clause()).unwrap();
        let inst = &cert.instance;
        assert_eq!(inst.n, 10);
        assert_eq!(inst.m(), 15);
        assert_eq!(inst.k(), 5);
        assert!(!inst.weighted);
        assert_eq!(cert.sat_threshold, 17);
        assert_eq!(cert.unsat_threshold, 20);
        let mut sizes: Vec<usize> = inst.clusters.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3]);
    }

    #[test]
    fn unit_weight_gadget_optimum_hits_the_satisfiable_threshold() {
        let cert = gen_clubfs_from_3cnf(&one_clause()).unwrap();
        let by_subsets = cluster_subset_solve(&cert.instance, &SubsetDpOptions::default()).unwrap();
        let by_roots = root_vector_solve(&cert.instance, &RootEnumOptions::default()).unwrap();
        assert_eq!(by_subsets.cost, 17);
        assert_eq!(by_roots.cost, 17);
    }

    #[test]
    fn unit_weight_gadget_sizes_scale_with_the_formula() {
        let cert = gen_clubfs_from_3cnf(&forced_unsat_formula()).unwrap();
        assert_eq!(cert.instance.n, 3 * 8 + 2 * 3 + 1);
        assert_eq!(cert.instance.m(), 6 * 8 + 3 * 3);
        assert_eq!(cert.sat_threshold, 3 * 3 + 8 * 8);
        assert_eq!(cert.unsat_threshold, 3 * 3 + 8 * 8 + 3);
    }

    #[test]
    fn weighted_gadget_optimum_is_the_variable_count_when_satisfiable() {
        let cert = gen_cluspt_from_3cnf(&one_clause(), 5).unwrap();
        let inst = &cert.instance;
        assert_eq!(inst.n, 1 + 6 + 9);
        assert_eq!(inst.m(), 9 + 11);
        assert!(inst.weighted);
        let by_roots = root_vector_solve(inst, &RootEnumOptions::default()).unwrap();
        let by_subsets = cluster_subset_solve(inst, &SubsetDpOptions::default()).unwrap();
        assert_eq!(by_roots.cost, 3);
        assert_eq!(by_subsets.cost, 3);
        assert_eq!(cert.sat_threshold, 3);
        assert_eq!(cert.unsat_threshold, 3 + 5 + 4);
    }

    #[test]
    fn weighted_gadget_counts_padding_vertices() {
        let formula = CnfFormula {
            variables: 2,
            clauses: vec![[1, -2, 2], [-1, 2, 1]],
        };
        let cert = gen_cluspt_from_3cnf(&formula, 1).unwrap();
        assert_eq!(cert.instance.n, 1 + 2 * 2 + 5 * 2);
        assert!(matches!(
            gen_cluspt_from_3cnf(&formula, 0),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn path_gadget_solvable_instance_stays_under_the_low_threshold() {
        let x3c = X3cInstance {
            items: 3,
            sets: vec![[0, 1, 2]],
        };
        let cert = gen_clusp_from_x3c(&x3c, 16).unwrap();
        let inst = &cert.instance;
        assert_eq!(inst.n, 4 + 3 + 3 * 16);
        assert_eq!(inst.m(), 0 + 3 * 16 + 6);
        assert_eq!(inst.k(), 4 + 3);
        assert_eq!(cert.parameters.target, Some(3));
        let result = shortest_contiguous_path(
            inst,
            inst.source,
            cert.parameters.target.unwrap(),
            &ContiguousOptions::default(),
        )
        .unwrap();
        // The only admissible route zigzags across the three item
        // endpoints: six unit edges.
        match result {
            ContiguousResult::Found(path) => assert_eq!(path.cost, Some(6)),
            other => panic!("expected a path, got {other:?}"),
        }
        assert_eq!(cert.sat_threshold, 15);
        assert_eq!(cert.unsat_threshold, 16);
    }

    #[test]
    fn path_gadget_unsolvable_instance_is_forced_past_the_padding() {
        // The two sets overlap, so no exact cover exists and every
        // admissible walk must detour through a length-40 hub path.
        let x3c = X3cInstance {
            items: 6,
            sets: vec![[0, 1, 2], [0, 1, 3]],
        };
        let cert = gen_clusp_from_x3c(&x3c, 40).unwrap();
        let result = shortest_contiguous_path(
            &cert.instance,
            cert.instance.source,
            cert.parameters.target.unwrap(),
            &ContiguousOptions::default(),
        )
        .unwrap();
        match result {
            ContiguousResult::Found(path) => assert!(path.cost.unwrap() >= 40),
            ContiguousResult::Unreachable => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn path_gadget_counts_surplus_hubs() {
        let x3c = X3cInstance {
            items: 3,
            sets: vec![[0, 1, 2], [2, 0, 1]],
        };
        let m = 4;
        let cert = gen_clusp_from_x3c(&x3c, m).unwrap();
        let inst = &cert.instance;
        assert_eq!(inst.n, 8 + 3 + 6 * m + (1 + 2 * m));
        assert_eq!(inst.m(), 1 + 6 * m + 12 + 2 * m + 4);
        // 8 chain singletons, 3 item clusters, 1 surplus hub cluster.
        assert_eq!(inst.k(), 12);
    }

    #[test]
    fn path_gadget_rejects_undersized_collections() {
        let x3c = X3cInstance {
            items: 6,
            sets: vec![[0, 1, 2]],
        };
        assert!(matches!(
            gen_clusp_from_x3c(&x3c, 10),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn certificates_round_trip_through_json() {
        let certs = [
            gen_clubfs_from_3cnf(&one_clause()).unwrap(),
            gen_cluspt_from_3cnf(&one_clause(), 3).unwrap(),
            gen_clusp_from_x3c(
                &X3cInstance {
                    items: 3,
                    sets: vec![[0, 1, 2]],
                },
                16,
            )
            .unwrap(),
        ];
        for cert in certs {
            let parsed = GadgetCertificate::from_json_str(&cert.to_json()).unwrap();
            assert_eq!(parsed, cert);
            parsed.recheck().unwrap();
        }
    }

    #[test]
    fn recheck_catches_tampered_thresholds() {
        let mut cert = gen_clubfs_from_3cnf(&one_clause()).unwrap();
        cert.sat_threshold += 1;
        assert!(matches!(cert.recheck(), Err(Error::InvalidInstance(_))));
    }
}
