use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::polar::gf2::BitMatrix;
use crate::polar::subspace::Subspace;

/// Largest rank whose dual polar space is enumerated.
pub const MAX_POLAR_RANK: usize = 3;

/// A point-line geometry in which every line carries exactly three points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    rank: usize,
    points: Vec<Subspace>,
    lines: Vec<Subspace>,
    incidence: Vec<[usize; 3]>,
    lines_through: Vec<Vec<usize>>,
}

impl Configuration {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn points(&self) -> &[Subspace] {
        &self.points
    }

    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }

    /// Indices of the three points on each line, ascending.
    pub fn incidence(&self) -> &[[usize; 3]] {
        &self.incidence
    }

    /// Indices of the lines through each point.
    pub fn lines_through(&self, point: usize) -> &[usize] {
        &self.lines_through[point]
    }

    /// The `|L| × |X|` matrix of the map sending each line to the sum of its points.
    pub fn line_sum_matrix(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.lines.len(), self.points.len());
        for (l, pts) in self.incidence.iter().enumerate() {
            for &x in pts {
                m.set(l, x, true);
            }
        }
        m
    }
}

/// All totally isotropic subspaces of `F_2^{2·rank}` of each dimension up to
/// `top`, grown one vector at a time from the zero subspace.
fn isotropic_levels(rank: usize, top: usize) -> Vec<BTreeSet<Subspace>> {
    let len = 2 * rank;
    let mut levels = vec![BTreeSet::from([Subspace::zero(len)])];
    for _ in 0..top {
        let next: BTreeSet<Subspace> = levels
            .last()
            .expect("at least the zero level")
            .iter()
            .flat_map(|u| {
                (1..1u64 << len)
                    .filter(|&v| !u.contains(v) && u.is_orthogonal_to(v))
                    .map(|v| u.extended(v))
            })
            .collect();
        levels.push(next);
    }
    levels
}

/// The dual polar space of rank `n` over GF(2): points are the maximal totally
/// isotropic subspaces (dimension `n`), lines the totally isotropic subspaces of
/// dimension `n − 1`, and a point is on a line when it contains it.
pub fn build_dual_polar_space(n: usize) -> Result<Configuration> {
    if n == 0 {
        return Err(Error::InvalidRank(n));
    }
    if n > MAX_POLAR_RANK {
        return Err(Error::BudgetExceeded {
            what: format!("dual polar space of rank {n}"),
            budget: MAX_POLAR_RANK as u64,
        });
    }
    let mut levels = isotropic_levels(n, n);
    let points: Vec<Subspace> = levels.pop().expect("level n").into_iter().collect();
    let lines: Vec<Subspace> = levels.pop().expect("level n - 1").into_iter().collect();

    let mut lines_through = vec![Vec::new(); points.len()];
    let mut incidence = Vec::with_capacity(lines.len());
    for (l, line) in lines.iter().enumerate() {
        let on: Vec<usize> = (0..points.len())
            .filter(|&x| line.is_subspace_of(&points[x]))
            .collect();
        let Ok(triple) = <[usize; 3]>::try_from(on.as_slice()) else {
            return Err(Error::InternalInvariantViolation(format!(
                "line {line} lies on {} points, expected 3",
                on.len()
            )));
        };
        for &x in &triple {
            lines_through[x].push(l);
        }
        incidence.push(triple);
    }
    Ok(Configuration {
        rank: n,
        points,
        lines,
        incidence,
        lines_through,
    })
}

/// `|X| − rank(σ)`: the dimension of the free `F_2`-space on the points modulo
/// the span of the line sums.
pub fn universal_embedding_dim(cfg: &Configuration) -> usize {
    cfg.points.len() - cfg.line_sum_matrix().rank()
}

/// Least superset of `marked` closed under "a line with two marked points gets
/// its third point marked". Indices outside the configuration are ignored.
pub fn closure(marked: &BTreeSet<usize>, cfg: &Configuration) -> BTreeSet<usize> {
    let mut is_marked = vec![false; cfg.points.len()];
    let mut queue: VecDeque<usize> = marked
        .iter()
        .copied()
        .filter(|&x| x < is_marked.len())
        .collect();
    for &x in &queue {
        is_marked[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &l in &cfg.lines_through[x] {
            let pts = cfg.incidence[l];
            let unmarked: Vec<usize> = pts.iter().copied().filter(|&y| !is_marked[y]).collect();
            if let [y] = unmarked[..] {
                is_marked[y] = true;
                queue.push_back(y);
            }
        }
    }
    (0..is_marked.len()).filter(|&x| is_marked[x]).collect()
}

/// First `size`-subset of points, in lexicographic order, whose closure is the
/// whole point set.
pub fn find_closure_witness(cfg: &Configuration, size: usize) -> Option<Vec<usize>> {
    let all = cfg.points.len();
    (0..all)
        .combinations(size)
        .find(|subset| closure(&subset.iter().copied().collect(), cfg).len() == all)
}

/// Marks the lowest unmarked point and closes, until every point is marked.
/// Returns the points chosen.
pub fn greedy_closure_set(cfg: &Configuration) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut marked = BTreeSet::new();
    while marked.len() < cfg.points.len() {
        let next = (0..cfg.points.len())
            .find(|x| !marked.contains(x))
            .expect("some point is unmarked");
        chosen.push(next);
        marked.insert(next);
        marked = closure(&marked, cfg);
    }
    chosen
}
