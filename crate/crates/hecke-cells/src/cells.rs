//! Cell preorders and cells of a canonical basis table, their condensation
//! order, and cell modules with exact action matrices.
//!
//! The preorder edge `y -> x` is present when `pkl_x` appears with nonzero
//! coefficient in `b_s * pkl_y` (left) or `pkl_y * b_s` (right) for some
//! generator `s`. Products of the `b_s` generate the Hecke algebra, so the
//! transitive closure over generator edges equals the preorder defined by
//! multiplication with arbitrary elements; the oracle tests cross-check this
//! against full products on small systems. Cells are the strongly connected
//! components; the condensation is a genuine partial order on them.

use crate::canonical::CanonicalTable;
use crate::coxeter::{CoxeterSystem, Elt};
use crate::laurent::LaurentPoly;
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub fn label(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
        }
    }
}

/// Directed preorder graph on elements: an edge `y -> x` means `x <= y`.
pub fn preorder_graph(table: &CanonicalTable, side: Side) -> Vec<Vec<Elt>> {
    let sys = table.system();
    let n = sys.size();
    let rank = sys.rank();
    let mut adj: Vec<Vec<Elt>> = vec![Vec::new(); n];
    for y in sys.elements() {
        let mut targets: Vec<Elt> = Vec::new();
        for s in 0..rank {
            if matches!(side, Side::Left | Side::TwoSided) {
                targets.extend(table.left_gen_product(s, y).iter().map(|(z, _)| *z));
            }
            if matches!(side, Side::Right | Side::TwoSided) {
                targets.extend(table.right_gen_product(y, s).iter().map(|(z, _)| *z));
            }
        }
        targets.sort();
        targets.dedup();
        adj[y.idx()] = targets;
    }
    adj
}

/// Cells of one side together with their condensation order.
#[derive(Debug, Clone)]
pub struct CellDecomposition {
    pub side: Side,
    /// Member lists, each sorted; cells ordered by their minimal member.
    cells: Vec<Vec<Elt>>,
    cell_of: Vec<u32>,
    /// Transitively reduced condensation edges `(upper, lower)`.
    reduced_edges: Vec<(u32, u32)>,
    /// `reach[i]` = bitset of cells weakly below cell `i`.
    reach: Vec<Vec<u64>>,
}

impl CellDecomposition {
    /// Strongly connected components of the preorder graph.
    pub fn compute(table: &CanonicalTable, side: Side) -> CellDecomposition {
        let adj = preorder_graph(table, side);
        let n = adj.len();
        let raw_comp = tarjan_scc(&adj);

        // Renumber components by minimal member (elements are u32-ordered).
        let mut comps: Vec<Vec<Elt>> = raw_comp;
        for c in &mut comps {
            c.sort();
        }
        comps.sort_by_key(|c| c[0]);
        let mut cell_of = vec![0u32; n];
        for (i, c) in comps.iter().enumerate() {
            for &x in c {
                cell_of[x.idx()] = i as u32;
            }
        }

        // Full condensation edges, then reachability, then reduction.
        let k = comps.len();
        let mut direct: Vec<Vec<bool>> = vec![vec![false; k]; k];
        for (y, targets) in adj.iter().enumerate() {
            let a = cell_of[y] as usize;
            for z in targets {
                let b = cell_of[z.idx()] as usize;
                if a != b {
                    direct[a][b] = true;
                }
            }
        }
        let blocks = k.div_ceil(64);
        let mut reach: Vec<Vec<u64>> = vec![vec![0u64; blocks]; k];
        // DFS in reverse topological order is overkill at this scale; a
        // fixpoint sweep is simple and exact.
        for i in 0..k {
            reach[i][i / 64] |= 1 << (i % 64);
        }
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..k {
                for b in 0..k {
                    if direct[a][b] {
                        for blk in 0..blocks {
                            let merged = reach[a][blk] | reach[b][blk];
                            if merged != reach[a][blk] {
                                reach[a][blk] = merged;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        let has = |set: &Vec<u64>, j: usize| set[j / 64] & (1 << (j % 64)) != 0;
        let mut reduced_edges = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if !direct[a][b] {
                    continue;
                }
                let redundant = (0..k).any(|c| c != a && c != b && direct[a][c] && has(&reach[c], b));
                if !redundant {
                    reduced_edges.push((a as u32, b as u32));
                }
            }
        }

        let decomp = CellDecomposition {
            side,
            cells: comps,
            cell_of,
            reduced_edges,
            reach,
        };
        debug_assert!(decomp.antisymmetric());
        decomp
    }

    fn antisymmetric(&self) -> bool {
        (0..self.cells.len()).all(|a| {
            (0..self.cells.len()).all(|b| {
                a == b || !(self.cell_leq(a, b) && self.cell_leq(b, a))
            })
        })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Vec<Elt>] {
        &self.cells
    }

    pub fn members(&self, cell: usize) -> &[Elt] {
        &self.cells[cell]
    }

    pub fn cell_of(&self, x: Elt) -> usize {
        self.cell_of[x.idx()] as usize
    }

    /// Condensation order: is cell `a` weakly below cell `b`?
    pub fn cell_leq(&self, a: usize, b: usize) -> bool {
        self.reach[b][a / 64] & (1 << (a % 64)) != 0
    }

    /// Element-level preorder through the condensation.
    pub fn elt_leq(&self, x: Elt, y: Elt) -> bool {
        self.cell_leq(self.cell_of(x), self.cell_of(y))
    }

    /// Transitively reduced condensation edges `(upper, lower)`.
    pub fn reduced_edges(&self) -> &[(u32, u32)] {
        &self.reduced_edges
    }

    /// Partition as sorted member-name lists (for reports).
    pub fn to_named(&self, sys: &CoxeterSystem) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .map(|c| c.iter().map(|x| sys.name(*x).to_string()).collect())
            .collect()
    }
}

fn tarjan_scc(adj: &[Vec<Elt>]) -> Vec<Vec<Elt>> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comps: Vec<Vec<Elt>> = Vec::new();
    let mut counter = 0usize;
    // Iterative DFS: (node, next edge position).
    let mut call: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next].idx();
                *next += 1;
                if index[w] == usize::MAX {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("scc stack underflow");
                        on_stack[w] = false;
                        comp.push(Elt(w as u32));
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// A cell module: the span of `{pkl_x : x in C}` in the quotient by the
/// strictly-below span, with exact generator action matrices.
///
/// Matrices follow the display convention of the reports: row `y` lists the
/// expansion of the action applied to `pkl_y`, i.e. `mat[y][z]` is the
/// coefficient of `pkl_z`.
#[derive(Debug, Clone)]
pub struct CellModule {
    pub side: Side,
    pub basis: Vec<Elt>,
    /// Per generator: the action matrix of `b_s` (left multiplication for
    /// left/two-sided cells, right multiplication for right cells).
    pub gen_action: Vec<Vec<Vec<LaurentPoly>>>,
    /// Products that fell strictly below the cell: `(from, to, coefficient)`.
    pub dropped: Vec<(Elt, Elt, LaurentPoly)>,
    /// Spans of the left-cell blocks when the basis is grouped (two-sided).
    pub blocks: Vec<(usize, usize)>,
}

impl CellModule {
    /// Module of a left or right cell.
    pub fn new(table: &CanonicalTable, decomp: &CellDecomposition, cell: usize) -> CellModule {
        assert!(matches!(decomp.side, Side::Left | Side::Right));
        let basis = decomp.members(cell).to_vec();
        CellModule::build(table, decomp, cell, basis, decomp.side, Vec::new())
    }

    /// Module of a two-sided cell, acting by left multiplication, with the
    /// basis grouped into left cells (each block contiguous).
    pub fn two_sided(
        table: &CanonicalTable,
        two_sided: &CellDecomposition,
        left: &CellDecomposition,
        cell: usize,
    ) -> CellModule {
        assert_eq!(two_sided.side, Side::TwoSided);
        let mut left_cells: Vec<usize> = two_sided
            .members(cell)
            .iter()
            .map(|&x| left.cell_of(x))
            .collect();
        left_cells.sort();
        left_cells.dedup();
        // Left cells are already ordered by minimal member.
        let mut basis = Vec::new();
        let mut blocks = Vec::new();
        for lc in left_cells {
            let start = basis.len();
            basis.extend_from_slice(left.members(lc));
            blocks.push((start, basis.len()));
        }
        CellModule::build(table, two_sided, cell, basis, Side::Left, blocks)
    }

    fn build(
        table: &CanonicalTable,
        decomp: &CellDecomposition,
        cell: usize,
        basis: Vec<Elt>,
        action_side: Side,
        blocks: Vec<(usize, usize)>,
    ) -> CellModule {
        let sys = table.system();
        let rank = sys.rank();
        let dim = basis.len();
        let pos: HashMap<Elt, usize> = basis.iter().enumerate().map(|(i, x)| (*x, i)).collect();
        let mut gen_action = vec![vec![vec![LaurentPoly::zero(); dim]; dim]; rank];
        let mut dropped = Vec::new();
        for (row, &y) in basis.iter().enumerate() {
            for (s, action) in gen_action.iter_mut().enumerate() {
                let product: &[(Elt, LaurentPoly)] = match action_side {
                    Side::Left => table.left_gen_product(s, y),
                    Side::Right => table.right_gen_product(y, s),
                    Side::TwoSided => unreachable!("action side is left or right"),
                };
                for (z, c) in product {
                    match pos.get(z) {
                        Some(&col) => action[row][col] = c.clone(),
                        None => {
                            // Everything outside the cell must sit strictly
                            // below it; anything else falsifies the preorder.
                            assert!(
                                decomp.cell_leq(decomp.cell_of(*z), cell)
                                    && decomp.cell_of(*z) != cell,
                                "product escaped the cell: {} -> {}",
                                sys.name(y),
                                sys.name(*z)
                            );
                            dropped.push((y, *z, c.clone()));
                        }
                    }
                }
            }
        }
        CellModule {
            side: decomp.side,
            basis,
            gen_action,
            dropped,
            blocks,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Generator action at `v = 1` as an integer matrix.
    pub fn gen_action_at_one(&self, s: usize) -> Vec<Vec<i64>> {
        self.gen_action[s]
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| p.eval_at_one().to_i64().expect("small integer"))
                    .collect()
            })
            .collect()
    }

    /// Check the quadratic and braid relations as matrix identities over
    /// `Z[v, v^-1]`, using `H_s = b_s - v` on the module.
    pub fn verify_relations(&self, sys: &CoxeterSystem) -> Result<(), String> {
        let dim = self.dim();
        let rank = sys.rank();
        let id = identity_poly(dim);
        let h: Vec<Vec<Vec<LaurentPoly>>> = (0..rank)
            .map(|s| {
                let mut m = self.gen_action[s].clone();
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] -= &LaurentPoly::v();
                }
                m
            })
            .collect();
        let shift = &LaurentPoly::v_pow(-1) - &LaurentPoly::v();
        for (s, hs) in h.iter().enumerate() {
            // H_s^2 = (v^-1 - v) H_s + 1.
            let sq = mat_mul_poly(hs, hs);
            let mut expect = scale_poly(hs, &shift);
            add_assign_poly(&mut expect, &id);
            if sq != expect {
                return Err(format!("quadratic relation fails for generator {s}"));
            }
        }
        for s in 0..rank {
            for t in s + 1..rank {
                let m = sys.coxeter_exponent(s, t) as usize;
                let mut lhs = id.clone();
                let mut rhs = id.clone();
                for k in 0..m {
                    lhs = mat_mul_poly(&lhs, &h[if k % 2 == 0 { s } else { t }]);
                    rhs = mat_mul_poly(&rhs, &h[if k % 2 == 0 { t } else { s }]);
                }
                if lhs != rhs {
                    return Err(format!("braid relation fails for generators {s},{t}"));
                }
            }
        }
        Ok(())
    }
}

fn identity_poly(n: usize) -> Vec<Vec<LaurentPoly>> {
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = LaurentPoly::one();
    }
    m
}

fn mat_mul_poly(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j].add_scaled(&a[i][k], &b[k][j]);
            }
        }
    }
    out
}

fn scale_poly(a: &[Vec<LaurentPoly>], c: &LaurentPoly) -> Vec<Vec<LaurentPoly>> {
    a.iter()
        .map(|row| row.iter().map(|p| c * p).collect())
        .collect()
}

fn add_assign_poly(a: &mut [Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (pa, pb) in ra.iter_mut().zip(rb) {
            *pa += pb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::CanonicalTable;
    use crate::coxeter::CoxeterSystem;
    use crate::hecke::KlTable;
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn table(preset: &str) -> CanonicalTable {
        let sys = Arc::new(CoxeterSystem::build_preset(preset).unwrap());
        CanonicalTable::p0(Arc::new(KlTable::new(sys)))
    }

    fn named(decomp: &CellDecomposition, sys: &CoxeterSystem) -> BTreeSet<BTreeSet<String>> {
        decomp
            .to_named(sys)
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect()
    }

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn s2_left_cells() {
        let t = table("A1");
        let d = CellDecomposition::compute(&t, Side::Left);
        let sys = t.system();
        assert_eq!(named(&d, sys), BTreeSet::from([set(&["e"]), set(&["1"])]));
        // e is above s in the left order.
        let e = sys.identity();
        let s = sys.element_by_name("1").unwrap();
        assert!(d.elt_leq(s, e));
        assert!(!d.elt_leq(e, s));
    }

    #[test]
    fn s3_left_cells_p0() {
        let t = table("A2");
        let sys = t.system();
        let d = CellDecomposition::compute(&t, Side::Left);
        let expect = BTreeSet::from([
            set(&["e"]),
            set(&["1", "21"]),
            set(&["2", "12"]),
            set(&["121"]),
        ]);
        assert_eq!(named(&d, sys), expect);
    }

    #[test]
    fn s3_two_sided_chain() {
        let t = table("A2");
        let sys = t.system();
        let d = CellDecomposition::compute(&t, Side::TwoSided);
        assert_eq!(d.len(), 3);
        // Chain: {w0} < middle < {e}.
        let e = d.cell_of(sys.identity());
        let mid = d.cell_of(sys.element_by_name("1").unwrap());
        let w0 = d.cell_of(sys.longest_element());
        assert!(d.cell_leq(w0, mid) && d.cell_leq(mid, e));
        assert!(!d.cell_leq(e, mid) && !d.cell_leq(mid, w0));
    }

    #[test]
    fn b2_p2_cells_match_worked_example() {
        let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
        let t = CanonicalTable::b2_p2(Arc::new(KlTable::new(sys.clone())));
        let left = CellDecomposition::compute(&t, Side::Left);
        let expect = BTreeSet::from([
            set(&["e"]),
            set(&["1"]),
            set(&["2", "12", "212"]),
            set(&["21", "121"]),
            set(&["1212"]),
        ]);
        assert_eq!(named(&left, &sys), expect);
        let two = CellDecomposition::compute(&t, Side::TwoSided);
        let expect = BTreeSet::from([
            set(&["e"]),
            set(&["1"]),
            set(&["2", "12", "212", "21", "121"]),
            set(&["1212"]),
        ]);
        assert_eq!(named(&two, &sys), expect);
        // Order: {1212} < J < {1} < {e}.
        let c_e = two.cell_of(sys.identity());
        let c_1 = two.cell_of(sys.element_by_name("1").unwrap());
        let c_j = two.cell_of(sys.element_by_name("2").unwrap());
        let c_w0 = two.cell_of(sys.longest_element());
        assert!(two.cell_leq(c_w0, c_j));
        assert!(two.cell_leq(c_j, c_1));
        assert!(two.cell_leq(c_1, c_e));
        assert!(!two.cell_leq(c_1, c_j));
    }

    #[test]
    fn b2_p0_vs_p2_two_sided_cells_differ() {
        let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
        let kl = Arc::new(KlTable::new(sys.clone()));
        let p0 = CanonicalTable::p0(kl.clone());
        let p2 = CanonicalTable::b2_p2(kl);
        let d0 = CellDecomposition::compute(&p0, Side::TwoSided);
        let d2 = CellDecomposition::compute(&p2, Side::TwoSided);
        assert_eq!(d0.len(), 3);
        assert_eq!(d2.len(), 4);
        // At p = 2 the element 1 forms its own two-sided cell.
        let one = sys.element_by_name("1").unwrap();
        assert_eq!(d2.members(d2.cell_of(one)), &[one]);
    }

    #[test]
    fn inversion_maps_left_cells_to_right_cells() {
        for preset in ["A2", "A3", "B2"] {
            let t = table(preset);
            let sys = t.system();
            let left = CellDecomposition::compute(&t, Side::Left);
            let right = CellDecomposition::compute(&t, Side::Right);
            for cell in left.cells() {
                let inverted: BTreeSet<Elt> = cell.iter().map(|&x| sys.inverse(x)).collect();
                let image = right.cell_of(*inverted.iter().next().unwrap());
                let expect: BTreeSet<Elt> = right.members(image).iter().copied().collect();
                assert_eq!(inverted, expect);
            }
        }
    }

    #[test]
    fn right_descent_constant_on_left_cells() {
        for preset in ["A2", "A3", "A4", "B2", "B3"] {
            let t = table(preset);
            let sys = t.system();
            let left = CellDecomposition::compute(&t, Side::Left);
            for cell in left.cells() {
                let mask = sys.right_descents(cell[0]).mask();
                for &x in cell {
                    assert_eq!(sys.right_descents(x).mask(), mask, "{preset}");
                }
            }
        }
    }

    #[test]
    fn trivial_cell_modules() {
        let t = table("A2");
        let sys = t.system();
        let left = CellDecomposition::compute(&t, Side::Left);
        // C = {e}: b_s acts by zero (pkl_s drops out of the quotient).
        let ce = left.cell_of(sys.identity());
        let m = CellModule::new(&t, &left, ce);
        for s in 0..sys.rank() {
            assert_eq!(m.gen_action[s], vec![vec![LaurentPoly::zero()]]);
        }
        assert!(!m.dropped.is_empty());
        // C = {w0}: b_s acts by v + v^-1.
        let cw = left.cell_of(sys.longest_element());
        let m = CellModule::new(&t, &left, cw);
        for s in 0..sys.rank() {
            assert_eq!(m.gen_action[s], vec![vec![LaurentPoly::v_plus_v_inv()]]);
        }
    }

    #[test]
    fn cell_module_relations_hold() {
        for preset in ["A2", "A3", "B2", "B3"] {
            let t = table(preset);
            let sys = t.system().clone();
            let left = CellDecomposition::compute(&t, Side::Left);
            for cell in 0..left.len() {
                let m = CellModule::new(&t, &left, cell);
                m.verify_relations(&sys).unwrap_or_else(|e| {
                    panic!("{preset} cell {cell}: {e}");
                });
            }
        }
    }

    #[test]
    fn cell_module_entries_nonnegative() {
        let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
        let t = CanonicalTable::b2_p2(Arc::new(KlTable::new(sys)));
        let left = CellDecomposition::compute(&t, Side::Left);
        for cell in 0..left.len() {
            let m = CellModule::new(&t, &left, cell);
            for mat in &m.gen_action {
                for row in mat {
                    for p in row {
                        assert!(p.is_nonneg());
                    }
                }
            }
        }
    }

    #[test]
    fn two_sided_module_basis_grouping() {
        let sys = Arc::new(CoxeterSystem::build_preset("B2").unwrap());
        let t = CanonicalTable::b2_p2(Arc::new(KlTable::new(sys.clone())));
        let two = CellDecomposition::compute(&t, Side::TwoSided);
        let left = CellDecomposition::compute(&t, Side::Left);
        let j = two.cell_of(sys.element_by_name("2").unwrap());
        let m = CellModule::two_sided(&t, &two, &left, j);
        let names: Vec<&str> = m.basis.iter().map(|x| sys.name(*x)).collect();
        assert_eq!(names, vec!["2", "12", "212", "21", "121"]);
        assert_eq!(m.blocks, vec![(0, 3), (3, 5)]);
        m.verify_relations(&sys).unwrap();
    }
}
