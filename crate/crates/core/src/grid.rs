//! Staggered 1D mesh and discrete velocity quadrature.
//!
//! Macroscopic densities live on nodes `x_j = -L + j*dx`, `j = 0..=N_x`;
//! microscopic perturbations live on faces `x_{j+1/2}` halfway between
//! nodes, padded with one ghost face on each side for boundary handling.
//! Velocity space `[-V, V]` is discretized with the uniform midpoint rule,
//! which keeps the quadrature symmetric so that odd moments cancel.

use crate::error::{Result, SimError};

/// Uniform staggered mesh on `[-L, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialGrid {
    half_length: f64,
    n_cells: usize,
    dx: f64,
    nodes: Vec<f64>,
    faces: Vec<f64>,
}

impl SpatialGrid {
    /// Build the mesh with `n_cells` uniform cells, i.e. `n_cells + 1` nodes.
    pub fn new(half_length: f64, n_cells: usize) -> Result<Self> {
        if !half_length.is_finite() || half_length <= 0.0 {
            return Err(SimError::invalid(format!(
                "grid half-length must be positive and finite, got {half_length}"
            )));
        }
        if n_cells < 2 {
            return Err(SimError::invalid(format!(
                "grid needs at least 2 cells, got {n_cells}"
            )));
        }
        let dx = 2.0 * half_length / n_cells as f64;
        let nodes: Vec<f64> = (0..=n_cells)
            .map(|j| -half_length + j as f64 * dx)
            .collect();
        // Face index p sits at x_{p-1/2}; p = 0 and p = n_cells + 1 are ghosts.
        let faces: Vec<f64> = (0..=n_cells + 1)
            .map(|p| -half_length + (p as f64 - 0.5) * dx)
            .collect();
        Ok(SpatialGrid {
            half_length,
            n_cells,
            dx,
            nodes,
            faces,
        })
    }

    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    /// Number of node unknowns (`n_cells + 1`; the endpoints are both stored).
    pub fn n_nodes(&self) -> usize {
        self.n_cells + 1
    }

    /// Number of stored faces including the two ghosts.
    pub fn n_faces(&self) -> usize {
        self.n_cells + 2
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    /// Face coordinate by storage index; `face(p)` is `x_{p-1/2}`.
    pub fn face(&self, p: usize) -> f64 {
        self.faces[p]
    }

    pub fn faces(&self) -> &[f64] {
        &self.faces
    }

    /// Index of the node closest to `x`.
    pub fn nearest_node(&self, x: f64) -> usize {
        let j = ((x + self.half_length) / self.dx).round();
        (j.max(0.0) as usize).min(self.n_cells)
    }

    /// Trapezoid weight for node `j` under periodic identification of the
    /// endpoints: interior nodes weigh 1, the duplicated endpoints 1/2 each.
    pub fn node_weight(&self, j: usize) -> f64 {
        if j == 0 || j == self.n_cells {
            0.5
        } else {
            1.0
        }
    }
}

/// Symmetric midpoint quadrature on `[-V, V]`.
#[derive(Debug, Clone, PartialEq)]
pub struct VelocityGrid {
    half_width: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl VelocityGrid {
    /// Midpoint rule on `n_nodes` uniform cells; `n_nodes` must be even so
    /// the nodes pair up as `v` and `-v` and odd moments vanish.
    pub fn new(half_width: f64, n_nodes: usize) -> Result<Self> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(SimError::invalid(format!(
                "velocity half-width must be positive and finite, got {half_width}"
            )));
        }
        if n_nodes < 2 || !n_nodes.is_multiple_of(2) {
            return Err(SimError::invalid(format!(
                "velocity grid needs an even node count >= 2, got {n_nodes}"
            )));
        }
        let h = 2.0 * half_width / n_nodes as f64;
        let mut nodes = vec![0.0; n_nodes];
        // Mirror the negative half so v_{n-1-l} == -v_l holds bit-exactly.
        for l in 0..n_nodes / 2 {
            let v = -half_width + (l as f64 + 0.5) * h;
            nodes[l] = v;
            nodes[n_nodes - 1 - l] = -v;
        }
        let weights = vec![h; n_nodes];
        Ok(VelocityGrid {
            half_width,
            nodes,
            weights,
        })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Measure of the velocity domain, `|V| = 2V`.
    pub fn measure(&self) -> f64 {
        2.0 * self.half_width
    }

    /// Weighted velocity integral `sum_l w_l * weight_fn(v_l) * h_l`.
    ///
    /// `weight_fn = |_| 1.0` yields the mass `<h>`, `weight_fn = |v| v` the
    /// flux `<v h>`. Summation runs in fixed node order for reproducibility.
    pub fn moment(&self, h: &[f64], weight_fn: impl Fn(f64) -> f64) -> Result<f64> {
        if h.len() != self.nodes.len() {
            return Err(SimError::invalid(format!(
                "moment column length {} does not match velocity grid size {}",
                h.len(),
                self.nodes.len()
            )));
        }
        let mut acc = 0.0;
        for ((w, v), x) in self.weights.iter().zip(&self.nodes).zip(h) {
            acc += w * weight_fn(*v) * x;
        }
        Ok(acc)
    }

    /// Mass moment `<h>`; `h` must match the grid size.
    pub fn mass(&self, h: &[f64]) -> f64 {
        debug_assert_eq!(h.len(), self.nodes.len());
        let mut acc = 0.0;
        for (w, x) in self.weights.iter().zip(h) {
            acc += w * x;
        }
        acc
    }

    /// Flux moment `<v h>`; `h` must match the grid size.
    pub fn flux(&self, h: &[f64]) -> f64 {
        debug_assert_eq!(h.len(), self.nodes.len());
        let mut acc = 0.0;
        for ((w, v), x) in self.weights.iter().zip(&self.nodes).zip(h) {
            acc += w * v * x;
        }
        acc
    }
}

/// Per-species micro perturbation samples, indexed by face then velocity node.
#[derive(Debug, Clone, PartialEq)]
pub struct VelocityField {
    n_faces: usize,
    n_vel: usize,
    data: Vec<f64>,
}

impl VelocityField {
    pub fn zeros(n_faces: usize, n_vel: usize) -> Self {
        VelocityField {
            n_faces,
            n_vel,
            data: vec![0.0; n_faces * n_vel],
        }
    }

    pub fn n_faces(&self) -> usize {
        self.n_faces
    }

    pub fn n_vel(&self) -> usize {
        self.n_vel
    }

    pub fn face(&self, p: usize) -> &[f64] {
        &self.data[p * self.n_vel..(p + 1) * self.n_vel]
    }

    pub fn face_mut(&mut self, p: usize) -> &mut [f64] {
        &mut self.data[p * self.n_vel..(p + 1) * self.n_vel]
    }

    pub fn copy_face(&mut self, dst: usize, src: usize) {
        let (a, b) = (src * self.n_vel, dst * self.n_vel);
        self.data.copy_within(a..a + self.n_vel, b);
    }

    pub fn values(&self) -> &[f64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn paper_grid_spacing_and_span() {
        let g = SpatialGrid::new(2.0, 200).unwrap();
        assert_eq!(g.dx(), 0.02);
        assert_eq!(g.n_nodes(), 201);
        assert_eq!(g.node(0), -2.0);
        assert_eq!(g.node(200), 2.0);
        assert!((g.node(1) - (-1.98)).abs() < 1e-15);
        // Uniform spacing and interleaved faces.
        for j in 0..200 {
            assert!((g.node(j + 1) - g.node(j) - g.dx()).abs() < 1e-15);
            let midpoint = 0.5 * (g.node(j) + g.node(j + 1));
            assert!((g.face(j + 1) - midpoint).abs() < 1e-14);
        }
    }

    #[test]
    fn smallest_grid_layout() {
        let g = SpatialGrid::new(1.0, 2).unwrap();
        assert_eq!(g.nodes(), &[-1.0, 0.0, 1.0]);
        assert_eq!(g.faces(), &[-1.5, -0.5, 0.5, 1.5]);
    }

    #[test]
    fn degenerate_grid_rejected() {
        assert!(SpatialGrid::new(2.0, 0).is_err());
        assert!(SpatialGrid::new(2.0, 1).is_err());
        assert!(SpatialGrid::new(0.0, 10).is_err());
        assert!(SpatialGrid::new(-1.0, 10).is_err());
    }

    #[test]
    fn nearest_node_snaps_and_clamps() {
        let g = SpatialGrid::new(2.0, 200).unwrap();
        assert_eq!(g.nearest_node(0.0), 100);
        assert_eq!(g.nearest_node(0.5), 125);
        assert_eq!(g.nearest_node(-3.0), 0);
        assert_eq!(g.nearest_node(3.0), 200);
    }

    #[test]
    fn two_node_velocity_grid() {
        let vg = VelocityGrid::new(1.0, 2).unwrap();
        assert_eq!(vg.nodes(), &[-0.5, 0.5]);
        assert_eq!(vg.weights(), &[1.0, 1.0]);
        let ones = vec![1.0; 2];
        assert_eq!(vg.flux(&ones), 0.0);
    }

    #[test]
    fn odd_velocity_count_rejected() {
        assert!(VelocityGrid::new(1.0, 3).is_err());
        assert!(VelocityGrid::new(1.0, 0).is_err());
        assert!(VelocityGrid::new(-1.0, 4).is_err());
    }

    #[test]
    fn paper_velocity_grid_moments() {
        let vg = VelocityGrid::new(1.0, 164).unwrap();
        let ones = vec![1.0; 164];
        assert!((vg.mass(&ones) - 2.0).abs() < 1e-13);
        assert!(vg.flux(&ones).abs() < 1e-14);
        // Midpoint rule against the closed form integral of v^2 over [-1, 1].
        let exact = 2.0 / 3.0;
        let second = vg.moment(&ones, |v| v * v).unwrap();
        assert!(
            (second - exact).abs() < 1e-4,
            "second moment {second} vs {exact}"
        );
    }

    #[test]
    fn velocity_nodes_mirror_exactly() {
        for n in [2usize, 4, 164] {
            let vg = VelocityGrid::new(1.0, n).unwrap();
            for l in 0..n {
                assert_eq!(vg.nodes()[l], -vg.nodes()[n - 1 - l]);
                assert_eq!(vg.weights()[l], vg.weights()[n - 1 - l]);
            }
        }
    }

    #[test]
    fn odd_moment_of_even_function_vanishes() {
        let vg = VelocityGrid::new(1.0, 164).unwrap();
        let even: Vec<f64> = vg.nodes().iter().map(|v| (v * v).exp()).collect();
        let m = vg.moment(&even, |v| v).unwrap();
        let scale = even.iter().fold(1.0_f64, |a, b| a.max(b.abs()));
        assert!(m.abs() <= 1e-14 * scale, "odd moment {m}");
    }

    #[test]
    fn quadrature_second_order_convergence() {
        // |<v^2> - 2V^3/3| should drop by ~4x per doubling of N_v.
        let exact = 2.0 / 3.0;
        let errs: Vec<f64> = [4usize, 8, 16, 32]
            .iter()
            .map(|&n| {
                let vg = VelocityGrid::new(1.0, n).unwrap();
                let ones = vec![1.0; n];
                (vg.moment(&ones, |v| v * v).unwrap() - exact).abs()
            })
            .collect();
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            assert!(
                ratio > 3.5 && ratio < 4.5,
                "convergence ratio {ratio} not ~4: {errs:?}"
            );
        }
    }

    #[test]
    fn moment_length_mismatch_rejected() {
        let vg = VelocityGrid::new(1.0, 4).unwrap();
        assert!(vg.moment(&[1.0; 3], |_| 1.0).is_err());
    }

    #[test]
    fn velocity_field_layout() {
        let mut f = VelocityField::zeros(3, 2);
        f.face_mut(1).copy_from_slice(&[1.0, 2.0]);
        assert_eq!(f.face(0), &[0.0, 0.0]);
        assert_eq!(f.face(1), &[1.0, 2.0]);
        f.copy_face(2, 1);
        assert_eq!(f.face(2), &[1.0, 2.0]);
        assert!(f.is_finite());
        assert_eq!(f.max_abs(), 2.0);
    }

    proptest! {
        // moment is linear in h up to round-off.
        #[test]
        fn moment_linearity(
            a in -10.0f64..10.0,
            b in -10.0f64..10.0,
            seed in 0u64..1000,
        ) {
            let vg = VelocityGrid::new(1.0, 16).unwrap();
            let h1: Vec<f64> = (0..16).map(|l| ((l as f64) + seed as f64 * 0.1).sin()).collect();
            let h2: Vec<f64> = (0..16).map(|l| ((l as f64) * 0.7 - seed as f64 * 0.05).cos()).collect();
            let combo: Vec<f64> = h1.iter().zip(&h2).map(|(x, y)| a * x + b * y).collect();
            let lhs = vg.moment(&combo, |v| v).unwrap();
            let rhs = a * vg.moment(&h1, |v| v).unwrap() + b * vg.moment(&h2, |v| v).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs().max(rhs.abs())));
        }
    }
}
