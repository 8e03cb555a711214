//! Uniform sampling grids.

/// Uniform 2D grid; axis s is sampled at t_s(k) = origin_s + k·dt_s.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub n1: usize,
    pub n2: usize,
    pub dt1: f64,
    pub dt2: f64,
    pub origin1: f64,
    pub origin2: f64,
}

impl GridSpec {
    /// Grid centered on 0: origin = −(n/2)·dt per axis.
    pub fn centered(n1: usize, n2: usize, dt1: f64, dt2: f64) -> GridSpec {
        GridSpec {
            n1,
            n2,
            dt1,
            dt2,
            origin1: -((n1 / 2) as f64) * dt1,
            origin2: -((n2 / 2) as f64) * dt2,
        }
    }

    pub fn square(n: usize, dt: f64) -> GridSpec {
        GridSpec::centered(n, n, dt, dt)
    }

    pub fn t1(&self, k: usize) -> f64 {
        self.origin1 + k as f64 * self.dt1
    }

    pub fn t2(&self, k: usize) -> f64 {
        self.origin2 + k as f64 * self.dt2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Quadrature cell measure dt1·dt2.
    pub fn cell(&self) -> f64 {
        self.dt1 * self.dt2
    }

    pub fn index(&self, k1: usize, k2: usize) -> usize {
        debug_assert!(k1 < self.n1 && k2 < self.n2);
        k1 * self.n2 + k2
    }

    /// True when both axes are centered so that t → −t maps node k to n−k.
    pub fn is_symmetric(&self) -> bool {
        let c1 = self.origin1 + (self.n1 / 2) as f64 * self.dt1;
        let c2 = self.origin2 + (self.n2 / 2) as f64 * self.dt2;
        c1.abs() <= 1e-9 * self.dt1.abs() && c2.abs() <= 1e-9 * self.dt2.abs()
    }
}

impl Default for GridSpec {
    fn default() -> GridSpec {
        GridSpec::square(64, 0.25)
    }
}
