//! Hamilton quaternions and the two Cayley-Dickson splits the transform
//! engines work in.

use num_complex::Complex64;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Quaternion w + x·i + y·j + z·k.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// i-split of a quaternion: q = f1 + j·f2 with f1, f2 complex in i.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPair {
    pub f1: Complex64,
    pub f2: Complex64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const I: Quaternion = Quaternion { w: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const J: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const K: Quaternion = Quaternion { w: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion { w, x, y, z }
    }

    pub fn scalar(w: f64) -> Quaternion {
        Quaternion { w, x: 0.0, y: 0.0, z: 0.0 }
    }

    pub fn conj(self) -> Quaternion {
        Quaternion { w: self.w, x: -self.x, y: -self.y, z: -self.z }
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse; undefined for zero.
    pub fn inverse(self) -> Quaternion {
        self.conj().scale(1.0 / self.norm_sqr())
    }

    pub fn scale(self, s: f64) -> Quaternion {
        Quaternion { w: self.w * s, x: self.x * s, y: self.y * s, z: self.z * s }
    }

    /// Component dot product; real part of a·conj(b).
    pub fn dot(self, other: Quaternion) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// cos θ + i sin θ.
    pub fn exp_i(theta: f64) -> Quaternion {
        Quaternion { w: theta.cos(), x: theta.sin(), y: 0.0, z: 0.0 }
    }

    /// cos θ + j sin θ.
    pub fn exp_j(theta: f64) -> Quaternion {
        Quaternion { w: theta.cos(), x: 0.0, y: theta.sin(), z: 0.0 }
    }

    /// Embed c = re + im·i.
    pub fn from_c_i(c: Complex64) -> Quaternion {
        Quaternion { w: c.re, x: c.im, y: 0.0, z: 0.0 }
    }

    /// Embed c = re + im·j.
    pub fn from_c_j(c: Complex64) -> Quaternion {
        Quaternion { w: c.re, x: 0.0, y: c.im, z: 0.0 }
    }

    /// q = f1 + j·f2 with f1 = w + x·i, f2 = y − z·i.
    pub fn split_i(self) -> ComplexPair {
        ComplexPair {
            f1: Complex64::new(self.w, self.x),
            f2: Complex64::new(self.y, -self.z),
        }
    }

    pub fn from_split_i(p: ComplexPair) -> Quaternion {
        Quaternion { w: p.f1.re, x: p.f1.im, y: p.f2.re, z: -p.f2.im }
    }

    /// q = z1 + i·z2 with z1 = w + y·j, z2 = x + z·j; both commute with exp_j.
    pub fn split_j(self) -> (Complex64, Complex64) {
        (Complex64::new(self.w, self.y), Complex64::new(self.x, self.z))
    }

    pub fn from_split_j(z1: Complex64, z2: Complex64) -> Quaternion {
        Quaternion { w: z1.re, x: z2.re, y: z1.im, z: z2.im }
    }
}

/// Polarized product a·conj(b); scalar part is the component dot product.
pub fn qinner(a: Quaternion, b: Quaternion) -> Quaternion {
    a * b.conj()
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion { w: self.w + o.w, x: self.x + o.x, y: self.y + o.y, z: self.z + o.z }
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion { w: self.w - o.w, x: self.x - o.x, y: self.y - o.y, z: self.z - o.z }
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { w: -self.w, x: -self.x, y: -self.y, z: -self.z }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let Quaternion { w: a, x: b, y: c, z: d } = self;
        let Quaternion { w: e, x: f, y: g, z: h } = o;
        Quaternion {
            w: a * e - b * f - c * g - d * h,
            x: a * f + b * e + c * h - d * g,
            y: a * g - b * h + c * e + d * f,
            z: a * h + b * g - c * f + d * e,
        }
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}
