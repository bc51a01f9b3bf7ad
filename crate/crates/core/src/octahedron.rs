//! The octahedron recurrence in three dimensions.
//!
//! A primitive octahedron is described by an [`OctahedronFrame`]: a base
//! vertex `0`, the opposite vertex `0 + v` along the propagation vector and
//! two further diagonals `(d, d')` with `d + d' = v`. The recurrence fills
//! `f(0 + v) = max(f(d) + f(d'), f(e) + f(e')) - f(0)`.
//!
//! Two domains are used. The prism
//! `{0 <= x <= n, 0 <= y <= z <= m}` carries the functional form of the
//! condensation bijection: forward propagation along `(1, 0, 1)` turns the
//! integral of an array on the slope `y = z` into the integrals of `D a` on
//! the ceiling `z = m` and of `L a` on the wall `x = n`, and propagation
//! along `(-1, 0, -1)` undoes it. The tetrahedron `{x + y + z <= n}`
//! propagates along `(-1, 1, 1)` from the ground `z = 0` and the front wall
//! `y = 0`.

use crate::array::{Array, CornerFunction};
use crate::condense::same_up_to_zeros;
use crate::error::{Error, Result};
use crate::hive::{RhombusKind, TriangleFunction};
use crate::scalar::Scalar;

pub type Point = [i64; 3];

fn add(p: Point, q: Point) -> Point {
    [p[0] + q[0], p[1] + q[1], p[2] + q[2]]
}

fn scale(k: i64, p: Point) -> Point {
    [k * p[0], k * p[1], k * p[2]]
}

/// One octahedron recurrence step: `max(fa + fa2, fb + fb2) - f0`.
pub fn or_step(f0: Scalar, fa: Scalar, fa2: Scalar, fb: Scalar, fb2: Scalar) -> Scalar {
    (fa + fa2).max(fb + fb2) - f0
}

/// Degenerate step for a rhombus lying in a wall: `fb + fb2 - f0`.
pub fn or_wall_step(f0: Scalar, fb: Scalar, fb2: Scalar) -> Scalar {
    fb + fb2 - f0
}

/// A primitive octahedron given by offsets from its base vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OctahedronFrame {
    pub vector: Point,
    pub diagonals: [(Point, Point); 2],
}

/// A two-dimensional lattice flat through the origin, triangulated by the
/// edge directions `u`, `w` and `u + w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flat {
    pub u: Point,
    pub w: Point,
}

impl OctahedronFrame {
    /// Propagation vector `(1, 0, 1)` on the prism.
    pub const PRISM: OctahedronFrame = OctahedronFrame {
        vector: [1, 0, 1],
        diagonals: [([1, 0, 0], [0, 0, 1]), ([1, 1, 1], [0, -1, 0])],
    };

    /// Propagation vector `(-1, 1, 1)` on the tetrahedron.
    pub const TETRA: OctahedronFrame = OctahedronFrame {
        vector: [-1, 1, 1],
        diagonals: [([-1, 1, 0], [0, 0, 1]), ([-1, 0, 1], [0, 1, 0])],
    };

    /// Diagonals sum to the propagation vector and the six vertices differ.
    pub fn is_valid(&self) -> bool {
        let vertices = self.vertices();
        let distinct = (0..6).all(|i| (i + 1..6).all(|j| vertices[i] != vertices[j]));
        distinct
            && self
                .diagonals
                .iter()
                .all(|&(d, e)| add(d, e) == self.vector)
    }

    /// `0, v, d1, d1', d2, d2'`.
    pub fn vertices(&self) -> [Point; 6] {
        let [(a, a2), (b, b2)] = self.diagonals;
        [[0, 0, 0], self.vector, a, a2, b, b2]
    }

    /// The four modular flat directions, one per pair of parallel faces.
    /// Each face through the base vertex has edges `d`, `e - d` and `e`.
    pub fn flats(&self) -> [Flat; 4] {
        let [(a, a2), (b, b2)] = self.diagonals;
        [(a, b), (a, b2), (a2, b), (a2, b2)].map(|(d, e)| Flat {
            u: d,
            w: add(e, scale(-1, d)),
        })
    }
}

/// A function on a finite subset of `Z^3`.
pub trait SpaceFunction {
    fn value(&self, p: Point) -> Option<Scalar>;
    fn points(&self) -> Vec<Point>;
}

/// Every primitive octahedron of `frame` inside the domain has its
/// main-diagonal sum equal to the larger of the other two diagonal sums.
pub fn is_polarized<F: SpaceFunction + ?Sized>(f: &F, frame: &OctahedronFrame) -> bool {
    let [(a, a2), (b, b2)] = frame.diagonals;
    f.points().into_iter().all(|p| {
        let at = |d: Point| f.value(add(p, d));
        match (
            at([0, 0, 0]),
            at(frame.vector),
            at(a),
            at(a2),
            at(b),
            at(b2),
        ) {
            (Some(f0), Some(f1), Some(fa), Some(fa2), Some(fb), Some(fb2)) => {
                f0 + f1 == (fa + fa2).max(fb + fb2)
            }
            _ => true,
        }
    })
}

/// Rhombus inequalities of one flat family that fail, as
/// `(base point, kind)`.
pub fn flat_violations<F: SpaceFunction + ?Sized>(f: &F, flat: &Flat) -> Vec<(Point, RhombusKind)> {
    let embed = |(i, j): (i64, i64)| add(scale(i, flat.u), scale(j, flat.w));
    let mut out = Vec::new();
    for p in f.points() {
        for kind in RhombusKind::ALL {
            let (short, long) = kind.offsets();
            let at = |d| f.value(add(p, embed(d)));
            if let (Some(s0), Some(s1), Some(l0), Some(l1)) =
                (at(short[0]), at(short[1]), at(long[0]), at(long[1]))
            {
                if l0 + l1 > s0 + s1 {
                    out.push((p, kind));
                }
            }
        }
    }
    out
}

/// Polarized, and every rhombus inequality holds in each of the four
/// modular flat families of `frame`.
pub fn is_polarized_dc<F: SpaceFunction + ?Sized>(f: &F, frame: &OctahedronFrame) -> bool {
    is_polarized(f, frame)
        && frame
            .flats()
            .iter()
            .all(|flat| flat_violations(f, flat).is_empty())
}

/// Values on the prism `{0 <= x <= n, 0 <= y <= z <= m}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PrismFunction {
    n: usize,
    m: usize,
    values: Vec<Scalar>,
}

fn prism_index(m: usize, x: usize, y: usize, z: usize) -> usize {
    x * ((m + 1) * (m + 2) / 2) + z * (z + 1) / 2 + y
}

// Write-once storage that panics on a read before the write.
struct PrismSlots {
    n: usize,
    m: usize,
    slots: Vec<Option<Scalar>>,
}

impl PrismSlots {
    fn new(n: usize, m: usize) -> Self {
        PrismSlots {
            n,
            m,
            slots: vec![None; prism_index(m, n + 1, 0, 0)],
        }
    }

    fn get(&self, x: usize, y: usize, z: usize) -> Scalar {
        self.slots[prism_index(self.m, x, y, z)]
            .unwrap_or_else(|| panic!("prism value ({x}, {y}, {z}) read before it was filled"))
    }

    fn set(&mut self, x: usize, y: usize, z: usize, v: Scalar) {
        let slot = &mut self.slots[prism_index(self.m, x, y, z)];
        debug_assert!(
            slot.is_none() || *slot == Some(v),
            "prism value ({x}, {y}, {z}) filled twice"
        );
        *slot = Some(v);
    }

    fn finish(self) -> PrismFunction {
        let values = self
            .slots
            .into_iter()
            .map(|v| v.expect("every prism point filled"))
            .collect();
        PrismFunction {
            n: self.n,
            m: self.m,
            values,
        }
    }
}

impl PrismFunction {
    /// Forward propagation along `(1, 0, 1)` from the faces `x = 0`,
    /// `y = 0` and the slope `y = z`. The closures receive `(y, z)`, `(x, z)`
    /// and `(x, j)` respectively and must agree on shared edges.
    pub fn propagate(
        n: usize,
        m: usize,
        x_face: impl Fn(usize, usize) -> Scalar,
        y_face: impl Fn(usize, usize) -> Scalar,
        slope: impl Fn(usize, usize) -> Scalar,
    ) -> Result<PrismFunction> {
        let edges = (0..=m)
            .map(|z| ((0, 0, z), x_face(0, z), y_face(0, z)))
            .chain((0..=m).map(|j| ((0, j, j), x_face(j, j), slope(0, j))))
            .chain((0..=n).map(|x| ((x, 0, 0), y_face(x, 0), slope(x, 0))));
        for ((x, y, z), p, q) in edges {
            if p != q {
                return Err(Error::Inconsistent(format!(
                    "faces disagree at ({x}, {y}, {z}): {p} vs {q}"
                )));
            }
        }
        let mut s = PrismSlots::new(n, m);
        for z in 0..=m {
            for y in 0..=z {
                s.set(0, y, z, x_face(y, z));
            }
            for x in 0..=n {
                s.set(x, z, z, slope(x, z));
                s.set(x, 0, z, y_face(x, z));
            }
        }
        for z in 1..=m {
            for y in (1..z).rev() {
                for x in 1..=n {
                    let v = or_step(
                        s.get(x - 1, y, z - 1),
                        s.get(x - 1, y, z),
                        s.get(x, y, z - 1),
                        s.get(x, y + 1, z),
                        s.get(x - 1, y - 1, z - 1),
                    );
                    s.set(x, y, z, v);
                }
            }
        }
        Ok(s.finish())
    }

    /// Reverse propagation along `(-1, 0, -1)` from the ceiling `z = m`
    /// (closure of `(x, y)`) and the wall `x = n` (closure of `(y, z)`).
    /// The face `y = 0` is filled by the wall rule.
    pub fn propagate_back(
        n: usize,
        m: usize,
        ceiling: impl Fn(usize, usize) -> Scalar,
        wall: impl Fn(usize, usize) -> Scalar,
    ) -> Result<PrismFunction> {
        let mut s = PrismSlots::new(n, m);
        for x in 0..=n {
            for y in 0..=m {
                s.set(x, y, m, ceiling(x, y));
            }
        }
        for z in 0..=m {
            for y in 0..=z {
                if z == m && wall(y, z) != s.get(n, y, m) {
                    return Err(Error::Inconsistent(format!(
                        "ceiling and wall disagree at ({n}, {y}, {m})"
                    )));
                }
                s.set(n, y, z, wall(y, z));
            }
        }
        for z in (1..=m).rev() {
            for x in (1..=n).rev() {
                let v = or_wall_step(s.get(x, 0, z), s.get(x - 1, 0, z), s.get(x, 0, z - 1));
                s.set(x - 1, 0, z - 1, v);
            }
            for y in 1..z {
                for x in (1..=n).rev() {
                    let v = or_step(
                        s.get(x, y, z),
                        s.get(x - 1, y, z),
                        s.get(x, y, z - 1),
                        s.get(x, y + 1, z),
                        s.get(x - 1, y - 1, z - 1),
                    );
                    s.set(x - 1, y, z - 1, v);
                }
            }
        }
        Ok(s.finish())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn at(&self, x: usize, y: usize, z: usize) -> Scalar {
        assert!(
            x <= self.n && y <= z && z <= self.m,
            "point ({x}, {y}, {z}) outside the prism"
        );
        self.values[prism_index(self.m, x, y, z)]
    }

    /// Values at height `z`, as rows `y = 0..=z` of `F(0, y, z) ..= F(n, y, z)`.
    pub fn layer(&self, z: usize) -> Vec<Vec<Scalar>> {
        (0..=z)
            .map(|y| (0..=self.n).map(|x| self.at(x, y, z)).collect())
            .collect()
    }

    /// The slope `F(x, j, j)` as a corner-shaped grid, if it vanishes on the
    /// axes.
    pub fn slope(&self) -> Result<CornerFunction> {
        CornerFunction::from_rows(
            (0..=self.m)
                .map(|j| (0..=self.n).map(|x| self.at(x, j, j)).collect())
                .collect(),
        )
    }
}

impl SpaceFunction for PrismFunction {
    fn value(&self, [x, y, z]: Point) -> Option<Scalar> {
        let inside = x >= 0 && y >= 0 && y <= z && x as usize <= self.n && z as usize <= self.m;
        inside.then(|| self.at(x as usize, y as usize, z as usize))
    }

    fn points(&self) -> Vec<Point> {
        let (n, m) = (self.n as i64, self.m as i64);
        let mut out = Vec::new();
        for z in 0..=m {
            for y in 0..=z {
                for x in 0..=n {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for PrismFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PrismFunction {}x{} ", self.n, self.m)?;
        f.debug_list()
            .entries((0..=self.m).map(|z| self.layer(z)))
            .finish()
    }
}

/// Zero on `x = 0` and `y = 0`, `∫∫a` on the slope, propagated forward.
pub fn prism_propagate(a: &Array) -> PrismFunction {
    let f = a.integrate();
    PrismFunction::propagate(
        a.n(),
        a.m(),
        |_, _| Scalar::ZERO,
        |_, _| Scalar::ZERO,
        |x, j| f.at(x, j),
    )
    .expect("zero faces agree with an integral")
}

/// The ceiling `F(x, y, m)`; equals `∫∫ D a`.
pub fn prism_top(f: &PrismFunction) -> CornerFunction {
    let m = f.m();
    CornerFunction::from_rows(
        (0..=m)
            .map(|y| (0..=f.n()).map(|x| f.at(x, y, m)).collect())
            .collect(),
    )
    .expect("ceiling of a propagated array vanishes on the axes")
}

/// The wall `F(n, y, z)` on the triangle `0 <= y <= z <= m`; equals
/// `∫∫ L a (y, z)`.
pub fn prism_wall(f: &PrismFunction) -> TriangleFunction {
    TriangleFunction::from_fn(f.m(), |y, z| f.at(f.n(), y, z))
}

// ∫∫ of an L-tight n x m array from its values on y <= z: the array vanishes
// below the diagonal, so the integral is constant in i beyond i = j.
fn wall_to_corner(wall: &TriangleFunction, n: usize) -> CornerFunction {
    CornerFunction::from_fn(n, wall.n(), |i, j| wall.at(i.min(j), j))
}

fn corner_to_wall(f: &CornerFunction) -> TriangleFunction {
    TriangleFunction::from_fn(f.m(), |y, z| f.at(y.min(f.n()), z))
}

/// Functional condensation: `(D a, L a)` read from the prism.
pub fn rsk(a: &Array) -> (Array, Array) {
    let f = prism_propagate(a);
    let d = prism_top(&f)
        .mixed_derivative()
        .expect("ceiling is supermodular");
    let l = wall_to_corner(&prism_wall(&f), a.n())
        .mixed_derivative()
        .expect("wall is supermodular");
    (d, l)
}

/// The unique `a` with `D a = d` and `L a = l`, by reverse propagation.
pub fn rsk_inverse(d: &Array, l: &Array) -> Result<Array> {
    if !d.is_d_tight() {
        return Err(Error::NotTight { direction: 'D' });
    }
    if !l.is_l_tight() {
        return Err(Error::NotTight { direction: 'L' });
    }
    if d.n() != l.n() || d.m() != l.m() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} and {}x{}",
            d.n(),
            d.m(),
            l.n(),
            l.m()
        )));
    }
    if !same_up_to_zeros(&d.row_sums(), &l.col_sums()) {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            d.row_sums(),
            l.col_sums()
        )));
    }
    let (n, m) = (d.n(), d.m());
    let top = d.integrate();
    let wall = corner_to_wall(&l.integrate());
    let f = PrismFunction::propagate_back(n, m, |x, y| top.at(x, y), |y, z| wall.at(y, z))?;
    for z in 0..=m {
        for y in 0..=z {
            if !f.at(0, y, z).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "recovered face x = 0 is {} at ({y}, {z})",
                    f.at(0, y, z)
                )));
            }
        }
        for x in 0..=n {
            if !f.at(x, 0, z).is_zero() {
                return Err(Error::Inconsistent(format!(
                    "recovered face y = 0 is {} at ({x}, {z})",
                    f.at(x, 0, z)
                )));
            }
        }
    }
    f.slope()?
        .mixed_derivative()
        .map_err(|e| Error::Inconsistent(format!("recovered slope: {e}")))
}

/// Values on the tetrahedron `{x, y, z >= 0, x + y + z <= n}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TetraFunction {
    n: usize,
    // dense (n + 1)^3 cube; entries outside the tetrahedron are unused
    values: Vec<Scalar>,
}

impl TetraFunction {
    fn index(&self, x: usize, y: usize, z: usize) -> usize {
        (z * (self.n + 1) + y) * (self.n + 1) + x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, x: usize, y: usize, z: usize) -> Scalar {
        assert!(
            x + y + z <= self.n,
            "point ({x}, {y}, {z}) outside the tetrahedron"
        );
        self.values[self.index(x, y, z)]
    }
}

impl SpaceFunction for TetraFunction {
    fn value(&self, [x, y, z]: Point) -> Option<Scalar> {
        let inside = x >= 0 && y >= 0 && z >= 0 && (x + y + z) as usize <= self.n;
        inside.then(|| self.at(x as usize, y as usize, z as usize))
    }

    fn points(&self) -> Vec<Point> {
        let n = self.n as i64;
        let mut out = Vec::new();
        for z in 0..=n {
            for y in 0..=n - z {
                for x in 0..=n - z - y {
                    out.push([x, y, z]);
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for TetraFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for [x, y, z] in self.points() {
            m.entry(&(x, y, z), &self.at(x as usize, y as usize, z as usize));
        }
        m.finish()
    }
}

/// Propagation along `(-1, 1, 1)` from the ground `F(x, y, 0)` and the front
/// wall `F(x, 0, z)`, given as closures of `(x, y)` and `(x, z)`.
pub fn tetra_propagate(
    n: usize,
    ground: impl Fn(usize, usize) -> Scalar,
    front: impl Fn(usize, usize) -> Scalar,
) -> Result<TetraFunction> {
    for x in 0..=n {
        if ground(x, 0) != front(x, 0) {
            return Err(Error::Inconsistent(format!(
                "ground and front wall disagree at ({x}, 0, 0)"
            )));
        }
    }
    let mut t = TetraFunction {
        n,
        values: vec![Scalar::ZERO; (n + 1).pow(3)],
    };
    for x in 0..=n {
        for y in 0..=n - x {
            let i = t.index(x, y, 0);
            t.values[i] = ground(x, y);
        }
        for z in 0..=n - x {
            let i = t.index(x, 0, z);
            t.values[i] = front(x, z);
        }
    }
    for s in 2..=n {
        for y in 1..s {
            let z = s - y;
            for x in 0..=n - s {
                let v = or_step(
                    t.at(x + 1, y - 1, z - 1),
                    t.at(x, y, z - 1),
                    t.at(x + 1, y - 1, z),
                    t.at(x, y - 1, z),
                    t.at(x + 1, y, z - 1),
                );
                let i = t.index(x, y, z);
                t.values[i] = v;
            }
        }
    }
    Ok(t)
}
