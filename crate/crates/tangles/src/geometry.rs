//! Exact scalar and point arithmetic over the field ℚ[√3].
//!
//! Every coordinate in the kernel is a value `a + b√3` with rational `a`, `b`.
//! Because √3 is irrational the representation is unique, so equality, signs
//! and comparisons are all decidable exactly. Enclosed areas additionally
//! carry a π-linear part and live in [`AreaValue`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::TangleError;

/// Arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator by `num-rational`.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A scalar `a + b√3` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt3 {
    a: Rational,
    b: Rational,
}

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt3 { a: rat(n), b: rat(0) }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt3 { a, b: rat(0) }
    }

    /// `n√3`.
    pub fn sqrt3_times(n: i64) -> Self {
        QSqrt3 { a: rat(0), b: rat(n) }
    }

    /// The pair `(a, b)` with value `a + b√3`.
    pub fn parts(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn zero() -> Self {
        QSqrt3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign of the real value: −1, 0 or +1.
    ///
    /// When the coefficients have mixed signs the comparison reduces to
    /// `a² <=> 3b²`; equality there would force √3 rational, so it only
    /// happens at 0.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (s, t) if s == t => s,
            (_, t) => {
                let disc = rat(3) * &self.b * &self.b - &self.a * &self.a;
                let s = rational_sign(&disc);
                debug_assert!(s != 0, "a^2 = 3b^2 with a,b nonzero is impossible");
                t * s
            }
        }
    }

    /// Decimal approximation, for display only. `sig` significant digits.
    pub fn to_decimal(&self, sig: usize) -> String {
        decimal_string(&(self.a.clone() + &self.b * sqrt3_approx()), sig)
    }

    pub fn to_f64(&self) -> f64 {
        (self.a.clone() + &self.b * sqrt3_approx()).to_f64().unwrap_or(f64::NAN)
    }
}

fn rational_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<'a> Add<&'a QSqrt3> for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a + &rhs.a, b: self.b + &rhs.b }
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl<'a> Sub<&'a QSqrt3> for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a - &rhs.a, b: self.b - &rhs.b }
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: QSqrt3) -> QSqrt3 {
        // (a1 + b1√3)(a2 + b2√3) = a1a2 + 3 b1b2 + (a1b2 + a2b1)√3
        QSqrt3 {
            a: &self.a * &rhs.a + rat(3) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl<'a, 'b> Mul<&'b QSqrt3> for &'a QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        self.clone() * rhs.clone()
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 { a: -self.a, b: -self.b }
    }
}

impl Mul<Rational> for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: Rational) -> QSqrt3 {
        QSqrt3 { a: self.a * &rhs, b: self.b * &rhs }
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.clone() - other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}√3", self.a, self.b)
    }
}

/// An exact point of the plane, coordinates in units of the circle radius r.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactPoint {
    pub x: QSqrt3,
    pub y: QSqrt3,
}

impl ExactPoint {
    pub fn new(x: QSqrt3, y: QSqrt3) -> Self {
        ExactPoint { x, y }
    }

    pub fn midpoint(p: &ExactPoint, q: &ExactPoint) -> ExactPoint {
        let half = rat_frac(1, 2);
        ExactPoint {
            x: (p.x.clone() + &q.x) * half.clone(),
            y: (p.y.clone() + &q.y) * half,
        }
    }

    pub fn dist_squared(p: &ExactPoint, q: &ExactPoint) -> QSqrt3 {
        let dx = p.x.clone() - &q.x;
        let dy = p.y.clone() - &q.y;
        dx.clone() * dx + dy.clone() * dy
    }

    /// `self − other` as a vector.
    pub fn sub(&self, other: &ExactPoint) -> ExactPoint {
        ExactPoint {
            x: self.x.clone() - &other.x,
            y: self.y.clone() - &other.y,
        }
    }

    pub fn dot(p: &ExactPoint, q: &ExactPoint) -> QSqrt3 {
        p.x.clone() * q.x.clone() + p.y.clone() * q.y.clone()
    }

    pub fn cross(p: &ExactPoint, q: &ExactPoint) -> QSqrt3 {
        p.x.clone() * q.y.clone() - p.y.clone() * q.x.clone()
    }
}

/// Exact enclosed area `alg + pi_coeff·π`, in units of r².
///
/// π is transcendental over ℚ[√3], so the representation is unique and
/// equality is componentwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AreaValue {
    pub alg: QSqrt3,
    pub pi_coeff: QSqrt3,
}

impl AreaValue {
    pub fn new(alg: QSqrt3, pi_coeff: QSqrt3) -> Self {
        AreaValue { alg, pi_coeff }
    }

    pub fn zero() -> Self {
        AreaValue { alg: QSqrt3::zero(), pi_coeff: QSqrt3::zero() }
    }

    pub fn add(&self, other: &AreaValue) -> AreaValue {
        AreaValue {
            alg: self.alg.clone() + &other.alg,
            pi_coeff: self.pi_coeff.clone() + &other.pi_coeff,
        }
    }

    pub fn scale(&self, k: &Rational) -> AreaValue {
        AreaValue {
            alg: self.alg.clone() * k.clone(),
            pi_coeff: self.pi_coeff.clone() * k.clone(),
        }
    }

    /// Decimal approximation with `sig` significant digits, display only.
    pub fn approx(&self, sig: usize) -> String {
        let (aa, ab) = self.alg.parts();
        let (pa, pb) = self.pi_coeff.parts();
        let v = aa.clone()
            + ab * sqrt3_approx()
            + (pa.clone() + pb * sqrt3_approx()) * pi_approx();
        decimal_string(&v, sig)
    }

    /// Exact display string in the shape `a + b√3 + cπ (r²)`.
    pub fn display_r2(&self) -> String {
        let (aa, ab) = self.alg.parts();
        let (pa, pb) = self.pi_coeff.parts();
        let pi_part = if pb.is_zero() {
            format!("{}π", pa)
        } else {
            format!("({} + {}√3)π", pa, pb)
        };
        format!("{} + {}√3 + {} (r²)", aa, ab, pi_part)
    }
}

/// Direction index k: the angle 30°·k, k ∈ 0..12.
///
/// 30° is the common refinement of the three tilings' link angles
/// (90°/120°/60°) and of every lattice edge direction, so arc extents are
/// always integer numbers of these steps.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Dir(u8);

/// Twice the unit vector of direction k, as the integer quadruple
/// (xa, xb, yc, yd) meaning (xa + xb√3, yc + yd√3).
const DOUBLED_UNIT: [(i64, i64, i64, i64); 12] = [
    (2, 0, 0, 0),   // 0°
    (0, 1, 1, 0),   // 30°
    (1, 0, 0, 1),   // 60°
    (0, 0, 2, 0),   // 90°
    (-1, 0, 0, 1),  // 120°
    (0, -1, 1, 0),  // 150°
    (-2, 0, 0, 0),  // 180°
    (0, -1, -1, 0), // 210°
    (-1, 0, 0, -1), // 240°
    (0, 0, -2, 0),  // 270°
    (1, 0, 0, -1),  // 300°
    (0, 1, -1, 0),  // 330°
];

impl Dir {
    pub fn new(k: i64) -> Dir {
        Dir(k.rem_euclid(12) as u8)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn step(self, delta: i64) -> Dir {
        Dir::new(self.0 as i64 + delta)
    }

    pub fn opposite(self) -> Dir {
        self.step(6)
    }

    /// CCW steps from `from` to `to`, in 0..12.
    pub fn steps_ccw(from: Dir, to: Dir) -> u8 {
        ((to.0 as i64 - from.0 as i64).rem_euclid(12)) as u8
    }

    /// Twice the unit vector, integer quadruple (xa, xb, yc, yd).
    pub fn doubled_unit(self) -> (i64, i64, i64, i64) {
        DOUBLED_UNIT[self.0 as usize]
    }

    /// The unit vector as an exact point.
    pub fn unit_point(self) -> ExactPoint {
        let (xa, xb, yc, yd) = self.doubled_unit();
        let half = rat_frac(1, 2);
        ExactPoint {
            x: QSqrt3::new(rat(xa), rat(xb)) * half.clone(),
            y: QSqrt3::new(rat(yc), rat(yd)) * half,
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// √3 to 40 decimal digits, ample for any display precision used here.
fn sqrt3_approx() -> Rational {
    BigRational::new(
        "17320508075688772935274463415058723669428".parse::<BigInt>().unwrap(),
        BigInt::from(10u8).pow(40),
    )
}

/// π to 40 decimal digits.
fn pi_approx() -> Rational {
    BigRational::new(
        "31415926535897932384626433832795028841972".parse::<BigInt>().unwrap(),
        BigInt::from(10u8).pow(40),
    )
}

/// Render a rational as a decimal string with `sig` significant digits,
/// round-half-away-from-zero.
pub fn decimal_string(v: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if v.is_zero() {
        return "0".to_string();
    }
    let neg = v.is_negative();
    let v = v.abs();
    // magnitude: largest e with 10^e <= v
    let mut e: i64 = 0;
    let ten = rat(10);
    let one = Rational::one();
    let mut probe = v.clone();
    if probe >= one {
        while probe >= ten {
            probe /= ten.clone();
            e += 1;
        }
    } else {
        while probe < one {
            probe *= ten.clone();
            e -= 1;
        }
    }
    // scaled = round(v * 10^(sig-1-e)) has exactly `sig` digits
    let shift = sig as i64 - 1 - e;
    let pow = BigRational::from_integer(BigInt::from(10u8)).pow(shift as i32);
    let scaled = v * pow;
    let rounded = (scaled + rat_frac(1, 2)).floor().to_integer();
    let mut digits = rounded.to_string();
    // rounding may carry into an extra digit (e.g. 999.95 -> 1000)
    let extra = digits.len() as i64 - sig as i64;
    let point = e + 1 + extra.max(0);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    if point <= 0 {
        s.push_str("0.");
        for _ in 0..(-point) {
            s.push('0');
        }
        s.push_str(digits.trim_end_matches('0'));
        if s.ends_with('.') {
            s.pop();
        }
    } else if (point as usize) >= digits.len() {
        for _ in 0..(point as usize - digits.len()) {
            digits.push('0');
        }
        s.push_str(&digits);
    } else {
        s.push_str(&digits[..point as usize]);
        let frac = digits[point as usize..].trim_end_matches('0');
        if !frac.is_empty() {
            s.push('.');
            s.push_str(frac);
        }
    }
    s
}

/// Parse a rational string of the form `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational, TangleError> {
    let bad = || TangleError::Json(format!("invalid rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = s.trim().parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Format a rational as `"n"` or `"n/d"`.
pub fn rational_string(v: &Rational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn q(a: i64, b: i64) -> QSqrt3 {
        QSqrt3::new(rat(a), rat(b))
    }

    #[test]
    fn conjugate_product() {
        assert_eq!(q(1, 1) * q(1, -1), q(-2, 0));
    }

    #[test]
    fn additive_identity() {
        let x = q(7, -3);
        assert_eq!(QSqrt3::zero() + &x, x);
    }

    #[test]
    fn square_of_one_plus_sqrt3() {
        // (a+b√3)² = a²+3b² + 2ab√3
        assert_eq!(q(1, 1).clone() * q(1, 1), q(4, 2));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q(-3, 2).sign(), 1);
        assert_eq!(q(0, 0).sign(), 0);
        assert_eq!(q(2, -1).sign(), 1);
        assert_eq!(q(-2, 1).sign(), -1);
        assert_eq!(q(3, -2).sign(), -1);
    }

    #[test]
    fn sign_matches_float_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a9e);
        for _ in 0..100_000 {
            let a = rng.gen_range(-100i64..=100);
            let b = rng.gen_range(-100i64..=100);
            let ad = rng.gen_range(1i64..=9);
            let bd = rng.gen_range(1i64..=9);
            let x = QSqrt3::new(rat_frac(a, ad), rat_frac(b, bd));
            let f = a as f64 / ad as f64 + (b as f64 / bd as f64) * 3f64.sqrt();
            if f.abs() > 1e-9 {
                assert_eq!(x.sign() as f64, f.signum(), "a={a}/{ad} b={b}/{bd}");
            }
        }
    }

    #[test]
    fn point_midpoint_dist_cross() {
        let o = ExactPoint::new(q(0, 0), q(0, 0));
        let p = ExactPoint::new(q(2, 0), q(0, 0));
        assert_eq!(ExactPoint::midpoint(&o, &p), ExactPoint::new(q(1, 0), q(0, 0)));
        // dist²((0,0),(1,√3)) = 4: the lattice edge length is 2
        let u = ExactPoint::new(q(1, 0), q(0, 1));
        assert_eq!(ExactPoint::dist_squared(&o, &u), q(4, 0));
        let ex = ExactPoint::new(q(1, 0), q(0, 0));
        let ey = ExactPoint::new(q(0, 0), q(1, 0));
        assert_eq!(ExactPoint::cross(&ex, &ey), q(1, 0));
    }

    #[test]
    fn area_value_formula_and_display() {
        // square tiling, size 4: 16 + π
        let a = AreaValue::new(q(16, 0), q(1, 0));
        assert_eq!(a.display_r2(), "16 + 0√3 + 1π (r²)");
        let b = AreaValue::new(QSqrt3::zero(), q(1, 0));
        assert_eq!(b.add(&AreaValue::zero()), b);
    }

    #[test]
    fn area_approx_decimal() {
        // 6√3 + π = 13.5339479... (computed independently via f64 below)
        let a = AreaValue::new(q(0, 6), q(1, 0));
        let expect = 6.0 * 3f64.sqrt() + std::f64::consts::PI;
        let shown: f64 = a.approx(6).parse().unwrap();
        assert!((shown - expect).abs() < 1e-4, "shown {shown} expect {expect}");
        assert_eq!(a.approx(6), "13.5339");
    }

    #[test]
    fn decimal_string_edges() {
        assert_eq!(decimal_string(&rat(0), 6), "0");
        assert_eq!(decimal_string(&rat(-25), 3), "-25.0");
        assert_eq!(decimal_string(&rat_frac(1, 8), 3), "0.125");
        assert_eq!(decimal_string(&rat_frac(99995, 100), 4), "1000");
        assert_eq!(decimal_string(&rat(123456), 4), "123500");
    }

    #[test]
    fn dir_steps() {
        assert_eq!(Dir::steps_ccw(Dir::new(9), Dir::new(0)), 3);
        assert_eq!(Dir::new(0).opposite(), Dir::new(6));
        let p = Dir::new(2).unit_point();
        assert_eq!(p, ExactPoint::new(QSqrt3::new(rat_frac(1, 2), rat(0)), QSqrt3::new(rat(0), rat_frac(1, 2))));
    }

    #[test]
    fn ordering_is_total_and_exact() {
        let vals = [q(0, 0), q(1, 0), q(0, 1), q(2, -1), q(-3, 2), q(7, -4)];
        let mut sorted = vals.to_vec();
        sorted.sort();
        let mut floats: Vec<f64> = sorted.iter().map(|v| v.to_f64()).collect();
        let mut resorted = floats.clone();
        resorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(floats.len(), resorted.len());
        floats
            .iter()
            .zip(resorted.iter())
            .for_each(|(a, b)| assert!((a - b).abs() < 1e-12));
        floats.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }

    proptest::proptest! {
        #[test]
        fn add_commutes_and_zero_unique(a1 in -50i64..50, b1 in -50i64..50, a2 in -50i64..50, b2 in -50i64..50) {
            let x = q(a1, b1);
            let y = q(a2, b2);
            proptest::prop_assert_eq!(x.clone() + &y, y.clone() + &x);
            let d = x.clone() - &y;
            proptest::prop_assert_eq!(d.is_zero(), a1 == a2 && b1 == b2);
            proptest::prop_assert_eq!(d.sign() == 0, d.is_zero());
        }

        #[test]
        fn area_add_assoc(c in proptest::collection::vec(-20i64..20, 6)) {
            let x = AreaValue::new(q(c[0], c[1]), QSqrt3::zero());
            let y = AreaValue::new(q(c[2], 0), q(c[3], 0));
            let z = AreaValue::new(q(c[4], c[5]), q(1, 0));
            proptest::prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            proptest::prop_assert_eq!(x.add(&y), y.add(&x));
        }
    }
}
