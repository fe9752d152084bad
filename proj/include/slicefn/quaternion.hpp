#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>
#include <optional>

namespace slicefn {

using Complex = std::complex<double>;

// Library default for absolute comparisons.
inline constexpr double kDefaultTolerance = 1e-10;

// Real quaternion w + x i + y j + z k with the Hamilton product.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double real) : w(real) {}  // NOLINT: reals embed in H
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }
  constexpr std::array<double, 4> components() const { return {w, x, y, z}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  // Squared norm n(q) = q q^c.
  constexpr double norm() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm()); }
  // Throws DomainError for q = 0.
  Quaternion inverse() const;

  constexpr bool is_real() const { return x == 0.0 && y == 0.0 && z == 0.0; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= 1.0 / s; }

// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

// Cross product of the vector parts.
constexpr Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return {0, a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).abs(); }

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Unit pure quaternion, i.e. an element of the imaginary sphere S.
class ImaginaryUnit {
 public:
  // Accepts vectors whose length is within `tol` of 1 and renormalises them.
  // Throws ArgumentError otherwise.
  ImaginaryUnit(double x, double y, double z, double tol = 1e-6);
  explicit ImaginaryUnit(const Quaternion& q, double tol = 1e-6);

  // Normalises any nonzero vector (real part is ignored).
  static ImaginaryUnit normalized(const Quaternion& v);

  static ImaginaryUnit i() { return ImaginaryUnit(1, 0, 0); }
  static ImaginaryUnit j() { return ImaginaryUnit(0, 1, 0); }
  static ImaginaryUnit k() { return ImaginaryUnit(0, 0, 1); }

  const Quaternion& quaternion() const { return q_; }
  operator const Quaternion&() const { return q_; }  // NOLINT
  ImaginaryUnit operator-() const { return ImaginaryUnit(-q_.x, -q_.y, -q_.z); }

  friend bool operator==(const ImaginaryUnit&, const ImaginaryUnit&) = default;

 private:
  struct Trusted {};
  ImaginaryUnit(Trusted, const Quaternion& q) : q_(q) {}
  Quaternion q_;
};

// Point on the semislice C_I: alpha + beta I.
inline Quaternion on_slice(double alpha, double beta, const ImaginaryUnit& I) {
  return Quaternion(alpha) + beta * I.quaternion();
}

// x = alpha + beta I with beta = |Im x| >= 0; I is empty on the real axis.
struct SplitPoint {
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<ImaginaryUnit> unit;

  Complex z() const { return {alpha, beta}; }
};

SplitPoint split(const Quaternion& x);

// Element re + sqrt(-1) im of the complexified quaternions H (x) C. The
// imaginary unit sqrt(-1) is central and distinct from every unit of H.
struct ComplexifiedQuaternion {
  Quaternion re;
  Quaternion im;

  constexpr ComplexifiedQuaternion() = default;
  constexpr ComplexifiedQuaternion(const Quaternion& re_, const Quaternion& im_ = {})  // NOLINT
      : re(re_), im(im_) {}
  constexpr ComplexifiedQuaternion(double real) : re(real) {}  // NOLINT
  // Embeds a complex scalar a + sqrt(-1) b.
  static constexpr ComplexifiedQuaternion from_complex(Complex c) {
    return {Quaternion(c.real()), Quaternion(c.imag())};
  }

  // w^c: quaternionic conjugation of both parts.
  constexpr ComplexifiedQuaternion c_conj() const { return {re.conj(), im.conj()}; }
  // bar(w): negates the sqrt(-1) part.
  constexpr ComplexifiedQuaternion bar() const { return {re, -im}; }

  // Euclidean norm on R^8.
  double abs() const { return std::sqrt(re.norm() + im.norm()); }
  // Scalar (1-coordinate) parts as a complex number.
  constexpr Complex scalar_part() const { return {re.w, im.w}; }

  constexpr ComplexifiedQuaternion& operator+=(const ComplexifiedQuaternion& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr ComplexifiedQuaternion& operator-=(const ComplexifiedQuaternion& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr ComplexifiedQuaternion operator-() const { return {-re, -im}; }

  friend constexpr bool operator==(const ComplexifiedQuaternion&,
                                   const ComplexifiedQuaternion&) = default;
};

using Hc = ComplexifiedQuaternion;

constexpr Hc operator+(Hc a, const Hc& b) { return a += b; }
constexpr Hc operator-(Hc a, const Hc& b) { return a -= b; }

// (a + sqrt(-1) b)(c + sqrt(-1) d) = (ac - bd) + sqrt(-1)(ad + bc).
constexpr Hc operator*(const Hc& u, const Hc& v) {
  return {u.re * v.re - u.im * v.im, u.re * v.im + u.im * v.re};
}

// Multiplication by a central complex scalar.
constexpr Hc operator*(Complex s, const Hc& u) {
  return {s.real() * u.re - s.imag() * u.im, s.real() * u.im + s.imag() * u.re};
}
constexpr Hc operator*(const Hc& u, Complex s) { return s * u; }
constexpr Hc operator*(double s, const Hc& u) { return {s * u.re, s * u.im}; }
constexpr Hc operator*(const Hc& u, double s) { return {s * u.re, s * u.im}; }

enum class HcConjugation { CConj, Bar };

constexpr Hc conjugate(const Hc& w, HcConjugation mode) {
  return mode == HcConjugation::CConj ? w.c_conj() : w.bar();
}

bool approx_equal(const Hc& a, const Hc& b, double tol = kDefaultTolerance);

std::ostream& operator<<(std::ostream& os, const Hc& w);

}  // namespace slicefn
