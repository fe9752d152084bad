#include "slicefn/quaternion.hpp"

#include <ostream>

#include "slicefn/errors.hpp"

namespace slicefn {

Quaternion Quaternion::inverse() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("inverse of the zero quaternion");
  return conj() / n;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return distance(a, b) <= tol;
}

bool approx_equal(const Hc& a, const Hc& b, double tol) { return (a - b).abs() <= tol; }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

std::ostream& operator<<(std::ostream& os, const Hc& w) {
  return os << '{' << w.re << " + sqrt(-1) " << w.im << '}';
}

ImaginaryUnit::ImaginaryUnit(double x, double y, double z, double tol)
    : ImaginaryUnit(Quaternion(0, x, y, z), tol) {}

ImaginaryUnit::ImaginaryUnit(const Quaternion& q, double tol) {
  if (std::abs(q.w) > tol) throw ArgumentError("imaginary unit must have zero real part");
  const double len = q.imag().abs();
  if (std::abs(len - 1.0) > tol) throw ArgumentError("imaginary unit must have unit length");
  q_ = q.imag() / len;
}

ImaginaryUnit ImaginaryUnit::normalized(const Quaternion& v) {
  const double len = v.imag().abs();
  if (len == 0.0) throw ArgumentError("cannot normalise a zero vector to an imaginary unit");
  return ImaginaryUnit(Trusted{}, v.imag() / len);
}

SplitPoint split(const Quaternion& x) {
  const Quaternion v = x.imag();
  const double beta = v.abs();
  if (beta == 0.0) return {x.w, 0.0, std::nullopt};
  return {x.w, beta, ImaginaryUnit::normalized(v)};
}

}  // namespace slicefn
