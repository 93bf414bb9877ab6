#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cohiso {

/// Coefficient field selector for ring presentations and reports.
enum class Field { Q, QSqrtM3 };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qsqrtm3"; }

inline Field field_from_name(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "Qsqrtm3") return Field::QSqrtM3;
  throw std::invalid_argument("unknown field tag: " + s);
}

/// Element of Q(sqrt(-3)), stored as a + b*sqrt(-3) with exact rationals a, b.
/// Rational values are exactly those with b == 0; mpq_class keeps both parts
/// reduced with positive denominator.
class ExactScalar {
public:
  ExactScalar() : a_(0), b_(0) {}
  ExactScalar(long n) : a_(n), b_(0) {}
  ExactScalar(long num, long den) : a_(num, den), b_(0) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    a_.canonicalize();
  }
  explicit ExactScalar(const mpq_class& a) : a_(a), b_(0) {}
  ExactScalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar sqrt_m3() { return ExactScalar(mpq_class(0), mpq_class(1)); }

  /// Primitive cube root of unity (-1 + sqrt(-3)) / 2.
  static ExactScalar omega() { return ExactScalar(mpq_class(-1, 2), mpq_class(1, 2)); }

  const mpq_class& rat() const { return a_; }
  const mpq_class& rad() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && a_.get_den() == 1; }

  ExactScalar operator-() const { return ExactScalar(-a_, -b_); }

  ExactScalar& operator+=(const ExactScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) {
    // (a + b s)(c + d s) = (ac - 3bd) + (ad + bc) s,  s^2 = -3
    mpq_class na = a_ * o.a_ - 3 * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }

  /// Field norm a^2 + 3 b^2; zero only for the zero element.
  mpq_class norm() const { return a_ * a_ + 3 * b_ * b_; }

  ExactScalar conj() const { return ExactScalar(a_, -b_); }

  ExactScalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class n = norm();
    return ExactScalar(a_ / n, -b_ / n);
  }

  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  /// Arbitrary total order (for canonical sorting only, not an ordered-field order).
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c < 0;
    return cmp(x.b_, y.b_) < 0;
  }

private:
  mpq_class a_;
  mpq_class b_;
};

/// Prints one reduced rational in the coefficient grammar: "n" or "n/d".
inline std::string rational_to_string(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Prints a scalar in the grammar the polynomial parser accepts.
/// Rational integers print bare; other values parenthesized.
inline std::string to_string(const ExactScalar& s) {
  if (s.is_rational()) {
    if (s.rat().get_den() == 1) return s.rat().get_num().get_str();
    return "(" + rational_to_string(s.rat()) + ")";
  }
  std::string out = "(";
  const mpq_class& a = s.rat();
  const mpq_class& b = s.rad();
  if (a != 0) {
    out += rational_to_string(a);
    out += (b > 0) ? " + " : " - ";
    out += rational_to_string(abs(b));
  } else {
    out += rational_to_string(b);
  }
  out += "*sqrtm3)";
  return out;
}

}  // namespace cohiso
