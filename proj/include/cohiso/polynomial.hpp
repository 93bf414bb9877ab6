#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cohiso/ring.hpp"
#include "cohiso/scalar.hpp"

namespace cohiso {

/// Multivariate polynomial over Q(sqrt(-3)) in canonical form: terms strictly
/// descending in the signature's monomial order, no zero coefficients.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    ExactScalar coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingSignature sig) : sig_(std::move(sig)) {}

  static Polynomial zero(const RingSignature& sig) { return Polynomial(sig); }

  static Polynomial constant(const RingSignature& sig, const ExactScalar& c) {
    Polynomial p(sig);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(sig.arity()), c});
    return p;
  }

  static Polynomial variable(const RingSignature& sig, std::size_t index, std::uint32_t power = 1) {
    if (index >= sig.arity()) throw std::out_of_range("variable index");
    Polynomial p(sig);
    if (power == 0) return constant(sig, ExactScalar(1));
    Monomial m(sig.arity());
    m.exp[index] = power;
    p.terms_.push_back({m, ExactScalar(1)});
    return p;
  }

  static Polynomial monomial(const RingSignature& sig, Monomial m, ExactScalar c) {
    Polynomial p(sig);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Builds canonical form from arbitrary (monomial, coefficient) pairs.
  static Polynomial from_terms(const RingSignature& sig,
                               const std::vector<std::pair<Monomial, ExactScalar>>& raw) {
    std::map<std::vector<std::uint32_t>, ExactScalar> acc;
    for (const auto& [m, c] : raw) {
      if (m.exp.size() != sig.arity()) throw std::invalid_argument("monomial arity mismatch");
      auto it = acc.find(m.exp);
      if (it == acc.end())
        acc.emplace(m.exp, c);
      else
        it->second += c;
    }
    Polynomial p(sig);
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({Monomial(e), c});
    std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
      return compare(a.mono, b.mono, sig.order) > 0;
    });
    return p;
  }

  const RingSignature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  ExactScalar constant_value() const {
    if (terms_.empty()) return ExactScalar(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_[0].coeff;
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    return terms_[0].mono;
  }
  const ExactScalar& leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_[0].coeff;
  }

  /// Total degree in the plain (unweighted) sense; -1 for the zero polynomial.
  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.mono.degree()));
    return d;
  }

  bool has_rational_coefficients() const {
    for (const auto& t : terms_)
      if (!t.coeff.is_rational()) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r(sig_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.check_same_signature(g);
    Polynomial r(f.sig_);
    r.terms_.reserve(f.terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms_.size() && j < g.terms_.size()) {
      int c = compare(f.terms_[i].mono, g.terms_[j].mono, f.sig_.order);
      if (c > 0) {
        r.terms_.push_back(f.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(g.terms_[j++]);
      } else {
        ExactScalar s = f.terms_[i].coeff + g.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({f.terms_[i].mono, std::move(s)});
        ++i, ++j;
      }
    }
    for (; i < f.terms_.size(); ++i) r.terms_.push_back(f.terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
  }

  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_same_signature(g);
    std::vector<std::pair<Monomial, ExactScalar>> raw;
    raw.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) raw.emplace_back(a.mono * b.mono, a.coeff * b.coeff);
    return from_terms(f.sig_, raw);
  }

  friend Polynomial operator*(const ExactScalar& c, const Polynomial& f) {
    Polynomial r(f.sig_);
    if (c.is_zero()) return r;
    r.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) r.terms_.push_back({t.mono, c * t.coeff});
    return r;
  }

  friend Polynomial operator*(const Polynomial& f, const ExactScalar& c) { return c * f; }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(sig_, ExactScalar(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return leading_coefficient().inverse() * (*this);
  }

  /// Image under the ring map sending variable i to images[i]; images share
  /// one target signature.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != sig_.arity())
      throw std::invalid_argument("substitution needs one image per variable");
    for (const auto& im : images) images[0].check_same_signature(im);
    const RingSignature& target = images.empty() ? sig_ : images[0].signature();
    Polynomial r = Polynomial::zero(target);
    for (const auto& t : terms_) {
      Polynomial term = Polynomial::constant(target, t.coeff);
      for (std::size_t i = 0; i < sig_.arity(); ++i)
        if (t.mono.exp[i] > 0) term = term * images[i].pow(t.mono.exp[i]);
      r = r + term;
    }
    return r;
  }

  /// Evaluation at scalars; a substitution into the empty monomial ring.
  ExactScalar evaluate(const std::vector<ExactScalar>& point) const {
    if (point.size() != sig_.arity())
      throw std::invalid_argument("evaluation needs one value per variable");
    ExactScalar total(0);
    for (const auto& t : terms_) {
      ExactScalar v = t.coeff;
      for (std::size_t i = 0; i < sig_.arity(); ++i)
        for (std::uint32_t k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
      total += v;
    }
    return total;
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.sig_ != g.sig_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
      if (f.terms_[i].mono != g.terms_[i].mono || f.terms_[i].coeff != g.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

  /// Canonical total order: by leading terms first. Used for deterministic
  /// basis sorting, not algebra.
  friend bool canonical_less(const Polynomial& f, const Polynomial& g) {
    std::size_t n = std::min(f.terms_.size(), g.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare(f.terms_[i].mono, g.terms_[i].mono, f.sig_.order);
      if (c != 0) return c < 0;
      if (f.terms_[i].coeff != g.terms_[i].coeff) return f.terms_[i].coeff < g.terms_[i].coeff;
    }
    return f.terms_.size() < g.terms_.size();
  }

  void check_same_signature(const Polynomial& other) const {
    if (sig_ != other.sig_)
      throw std::invalid_argument("polynomial signature mismatch");
  }

private:
  RingSignature sig_;
  std::vector<Term> terms_;
};

}  // namespace cohiso
