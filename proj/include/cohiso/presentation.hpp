#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohiso/groebner.hpp"
#include "cohiso/linalg.hpp"
#include "cohiso/parser.hpp"

namespace cohiso {

/// Provenance tag carried by presentations built by the named constructors;
/// drives the structured isomorphism fast paths.
enum class RingKind { Generic, Flag, ProjectiveSpace, Hu, Cp2Bott, Cp3Bott };

inline std::string ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::Flag: return "flag";
    case RingKind::ProjectiveSpace: return "cpn";
    case RingKind::Hu: return "hu";
    case RingKind::Cp2Bott: return "cp2";
    case RingKind::Cp3Bott: return "cp3";
    default: return "generic";
  }
}

inline RingKind ring_kind_from_name(const std::string& s) {
  if (s == "flag") return RingKind::Flag;
  if (s == "cpn") return RingKind::ProjectiveSpace;
  if (s == "hu") return RingKind::Hu;
  if (s == "cp2") return RingKind::Cp2Bott;
  if (s == "cp3") return RingKind::Cp3Bott;
  return RingKind::Generic;
}

/// Cohomological degree of a monomial under the generator degrees.
inline long long weighted_degree(const Monomial& m, const std::vector<int>& degrees) {
  long long d = 0;
  for (std::size_t i = 0; i < m.exp.size(); ++i)
    d += static_cast<long long>(m.exp[i]) * degrees[i];
  return d;
}

/// Returns the common cohomological degree of all terms, or nullopt if mixed.
inline std::optional<long long> homogeneous_degree(const Polynomial& p,
                                                   const std::vector<int>& degrees) {
  std::optional<long long> deg;
  for (const auto& t : p.terms()) {
    long long d = weighted_degree(t.mono, degrees);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg ? deg : std::optional<long long>(0);
}

/// Finitely presented graded-commutative ring in even degrees: generators with
/// degrees, homogeneous relations, and the eagerly computed reduced Groebner
/// basis of the relation ideal. Immutable after construction.
class GradedRingPresentation {
public:
  GradedRingPresentation(RingSignature sig, std::vector<int> degrees,
                         std::vector<Polynomial> relations, Field field,
                         RingKind kind = RingKind::Generic, std::vector<long long> params = {})
      : sig_(std::move(sig)),
        degrees_(std::move(degrees)),
        field_(field),
        kind_(kind),
        params_(std::move(params)) {
    if (degrees_.size() != sig_.arity())
      throw std::invalid_argument("one degree per generator required");
    for (int d : degrees_)
      if (d <= 0 || d % 2 != 0)
        throw std::invalid_argument("generator degrees must be positive and even");
    for (const auto& r : relations) {
      if (r.signature() != sig_) throw std::invalid_argument("relation signature mismatch");
      if (r.is_zero()) continue;
      if (!homogeneous_degree(r, degrees_))
        throw std::invalid_argument("relation is not homogeneous: " + to_string(r));
      if (field_ == Field::Q && !r.has_rational_coefficients())
        throw std::invalid_argument("relation has irrational coefficients over Q");
      relations_.push_back(r);
    }
    if (relations_.empty()) throw std::invalid_argument("presentation needs relations");
    basis_ = buchberger(relations_, sig_);
    if (!is_finite_dimensional())
      throw std::invalid_argument("quotient is not finite dimensional");
  }

  const RingSignature& signature() const { return sig_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  Field field() const { return field_; }
  RingKind kind() const { return kind_; }
  const std::vector<long long>& params() const { return params_; }
  const GroebnerBasis& basis() const { return basis_; }

  Polynomial reduce(const Polynomial& f) const { return normal_form(f, basis_); }

  Polynomial parse(const std::string& text) const { return parse_polynomial(text, sig_); }

  /// Every variable must have a pure power among the leading monomials.
  bool is_finite_dimensional() const {
    for (std::size_t v = 0; v < sig_.arity(); ++v) {
      bool found = false;
      for (const auto& g : basis_.generators) {
        const Monomial& lm = g.leading_monomial();
        bool pure = lm.exp[v] > 0;
        for (std::size_t w = 0; w < sig_.arity() && pure; ++w)
          if (w != v && lm.exp[w] != 0) pure = false;
        if (pure) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  /// Upper bound for the top nonzero degree, from the pure powers.
  long long degree_bound() const {
    long long bound = 0;
    for (std::size_t v = 0; v < sig_.arity(); ++v) {
      std::uint32_t min_power = 0;
      for (const auto& g : basis_.generators) {
        const Monomial& lm = g.leading_monomial();
        bool pure = lm.exp[v] > 0;
        for (std::size_t w = 0; w < sig_.arity() && pure; ++w)
          if (w != v && lm.exp[w] != 0) pure = false;
        if (pure && (min_power == 0 || lm.exp[v] < min_power)) min_power = lm.exp[v];
      }
      bound += static_cast<long long>(min_power - 1) * degrees_[v];
    }
    return bound;
  }

  /// Standard monomials of the given cohomological degree, descending in the
  /// term order.
  std::vector<Monomial> graded_basis(long long degree) const {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    Monomial current(sig_.arity());
    enumerate_basis(0, degree, current, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return compare(a, b, sig_.order) > 0;
    });
    return out;
  }

  long long graded_dimension(long long degree) const {
    return static_cast<long long>(graded_basis(degree).size());
  }

  /// Dimensions in degrees 0, 2, 4, ... up to the top nonzero degree.
  std::vector<long long> dimension_vector() const {
    std::vector<long long> dims;
    long long bound = degree_bound();
    for (long long d = 0; d <= bound; d += 2) dims.push_back(graded_dimension(d));
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
  }

  long long top_degree() const {
    return 2 * (static_cast<long long>(dimension_vector().size()) - 1);
  }

  long long total_dimension() const {
    long long t = 0;
    for (long long d : dimension_vector()) t += d;
    return t;
  }

  /// Coordinates of a homogeneous class on the degree-d standard basis.
  std::vector<ExactScalar> coordinates(const Polynomial& f, long long degree) const {
    Polynomial r = reduce(f);
    std::vector<Monomial> basis_monos = graded_basis(degree);
    std::vector<ExactScalar> coords(basis_monos.size(), ExactScalar(0));
    for (const auto& t : r.terms()) {
      if (weighted_degree(t.mono, degrees_) != degree)
        throw std::invalid_argument("class is not homogeneous of the requested degree");
      bool placed = false;
      for (std::size_t i = 0; i < basis_monos.size(); ++i) {
        if (basis_monos[i] == t.mono) {
          coords[i] = t.coeff;
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("reduced term outside the standard basis");
    }
    return coords;
  }

private:
  void enumerate_basis(std::size_t var, long long remaining, Monomial& current,
                       std::vector<Monomial>& out) const {
    if (var == sig_.arity()) {
      if (remaining != 0) return;
      for (const auto& g : basis_.generators)
        if (g.leading_monomial().divides(current)) return;
      out.push_back(current);
      return;
    }
    std::uint32_t max_e = static_cast<std::uint32_t>(remaining / degrees_[var]);
    for (std::uint32_t e = 0; e <= max_e; ++e) {
      current.exp[var] = e;
      enumerate_basis(var + 1, remaining - static_cast<long long>(e) * degrees_[var], current,
                      out);
    }
    current.exp[var] = 0;
  }

  RingSignature sig_;
  std::vector<int> degrees_;
  std::vector<Polynomial> relations_;
  Field field_;
  RingKind kind_;
  std::vector<long long> params_;
  GroebnerBasis basis_;
};

// ---------------------------------------------------------------------------
// constructors for the rings in scope

/// H^*(SU(3)/T): two degree-2 generators, relations x1^2+x2^2+x1*x2 and
/// x1^2*x2+x1*x2^2.
inline GradedRingPresentation flag_ring(Field field = Field::Q) {
  RingSignature sig({"x1", "x2"});
  std::vector<Polynomial> rels = {parse_polynomial("x1^2 + x2^2 + x1*x2", sig),
                                  parse_polynomial("x1^2*x2 + x1*x2^2", sig)};
  return GradedRingPresentation(sig, {2, 2}, rels, field, RingKind::Flag);
}

/// H^*(CP^m): one degree-2 generator with relation x^(m+1).
inline GradedRingPresentation projective_space_ring(int m, Field field = Field::Q) {
  if (m < 1) throw std::invalid_argument("projective space dimension must be >= 1");
  RingSignature sig({"x"});
  std::vector<Polynomial> rels = {
      Polynomial::variable(sig, 0, static_cast<std::uint32_t>(m + 1))};
  return GradedRingPresentation(sig, {2}, rels, field, RingKind::ProjectiveSpace,
                                {static_cast<long long>(m)});
}

/// Projectivization of a sum of line bundles with the given Chern roots:
/// adjoins y with the single relation prod_i (y + u_i).
inline GradedRingPresentation split_bundle_ring(const GradedRingPresentation& base,
                                                const std::vector<Polynomial>& roots,
                                                RingKind kind = RingKind::Generic,
                                                std::vector<long long> params = {}) {
  if (roots.size() < 2) throw std::invalid_argument("split bundle needs at least two roots");
  std::vector<std::string> vars = base.signature().variables;
  if (base.signature().index_of("y") >= 0)
    throw std::invalid_argument("base ring already uses the fiber variable name y");
  vars.push_back("y");
  RingSignature sig(vars, base.signature().order);

  auto lift = [&](const Polynomial& p) {
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < base.signature().arity(); ++i)
      images.push_back(Polynomial::variable(sig, i));
    return p.substitute(images);
  };

  std::vector<int> degrees = base.degrees();
  degrees.push_back(2);

  std::vector<Polynomial> rels;
  for (const auto& r : base.relations()) rels.push_back(lift(r));
  Polynomial fiber_rel = Polynomial::constant(sig, ExactScalar(1));
  Polynomial y = Polynomial::variable(sig, sig.arity() - 1);
  for (const auto& root : roots) {
    auto deg = homogeneous_degree(root, base.degrees());
    if (!deg || (!root.is_zero() && *deg != 2))
      throw std::invalid_argument("Chern root is not homogeneous of degree 2");
    fiber_rel = fiber_rel * (y + lift(root));
  }
  rels.push_back(fiber_rel);
  return GradedRingPresentation(sig, degrees, rels, base.field(), kind, std::move(params));
}

/// H^*_u over the flag manifold: generators x1, x2, y with the flag relations
/// and y^2 + u*y. The class u is given over the flag signature; integral u
/// records its primitive line in the params for the structured iso paths.
inline GradedRingPresentation hu_ring(const Polynomial& u, Field field = Field::Q) {
  GradedRingPresentation base = flag_ring(field);
  if (u.signature() != base.signature())
    throw std::invalid_argument("u must live over the flag signature");
  auto deg = homogeneous_degree(u, base.degrees());
  if (!deg || (!u.is_zero() && *deg != 2))
    throw std::invalid_argument("u is not homogeneous of degree 2");
  Polynomial zero_root = Polynomial::zero(base.signature());

  std::vector<long long> params;
  ExactScalar a(0), b(0);
  for (const auto& t : u.terms()) {
    if (t.mono.exp[0] == 1)
      a = t.coeff;
    else
      b = t.coeff;
  }
  if (!u.is_zero() && a.is_integer() && b.is_integer()) {
    params = {a.rat().get_num().get_si(), b.rat().get_num().get_si()};
  }
  return split_bundle_ring(base, {zero_root, u}, RingKind::Hu, std::move(params));
}

inline GradedRingPresentation hu_ring_integral(long long a, long long b,
                                               Field field = Field::Q) {
  RingSignature flag_sig({"x1", "x2"});
  Polynomial u = ExactScalar(a) * Polynomial::variable(flag_sig, 0) +
                 ExactScalar(b) * Polynomial::variable(flag_sig, 1);
  return hu_ring(u, field);
}

// ---------------------------------------------------------------------------
// graded homomorphisms

struct HomCheck {
  bool ok = false;
  std::vector<Polynomial> residues;  // normal forms of the mapped relations
};

/// Checks that the degree-2 matrix defines a graded ring homomorphism: every
/// source relation must map into the target ideal. Column i of the matrix
/// holds the coefficients of the image of source generator i.
inline HomCheck verify_graded_hom(const GradedRingPresentation& src,
                                  const GradedRingPresentation& dst, const ScalarMatrix& m) {
  std::size_t n = src.signature().arity();
  if (dst.signature().arity() != n || m.rows() != n || m.cols() != n)
    throw std::invalid_argument("degree-2 matrix size mismatch");
  for (int d : src.degrees())
    if (d != 2) throw std::invalid_argument("source ring not generated in degree 2");
  for (int d : dst.degrees())
    if (d != 2) throw std::invalid_argument("target ring not generated in degree 2");

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img = Polynomial::zero(dst.signature());
    for (std::size_t j = 0; j < n; ++j)
      img = img + m(j, i) * Polynomial::variable(dst.signature(), j);
    images.push_back(img);
  }
  HomCheck out;
  out.ok = true;
  for (const auto& r : src.relations()) {
    Polynomial residue = dst.reduce(r.substitute(images));
    if (!residue.is_zero()) out.ok = false;
    out.residues.push_back(std::move(residue));
  }
  return out;
}

/// Matrix of the induced linear map on degree-d parts, with respect to the
/// standard graded bases. Requires the matrix to define a graded hom.
inline ScalarMatrix hom_degree_matrix(const GradedRingPresentation& src,
                                      const GradedRingPresentation& dst, const ScalarMatrix& m,
                                      long long degree) {
  std::size_t n = src.signature().arity();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial img = Polynomial::zero(dst.signature());
    for (std::size_t j = 0; j < n; ++j)
      img = img + m(j, i) * Polynomial::variable(dst.signature(), j);
    images.push_back(img);
  }
  std::vector<Monomial> src_basis = src.graded_basis(degree);
  std::vector<Monomial> dst_basis = dst.graded_basis(degree);
  ScalarMatrix out(dst_basis.size(), src_basis.size());
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    Polynomial img = Polynomial::monomial(src.signature(), src_basis[c], ExactScalar(1))
                         .substitute(images);
    std::vector<ExactScalar> coords = dst.coordinates(img, degree);
    for (std::size_t r = 0; r < dst_basis.size(); ++r) out(r, c) = coords[r];
  }
  return out;
}

/// Matrix of multiplication by a homogeneous class z from degree d to
/// degree d + deg(z).
inline ScalarMatrix multiplication_matrix(const GradedRingPresentation& pres,
                                          const Polynomial& z, long long from_degree) {
  auto zdeg = homogeneous_degree(z, pres.degrees());
  if (!zdeg) throw std::invalid_argument("class is not homogeneous");
  std::vector<Monomial> src_basis = pres.graded_basis(from_degree);
  long long to_degree = from_degree + *zdeg;
  std::vector<Monomial> dst_basis = pres.graded_basis(to_degree);
  ScalarMatrix out(dst_basis.size(), src_basis.size());
  for (std::size_t c = 0; c < src_basis.size(); ++c) {
    Polynomial prod = z * Polynomial::monomial(pres.signature(), src_basis[c], ExactScalar(1));
    std::vector<ExactScalar> coords = pres.coordinates(prod, to_degree);
    for (std::size_t r = 0; r < dst_basis.size(); ++r) out(r, c) = coords[r];
  }
  return out;
}

/// Pullback along the section of an H^*_u bundle: y maps to 0 and the result
/// is reduced in the flag ring.
inline Polynomial section_pullback(const GradedRingPresentation& hu, const Polynomial& cls) {
  if (hu.signature().index_of("y") != static_cast<int>(hu.signature().arity()) - 1)
    throw std::invalid_argument("presentation has no fiber variable y");
  if (cls.signature() != hu.signature())
    throw std::invalid_argument("class signature mismatch");
  GradedRingPresentation base = flag_ring(hu.field());
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i + 1 < hu.signature().arity(); ++i)
    images.push_back(Polynomial::variable(base.signature(), i));
  images.push_back(Polynomial::zero(base.signature()));
  return base.reduce(cls.substitute(images));
}

}  // namespace cohiso
