#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cohiso/polynomial.hpp"

namespace cohiso {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class GroebnerTimeout : public std::runtime_error {
public:
  GroebnerTimeout() : std::runtime_error("groebner computation exceeded time budget") {}
};

inline void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw GroebnerTimeout();
}

struct GroebnerBasis {
  RingSignature signature;
  std::vector<Polynomial> generators;
  bool reduced = false;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor; f = sum q_i g_i + remainder
};

/// Full multivariate division: no term of the remainder is divisible by any
/// divisor's leading monomial. Divisors are scanned in order, so the result
/// is deterministic for a fixed divisor list.
inline DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                             const Deadline& deadline = {}) {
  const RingSignature& sig = f.signature();
  for (const auto& g : divisors) {
    f.check_same_signature(g);
    if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");
  }
  DivisionResult out;
  out.remainder = Polynomial::zero(sig);
  out.quotients.assign(divisors.size(), Polynomial::zero(sig));
  Polynomial p = f;
  std::size_t steps = 0;
  while (!p.is_zero()) {
    if (((++steps) & 0x3ff) == 0) check_deadline(deadline);
    const auto& lt = p.terms().front();
    bool reduced_step = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& g = divisors[i];
      if (!g.leading_monomial().divides(lt.mono)) continue;
      Monomial shift = lt.mono / g.leading_monomial();
      ExactScalar factor = lt.coeff / g.leading_coefficient();
      Polynomial q = Polynomial::monomial(sig, shift, factor);
      out.quotients[i] = out.quotients[i] + q;
      p = p - q * g;
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      Polynomial head = Polynomial::monomial(sig, lt.mono, lt.coeff);
      out.remainder = out.remainder + head;
      p = p - head;
    }
  }
  return out;
}

inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                              const Deadline& deadline = {}) {
  return divide(f, divisors, deadline).remainder;
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis,
                              const Deadline& deadline = {}) {
  if (f.signature() != basis.signature)
    throw std::invalid_argument("polynomial signature mismatch");
  return normal_form(f, basis.generators, deadline);
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  f.check_same_signature(g);
  const RingSignature& sig = f.signature();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::monomial(sig, l / f.leading_monomial(),
                                      f.leading_coefficient().inverse());
  Polynomial b = Polynomial::monomial(sig, l / g.leading_monomial(),
                                      g.leading_coefficient().inverse());
  return a * f - b * g;
}

namespace detail {

struct PairKey {
  std::uint64_t degree;
  Monomial lcm_mono;
  std::size_t i, j;
};

inline bool pair_key_less(const PairKey& a, const PairKey& b, MonomialOrder order) {
  if (a.degree != b.degree) return a.degree < b.degree;
  int c = compare(a.lcm_mono, b.lcm_mono, order);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and the coprime and chain criteria; returns the reduced basis.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, const RingSignature& sig,
                                const Deadline& deadline = {}) {
  if (input.empty()) throw std::invalid_argument("buchberger needs at least one generator");
  for (const auto& g : input)
    if (g.signature() != sig) throw std::invalid_argument("generator signature mismatch");

  std::vector<Polynomial> basis;
  for (const auto& g : input)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) {
    // all generators were zero: the zero ideal has an empty reduced basis
    return GroebnerBasis{sig, {}, true};
  }
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
  };
  for (std::size_t n = 1; n < basis.size(); ++n) add_pairs_for(n);

  while (!pending.empty()) {
    check_deadline(deadline);
    auto best = pending.end();
    detail::PairKey best_key{};
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      Monomial l = lcm(basis[it->first].leading_monomial(), basis[it->second].leading_monomial());
      detail::PairKey key{l.degree(), l, it->first, it->second};
      if (best == pending.end() || detail::pair_key_less(key, best_key, sig.order)) {
        best = it;
        best_key = key;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (coprime(li, lj)) continue;
    Monomial lij = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!basis[k].leading_monomial().divides(lij)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        chain = true;
    }
    if (chain) continue;

    Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis, deadline);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }

  // minimal basis: drop generators whose leading monomial is divisible by
  // another retained generator's leading monomial
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // full interreduction
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, deadline);
      if (r != minimal[i]) {
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
        } else {
          minimal[i] = r.monic();
        }
        changed = true;
        break;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b); });
  return GroebnerBasis{sig, std::move(minimal), true};
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& basis,
                         const Deadline& deadline = {}) {
  return normal_form(f, basis, deadline).is_zero();
}

/// True iff the ideal is the whole ring: the reduced basis then consists of
/// the single constant 1.
inline bool ideal_is_unit(const GroebnerBasis& basis) {
  for (const auto& g : basis.generators)
    if (g.is_constant() && !g.is_zero()) return true;
  return false;
}

/// Verifies the defining property of a Groebner basis; used by tests and the
/// acceptance suite.
inline bool all_s_polynomials_reduce_to_zero(const GroebnerBasis& basis,
                                             const Deadline& deadline = {}) {
  const auto& g = basis.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_polynomial(g[i], g[j]), g, deadline).is_zero()) return false;
  return true;
}

}  // namespace cohiso
