#pragma once

#include <optional>
#include <vector>

#include "dp4/upoly.hpp"

namespace dp4 {

namespace modp {

/// Polynomial with integer coefficients reduced into [0, m), low to high.
using Poly = std::vector<Integer>;

inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly reduce(Poly p, const Integer& m) {
  for (auto& v : p) v = mod(v, m);
  trim(p);
  return p;
}

inline Poly add(const Poly& a, const Poly& b, const Integer& m) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  return reduce(std::move(r), m);
}

inline Poly sub(const Poly& a, const Poly& b, const Integer& m) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  return reduce(std::move(r), m);
}

inline Poly mul(const Poly& a, const Poly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

inline Poly scale(const Poly& a, const Integer& s, const Integer& m) {
  Poly r = a;
  for (auto& v : r) v *= s;
  return reduce(std::move(r), m);
}

inline Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw std::domain_error("non-invertible residue");
  return r;
}

/// Division by a polynomial whose leading coefficient is a unit mod m.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, const Integer& m) {
  a = reduce(std::move(a), m);
  if (degree(a) < degree(b)) return {Poly{}, a};
  const Integer inv = inverse(b.back(), m);
  Poly q(static_cast<std::size_t>(degree(a) - degree(b)) + 1);
  for (int k = degree(a) - degree(b); k >= 0; --k) {
    const Integer c = mod(a[static_cast<std::size_t>(k + degree(b))] * inv, m);
    q[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= degree(b); ++j)
      a[static_cast<std::size_t>(k + j)] = mod(a[static_cast<std::size_t>(k + j)] - c * b[static_cast<std::size_t>(j)], m);
  }
  a.resize(static_cast<std::size_t>(std::max(degree(b), 0)));
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly monic(const Poly& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, const Integer& p) {
  a = reduce(std::move(a), p);
  b = reduce(std::move(b), p);
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// (s, t) with s a + t b = 1 mod p, for coprime a, b.
inline std::pair<Poly, Poly> bezout(const Poly& a, const Poly& b, const Integer& p) {
  Poly r0 = reduce(a, p), r1 = reduce(b, p), s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degree(r0) != 0) throw std::domain_error("factors not coprime mod p");
  const Integer inv = inverse(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

inline Poly derivative(const Poly& a, const Integer& p) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
  return reduce(std::move(d), p);
}

/// Lifts f = g h mod p (g, h monic, coprime mod p, f monic) to mod p^k.
inline std::pair<Poly, Poly> hensel_lift(const Poly& f, Poly g, Poly h, const Integer& p, int k) {
  const auto [s, t] = bezout(g, h, p);
  Integer q = p;
  for (int step = 1; step < k; ++step) {
    const Integer next = q * p;
    Poly e = f;
    const Poly gh = mul(g, h, next);
    e.resize(std::max(e.size(), gh.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = mod(e[i] - (i < gh.size() ? gh[i] : Integer(0)), next);
      e[i] = mod(e[i] / q, p);
    }
    trim(e);
    Poly dg = divmod(mul(e, t, p), g, p).second;
    Poly dh = divmod(sub(e, mul(dg, h, p), p), g, p).first;
    g = add(g, scale(dg, q, next), next);
    h = add(h, scale(dh, q, next), next);
    q = next;
  }
  return {g, h};
}

}  // namespace modp

namespace detail {

inline Integer norm1(const UPoly& f) {
  Integer s = 0;
  for (const auto& c : f.coeffs()) s += abs(c.get_num());
  return s;
}

inline modp::Poly to_modp(const UPoly& f) {
  modp::Poly r;
  for (const auto& c : f.coeffs()) r.push_back(c.get_num());
  return r;
}

inline UPoly symmetric_lift(const modp::Poly& a, const Integer& m) {
  std::vector<Rational> c;
  const Integer half = m / 2;
  for (const auto& v : a) c.emplace_back(v > half ? Integer(v - m) : v);
  return UPoly(std::move(c));
}

inline bool divides(const UPoly& g, const UPoly& f) { return (f % g).is_zero(); }

/// Monic integral transform F(x) = a^(n-1) f(x / a) of a primitive f.
inline UPoly monic_transform(const UPoly& f) {
  const Rational a = f.lead();
  const int n = f.degree();
  std::vector<Rational> c(f.coeffs());
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] *= pow(a, n - 1 - i);
  return UPoly(std::move(c));
}

}  // namespace detail

/// All irreducible factors of degree 1 or 2 of a square-free polynomial over
/// the rationals, as primitive integer polynomials, plus the cofactor. For
/// deg f <= 5 the cofactor is irreducible (it has no factor of degree <= 2).
struct LowDegreeSplit {
  std::vector<UPoly> factors;
  UPoly cofactor;
};

inline LowDegreeSplit split_low_degree(const UPoly& input) {
  LowDegreeSplit out;
  UPoly f = input.primitive();
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.factors.push_back(f);
    out.cofactor = UPoly::constant(1);
    return out;
  }
  const UPoly big = detail::monic_transform(f);
  const modp::Poly bigp = detail::to_modp(big);
  const int n = big.degree();

  // Smallest odd prime keeping the monic transform square-free.
  Integer p = 3;
  while (true) {
    if (modp::degree(modp::gcd(bigp, modp::derivative(modp::reduce(bigp, p), p), p)) == 0) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  const long pl = p.get_si();

  // Factors of degree <= 2 modulo p, by exhaustive search.
  std::vector<modp::Poly> small;
  modp::Poly rest = modp::reduce(bigp, p);
  for (long r = 0; r < pl; ++r) {
    modp::Poly lin{modp::mod(Integer(-r), p), Integer(1)};
    auto [q, rem] = modp::divmod(rest, lin, p);
    if (rem.empty()) {
      small.push_back(lin);
      rest = q;
    }
  }
  if (modp::degree(rest) >= 2) {
    for (long b = 0; b < pl && modp::degree(rest) >= 2; ++b)
      for (long c = 0; c < pl && modp::degree(rest) >= 2; ++c) {
        modp::Poly quad{Integer(c), Integer(b), Integer(1)};
        auto [q, rem] = modp::divmod(rest, quad, p);
        if (rem.empty()) {
          small.push_back(quad);
          rest = q;
        }
      }
  }

  // Coefficient bound for monic factors of degree <= 2 (Mignotte).
  const Integer bound = 4 * detail::norm1(big) + 1;
  int k = 1;
  Integer pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  std::vector<modp::Poly> lifted;
  modp::Poly remaining = modp::reduce(bigp, pk);
  for (std::size_t i = 0; i < small.size(); ++i) {
    modp::Poly cof = modp::divmod(modp::reduce(remaining, p), small[i], p).first;
    auto [g, h] = modp::hensel_lift(remaining, small[i], cof, p, k);
    lifted.push_back(g);
    remaining = h;
  }

  // Candidate monic integer factors of the transform, then back-substitution.
  UPoly cur = big;
  std::vector<bool> used(lifted.size(), false);
  auto accept = [&](const UPoly& cand) {
    if (cand.degree() < 1 || !detail::divides(cand, cur)) return false;
    cur = cur / cand;
    const UPoly g = cand.scale_variable(f.lead()).primitive();
    out.factors.push_back(g);
    return true;
  };
  for (std::size_t i = 0; i < lifted.size(); ++i)
    if (!used[i] && accept(detail::symmetric_lift(lifted[i], pk))) used[i] = true;
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size() && !used[i]; ++j) {
      if (used[j] || modp::degree(lifted[i]) != 1 || modp::degree(lifted[j]) != 1) continue;
      if (accept(detail::symmetric_lift(modp::mul(lifted[i], lifted[j], pk), pk))) used[i] = used[j] = true;
    }
  (void)n;
  UPoly cof = f;
  for (const auto& g : out.factors) cof = cof / g;
  out.cofactor = cof.primitive();
  return out;
}

/// Irreducible factor of a polynomial over the rationals with multiplicity.
struct IrreducibleFactor {
  UPoly factor;  // primitive integer polynomial
  int multiplicity;
  bool certified_irreducible;
};

/// Factorization over the rationals. Complete (every factor certified) when
/// all square-free parts have degree <= 5.
inline std::vector<IrreducibleFactor> factor_rational(const UPoly& f) {
  if (f.is_zero()) throw input_error("factoring the zero polynomial");
  std::vector<IrreducibleFactor> out;
  for (const auto& [part, m] : squarefree_decomposition(f)) {
    const LowDegreeSplit split = split_low_degree(part);
    for (const auto& g : split.factors) out.push_back({g, m, true});
    if (split.cofactor.degree() >= 1)
      out.push_back({split.cofactor, m, split.cofactor.degree() <= 5});
  }
  return out;
}

}  // namespace dp4
