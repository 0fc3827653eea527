#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strata/field.hpp"
#include "strata/rng.hpp"

namespace strata {

// Dense univariate polynomials over an exact field, lowest degree first.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const K& x) { return Poly(std::vector<K>{x}); }
  static Poly x() { return Poly(std::vector<K>{K(0), K(1)}); }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero poly
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < int(c_.size()) ? c_[i] : K(0); }
  K lc() const { return c_.empty() ? K(0) : c_.back(); }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly operator+(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = K(r[i] + c_[i]);
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = K(r[i] + o.c_[i]);
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const {
    std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = K(r[i] + c_[i]);
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = K(r[i] - o.c_[i]);
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (strata::is_zero(c_[i])) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = K(r[i + j] + c_[i] * o.c_[j]);
    }
    return Poly(std::move(r));
  }
  Poly scaled(const K& s) const {
    std::vector<K> r = c_;
    for (K& x : r) x = K(x * s);
    return Poly(std::move(r));
  }
  Poly monic() const { return is_zero() ? *this : scaled(inv(lc())); }

  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> rem = c_;
    std::vector<K> quot(std::max<int>(degree() - d.degree() + 1, 0), K(0));
    K dlc = inv(d.lc());
    for (int i = int(rem.size()) - 1; i >= d.degree(); --i) {
      if (strata::is_zero(rem[i])) continue;
      K f = K(rem[i] * dlc);
      quot[i - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j)
        rem[i - d.degree() + j] = K(rem[i - d.degree() + j] - f * d.coeffs()[j]);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(c_[i] * K(long(i)));
    return Poly(std::move(r));
  }

  K eval(const K& x) const {
    K acc(0);
    for (int i = degree(); i >= 0; --i) acc = K(acc * x + c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && strata::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------------------
// Arithmetic and factorization mod a word-sized prime. Serves two callers:
// decomposition over Fp, and the modular stage of rational factorization.

namespace modp {

using i64 = std::int64_t;
using PolyV = std::vector<i64>;  // lowest degree first, entries in [0, p)

inline i64 mulmod(i64 a, i64 b, i64 p) {
  return i64((static_cast<__int128>(a) * b) % p);
}
inline i64 addmod(i64 a, i64 b, i64 p) { i64 s = a + b; return s >= p ? s - p : s; }
inline i64 submod(i64 a, i64 b, i64 p) { i64 s = a - b; return s < 0 ? s + p : s; }
inline i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
inline i64 invmod(i64 a, i64 p) { return powmod(a % p, p - 2, p); }

inline void trim(PolyV& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
inline int deg(const PolyV& f) { return int(f.size()) - 1; }

inline PolyV mul(const PolyV& a, const PolyV& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  PolyV r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  }
  return r;
}

inline PolyV sub(PolyV a, const PolyV& b, i64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

// division with remainder; returns {quotient, remainder}
inline std::pair<PolyV, PolyV> divmod(PolyV a, const PolyV& b, i64 p) {
  trim(a);
  PolyV q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  i64 blc_inv = invmod(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    i64 f = mulmod(a.back(), blc_inv, p);
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t j = 0; j < b.size(); ++j)
      a[off + j] = submod(a[off + j], mulmod(f, b[j], p), p);
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

inline PolyV rem(PolyV a, const PolyV& b, i64 p) {
  return divmod(std::move(a), b, p).second;
}

inline PolyV monic(PolyV f, i64 p) {
  trim(f);
  if (f.empty()) return f;
  i64 s = invmod(f.back(), p);
  for (i64& c : f) c = mulmod(c, s, p);
  return f;
}

inline PolyV gcd(PolyV a, PolyV b, i64 p) {
  trim(a); trim(b);
  while (!b.empty()) {
    PolyV r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

inline PolyV derivative(const PolyV& f, i64 p) {
  PolyV r;
  for (size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i64(i) % p, p));
  trim(r);
  return r;
}

inline PolyV powmod_big(PolyV base, mpz_class e, const PolyV& f, i64 p) {
  PolyV r{1};
  base = rem(std::move(base), f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Bezout: s*a + t*b = 1 for coprime a, b.
inline void bezout(const PolyV& a, const PolyV& b, i64 p, PolyV* s, PolyV* t) {
  PolyV r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1); r1 = std::move(r);
    PolyV ns = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1); s1 = std::move(ns);
    PolyV nt = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1); t1 = std::move(nt);
  }
  if (deg(r0) != 0) throw std::logic_error("bezout of non-coprime polynomials");
  i64 sc = invmod(r0[0], p);
  for (i64& c : s0) c = mulmod(c, sc, p);
  for (i64& c : t0) c = mulmod(c, sc, p);
  *s = std::move(s0);
  *t = std::move(t0);
}

// Distinct-degree then Cantor-Zassenhaus equal-degree splitting of a
// squarefree monic f. Requires odd prime p; deterministically seeded.
inline std::vector<PolyV> factor_squarefree(PolyV f, i64 p, SplitMix64& rng) {
  std::vector<PolyV> out;
  f = monic(std::move(f), p);
  if (deg(f) < 1) return out;

  std::vector<std::pair<PolyV, int>> stages;
  PolyV x{0, 1};
  PolyV h = rem(x, f, p);
  PolyV rest = f;
  for (int d = 1; 2 * d <= deg(rest); ++d) {
    h = powmod_big(std::move(h), mpz_class(long(p)), rest, p);
    PolyV g = gcd(sub(h, x, p), rest, p);
    if (deg(g) > 0) {
      stages.push_back({g, d});
      rest = divmod(rest, g, p).first;
      h = rem(std::move(h), rest, p);
    }
  }
  if (deg(rest) > 0) stages.push_back({rest, deg(rest)});

  for (auto& [g, d] : stages) {
    std::vector<PolyV> work{g};
    while (!work.empty()) {
      PolyV cur = std::move(work.back());
      work.pop_back();
      if (deg(cur) == d) {
        out.push_back(monic(std::move(cur), p));
        continue;
      }
      PolyV a(size_t(deg(cur)), 0);
      for (i64& c : a) c = i64(rng.next() % std::uint64_t(p));
      trim(a);
      if (a.empty()) {
        work.push_back(std::move(cur));
        continue;
      }
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), unsigned(p), unsigned(d));
      e = (e - 1) / 2;
      PolyV b = sub(powmod_big(std::move(a), e, cur, p), PolyV{1}, p);
      PolyV g1 = gcd(std::move(b), cur, p);
      if (deg(g1) <= 0 || deg(g1) == deg(cur)) {
        work.push_back(std::move(cur));
        continue;
      }
      PolyV g2 = divmod(cur, g1, p).first;
      work.push_back(std::move(g1));
      work.push_back(std::move(g2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Rational factorization: Zassenhaus with quadratic Hensel lifting. Inputs
// here are minimal polynomials of endomorphisms (small degree), so the
// subset recombination stage is cheap.

struct QFactor {
  Poly<Rat> factor;  // monic irreducible over Q
  int multiplicity;
};

namespace zx {

using ZPoly = std::vector<mpz_class>;  // lowest degree first

inline void trim(ZPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }
inline int deg(const ZPoly& f) { return int(f.size()) - 1; }

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline ZPoly reduce(ZPoly f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(f);
  return f;
}

inline ZPoly mulm(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  return reduce(mul(a, b), m);
}

inline ZPoly addm(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return reduce(std::move(a), m);
}

inline ZPoly subm(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return reduce(std::move(a), m);
}

// divide by a monic divisor mod m
inline void divmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m,
                         ZPoly* q_out, ZPoly* r_out) {
  ZPoly rem = reduce(a, m);
  ZPoly q(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, mpz_class(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    mpz_class f = rem.back();
    size_t off = rem.size() - b.size();
    q[off] = (q[off] + f) % m;
    for (size_t j = 0; j < b.size(); ++j) {
      rem[off + j] -= f * b[j];
      rem[off + j] %= m;
      if (rem[off + j] < 0) rem[off + j] += m;
    }
    trim(rem);
  }
  if (q_out) { trim(q); *q_out = std::move(q); }
  if (r_out) *r_out = std::move(rem);
}

inline mpz_class balanced(const mpz_class& x, const mpz_class& m) {
  mpz_class r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// Exact divisibility over Z; fills quotient on success.
inline bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quot) {
  if (b.empty()) return false;
  ZPoly rem = a;
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
  trim(rem);
  while (!rem.empty() && rem.size() >= b.size()) {
    if (!mpz_divisible_p(rem.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class f = rem.back() / b.back();
    size_t off = rem.size() - b.size();
    q[off] = f;
    for (size_t j = 0; j < b.size(); ++j) rem[off + j] -= f * b[j];
    trim(rem);
  }
  if (!rem.empty()) return false;
  if (quot) { trim(q); *quot = std::move(q); }
  return true;
}

inline ZPoly primitive_part(ZPoly f) {
  trim(f);
  mpz_class cont(0);
  for (const auto& c : f) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
  if (cont != 0)
    for (auto& c : f) c /= cont;
  if (!f.empty() && f.back() < 0)
    for (auto& c : f) c = -c;
  return f;
}

// Quadratic Hensel lifting of a coprime pair g*h = f (mod p) up to >= bound.
// f must be monic. Returns the lifted pair and the final modulus.
inline void hensel_pair(const ZPoly& f, ZPoly g, ZPoly h, mpz_class p,
                        const mpz_class& bound, ZPoly* g_out, ZPoly* h_out,
                        mpz_class* mod_out) {
  // Bezout mod p via the word-sized routine.
  modp::i64 ip = modp::i64(p.get_si());
  auto down = [&](const ZPoly& z) {
    modp::PolyV v;
    v.reserve(z.size());
    for (const auto& c : z) v.push_back(modp::i64(mpz_fdiv_ui(c.get_mpz_t(), unsigned(ip))));
    modp::trim(v);
    return v;
  };
  auto up = [](const modp::PolyV& v) {
    ZPoly z;
    z.reserve(v.size());
    for (auto c : v) z.emplace_back(long(c));
    return z;
  };
  modp::PolyV sv, tv;
  modp::bezout(down(g), down(h), ip, &sv, &tv);
  ZPoly s = up(sv), t = up(tv);

  mpz_class m = p;
  while (m < bound) {
    mpz_class m2 = m * m;
    ZPoly e = subm(reduce(f, m2), mulm(g, h, m2), m2);
    ZPoly q, r;
    divmod_monic(mulm(s, e, m2), h, m2, &q, &r);
    ZPoly gnew = addm(addm(g, mulm(t, e, m2), m2), mulm(q, g, m2), m2);
    ZPoly hnew = addm(h, r, m2);
    ZPoly b = subm(addm(mulm(s, gnew, m2), mulm(t, hnew, m2), m2),
                   ZPoly{mpz_class(1)}, m2);
    ZPoly c, d;
    divmod_monic(mulm(s, b, m2), hnew, m2, &c, &d);
    ZPoly snew = subm(s, d, m2);
    ZPoly tnew = subm(subm(t, mulm(t, b, m2), m2), mulm(c, gnew, m2), m2);
    g = std::move(gnew); h = std::move(hnew);
    s = std::move(snew); t = std::move(tnew);
    m = m2;
  }
  *g_out = std::move(g);
  *h_out = std::move(h);
  *mod_out = std::move(m);
}

// Lift all modular factors of monic f to modulus >= bound (binary tree).
inline void lift_tree(const ZPoly& f, const std::vector<modp::PolyV>& parts,
                      long p, const mpz_class& bound, std::vector<ZPoly>* out,
                      mpz_class* mod_out) {
  if (parts.size() == 1) {
    out->push_back(reduce(f, *mod_out > 0 ? *mod_out : mpz_class(p)));
    return;
  }
  size_t half = parts.size() / 2;
  modp::PolyV gp{1}, hp{1};
  for (size_t i = 0; i < half; ++i) gp = modp::mul(gp, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) hp = modp::mul(hp, parts[i], p);
  auto up = [](const modp::PolyV& v) {
    ZPoly z;
    z.reserve(v.size());
    for (auto c : v) z.emplace_back(long(c));
    return z;
  };
  ZPoly g, h;
  mpz_class m;
  hensel_pair(f, up(gp), up(hp), mpz_class(p), bound, &g, &h, &m);
  *mod_out = m;
  std::vector<modp::PolyV> left(parts.begin(), parts.begin() + long(half));
  std::vector<modp::PolyV> right(parts.begin() + long(half), parts.end());
  lift_tree(g, left, p, bound, out, mod_out);
  lift_tree(h, right, p, bound, out, mod_out);
}

}  // namespace zx

// Factor a nonzero rational polynomial into monic irreducibles over Q,
// sorted deterministically, with multiplicities.
inline std::vector<QFactor> factor_over_Q(const Poly<Rat>& input) {
  using zx::ZPoly;
  if (input.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  std::vector<QFactor> out;
  Poly<Rat> f = input.monic();
  if (f.degree() <= 0) return out;

  Poly<Rat> sqf = (f / poly_gcd(f, f.derivative())).monic();

  // Clear denominators, then force monicity over Z with the substitution
  // T(x) = lc^(deg-1) * F(x/lc); factors map back via x -> lc*x.
  ZPoly fz;
  {
    mpz_class den(1);
    for (const Rat& c : sqf.coeffs()) {
      mpz_class d = c.get_den(), g;
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      den = den / g * d;
    }
    for (const Rat& c : sqf.coeffs()) fz.push_back(mpz_class(Rat(c * Rat(den)).get_num()));
    fz = zx::primitive_part(std::move(fz));
  }
  int n = zx::deg(fz);
  mpz_class lead = fz.back();
  ZPoly target(fz.size());
  for (int i = 0; i <= n; ++i) {
    mpz_class lp;
    unsigned e = unsigned(std::max(n - 1 - i, 0));
    mpz_pow_ui(lp.get_mpz_t(), lead.get_mpz_t(), e);
    target[size_t(i)] = fz[size_t(i)] * lp;
  }
  target[size_t(n)] = 1;

  std::vector<ZPoly> irreducible_z;
  if (n == 1) {
    irreducible_z.push_back(fz);
  } else {
    static const long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,
                                   31,  37,  41,  43,  47,  53,  59,  61,  67,
                                   71,  73,  79,  83,  89,  97,  101, 103, 107,
                                   109, 113, 127, 131, 137, 139, 149, 151, 157};
    SplitMix64 rng(0x5eedf00dULL);
    long p = 0;
    std::vector<modp::PolyV> parts;
    for (long cand : kPrimes) {
      modp::PolyV tp;
      tp.reserve(target.size());
      for (const auto& c : target)
        tp.push_back(modp::i64(mpz_fdiv_ui(c.get_mpz_t(), unsigned(cand))));
      modp::trim(tp);
      if (modp::deg(tp) != n) continue;
      modp::PolyV d = modp::derivative(tp, cand);
      if (d.empty()) continue;
      if (modp::deg(modp::gcd(tp, d, cand)) != 0) continue;
      p = cand;
      parts = modp::factor_squarefree(tp, cand, rng);
      break;
    }
    if (p == 0) throw std::runtime_error("no usable prime for factorization");

    if (parts.size() == 1) {
      irreducible_z.push_back(fz);
    } else {
      // coefficient bound for factors of `target` (Mignotte-style, generous)
      mpz_class norm1(0);
      for (const auto& c : target) norm1 += abs(c);
      mpz_class bound;
      mpz_ui_pow_ui(bound.get_mpz_t(), 2, unsigned(n + 2));
      bound *= norm1;
      bound *= 2;

      std::vector<ZPoly> lifted;
      mpz_class modulus(0);
      zx::lift_tree(target, parts, p, bound, &lifted, &modulus);

      // subset recombination
      ZPoly current = target;
      std::vector<ZPoly> remaining = lifted;
      std::vector<ZPoly> foundT;
      size_t k = 1;
      while (!remaining.empty() && 2 * k <= remaining.size()) {
        bool progressed = false;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
          ZPoly cand{mpz_class(1)};
          for (size_t i : idx) cand = zx::mulm(cand, remaining[i], modulus);
          for (auto& c : cand) c = zx::balanced(c, modulus);
          zx::trim(cand);
          ZPoly quot;
          if (zx::divides(current, cand, &quot)) {
            foundT.push_back(cand);
            current = std::move(quot);
            std::vector<ZPoly> keep;
            for (size_t i = 0, j = 0; i < remaining.size(); ++i) {
              if (j < idx.size() && i == idx[j]) { ++j; continue; }
              keep.push_back(remaining[i]);
            }
            remaining = std::move(keep);
            progressed = true;
            break;
          }
          int pos = int(k) - 1;
          while (pos >= 0 && idx[size_t(pos)] == remaining.size() - k + size_t(pos)) --pos;
          if (pos < 0) break;
          ++idx[size_t(pos)];
          for (size_t j2 = size_t(pos) + 1; j2 < k; ++j2) idx[j2] = idx[j2 - 1] + 1;
        }
        if (!progressed) ++k;
      }
      if (zx::deg(current) > 0) foundT.push_back(current);

      for (ZPoly& t : foundT) {
        // undo the monic substitution: factor(x) -> primitive(t(lc*x))
        ZPoly s(t.size());
        mpz_class lcpow(1);
        for (size_t i = 0; i < t.size(); ++i) {
          s[i] = t[i] * lcpow;
          lcpow *= lead;
        }
        irreducible_z.push_back(zx::primitive_part(std::move(s)));
      }
    }
  }

  std::vector<Poly<Rat>> irr;
  for (const auto& z : irreducible_z) {
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& x : z) c.emplace_back(x);
    irr.push_back(Poly<Rat>(std::move(c)).monic());
  }
  std::sort(irr.begin(), irr.end(), [](const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
      if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
  });

  Poly<Rat> rest = f;
  for (const Poly<Rat>& g : irr) {
    int mult = 0;
    while (true) {
      auto [q, r] = rest.divmod(g);
      if (!r.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) out.push_back({g, mult});
  }
  if (rest.degree() != 0)
    throw std::runtime_error("incomplete factorization (internal error)");
  return out;
}

inline std::vector<Rat> rational_roots(const Poly<Rat>& f) {
  std::vector<Rat> roots;
  for (const QFactor& qf : factor_over_Q(f))
    if (qf.factor.degree() == 1) roots.push_back(Rat(-qf.factor.coeff(0)));
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Factor over the active prime field (monic irreducibles + multiplicities).
inline std::vector<std::pair<Poly<Fp>, int>> factor_over_Fp(const Poly<Fp>& f) {
  if (f.is_zero()) throw std::invalid_argument("factor of zero polynomial");
  std::int64_t p = Fp::p();
  std::vector<std::pair<Poly<Fp>, int>> out;
  Poly<Fp> rest = f.monic();
  SplitMix64 rng(0xfeedbeefULL);
  while (rest.degree() > 0) {
    Poly<Fp> der = rest.derivative();
    if (der.is_zero())
      throw std::runtime_error("inseparable polynomial over Fp (p too small)");
    Poly<Fp> sqf = (rest / poly_gcd(rest, der)).monic();
    modp::PolyV v;
    v.reserve(size_t(sqf.degree()) + 1);
    for (int i = 0; i <= sqf.degree(); ++i) v.push_back(sqf.coeff(i).value());
    for (const auto& g : modp::factor_squarefree(v, p, rng)) {
      std::vector<Fp> c;
      c.reserve(g.size());
      for (auto x : g) c.emplace_back(long(x));
      Poly<Fp> gf(std::move(c));
      int mult = 0;
      while (true) {
        auto [q, r] = rest.divmod(gf);
        if (!r.is_zero()) break;
        rest = q;
        ++mult;
      }
      if (mult > 0) out.push_back({gf, mult});
    }
  }
  return out;
}

}  // namespace strata
