#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace strata {

// Exact scalars. Two field types are supported: Rat (arbitrary-precision
// rationals) and Fp (prime field with a thread-local modulus, NTL-style).
// No floating point anywhere.

using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline Rat inv(const Rat& x) { return Rat(1) / x; }
inline std::string to_string(const Rat& x) { return x.get_str(); }

struct FpContext {
  static inline thread_local std::int64_t modulus = 0;
};

// RAII modulus scope; nesting restores the previous modulus.
class FpScope {
 public:
  explicit FpScope(std::int64_t p) : saved_(FpContext::modulus) {
    if (p < 2) throw std::invalid_argument("Fp modulus must be >= 2");
    FpContext::modulus = p;
  }
  ~FpScope() { FpContext::modulus = saved_; }
  FpScope(const FpScope&) = delete;
  FpScope& operator=(const FpScope&) = delete;

 private:
  std::int64_t saved_;
};

class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long x) { v_ = norm(x); }           // NOLINT: implicit by design
  Fp(int x) : Fp(static_cast<long>(x)) {}

  static std::int64_t p() {
    if (FpContext::modulus < 2) throw std::logic_error("Fp used without modulus scope");
    return FpContext::modulus;
  }

  std::int64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp::of(a.v_ + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return Fp::of(a.v_ - b.v_ + p()); }
  friend Fp operator-(Fp a) { return Fp::of(p() - a.v_); }
  friend Fp operator*(Fp a, Fp b) {
    return Fp::of(static_cast<std::int64_t>(
        (static_cast<__int128>(a.v_) * b.v_) % p()));
  }
  friend Fp operator/(Fp a, Fp b) { return a * inverse(b); }
  Fp& operator+=(Fp b) { *this = *this + b; return *this; }
  Fp& operator-=(Fp b) { *this = *this - b; return *this; }
  Fp& operator*=(Fp b) { *this = *this * b; return *this; }
  Fp& operator/=(Fp b) { *this = *this / b; return *this; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  static Fp inverse(Fp a) {
    if (a.v_ == 0) throw std::domain_error("Fp division by zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p(), nr = a.v_;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("Fp modulus not prime");
    return Fp::of(t < 0 ? t + p() : t);
  }

 private:
  static std::int64_t norm(std::int64_t x) {
    std::int64_t m = p();
    x %= m;
    return x < 0 ? x + m : x;
  }
  static Fp of(std::int64_t reduced) {
    Fp f; f.v_ = reduced >= p() ? reduced - p() : reduced; return f;
  }
  std::int64_t v_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline Fp inv(const Fp& x) { return Fp::inverse(x); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

// Runtime field descriptor, as read from input files.
struct FieldSpec {
  enum class Kind { rationals, prime_field } kind = Kind::rationals;
  std::int64_t p = 0;

  bool operator==(const FieldSpec&) const = default;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::int64_t p) {
    if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("prime field modulus is composite");
    return {Kind::prime_field, p};
  }
  std::string str() const {
    return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
  }
};

// Build a scalar from a rational literal (used by the parser, which is
// field-agnostic). For Fp the denominator is inverted mod p.
template <class K> K scalar_from_rat(const Rat& r);

template <> inline Rat scalar_from_rat<Rat>(const Rat& r) { return r; }
template <> inline Fp scalar_from_rat<Fp>(const Rat& r) {
  Fp num(static_cast<long>(mpz_fdiv_ui(r.get_num().get_mpz_t(), Fp::p())));
  Fp den(static_cast<long>(mpz_fdiv_ui(r.get_den().get_mpz_t(), Fp::p())));
  return num / den;
}

}  // namespace strata
