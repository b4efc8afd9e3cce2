#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pomod {

// Exact rationals. All linear algebra in this project runs over an exact
// field; floating point is never used for module data.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline std::string scalar_to_string(const Rat& x) { return x.get_str(); }
inline Rat rat_of_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

// Prime field F_p with a process-wide modulus, selected once per run
// (CLI --field p:PRIME, or FpScope in tests).
struct Fp {
  std::int64_t v = 0;

  static std::int64_t& modulus() {
    static std::int64_t p = 2;
    return p;
  }

  Fp() = default;
  Fp(long x) { v = norm(x); }
  Fp(int x) : Fp(static_cast<long>(x)) {}
  Fp(long long x) { v = norm(x); }

  static std::int64_t norm(std::int64_t x) {
    std::int64_t p = modulus();
    x %= p;
    if (x < 0) x += p;
    return x;
  }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
  friend Fp operator-(Fp a) { return Fp(-a.v); }
  friend Fp operator*(Fp a, Fp b) { return Fp(a.v * b.v); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp b) { *this = *this + b; return *this; }
  Fp& operator-=(Fp b) { *this = *this - b; return *this; }
  Fp& operator*=(Fp b) { *this = *this * b; return *this; }
  Fp& operator/=(Fp b) { *this = *this / b; return *this; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp inv() const {
    if (v == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid
    std::int64_t a = v, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0);
  }
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline std::string scalar_to_string(const Fp& x) { return std::to_string(x.v); }

// RAII modulus switch for tests.
struct FpScope {
  std::int64_t saved;
  explicit FpScope(std::int64_t p) : saved(Fp::modulus()) { Fp::modulus() = p; }
  ~FpScope() { Fp::modulus() = saved; }
};

template <class S> S scalar_of_string(const std::string& s);
template <> inline Rat scalar_of_string<Rat>(const std::string& s) { return rat_of_string(s); }
template <> inline Fp scalar_of_string<Fp>(const std::string& s) { return Fp(std::stoll(s)); }

}  // namespace pomod
