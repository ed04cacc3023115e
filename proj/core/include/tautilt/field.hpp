#ifndef TAUTILT_FIELD_HPP
#define TAUTILT_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tautilt/errors.hpp"

namespace tautilt {

// Exact rational scalar. All characteristic-zero arithmetic in the library
// runs on this type; no floating point enters any verified computation.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p", "-p" or "p/q". Throws ParseError on anything else.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char ch : s) {
    if (!(ch == '-' || ch == '/' || (ch >= '0' && ch <= '9')))
      throw ParseError("bad rational literal '" + s + "'");
  }
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

// Prime field with compile-time modulus; used by the brute-force stability
// kernel, which is capped at p <= 3.
template <unsigned P>
struct Fp {
  static_assert(P >= 2, "modulus must be prime >= 2");
  unsigned v = 0;

  Fp() = default;
  Fp(long long x) {
    long long m = x % static_cast<long long>(P);
    if (m < 0) m += P;
    v = static_cast<unsigned>(m);
  }

  friend Fp operator+(Fp a, Fp b) { return Fp((a.v + b.v) % P); }
  friend Fp operator-(Fp a, Fp b) { return Fp((a.v + P - b.v) % P); }
  friend Fp operator*(Fp a, Fp b) { return Fp((a.v * b.v) % P); }
  Fp operator-() const { return Fp((P - v) % P); }

  Fp inverse() const {
    if (v == 0) throw InternalError("division by zero in prime field");
    unsigned r = 1, base = v, e = P - 2;  // Fermat; P is prime
    while (e) {
      if (e & 1) r = (r * base) % P;
      base = (base * base) % P;
      e >>= 1;
    }
    return Fp(r);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }

  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

template <unsigned P>
inline bool is_zero(const Fp<P>& x) { return x.v == 0; }

// Runtime field descriptor carried by presentations.
struct FieldDesc {
  enum class Kind { Rationals, Prime } kind = Kind::Rationals;
  unsigned p = 0;

  static FieldDesc rationals() { return {Kind::Rationals, 0}; }
  static FieldDesc prime(unsigned p) { return {Kind::Prime, p}; }

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::string str() const {
    return is_rationals() ? "Q" : ("F" + std::to_string(p));
  }
  friend bool operator==(const FieldDesc& a, const FieldDesc& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

}  // namespace tautilt

#endif
