#pragma once

// Arithmetic in F_{2^m}, 1 <= m <= 16.  Elements are polynomials over F_2
// reduced mod an irreducible modulus of degree m, packed into the low m bits
// of an integer (bit i = coefficient of x^i).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ucyclic {

using Fq = std::uint16_t;  // one element of F_{2^m}, m <= 16

// -- polynomials over F_2 packed into integers ------------------------------

inline int gf2poly_degree(std::uint64_t p) {
  int d = -1;
  while (p) { ++d; p >>= 1; }
  return d;  // degree of 0 is -1
}

inline std::uint64_t gf2poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

inline std::uint64_t gf2poly_mod(std::uint64_t a, std::uint64_t mod) {
  int dm = gf2poly_degree(mod);
  for (int d = gf2poly_degree(a); d >= dm; --d)
    if (a >> d & 1) a ^= mod << (d - dm);
  return a;
}

// trial division by every polynomial of degree 1..deg/2
inline bool gf2poly_irreducible(std::uint64_t p) {
  int d = gf2poly_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  for (std::uint64_t f = 2; gf2poly_degree(f) <= d / 2; ++f)
    if (gf2poly_mod(p, f) == 0) return false;
  return true;
}

// smallest irreducible of degree m, ordered by integer encoding
inline std::uint32_t default_modulus(unsigned m) {
  for (std::uint64_t p = (std::uint64_t{1} << m) + 1;; p += 2)
    if (gf2poly_irreducible(p)) return static_cast<std::uint32_t>(p);
}

// -- the field ---------------------------------------------------------------

class Field {
 public:
  static constexpr unsigned max_degree = 16;
  static constexpr unsigned table_degree_limit = 8;  // log/exp tables up to here

  Field(unsigned m, std::uint32_t modulus) : m_(m), mod_(modulus) {
    if (m < 1 || m > max_degree)
      throw DegreeMismatch("field degree must be in [1,16], got " + std::to_string(m));
    if (gf2poly_degree(modulus) != static_cast<int>(m))
      throw DegreeMismatch("modulus degree does not match field degree");
    if (!gf2poly_irreducible(modulus))
      throw ReducibleModulus("modulus is reducible");
    if (m_ <= table_degree_limit) build_tables();
  }

  explicit Field(unsigned m) : Field(m, default_modulus(m)) {}

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t order() const { return 1u << m_; }  // q = 2^m

  bool operator==(const Field& o) const { return m_ == o.m_ && mod_ == o.mod_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  static Fq add(Fq a, Fq b) { return a ^ b; }

  Fq mul(Fq a, Fq b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
      unsigned qm1 = order() - 1;
      return exp_[(log_[a] + log_[b]) % qm1];
    }
    return static_cast<Fq>(gf2poly_mod(gf2poly_mul(a, b), mod_));
  }

  Fq pow(Fq a, std::uint64_t e) const {
    Fq r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Fq inv(Fq a) const {
    if (a == 0) throw DivisionByZero("inverse of 0");
    if (!exp_.empty()) {
      unsigned qm1 = order() - 1;
      return exp_[(qm1 - log_[a]) % qm1];
    }
    return pow(a, order() - 2);  // a^(q-2)
  }

  // x as a field element: multiplicative generator for the default moduli we
  // care about, but used here only as an F_2-spanning power basis {x^i}
  Fq gen() const { return m_ == 1 ? 1 : 2; }

  bool valid(Fq a) const { return a < order(); }

 private:
  void build_tables() {
    unsigned q = order();
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    // powers of x; x may not generate F_q* for every modulus, so fall back to
    // a search for a primitive element
    Fq g = find_primitive();
    Fq v = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
      exp_[i] = v;
      log_[v] = static_cast<Fq>(i);
      v = static_cast<Fq>(gf2poly_mod(gf2poly_mul(v, g), mod_));
    }
  }

  Fq find_primitive() const {
    unsigned q = order();
    for (Fq g = 2; ; ++g) {
      if (g >= q) return 1;  // q = 2: F_2* = {1}
      unsigned seen = 0;
      std::uint64_t v = 1;
      do {
        ++seen;
        v = gf2poly_mod(gf2poly_mul(v, g), mod_);
      } while (v != 1);
      if (seen == q - 1) return g;
    }
  }

  unsigned m_;
  std::uint32_t mod_;
  std::vector<Fq> exp_, log_;  // empty when m > table_degree_limit
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_field(unsigned m) { return std::make_shared<Field>(m); }
inline FieldPtr make_field(unsigned m, std::uint32_t modulus) {
  return std::make_shared<Field>(m, modulus);
}

inline void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw SpecMismatch("operands belong to different fields");
}

}  // namespace ucyclic
