#pragma once

// Elements of A_l = F_{2^m}[x] / ((x+1)^l), stored in the (x+1)-adic basis:
// coefficient i multiplies (x+1)^i, so y = x+1 is nilpotent of index l and
// multiplication is plain truncated convolution in y.
//
// The map b(x) -> x^(-1) b(x^(-1)) is the F_q-linear action of the matrix
// G_l (upper left block of the Kronecker-built G) on the coefficient vector;
// a second path evaluates the substitution directly with ring arithmetic and
// exists purely to check the first.

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2m.hpp"
#include "solver.hpp"

namespace ucyclic {

class YPoly {
 public:
  YPoly(FieldPtr field, unsigned l)
      : field_(std::move(field)), c_(check_l(l), 0) {}
  YPoly(FieldPtr field, std::vector<Fq> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    check_l(static_cast<unsigned>(c_.size()));
    for (Fq v : c_)
      if (!field_->valid(v)) throw SpecMismatch("coefficient outside the field");
  }

  static YPoly one(FieldPtr field, unsigned l) {
    YPoly p(std::move(field), l);
    p.c_[0] = 1;
    return p;
  }

  // x^(-1) = sum of (x+1)^i over i < l: multiplying by x = 1 + (x+1)
  // telescopes to 1 + (x+1)^l = 1
  static YPoly x_inverse(FieldPtr field, unsigned l) {
    YPoly p(std::move(field), l);
    for (unsigned i = 0; i < l; ++i) p.c_[i] = 1;
    return p;
  }

  const FieldPtr& field() const { return field_; }
  unsigned modulus_exp() const { return static_cast<unsigned>(c_.size()); }
  Fq coeff(unsigned i) const { return c_[i]; }
  void set_coeff(unsigned i, Fq v) { c_[i] = v; }
  const std::vector<Fq>& coeffs() const { return c_; }

  bool is_zero() const {
    for (Fq v : c_) if (v) return false;
    return true;
  }

  bool operator==(const YPoly& o) const { return c_ == o.c_; }
  bool operator!=(const YPoly& o) const { return !(*this == o); }

  // reinterpret the same polynomial expression in a different modulus:
  // growing zero-extends, shrinking reduces mod (x+1)^l (a ring map)
  YPoly with_modulus(unsigned l) const {
    check_l(l);
    std::vector<Fq> c(c_.begin(), c_.begin() + std::min<std::size_t>(l, c_.size()));
    c.resize(l, 0);
    return YPoly(field_, std::move(c));
  }

  // multiply by (x+1)^k
  YPoly shifted_up(unsigned k) const {
    YPoly p(field_, modulus_exp());
    for (unsigned i = 0; i + k < modulus_exp(); ++i) p.c_[i + k] = c_[i];
    return p;
  }

 private:
  static unsigned check_l(unsigned l) {
    if (l < 1 || l > kMaxSolveLength) throw ModulusMismatch("modulus exponent out of range");
    return l;
  }

  FieldPtr field_;
  std::vector<Fq> c_;  // size l >= 1
};

inline void require_compatible(const YPoly& p, const YPoly& q) {
  require_same_field(*p.field(), *q.field());
  if (p.modulus_exp() != q.modulus_exp())
    throw ModulusMismatch("operands live in different quotients");
}

inline YPoly add(const YPoly& p, const YPoly& q) {
  require_compatible(p, q);
  YPoly r(p.field(), p.modulus_exp());
  for (unsigned i = 0; i < p.modulus_exp(); ++i)
    r.set_coeff(i, p.coeff(i) ^ q.coeff(i));
  return r;
}

inline YPoly mul_mod(const YPoly& p, const YPoly& q) {
  require_compatible(p, q);
  unsigned l = p.modulus_exp();
  const Field& f = *p.field();
  YPoly r(p.field(), l);
  for (unsigned i = 0; i < l; ++i) {
    if (p.coeff(i) == 0) continue;
    for (unsigned j = 0; i + j < l; ++j) {
      if (q.coeff(j) == 0) continue;
      r.set_coeff(i + j, r.coeff(i + j) ^ f.mul(p.coeff(i), q.coeff(j)));
    }
  }
  return r;
}

// binom(i, j) mod 2 by the bit-subset rule
inline bool binom_mod2(unsigned i, unsigned j) { return (i & j) == j; }

// b(x) -> x^(-1) b(x^(-1)) via the coefficient matrix: out = G_l * in, where
// G_l entries are binom(i, j) mod 2 acting F_2-linearly on F_q coefficients
inline YPoly reciprocal_transform(const YPoly& p) {
  unsigned l = p.modulus_exp();
  BitMatrix g = build_G(ceil_log2(l));
  YPoly r(p.field(), l);
  for (unsigned i = 0; i < l; ++i) {
    Fq v = 0;
    for (unsigned j = 0; j < l; ++j)
      if (g.get(i, j)) v ^= p.coeff(j);
    r.set_coeff(i, v);
  }
  return r;
}

// the same map evaluated literally: sum b_i w^i with w = x^(-1) + 1, then
// multiply by x^(-1); independent of the matrix path
inline YPoly reciprocal_by_substitution(const YPoly& p) {
  unsigned l = p.modulus_exp();
  YPoly xinv = YPoly::x_inverse(p.field(), l);
  YPoly w = xinv;
  w.set_coeff(0, xinv.coeff(0) ^ 1);  // w = x^(-1) + 1
  YPoly acc(p.field(), l);
  for (unsigned i = p.modulus_exp(); i-- > 0;) {  // Horner in w
    acc = mul_mod(acc, w);
    acc.set_coeff(0, acc.coeff(0) ^ p.coeff(i));
  }
  return mul_mod(xinv, acc);
}

// b(x) + x^(-1) b(x^(-1)); zero exactly on the solution space S_l
inline YPoly selfdual_defect(const YPoly& p) {
  return add(p, reciprocal_transform(p));
}

// change of basis (x+1)^i -> x^j: coefficient of x^j picks up b_i for every
// i with binom(i, j) odd; an involution in characteristic 2
inline std::vector<Fq> to_x_basis(const YPoly& p) {
  unsigned l = p.modulus_exp();
  std::vector<Fq> out(l, 0);
  for (unsigned i = 0; i < l; ++i) {
    if (p.coeff(i) == 0) continue;
    for (unsigned j = 0; j <= i; ++j)
      if (binom_mod2(i, j)) out[j] ^= p.coeff(i);
  }
  return out;
}

inline YPoly from_x_basis(FieldPtr field, const std::vector<Fq>& xs) {
  unsigned l = static_cast<unsigned>(xs.size());
  YPoly p(std::move(field), l);
  for (unsigned j = 0; j < l; ++j) {
    if (xs[j] == 0) continue;
    for (unsigned i = 0; i <= j; ++i)
      if (binom_mod2(j, i)) p.set_coeff(i, p.coeff(i) ^ xs[j]);
  }
  return p;
}

}  // namespace ucyclic
