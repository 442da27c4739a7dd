#pragma once

// The chain ring R = F_{2^m} + u*F_{2^m} with u^2 = 0.  An element is a + b*u;
// it is a unit iff a != 0, and the ideals are R > uR > 0.

#include <cstdint>
#include <vector>

#include "gf2m.hpp"

namespace ucyclic {

struct RingElem {
  Fq a = 0;  // unit part
  Fq b = 0;  // u part

  bool operator==(const RingElem& o) const { return a == o.a && b == o.b; }
  bool operator!=(const RingElem& o) const { return !(*this == o); }
};

// addition is componentwise in characteristic 2, no field context needed
inline RingElem ring_add(RingElem x, RingElem y) {
  return {static_cast<Fq>(x.a ^ y.a), static_cast<Fq>(x.b ^ y.b)};
}

// (a1 + b1 u)(a2 + b2 u) = a1 a2 + (a1 b2 + a2 b1) u
inline RingElem ring_mul(const Field& f, RingElem x, RingElem y) {
  return {f.mul(x.a, y.a),
          static_cast<Fq>(f.mul(x.a, y.b) ^ f.mul(x.b, y.a))};
}

inline bool is_unit(RingElem x) { return x.a != 0; }
inline bool is_zero(RingElem x) { return x.a == 0 && x.b == 0; }

// Lee weight = Hamming weight of the Gray pair (b, a+b); one of 0, 1, 2
inline unsigned lee_weight(RingElem x) {
  unsigned w = 0;
  if (x.b != 0) ++w;
  if ((x.a ^ x.b) != 0) ++w;
  return w;
}

// fixed-length vector over R; all entries share one field
class RingVec {
 public:
  RingVec(FieldPtr field, std::size_t n) : field_(std::move(field)), v_(n) {}
  RingVec(FieldPtr field, std::vector<RingElem> v)
      : field_(std::move(field)), v_(std::move(v)) {}

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return v_.size(); }
  RingElem& operator[](std::size_t i) { return v_[i]; }
  const RingElem& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<RingElem>& entries() const { return v_; }

  bool operator==(const RingVec& o) const { return v_ == o.v_; }

 private:
  FieldPtr field_;
  std::vector<RingElem> v_;
};

inline void require_compatible(const RingVec& x, const RingVec& y) {
  require_same_field(*x.field(), *y.field());
  if (x.size() != y.size())
    throw LengthMismatch("vector lengths differ");
}

inline RingVec vec_add(const RingVec& x, const RingVec& y) {
  require_compatible(x, y);
  RingVec r(x.field(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring_add(x[i], y[i]);
  return r;
}

inline RingVec scalar_mul(RingElem c, const RingVec& x) {
  RingVec r(x.field(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = ring_mul(*x.field(), c, x[i]);
  return r;
}

// Euclidean inner product [x, y] = sum x_i y_i, R-bilinear and symmetric
inline RingElem inner_product(const RingVec& x, const RingVec& y) {
  require_compatible(x, y);
  RingElem s{};
  for (std::size_t i = 0; i < x.size(); ++i)
    s = ring_add(s, ring_mul(*x.field(), x[i], y[i]));
  return s;
}

// (a_0,...,a_{n-1}) -> (a_{n-1}, a_0, ..., a_{n-2})
inline RingVec cyclic_shift(const RingVec& x) {
  RingVec r(x.field(), x.size());
  if (x.size() == 0) return r;
  r[0] = x[x.size() - 1];
  for (std::size_t i = 1; i < x.size(); ++i) r[i] = x[i - 1];
  return r;
}

inline unsigned lee_weight(const RingVec& x) {
  unsigned w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) w += lee_weight(x[i]);
  return w;
}

}  // namespace ucyclic
