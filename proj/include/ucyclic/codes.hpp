#pragma once

// Cyclic codes of length N = 2^s over R = F_{2^m} + u F_{2^m}, i.e. ideals of
// R[x]/(x^N - 1).  With y = x+1 nilpotent, every ideal falls into one of five
// families, each parametrized by exponents k, t and a polynomial b(x) running
// over a coset window y^lo * (F_q[x]/(y^modulus)):
//
//   I    <y b + u>                        |C| = q^N        b: lo = N/2 - 1, mod = N-1
//   II   <y^(k+1) b + u y^k>              |C| = q^(N-k)    b: lo = ceil((N-k)/2)-1, mod = N-k-1
//   III  <y^k>                            |C| = q^(2(N-k))
//   IV   <y b + u, y^t>                   |C| = q^(2N-t)   b: lo = ceil(t/2)-1, mod = t-1
//   V    <y^(k+1) b + u y^k, y^(k+t)>     |C| = q^(2N-2k-t), b as in IV
//
// The Euclidean dual swaps I<->I, II<->IV, III<->III, V<->V with b replaced by
// x^(-1) b(x^(-1)).  A code is self-dual exactly in three families: the fixed
// middle power <y^(N/2)>, family I with b in the solution space S_{N-1}
// truncated at N/2 - 1, and family V with t = N - 2k and b in S_{N-2k-1}
// truncated at N/2 - k - 1.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "solver.hpp"
#include "ypoly.hpp"

namespace ucyclic {

enum class Family { CaseI, CaseII, CaseIII, CaseIV, CaseV, SDTrivial, SDTypeB, SDTypeC };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::CaseI: return "I";
    case Family::CaseII: return "II";
    case Family::CaseIII: return "III";
    case Family::CaseIV: return "IV";
    case Family::CaseV: return "V";
    case Family::SDTrivial: return "sd-trivial";
    case Family::SDTypeB: return "sd-single";
    case Family::SDTypeC: return "sd-pair";
  }
  return "?";
}

struct CodeSpec {
  FieldPtr field;
  unsigned s = 1;
  Family family = Family::CaseIII;
  unsigned k = 0;
  unsigned t = 0;
  std::optional<YPoly> b;  // windowed; absent for family III and empty windows

  unsigned length() const { return 1u << s; }
};

// coset window of b for the five case families; empty when modulus == 0
struct BWindow {
  unsigned lo = 0;
  unsigned modulus = 0;

  unsigned width() const { return modulus > lo ? modulus - lo : 0; }
};

inline BWindow b_window(Family f, unsigned s, unsigned k, unsigned t) {
  unsigned n = 1u << s;
  switch (f) {
    case Family::CaseI: return {n / 2 - 1, n - 1};
    case Family::CaseII: return {(n - k + 1) / 2 - 1, n - k - 1};
    case Family::CaseIV:
    case Family::CaseV: return {(t + 1) / 2 - 1, t - 1};
    default: return {0, 0};
  }
}

// rewrite the self-dual forms in their case form; case specs pass through
inline CodeSpec as_case(const CodeSpec& c) {
  switch (c.family) {
    case Family::SDTrivial:
      return {c.field, c.s, Family::CaseIII, c.length() / 2, 0, std::nullopt};
    case Family::SDTypeB:
      return {c.field, c.s, Family::CaseI, 0, 0, c.b};
    case Family::SDTypeC:
      return {c.field, c.s, Family::CaseV, c.k, c.length() - 2 * c.k, c.b};
    default:
      return c;
  }
}

// |C| = q^e; exponents add to 2N across a dual pair
inline unsigned code_log_size(const CodeSpec& spec) {
  CodeSpec c = as_case(spec);
  unsigned n = c.length();
  switch (c.family) {
    case Family::CaseI: return n;
    case Family::CaseII: return n - c.k;
    case Family::CaseIII: return 2 * (n - c.k);
    case Family::CaseIV: return 2 * n - c.t;
    default: return 2 * n - 2 * c.k - c.t;  // CaseV
  }
}

inline BigInt code_size(const CodeSpec& c) {
  return boost::multiprecision::pow(BigInt(1) << c.field->degree(),
                                    code_log_size(c));
}

namespace detail {

// x^(-1) b(x^(-1)) computed in the full ambient quotient, then cut back to
// the window modulus; the window floor is preserved by the transform
inline std::optional<YPoly> dual_b(const CodeSpec& c, const BWindow& w) {
  if (!c.b) return std::nullopt;
  unsigned n = c.length();
  YPoly amb = c.b->with_modulus(n);
  YPoly rec = reciprocal_transform(amb).with_modulus(w.modulus);
  for (unsigned i = 0; i < w.lo && i < w.modulus; ++i)
    if (rec.coeff(i) != 0)
      throw Error("reciprocal left the coefficient window");
  return rec;
}

}  // namespace detail

inline CodeSpec dual_code(const CodeSpec& c) {
  unsigned n = c.length();
  switch (c.family) {
    case Family::CaseI: {
      BWindow w = b_window(Family::CaseI, c.s, 0, 0);
      return {c.field, c.s, Family::CaseI, 0, 0, detail::dual_b(c, w)};
    }
    case Family::CaseII: {
      unsigned t = n - c.k;
      BWindow w = b_window(Family::CaseIV, c.s, 0, t);
      return {c.field, c.s, Family::CaseIV, 0, t, detail::dual_b(c, w)};
    }
    case Family::CaseIII:
      return {c.field, c.s, Family::CaseIII, n - c.k, 0, std::nullopt};
    case Family::CaseIV: {
      unsigned k = n - c.t;
      BWindow w = b_window(Family::CaseII, c.s, k, 0);
      return {c.field, c.s, Family::CaseII, k, 0, detail::dual_b(c, w)};
    }
    case Family::CaseV: {
      unsigned k = n - c.k - c.t;
      BWindow w = b_window(Family::CaseV, c.s, k, c.t);
      return {c.field, c.s, Family::CaseV, k, c.t, detail::dual_b(c, w)};
    }
    default:
      throw UnsupportedFamily("dual of a self-dual form: take its case form first");
  }
}

// generating vectors (one or two) as words in R^N, via the x-power basis
inline std::vector<RingVec> generators(const CodeSpec& spec) {
  CodeSpec c = as_case(spec);
  unsigned n = c.length();
  auto vec_of = [&](const YPoly& unit_part, const YPoly& u_part) {
    std::vector<Fq> ax = to_x_basis(unit_part);
    std::vector<Fq> ux = to_x_basis(u_part);
    RingVec v(c.field, n);
    for (unsigned j = 0; j < n; ++j) v[j] = {ax[j], ux[j]};
    return v;
  };
  YPoly zero(c.field, n);
  YPoly b_amb = c.b ? c.b->with_modulus(n) : zero;
  YPoly one = YPoly::one(c.field, n);

  switch (c.family) {
    case Family::CaseI:
      return {vec_of(b_amb.shifted_up(1), one)};
    case Family::CaseII:
      return {vec_of(b_amb.shifted_up(c.k + 1), one.shifted_up(c.k))};
    case Family::CaseIII:
      return {vec_of(one.shifted_up(c.k), zero)};  // k = N gives the zero code
    case Family::CaseIV:
      return {vec_of(b_amb.shifted_up(1), one),
              vec_of(one.shifted_up(c.t), zero)};
    default:  // CaseV
      return {vec_of(b_amb.shifted_up(c.k + 1), one.shifted_up(c.k)),
              vec_of(one.shifted_up(c.k + c.t), zero)};
  }
}

// identity of the parametrization: family form, exponents, window coefficients
inline std::string canonical_key(const CodeSpec& spec) {
  CodeSpec c = as_case(spec);
  std::string key = family_name(c.family);
  key += "/k" + std::to_string(c.k) + "/t" + std::to_string(c.t) + "/";
  if (c.b)
    for (Fq v : c.b->coeffs()) key += std::to_string(v) + ",";
  return key;
}

inline bool same_spec(const CodeSpec& a, const CodeSpec& b) {
  return a.s == b.s && *a.field == *b.field &&
         canonical_key(a) == canonical_key(b);
}

// -- exact counts ------------------------------------------------------------

inline BigInt count_all_cyclic(unsigned s, unsigned m) {
  BigInt q = BigInt(1) << m;
  unsigned half = 1u << (s - 1);
  BigInt total = 0;
  for (unsigned i = 0; i <= half; ++i)
    total += (1 + 4 * BigInt(i)) * boost::multiprecision::pow(q, half - i);
  return total;
}

// 1 + q for s=1; 1 + q + q^2 for s=2; for s >= 3 the exact sum
// 1 + q + 2 * sum_{h=1}^{2^(s-2)-1} q^(h+1) + q^(2^(s-2)+1)
inline BigInt count_selfdual(unsigned s, unsigned m) {
  BigInt q = BigInt(1) << m;
  if (s == 1) return 1 + q;
  if (s == 2) return 1 + q + q * q;
  unsigned quarter = 1u << (s - 2);
  BigInt total = 1 + q;
  for (unsigned h = 1; h < quarter; ++h)
    total += 2 * boost::multiprecision::pow(q, h + 1);
  total += boost::multiprecision::pow(q, quarter + 1);
  return total;
}

// -- enumeration -------------------------------------------------------------

// Odometer over the free coordinates of a solution space (or a plain index
// window), in lexicographic order: first coordinate most significant, field
// values ordered by their bit encoding.
namespace detail {

class Odometer {
 public:
  Odometer(unsigned digit_count, unsigned q)
      : digits_(digit_count, 0), q_(q), done_(false) {}

  bool done() const { return done_; }
  const std::vector<Fq>& digits() const { return digits_; }

  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < q_) return;
      digits_[i] = 0;
    }
    done_ = true;  // wrapped past the most significant digit
  }

 private:
  std::vector<Fq> digits_;
  unsigned q_;
  bool done_;
};

// b over a window coset: digits fill coordinates lo..modulus-1 directly
inline std::optional<YPoly> window_poly(const FieldPtr& field, const BWindow& w,
                                        const std::vector<Fq>& digits) {
  if (w.modulus == 0) return std::nullopt;
  YPoly b(field, w.modulus);
  for (unsigned i = 0; i < w.width(); ++i) b.set_coeff(w.lo + i, digits[i]);
  return b;
}

// b from a truncated solution space: materialized tail becomes the window
inline YPoly space_poly(const FieldPtr& field, const SolutionSpace& sp,
                        const std::vector<Fq>& values) {
  std::vector<Fq> tail = materialize_ordered(sp, values);
  YPoly b(field, sp.l);
  for (unsigned i = 0; i < tail.size(); ++i) b.set_coeff(sp.delta + i, tail[i]);
  return b;
}

}  // namespace detail

enum SelfDualFamilies : unsigned {
  kSDTrivial = 1,
  kSDSingle = 2,   // <y b + u>
  kSDPair = 4,     // <y^(k+1) b + u y^k, y^(N-k)>
  kSDAll = 7,
};

// Streams every self-dual cyclic code spec exactly once: the middle power
// first, then the single-generator family in lexicographic b order, then the
// two-generator family by ascending k.  Pull-based; independent instances do
// not share state.
class SelfDualStream {
 public:
  SelfDualStream(unsigned s, FieldPtr field, unsigned families = kSDAll)
      : s_(s), field_(std::move(field)), families_(families) {
    if (s_ < 1) throw SizeOverflow("s must be >= 1");
    half_ = 1u << (s_ - 1);
  }

  std::optional<CodeSpec> next() {
    for (;;) {
      switch (phase_) {
        case 0: {
          ++phase_;
          if (families_ & kSDTrivial)
            return CodeSpec{field_, s_, Family::SDTrivial, 0, 0, std::nullopt};
          break;
        }
        case 1: {
          if (!(families_ & kSDSingle)) { ++phase_; break; }
          if (!odo_) {
            space_ = truncate(solve_recursive(2 * half_ - 1), half_ - 1);
            odo_.emplace(space_.dimension(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++phase_; break; }
          YPoly b = detail::space_poly(field_, space_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::SDTypeB, 0, 0, std::move(b)};
        }
        case 2: {
          if (!(families_ & kSDPair)) return std::nullopt;
          if (k_ >= half_) return std::nullopt;
          if (!odo_) {
            space_ = truncate(solve_recursive(2 * half_ - 2 * k_ - 1), half_ - k_ - 1);
            odo_.emplace(space_.dimension(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++k_; break; }
          YPoly b = detail::space_poly(field_, space_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::SDTypeC, k_, 0, std::move(b)};
        }
        default:
          return std::nullopt;
      }
    }
  }

 private:
  unsigned s_, half_;
  FieldPtr field_;
  unsigned families_;
  int phase_ = 0;
  unsigned k_ = 1;
  SolutionSpace space_;
  std::optional<detail::Odometer> odo_;
};

// Streams every cyclic code spec exactly once: family I in lexicographic b
// order, II by ascending k, III by ascending k, IV by ascending t, V by
// ascending (k, t).
class CyclicStream {
 public:
  CyclicStream(unsigned s, FieldPtr field) : s_(s), field_(std::move(field)) {
    if (s_ < 1) throw SizeOverflow("s must be >= 1");
    n_ = 1u << s_;
  }

  std::optional<CodeSpec> next() {
    for (;;) {
      switch (phase_) {
        case 0: {  // I
          if (!odo_) {
            win_ = b_window(Family::CaseI, s_, 0, 0);
            odo_.emplace(win_.width(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++phase_; k_ = 1; break; }
          auto b = detail::window_poly(field_, win_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::CaseI, 0, 0, std::move(b)};
        }
        case 1: {  // II, 1 <= k <= N-1
          if (k_ > n_ - 1) { ++phase_; k_ = 0; break; }
          if (!odo_) {
            win_ = b_window(Family::CaseII, s_, k_, 0);
            odo_.emplace(win_.width(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++k_; break; }
          auto b = detail::window_poly(field_, win_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::CaseII, k_, 0, std::move(b)};
        }
        case 2: {  // III, 0 <= k <= N
          if (k_ > n_) { ++phase_; t_ = 1; break; }
          return CodeSpec{field_, s_, Family::CaseIII, k_++, 0, std::nullopt};
        }
        case 3: {  // IV, 1 <= t <= N-1
          if (t_ > n_ - 1) { ++phase_; k_ = 1; t_ = 1; break; }
          if (!odo_) {
            win_ = b_window(Family::CaseIV, s_, 0, t_);
            odo_.emplace(win_.width(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++t_; break; }
          auto b = detail::window_poly(field_, win_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::CaseIV, 0, t_, std::move(b)};
        }
        case 4: {  // V, 1 <= k <= N-2, 1 <= t <= N-k-1
          if (k_ > n_ - 2) return std::nullopt;
          if (t_ > n_ - k_ - 1) { ++k_; t_ = 1; break; }
          if (!odo_) {
            win_ = b_window(Family::CaseV, s_, k_, t_);
            odo_.emplace(win_.width(), field_->order());
          }
          if (odo_->done()) { odo_.reset(); ++t_; break; }
          auto b = detail::window_poly(field_, win_, odo_->digits());
          odo_->advance();
          return CodeSpec{field_, s_, Family::CaseV, k_, t_, std::move(b)};
        }
        default:
          return std::nullopt;
      }
    }
  }

 private:
  unsigned s_, n_;
  FieldPtr field_;
  int phase_ = 0;
  unsigned k_ = 0, t_ = 0;
  BWindow win_;
  std::optional<detail::Odometer> odo_;
};

// desk-scale collectors
inline std::vector<CodeSpec> enumerate_selfdual(unsigned s, const FieldPtr& field,
                                                unsigned families = kSDAll) {
  std::vector<CodeSpec> out;
  SelfDualStream st(s, field, families);
  while (auto c = st.next()) out.push_back(std::move(*c));
  return out;
}

inline std::vector<CodeSpec> enumerate_all_cyclic(unsigned s, const FieldPtr& field) {
  std::vector<CodeSpec> out;
  CyclicStream st(s, field);
  while (auto c = st.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace ucyclic
