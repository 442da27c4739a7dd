#pragma once

// The binary matrices behind the reciprocal transform and the solution spaces
// S_l of M_l * B = 0.
//
// G_{2^lambda} is built by the Kronecker square recursion
//   G_2 = [[1,0],[1,1]],   G_{2^lambda} = [[G, 0], [G, G]]  (G = G_{2^(lambda-1)})
// so entry (i, j) is binom(i, j) mod 2 and G is an involution.  M_l is the
// upper left l x l block of I + G_{2^lambda} for the least lambda with
// 2^lambda >= l.  M_l is strictly lower triangular with rank ceil((l-1)/2),
// so the null space S_l has dimension floor((l+1)/2).
//
// Solving picks pivots at the highest set column of each row, which lands
// every pivot on an even column: coordinate 0 is forced to 0 for l >= 2, odd
// coordinates stay free (plus the top coordinate when l is odd), and every
// even coordinate is an XOR of smaller odd free coordinates.  Dependency rows
// are F_2-linear in the free coordinates even though the solution vectors
// take values in F_{2^m}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gf2m.hpp"

namespace ucyclic {

using BigInt = boost::multiprecision::cpp_int;

constexpr unsigned kMaxSolveLength = 1u << 20;

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(unsigned n) : n_(n), w_((n + 63) / 64, 0) {}

  unsigned size() const { return n_; }
  bool get(unsigned i) const { return w_[i >> 6] >> (i & 63) & 1; }
  void set(unsigned i, bool v) {
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(unsigned i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }

  bool any() const {
    for (auto w : w_) if (w) return true;
    return false;
  }

  // highest set index, or -1 when empty
  int highest_set() const {
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k]) return static_cast<int>(k * 64 + 63 - __builtin_clzll(w_[k]));
    return -1;
  }

  std::vector<unsigned> set_bits() const {
    std::vector<unsigned> out;
    for (unsigned i = 0; i < n_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const BitVec& o) const {
    return std::tie(n_, w_) < std::tie(o.n_, o.w_);
  }

 private:
  unsigned n_ = 0;
  std::vector<std::uint64_t> w_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), r_(rows, BitVec(cols)) {}

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool get(unsigned i, unsigned j) const { return r_[i].get(j); }
  void set(unsigned i, unsigned j, bool v) { r_[i].set(j, v); }
  const BitVec& row(unsigned i) const { return r_[i]; }

  bool operator==(const BitMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
  }

  // rank over F_2; does not modify *this
  unsigned rank() const {
    std::map<int, BitVec> basis;  // echelon rows keyed by highest set bit
    for (unsigned i = 0; i < rows_; ++i) {
      BitVec v = r_[i];
      for (int c = v.highest_set(); c >= 0; c = v.highest_set()) {
        auto it = basis.find(c);
        if (it == basis.end()) {
          basis.emplace(c, std::move(v));
          break;
        }
        v.xor_with(it->second);
      }
    }
    return static_cast<unsigned>(basis.size());
  }

 private:
  unsigned rows_ = 0, cols_ = 0;
  std::vector<BitVec> r_;
};

inline unsigned ceil_log2(unsigned n) {
  unsigned l = 0;
  while ((1u << l) < n) ++l;
  return l;
}

// G_{2^lambda} by the Kronecker square recursion; lambda = 0 gives (1)
inline BitMatrix build_G(unsigned lambda) {
  if (lambda > 20) throw SizeOverflow("G exponent too large");
  unsigned n = 1u << lambda;
  BitMatrix g(1, 1);
  g.set(0, 0, true);
  for (unsigned size = 1; size < n; size *= 2) {
    BitMatrix next(size * 2, size * 2);
    for (unsigned i = 0; i < size; ++i)
      for (unsigned j = 0; j < size; ++j)
        if (g.get(i, j)) {
          next.set(i, j, true);
          next.set(size + i, j, true);
          next.set(size + i, size + j, true);
        }
    g = next;
  }
  return g;
}

// upper left l x l block of I + G_{2^lambda}, lambda least with 2^lambda >= l
inline BitMatrix build_M(unsigned l) {
  if (l < 1 || l > kMaxSolveLength) throw SizeOverflow("l out of range");
  BitMatrix g = build_G(ceil_log2(l));
  BitMatrix m(l, l);
  for (unsigned i = 0; i < l; ++i)
    for (unsigned j = 0; j < l; ++j)
      m.set(i, j, g.get(i, j) ^ (i == j));
  return m;
}

// The null space of M_l over F_{2^m} (coordinates 0..l-1), or its truncation
// to coordinates delta..l-1.  Bound coordinates carry a mask over absolute
// free indices; every mask references only free indices below its own index.
struct SolutionSpace {
  unsigned l = 0;
  unsigned delta = 0;
  std::vector<unsigned> free_coords;      // ascending absolute indices
  std::map<unsigned, BitVec> bound;       // absolute index -> mask (width l)

  unsigned dimension() const { return static_cast<unsigned>(free_coords.size()); }
};

namespace detail {

// Gaussian elimination with highest-column pivots over rows that carry an F_2
// right-hand side mask.  Rows that vanish on the left must vanish on the
// right.  Returns pivot column -> row, fully reduced: no pivot row touches
// another pivot column.
struct AugRow {
  BitVec lhs, rhs;
};

inline std::map<unsigned, AugRow> eliminate(std::vector<AugRow> rows) {
  std::map<unsigned, AugRow> pivots;
  for (auto& r : rows) {
    for (int c = r.lhs.highest_set(); ; c = r.lhs.highest_set()) {
      if (c < 0) {
        if (r.rhs.any())
          throw InconsistentSystem("zero row with nonzero right-hand side");
        break;
      }
      auto it = pivots.find(static_cast<unsigned>(c));
      if (it == pivots.end()) {
        pivots.emplace(static_cast<unsigned>(c), std::move(r));
        break;
      }
      r.lhs.xor_with(it->second.lhs);
      r.rhs.xor_with(it->second.rhs);
    }
  }
  // Ascending pass: every foreign pivot bit in a row sits below the row's own
  // pivot, so XORing in already-reduced rows strictly removes pivot bits.
  for (auto& [c, row] : pivots) {
    for (;;) {
      int other = -1;
      for (unsigned b : row.lhs.set_bits())
        if (b != c && pivots.count(b)) { other = static_cast<int>(b); break; }
      if (other < 0) break;
      row.lhs.xor_with(pivots.at(other).lhs);
      row.rhs.xor_with(pivots.at(other).rhs);
    }
  }
  return pivots;
}

}  // namespace detail

// null space of M_l by direct elimination
inline SolutionSpace solve_homogeneous(unsigned l) {
  BitMatrix m = build_M(l);
  std::vector<detail::AugRow> rows(l);
  for (unsigned i = 0; i < l; ++i)
    rows[i] = {m.row(i), BitVec(0)};
  auto pivots = detail::eliminate(std::move(rows));

  SolutionSpace s;
  s.l = l;
  for (unsigned c = 0; c < l; ++c)
    if (!pivots.count(c)) s.free_coords.push_back(c);
  for (auto& [c, row] : pivots) {
    BitVec mask = row.lhs;
    mask.flip(c);  // y_c = XOR of the remaining (free) coordinates
    s.bound.emplace(c, std::move(mask));
  }
  return s;
}

// Same space assembled by the split recursion: for l = 2^(lambda-1) + tau the
// first half of a solution solves the half-size system and the second half
// solves M_tau * Y = (first tau coordinates of the first half).  Bases are
// S_1 = {(b0)} and S_2 = {(0, b1)}; the inner solve applies from l >= 3 and
// never pushes a constraint back into the outer space.
inline SolutionSpace solve_recursive(unsigned l) {
  if (l < 1 || l > kMaxSolveLength) throw SizeOverflow("l out of range");
  SolutionSpace s;
  s.l = l;
  if (l == 1) {
    s.free_coords = {0};
    return s;
  }
  if (l == 2) {
    s.free_coords = {1};
    s.bound.emplace(0u, BitVec(2));
    return s;
  }
  unsigned half = 1u << (ceil_log2(l) - 1);
  unsigned tau = l - half;
  SolutionSpace outer = solve_recursive(half);

  // value of outer coordinate r as a mask over outer free coordinates
  auto value_mask = [&](unsigned r) {
    BitVec v(l);
    auto it = outer.bound.find(r);
    if (it == outer.bound.end()) {
      v.set(r, true);
    } else {
      for (unsigned b : it->second.set_bits()) v.set(b, true);
    }
    return v;
  };

  BitMatrix mt = build_M(tau);
  std::vector<detail::AugRow> rows(tau);
  for (unsigned r = 0; r < tau; ++r) {
    BitVec lhs(l);
    for (unsigned j = 0; j < tau; ++j)
      if (mt.get(r, j)) lhs.set(half + j, true);
    rows[r] = {std::move(lhs), value_mask(r)};
  }
  auto pivots = detail::eliminate(std::move(rows));

  s.free_coords = outer.free_coords;
  for (auto& [c, row] : outer.bound) {
    BitVec mask(l);
    for (unsigned b : row.set_bits()) mask.set(b, true);
    s.bound.emplace(c, std::move(mask));
  }
  for (unsigned j = half; j < l; ++j)
    if (!pivots.count(j)) s.free_coords.push_back(j);
  for (auto& [c, row] : pivots) {
    BitVec mask = row.lhs;
    mask.flip(c);
    mask.xor_with(row.rhs);  // y_c = other new coords + outer combination
    s.bound.emplace(c, std::move(mask));
  }
  std::sort(s.free_coords.begin(), s.free_coords.end());
  return s;
}

// Force coordinates 0..delta-1 to zero and keep the tail delta..l-1.  Bound
// coordinates below delta depend only on free coordinates below delta, so no
// constraint propagates upward: truncation just zeroes the dropped frees.
inline SolutionSpace truncate(const SolutionSpace& s, unsigned delta) {
  if (delta >= s.l) throw SizeOverflow("delta must be < l");
  if (delta < s.delta) throw SizeOverflow("cannot widen a truncated space");
  SolutionSpace t;
  t.l = s.l;
  t.delta = delta;
  for (unsigned f : s.free_coords)
    if (f >= delta) t.free_coords.push_back(f);
  for (auto& [c, mask] : s.bound) {
    if (c < delta) continue;
    BitVec mm = mask;
    for (unsigned i = 0; i < delta; ++i) mm.set(i, false);
    t.bound.emplace(c, std::move(mm));
  }
  return t;
}

// vector (coordinates delta..l-1) from values of the free coordinates
inline std::vector<Fq> materialize(const SolutionSpace& s,
                                   const std::map<unsigned, Fq>& assign) {
  std::vector<Fq> full(s.l, 0);
  for (unsigned f : s.free_coords) {
    auto it = assign.find(f);
    if (it == assign.end())
      throw MissingAssignment("no value for free coordinate " + std::to_string(f));
    full[f] = it->second;
  }
  for (auto& [c, mask] : s.bound) {
    Fq v = 0;
    for (unsigned b : mask.set_bits()) v ^= full[b];
    full[c] = v;
  }
  return std::vector<Fq>(full.begin() + s.delta, full.end());
}

// same, with values aligned to free_coords order (enumeration hot path)
inline std::vector<Fq> materialize_ordered(const SolutionSpace& s,
                                           const std::vector<Fq>& values) {
  if (values.size() != s.free_coords.size())
    throw MissingAssignment("value count does not match free coordinate count");
  std::vector<Fq> full(s.l, 0);
  for (std::size_t i = 0; i < values.size(); ++i)
    full[s.free_coords[i]] = values[i];
  for (auto& [c, mask] : s.bound) {
    Fq v = 0;
    for (unsigned b : mask.set_bits()) v ^= full[b];
    full[c] = v;
  }
  return std::vector<Fq>(full.begin() + s.delta, full.end());
}

inline BigInt space_cardinality(const SolutionSpace& s, unsigned m) {
  return boost::multiprecision::pow(BigInt(1) << m,
                                    static_cast<unsigned>(s.free_coords.size()));
}

// "(0, b1, b1, b3)" style rendering of the parametrized tail
inline std::string space_to_string(const SolutionSpace& s) {
  std::string out = "(";
  for (unsigned c = s.delta; c < s.l; ++c) {
    if (c > s.delta) out += ", ";
    auto it = s.bound.find(c);
    if (it == s.bound.end()) {
      out += "b" + std::to_string(c);
    } else {
      auto bits = it->second.set_bits();
      if (bits.empty()) {
        out += "0";
      } else {
        for (std::size_t i = 0; i < bits.size(); ++i) {
          if (i) out += "+";
          out += "b" + std::to_string(bits[i]);
        }
      }
    }
  }
  out += ")";
  return out;
}

}  // namespace ucyclic
