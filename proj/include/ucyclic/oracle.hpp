#pragma once

// Assumption-free checks for code specs: expand a spec to its literal
// codeword set, test self-orthogonality from the shift basis, and count
// self-dual codes by scanning the full cyclic inventory.  Everything here
// works from generator vectors and ring arithmetic only; none of the
// enumeration formulas are trusted.
//
// Codewords are packed byte strings (per entry: unit part then u part, one or
// two bytes per field symbol), so XOR of packed words is addition in R^N and
// sorted vectors give set identity.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "codes.hpp"
#include "ring.hpp"

namespace ucyclic {

inline std::uint64_t default_expand_cap() {
  if (const char* e = std::getenv("UCYCLIC_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

inline unsigned symbol_bytes(const Field& f) { return f.degree() <= 8 ? 1 : 2; }

inline void pack_symbol(std::string& out, Fq v, unsigned bytes) {
  out.push_back(static_cast<char>(v & 0xff));
  if (bytes == 2) out.push_back(static_cast<char>(v >> 8));
}

inline std::string pack_ring_vec(const RingVec& v) {
  unsigned sb = symbol_bytes(*v.field());
  std::string out;
  out.reserve(2 * v.size() * sb);
  for (std::size_t i = 0; i < v.size(); ++i) {
    pack_symbol(out, v[i].a, sb);
    pack_symbol(out, v[i].b, sb);
  }
  return out;
}

inline RingVec unpack_ring_vec(const FieldPtr& field, unsigned n, const std::string& w) {
  unsigned sb = symbol_bytes(*field);
  RingVec v(field, n);
  for (unsigned i = 0; i < n; ++i) {
    auto sym = [&](unsigned pos) {
      Fq x = static_cast<std::uint8_t>(w[pos * sb]);
      if (sb == 2) x |= static_cast<Fq>(static_cast<std::uint8_t>(w[pos * sb + 1])) << 8;
      return x;
    };
    v[i] = {sym(2 * i), sym(2 * i + 1)};
  }
  return v;
}

inline void xor_into(std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

inline bool is_zero_word(const std::string& w) {
  for (char c : w) if (c) return false;
  return true;
}

// full codeword set, sorted
struct CodewordSet {
  FieldPtr field;
  unsigned n = 0;
  std::vector<std::string> words;

  std::size_t size() const { return words.size(); }
  bool contains(const std::string& w) const {
    return std::binary_search(words.begin(), words.end(), w);
  }
  bool operator==(const CodewordSet& o) const { return n == o.n && words == o.words; }
};

// every cyclic shift of every generator; spans the code as an R-module
inline std::vector<RingVec> shift_basis(const CodeSpec& spec) {
  std::vector<RingVec> out;
  for (const RingVec& g : generators(spec)) {
    RingVec v = g;
    for (unsigned j = 0; j < spec.length(); ++j) {
      out.push_back(v);
      v = cyclic_shift(v);
    }
  }
  return out;
}

namespace detail {

// echelon basis of packed words over F_2, keyed by leading byte/bit
class PackedBasis {
 public:
  bool insert(std::string w) {
    for (;;) {
      int lead = lead_bit(w);
      if (lead < 0) return false;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rows_.emplace(lead, std::move(w));
        return true;
      }
      xor_into(w, it->second);
    }
  }

  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

  std::vector<std::string> rows() const {
    std::vector<std::string> out;
    for (auto& [k, w] : rows_) out.push_back(w);
    return out;
  }

 private:
  static int lead_bit(const std::string& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto b = static_cast<std::uint8_t>(w[i]);
      if (b) return static_cast<int>(i * 8 + __builtin_ctz(b));
    }
    return -1;
  }

  std::map<int, std::string> rows_;
};

}  // namespace detail

// Expand a code to its codeword set: seed an F_2 echelon basis with every
// field-power and u multiple of every shift of every generator, then walk all
// XOR combinations.  The rank must reproduce the family cardinality table.
inline CodewordSet expand(const CodeSpec& spec,
                          std::uint64_t cap = default_expand_cap()) {
  CodeSpec c = as_case(spec);
  unsigned n = c.length();
  unsigned m = c.field->degree();
  unsigned e = code_log_size(c);

  if (BigInt expected = code_size(c); expected > cap)
    throw CapExceeded("code has " + expected.str() + " words, cap is " +
                      std::to_string(cap));

  detail::PackedBasis basis;
  Fq alpha = c.field->gen();
  for (const RingVec& g : generators(c)) {
    for (unsigned i = 0; i < m; ++i) {
      Fq ai = c.field->pow(alpha, i);
      for (RingElem scalar : {RingElem{ai, 0}, RingElem{0, ai}}) {
        RingVec v = scalar_mul(scalar, g);
        for (unsigned j = 0; j < n; ++j) {
          basis.insert(pack_ring_vec(v));
          v = cyclic_shift(v);
        }
      }
    }
  }

  if (basis.rank() != m * e)
    throw CardinalityMismatch("expansion rank " + std::to_string(basis.rank()) +
                              " != table rank " + std::to_string(m * e));

  std::vector<std::string> rows = basis.rows();
  CodewordSet cs{c.field, n, {}};
  cs.words.reserve(std::size_t{1} << rows.size());
  std::string cur(2 * n * symbol_bytes(*c.field), '\0');
  cs.words.push_back(cur);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << rows.size()); ++i) {
    xor_into(cur, rows[__builtin_ctzll(i)]);  // Gray-code walk
    cs.words.push_back(cur);
  }
  std::sort(cs.words.begin(), cs.words.end());
  return cs;
}

// C is self-orthogonal iff all pairwise inner products of the shift basis
// vanish (the inner product is R-bilinear)
inline bool is_self_orthogonal(const CodeSpec& spec) {
  std::vector<RingVec> sb = shift_basis(as_case(spec));
  for (std::size_t i = 0; i < sb.size(); ++i)
    for (std::size_t j = i; j < sb.size(); ++j)
      if (!is_zero(inner_product(sb[i], sb[j]))) return false;
  return true;
}

// self-dual = self-orthogonal of the exact middle cardinality q^N
inline bool is_self_dual(const CodeSpec& spec) {
  return code_log_size(spec) == spec.length() && is_self_orthogonal(spec);
}

// scan the full cyclic inventory and count the self-dual members
inline std::uint64_t brute_count_selfdual(unsigned s, const FieldPtr& field) {
  CyclicStream st(s, field);
  std::uint64_t count = 0;
  while (auto c = st.next())
    if (is_self_dual(*c)) ++count;
  return count;
}

// orthogonal complement by scanning the whole ambient module R^N; only for
// tiny parameters (the scan is q^(2N) words)
inline CodewordSet orthogonal_complement_bruteforce(const CodewordSet& cs,
                                                    std::uint64_t cap = default_expand_cap()) {
  unsigned n = cs.n;
  unsigned m = cs.field->degree();
  BigInt ambient = boost::multiprecision::pow(BigInt(1) << m, 2 * n);
  if (ambient > cap)
    throw CapExceeded("ambient module has " + ambient.str() + " words");

  std::vector<RingVec> members;
  members.reserve(cs.words.size());
  for (const std::string& w : cs.words)
    members.push_back(unpack_ring_vec(cs.field, n, w));

  CodewordSet out{cs.field, n, {}};
  std::vector<Fq> sym(2 * n, 0);  // odometer over all of R^N
  unsigned q = cs.field->order();
  for (;;) {
    RingVec v(cs.field, n);
    for (unsigned i = 0; i < n; ++i) v[i] = {sym[2 * i], sym[2 * i + 1]};
    bool ortho = true;
    for (const RingVec& c : members)
      if (!is_zero(inner_product(v, c))) { ortho = false; break; }
    if (ortho) out.words.push_back(pack_ring_vec(v));

    std::size_t i = sym.size();
    while (i-- > 0) {
      if (++sym[i] < q) break;
      sym[i] = 0;
    }
    if (i == std::size_t(-1)) break;  // wrapped
  }
  std::sort(out.words.begin(), out.words.end());
  return out;
}

}  // namespace ucyclic
