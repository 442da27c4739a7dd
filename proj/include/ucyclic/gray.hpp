#pragma once

// The Gray isometry from R^N to F_q^(2N): a + b u maps to the pair (b, a+b),
// assembled in block layout (all u parts first, then all a+b parts).  It is
// F_q-linear, injective, and sends Lee weight to Hamming weight.  A cyclic
// shift of the preimage becomes a simultaneous single rotation of both
// halves; interleaving the halves turns that into a plain shift by two.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "ring.hpp"

namespace ucyclic {

using WeightDistribution = std::map<unsigned, std::uint64_t>;

inline std::vector<Fq> gray_word(const RingVec& v) {
  std::size_t n = v.size();
  std::vector<Fq> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = v[i].b;
    out[n + i] = static_cast<Fq>(v[i].a ^ v[i].b);
  }
  return out;
}

inline std::string pack_field_vec(const Field& f, const std::vector<Fq>& v) {
  unsigned sb = symbol_bytes(f);
  std::string out;
  out.reserve(v.size() * sb);
  for (Fq x : v) pack_symbol(out, x, sb);
  return out;
}

inline std::vector<Fq> unpack_field_vec(const Field& f, const std::string& w) {
  unsigned sb = symbol_bytes(f);
  std::vector<Fq> v(w.size() / sb);
  for (std::size_t i = 0; i < v.size(); ++i) {
    Fq x = static_cast<std::uint8_t>(w[i * sb]);
    if (sb == 2) x |= static_cast<Fq>(static_cast<std::uint8_t>(w[i * sb + 1])) << 8;
    v[i] = x;
  }
  return v;
}

// a set of words over F_q, packed and sorted like CodewordSet
struct FieldWordSet {
  FieldPtr field;
  unsigned n = 0;  // symbols per word
  std::vector<std::string> words;

  std::size_t size() const { return words.size(); }
  bool contains(const std::string& w) const {
    return std::binary_search(words.begin(), words.end(), w);
  }
};

inline FieldWordSet gray_image(const CodewordSet& cs) {
  FieldWordSet out{cs.field, 2 * cs.n, {}};
  out.words.reserve(cs.words.size());
  for (const std::string& w : cs.words)
    out.words.push_back(
        pack_field_vec(*cs.field, gray_word(unpack_ring_vec(cs.field, cs.n, w))));
  std::sort(out.words.begin(), out.words.end());
  out.words.erase(std::unique(out.words.begin(), out.words.end()), out.words.end());
  if (out.words.size() != cs.words.size())
    throw CardinalityMismatch("a Gray image collided; the map must be injective");
  return out;
}

inline WeightDistribution lee_distribution(const CodewordSet& cs) {
  WeightDistribution d;
  for (const std::string& w : cs.words)
    ++d[lee_weight(unpack_ring_vec(cs.field, cs.n, w))];
  return d;
}

inline WeightDistribution hamming_distribution(const FieldWordSet& ws) {
  WeightDistribution d;
  for (const std::string& w : ws.words) {
    std::vector<Fq> v = unpack_field_vec(*ws.field, w);
    unsigned wt = 0;
    for (Fq x : v) wt += x != 0;
    ++d[wt];
  }
  return d;
}

// simultaneous single rotation of both halves (the image of a cyclic shift)
inline std::vector<Fq> rotate_halves(const std::vector<Fq>& w) {
  std::size_t n = w.size() / 2;
  std::vector<Fq> out(w.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = w[(i + n - 1) % n];
    out[n + i] = w[n + (i + n - 1) % n];
  }
  return out;
}

// block layout -> interleaved layout (b0, c0, b1, c1, ...); under this
// permutation rotate_halves becomes a cyclic shift by two positions
inline std::vector<Fq> interleave_halves(const std::vector<Fq>& w) {
  std::size_t n = w.size() / 2;
  std::vector<Fq> out(w.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[2 * i] = w[i];
    out[2 * i + 1] = w[n + i];
  }
  return out;
}

inline bool is_2_quasi_cyclic(const FieldWordSet& ws) {
  for (const std::string& w : ws.words) {
    std::vector<Fq> r = rotate_halves(unpack_field_vec(*ws.field, w));
    if (!ws.contains(pack_field_vec(*ws.field, r))) return false;
  }
  return true;
}

// Literal self-duality over F_q: the set is F_q-linear (closed under XOR and
// scalar multiples), totally isotropic, and of square cardinality q^n.
// Everything is checked, nothing inferred from the preimage.
inline bool is_selfdual_field_code(const FieldWordSet& ws,
                                   std::uint64_t pair_cap = 1u << 26) {
  const Field& f = *ws.field;
  if (ws.words.empty()) return false;
  if (static_cast<std::uint64_t>(ws.size()) * ws.size() > pair_cap)
    throw CapExceeded("pairwise check too large");

  // |C|^2 = q^n
  BigInt sq = BigInt(ws.size()) * ws.size();
  if (sq != boost::multiprecision::pow(BigInt(f.order()), ws.n)) return false;

  std::vector<std::vector<Fq>> v;
  v.reserve(ws.size());
  for (const std::string& w : ws.words) v.push_back(unpack_field_vec(f, w));

  // linear: additive closure and scalar closure
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) {
      std::string sum = ws.words[i];
      xor_into(sum, ws.words[j]);
      if (!ws.contains(sum)) return false;
    }
    for (Fq c = 2; c < f.order(); ++c) {
      std::vector<Fq> scaled(v[i].size());
      for (std::size_t p = 0; p < v[i].size(); ++p) scaled[p] = f.mul(c, v[i][p]);
      if (!ws.contains(pack_field_vec(f, scaled))) return false;
    }
  }

  // totally isotropic under the Euclidean form
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j) {
      Fq dot = 0;
      for (std::size_t p = 0; p < v[i].size(); ++p)
        dot ^= f.mul(v[i][p], v[j][p]);
      if (dot != 0) return false;
    }
  return true;
}

}  // namespace ucyclic
