#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "ucyclic/gf2m.hpp"

using namespace ucyclic;

namespace {

// Reference arithmetic on F_2 polynomials stored as coefficient vectors.
// Deliberately shares nothing with the packed-integer code under test.
using Poly = std::vector<int>;

Poly poly_from_bits(std::uint64_t p) {
  Poly v;
  while (p) {
    v.push_back(static_cast<int>(p & 1));
    p >>= 1;
  }
  return v;
}

int poly_deg(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i]) return static_cast<int>(i);
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] ^= a[i] & b[j];
  return r;
}

Poly poly_rem(Poly a, const Poly& m) {
  int dm = poly_deg(m);
  for (int d = poly_deg(a); d >= dm; d = poly_deg(a))
    for (int i = 0; i <= dm; ++i) a[d - dm + i] ^= m[i];
  return a;
}

bool poly_is_zero(const Poly& p) { return poly_deg(p) < 0; }

bool naive_irreducible(std::uint64_t p) {
  Poly pp = poly_from_bits(p);
  int d = poly_deg(pp);
  if (d < 1) return false;
  for (std::uint64_t f = 2; ; ++f) {
    Poly fp = poly_from_bits(f);
    if (poly_deg(fp) > d / 2) return true;
    if (poly_is_zero(poly_rem(pp, fp))) return false;
  }
}

std::uint32_t naive_default_modulus(unsigned m) {
  for (std::uint64_t p = (std::uint64_t{1} << m) + 1;; p += 2)
    if (naive_irreducible(p)) return static_cast<std::uint32_t>(p);
}

// field multiplication through the reference polynomial path only
Fq naive_mul(const Field& f, Fq a, Fq b) {
  Poly r = poly_rem(poly_mul(poly_from_bits(a), poly_from_bits(b)),
                    poly_from_bits(f.modulus()));
  Fq out = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) out |= static_cast<Fq>(1u << i);
  return out;
}

}  // namespace

TEST_CASE("irreducibility agrees with trial division over coefficient vectors", "[gf2m]") {
  for (std::uint64_t p = 2; p < 1u << 10; ++p)
    CHECK(gf2poly_irreducible(p) == naive_irreducible(p));
}

TEST_CASE("default moduli are the smallest irreducibles", "[gf2m]") {
  // frozen small values, then the independent search for every degree
  CHECK(default_modulus(1) == 0x3);
  CHECK(default_modulus(2) == 0x7);
  CHECK(default_modulus(3) == 0xb);
  CHECK(default_modulus(4) == 0x13);
  CHECK(default_modulus(8) == 0x11b);
  for (unsigned m = 1; m <= 12; ++m) {
    std::uint32_t d = default_modulus(m);
    CHECK(d == naive_default_modulus(m));
    CHECK(gf2poly_degree(d) == static_cast<int>(m));
    CHECK_NOTHROW(Field(m, d));
  }
}

TEST_CASE("field construction rejects bad parameters", "[gf2m]") {
  CHECK_THROWS_AS(Field(0, 0x3), DegreeMismatch);
  CHECK_THROWS_AS(Field(17, 0x3), DegreeMismatch);
  CHECK_THROWS_AS(Field(3, 0x13), DegreeMismatch);     // degree 4 modulus
  CHECK_THROWS_AS(Field(2, 0x5), ReducibleModulus);    // x^2 + 1 = (x+1)^2
  CHECK_THROWS_AS(Field(4, 0x11), ReducibleModulus);   // x^4 + 1 = (x+1)^4
  CHECK_NOTHROW(Field(4, 0x1f));                       // x^4+x^3+x^2+x+1 is irreducible
}

TEST_CASE("field axioms hold exhaustively for small degrees", "[gf2m]") {
  for (unsigned m : {1u, 2u, 3u, 4u}) {
    Field f(m);
    unsigned q = f.order();
    for (Fq a = 0; a < q; ++a) {
      CHECK(Field::add(a, a) == 0);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (Fq b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, b) == naive_mul(f, a, b));
        // Frobenius: squaring is additive
        Fq s = Field::add(a, b);
        CHECK(f.mul(s, s) == Field::add(f.mul(a, a), f.mul(b, b)));
        for (Fq c = 0; c < q; ++c) {
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("randomized axioms at table and carryless degrees", "[gf2m]") {
  std::mt19937 rng(20240817);
  for (unsigned m : {8u, 12u, 16u}) {
    Field f(m);
    std::uniform_int_distribution<unsigned> pick(0, f.order() - 1);
    for (int rep = 0; rep < 2000; ++rep) {
      Fq a = static_cast<Fq>(pick(rng));
      Fq b = static_cast<Fq>(pick(rng));
      Fq c = static_cast<Fq>(pick(rng));
      CHECK(f.mul(a, b) == naive_mul(f, a, b));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, Field::add(b, c)) == Field::add(f.mul(a, b), f.mul(a, c)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(a) == f.pow(a, f.order() - 2));
      }
    }
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
  }
}

TEST_CASE("power map and generator basics", "[gf2m]") {
  Field f(2);  // F_4 with x^2 + x + 1
  CHECK(f.gen() == 2);
  CHECK(f.mul(2, 2) == 3);        // x^2 = x + 1
  CHECK(f.mul(2, 3) == 1);        // x * (x+1) = x^2 + x = 1
  CHECK(f.inv(2) == 3);
  CHECK(f.pow(2, 3) == 1);        // x^3 = 1 in F_4*
  CHECK(f.pow(0, 0) == 1);        // empty product convention
  CHECK(f.valid(3));
  CHECK(!f.valid(4));

  Field f1(1);
  CHECK(f1.gen() == 1);
  CHECK(f1.mul(1, 1) == 1);
}

TEST_CASE("fields compare by degree and modulus", "[gf2m]") {
  // two irreducible cubics: x^3+x+1 and x^3+x^2+1
  Field a(3, 0xb), b(3, 0xd), c(3, 0xb);
  CHECK(a == c);
  CHECK(a != b);
  CHECK_THROWS_AS(require_same_field(a, b), SpecMismatch);
  CHECK_NOTHROW(require_same_field(a, c));
  // arithmetic differs across moduli but both satisfy the axioms
  for (Fq x = 1; x < 8; ++x) {
    CHECK(a.mul(x, a.inv(x)) == 1);
    CHECK(b.mul(x, b.inv(x)) == 1);
  }
}
