#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ucyclic/codes.hpp"

using namespace ucyclic;

namespace {

// window-by-window census, summed independently of the closed form
BigInt census_by_windows(unsigned s, unsigned m) {
  BigInt q = BigInt(1) << m;
  unsigned n = 1u << s;
  auto qpow = [&](unsigned e) { return boost::multiprecision::pow(q, e); };
  BigInt total = qpow(n / 2);                        // I
  for (unsigned k = 1; k <= n - 1; ++k)              // II
    total += qpow((n - k) / 2);
  total += n + 1;                                    // III
  for (unsigned t = 1; t <= n - 1; ++t)              // IV
    total += qpow(t / 2);
  for (unsigned k = 1; k <= n - 2; ++k)              // V
    for (unsigned t = 1; t <= n - k - 1; ++t)
      total += qpow(t / 2);
  return total;
}

// geometric-series closed form with explicit division; s >= 3
BigInt selfdual_closed_form(unsigned s, unsigned m) {
  BigInt q = BigInt(1) << m;
  unsigned quarter = 1u << (s - 2);
  BigInt geo = (boost::multiprecision::pow(q, quarter - 1) - 1) / (q - 1);
  return 1 + q + 2 * q * q * geo + boost::multiprecision::pow(q, quarter + 1);
}

std::vector<std::string> keys_of(const std::vector<CodeSpec>& specs) {
  std::vector<std::string> out;
  for (const auto& c : specs) out.push_back(canonical_key(c));
  return out;
}

}  // namespace

TEST_CASE("self-dual counts hit the frozen values", "[codes]") {
  CHECK(count_selfdual(1, 1) == 3);
  CHECK(count_selfdual(2, 1) == 7);
  CHECK(count_selfdual(3, 1) == 19);
  CHECK(count_selfdual(4, 1) == 91);
  CHECK(count_selfdual(5, 1) == 1531);
  CHECK(count_selfdual(2, 2) == 21);
  CHECK(count_selfdual(3, 2) == 101);
  CHECK(count_selfdual(1, 16) == 65537);
  for (unsigned s = 3; s <= 8; ++s)
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(count_selfdual(s, m) == selfdual_closed_form(s, m));
}

TEST_CASE("cyclic inventory counts hit the frozen values", "[codes]") {
  CHECK(count_all_cyclic(1, 1) == 7);
  CHECK(count_all_cyclic(2, 1) == 23);
  CHECK(count_all_cyclic(3, 1) == 135);
  CHECK(count_all_cyclic(4, 1) == 2519);
  CHECK(count_all_cyclic(2, 2) == 45);
  for (unsigned s = 1; s <= 7; ++s)
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(count_all_cyclic(s, m) == census_by_windows(s, m));
}

TEST_CASE("streams emit exactly the counted number of specs", "[codes]") {
  for (unsigned s = 1; s <= 5; ++s)
    for (unsigned m = 1; m <= 2; ++m) {
      auto f = make_field(m);
      CHECK(BigInt(enumerate_selfdual(s, f).size()) == count_selfdual(s, m));
    }
  for (unsigned s = 1; s <= 4; ++s)
    for (unsigned m = 1; m <= 2; ++m) {
      auto f = make_field(m);
      CHECK(BigInt(enumerate_all_cyclic(s, f).size()) == count_all_cyclic(s, m));
    }
}

TEST_CASE("the five families split as expected at s = 2", "[codes]") {
  auto f = make_field(1);
  std::map<Family, unsigned> per;
  for (const auto& c : enumerate_all_cyclic(2, f)) ++per[c.family];
  CHECK(per[Family::CaseI] == 4);
  CHECK(per[Family::CaseII] == 5);
  CHECK(per[Family::CaseIII] == 5);
  CHECK(per[Family::CaseIV] == 5);
  CHECK(per[Family::CaseV] == 4);
}

TEST_CASE("every windowed polynomial respects its coset window", "[codes]") {
  for (unsigned m : {1u, 2u}) {
    auto f = make_field(m);
    for (unsigned s : {1u, 2u, 3u}) {
      for (const auto& c : enumerate_all_cyclic(s, f)) {
        BWindow w = b_window(c.family, c.s, c.k, c.t);
        if (w.modulus == 0) {
          CHECK(!c.b.has_value());
          continue;
        }
        REQUIRE(c.b.has_value());
        CHECK(c.b->modulus_exp() == w.modulus);
        for (unsigned i = 0; i < w.lo; ++i) CHECK(c.b->coeff(i) == 0);
      }
    }
  }
}

TEST_CASE("canonical keys are pairwise distinct", "[codes]") {
  for (unsigned m : {1u, 2u}) {
    auto f = make_field(m);
    for (unsigned s : {1u, 2u, 3u}) {
      auto all = keys_of(enumerate_all_cyclic(s, f));
      std::set<std::string> uniq(all.begin(), all.end());
      CHECK(uniq.size() == all.size());
      auto sd = keys_of(enumerate_selfdual(s, f));
      std::set<std::string> sd_uniq(sd.begin(), sd.end());
      CHECK(sd_uniq.size() == sd.size());
      // self-dual specs name codes from the same inventory
      for (const auto& k : sd_uniq) CHECK(uniq.count(k) == 1);
    }
  }
}

TEST_CASE("self-dual forms rewrite to their case form", "[codes]") {
  auto f = make_field(1);
  CodeSpec triv{f, 3, Family::SDTrivial, 0, 0, std::nullopt};
  CodeSpec ct = as_case(triv);
  CHECK(ct.family == Family::CaseIII);
  CHECK(ct.k == 4);

  auto sd = enumerate_selfdual(3, f);
  for (const auto& c : sd) {
    CodeSpec cc = as_case(c);
    switch (c.family) {
      case Family::SDTrivial: CHECK(cc.family == Family::CaseIII); break;
      case Family::SDTypeB: CHECK(cc.family == Family::CaseI); break;
      case Family::SDTypeC:
        CHECK(cc.family == Family::CaseV);
        CHECK(cc.t == cc.length() - 2 * cc.k);
        break;
      default: FAIL("unexpected family from the self-dual stream");
    }
    // a self-dual spec must sit at the middle cardinality
    CHECK(code_log_size(c) == c.length());
    // and as_case must not change the named code
    CHECK(canonical_key(c) == canonical_key(cc));
  }
}

TEST_CASE("log sizes follow the family table", "[codes]") {
  auto f = make_field(2);
  unsigned s = 2, n = 4;
  CHECK(code_log_size({f, s, Family::CaseI, 0, 0, std::nullopt}) == n);
  CHECK(code_log_size({f, s, Family::CaseII, 1, 0, std::nullopt}) == n - 1);
  CHECK(code_log_size({f, s, Family::CaseIII, 1, 0, std::nullopt}) == 2 * (n - 1));
  CHECK(code_log_size({f, s, Family::CaseIV, 0, 3, std::nullopt}) == 2 * n - 3);
  CHECK(code_log_size({f, s, Family::CaseV, 1, 2, std::nullopt}) == 2 * n - 4);
  CHECK(code_size({f, s, Family::CaseIII, 3, 0, std::nullopt}) == 16);  // 4^2
}

TEST_CASE("dual exponents and dual windows mirror the table", "[codes]") {
  for (unsigned m : {1u, 2u}) {
    auto f = make_field(m);
    for (unsigned s : {1u, 2u, 3u}) {
      for (const auto& c : enumerate_all_cyclic(s, f)) {
        CodeSpec d = dual_code(c);
        // sizes multiply to the ambient: exponents add to 2N
        CHECK(code_log_size(c) + code_log_size(d) == 2 * c.length());
        // family pairing
        switch (c.family) {
          case Family::CaseI: CHECK(d.family == Family::CaseI); break;
          case Family::CaseII:
            CHECK(d.family == Family::CaseIV);
            CHECK(d.t == c.length() - c.k);
            break;
          case Family::CaseIII:
            CHECK(d.family == Family::CaseIII);
            CHECK(d.k == c.length() - c.k);
            break;
          case Family::CaseIV:
            CHECK(d.family == Family::CaseII);
            CHECK(d.k == c.length() - c.t);
            break;
          default:
            CHECK(d.family == Family::CaseV);
            CHECK(d.k == c.length() - c.k - c.t);
            CHECK(d.t == c.t);
        }
        // the dual is again a valid inventory member, and duality is an involution
        CHECK(same_spec(dual_code(d), c));
      }
    }
  }
}

TEST_CASE("self-dual specs are fixed points of duality", "[codes]") {
  for (auto [s, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    auto f = make_field(m);
    for (const auto& c : enumerate_selfdual(s, f)) {
      CodeSpec cc = as_case(c);
      CHECK(same_spec(dual_code(cc), cc));
    }
  }
}

TEST_CASE("single-generator self-dual specs have zero defect", "[codes]") {
  auto f = make_field(1);
  std::set<std::string> sd_keys;
  for (const auto& c : enumerate_selfdual(3, f)) sd_keys.insert(canonical_key(c));

  for (const auto& c : enumerate_all_cyclic(3, f)) {
    if (c.family != Family::CaseI) continue;
    REQUIRE(c.b.has_value());
    bool zero_defect = selfdual_defect(*c.b).is_zero();
    CHECK(zero_defect == (sd_keys.count(canonical_key(c)) == 1));
  }
}

TEST_CASE("pair self-dual specs have zero defect in their short window", "[codes]") {
  for (unsigned m : {1u, 2u}) {
    auto f = make_field(m);
    for (const auto& c : enumerate_selfdual(3, f)) {
      if (c.family != Family::SDTypeC) continue;
      REQUIRE(c.b.has_value());
      CHECK(c.b->modulus_exp() == c.length() - 2 * c.k - 1);
      CHECK(selfdual_defect(*c.b).is_zero());
    }
  }
}

TEST_CASE("generator words match hand expansion", "[codes]") {
  auto f = make_field(1);
  // s = 2, single generator with b = y: the word is y*b + u = y^2 + u,
  // and y^2 = x^2 + 1 in x coordinates
  CodeSpec c1{f, 2, Family::CaseI, 0, 0, YPoly(f, {0, 1, 0})};
  auto g1 = generators(c1);
  REQUIRE(g1.size() == 1);
  // a-part: (x+1)^2 = x^2 + 1 -> (1,0,1,0); u-part: 1 -> (1,0,0,0)
  CHECK(g1[0] == RingVec(f, {{1, 1}, {0, 0}, {1, 0}, {0, 0}}));

  // middle power at s = 1: <x+1>
  CodeSpec c2{f, 1, Family::SDTrivial, 0, 0, std::nullopt};
  auto g2 = generators(c2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == RingVec(f, {{1, 0}, {1, 0}}));

  // zero code: k = N
  CodeSpec c3{f, 1, Family::CaseIII, 2, 0, std::nullopt};
  CHECK(generators(c3)[0] == RingVec(f, 2));

  // <u> at s = 1 is the single-generator family with b = 0
  CodeSpec c4{f, 1, Family::CaseI, 0, 0, YPoly(f, 1)};
  CHECK(generators(c4)[0] == RingVec(f, {{0, 1}, {0, 0}}));

  // two generators for the pair family at s = 2, k = 1, b = 1
  CodeSpec c5{f, 2, Family::SDTypeC, 1, 0, YPoly::one(f, 1)};
  auto g5 = generators(c5);
  REQUIRE(g5.size() == 2);
  // first: (x+1)^2 * 1 + u (x+1) -> a = (1,0,1,0), u-part = (1,1,0,0)
  CHECK(g5[0] == RingVec(f, {{1, 1}, {0, 1}, {1, 0}, {0, 0}}));
  // second: (x+1)^(k+t) = (x+1)^3 -> (1,1,1,1)
  CHECK(g5[1] == RingVec(f, {{1, 0}, {1, 0}, {1, 0}, {1, 0}}));
}

TEST_CASE("dual of a self-dual form requires its case form", "[codes]") {
  auto f = make_field(1);
  CodeSpec c{f, 2, Family::SDTrivial, 0, 0, std::nullopt};
  CHECK_THROWS_AS(dual_code(c), UnsupportedFamily);
  CHECK_NOTHROW(dual_code(as_case(c)));
}

TEST_CASE("streams are re-entrant and deterministic", "[codes]") {
  auto f = make_field(2);
  auto a = keys_of(enumerate_selfdual(3, f));
  auto b = keys_of(enumerate_selfdual(3, f));
  CHECK(a == b);
  auto c = keys_of(enumerate_all_cyclic(2, f));
  auto d = keys_of(enumerate_all_cyclic(2, f));
  CHECK(c == d);

  // family filters partition the stream
  auto triv = enumerate_selfdual(3, f, kSDTrivial);
  auto single = enumerate_selfdual(3, f, kSDSingle);
  auto pair = enumerate_selfdual(3, f, kSDPair);
  CHECK(triv.size() == 1);
  CHECK(triv.size() + single.size() + pair.size() == a.size());
}

TEST_CASE("window shapes", "[codes]") {
  // s = 3: N = 8
  BWindow w1 = b_window(Family::CaseI, 3, 0, 0);
  CHECK(w1.lo == 3);
  CHECK(w1.modulus == 7);
  CHECK(w1.width() == 4);
  BWindow w2 = b_window(Family::CaseII, 3, 7, 0);
  CHECK(w2.modulus == 0);  // k = N-1 leaves no room for b
  CHECK(w2.width() == 0);
  BWindow w3 = b_window(Family::CaseIV, 3, 0, 1);
  CHECK(w3.modulus == 0);
  BWindow w4 = b_window(Family::CaseV, 3, 2, 4);
  CHECK(w4.lo == 1);
  CHECK(w4.modulus == 3);
  CHECK(b_window(Family::CaseIII, 3, 2, 0).modulus == 0);
}
