// Command line front end: enumerate and count the self-dual cyclic codes of
// length 2^s over F_{2^m} + u F_{2^m}, verify them against the brute-force
// oracle, and inspect the underlying matrices, solution spaces, and Gray
// images.
//
// Exit codes: 0 success, 2 usage or invalid parameters, 3 a size cap was
// exceeded, 4 verification mismatch.

#include <atomic>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ucyclic/codes.hpp"
#include "ucyclic/gray.hpp"
#include "ucyclic/io.hpp"
#include "ucyclic/oracle.hpp"
#include "ucyclic/solver.hpp"
#include "ucyclic/ypoly.hpp"

namespace {

struct FieldArgs {
  unsigned m = 1;
  std::string modulus;  // hex, optional

  ucyclic::FieldPtr make() const {
    if (modulus.empty()) return ucyclic::make_field(m);
    std::size_t pos = 0;
    unsigned long v = std::stoul(
        modulus.rfind("0x", 0) == 0 ? modulus.substr(2) : modulus, &pos, 16);
    return ucyclic::make_field(m, static_cast<std::uint32_t>(v));
  }
};

int run_enumerate(unsigned s, const FieldArgs& fa, const std::string& format,
                  std::uint64_t limit, bool all_cyclic) {
  if (format != "json") {
    std::cerr << "enumerate emits json records; csv is reserved for "
                 "distribution output (see gray)\n";
    return 2;
  }
  ucyclic::FieldPtr field = fa.make();
  ucyclic::BigInt total = all_cyclic
                              ? ucyclic::count_all_cyclic(s, field->degree())
                              : ucyclic::count_selfdual(s, field->degree());
  std::uint64_t emitted = 0;
  auto emit = [&](const ucyclic::CodeSpec& c) {
    std::cout << ucyclic::code_record(c).dump() << "\n";
    ++emitted;
    return limit == 0 || emitted < limit;
  };
  if (all_cyclic) {
    ucyclic::CyclicStream st(s, field);
    while (auto c = st.next())
      if (!emit(*c)) break;
  } else {
    ucyclic::SelfDualStream st(s, field);
    while (auto c = st.next())
      if (!emit(*c)) break;
  }
  nlohmann::json summary;
  summary["total"] = total.str();
  std::cout << summary.dump() << "\n";
  return 0;
}

int run_count(unsigned s, const FieldArgs& fa, bool all_cyclic) {
  unsigned m = fa.make()->degree();  // validates the field spec up front
  ucyclic::BigInt n = all_cyclic ? ucyclic::count_all_cyclic(s, m)
                                 : ucyclic::count_selfdual(s, m);
  std::cout << n.str() << "\n";
  return 0;
}

// run fn(i) for i < n on the requested number of workers
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(jobs, n);
  pool.reserve(count);
  for (unsigned w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

int run_verify(unsigned s, const FieldArgs& fa, bool full, unsigned jobs) {
  ucyclic::FieldPtr field = fa.make();
  std::vector<ucyclic::CodeSpec> specs = ucyclic::enumerate_selfdual(s, field);

  std::vector<char> ok(specs.size(), 0);
  parallel_for(specs.size(), jobs,
               [&](std::size_t i) { ok[i] = ucyclic::is_self_dual(specs[i]); });

  bool mismatch = false;
  auto report_group = [&](const std::string& label, std::size_t pass, std::size_t n) {
    std::cout << label << ": " << pass << "/" << n << " self-dual\n";
    if (pass != n) mismatch = true;
  };
  std::size_t i = 0;
  auto group = [&](ucyclic::Family f, unsigned k) {
    std::size_t pass = 0, n = 0;
    while (i < specs.size() && specs[i].family == f && specs[i].k == k) {
      pass += ok[i] != 0;
      ++n; ++i;
    }
    return std::make_pair(pass, n);
  };
  auto [tp, tn] = group(ucyclic::Family::SDTrivial, 0);
  report_group("middle power", tp, tn);
  auto [bp, bn] = group(ucyclic::Family::SDTypeB, 0);
  report_group("single generator", bp, bn);
  for (unsigned k = 1; i < specs.size(); ++k) {
    auto [pp, pn] = group(ucyclic::Family::SDTypeC, k);
    if (pn == 0) break;
    report_group("generator pair k=" + std::to_string(k), pp, pn);
  }

  ucyclic::BigInt formula = ucyclic::count_selfdual(s, field->degree());
  if (formula != specs.size()) {
    std::cout << "enumerated " << specs.size() << " but the count formula says "
              << formula.str() << "\n";
    mismatch = true;
  }

  if (full) {
    std::vector<ucyclic::CodeSpec> all = ucyclic::enumerate_all_cyclic(s, field);
    std::vector<char> sd(all.size(), 0);
    parallel_for(all.size(), jobs,
                 [&](std::size_t i2) { sd[i2] = ucyclic::is_self_dual(all[i2]); });
    std::uint64_t found = 0;
    for (char c : sd) found += c != 0;
    std::cout << "cyclic inventory: " << all.size() << " codes, " << found
              << " self-dual\n";
    if (ucyclic::BigInt(all.size()) != ucyclic::count_all_cyclic(s, field->degree()) ||
        ucyclic::BigInt(found) != formula)
      mismatch = true;
  }

  std::cout << (mismatch ? "FAIL" : "OK") << "\n";
  return mismatch ? 4 : 0;
}

int run_tables(std::optional<unsigned> m_l, std::optional<unsigned> g_lambda,
               std::optional<unsigned> xinv_l) {
  if (m_l) {
    ucyclic::BitMatrix m = ucyclic::build_M(*m_l);
    for (unsigned i = 0; i < m.rows(); ++i) {
      std::string row;
      for (unsigned j = 0; j < m.cols(); ++j) row += m.get(i, j) ? '1' : '0';
      std::cout << row << "\n";
    }
    return 0;
  }
  if (g_lambda) {
    ucyclic::BitMatrix g = ucyclic::build_G(*g_lambda);
    for (unsigned i = 0; i < g.rows(); ++i) {
      std::string row;
      for (unsigned j = 0; j < g.cols(); ++j) row += g.get(i, j) ? '1' : '0';
      std::cout << row << "\n";
    }
    return 0;
  }
  if (xinv_l) {
    std::string row;
    for (unsigned i = 0; i < *xinv_l; ++i) row += i ? " 1" : "1";
    std::cout << row << "\n";  // x^(-1) has every (x+1)-adic coefficient 1
    return 0;
  }
  std::cerr << "tables needs one of --M, --G, --xinv\n";
  return 2;
}

int run_space(unsigned l, std::optional<unsigned> delta) {
  ucyclic::SolutionSpace sp = ucyclic::solve_homogeneous(l);
  if (delta) sp = ucyclic::truncate(sp, *delta);
  std::cout << ucyclic::space_to_string(sp) << "\n";
  return 0;
}

int run_gray(unsigned s, const FieldArgs& fa, std::uint64_t index,
             const std::string& format) {
  if (format != "csv") {
    std::cerr << "gray emits csv distributions\n";
    return 2;
  }
  ucyclic::FieldPtr field = fa.make();
  ucyclic::SelfDualStream st(s, field);
  std::optional<ucyclic::CodeSpec> spec;
  for (std::uint64_t i = 0; i <= index; ++i) {
    spec = st.next();
    if (!spec) break;
  }
  if (!spec) {
    std::cerr << "--index " << index << " is out of range\n";
    return 2;
  }

  auto print_field_vec = [&](const std::vector<ucyclic::Fq>& v) {
    std::string line;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) line += " ";
      line += ucyclic::to_hex(v[i]);
    }
    std::cout << line << "\n";
  };

  std::cout << "# gray image generators\n";
  for (const ucyclic::RingVec& g : ucyclic::generators(*spec)) {
    print_field_vec(ucyclic::gray_word(g));
    ucyclic::RingVec ug = ucyclic::scalar_mul({0, 1}, g);
    print_field_vec(ucyclic::gray_word(ug));
  }

  ucyclic::CodewordSet cs = ucyclic::expand(*spec);
  ucyclic::FieldWordSet image = ucyclic::gray_image(cs);
  std::cout << "# lee weight distribution\n"
            << ucyclic::distribution_csv(ucyclic::lee_distribution(cs))
            << "# hamming weight distribution\n"
            << ucyclic::distribution_csv(ucyclic::hamming_distribution(image));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-dual cyclic codes of length 2^s over F_{2^m} + u F_{2^m}"};
  app.require_subcommand(1);

  unsigned s = 1;
  FieldArgs fa;
  std::string format = "json";
  std::uint64_t limit = 0;
  bool all_cyclic = false;
  bool full = false;
  unsigned jobs = 1;
  std::uint64_t index = 0;
  std::optional<unsigned> m_l, g_lambda, xinv_l, delta;
  unsigned space_l = 1;

  auto add_sm = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "length exponent, N = 2^s")
        ->required()->check(CLI::Range(1u, 20u));
    cmd->add_option("--m", fa.m, "field degree of F_{2^m}")
        ->required()->check(CLI::Range(1u, 16u));
    cmd->add_option("--modulus", fa.modulus, "field modulus bits in hex");
  };

  CLI::App* c_enum = app.add_subcommand("enumerate", "stream code records as json lines");
  add_sm(c_enum);
  c_enum->add_option("--format", format, "json");
  c_enum->add_option("--limit", limit, "emit at most this many records");
  c_enum->add_flag("--all-cyclic", all_cyclic, "every cyclic code, not just self-dual");

  CLI::App* c_count = app.add_subcommand("count", "print the exact code count");
  add_sm(c_count);
  c_count->add_flag("--all-cyclic", all_cyclic, "count every cyclic code");

  CLI::App* c_verify = app.add_subcommand("verify", "check enumerated codes against the oracle");
  add_sm(c_verify);
  c_verify->add_flag("--full", full, "also scan the full cyclic inventory");
  c_verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  CLI::App* c_tables = app.add_subcommand("tables", "print the binary matrices");
  c_tables->add_option("--M", m_l, "rows of M_l")->check(CLI::Range(1u, 4096u));
  c_tables->add_option("--G", g_lambda, "rows of G_{2^lambda}")->check(CLI::Range(1u, 12u));
  c_tables->add_option("--xinv", xinv_l, "coefficients of x^(-1) mod (x+1)^l")
      ->check(CLI::Range(1u, 1u << 20));

  CLI::App* c_space = app.add_subcommand("space", "print a solution space parametrization");
  c_space->add_option("--l", space_l, "system size")->required()->check(CLI::Range(1u, 4096u));
  c_space->add_option("--delta", delta, "zero out coordinates below delta");

  CLI::App* c_gray = app.add_subcommand("gray", "image generators and weight distributions");
  add_sm(c_gray);
  c_gray->add_option("--index", index, "position in the self-dual enumeration")->required();
  c_gray->add_option("--format", format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return run_enumerate(s, fa, format, limit, all_cyclic);
    if (app.got_subcommand(c_count)) return run_count(s, fa, all_cyclic);
    if (app.got_subcommand(c_verify)) return run_verify(s, fa, full, jobs);
    if (app.got_subcommand(c_tables)) return run_tables(m_l, g_lambda, xinv_l);
    if (app.got_subcommand(c_space)) return run_space(space_l, delta);
    if (app.got_subcommand(c_gray)) {
      if (!c_gray->count("--format")) format = "csv";
      return run_gray(s, fa, index, format);
    }
  } catch (const ucyclic::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ucyclic::CardinalityMismatch& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return 4;
  } catch (const ucyclic::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
