// Acceptance gate: nine pinned criteria, one pass/fail line each, exact
// arithmetic throughout. Exits nonzero if any line fails.
#include <atomic>
#include <chrono>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "idealarr/derivations.hpp"
#include "idealarr/lattice.hpp"
#include "idealarr/localheight.hpp"
#include "idealarr/matengine.hpp"
#include "idealarr/partition.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

using namespace idealarr;

namespace {

int g_jobs = static_cast<int>(std::thread::hardware_concurrency());

template <class F>
void parallel_for(int n, F&& f) {
  const int nthreads = std::max(1, std::min(g_jobs, n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
  };
  if (nthreads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
}

// Thread-safe failure log; first few messages are echoed under the verdict.
struct Verdict {
  std::atomic<bool> ok{true};
  std::mutex mu;
  std::vector<std::string> messages;

  void fail(const std::string& msg) {
    ok = false;
    std::lock_guard<std::mutex> lock(mu);
    if (messages.size() < 8) messages.push_back(msg);
  }
};

struct SystemRun {
  RootSystem rs;
  std::vector<Ideal> ideals;
};

Ideal full_ideal(const RootSystem& rs) {
  return make_ideal(rs, IndexSet::full(rs.num_roots()));
}

const std::vector<std::string> kMainList = {"A1", "A2", "A3", "A4", "A5", "B2", "B3",
                                            "B4", "C3", "C4", "D4", "G2", "F4"};

std::string vec_str(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int report(int number, const std::string& label, Verdict& v, const std::string& detail) {
  std::cout << "criterion " << number << ": " << (v.ok ? "PASS" : "FAIL") << "  " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  std::lock_guard<std::mutex> lock(v.mu);
  for (const std::string& m : v.messages) std::cout << "    " << m << "\n";
  return v.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_jobs = std::max(1, std::atoi(argv[1]));
  if (g_jobs < 1) g_jobs = 4;
  const auto t0 = std::chrono::steady_clock::now();

  std::map<std::string, SystemRun> runs;
  for (const std::string& name : kMainList) {
    RootSystem rs = build_root_system(parse_type(name)[0]);
    std::vector<Ideal> ideals = enumerate_ideals(rs);
    runs.emplace(name, SystemRun{std::move(rs), std::move(ideals)});
  }
  int total_ideals = 0;
  for (const auto& [name, run] : runs) total_ideals += static_cast<int>(run.ideals.size());

  int failures = 0;

  // 1: induction certificate + dual partition + charpoly factorization,
  // every ideal of every listed system. 5 and 9 ride along on the same pass.
  Verdict c1, c5, c9;
  for (const auto& [name, run] : runs) {
    const RootSystem& rs = run.rs;
    parallel_for(static_cast<int>(run.ideals.size()), [&](int i) {
      const Ideal& I = run.ideals[i];
      const std::string tag = name + " ideal " + std::to_string(i);
      MatCertificate cert = run_induction(rs, I);
      std::vector<int> dp = ideal_exponents(rs, I);
      std::vector<long long> chi = characteristic_polynomial(rs, I);
      if (!cert.ok)
        c1.fail(tag + ": induction failed at layer " + std::to_string(cert.failed_layer));
      else if (cert.exponents != dp)
        c1.fail(tag + ": final exponents " + vec_str(cert.exponents) + " != dual partition " +
                vec_str(dp));
      if (chi != poly_from_roots(dp)) c1.fail(tag + ": charpoly does not factor over " + vec_str(dp));

      for (const MatLayer& L : cert.layers)
        if (!L.q_le_p)
          c5.fail(tag + ": q=" + std::to_string(L.q) + " > p=" + std::to_string(L.p) +
                  " at layer " + std::to_string(L.layer));
      std::vector<int> dist = height_distribution(rs, I);
      for (size_t j = 0; j + 1 < dist.size(); ++j)
        if (dist[j] < dist[j + 1]) c5.fail(tag + ": height distribution not weakly decreasing");

      if (poincare_polynomial(dp) != poincare_from_charpoly(chi))
        c9.fail(tag + ": (1+d_i t) product differs from (-t)^l chi(-1/t)");
    });
  }
  failures += report(1, "induction + dual partition + charpoly factorization", c1,
                     std::to_string(runs.size()) + " systems, " + std::to_string(total_ideals) +
                         " ideals");

  // 2: classical Weyl exponents, each confirmed twice: dual partition of the
  // full poset and the factorization of the full charpoly. E6 included.
  Verdict c2;
  std::string e6_note;
  {
    const std::vector<std::pair<std::string, std::vector<int>>> classical = {
        {"A1", {1}},
        {"A2", {1, 2}},
        {"A3", {1, 2, 3}},
        {"A4", {1, 2, 3, 4}},
        {"A5", {1, 2, 3, 4, 5}},
        {"B2", {1, 3}},
        {"B3", {1, 3, 5}},
        {"B4", {1, 3, 5, 7}},
        {"C3", {1, 3, 5}},
        {"C4", {1, 3, 5, 7}},
        {"D4", {1, 3, 3, 5}},
        {"G2", {1, 5}},
        {"F4", {1, 5, 7, 11}},
        {"E6", {1, 4, 5, 7, 8, 11}}};
    for (const auto& [name, expected] : classical) {
      RootSystem local;
      const RootSystem* rs = nullptr;
      auto it = runs.find(name);
      if (it != runs.end()) {
        rs = &it->second.rs;
      } else {
        local = build_root_system(parse_type(name)[0]);
        rs = &local;
      }
      Ideal full = full_ideal(*rs);
      if (ideal_exponents(*rs, full) != expected)
        c2.fail(name + ": dual partition is not " + vec_str(expected));
      const auto lt0 = std::chrono::steady_clock::now();
      if (characteristic_polynomial(*rs, full) != poly_from_roots(expected))
        c2.fail(name + ": charpoly does not factor over " + vec_str(expected));
      if (name == "E6") {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - lt0)
                            .count();
        e6_note = "E6 lattice in " + std::to_string(ms) + " ms";
      }
    }
  }
  failures += report(2, "classical Weyl exponents, both routes", c2, e6_note);

  // 3: local-global height formula and the decomposition pair count for
  // every positive root, listed systems plus E6.
  Verdict c3;
  {
    std::vector<std::string> names = kMainList;
    names.push_back("E6");
    for (const std::string& name : names) {
      RootSystem local;
      const RootSystem* rsp = nullptr;
      auto it = runs.find(name);
      if (it != runs.end())
        rsp = &it->second.rs;
      else {
        local = build_root_system(parse_type(name)[0]);
        rsp = &local;
      }
      const RootSystem& rs = *rsp;
      parallel_for(rs.num_roots(), [&](int a) {
        LocalGlobalReport rep = verify_local_global(rs, a);
        if (!rep.pass)
          c3.fail(name + " root " + std::to_string(a) + ": lhs " + std::to_string(rep.lhs) +
                  " != rhs " + std::to_string(rep.rhs));
        if (decomposition_pair_count(rs, a) != rep.lhs)
          c3.fail(name + " root " + std::to_string(a) + ": pair count != height - 1");
      });
    }
  }
  failures += report(3, "local-global heights + pair counts", c3, "13 systems + E6, every root");

  // 4: removing the hyperplanes met by the highest-root restriction leaves
  // exactly h - 1 of them.
  Verdict c4;
  for (const auto& [name, run] : runs) {
    const RootSystem& rs = run.rs;
    Ideal full = full_ideal(rs);
    const int restricted = static_cast<int>(restriction(rs, full, rs.highest_root_index).size());
    if (rs.num_roots() - restricted != rs.coxeter_number - 1)
      c4.fail(name + ": |A| - |A^highest| = " + std::to_string(rs.num_roots() - restricted) +
              ", h - 1 = " + std::to_string(rs.coxeter_number - 1));
  }
  failures += report(4, "|A| - |A^highest| = h - 1", c4, "");

  failures += report(5, "q <= p in every layer; distributions weakly decreasing", c5, "");

  // 6: lattice charpoly against the finite-field point-count oracle; rank <= 3
  // exhaustively, rank 4 exhaustively as well since every listed rank-4 system
  // has fewer than 200 ideals.
  Verdict c6;
  int oracle_checked = 0;
  for (const auto& [name, run] : runs) {
    const RootSystem& rs = run.rs;
    if (rs.rank() > 4) continue;
    PointCountOracle oracle(rs, default_oracle_primes(rs, rs.rank() + 1), g_jobs);
    oracle_checked += static_cast<int>(run.ideals.size());
    parallel_for(static_cast<int>(run.ideals.size()), [&](int i) {
      const Ideal& I = run.ideals[i];
      if (oracle.charpoly(I) != characteristic_polynomial(rs, I))
        c6.fail(name + " ideal " + std::to_string(i) + ": oracle disagrees with lattice");
    });
  }
  failures += report(6, "point-count oracle agrees with the lattice charpoly", c6,
                     std::to_string(oracle_checked) + " ideals");

  // 7: constructive symbolic bases with the Saito determinant check; every
  // member logarithmic, degrees equal to the dual partition.
  Verdict c7;
  int built = 0;
  {
    const std::vector<std::string> symbolic = {"A2", "A3", "B2", "B3", "C3", "G2", "A4"};
    for (const std::string& name : symbolic) {
      const SystemRun& run = runs.at(name);
      const RootSystem& rs = run.rs;
      built += static_cast<int>(run.ideals.size());
      parallel_for(static_cast<int>(run.ideals.size()), [&](int i) {
        const Ideal& I = run.ideals[i];
        const std::string tag = name + " ideal " + std::to_string(i);
        try {
          BasisBuild build = build_basis_for_ideal(rs, I, smallest_index_policy(), 4);
          if (!saito_check(rs, build.basis, I)) c7.fail(tag + ": Saito check failed");
          std::vector<int> degrees;
          for (const Derivation& d : build.basis) degrees.push_back(d.degree);
          if (degrees != ideal_exponents(rs, I))
            c7.fail(tag + ": degrees " + vec_str(degrees) + " != dual partition");
          for (size_t m = 0; m < build.basis.size(); ++m)
            if (!is_logarithmic(rs, build.basis[m], I))
              c7.fail(tag + ": member " + std::to_string(m) + " not logarithmic");
        } catch (const std::exception& e) {
          c7.fail(tag + ": " + e.what());
        }
      });
    }
  }
  failures += report(7, "symbolic free bases with Saito determinant", c7,
                     std::to_string(built) + " builds");

  // 8: the chosen hyperplane policy does not matter: 50 random
  // (system, ideal, layer) triples built under both policies.
  Verdict c8;
  {
    const std::vector<std::string> pool = {"A2", "A3", "B2", "B3", "C3", "G2", "A4"};
    std::mt19937 rng(20260814u);
    std::vector<std::tuple<const RootSystem*, Ideal, std::string>> cases;
    for (int trial = 0; trial < 50; ++trial) {
      const std::string& name = pool[rng() % pool.size()];
      const SystemRun& run = runs.at(name);
      const Ideal& base = run.ideals[rng() % run.ideals.size()];
      const int top = ideal_height(run.rs, base);
      const int layer = top == 0 ? 0 : static_cast<int>(rng() % (top + 1));
      Ideal I = height_layer(run.rs, base, layer);
      cases.emplace_back(&run.rs, I, name + " trial " + std::to_string(trial));
    }
    parallel_for(static_cast<int>(cases.size()), [&](int i) {
      const auto& [rsp, I, tag] = cases[i];
      try {
        BasisBuild a = build_basis_for_ideal(*rsp, I, smallest_index_policy(), 4);
        BasisBuild b = build_basis_for_ideal(*rsp, I, largest_index_policy(), 4);
        if (!saito_check(*rsp, a.basis, I)) c8.fail(tag + ": smallest policy fails Saito");
        if (!saito_check(*rsp, b.basis, I)) c8.fail(tag + ": largest policy fails Saito");
      } catch (const std::exception& e) {
        c8.fail(tag + ": " + e.what());
      }
    });
  }
  failures += report(8, "nu-policy independence on 50 random triples", c8, "");

  failures += report(9, "prod(1 + d_i t) = (-t)^l chi(-1/t)", c9, "");

  const auto secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count() /
      1000.0;
  std::cout << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << secs << " s)\n";
  return failures ? 1 : 0;
}
