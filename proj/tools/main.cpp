#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "idealarr/derivations.hpp"
#include "idealarr/json_io.hpp"
#include "idealarr/lattice.hpp"
#include "idealarr/localheight.hpp"
#include "idealarr/matengine.hpp"
#include "idealarr/partition.hpp"
#include "idealarr/rootposet.hpp"
#include "idealarr/rootsys.hpp"

namespace {

using namespace idealarr;
using nlohmann::json;

struct IdealOpts {
  std::string generators;
  int truncate = -1;
  bool all = false;
};

void add_ideal_opts(CLI::App* cmd, IdealOpts& o, bool allow_all) {
  cmd->add_option("--generators", o.generators,
                  "JSON list of root coefficient vectors, closed downward automatically");
  cmd->add_option("--truncate", o.truncate, "ideal of the first t roots in canonical order")
      ->check(CLI::NonNegativeNumber);
  if (allow_all) cmd->add_flag("--all-ideals", o.all, "run over every ideal of the poset");
}

RootSystem single_system(const std::string& type) {
  std::vector<RootSystemType> comps = parse_type(type);
  if (comps.size() > 1)
    throw std::invalid_argument("product types are only supported by the exponents command");
  return build_root_system(comps[0]);
}

Ideal resolve_single(const RootSystem& rs, const IdealOpts& o) {
  const bool has_gens = !o.generators.empty();
  const bool has_trunc = o.truncate >= 0;
  if (o.all || has_gens == has_trunc)
    throw std::invalid_argument("need exactly one of --generators or --truncate here");
  if (has_gens) return ideal_closure(rs, parse_generator_list(rs, o.generators));
  return truncation_ideal(rs, o.truncate);
}

// Campaign ideals: an explicitly selected one, otherwise the full enumeration.
std::vector<Ideal> resolve_many(const RootSystem& rs, const IdealOpts& o) {
  if (!o.generators.empty() || o.truncate >= 0) return {resolve_single(rs, o)};
  return enumerate_ideals(rs);
}

int ideal_index(const RootSystem& rs, const Ideal& I) {
  std::vector<Ideal> all = enumerate_ideals(rs);
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == I) return static_cast<int>(i);
  return -1;
}

template <typename T>
std::string fmt_vec(const std::vector<T>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Applies fn to every ideal; results land at their own index, so the output
// order never depends on the thread schedule.
std::vector<json> over_ideals(const std::vector<Ideal>& ideals, int jobs,
                              const std::function<json(int, const Ideal&)>& fn) {
  const int n = static_cast<int>(ideals.size());
  std::vector<json> out(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        out[i] = fn(i, ideals[i]);
      } catch (const std::exception& e) {
        out[i] = json{{"ideal_id", i}, {"ok", false}, {"error", e.what()}};
      }
    }
  };
  const int nthreads = std::max(1, std::min(jobs, n));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return out;
}

json audit_row(const RootSystem& rs, int id, const Ideal& I) {
  json one;
  one["ideal_id"] = id;
  one["size"] = I.size();
  one["exponents"] = ideal_exponents(rs, I);
  one["charpoly"] = characteristic_polynomial(rs, I);
  return one;
}

// type,ideal_id,size,e1..el,c0..cl; rows must carry exponents and charpoly.
void print_csv(const RootSystem& rs, const std::vector<json>& rows) {
  std::cout << "type,ideal_id,size";
  for (int i = 1; i <= rs.rank(); ++i) std::cout << ",e" << i;
  for (int i = 0; i <= rs.rank(); ++i) std::cout << ",c" << i;
  std::cout << "\n";
  for (const json& r : rows) {
    std::cout << rs.rtype.str() << "," << r.at("ideal_id").get<int>() << ","
              << r.at("size").get<int>();
    for (const auto& e : r.at("exponents")) std::cout << "," << e.get<int>();
    for (const auto& c : r.at("charpoly")) std::cout << "," << c.get<long long>();
    std::cout << "\n";
  }
}

NuPolicy pick_policy(const std::string& name) {
  return name == "largest" ? largest_index_policy() : smallest_index_policy();
}

int count_failures(const std::vector<json>& rows) {
  int failures = 0;
  for (const json& r : rows)
    if (!r.value("ok", false)) ++failures;
  return failures;
}

void print_suite(const std::string& suite, const RootSystem& rs, const std::string& unit,
                 const std::vector<json>& rows, int failures, const std::string& format) {
  if (format == "json") {
    json out;
    out["type"] = rs.rtype.str();
    out["suite"] = suite;
    out["count"] = rows.size();
    out["failures"] = failures;
    out["results"] = rows;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "verify " << suite << " " << rs.rtype.str() << ": " << rows.size() << " " << unit
            << " checked, " << failures << " failures\n";
  for (const json& r : rows)
    if (!r.value("ok", false)) std::cout << "  FAIL " << r.dump() << "\n";
}

int run_roots(const std::string& type, const std::string& format) {
  RootSystem rs = single_system(type);
  if (format == "json") {
    std::cout << root_system_json(rs).dump(2) << "\n";
    return 0;
  }
  if (format != "summary") throw std::invalid_argument("roots supports --format json|summary");
  std::cout << rs.rtype.str() << ": rank " << rs.rank() << ", " << rs.num_roots()
            << " positive roots, Coxeter number " << rs.coxeter_number << "\n";
  if (!rs.alias_note.empty()) std::cout << rs.alias_note << "\n";
  for (int i = 0; i < rs.num_roots(); ++i)
    std::cout << "  " << i << ": " << fmt_vec(rs.root(i).coeffs) << " height "
              << rs.root(i).height << "\n";
  return 0;
}

int run_ideals(const std::string& type, const std::string& format) {
  RootSystem rs = single_system(type);
  std::vector<Ideal> ideals = enumerate_ideals(rs);
  if (format == "json") {
    json out;
    out["type"] = rs.rtype.str();
    out["count"] = ideals.size();
    json arr = json::array();
    for (size_t i = 0; i < ideals.size(); ++i) {
      json one = ideal_json(ideals[i]);
      one["ideal_id"] = i;
      one["size"] = ideals[i].size();
      arr.push_back(one);
    }
    out["ideals"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::vector<json> rows;
    for (size_t i = 0; i < ideals.size(); ++i)
      rows.push_back(audit_row(rs, static_cast<int>(i), ideals[i]));
    print_csv(rs, rows);
  } else {
    std::cout << rs.rtype.str() << ": " << ideals.size() << " ideals of " << rs.num_roots()
              << " positive roots\n";
    for (size_t i = 0; i < ideals.size(); ++i)
      std::cout << "  " << i << ": size " << ideals[i].size() << ", generators "
                << fmt_vec(ideals[i].generators.indices()) << "\n";
  }
  return 0;
}

int run_exponents(const std::string& type, const IdealOpts& opts, bool check_lattice,
                  const std::string& format) {
  std::vector<RootSystemType> comps = parse_type(type);
  if (comps.size() > 1) {
    if (!opts.generators.empty() || opts.all)
      throw std::invalid_argument("product types support --truncate only");
    if (opts.truncate < 0) throw std::invalid_argument("product types require --truncate");
    if (check_lattice)
      throw std::invalid_argument("--check-lattice needs an irreducible type");
    if (format == "csv") throw std::invalid_argument("csv output needs an irreducible type");
    int remaining = opts.truncate;
    int total = 0;
    std::vector<std::vector<int>> parts;
    json jcomps = json::array();
    for (const RootSystemType& ct : comps) {
      RootSystem crs = build_root_system(ct);
      total += crs.num_roots();
      const int take = std::min(remaining, crs.num_roots());
      remaining -= take;
      Ideal ci = truncation_ideal(crs, take);
      std::vector<int> exps = ideal_exponents(crs, ci);
      parts.push_back(exps);
      jcomps.push_back(json{{"type", ct.str()}, {"truncate", take}, {"exponents", exps}});
    }
    if (remaining > 0)
      throw std::invalid_argument("truncate " + std::to_string(opts.truncate) + " exceeds the " +
                                  std::to_string(total) + " positive roots of " + type);
    std::vector<int> merged = product_exponents(parts);
    if (format == "json") {
      json out{{"type", type}, {"components", jcomps}, {"exponents", merged}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << type << " truncate " << opts.truncate << ": exponents " << fmt_vec(merged)
                << "\n";
    }
    return 0;
  }

  RootSystem rs = build_root_system(comps[0]);
  Ideal I = resolve_single(rs, opts);
  std::vector<int> exps = ideal_exponents(rs, I);
  json out = exponents_json(rs, I);
  int rc = 0;
  bool match = true;
  if (check_lattice) {
    std::vector<long long> chi = characteristic_polynomial(rs, I);
    match = chi == poly_from_roots(exps);
    out["charpoly"] = chi;
    out["charpoly_matches"] = match;
    if (!match) rc = 1;
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(rs, {audit_row(rs, ideal_index(rs, I), I)});
  } else {
    std::cout << rs.rtype.str() << " ideal of size " << I.size() << ": height distribution "
              << fmt_vec(height_distribution(rs, I)) << ", exponents " << fmt_vec(exps);
    if (check_lattice) std::cout << (match ? ", charpoly matches" : ", charpoly MISMATCH");
    std::cout << "\n";
  }
  return rc;
}

int run_charpoly(const std::string& type, const IdealOpts& opts, int jobs,
                 const std::string& format) {
  RootSystem rs = single_system(type);
  if (opts.all) {
    std::vector<Ideal> ideals = enumerate_ideals(rs);
    std::vector<json> rows = over_ideals(ideals, jobs, [&](int i, const Ideal& I) {
      json one = audit_row(rs, i, I);
      one["ideal"] = ideal_json(I);
      return one;
    });
    if (format == "json") {
      json out{{"type", rs.rtype.str()}, {"count", rows.size()}, {"results", rows}};
      std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
      print_csv(rs, rows);
    } else {
      for (const json& r : rows)
        std::cout << rs.rtype.str() << " ideal " << r.at("ideal_id").get<int>() << " size "
                  << r.at("size").get<int>() << ": chi "
                  << fmt_vec(r.at("charpoly").get<std::vector<long long>>()) << "\n";
    }
    return 0;
  }
  Ideal I = resolve_single(rs, opts);
  if (format == "json") {
    std::cout << lattice_json(rs, I).dump(2) << "\n";
  } else if (format == "csv") {
    print_csv(rs, {audit_row(rs, ideal_index(rs, I), I)});
  } else {
    std::vector<Flat> flats = build_lattice(rs, I);
    std::cout << rs.rtype.str() << " ideal of size " << I.size() << ": " << flats.size()
              << " flats, chi " << fmt_vec(characteristic_polynomial(rs, flats)) << "\n";
  }
  return 0;
}

int run_basis(const std::string& type, const IdealOpts& opts, const std::string& nu,
              int rank_limit, const std::string& emit_path, const std::string& format) {
  RootSystem rs = single_system(type);
  Ideal I = resolve_single(rs, opts);
  BasisBuild build = build_basis_for_ideal(rs, I, pick_policy(nu), rank_limit);
  const bool ok = saito_check(rs, build.basis, I);
  json out = basis_build_json(build);
  out["type"] = rs.rtype.str();
  out["ideal"] = ideal_json(I);
  out["exponents"] = ideal_exponents(rs, I);
  out["saito"] = ok;
  if (!emit_path.empty()) {
    std::ofstream f(emit_path);
    if (!f) throw std::invalid_argument("cannot write " + emit_path);
    f << out.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else if (format == "summary") {
    std::cout << rs.rtype.str() << " ideal of size " << I.size() << ": basis degrees "
              << fmt_vec(out.at("degrees").get<std::vector<int>>()) << ", Saito "
              << (ok ? "pass" : "FAIL") << "\n";
  } else {
    throw std::invalid_argument("basis supports --format json|summary");
  }
  return ok ? 0 : 1;
}

int run_verify_main(const std::string& type, const IdealOpts& opts, int jobs,
                    const std::string& format) {
  RootSystem rs = single_system(type);
  std::vector<Ideal> ideals = resolve_many(rs, opts);
  const bool with_certificate = format == "json";
  std::vector<json> rows = over_ideals(ideals, jobs, [&](int i, const Ideal& I) {
    MatCertificate cert = run_induction(rs, I);
    std::vector<int> dp = ideal_exponents(rs, I);
    const bool exps_ok = cert.exponents == dp;
    const bool chi_ok = characteristic_polynomial(rs, I) == poly_from_roots(dp);
    json one{{"ideal_id", i},
             {"size", I.size()},
             {"ok", cert.ok && exps_ok && chi_ok},
             {"induction_ok", cert.ok},
             {"exponents_match", exps_ok},
             {"charpoly_match", chi_ok},
             {"exponents", dp}};
    if (with_certificate) one["certificate"] = certificate_json(cert);
    return one;
  });
  const int failures = count_failures(rows);
  print_suite("main", rs, "ideals", rows, failures, format);
  return failures ? 1 : 0;
}

int run_verify_charpoly(const std::string& type, const IdealOpts& opts, int jobs,
                        bool point_count, const std::string& format) {
  RootSystem rs = single_system(type);
  std::vector<Ideal> ideals = resolve_many(rs, opts);
  std::optional<PointCountOracle> oracle;
  if (point_count) oracle.emplace(rs, default_oracle_primes(rs, rs.rank() + 1), jobs);
  std::vector<json> rows = over_ideals(ideals, jobs, [&](int i, const Ideal& I) {
    std::vector<int> dp = ideal_exponents(rs, I);
    std::vector<long long> chi = characteristic_polynomial(rs, I);
    bool ok = chi == poly_from_roots(dp);
    json one{{"ideal_id", i}, {"size", I.size()}, {"exponents", dp}, {"charpoly", chi}};
    if (oracle) {
      const bool oracle_ok = oracle->charpoly(I) == chi;
      one["point_count_match"] = oracle_ok;
      ok = ok && oracle_ok;
    }
    one["ok"] = ok;
    return one;
  });
  const int failures = count_failures(rows);
  print_suite("charpoly", rs, "ideals", rows, failures, format);
  return failures ? 1 : 0;
}

int run_verify_local_global(const std::string& type, const std::string& format) {
  RootSystem rs = single_system(type);
  std::vector<json> rows;
  int failures = 0;
  for (int a = 0; a < rs.num_roots(); ++a) {
    LocalGlobalReport rep = verify_local_global(rs, a);
    const int pairs = decomposition_pair_count(rs, a);
    const bool ok = rep.pass && pairs == rep.lhs;
    json one = local_global_json(rs, rep);
    one["pairs"] = pairs;
    one["ok"] = ok;
    rows.push_back(one);
    if (!ok) ++failures;
    if (format == "summary")
      std::cout << "  root " << fmt_vec(rs.root(a).coeffs) << " height "
                << rs.root(a).height << ": deficit " << rep.lhs << ", local sum " << rep.rhs
                << ", pairs " << pairs << (ok ? "" : "  MISMATCH") << "\n";
  }
  print_suite("local-global", rs, "roots", rows, failures, format);
  return failures ? 1 : 0;
}

int run_verify_saito(const std::string& type, const IdealOpts& opts, const std::string& nu,
                     int rank_limit, int jobs, const std::string& format) {
  RootSystem rs = single_system(type);
  if (rs.rank() > rank_limit)
    throw std::invalid_argument("rank " + std::to_string(rs.rank()) +
                                " exceeds the symbolic limit " + std::to_string(rank_limit) +
                                "; raise --rank-limit or IDEALARR_RANK_LIMIT");
  std::vector<Ideal> ideals = resolve_many(rs, opts);
  NuPolicy policy = pick_policy(nu);
  std::vector<json> rows = over_ideals(ideals, jobs, [&](int i, const Ideal& I) {
    BasisBuild build = build_basis_for_ideal(rs, I, policy, rank_limit);
    std::vector<int> degrees;
    for (const Derivation& d : build.basis) degrees.push_back(d.degree);
    const bool saito = saito_check(rs, build.basis, I);
    const bool deg_ok = degrees == ideal_exponents(rs, I);
    return json{{"ideal_id", i},
                {"size", I.size()},
                {"ok", saito && deg_ok},
                {"saito", saito},
                {"degrees_match", deg_ok},
                {"degrees", degrees}};
  });
  const int failures = count_failures(rows);
  print_suite("saito", rs, "ideals", rows, failures, format);
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ideal subarrangements of Weyl arrangements: exponents, lattices, free bases"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "summary"};
  int rc = 0;

  auto add_common = [&](CLI::App* cmd, std::string& type, std::string& format) {
    cmd->add_option("--type", type, "root system type, e.g. B3")->required();
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
  };

  std::string roots_type, roots_format = "summary";
  CLI::App* roots = app.add_subcommand("roots", "positive system of a Weyl type");
  add_common(roots, roots_type, roots_format);
  roots->callback([&] { rc = run_roots(roots_type, roots_format); });

  std::string ideals_type, ideals_format = "summary";
  CLI::App* ideals = app.add_subcommand("ideals", "enumerate the ideals of the root poset");
  add_common(ideals, ideals_type, ideals_format);
  ideals->callback([&] { rc = run_ideals(ideals_type, ideals_format); });

  std::string exp_type, exp_format = "summary";
  IdealOpts exp_opts;
  bool exp_check = false;
  CLI::App* exponents =
      app.add_subcommand("exponents", "height distribution and dual-partition exponents");
  add_common(exponents, exp_type, exp_format);
  add_ideal_opts(exponents, exp_opts, false);
  exponents->add_flag("--check-lattice", exp_check,
                      "also factor the characteristic polynomial and compare");
  exponents->callback([&] { rc = run_exponents(exp_type, exp_opts, exp_check, exp_format); });

  std::string chi_type, chi_format = "summary";
  IdealOpts chi_opts;
  int chi_jobs = 1;
  CLI::App* charpoly =
      app.add_subcommand("charpoly", "intersection lattice and characteristic polynomial");
  add_common(charpoly, chi_type, chi_format);
  add_ideal_opts(charpoly, chi_opts, true);
  charpoly->add_option("--jobs", chi_jobs, "worker threads")->check(CLI::PositiveNumber);
  charpoly->callback([&] { rc = run_charpoly(chi_type, chi_opts, chi_jobs, chi_format); });

  std::string basis_type, basis_format = "summary", basis_nu = "smallest", basis_emit;
  IdealOpts basis_opts;
  int basis_limit = default_rank_limit();
  CLI::App* basis = app.add_subcommand("basis", "constructive free basis of the derivation module");
  add_common(basis, basis_type, basis_format);
  add_ideal_opts(basis, basis_opts, false);
  basis->add_option("--nu", basis_nu, "restriction-flat hyperplane policy")
      ->check(CLI::IsMember({"smallest", "largest"}));
  basis->add_option("--rank-limit", basis_limit, "symbolic rank ceiling")
      ->check(CLI::PositiveNumber);
  basis->add_option("--emit-derivations", basis_emit, "write the basis JSON to this file");
  basis->callback([&] {
    rc = run_basis(basis_type, basis_opts, basis_nu, basis_limit, basis_emit, basis_format);
  });

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);

  std::string vm_type, vm_format = "summary";
  IdealOpts vm_opts;
  int vm_jobs = 1;
  CLI::App* vmain = verify->add_subcommand(
      "main", "induction certificate, exponents and charpoly factorization per ideal");
  add_common(vmain, vm_type, vm_format);
  add_ideal_opts(vmain, vm_opts, true);
  vmain->add_option("--jobs", vm_jobs, "worker threads")->check(CLI::PositiveNumber);
  vmain->callback([&] { rc = run_verify_main(vm_type, vm_opts, vm_jobs, vm_format); });

  std::string vc_type, vc_format = "summary";
  IdealOpts vc_opts;
  int vc_jobs = 1;
  bool vc_points = false;
  CLI::App* vchi =
      verify->add_subcommand("charpoly", "dual-partition roots against the lattice polynomial");
  add_common(vchi, vc_type, vc_format);
  add_ideal_opts(vchi, vc_opts, true);
  vchi->add_option("--jobs", vc_jobs, "worker threads")->check(CLI::PositiveNumber);
  vchi->add_flag("--point-count", vc_points, "also compare against the finite-field oracle");
  vchi->callback(
      [&] { rc = run_verify_charpoly(vc_type, vc_opts, vc_jobs, vc_points, vc_format); });

  std::string vl_type, vl_format = "summary";
  CLI::App* vlg =
      verify->add_subcommand("local-global", "height deficit against codim-2 local heights");
  add_common(vlg, vl_type, vl_format);
  vlg->callback([&] { rc = run_verify_local_global(vl_type, vl_format); });

  std::string vs_type, vs_format = "summary", vs_nu = "smallest";
  IdealOpts vs_opts;
  int vs_jobs = 1, vs_limit = default_rank_limit();
  CLI::App* vsaito = verify->add_subcommand("saito", "symbolic basis build and determinant check");
  add_common(vsaito, vs_type, vs_format);
  add_ideal_opts(vsaito, vs_opts, true);
  vsaito->add_option("--nu", vs_nu, "restriction-flat hyperplane policy")
      ->check(CLI::IsMember({"smallest", "largest"}));
  vsaito->add_option("--rank-limit", vs_limit, "symbolic rank ceiling")
      ->check(CLI::PositiveNumber);
  vsaito->add_option("--jobs", vs_jobs, "worker threads")->check(CLI::PositiveNumber);
  vsaito->callback(
      [&] { rc = run_verify_saito(vs_type, vs_opts, vs_nu, vs_limit, vs_jobs, vs_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
