// subspace-bounds: upper bounds for subspace codes from the command line.
//
// Exit status: 0 success, 1 usage or input error, 2 a reproduction check failed.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subspace/cache.hpp"
#include "subspace/gfspace.hpp"
#include "subspace/mdc.hpp"
#include "subspace/report.hpp"

using namespace subspace;

namespace {

struct BoundArgs {
  std::int64_t q = 2;
  int v = 0;
  int d = 0;
  std::optional<int> k;
  bool explain = false;
  bool json = false;
  std::vector<std::string> fact_files;
  bool no_external = false;
  std::string cache = default_cache_path();
};

FactStore load_facts(const std::vector<std::string>& files, bool no_external) {
  FactStore facts = FactStore::builtin(!no_external);
  for (const auto& f : files) facts.load_file(f);
  return facts;
}

std::string profile(const std::vector<std::string>& files, bool no_external) {
  std::string p = no_external ? "builtin" : "builtin+external";
  for (const auto& f : files) p += ";" + f;
  return p;
}

void print(const BoundResult& r, const BoundArgs& a) {
  if (a.json) {
    std::cout << to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << r.headline() << "\n";
  if (a.explain) std::cout << r.render();
}

int cmd_bound(const BoundArgs& a) {
  require_prime_power(a.q);
  if (a.v < 1 || a.d < 1) throw std::invalid_argument("need v >= 1 and d >= 1");
  const std::string key = CacheFile::key(a.q, a.v, a.d, a.k);
  CacheFile cache;
  if (!a.cache.empty()) {
    cache = CacheFile::load(a.cache);
    cache.set_profile(profile(a.fact_files, a.no_external));
    if (auto hit = cache.restore(key)) {
      print(*hit, a);
      return 0;
    }
  }
  MdcEngine engine(load_facts(a.fact_files, a.no_external));
  BoundPtr r = a.k ? engine.cdc().upper(a.q, a.v, a.d, *a.k) : engine.upper(a.q, a.v, a.d);
  print(*r, a);
  if (!a.cache.empty()) {
    cache.put(key, *r);
    cache.save(a.cache);
  }
  return 0;
}

int cmd_verify(const std::string& path, std::optional<int> d) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ExplicitCode code = code_from_json(nlohmann::json::parse(in));
  CodeReport rep = verify_code(code, d.value_or(0));
  std::cout << "distribution:";
  for (std::size_t i = 0; i < rep.distribution.size(); ++i)
    if (rep.distribution[i]) std::cout << " a_" << i << "=" << rep.distribution[i];
  std::cout << "\nsize: " << code.elements.size() << "\nminimum distance: "
            << (rep.min_distance ? std::to_string(*rep.min_distance) : "none") << "\n";
  if (!rep.ok()) {
    std::cout << "violation: elements " << rep.violation->first << " and "
              << rep.violation->second << " are closer than " << *d << "\n";
    return 1;
  }
  return 0;
}

int cmd_oracle(std::int64_t q, int v, int d, std::vector<int> dims, bool json) {
  require_prime_power(q);
  std::set<int> K(dims.begin(), dims.end());
  if (K.empty())
    for (int i = 0; i <= v; ++i) K.insert(i);
  OracleResult r = brute_force_max(static_cast<int>(q), v, d, K);
  std::cout << "A_" << q << "(" << v << "," << d << ")";
  if (K.size() != static_cast<std::size_t>(v + 1)) {
    std::cout << " with dimensions {";
    bool first = true;
    for (int k : K) std::cout << (first ? "" : ",") << k, first = false;
    std::cout << "}";
  }
  std::cout << " = " << r.size << "\n";
  if (json) {
    std::cout << code_to_json(r.witness).dump() << "\n";
    return 0;
  }
  for (const auto& s : r.witness.elements) {
    std::cout << "  dim " << s.dim() << ":";
    for (const auto& row : s.rows()) {
      std::cout << " ";
      for (auto x : row) std::cout << static_cast<int>(x);
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds for constant and mixed dimension subspace codes"};
  app.require_subcommand(1);

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Upper bound for A_q(v,d) or A_q(v,d;k)");
  bound->add_option("-q", ba.q, "Field size (prime power)")->required();
  bound->add_option("-v", ba.v, "Ambient dimension")->required();
  bound->add_option("-d", ba.d, "Minimum subspace distance")->required();
  bound->add_option("-k", ba.k, "Codeword dimension (constant dimension codes)");
  bound->add_flag("--explain", ba.explain, "Print the derivation tree");
  bound->add_flag("--json", ba.json, "Print the derivation as JSON");
  bound->add_option("--facts", ba.fact_files, "Additional fact file (JSON)")
      ->check(CLI::ExistingFile);
  bound->add_flag("--no-external-facts", ba.no_external,
                  "Use only the facts quoted with the bounds themselves");
  bound->add_option("--cache", ba.cache, "Cache file (default $SUBSPACE_BOUNDS_CACHE)");

  auto* repro = app.add_subcommand("reproduce-paper", "Recompute the comparison table");

  std::string verify_file;
  std::optional<int> verify_d;
  auto* verify = app.add_subcommand("verify", "Check an explicit code");
  verify->add_option("file", verify_file, "Code JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("-d", verify_d, "Required minimum distance");

  std::int64_t oq = 2;
  int ov = 0, od = 0;
  std::vector<int> odims;
  bool ojson = false;
  auto* oracle = app.add_subcommand("oracle", "Exact A_q(v,d) by exhaustive search");
  oracle->add_option("-q", oq)->required();
  oracle->add_option("-v", ov)->required();
  oracle->add_option("-d", od)->required();
  oracle->add_option("-K", odims, "Allowed dimensions (default all)")->delimiter(',');
  oracle->add_flag("--json", ojson, "Print the witness as code JSON");

  std::int64_t tq = 2;
  std::pair<int, int> tv{1, 8}, td{1, 8};
  int max_v = 14;
  std::string fmt = "md";
  bool t_no_external = false;
  auto* table = app.add_subcommand("table", "Grid of A_q(v,d) upper bounds");
  table->add_option("-q", tq)->required();
  table->add_option("--v", tv, "v range, e.g. --v 5 8")->required();
  table->add_option("--d", td, "d range")->required();
  table->add_option("--max-v", max_v, "Largest v accepted");
  table->add_option("--format", fmt)->check(CLI::IsMember({"md", "csv"}));
  table->add_flag("--no-external-facts", t_no_external);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*bound) return cmd_bound(ba);
    if (*repro) {
      PaperReport rep = reproduce_paper();
      std::cout << rep.render();
      return rep.all_pass() ? 0 : 2;
    }
    if (*verify) return cmd_verify(verify_file, verify_d);
    if (*oracle) return cmd_oracle(oq, ov, od, odims, ojson);
    if (*table) {
      require_prime_power(tq);
      if (tv.first < 1 || tv.first > tv.second || tv.second > max_v || td.first < 1 ||
          td.first > td.second)
        throw std::invalid_argument("bad range (v must lie in 1.." + std::to_string(max_v) +
                                    ")");
      MdcEngine engine(FactStore::builtin(!t_no_external));
      std::cout << render_table(engine, tq, tv.first, tv.second, td.first, td.second,
                                fmt == "csv" ? TableFormat::csv : TableFormat::md);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
