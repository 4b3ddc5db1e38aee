#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treelap/canonical.hpp"
#include "treelap/diagonalize.hpp"
#include "treelap/enumerate.hpp"
#include "treelap/harness.hpp"
#include "treelap/invariants.hpp"
#include "treelap/rational.hpp"
#include "treelap/rooted.hpp"
#include "treelap/spectral.hpp"
#include "treelap/tree.hpp"

namespace {

using treelap::QQ;
using treelap::Tree;
using ordered_json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

struct TreeInput {
  std::string path;  // edge-list file, "-" for stdin
  std::string code;  // level-sequence string
};

void add_tree_input(CLI::App* cmd, TreeInput& input) {
  auto* path = cmd->add_option("-i,--input", input.path, "edge list file ('-' for stdin)");
  auto* code = cmd->add_option("-c,--code", input.code, "level-sequence code, e.g. 0,1,2,1");
  path->excludes(code);
}

Tree load_tree(const TreeInput& input) {
  if (!input.code.empty())
    return treelap::tree_from_code(treelap::parse_canonical_code(input.code));
  if (input.path.empty()) throw CLI::ValidationError("provide --input or --code");
  std::ostringstream text;
  if (input.path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(input.path);
    if (!in) throw std::runtime_error("cannot open " + input.path);
    text << in.rdbuf();
  }
  return treelap::parse_edge_list(text.str());
}

treelap::MatrixKind parse_kind(const std::string& kind) {
  if (kind == "adjacency") return treelap::MatrixKind::adjacency;
  if (kind == "laplacian") return treelap::MatrixKind::laplacian;
  throw CLI::ValidationError("--kind must be adjacency or laplacian");
}

std::string q_str(const QQ& x) { return treelap::rational_to_string(x); }

void emit(const ordered_json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump() << '\n';
  else
    std::cout << j.dump(2) << '\n';
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

int run_diagonalize(const TreeInput& input, const std::string& kind_name, const std::string& x_str,
                    int root, const std::string& format) {
  Tree t = load_tree(input);
  QQ x = treelap::parse_rational(x_str);
  treelap::MatrixKind kind = parse_kind(kind_name);
  if (root < 0) root = t.n - 1;
  treelap::RootedTree rt = treelap::root_at(t, root);
  treelap::DiagResult res = kind == treelap::MatrixKind::adjacency
                                ? treelap::diagonalize_adjacency(rt, x)
                                : treelap::diagonalize_laplacian(rt, x);
  if (format == "text") {
    for (int v = 0; v < t.n; ++v) {
      std::cout << "d(" << v << ") = " << q_str(res.value_of(rt, v)) << '\n';
    }
    std::cout << "positive " << res.n_pos << ", negative " << res.n_neg << ", zero "
              << res.n_zero << '\n';
    return kExitOk;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind_name;
  j["x"] = q_str(x);
  j["root"] = root;
  std::vector<std::string> values;
  for (int v = 0; v < t.n; ++v) values.push_back(q_str(res.value_of(rt, v)));
  j["values"] = values;
  j["n_pos"] = res.n_pos;
  j["n_neg"] = res.n_neg;
  j["n_zero"] = res.n_zero;
  emit(j, format);
  return kExitOk;
}

int run_count(const TreeInput& input, const std::string& kind_name, const std::string& x_str,
              const std::string& format) {
  Tree t = load_tree(input);
  QQ alpha = treelap::parse_rational(x_str);
  treelap::InertiaTriple triple = parse_kind(kind_name) == treelap::MatrixKind::adjacency
                                      ? treelap::count_adjacency(t, alpha)
                                      : treelap::count_laplacian(t, alpha);
  if (format == "text") {
    std::cout << "greater " << triple.greater << ", less " << triple.less << ", multiplicity "
              << triple.multiplicity << '\n';
    return kExitOk;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind_name;
  j["alpha"] = q_str(alpha);
  j["greater"] = triple.greater;
  j["less"] = triple.less;
  j["multiplicity"] = triple.multiplicity;
  emit(j, format);
  return kExitOk;
}

int run_localize(const TreeInput& input, const std::string& tol_str, const std::string& format) {
  Tree t = load_tree(input);
  QQ tol = treelap::parse_rational(tol_str);
  auto brackets = treelap::localize_laplacian(t, tol);
  if (format == "text") {
    for (const auto& b : brackets) {
      if (b.exact)
        std::cout << q_str(b.lo) << " exact";
      else
        std::cout << "(" << q_str(b.lo) << ", " << q_str(b.hi) << ")";
      std::cout << " multiplicity " << b.multiplicity << '\n';
    }
    return kExitOk;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tol"] = q_str(tol);
  ordered_json list = ordered_json::array();
  for (const auto& b : brackets) {
    ordered_json e;
    e["lo"] = q_str(b.lo);
    e["hi"] = q_str(b.hi);
    e["multiplicity"] = b.multiplicity;
    e["exact"] = b.exact;
    list.push_back(e);
  }
  j["eigenvalues"] = list;
  emit(j, format);
  return kExitOk;
}

int run_energy(const TreeInput& input, const std::string& tol_str, const std::string& format) {
  Tree t = load_tree(input);
  QQ tol = treelap::parse_rational(tol_str);
  treelap::EnergyReport rep = treelap::laplacian_energy(t, tol);
  std::string le = treelap::rational_to_decimal(rep.le_direct, 12);
  if (format == "text") {
    std::cout << "LE = " << le << " (sigma " << rep.sigma << ")\n";
    return kExitOk;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["tol"] = q_str(tol);
  j["le"] = le;
  j["le_direct"] = q_str(rep.le_direct);
  j["le_sigma"] = q_str(rep.le_sigma);
  j["sigma"] = rep.sigma;
  emit(j, format);
  return kExitOk;
}

int run_enumerate(int n, const std::string& format) {
  treelap::FreeTreeEnumerator en(n);
  if (format == "text" || format == "csv") {
    if (format == "csv") std::cout << "code\n";
    while (auto t = en.next()) {
      if (format == "csv")
        std::cout << '"' << treelap::canonical_code(*t).str() << "\"\n";
      else
        std::cout << treelap::canonical_code(*t).str() << '\n';
    }
    return kExitOk;
  }
  ordered_json codes = ordered_json::array();
  long count = 0;
  while (auto t = en.next()) {
    codes.push_back(treelap::canonical_code(*t).str());
    ++count;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = n;
  j["count"] = count;
  j["codes"] = codes;
  emit(j, format);
  return kExitOk;
}

int run_gen(const std::string& family, int n, const std::string& spine, int p,
            const std::string& s, std::uint64_t seed, const std::string& format) {
  Tree t;
  if (family == "path") {
    t = treelap::generate_path(n);
  } else if (family == "star") {
    t = treelap::generate_star(n);
  } else if (family == "caterpillar") {
    t = treelap::generate_caterpillar(parse_int_list(spine));
  } else if (family == "diameter4") {
    t = treelap::generate_diameter4(p, parse_int_list(s));
  } else if (family == "random") {
    t = treelap::random_tree(n, seed);
  } else {
    throw CLI::ValidationError("unknown family '" + family + "'");
  }
  if (format == "text") {
    std::cout << treelap::to_edge_list(t);
    return kExitOk;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = family;
  j["n"] = t.n;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : t.edges()) edges.push_back(ordered_json::array({u, v}));
  j["edges"] = edges;
  j["code"] = treelap::canonical_code(t).str();
  emit(j, format);
  return kExitOk;
}

int run_verify_cmd(const treelap::VerifyOptions& opts, const std::string& format) {
  treelap::RunManifest man = treelap::run_verify(opts, std::cerr);
  if (format == "json" || format == "text") {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = man.version;
    j["n_min"] = man.n_min;
    j["n_max"] = man.n_max;
    j["checks"] = man.checks;
    j["shards"] = man.shards;
    j["shard_index"] = man.shard_index;
    j["seed"] = man.seed;
    j["trees_checked"] = man.trees_checked;
    j["violations"] = man.violations;
    j["equality_cases"] = man.equality_cases;
    j["gap_cases"] = man.gap_cases;
    j["spot_checked"] = man.spot_checked;
    if (!man.violation_codes.empty()) j["violation_codes"] = man.violation_codes;
    std::cerr << j.dump(format == "json" ? -1 : 2) << '\n';
  }
  return man.violations > 0 ? kExitViolations : kExitOk;
}

int run_theorem7(int r_max, const std::string& format) {
  if (r_max < 2) throw CLI::ValidationError("--r-max must be at least 2");
  long failures = 0;
  for (int r = 2; r <= r_max; ++r) {
    long n = 2L * r + 1;
    Tree t = treelap::generate_diameter4(0, std::vector<int>(r, 1));
    treelap::RootedTree rt = treelap::root_at(t, 0);
    QQ x = QQ(-2) + QQ(2, n);
    treelap::DiagResult res = treelap::diagonalize_laplacian(rt, x);
    QQ leaf_expect = QQ(-1) + QQ(2, n);
    QQ internal_expect = QQ(n * n + 2 * n - 4, n * (n - 2));
    QQ root_expect = QQ(-2 * (n - 1) * (3 * n - 4)) / QQ(n * (n * n + 2 * n - 4));
    bool ok = true;
    for (int v = 0; v < t.n; ++v) {
      const QQ& got = res.value_of(rt, v);
      QQ expect = v == 0 ? root_expect : (t.degree(v) == 1 ? leaf_expect : internal_expect);
      if (got != expect) ok = false;
    }
    if (treelap::sign(leaf_expect) >= 0 || treelap::sign(root_expect) >= 0) ok = false;
    if (!ok) {
      ++failures;
      std::cerr << "r=" << r << ": closed form mismatch\n";
    }
  }
  if (format == "text") {
    std::cout << (failures == 0 ? "all closed forms match" : "closed form mismatches found")
              << " (r = 2.." << r_max << ")\n";
  } else {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["r_max"] = r_max;
    j["failures"] = failures;
    emit(j, format);
  }
  return failures == 0 ? kExitOk : kExitViolations;
}

int run_report(const std::string& records_path, const std::string& format) {
  std::ifstream in(records_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + records_path);
  struct PerN {
    long trees = 0;
    long equality = 0;
    long gap = 0;
    long violations = 0;
    std::string min_le_code, max_le_code;
    double min_le = 0, max_le = 0;
    bool has_le = false;
  };
  std::map<int, PerN> by_n;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line);
    PerN& agg = by_n[j["n"].get<int>()];
    ++agg.trees;
    if (j["equality"].get<bool>()) ++agg.equality;
    if (j["m_below_2"].get<long>() > j["m_below_avg"].get<long>()) ++agg.gap;
    if (j.contains("violations")) agg.violations += static_cast<long>(j["violations"].size());
    if (j.contains("le")) {
      double le = std::stod(j["le"].get<std::string>());
      std::string code = j["code"].get<std::string>();
      if (!agg.has_le || le < agg.min_le) {
        agg.min_le = le;
        agg.min_le_code = code;
      }
      if (!agg.has_le || le > agg.max_le) {
        agg.max_le = le;
        agg.max_le_code = code;
      }
      agg.has_le = true;
    }
  }
  if (format == "csv") {
    std::cout << "n,trees,equality_cases,gap_cases,violations,min_le_code,max_le_code\n";
    for (const auto& [n, agg] : by_n)
      std::cout << n << ',' << agg.trees << ',' << agg.equality << ',' << agg.gap << ','
                << agg.violations << ",\"" << agg.min_le_code << "\",\"" << agg.max_le_code
                << "\"\n";
    return kExitOk;
  }
  ordered_json rows = ordered_json::array();
  long total_violations = 0;
  for (const auto& [n, agg] : by_n) {
    ordered_json row;
    row["n"] = n;
    row["trees"] = agg.trees;
    row["equality_cases"] = agg.equality;
    row["gap_cases"] = agg.gap;
    row["violations"] = agg.violations;
    if (agg.has_le) {
      row["min_le_code"] = agg.min_le_code;
      row["max_le_code"] = agg.max_le_code;
    }
    rows.push_back(row);
    total_violations += agg.violations;
  }
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["orders"] = rows;
  emit(j, format);
  return total_violations > 0 ? kExitViolations : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Laplacian eigenvalue location for trees"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();

  TreeInput input;
  std::string kind = "laplacian";
  std::string x_str = "0";
  std::string tol_str = "2^-40";
  int root = -1;

  auto* diag = app.add_subcommand("diagonalize", "run the congruence diagonalization");
  add_tree_input(diag, input);
  diag->add_option("--kind", kind, "adjacency or laplacian")->capture_default_str();
  diag->add_option("--x", x_str, "shift, as p/q")->capture_default_str();
  diag->add_option("--root", root, "root vertex (default: last)");

  auto* count = app.add_subcommand("count", "eigenvalues greater/less/equal to a point");
  add_tree_input(count, input);
  count->add_option("--kind", kind, "adjacency or laplacian")->capture_default_str();
  count->add_option("--x", x_str, "comparison point, as p/q")->capture_default_str();

  auto* localize = app.add_subcommand("localize", "bracket all Laplacian eigenvalues");
  add_tree_input(localize, input);
  localize->add_option("--tol", tol_str, "bracket width, as p/q or 2^-k")->capture_default_str();

  auto* energy = app.add_subcommand("energy", "Laplacian energy");
  add_tree_input(energy, input);
  energy->add_option("--tol", tol_str, "localization tolerance")->capture_default_str();

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list all free trees of an order");
  enumerate->add_option("n", enum_n, "number of vertices")->required();

  std::string family, spine = "", s_list = "";
  int gen_n = 0, gen_p = 0;
  std::uint64_t gen_seed = 0;
  auto* gen = app.add_subcommand("gen", "generate a tree from a family");
  gen->add_option("family", family, "path|star|caterpillar|diameter4|random")->required();
  gen->add_option("--n", gen_n, "vertex count (path, star, random)");
  gen->add_option("--spine", spine, "leaves per spine vertex (caterpillar), e.g. 1,0,2");
  gen->add_option("--p", gen_p, "root leaf count (diameter4)");
  gen->add_option("--s", s_list, "leaves per internal branch (diameter4), e.g. 1,1");
  gen->add_option("--seed", gen_seed, "seed (random)");

  treelap::VerifyOptions vopts;
  std::string checks_csv = "all";
  auto* verify = app.add_subcommand("verify", "sweep all trees in an order range");
  verify->add_option("--n-min", vopts.n_min, "smallest order")->capture_default_str();
  verify->add_option("--n-max", vopts.n_max, "largest order")->capture_default_str();
  verify->add_option("--checks", checks_csv, "comma-separated checks, or 'all'")
      ->capture_default_str();
  verify->add_option("--shards", vopts.shards, "number of shards")->capture_default_str();
  verify->add_option("--shard-index", vopts.shard_index, "this shard")->capture_default_str();
  verify->add_option("--out", vopts.out_path, "record file (default stdout)");
  verify->add_option("--seed", vopts.seed, "spot-check seed")->capture_default_str();
  verify->add_option("--threads", vopts.threads, "worker threads (0 = auto)");
  verify->add_option("--cache-dir", vopts.cache_dir,
                     "record cache directory (default $TREESPEC_CACHE_DIR)");

  int r_max = 50;
  auto* theorem7 = app.add_subcommand("theorem7", "exact closed-form check for the"
                                                  " single-center depth-2 family");
  theorem7->add_option("--r-max", r_max, "largest branch count")->capture_default_str();

  std::string report_path;
  auto* report = app.add_subcommand("report", "aggregate a record file");
  report->add_option("records", report_path, "record file from verify")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (diag->parsed()) return run_diagonalize(input, kind, x_str, root, format);
    if (count->parsed()) return run_count(input, kind, x_str, format);
    if (localize->parsed()) return run_localize(input, tol_str, format);
    if (energy->parsed()) return run_energy(input, tol_str, format);
    if (enumerate->parsed()) return run_enumerate(enum_n, format);
    if (gen->parsed()) return run_gen(family, gen_n, spine, gen_p, s_list, gen_seed, format);
    if (verify->parsed()) {
      vopts.checks = treelap::CheckSet::parse(checks_csv);
      return run_verify_cmd(vopts, format);
    }
    if (theorem7->parsed()) return run_theorem7(r_max, format);
    if (report->parsed()) return run_report(report_path, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
