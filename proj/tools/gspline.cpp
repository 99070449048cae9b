#include "CLI11.hpp"
#include "json.hpp"

#include "gspline/cycle.hpp"
#include "gspline/errors.hpp"
#include "gspline/flowup.hpp"
#include "gspline/graph.hpp"
#include "gspline/oracle.hpp"
#include "gspline/trails.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

using namespace gspline;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json values_json(const std::vector<RingElem>& values) {
  ordered_json a = ordered_json::array();
  for (const auto& v : values) a.push_back(print_elem(v));
  return a;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

// column convention: entries read bottom to top, f_1 on the last line
void print_column(const std::vector<RingElem>& values, const std::string& indent = "") {
  for (int i = static_cast<int>(values.size()); i >= 1; --i)
    std::cout << indent << "f" << i << " = " << print_elem(values[i - 1]) << "\n";
}

std::string join_elems(const std::vector<RingElem>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += print_elem(values[i]);
  }
  return out;
}

// accepts {"values": [...]}, {"classes": [{"values": ...}...]},
// {"splines": [...]} or a bare array, so every json the tool prints can be
// fed back in
std::vector<Spline> load_spline_list(const LabeledGraph& g, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid json: ") + e.what());
  }
  nlohmann::json list;
  if (doc.is_array())
    list = doc;
  else if (doc.is_object() && doc.contains("classes"))
    list = doc["classes"];
  else if (doc.is_object() && doc.contains("splines"))
    list = doc["splines"];
  else
    list = nlohmann::json::array({doc});
  if (!list.is_array()) throw SchemaError("expected an array of splines");
  std::vector<Spline> out;
  for (const auto& item : list) out.push_back(load_spline(g, item.dump()));
  return out;
}

Spline load_one_spline(const LabeledGraph& g, const std::string& text) {
  auto list = load_spline_list(g, text);
  if (list.size() != 1) throw SchemaError("expected exactly one spline");
  return list[0];
}

std::string method_name(CycleMethod m) {
  switch (m) {
    case CycleMethod::General: return "general";
    case CycleMethod::Formula: return "formula";
    case CycleMethod::Ordered: return "ordered";
  }
  return "?";
}

struct Options {
  std::string format = "human";
  int jobs = 1;
  std::size_t path_limit = kDefaultPathLimit;
  unsigned long long seed = 0;
  bool json() const { return format == "json"; }
};

void run_check(const Options& opt, const std::string& graph_path, const std::string& spline_path) {
  LabeledGraph g = load_graph(slurp(graph_path));
  Spline s = load_one_spline(g, slurp(spline_path));
  SplineCheck r = check_spline(g, s);
  if (opt.json()) {
    ordered_json doc;
    doc["spline"] = r.ok;
    ordered_json viol = ordered_json::array();
    for (auto [u, v] : r.violations) viol.push_back(ordered_json::array({u, v}));
    doc["violations"] = viol;
    emit(doc);
    return;
  }
  std::cout << (r.ok ? "spline: yes" : "spline: no") << "\n";
  for (auto [u, v] : r.violations) {
    RingElem diff = s.f(v) - s.f(u);
    std::cout << "  edge (" << u << "," << v << "): label " << print_elem(g.edge_label(u, v))
              << " does not divide f" << v << " - f" << u << " = " << print_elem(diff) << "\n";
  }
}

void run_trails(const Options& opt, const std::string& graph_path, int vertex) {
  LabeledGraph g = load_graph(slurp(graph_path));
  auto paths = constraint_paths(g, vertex, opt.path_limit);
  if (opt.json()) {
    ordered_json doc;
    doc["vertex"] = vertex;
    ordered_json arr = ordered_json::array();
    for (const auto& p : paths) {
      ordered_json one;
      one["labels"] = values_json(p.labels);
      one["gcd"] = print_elem(p.gcd);
      one["target"] = p.target;
      arr.push_back(one);
    }
    doc["paths"] = arr;
    emit(doc);
    return;
  }
  if (paths.empty()) {
    std::cout << "no constraint paths from vertex " << vertex << "\n";
    return;
  }
  for (const auto& p : paths)
    std::cout << "l: [" << join_elems(p.labels) << "] gcd=" << print_elem(p.gcd)
              << " target=" << p.target << "\n";
}

void run_flowup(const Options& opt, const std::string& graph_path, int index) {
  LabeledGraph g = load_graph(slurp(graph_path));
  Spline s = build_flowup(g, index, opt.path_limit);
  if (opt.json()) {
    ordered_json doc;
    doc["index"] = index;
    doc["values"] = values_json(s.values);
    emit(doc);
    return;
  }
  std::cout << "flow-up class " << index << ":\n";
  print_column(s.values);
}

void run_basis(const Options& opt, const std::string& graph_path) {
  LabeledGraph g = load_graph(slurp(graph_path));
  FlowUpBasis basis = build_basis(g, opt.jobs, opt.path_limit);
  if (opt.json()) {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < basis.classes.size(); ++i) {
      ordered_json one;
      one["index"] = i + 1;
      one["values"] = values_json(basis.classes[i].values);
      arr.push_back(one);
    }
    doc["classes"] = arr;
    doc["q_g"] = print_elem(basis.q);
    emit(doc);
    return;
  }
  for (size_t i = 0; i < basis.classes.size(); ++i) {
    std::cout << "flow-up class " << (i + 1) << ":\n";
    print_column(basis.classes[i].values, "  ");
  }
  std::cout << "Q_G = " << print_elem(basis.q) << "\n";
}

void run_qelem(const Options& opt, const std::string& graph_path) {
  LabeledGraph g = load_graph(slurp(graph_path));
  RingElem q = q_element(g, opt.path_limit);
  if (opt.json()) {
    ordered_json doc;
    doc["q_g"] = print_elem(q);
    emit(doc);
    return;
  }
  std::cout << "Q_G = " << print_elem(q) << "\n";
}

void run_check_basis(const Options& opt, const std::string& graph_path,
                     const std::string& splines_path) {
  LabeledGraph g = load_graph(slurp(graph_path));
  auto classes = load_spline_list(g, slurp(splines_path));
  bool ok = is_flowup_basis(g, classes, opt.path_limit);
  bool det_applicable = determinant_family_covered(g);
  bool det_ok = false;
  RingElem det = RingElem::zero(g.ring());
  if (det_applicable) {
    std::vector<std::vector<RingElem>> m;
    for (const auto& c : classes) m.push_back(c.values);
    if (static_cast<int>(classes.size()) == g.vertex_count()) det = exact_determinant(g.ring(), m);
    det_ok = determinant_criterion(g, classes, opt.path_limit);
  }
  if (opt.json()) {
    ordered_json doc;
    doc["basis"] = ok;
    doc["determinant_applicable"] = det_applicable;
    if (det_applicable) {
      doc["determinant"] = print_elem(det);
      doc["determinant_matches"] = det_ok;
    }
    emit(doc);
    return;
  }
  std::cout << "basis: " << (ok ? "yes" : "no") << "\n";
  if (det_applicable)
    std::cout << "determinant: " << print_elem(det) << " ("
              << (det_ok ? "matches Q_G up to sign" : "does not match Q_G") << ")\n";
  else
    std::cout << "determinant criterion: not applicable to this graph shape\n";
}

void run_decompose(const Options& opt, const std::string& graph_path,
                   const std::string& spline_path) {
  LabeledGraph g = load_graph(slurp(graph_path));
  Spline s = load_one_spline(g, slurp(spline_path));
  FlowUpBasis basis = build_basis(g, opt.jobs, opt.path_limit);
  auto coeffs = decompose(basis, s);
  if (opt.json()) {
    ordered_json doc;
    doc["coefficients"] = values_json(coeffs);
    emit(doc);
    return;
  }
  for (size_t i = 0; i < coeffs.size(); ++i)
    std::cout << "c" << (i + 1) << " = " << print_elem(coeffs[i]) << "\n";
}

void run_cycle(const Options& opt, const std::string& graph_path, int index,
               const std::string& method, bool compare) {
  LabeledGraph g = load_graph(slurp(graph_path));
  if (!compare) {
    CycleMethod m = CycleMethod::Formula;
    if (method == "general") m = CycleMethod::General;
    if (method == "ordered") m = CycleMethod::Ordered;
    Spline s = cycle_flowup(g, index, m);
    if (opt.json()) {
      ordered_json doc;
      doc["index"] = index;
      doc["method"] = method;
      doc["values"] = values_json(s.values);
      emit(doc);
      return;
    }
    std::cout << "flow-up class " << index << " (" << method << "):\n";
    print_column(s.values);
    return;
  }

  std::vector<CycleMethod> methods = {CycleMethod::General, CycleMethod::Formula};
  if (classify_cycle(g).classification == CycleClass::Ordered)
    methods.push_back(CycleMethod::Ordered);
  std::vector<Spline> results;
  for (CycleMethod m : methods) results.push_back(cycle_flowup(g, index, m));
  bool agree = true;
  for (const auto& r : results)
    if (!(r == results[0])) agree = false;
  if (opt.json()) {
    ordered_json doc;
    doc["index"] = index;
    ordered_json per;
    for (size_t k = 0; k < methods.size(); ++k)
      per[method_name(methods[k])] = values_json(results[k].values);
    doc["methods"] = per;
    doc["agree"] = agree;
    emit(doc);
    return;
  }
  std::vector<size_t> width(methods.size());
  for (size_t k = 0; k < methods.size(); ++k) {
    width[k] = method_name(methods[k]).size();
    for (const auto& v : results[k].values) width[k] = std::max(width[k], print_elem(v).size());
  }
  std::cout << "    ";
  for (size_t k = 0; k < methods.size(); ++k) {
    std::string name = method_name(methods[k]);
    std::cout << "  " << name << std::string(width[k] - name.size(), ' ');
  }
  std::cout << "\n";
  for (int i = g.vertex_count(); i >= 1; --i) {
    std::cout << "f" << i << std::string(i >= 10 ? 1 : 2, ' ');
    for (size_t k = 0; k < methods.size(); ++k) {
      std::string v = print_elem(results[k].f(i));
      std::cout << "  " << v << std::string(width[k] - v.size(), ' ');
    }
    std::cout << "\n";
  }
  std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
}

void oracle_min_leading(const LabeledGraph& g, const Options& opt, int index, ordered_json& doc,
                        bool& all_match) {
  std::vector<int> indices;
  if (index > 0)
    indices.push_back(index);
  else
    for (int i = 1; i <= g.vertex_count(); ++i) indices.push_back(i);
  ordered_json arr = ordered_json::array();
  for (int i : indices) {
    std::string by_search, by_trails;
    try {
      by_search = print_elem(oracle_min_leading_entry(g, i));
    } catch (const NoFlowUpFoundError&) {
      by_search = "none";
    }
    try {
      by_trails = print_elem(smallest_leading_entry(g, i, opt.path_limit));
    } catch (const DegenerateFlowUpError&) {
      by_trails = "none";
    }
    bool match = by_search == by_trails;
    all_match = all_match && match;
    ordered_json one;
    one["index"] = i;
    one["search"] = by_search;
    one["trails"] = by_trails;
    one["match"] = match;
    arr.push_back(one);
  }
  doc["entries"] = arr;
}

void run_oracle(const Options& opt, const std::string& graph_path, const std::string& which,
                int index) {
  LabeledGraph g = load_graph(slurp(graph_path));
  ordered_json doc;
  doc["check"] = which;
  bool match = true;

  if (which == "min-leading") {
    oracle_min_leading(g, opt, index, doc, match);
  } else if (which == "spline-count") {
    for (const auto& e : g.edges())
      if (e.label.is_zero())
        throw DomainError("the spline-count comparison needs every label nonzero");
    Int m = default_modulus(g);
    Int count = count_splines_mod(g);
    FlowUpBasis basis = build_basis(g, opt.jobs, opt.path_limit);
    Int expected = 1;
    for (int i = 0; i < g.vertex_count(); ++i) expected *= m;
    expected /= basis.q.int_value();
    match = count == expected;
    doc["modulus"] = m.str();
    doc["count"] = count.str();
    doc["expected"] = expected.str();
  } else {  // trails-equivalence
    FlowUpBasis basis = build_basis(g, opt.jobs, opt.path_limit);
    Spline sum = trivial_spline(g, RingElem::zero(g.ring()));
    for (const auto& c : basis.classes) sum = sum + c;
    std::vector<Spline> probes = basis.classes;
    probes.push_back(sum);
    ordered_json arr = ordered_json::array();
    for (int k = 2; k <= g.vertex_count(); ++k) {
      auto pruned = constraint_paths(g, k, opt.path_limit);
      auto full = all_trail_constraints(g, k, opt.path_limit);
      RingElem pruned_mod = RingElem::one(g.ring());
      for (const auto& p : pruned) pruned_mod = lcm(pruned_mod, p.gcd);
      RingElem full_mod = RingElem::one(g.ring());
      for (const auto& c : full) full_mod = lcm(full_mod, c.gcd);
      bool ok = pruned_mod == full_mod;
      for (const auto& s : probes) {
        CongruenceSystem a(g.ring()), b(g.ring());
        for (const auto& p : pruned) a.add(s.f(p.target), p.gcd);
        for (const auto& c : full) b.add(s.f(c.target), c.gcd);
        ok = ok && crt_solve(a) == crt_solve(b);
      }
      match = match && ok;
      ordered_json one;
      one["vertex"] = k;
      one["modulus"] = print_elem(full_mod);
      one["match"] = ok;
      arr.push_back(one);
    }
    doc["vertices"] = arr;
  }

  doc["match"] = match;
  if (opt.json()) {
    emit(doc);
    return;
  }
  std::cout << "oracle check " << which << ": " << (match ? "agree" : "DISAGREE") << "\n";
  if (doc.contains("entries"))
    for (const auto& one : doc["entries"])
      std::cout << "  index " << one["index"].get<int>() << ": search "
                << one["search"].get<std::string>() << ", trails "
                << one["trails"].get<std::string>() << "\n";
  if (doc.contains("count"))
    std::cout << "  modulus " << doc["modulus"].get<std::string>() << ": counted "
              << doc["count"].get<std::string>() << ", lattice index "
              << doc["expected"].get<std::string>() << "\n";
  if (doc.contains("vertices"))
    for (const auto& one : doc["vertices"])
      std::cout << "  vertex " << one["vertex"].get<int>() << ": modulus "
                << one["modulus"].get<std::string>() << ", "
                << (one["match"].get<bool>() ? "agree" : "DISAGREE") << "\n";
  if (!match) throw DomainError("oracle disagreement");
}

void run_selftest(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) throw std::logic_error("selftest failed: " + what);
  };
  auto random_graph = [&](int n, int extra, int lo, int hi) {
    std::vector<std::tuple<int, int, std::string>> edges;
    std::uniform_int_distribution<int> label(lo, hi);
    std::set<std::pair<int, int>> seen;
    for (int v = 2; v <= n; ++v) {
      std::uniform_int_distribution<int> parent(1, v - 1);
      int u = parent(rng);
      seen.insert({u, v});
      edges.emplace_back(u, v, std::to_string(label(rng)));
    }
    for (int t = 0; t < extra; ++t) {
      std::uniform_int_distribution<int> pick(1, n);
      int u = pick(rng), v = pick(rng);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) continue;
      edges.emplace_back(u, v, std::to_string(label(rng)));
    }
    nlohmann::json doc;
    doc["ring"] = "Z";
    doc["vertices"] = n;
    doc["edges"] = nlohmann::json::array();
    for (auto& [u, v, l] : edges)
      doc["edges"].push_back({{"u", u}, {"v", v}, {"label", l}});
    return load_graph(doc.dump());
  };

  std::uniform_int_distribution<int> nd(2, 5), coeff(-3, 3);
  for (int t = 0; t < 12; ++t) {
    LabeledGraph g = random_graph(nd(rng), 2, 1, 9);
    FlowUpBasis basis = build_basis(g, opt.jobs, opt.path_limit);
    expect(is_flowup_basis(g, basis.classes, opt.path_limit), "basis recognition");
    if (determinant_family_covered(g))
      expect(determinant_criterion(g, basis.classes, opt.path_limit), "determinant criterion");
    Spline s = trivial_spline(g, RingElem::zero(g.ring()));
    for (const auto& c : basis.classes)
      s = s + RingElem::integer(Int(coeff(rng))) * c;
    auto coeffs = decompose(basis, s);
    Spline back = trivial_spline(g, RingElem::zero(g.ring()));
    for (size_t i = 0; i < coeffs.size(); ++i) back = back + coeffs[i] * basis.classes[i];
    expect(back == s, "decompose round-trip");
    std::uniform_int_distribution<int> idx(1, g.vertex_count());
    int i = idx(rng);
    expect(oracle_min_leading_entry(g, i) == smallest_leading_entry(g, i, opt.path_limit),
           "leading entry vs search");
  }
  for (int t = 0; t < 8; ++t) {
    std::uniform_int_distribution<int> sz(3, 7), label(1, 9);
    int n = sz(rng);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin() + 1, order.end(), rng);
    nlohmann::json doc;
    doc["ring"] = "Z";
    doc["vertices"] = n;
    doc["edges"] = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      int u = order[i], v = order[(i + 1) % n];
      doc["edges"].push_back(
          {{"u", u}, {"v", v}, {"label", std::to_string(label(rng))}});
    }
    LabeledGraph g = load_graph(doc.dump());
    std::uniform_int_distribution<int> idx(1, n);
    int i = idx(rng);
    Spline a = cycle_flowup(g, i, CycleMethod::General);
    Spline b = cycle_flowup(g, i, CycleMethod::Formula);
    expect(a == b, "cycle methods");
    if (classify_cycle(g).classification == CycleClass::Ordered)
      expect(cycle_flowup(g, i, CycleMethod::Ordered) == a, "ordered cycle method");
  }

  if (opt.json()) {
    ordered_json doc;
    doc["seed"] = opt.seed;
    doc["checks"] = checks;
    doc["passed"] = true;
    emit(doc);
    return;
  }
  std::cout << "selftest passed: " << checks << " checks (seed " << opt.seed << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized spline computations on edge-labeled graphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->envname("GSPLINE_FORMAT");
  app.add_option("--jobs", opt.jobs, "worker threads for basis construction")
      ->check(CLI::PositiveNumber)
      ->envname("GSPLINE_JOBS");
  app.add_option("--path-limit", opt.path_limit, "trail search work bound")
      ->check(CLI::PositiveNumber)
      ->envname("GSPLINE_PATH_LIMIT");
  app.add_option("--seed", opt.seed, "selftest random seed")->envname("GSPLINE_SEED");

  std::string graph_path, second_path, method = "formula", which_oracle = "min-leading";
  int vertex = 0, index = 0;
  bool compare = false;

  auto* c_check = app.add_subcommand("check", "test whether a labeling is a spline");
  c_check->add_option("graph", graph_path)->required();
  c_check->add_option("spline", second_path)->required();

  auto* c_trails = app.add_subcommand("trails", "list constraint paths from a vertex");
  c_trails->add_option("graph", graph_path)->required();
  c_trails->add_option("--vertex,--flow-index", vertex, "source vertex")->required();

  auto* c_flowup = app.add_subcommand("flowup", "build one flow-up class");
  c_flowup->add_option("graph", graph_path)->required();
  c_flowup->add_option("--index", index, "leading vertex")->required();

  auto* c_basis = app.add_subcommand("basis", "build the full flow-up basis");
  c_basis->add_option("graph", graph_path)->required();

  auto* c_qelem = app.add_subcommand("qelem", "product of the smallest leading entries");
  c_qelem->add_option("graph", graph_path)->required();

  auto* c_check_basis = app.add_subcommand("check-basis", "verify a claimed flow-up basis");
  c_check_basis->add_option("graph", graph_path)->required();
  c_check_basis->add_option("splines", second_path)->required();

  auto* c_decompose = app.add_subcommand("decompose", "write a spline in the flow-up basis");
  c_decompose->add_option("graph", graph_path)->required();
  c_decompose->add_option("spline", second_path)->required();

  auto* c_cycle = app.add_subcommand("cycle", "flow-up classes on cycles");
  c_cycle->add_option("graph", graph_path)->required();
  c_cycle->add_option("--index", index, "leading vertex")->required();
  c_cycle->add_option("--method", method, "construction route")
      ->check(CLI::IsMember({"general", "formula", "ordered"}));
  c_cycle->add_flag("--compare", compare, "run every applicable route and compare");

  auto* c_oracle = app.add_subcommand("oracle", "cross-check against exhaustive search");
  c_oracle->add_option("graph", graph_path)->required();
  c_oracle->add_option("--check", which_oracle, "which comparison to run")
      ->check(CLI::IsMember({"min-leading", "spline-count", "trails-equivalence"}));
  c_oracle->add_option("--index", index, "restrict min-leading to one index");

  auto* c_selftest = app.add_subcommand("selftest", "randomized end-to-end consistency checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_check) run_check(opt, graph_path, second_path);
    if (*c_trails) run_trails(opt, graph_path, vertex);
    if (*c_flowup) run_flowup(opt, graph_path, index);
    if (*c_basis) run_basis(opt, graph_path);
    if (*c_qelem) run_qelem(opt, graph_path);
    if (*c_check_basis) run_check_basis(opt, graph_path, second_path);
    if (*c_decompose) run_decompose(opt, graph_path, second_path);
    if (*c_cycle) run_cycle(opt, graph_path, index, method, compare);
    if (*c_oracle) run_oracle(opt, graph_path, which_oracle, index);
    if (*c_selftest) run_selftest(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
