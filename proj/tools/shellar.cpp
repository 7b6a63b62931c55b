// shellar: clique complexes of bounded-degree graphs, shellability,
// facet structures, and exhaustive extremal verification.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "shellar/capi.h"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(int status) {
  if (status == SHELLAR_OK) return;
  std::string msg = shellar_last_error();
  if (status == SHELLAR_EUSAGE) throw UsageError(msg);
  throw DomainError(msg);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  shellar_free_string(s);
  return out;
}

using GraphPtr = std::unique_ptr<shellar_graph, decltype(&shellar_graph_free)>;
using ComplexPtr =
    std::unique_ptr<shellar_complex, decltype(&shellar_complex_free)>;

GraphPtr wrap(shellar_graph* g) { return GraphPtr(g, shellar_graph_free); }
ComplexPtr wrap(shellar_complex* c) {
  return ComplexPtr(c, shellar_complex_free);
}

struct Config {
  std::uint64_t budget = 100000000ULL;
  int workers = 1;
  bool connected = true;
  std::string format;
  bool verbose = false;
};

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot open '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "config " + path + ": line " + std::to_string(lineno);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t eq = line.find('=');
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    if (eq == std::string::npos)
      throw UsageError(where + ": expected 'key = value'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      std::size_t last = s.find_last_not_of(" \t\r");
      s.erase(last == std::string::npos ? 0 : last + 1);
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "budget")
        cfg.budget = std::stoull(value);
      else if (key == "workers")
        cfg.workers = std::stoi(value);
      else if (key == "connected") {
        if (value == "true" || value == "1")
          cfg.connected = true;
        else if (value == "false" || value == "0")
          cfg.connected = false;
        else
          throw UsageError(where + ": bad boolean '" + value + "'");
      } else if (key == "format") {
        if (value != "json" && value != "csv" && value != "text")
          throw UsageError(where + ": bad format '" + value + "'");
        cfg.format = value;
      } else
        throw UsageError(where + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw UsageError(where + ": unparseable value '" + value + "'");
    } catch (const std::out_of_range&) {
      throw UsageError(where + ": value out of range '" + value + "'");
    }
  }
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open output '" + path + "'");
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

// Input kinds for graph/complex-consuming subcommands.
enum class InputKind { Auto, Graph6, ComplexText, EdgeList };

InputKind parse_kind(const std::string& s) {
  if (s == "auto") return InputKind::Auto;
  if (s == "g6") return InputKind::Graph6;
  if (s == "cmplx") return InputKind::ComplexText;
  if (s == "edges") return InputKind::EdgeList;
  throw UsageError("--as: expected auto|g6|cmplx|edges, got '" + s + "'");
}

InputKind sniff(const std::string& path, InputKind hint) {
  if (hint != InputKind::Auto) return hint;
  if (path.size() > 6 && path.substr(path.size() - 6) == ".cmplx")
    return InputKind::ComplexText;
  if (path.size() > 6 && path.substr(path.size() - 6) == ".edges")
    return InputKind::EdgeList;
  return InputKind::Graph6;
}

// Each input resolves to a complex; for graph6/edge-list inputs that is the
// clique complex and the source line is retained for reporting.
struct ComplexInput {
  ComplexPtr complex;
  std::string source;  // graph6 line when applicable
};

std::vector<ComplexInput> read_complexes(const std::string& path,
                                         InputKind kind) {
  std::string text = read_all(path);
  std::vector<ComplexInput> out;
  kind = sniff(path, kind);
  if (kind == InputKind::ComplexText) {
    shellar_complex* c = nullptr;
    check(shellar_complex_from_text(text.c_str(), &c));
    out.push_back({wrap(c), ""});
    return out;
  }
  if (kind == InputKind::EdgeList) {
    shellar_graph* g = nullptr;
    check(shellar_graph_from_edge_list(text.c_str(), &g));
    GraphPtr gp = wrap(g);
    shellar_complex* c = nullptr;
    check(shellar_complex_from_graph(gp.get(), &c));
    char* g6 = nullptr;
    check(shellar_graph_to_graph6(gp.get(), &g6));
    out.push_back({wrap(c), take_string(g6)});
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    shellar_graph* g = nullptr;
    check(shellar_graph_from_graph6(line.c_str(), &g));
    GraphPtr gp = wrap(g);
    shellar_complex* c = nullptr;
    check(shellar_complex_from_graph(gp.get(), &c));
    out.push_back({wrap(c), line});
  }
  if (out.empty()) throw UsageError("no input graphs");
  return out;
}

std::vector<GraphPtr> read_graphs(const std::string& path) {
  std::string text = read_all(path);
  std::vector<GraphPtr> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    shellar_graph* g = nullptr;
    check(shellar_graph_from_graph6(line.c_str(), &g));
    out.push_back(wrap(g));
  }
  if (out.empty()) throw UsageError("no input graphs");
  return out;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

int g_exit = 0;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique complexes of bounded-degree graphs: shellability, "
               "censuses, facet structures, extremal search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(shellar_version()));

  Config cfg;
  std::string config_path, out_path, format;
  bool verbose = false;
  app.add_option("--config", config_path, "key = value defaults file");
  app.add_option("--out", out_path, "output path (default stdout)");
  CLI::Option* fmt_opt =
      app.add_option("--format", format, "json|csv|text (subcommand-specific "
                                         "extras: graph6, edgelist, dot)");
  app.add_flag("--verbose", verbose, "echo effective configuration");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family member");
  std::string family;
  int gn = 0, gr = 0, ga = 0, gb = 0;
  long long gm = 0;
  std::vector<int> gj;
  gen->add_option("family", family,
                  "complete|turan|colex|union|circulant|cir-star|cir-star-star")
      ->required();
  gen->add_option("--n", gn, "vertex count");
  gen->add_option("--r", gr, "degree / part parameter");
  gen->add_option("--m", gm, "edge count (colex)");
  gen->add_option("--a", ga, "number of K_{r+1} copies (union)");
  gen->add_option("--b", gb, "size of the final clique (union)");
  gen->add_option("--j", gj, "circulant connection set")->delimiter(',');

  // census
  auto* census = app.add_subcommand("census", "per-size clique tallies");
  std::string census_in = "-";
  bool census_maximal = false;
  census->add_option("--in", census_in, "graph6 stream (default stdin)");
  census->add_flag("--maximal", census_maximal, "also list maximal cliques");

  // shellable
  auto* shellable = app.add_subcommand("shellable", "decide shellability");
  std::string sh_in = "-", sh_as = "auto", sh_order;
  bool sh_cert = false, sh_expect = false;
  int sh_fdr = 0;
  shellable->add_option("--in", sh_in, "input (default stdin)");
  shellable->add_option("--as", sh_as, "auto|g6|cmplx|edges");
  shellable->add_flag("--certificate", sh_cert, "emit the full certificate");
  shellable->add_flag("--expect-shellable", sh_expect,
                      "exit 1 when any input is not shellable");
  shellable->add_option("--free-degree-r", sh_fdr,
                        "include the free-degree trace for this r");
  shellable->add_option("--order", sh_order,
                        "validate this facet order (one facet per line)");

  // fvector
  auto* fvector = app.add_subcommand("fvector", "face counts by dimension");
  std::string fv_in = "-", fv_as = "auto";
  fvector->add_option("--in", fv_in, "input (default stdin)");
  fvector->add_option("--as", fv_as, "auto|g6|cmplx|edges");

  // kmtree
  auto* kmtree = app.add_subcommand("kmtree", "build the facet tree");
  std::string km_in = "-", km_as = "auto";
  int km_r = 0;
  kmtree->add_option("--in", km_in, "input (default stdin)");
  kmtree->add_option("--as", km_as, "auto|g6|cmplx|edges");
  kmtree->add_option("--r", km_r, "max-degree parameter")->required();

  // facetgraph
  auto* facetgraph = app.add_subcommand("facetgraph", "facet adjacency graph");
  std::string fg_in = "-", fg_as = "auto";
  int fg_m = 0;
  facetgraph->add_option("--in", fg_in, "input (default stdin)");
  facetgraph->add_option("--as", fg_as, "auto|g6|cmplx|edges");
  facetgraph->add_option("--m", fg_m, "facet size")->required();

  // search
  auto* search = app.add_subcommand("search", "exhaustive extremal search");
  int se_n = 0, se_r = 0, se_t = 0, se_workers = 0;
  bool se_pure = false;
  bool se_connected = true;
  std::uint64_t se_budget = 0;
  std::string se_source = "internal", se_in = "-";
  search->add_option("--n", se_n, "vertex count")->required();
  search->add_option("--r", se_r, "max degree")->required();
  search->add_option("--t", se_t, "clique size (0: total count)");
  search->add_flag("--pure", se_pure, "require pure complexes");
  search->add_flag("--connected,!--no-connected", se_connected,
                   "restrict to connected graphs (default on)");
  CLI::Option* se_workers_opt =
      search->add_option("--workers", se_workers, "worker threads");
  CLI::Option* se_budget_opt =
      search->add_option("--budget", se_budget, "candidate budget");
  search->add_option("--source", se_source, "internal|stdin|FILE");
  search->add_option("--in", se_in, "graph6 stream when --source is stdin");

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  auto* v_binom = verify->add_subcommand("binom", "binomial inequality sweep");
  int vb_amax = 25;
  v_binom->add_option("--a-max", vb_amax, "largest a");
  auto* v_unique =
      verify->add_subcommand("unique-km-tree", "uniqueness of the tree class");
  int vu_r = 4, vu_n = 0, vu_facets = 0;
  v_unique->add_option("--r", vu_r, "max degree (even)");
  v_unique->add_option("--n", vu_n, "override vertex count");
  v_unique->add_option("--facets", vu_facets, "override facet count");
  auto* v_tendril = verify->add_subcommand("tendril", "extension rigidity");
  int vt_n = 8, vt_r = 4;
  v_tendril->add_option("--n", vt_n, "vertex count");
  v_tendril->add_option("--r", vt_r, "max degree (even)");
  auto* v_classical =
      verify->add_subcommand("classical", "classical clique-count bounds");
  int vc_nmax = 7;
  v_classical->add_option("--n-max", vc_nmax, "largest vertex count");
  auto* v_odd = verify->add_subcommand("odd", "odd-degree frontier");
  int vo_n = 6, vo_r = 3;
  v_odd->add_option("--n", vo_n, "vertex count");
  v_odd->add_option("--r", vo_r, "max degree (odd)");
  auto* v_scan = verify->add_subcommand("scan", "oversized-facet probe");
  int vs_n = 6, vs_r = 4;
  v_scan->add_option("--n", vs_n, "largest vertex count");
  v_scan->add_option("--r", vs_r, "max degree");

  // ratios
  auto* ratios = app.add_subcommand("ratios", "closed-form ratio tables");
  int ra_r = 4, ra_t = 0;
  std::vector<int> ra_n;
  bool ra_exhaustive = false;
  ratios->add_option("--r", ra_r, "max degree (even)");
  ratios->add_option("--t", ra_t, "clique size (0: totals)");
  ratios->add_option("--n", ra_n, "vertex counts")->delimiter(',')->required();
  ratios->add_flag("--with-exhaustive", ra_exhaustive,
                   "cross-check small n by exhaustive search");

  for (CLI::App* sc : app.get_subcommands(nullptr)) {
    sc->fallthrough();
    for (CLI::App* inner : sc->get_subcommands(nullptr)) inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (fmt_opt->count() > 0) cfg.format = format;
    if (se_workers_opt->count() > 0) cfg.workers = se_workers;
    if (se_budget_opt->count() > 0) cfg.budget = se_budget;
    if (const char* env = std::getenv("SHELLAR_BUDGET")) {
      try {
        cfg.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw UsageError("SHELLAR_BUDGET: unparseable value");
      }
    }
    cfg.verbose = verbose;
    std::string fmt = cfg.format;
    if (verbose)
      std::cerr << "config: budget=" << cfg.budget << " workers=" << cfg.workers
                << " connected=" << (cfg.connected ? "true" : "false")
                << " format=" << (fmt.empty() ? "(default)" : fmt) << "\n";

    auto default_fmt = [&](const char* d) { return fmt.empty() ? d : fmt; };
    std::ostringstream body;

    if (*gen) {
      std::string f = default_fmt("graph6");
      shellar_graph* raw = nullptr;
      if (family == "circulant") {
        check(shellar_graph_circulant(gn, gj.data(),
                                      static_cast<int>(gj.size()), &raw));
      } else {
        std::string name = family;
        std::vector<long long> args;
        if (name == "complete")
          args = {gn};
        else if (name == "turan")
          args = {gn, gr};
        else if (name == "colex")
          args = {gn, gm};
        else if (name == "union")
          args = {ga, gr, gb};
        else if (name == "cir-star")
          name = "cirstar", args = {gn, gr};
        else if (name == "cir-star-star")
          name = "cirstarstar", args = {gn, gr};
        else
          throw UsageError("gen: unknown family '" + family + "'");
        check(shellar_graph_generate(name.c_str(), args.data(),
                                     static_cast<int>(args.size()), &raw));
      }
      GraphPtr g = wrap(raw);
      char* s = nullptr;
      if (f == "graph6") {
        check(shellar_graph_to_graph6(g.get(), &s));
        body << take_string(s);
      } else if (f == "edgelist") {
        check(shellar_graph_to_edge_list(g.get(), &s));
        body << take_string(s);
      } else if (f == "json") {
        check(shellar_graph_to_graph6(g.get(), &s));
        json j{{"graph6", take_string(s)},
               {"n", shellar_graph_vertex_count(g.get())},
               {"m", shellar_graph_edge_count(g.get())},
               {"max_degree", shellar_graph_max_degree(g.get())}};
        body << j.dump();
      } else
        throw UsageError("gen: --format must be graph6|edgelist|json");
    } else if (*census) {
      std::string f = default_fmt("json");
      std::vector<GraphPtr> graphs = read_graphs(census_in);
      if (f == "csv") body << "graph6,t,count\n";
      json rows = json::array();
      for (auto& g : graphs) {
        char* s = nullptr;
        check(shellar_graph_census_json(g.get(), &s));
        json j = json::parse(take_string(s));
        check(shellar_graph_to_graph6(g.get(), &s));
        std::string g6 = take_string(s);
        j["graph6"] = g6;
        if (census_maximal) {
          check(shellar_graph_maximal_cliques_json(g.get(), &s));
          j["maximal_cliques"] = json::parse(take_string(s));
        }
        if (f == "json")
          rows.push_back(j);
        else if (f == "csv") {
          for (auto it = j["counts"].begin(); it != j["counts"].end(); ++it)
            body << g6 << "," << it.key() << ","
                 << it.value().get<std::uint64_t>() << "\n";
        } else if (f == "text") {
          body << g6 << ": total " << j["total"].get<std::uint64_t>()
               << ", omega " << j["omega"].get<int>() << ", by size";
          for (auto it = j["counts"].begin(); it != j["counts"].end(); ++it)
            body << " " << it.key() << ":" << it.value().get<std::uint64_t>();
          body << "\n";
        } else
          throw UsageError("census: --format must be json|csv|text");
      }
      if (f == "json") body << rows.dump();
    } else if (*shellable) {
      std::string f = default_fmt("json");
      std::vector<ComplexInput> inputs =
          read_complexes(sh_in, parse_kind(sh_as));
      if (!sh_order.empty() && inputs.size() != 1)
        throw UsageError("shellable --order: exactly one input complex");
      bool all_shellable = true;
      for (auto& in : inputs) {
        char* s = nullptr;
        if (!sh_order.empty()) {
          std::string order_text = read_all(sh_order);
          check(shellar_complex_verify_order_json(
              in.complex.get(), order_text.c_str(), sh_fdr, &s));
        } else {
          check(shellar_complex_shellable_json(in.complex.get(), sh_fdr, &s));
        }
        json j = json::parse(take_string(s));
        bool valid = j["valid"].get<bool>();
        if (!valid) all_shellable = false;
        if (!in.source.empty()) j["graph6"] = in.source;
        if (!sh_cert) {
          json small{{"valid", valid}};
          if (j.contains("graph6")) small["graph6"] = j["graph6"];
          if (j.contains("failing_step")) small["failing_step"] = j["failing_step"];
          j = small;
        }
        if (f == "json")
          body << j.dump() << "\n";
        else if (f == "text")
          body << (in.source.empty() ? std::string("complex") : in.source)
               << ": " << (valid ? "shellable" : "not shellable") << "\n";
        else
          throw UsageError("shellable: --format must be json|text");
      }
      if (sh_expect && !all_shellable) g_exit = 1;
    } else if (*fvector) {
      std::string f = default_fmt("json");
      std::vector<ComplexInput> inputs =
          read_complexes(fv_in, parse_kind(fv_as));
      for (auto& in : inputs) {
        char* s = nullptr;
        check(shellar_complex_fvector_json(in.complex.get(), &s));
        json j = json::parse(take_string(s));
        if (!in.source.empty()) j["graph6"] = in.source;
        if (f == "json")
          body << j.dump() << "\n";
        else if (f == "text") {
          body << (in.source.empty() ? std::string("complex") : in.source)
               << ": f = (";
          auto& e = j["entries"];
          for (std::size_t i = 0; i < e.size(); ++i)
            body << (i ? "," : "") << e[i].get<std::uint64_t>();
          body << "), total " << j["total"].get<std::uint64_t>() << "\n";
        } else
          throw UsageError("fvector: --format must be json|text");
      }
    } else if (*kmtree) {
      std::string f = default_fmt("json");
      std::vector<ComplexInput> inputs =
          read_complexes(km_in, parse_kind(km_as));
      for (auto& in : inputs) {
        char* s = nullptr;
        int format_code =
            f == "dot" ? SHELLAR_FORMAT_DOT : SHELLAR_FORMAT_JSON;
        if (f != "dot" && f != "json")
          throw UsageError("kmtree: --format must be json|dot");
        check(shellar_complex_km_tree(in.complex.get(), km_r, format_code, &s));
        body << take_string(s) << "\n";
      }
    } else if (*facetgraph) {
      std::string f = default_fmt("json");
      std::vector<ComplexInput> inputs =
          read_complexes(fg_in, parse_kind(fg_as));
      for (auto& in : inputs) {
        char* s = nullptr;
        int format_code =
            f == "dot" ? SHELLAR_FORMAT_DOT : SHELLAR_FORMAT_JSON;
        if (f != "dot" && f != "json")
          throw UsageError("facetgraph: --format must be json|dot");
        check(
            shellar_complex_facet_graph(in.complex.get(), fg_m, format_code, &s));
        body << take_string(s) << "\n";
      }
    } else if (*search) {
      std::string f = default_fmt("json");
      json spec{{"n", se_n},       {"r", se_r},
                {"t", se_t},       {"pure", se_pure},
                {"connected", se_connected},
                {"budget", cfg.budget},
                {"workers", cfg.workers}};
      if (se_source != "internal") {
        std::string path = se_source == "stdin" ? se_in : se_source;
        json lines = json::array();
        std::istringstream in(read_all(path));
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) lines.push_back(line);
        }
        spec["graphs"] = lines;
      }
      char* s = nullptr;
      check(shellar_extremal_search(spec.dump().c_str(), &s));
      json j = json::parse(take_string(s));
      if (f == "json")
        body << j.dump();
      else if (f == "csv") {
        body << "n,r,t,value,witness_graph6\n";
        for (auto& w : j["witnesses"])
          body << se_n << "," << se_r << "," << se_t << ","
               << j["value"].get<std::uint64_t>() << ","
               << w.get<std::string>() << "\n";
      } else if (f == "text") {
        body << "n=" << se_n << " r=" << se_r << " t="
             << (se_t ? std::to_string(se_t) : std::string("all"))
             << (se_pure ? " pure" : "") << ": value "
             << j["value"].get<std::uint64_t>() << ", "
             << j["witnesses"].size() << " witness(es)";
        for (auto& w : j["witnesses"]) body << " " << w.get<std::string>();
        body << "\n";
      } else
        throw UsageError("search: --format must be json|csv|text");
    } else if (*verify) {
      std::string f = default_fmt("json");
      char* s = nullptr;
      json j;
      if (*v_binom) {
        check(shellar_verify_binom(vb_amax, &s));
        j = json::parse(take_string(s));
        if (!j["violations"].empty()) g_exit = 1;
        if (f == "text")
          body << j["violations"].size() << " violations\n";
      } else if (*v_unique) {
        check(shellar_verify_unique_km_tree(vu_r, cfg.budget, vu_n, vu_facets,
                                            &s));
        j = json::parse(take_string(s));
        if (j["default_regime"].get<bool>() &&
            !j["matches_cir_star"].get<bool>())
          g_exit = 1;
        if (f == "text")
          body << j["class_count"].get<std::uint64_t>()
               << " class(es); matches reference: "
               << (j["matches_cir_star"].get<bool>() ? "yes" : "no") << "\n";
      } else if (*v_tendril) {
        check(shellar_verify_tendril(vt_n, vt_r, cfg.budget, &s));
        j = json::parse(take_string(s));
        if (!j["counterexamples"].empty()) g_exit = 1;
        if (f == "text")
          body << j["counterexamples"].size() << " counterexamples over "
               << j["extensions_examined"].get<std::uint64_t>()
               << " extensions\n";
      } else if (*v_classical) {
        check(shellar_verify_classical(vc_nmax, cfg.budget, &s));
        j = json::parse(take_string(s));
        if (j["total_violations"].get<std::uint64_t>() != 0) g_exit = 1;
        if (f == "text")
          body << j["total_violations"].get<std::uint64_t>()
               << " violations across all four bounds, n <= " << vc_nmax
               << "\n";
      } else if (*v_odd) {
        check(shellar_odd_explore(vo_n, vo_r, cfg.budget, &s));
        j = json::parse(take_string(s));
        if (f == "text") body << j.dump(2) << "\n";
      } else if (*v_scan) {
        check(shellar_scan_large_clique(vs_n, vs_r, cfg.budget, &s));
        j = json::parse(take_string(s));
        if (f == "text") body << j.dump(2) << "\n";
      }
      if (f == "json")
        body << j.dump();
      else if (f != "text")
        throw UsageError("verify: --format must be json|text");
    } else if (*ratios) {
      std::string f = default_fmt("json");
      char* s = nullptr;
      check(shellar_ratio_report(ra_r, ra_t, ra_n.data(),
                                 static_cast<int>(ra_n.size()), cfg.budget,
                                 ra_exhaustive ? 1 : 0, &s));
      json j = json::parse(take_string(s));
      if (f == "json")
        body << j.dump();
      else if (f == "csv") {
        body << "n,count,ratio,ratio_decimal,limit,gap,gap_decimal\n";
        for (auto& row : j["rows"])
          body << row["n"].get<int>() << ","
               << row["count"].get<std::uint64_t>() << ","
               << row["ratio"].get<std::string>() << ","
               << fixed6(row["ratio_decimal"].get<double>()) << ","
               << row["limit"].get<std::uint64_t>() << ","
               << row["gap"].get<std::string>() << ","
               << fixed6(row["gap_decimal"].get<double>()) << "\n";
      } else if (f == "text") {
        for (auto& row : j["rows"])
          body << "n=" << row["n"].get<int>() << ": count "
               << row["count"].get<std::uint64_t>() << ", ratio "
               << row["ratio"].get<std::string>() << " = "
               << fixed6(row["ratio_decimal"].get<double>()) << ", limit "
               << j["limit"].get<std::uint64_t>() << ", gap "
               << fixed6(row["gap_decimal"].get<double>()) << "\n";
      } else
        throw UsageError("ratios: --format must be json|csv|text");
    }

    write_out(out_path, body.str());
    return g_exit;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
