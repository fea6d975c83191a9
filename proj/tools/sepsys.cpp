#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepsys/bipartite.hpp"
#include "sepsys/blowup.hpp"
#include "sepsys/connectivity.hpp"
#include "sepsys/cycles.hpp"
#include "sepsys/family.hpp"
#include "sepsys/generators.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/pipeline.hpp"
#include "sepsys/tutte.hpp"

namespace fs = std::filesystem;
using namespace sepsys;

namespace {

constexpr int kOk = 0, kUsage = 1, kFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::uint64_t budget = 2'000'000;
  std::optional<double> c_balance;
  std::string out;
  std::string format = "text";
  std::string command_line;
};

class Report {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    lines_.emplace_back(key, s.str());
  }
  void print(std::ostream& os) const {
    for (const auto& [k, v] : lines_) os << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph read_graph(const std::string& path) {
  try {
    return parse_edge_list(read_text(path));
  } catch (const ParseError& e) {
    throw UsageError((path.empty() || path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int parse_positive(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v < 1) throw UsageError("bad " + what + ": " + s);
  return v;
}

// Named patterns (k<n>, p<n>, c<n>, s<n>) or an edge-list file.
Graph load_pattern(const std::string& spec) {
  if (spec.size() >= 2 && !fs::exists(spec)) {
    const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(spec[0])));
    const std::string rest = spec.substr(1);
    if (rest.find_first_not_of("0123456789") == std::string::npos) {
      const int n = parse_positive(rest, "pattern size");
      switch (kind) {
        case 'k': return gen::complete(n);
        case 'p': return gen::path(n);
        case 'c': return gen::cycle(n);
        case 's': return gen::star(n);
        default: break;
      }
    }
  }
  if (!fs::exists(spec)) throw UsageError("unknown pattern " + spec);
  return read_graph(spec);
}

Bitset load_ground(const Graph& g, const std::string& spec) {
  if (spec == "all") return all_edges(g);
  std::istringstream in(read_text(spec));
  std::vector<EdgeId> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      long v = -1;
      try {
        v = std::stol(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || v < 0 || v >= g.num_edges())
        throw ParseError(lineno, spec + ": bad edge id " + tok);
      ids.push_back(static_cast<EdgeId>(v));
    }
  }
  return make_edge_set(static_cast<std::size_t>(g.num_edges()), ids);
}

// Serializes the family and parses it back, from disk when an output path is
// given, so that every verdict is computed on the artifact.
SeparatingFamily round_trip(const SeparatingFamily& fam, const Graph& host, const std::string& out) {
  if (!out.empty()) {
    write_family(out, fam);
    return read_family(out, host);
  }
  const std::string prefix = "mem.certs/";
  auto text = format_family(fam, prefix);
  std::map<std::string, std::string> certs;
  for (std::size_t i = 0; i < text.certs.size(); ++i) certs[text.cert_names[i]] = text.certs[i];
  return parse_family(text.family, host, certs);
}

void add_separation(Report& r, const char* key, const SeparationVerdict& v, const Graph& g) {
  r.add(key, v.ok ? "pass" : "fail");
  if (v.failing_pair) {
    const auto& a = g.edge(v.failing_pair->first);
    const auto& b = g.edge(v.failing_pair->second);
    std::ostringstream s;
    s << v.failing_pair->first << '(' << a.u << ' ' << a.v << ")," << v.failing_pair->second << '(' << b.u << ' '
      << b.v << ')';
    r.add("failing_pair", s.str());
  }
}

std::string ratio(double a, double b) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(4);
  s << (b > 0 ? a / b : 0.0);
  return s.str();
}

// ---- gen -------------------------------------------------------------------

int run_gen(const Options& o, const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("gen needs a generator name");
  const std::string& kind = args[0];
  auto need = [&](std::size_t k) {
    if (args.size() != k + 1) throw UsageError("gen " + kind + " takes " + std::to_string(k) + " argument(s)");
  };
  Graph g;
  if (kind == "complete") {
    need(1);
    g = gen::complete(parse_positive(args[1], "n"));
  } else if (kind == "cycle") {
    need(1);
    g = gen::cycle(parse_positive(args[1], "n"));
  } else if (kind == "path") {
    need(1);
    g = gen::path(parse_positive(args[1], "n"));
  } else if (kind == "tree") {
    need(1);
    g = gen::random_tree(parse_positive(args[1], "n"), o.seed);
  } else if (kind == "random" || kind == "gnp") {
    need(2);
    double p = 0;
    try {
      p = std::stod(args[2]);
    } catch (const std::exception&) {
      throw UsageError("bad probability " + args[2]);
    }
    if (p < 0 || p > 1) throw UsageError("probability must lie in [0, 1]");
    const int n = parse_positive(args[1], "n");
    g = kind == "random" ? gen::random_connected(n, p, o.seed) : gen::gnp(n, p, o.seed);
  } else if (kind == "biclique") {
    if (args.size() != 2 && args.size() != 3) throw UsageError("gen biclique takes 1 or 2 arguments");
    const int a = parse_positive(args[1], "side");
    g = gen::complete_bipartite(a, args.size() == 3 ? parse_positive(args[2], "side") : a);
  } else if (kind == "blowup") {
    need(2);
    g = build_blowup(load_pattern(args[1]), parse_positive(args[2], "class size")).host;
  } else if (kind == "grid") {
    need(2);
    g = gen::grid(parse_positive(args[1], "rows"), parse_positive(args[2], "cols"));
  } else if (kind == "prism") {
    need(0);
    g = gen::prism();
  } else if (kind == "petersen") {
    need(0);
    g = gen::petersen();
  } else if (kind == "theta") {
    need(0);
    g = gen::theta();
  } else if (kind == "two-triangles") {
    need(0);
    g = gen::two_triangles();
  } else {
    throw UsageError("unknown generator " + kind);
  }
  write_text(o.out, format_edge_list(g));
  return kOk;
}

// ---- decompose -------------------------------------------------------------

int run_decompose(const Options& o, const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g = read_graph(input);
  if (!is_connected(g) || g.num_vertices() < 2) throw UsageError("decompose needs a connected graph on >= 2 vertices");
  auto d = build_tutte(g);
  auto v = verify_tutte(g, d);
  if (o.format == "dot") {
    write_text(o.out, tutte_to_dot(d));
  } else if (!o.out.empty()) {
    write_text(o.out, format_tutte(d));
  }
  Report r;
  r.add("command", o.command_line);
  r.add("n", g.num_vertices());
  r.add("edges", g.num_edges());
  r.add("bags", d.size());
  r.add("bag_size_sum", d.total_size());
  int counts[3] = {0, 0, 0};
  for (const auto& b : d.bags) ++counts[static_cast<int>(b.kind)];
  for (auto k : {TorsoKind::three_connected, TorsoKind::cycle, TorsoKind::single_real_edge})
    r.add(std::string("bags_") + to_string(k), counts[static_cast<int>(k)]);
  r.add("verify", v.ok ? "pass" : "fail");
  if (!v.ok) r.add("violated", v.clause + ": " + v.detail);
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  if (o.format == "text" && o.out.empty()) std::cout << format_tutte(d);
  r.print(o.format == "dot" && o.out.empty() ? std::cerr : std::cout);
  return v.ok ? kOk : kFailed;
}

// ---- separate --------------------------------------------------------------

int run_separate(const Options& o, const std::string& pattern, const std::string& input) {
  auto t0 = std::chrono::steady_clock::now();
  Graph h = load_pattern(pattern);
  Graph g = read_graph(input);
  PipelineConfig cfg;
  cfg.budget = o.budget;
  if (o.c_balance) {
    cfg.c_balance = *o.c_balance;
    cfg.degree_gate = true;
  }
  auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(comps.count));
  for (Vertex v = 0; v < g.num_vertices(); ++v) groups[comps.id[v]].push_back(v);

  SeparatingFamily fam(g);
  std::string metrics;
  std::size_t system_size = 0, bags = 0, fallback_bags = 0;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() < 2) continue;
    auto sub = induced_subgraph(g, groups[c]);
    auto res = separate_graph(sub.graph, h, cfg);
    fam.append(lift_family(g, sub, res.family));
    for (const auto& b : res.bags) {
      system_size += b.system_size;
      fallback_bags += b.fallback ? 1 : 0;
    }
    bags += res.bags.size();
    if (groups.size() > 1) metrics += "component=" + std::to_string(c) + "\n";
    metrics += format_metrics(sub.graph, h, res);
  }
  fam.metadata["constructor"] = "pipeline";

  auto back = round_trip(fam, g, o.out);
  if (!o.out.empty()) write_text(o.out + ".metrics", metrics);
  auto strong = check_strong_separation(all_edges(g), back);
  auto census = balance_census(back);

  Report r;
  r.add("command", o.command_line);
  r.add("n", g.num_vertices());
  r.add("edges", g.num_edges());
  r.add("components", comps.count);
  r.add("h_vertices", h.num_vertices());
  r.add("h_edges", h.num_edges());
  r.add("bags", bags);
  r.add("fallback_bags", fallback_bags);
  r.add("system_size", system_size);
  r.add("family_size", back.size());
  r.add("certs", back.count_certs());
  r.add("single_edges", census.single_edges);
  r.add("almost_balanced", census.almost_balanced + census.balanced);
  r.add("family_per_n", ratio(static_cast<double>(back.size()), g.num_vertices()));
  r.add("family_per_h2n",
        ratio(static_cast<double>(back.size()), static_cast<double>(h.num_vertices()) * h.num_vertices() * g.num_vertices()));
  r.add("certs_valid", "pass");
  add_separation(r, "strong", strong, g);
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.print(std::cout);
  return strong.ok ? kOk : kFailed;
}

// ---- cycles ----------------------------------------------------------------

int run_cycles(const Options& o, const std::string& input, const std::string& ground_spec) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g = read_graph(input);
  Bitset ground = load_ground(g, ground_spec);
  auto fam = build_sub_k3_system(g, ground);
  auto back = round_trip(fam, g, o.out);
  auto strong = check_strong_separation(ground, back);
  Report r;
  r.add("command", o.command_line);
  r.add("n", g.num_vertices());
  r.add("edges", g.num_edges());
  r.add("ground", ground.count());
  r.add("family_size", back.size());
  r.add("certs", back.count_certs());
  r.add("family_per_n", ratio(static_cast<double>(back.size()), g.num_vertices()));
  r.add("family_per_41n", ratio(static_cast<double>(back.size()), 41.0 * g.num_vertices()));
  r.add("within_edge_count", back.size() <= ground.count() ? "yes" : "no");
  add_separation(r, "strong", strong, g);
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.print(std::cout);
  return strong.ok ? kOk : kFailed;
}

// ---- bipartite -------------------------------------------------------------

int run_bipartite(const Options& o, const std::vector<std::string>& args, int s_min) {
  auto t0 = std::chrono::steady_clock::now();
  if (args.empty()) throw UsageError("bipartite needs a mode: knn, cover, tiling or system");
  const std::string& mode = args[0];
  Report r;
  r.add("command", o.command_line);
  bool ok = true;
  if (mode == "knn") {
    if (args.size() != 2) throw UsageError("bipartite knn takes n");
    const int n = parse_positive(args[1], "n");
    auto fam = build_knn_system(n);
    Graph host = gen::complete_bipartite(n, n);
    if (!o.out.empty()) write_text(o.out + ".graph", format_edge_list(host));
    auto back = round_trip(fam, host, o.out);
    auto strong = check_strong_separation(all_edges(host), back);
    const int bound = n <= 1 ? 0 : 4 * static_cast<int>(std::ceil(std::log2(n)));
    r.add("n", n);
    r.add("edges", host.num_edges());
    r.add("family_size", back.size());
    r.add("bound", bound);
    r.add("within_bound", static_cast<int>(back.size()) <= bound ? "yes" : "no");
    add_separation(r, "strong", strong, host);
    ok = strong.ok && static_cast<int>(back.size()) <= bound;
  } else if (mode == "cover" || mode == "system") {
    if (args.size() > 2) throw UsageError("bipartite " + mode + " takes an optional graph file");
    Graph g = read_graph(args.size() == 2 ? args[1] : "-");
    r.add("n", g.num_vertices());
    r.add("edges", g.num_edges());
    if (mode == "cover") {
      auto cover = extract_biclique_cover(g, s_min);
      std::ostringstream body;
      std::vector<char> covered(static_cast<std::size_t>(g.num_edges()), 0);
      int hits = 0;
      for (const auto& b : cover.bicliques) {
        std::vector<int> l(b.left.begin(), b.left.end()), rr(b.right.begin(), b.right.end());
        body << "biclique " << format_id_list(l) << " | " << format_id_list(rr) << '\n';
        for (Vertex a : b.left)
          for (Vertex c : b.right)
            if (auto e = g.edge_id(a, c)) {
              hits += covered[*e] ? 0 : 1;
              covered[*e] = 1;
            }
      }
      for (EdgeId e : cover.leftovers) {
        body << "leftover " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
        hits += covered[e] ? 0 : 1;
        covered[e] = 1;
      }
      if (!o.out.empty()) write_text(o.out, body.str());
      r.add("bicliques", cover.bicliques.size());
      r.add("leftovers", cover.leftovers.size());
      ok = hits == g.num_edges();
      r.add("covers_all_edges", ok ? "pass" : "fail");
    } else {
      auto fam = build_biclique_separating_system(g, s_min);
      auto back = round_trip(fam, g, o.out);
      auto strong = check_strong_separation(all_edges(g), back);
      r.add("family_size", back.size());
      r.add("family_per_n", ratio(static_cast<double>(back.size()), g.num_vertices()));
      add_separation(r, "strong", strong, g);
      ok = strong.ok;
    }
  } else if (mode == "tiling") {
    if (args.size() != 4) throw UsageError("bipartite tiling takes n t s");
    const int n = parse_positive(args[1], "n"), t = parse_positive(args[2], "t"), s = parse_positive(args[3], "s");
    auto tiles = tile_biclique(n, t, s);
    std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
    std::ostringstream body;
    for (const auto& b : tiles) {
      std::vector<int> l(b.left.begin(), b.left.end()), rr(b.right.begin(), b.right.end());
      body << "tile " << format_id_list(l) << " | " << format_id_list(rr) << '\n';
      for (Vertex a : b.left)
        for (Vertex c : b.right) covered[static_cast<std::size_t>(a) * n + (c - n)] = 1;
    }
    if (!o.out.empty()) write_text(o.out, body.str());
    ok = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    r.add("n", n);
    r.add("tiles", tiles.size());
    r.add("covers_all_edges", ok ? "pass" : "fail");
  } else {
    throw UsageError("unknown bipartite mode " + mode);
  }
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.print(std::cout);
  return ok ? kOk : kFailed;
}

// ---- blowup-sep ------------------------------------------------------------

int run_blowup_sep(const Options& o, const std::string& spec) {
  auto t0 = std::chrono::steady_clock::now();
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw UsageError("--blowup expects H:l");
  Graph h = load_pattern(spec.substr(0, colon));
  const int l = parse_positive(spec.substr(colon + 1), "class size");
  auto sep = build_blowup_h_separator(h, l, o.seed);
  const Graph& host = sep.blowup.host;
  if (!o.out.empty()) write_text(o.out + ".graph", format_edge_list(host));
  auto back = round_trip(sep.family, host, o.out);
  auto v = check_h_separation(host, h, back);
  Report r;
  r.add("command", o.command_line);
  r.add("n", host.num_vertices());
  r.add("edges", host.num_edges());
  r.add("class_size", l);
  r.add("copies", v.copies);
  r.add("tier", sep.tier);
  r.add("family_size", back.size());
  r.add("family_per_log2n", ratio(static_cast<double>(back.size()), l > 1 ? std::log2(l) : 1.0));
  r.add("h_separation", v.ok ? "pass" : "fail");
  if (v.failing_pair) r.add("failing_pair", std::to_string(v.failing_pair->first) + "," + std::to_string(v.failing_pair->second));
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.print(std::cout);
  return v.ok ? kOk : kFailed;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const Options& o, const std::string& graph_file, const std::string& family_file,
               const std::string& ground_spec, bool weak, const std::string& pattern) {
  auto t0 = std::chrono::steady_clock::now();
  Graph g = read_graph(graph_file);
  if (!fs::exists(family_file)) throw UsageError("cannot open " + family_file);
  auto fam = read_family(family_file, g);
  Report r;
  r.add("command", o.command_line);
  r.add("n", g.num_vertices());
  r.add("edges", g.num_edges());
  r.add("family_size", fam.size());
  r.add("certs", fam.count_certs());
  r.add("certs_valid", "pass");
  bool ok = true;
  if (!pattern.empty()) {
    auto v = check_h_separation(g, load_pattern(pattern), fam);
    r.add("copies", v.copies);
    r.add("h_separation", v.ok ? "pass" : "fail");
    if (v.failing_pair)
      r.add("failing_pair", std::to_string(v.failing_pair->first) + "," + std::to_string(v.failing_pair->second));
    ok = v.ok;
  } else {
    Bitset ground = load_ground(g, ground_spec);
    r.add("ground", ground.count());
    auto v = weak ? check_weak_separation(ground, fam) : check_strong_separation(ground, fam);
    add_separation(r, weak ? "weak" : "strong", v, g);
    ok = v.ok;
  }
  r.add("wall_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count());
  r.print(std::cout);
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating path systems: constructions and verifiers"};
  app.require_subcommand(1);
  Options o;
  for (int i = 0; i < argc; ++i) o.command_line += (i ? " " : "") + std::string(i ? argv[i] : "sepsys");
  double c_balance = 0;
  app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--budget", o.budget, "Node budget of the subdivision search")->capture_default_str();
  auto* cb = app.add_option("--c-balance", c_balance, "Enable the degree gate with this constant");
  app.add_option("--out", o.out, "Output path (family, graph or dump)");
  app.add_option("--format", o.format, "Output format for decompose")->check(CLI::IsMember({"text", "dot"}));

  std::vector<std::string> gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph: complete N | cycle N | path N | tree N | random N P | "
                                            "gnp N P | biclique A [B] | blowup H L | grid R C | prism | petersen | "
                                            "theta | two-triangles");
  gen_cmd->add_option("args", gen_args)->required();

  std::string input = "-";
  auto* dec_cmd = app.add_subcommand("decompose", "Tutte decomposition dump and verification");
  dec_cmd->add_option("graph", input, "Edge-list file (default stdin)");

  std::string pattern;
  auto* sep_cmd = app.add_subcommand("separate", "Strongly separating family via subdivisions of H");
  sep_cmd->add_option("--pattern", pattern, "Pattern H: k<n>, p<n>, c<n>, s<n> or an edge-list file")->required();
  sep_cmd->add_option("graph", input, "Edge-list file (default stdin)");

  std::string ground = "all";
  auto* cyc_cmd = app.add_subcommand("cycles", "Separating system of cycle subdivisions");
  cyc_cmd->add_option("graph", input, "Edge-list file (default stdin)");
  cyc_cmd->add_option("--ground", ground, "all, or a file of edge ids");

  std::vector<std::string> bip_args;
  int s_min = 2;
  auto* bip_cmd = app.add_subcommand("bipartite", "knn N | cover [G] | system [G] | tiling N T S");
  bip_cmd->add_option("args", bip_args)->required();
  bip_cmd->add_option("--s-min", s_min, "Smallest biclique side in a cover")->capture_default_str();

  std::string blowup;
  auto* blo_cmd = app.add_subcommand("blowup-sep", "H-separating family of a balanced blowup");
  blo_cmd->add_option("--blowup", blowup, "H:l with H a pattern name or edge-list file")->required();

  std::string family_file;
  bool weak = false;
  std::string h_pattern;
  auto* ver_cmd = app.add_subcommand("verify", "Re-check a family file against its host graph");
  ver_cmd->add_option("graph", input, "Edge-list file of the host")->required();
  ver_cmd->add_option("family", family_file, "Family file")->required();
  ver_cmd->add_option("--ground", ground, "all, or a file of edge ids");
  ver_cmd->add_flag("--weak", weak, "Check weak instead of strong separation");
  ver_cmd->add_option("--pattern", h_pattern, "Check H-separation for this pattern instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (cb->count() > 0) o.c_balance = c_balance;

  try {
    if (*gen_cmd) return run_gen(o, gen_args);
    if (*dec_cmd) return run_decompose(o, input);
    if (*sep_cmd) return run_separate(o, pattern, input);
    if (*cyc_cmd) return run_cycles(o, input, ground);
    if (*bip_cmd) return run_bipartite(o, bip_args, s_min);
    if (*blo_cmd) return run_blowup_sep(o, blowup);
    if (*ver_cmd) return run_verify(o, input, family_file, ground, weak, h_pattern);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
