#include "sepsys/family.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sepsys {

void SeparatingFamily::add_edge(EdgeId id) {
  if (id < 0 || static_cast<std::size_t>(id) >= edge_count_)
    throw std::invalid_argument("edge id " + std::to_string(id) + " out of range");
  Bitset b(edge_count_);
  b.set(static_cast<std::size_t>(id));
  members_.push_back({SingleEdge{id}, std::move(b)});
}

void SeparatingFamily::add_cert(const Graph& host, SubdivisionCert cert) {
  if (auto v = verify_subdivision(host, cert); !v)
    throw std::invalid_argument("invalid subdivision certificate: " + v.reason);
  Bitset b = make_edge_set(edge_count_, cert.host_edges(host));
  members_.push_back({std::move(cert), std::move(b)});
}

void SeparatingFamily::add_biclique(const Graph& host, std::vector<Vertex> left,
                                    std::vector<Vertex> right) {
  if (left.empty() || right.empty()) throw std::invalid_argument("biclique side is empty");
  Bitset b(edge_count_);
  for (Vertex u : left)
    for (Vertex v : right) {
      auto e = host.edge_id(u, v);
      if (!e)
        throw std::invalid_argument("biclique pair " + std::to_string(u) + "-" + std::to_string(v) +
                                    " is not a host edge");
      b.set(static_cast<std::size_t>(*e));
    }
  members_.push_back({BicliqueSides{std::move(left), std::move(right)}, std::move(b)});
}

void SeparatingFamily::add_edge_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Bitset b = make_edge_set(edge_count_, ids);
  members_.push_back({EdgeSetMember{std::move(ids)}, std::move(b)});
}

void SeparatingFamily::append(const SeparatingFamily& other) {
  if (other.edge_count_ != edge_count_) throw std::invalid_argument("families over different hosts");
  members_.insert(members_.end(), other.members_.begin(), other.members_.end());
}

std::size_t SeparatingFamily::count_certs() const {
  return static_cast<std::size_t>(std::count_if(members_.begin(), members_.end(), [](const Member& m) {
    return std::holds_alternative<SubdivisionCert>(m.data);
  }));
}

Bitset make_edge_set(std::size_t edge_count, const std::vector<EdgeId>& ids) {
  Bitset b(edge_count);
  for (EdgeId e : ids) {
    if (e < 0 || static_cast<std::size_t>(e) >= edge_count)
      throw std::invalid_argument("edge id " + std::to_string(e) + " out of range");
    b.set(static_cast<std::size_t>(e));
  }
  return b;
}

Bitset all_edges(const Graph& g) {
  Bitset b(static_cast<std::size_t>(g.num_edges()));
  b.set_all();
  return b;
}

namespace {

// For each ground edge e, the intersection of all members containing e,
// restricted to the ground set. With no such member it is the whole ground.
std::vector<Bitset> coverage_intersections(const Bitset& ground, const SeparatingFamily& fam) {
  const std::size_t q = ground.size();
  std::vector<std::vector<std::size_t>> containing(q);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Bitset& b = fam[i].edges;
    for (auto e = b.find_first(); e != Bitset::npos; e = b.find_next(e))
      if (ground.test(e)) containing[e].push_back(i);
  }
  std::vector<Bitset> out(q);
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e)) {
    Bitset inter = ground;
    for (std::size_t i : containing[e]) inter &= fam[i].edges;
    out[e] = std::move(inter);
  }
  return out;
}

void require_compatible(const Bitset& ground, const SeparatingFamily& fam) {
  if (ground.size() != fam.edge_count())
    throw std::invalid_argument("ground set and family are over different hosts");
}

}  // namespace

SeparationVerdict check_strong_separation(const Bitset& ground, const SeparatingFamily& fam) {
  require_compatible(ground, fam);
  const std::size_t q = ground.size();
  std::vector<std::vector<std::size_t>> containing(q);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Bitset& b = fam[i].edges;
    for (auto e = b.find_first(); e != Bitset::npos; e = b.find_next(e))
      if (ground.test(e)) containing[e].push_back(i);
  }
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e)) {
    Bitset inter = ground;
    for (std::size_t i : containing[e]) inter &= fam[i].edges;
    inter.reset(e);
    if (auto other = inter.find_first(); other != Bitset::npos)
      return {false, std::make_pair(static_cast<EdgeId>(e), static_cast<EdgeId>(other))};
  }
  return {};
}

SeparationVerdict check_weak_separation(const Bitset& ground, const SeparatingFamily& fam) {
  require_compatible(ground, fam);
  auto inter = coverage_intersections(ground, fam);
  for (auto e = ground.find_first(); e != Bitset::npos; e = ground.find_next(e)) {
    const Bitset& ie = inter[e];
    for (auto f = ie.find_next(e); f != Bitset::npos; f = ie.find_next(f))
      if (inter[f].test(e))
        return {false, std::make_pair(static_cast<EdgeId>(e), static_cast<EdgeId>(f))};
  }
  return {};
}

std::string format_id_list(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

FamilyText format_family(const SeparatingFamily& fam, const std::string& cert_prefix) {
  FamilyText out;
  std::ostringstream os;
  os << "family " << fam.host_hash() << ' ' << fam.size() << '\n';
  for (const auto& m : fam.members()) {
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, SingleEdge>) {
            os << "edge " << d.id << '\n';
          } else if constexpr (std::is_same_v<T, SubdivisionCert>) {
            std::string name = cert_prefix + std::to_string(out.certs.size()) + ".cert";
            os << "cert " << name << '\n';
            out.cert_names.push_back(name);
            out.certs.push_back(format_cert(d));
          } else if constexpr (std::is_same_v<T, BicliqueSides>) {
            os << "biclique " << format_id_list(d.left) << " | " << format_id_list(d.right) << '\n';
          } else {
            os << "set";
            if (!d.ids.empty()) os << ' ' << format_id_list(d.ids);
            os << '\n';
          }
        },
        m.data);
  }
  out.family = os.str();
  return out;
}

void write_family(const std::filesystem::path& path, const SeparatingFamily& fam) {
  const std::string prefix = path.filename().string() + ".certs/";
  auto text = format_family(fam, prefix);
  const auto dir = path.parent_path();
  if (!text.certs.empty()) {
    auto cert_dir = dir / (path.filename().string() + ".certs");
    std::filesystem::remove_all(cert_dir);
    std::filesystem::create_directories(cert_dir);
  }
  for (std::size_t i = 0; i < text.certs.size(); ++i) {
    std::ofstream c(dir / text.cert_names[i], std::ios::binary);
    c << text.certs[i];
    if (!c) throw std::runtime_error("cannot write " + (dir / text.cert_names[i]).string());
  }
  std::ofstream f(path, std::ios::binary);
  f << text.family;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

namespace {

std::vector<int> parse_id_list(const std::string& tok, int lineno) {
  std::vector<int> out;
  if (tok.empty()) return out;
  std::istringstream ss(tok);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed id '" + part + "'");
    }
  }
  return out;
}

template <class CertSource>
SeparatingFamily parse_family_impl(std::istream& in, const Graph& host, CertSource&& cert_text) {
  SeparatingFamily fam(host);
  std::string line;
  int lineno = 0;
  long long expected = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    std::string kw;
    ss >> kw;
    if (expected < 0) {
      std::string hash;
      std::string rest;
      if (kw != "family" || !(ss >> hash >> expected) || (ss >> rest) || expected < 0)
        throw ParseError(lineno, "expected \"family <host-hash> <count>\"");
      if (hash != fam.host_hash())
        throw ParseError(lineno, "host hash " + hash + " does not match graph " + fam.host_hash());
      continue;
    }
    std::string rest;
    try {
      if (kw == "edge") {
        long long id;
        if (!(ss >> id) || (ss >> rest)) throw ParseError(lineno, "expected \"edge <id>\"");
        fam.add_edge(static_cast<EdgeId>(id));
      } else if (kw == "cert") {
        std::string name;
        if (!(ss >> name) || (ss >> rest)) throw ParseError(lineno, "expected \"cert <path>\"");
        SubdivisionCert cert;
        try {
          cert = parse_cert(cert_text(name, lineno));
        } catch (const ParseError& e) {
          throw ParseError(lineno, "in certificate " + name + ": " + e.what());
        }
        fam.add_cert(host, std::move(cert));
      } else if (kw == "biclique") {
        std::string left, bar, right;
        if (!(ss >> left >> bar >> right) || bar != "|" || (ss >> rest))
          throw ParseError(lineno, "expected \"biclique <list> | <list>\"");
        fam.add_biclique(host, parse_id_list(left, lineno), parse_id_list(right, lineno));
      } else if (kw == "set") {
        std::string ids;
        ss >> ids;
        if (ss >> rest) throw ParseError(lineno, "expected \"set <id-list>\"");
        fam.add_edge_set(parse_id_list(ids, lineno));
      } else {
        throw ParseError(lineno, "unknown member kind '" + kw + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (expected < 0) throw ParseError(lineno, "missing family header");
  if (static_cast<long long>(fam.size()) != expected)
    throw ParseError(lineno, "header announces " + std::to_string(expected) + " members, found " +
                                 std::to_string(fam.size()));
  return fam;
}

}  // namespace

SeparatingFamily read_family(const std::filesystem::path& path, const Graph& host) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const auto dir = path.parent_path();
  return parse_family_impl(in, host, [&](const std::string& name, int lineno) {
    std::ifstream c(dir / name, std::ios::binary);
    if (!c) throw ParseError(lineno, "cannot open certificate " + (dir / name).string());
    std::ostringstream buf;
    buf << c.rdbuf();
    return buf.str();
  });
}

SeparatingFamily parse_family(const std::string& text, const Graph& host,
                              const std::map<std::string, std::string>& certs) {
  std::istringstream in(text);
  return parse_family_impl(in, host, [&](const std::string& name, int lineno) {
    auto it = certs.find(name);
    if (it == certs.end()) throw ParseError(lineno, "unknown certificate " + name);
    return it->second;
  });
}

SeparatingFamily lift_family(const Graph& host, const Subgraph& sub, const SeparatingFamily& fam) {
  SeparatingFamily out(host);
  out.metadata = fam.metadata;
  auto vmap = [&](std::vector<Vertex> vs) {
    for (auto& v : vs) v = sub.parent_vertex[v];
    return vs;
  };
  for (const auto& m : fam.members()) {
    std::visit(
        [&](const auto& d) {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, SingleEdge>) {
            out.add_edge(sub.parent_edge[d.id]);
          } else if constexpr (std::is_same_v<T, SubdivisionCert>) {
            SubdivisionCert c{d.pattern, vmap(d.branch_vertices), {}};
            for (const auto& p : d.branch_paths) c.branch_paths.push_back(Path{vmap(p.vertices)});
            out.add_cert(host, std::move(c));
          } else if constexpr (std::is_same_v<T, BicliqueSides>) {
            out.add_biclique(host, vmap(d.left), vmap(d.right));
          } else {
            std::vector<EdgeId> ids;
            for (EdgeId e : d.ids) ids.push_back(sub.parent_edge[e]);
            out.add_edge_set(std::move(ids));
          }
        },
        m.data);
  }
  return out;
}

}  // namespace sepsys
