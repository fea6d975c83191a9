#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepsys/bitset.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/subdivision.hpp"

namespace sepsys {

struct SingleEdge {
  EdgeId id;
};

/// Complete bipartite subgraph on left x right (cross pairs only).
struct BicliqueSides {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

struct EdgeSetMember {
  std::vector<EdgeId> ids;
};

using MemberData = std::variant<SingleEdge, SubdivisionCert, BicliqueSides, EdgeSetMember>;

struct Member {
  MemberData data;
  Bitset edges;  // membership over host edge ids
};

/// Ordered family of subgraphs of one host, each with a precomputed edge
/// bitset. Adding a member validates it against the host.
class SeparatingFamily {
 public:
  SeparatingFamily() = default;
  explicit SeparatingFamily(const Graph& host)
      : edge_count_(static_cast<std::size_t>(host.num_edges())), host_hash_(host_hash_hex(host)) {}

  std::size_t edge_count() const { return edge_count_; }
  const std::string& host_hash() const { return host_hash_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Member>& members() const { return members_; }
  const Member& operator[](std::size_t i) const { return members_[i]; }

  void add_edge(EdgeId id);
  /// Throws std::invalid_argument when the certificate does not verify.
  void add_cert(const Graph& host, SubdivisionCert cert);
  /// Throws std::invalid_argument when a side is empty or a cross pair is missing.
  void add_biclique(const Graph& host, std::vector<Vertex> left, std::vector<Vertex> right);
  void add_edge_set(std::vector<EdgeId> ids);
  void append(const SeparatingFamily& other);
  void erase(std::size_t index) { members_.erase(members_.begin() + static_cast<long>(index)); }

  std::size_t count_certs() const;

  /// Free-form provenance, e.g. "constructor", "ell", "fallback".
  std::map<std::string, std::string> metadata;

 private:
  std::size_t edge_count_ = 0;
  std::string host_hash_;
  std::vector<Member> members_;
};

struct SeparationVerdict {
  bool ok = true;
  /// Lexicographically first ordered pair (e, e') such that no member
  /// contains e and misses e'.
  std::optional<std::pair<EdgeId, EdgeId>> failing_pair;
  explicit operator bool() const { return ok; }
};

/// Bitset over host edges containing exactly `ids`.
Bitset make_edge_set(std::size_t edge_count, const std::vector<EdgeId>& ids);
Bitset all_edges(const Graph& g);

SeparationVerdict check_strong_separation(const Bitset& ground, const SeparatingFamily& fam);
SeparationVerdict check_weak_separation(const Bitset& ground, const SeparatingFamily& fam);

// Family file format:
//   family <host-hash> <count>
//   edge <id> | cert <path> | biclique <u1,u2,...> | <v1,v2,...> | set <id-list>
// Certificates live in their own files; <path> is relative to the family file.

/// Family text plus certificate texts, in member order. cert_names[i] is the
/// <path> token written for the i-th certificate.
struct FamilyText {
  std::string family;
  std::vector<std::string> cert_names;
  std::vector<std::string> certs;
};

FamilyText format_family(const SeparatingFamily& fam, const std::string& cert_prefix = "certs/");
/// Writes the family to `path` and certificates under `path`'s directory.
void write_family(const std::filesystem::path& path, const SeparatingFamily& fam);
/// Reads a family file; certificate paths are resolved against its directory.
/// Members are validated against `host`; the header hash must match it.
SeparatingFamily read_family(const std::filesystem::path& path, const Graph& host);
/// Same, with certificate texts supplied by name.
SeparatingFamily parse_family(const std::string& text, const Graph& host,
                              const std::map<std::string, std::string>& certs);

std::string format_id_list(const std::vector<int>& ids);

/// Re-expresses a family over sub.graph as a family over `host`.
SeparatingFamily lift_family(const Graph& host, const Subgraph& sub, const SeparatingFamily& fam);

}  // namespace sepsys
