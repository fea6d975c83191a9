#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/subdivision.hpp"
#include "sepsys/tutte.hpp"

namespace sepsys {

struct PipelineConfig {
  /// Constant of the average-degree test. Only consulted with degree_gate.
  double c_balance = 1.0;
  /// Fall back to single edges when average degree <= c (4t+8)^2.
  bool degree_gate = false;
  /// Node budget of the balanced clique-subdivision search.
  std::uint64_t budget = 2'000'000;
  /// Fixed edge f of H; empty selects the lexicographically smallest edge.
  std::optional<EdgeId> fixed_edge;
};

/// Edge of h used as f under cfg.
EdgeId fixed_edge_of(const Graph& h, const PipelineConfig& cfg);

/// h with edge f removed; edge order otherwise kept.
Graph remove_edge(const Graph& h, EdgeId f);

/// Subdivision of h - f inside the complete-pattern cert `kr`: f's lower
/// endpoint goes to u, its upper endpoint to v, and every other vertex of h,
/// in increasing order, to the next unused branch vertex of kr (increasing
/// host id) outside `excluded`. u, v and excluded are host vertices.
/// Throws std::invalid_argument when the placement is impossible.
SubdivisionCert embed_h_minus_f(const SubdivisionCert& kr, const Graph& h, EdgeId f, Vertex u, Vertex v,
                                const std::vector<Vertex>& excluded);

/// Six H-subdivisions built around one cycle. Index conventions: i in {0,1,2}
/// for anchors; pair p in {0,1,2} stands for (0,1), (0,2), (1,2).
struct DerivedGadget {
  std::vector<Vertex> cycle;
  std::array<Vertex, 3> x{};       // anchors on the cycle, in cycle order
  std::array<Vertex, 3> y{};       // landing vertices on kr
  std::array<Path, 3> connector;   // P_i from x_i to y_i
  std::array<EdgeId, 3> q{};       // pattern edge of kr carrying y_i
  std::array<Vertex, 3> u{}, v{};  // per pair
  std::array<std::vector<Vertex>, 3> excluded;
  std::array<Path, 3> arc;         // P_{i,j} from x_i to x_j avoiding x_k
  std::array<Path, 3> arc_alt;     // P'_{i,j} = P_{i,k} P_{k,j}
  std::array<Path, 3> wide;        // u .. y_i P_i x_i P_{i,j} x_j P_j y_j .. v
  std::array<Path, 3> wide_alt;
  /// H_{0,1}, H'_{0,1}, H_{0,2}, H'_{0,2}, H_{1,2}, H'_{1,2}.
  std::vector<SubdivisionCert> certs;
};

static constexpr std::array<std::pair<int, int>, 3> kGadgetPairs{{{0, 1}, {0, 2}, {1, 2}}};

/// Builds the six certificates for `cycle` (vertex sequence, disjoint from
/// kr). g must be 3-connected; throws std::logic_error if routing fails.
DerivedGadget derive_six(const Graph& g, const std::vector<Vertex>& cycle, const SubdivisionCert& kr,
                         const Graph& h, const PipelineConfig& cfg);

/// Cyclic vertex sequence of a K_3-subdivision certificate.
std::vector<Vertex> cycle_of_cert(const SubdivisionCert& cert);

struct QuarterReport {
  int quarter = 0;
  std::size_t ground = 0;        // |E_r|
  std::size_t j_vertices = 0;    // |V(J_r)|
  std::size_t system_size = 0;   // |C_r|
  std::size_t cycles = 0;
  std::size_t single_edges = 0;
};

struct ThreeConnectedResult {
  SeparatingFamily family;
  bool fallback = true;
  /// "degree_gate", "too_few_high_degree", "search_refuted", "search_budget" or empty.
  std::string fallback_reason;
  int ell = 0;
  std::uint64_t search_nodes = 0;
  std::optional<SubdivisionCert> k;
  std::vector<SubdivisionCert> quarters;
  std::vector<QuarterReport> reports;
  std::vector<DerivedGadget> gadgets;
  std::vector<int> gadget_quarter;
};

/// Separating sub(H)-system of a 3-connected graph. Throws
/// std::invalid_argument if g is not 3-connected or h has no edge.
ThreeConnectedResult separate_three_connected(const Graph& g, const Graph& h, const PipelineConfig& cfg = {});

struct BagReport {
  int bag = 0;
  TorsoKind kind = TorsoKind::single_real_edge;
  int vertices = 0;
  int torso_edges = 0;
  bool fallback = true;
  std::string fallback_reason;
  int ell = 0;
  std::size_t system_size = 0;  // sum of |C_r| over quarters
  std::size_t members = 0;      // after realization
};

struct GraphResult {
  SeparatingFamily family;
  TutteDecomposition tutte;
  std::vector<BagReport> bags;
};

/// Separating sub(H)-system of a connected graph, assembled bag by bag along
/// its Tutte decomposition. Throws std::invalid_argument on disconnected or
/// edgeless input.
GraphResult separate_graph(const Graph& g, const Graph& h, const PipelineConfig& cfg = {});

struct BalanceCensus {
  std::size_t single_edges = 0;
  std::size_t balanced = 0;
  std::size_t almost_balanced = 0;
  std::size_t unbalanced = 0;
  std::size_t other = 0;
};

BalanceCensus balance_census(const SeparatingFamily& fam);

/// key=value lines: n, edges, h_vertices, h_edges, bags, fallback, ell,
/// system_size, family_size, family_per_n, family_per_h2n and the census.
std::string format_metrics(const Graph& g, const Graph& h, const GraphResult& r);

}  // namespace sepsys
