#pragma once

#include <vector>

#include "sepsys/bitset.hpp"
#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/subdivision.hpp"

namespace sepsys {

/// K_3-subdivision certificate for the closed walk cycle[0], ..., cycle.back(),
/// cycle[0]. Branch vertices sit at positions 0, L/3 and 2L/3.
SubdivisionCert cycle_cert(const std::vector<Vertex>& cycle);

/// Family of cycles (as K_3 certificates) and single edges of g that strongly
/// separates `ground`. Cycles come from a pool of fundamental cycles and
/// shortest cycles through each edge; they are picked greedily by the number
/// of still-unseparated ordered pairs they resolve, ties going to shorter
/// cycles and then to smaller edge-id sequences. Remaining pairs are settled
/// by single edges. Never larger than |ground|.
SeparatingFamily build_sub_k3_system(const Graph& g, const Bitset& ground);

}  // namespace sepsys
