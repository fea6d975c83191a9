#pragma once

#include <cstdint>
#include <random>

#include "sepsys/graph.hpp"

namespace sepsys::gen {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);  // left 0..a-1, right a..a+b-1
Graph grid(int rows, int cols);
Graph prism();     // C_3 x K_2
Graph petersen();
/// Two degree-3 vertices 0 and 1 joined by three paths of length 2.
Graph theta();
/// Triangles 0-1-2 and 0-1-3 sharing the edge 01.
Graph two_triangles();

/// Uniform in [0, 1) from the top 53 bits of a 64-bit Mersenne twister draw;
/// identical across standard libraries.
double unit_draw(std::mt19937_64& rng);

Graph gnp(int n, double p, std::uint64_t seed);
/// Random labelled tree (random attachment) plus independent extra edges with
/// probability p; always connected.
Graph random_connected(int n, double p, std::uint64_t seed);
Graph random_tree(int n, std::uint64_t seed);

/// Disjoint union of g and a path of `length` new vertices hanging off `attach`.
Graph with_pendant_path(const Graph& g, Vertex attach, int length);

}  // namespace sepsys::gen
