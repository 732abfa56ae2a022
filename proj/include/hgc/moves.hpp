#pragma once

#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

// Elementary graph moves with the orientation sign of the produced
// presentation relative to the input one.
//
// Sign discipline: new generators (edge, vertex, product omega-hair) are
// prepended to their blocks of the orientation word, removed omega-hairs are
// extracted to the front and deleted. With the degree parities (edge: n-1,
// vertex: n, omega-hair: m) this collapses to the closed forms used below;
// consistency is exercised by the d^2 = 0 sweeps.
struct Move {
    int sign = 1;
    HairyGraph graph;
};

// Splits an internal vertex into old/new joined by a fresh edge directed
// old->new; each unordered distribution of the incident half-edges is
// produced once. min_block = 2 is the genuine complex; 0 admits the
// enlarged splits that create uni/bivalent vertices.
std::vector<Move> split_moves(const HairyGraph& g, int min_block);

// Merges a hair subset S into a fresh internal vertex carrying one hair
// decorated by the fused product (subsets with zero product are skipped);
// the fresh edge is directed hair->vertex. min_size = 2 is the genuine
// differential piece, 1 adds the bivalent-creating terms. A consumed
// omega-hair at omega-rank i contributes (-1)^(m*i).
std::vector<Move> join_moves(const HairyGraph& g, const Parameters& p, Flavor f, int min_size);

// One new univalent internal vertex hung off each internal vertex.
std::vector<Move> attach_moves(const HairyGraph& g);

// One new bivalent internal vertex inserted on each omega-hair edge.
std::vector<Move> subdivide_moves(const HairyGraph& g);

// Deletes the hair vertices listed in `hair_to_vertex` and re-glues each
// hair edge to the chosen internal vertex. Pure re-gluing: sign +1.
HairyGraph reconnect_apply(const HairyGraph& g,
                           const std::vector<std::pair<int, int>>& hair_to_vertex);

// All ways of reconnecting the hairs of S to internal vertices, excluding
// each hair's own attachment vertex (no tadpoles forming).
std::vector<HairyGraph> reconnect_ways(const HairyGraph& g, const std::vector<int>& S);

// Attach a univalent vertex to internal vertex v, then pull the hairs of J
// onto the new vertex.
Move attach_with_hairs(const HairyGraph& g, int v, const std::vector<int>& J);

// Subdivide the edge of omega-hair `h`, then pull the hairs of J onto the
// new vertex.
Move subdivide_with_hairs(const HairyGraph& g, int h, const std::vector<int>& J);

// Hair index of the unique edge endpoint partner; internal attachment
// vertex of a hair, or -1 when it hangs on another hair.
int hair_edge_index(const HairyGraph& g, int hair);
int hair_attachment(const HairyGraph& g, int hair);

}  // namespace hgc
