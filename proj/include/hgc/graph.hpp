#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hgc/params.hpp"

namespace hgc {

// Endpoint of an edge: an internal vertex 0..V-1 or a hair 0..H-1.
struct Endpoint {
    bool hair = false;
    int idx = 0;

    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

inline Endpoint vx(int i) { return Endpoint{false, i}; }
inline Endpoint hx(int i) { return Endpoint{true, i}; }

// Validation mode: Strict is the genuine complex (internal valence >= 3);
// Enlarged admits uni- and bivalent internal vertices (used only by the
// comparison-map machinery).
enum class Mode { Strict, Enlarged };

// A connected multigraph with decorated univalent hairs. The *listed order*
// of edges, internal vertices and omega-hairs, together with the listed edge
// directions, is the orientation: edges have degree n-1, internal vertices
// degree -n, omega-hairs degree -m; reversing an edge costs (-1)^n and
// permutations cost Koszul signs.
struct HairyGraph {
    int internal_count = 0;
    std::vector<Dec> hairs;
    std::vector<std::pair<Endpoint, Endpoint>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int hair_count() const { return static_cast<int>(hairs.size()); }
    int omega_count() const {
        int c = 0;
        for (Dec d : hairs) c += (d == Dec::Omega);
        return c;
    }
    int count_dec(Dec d) const {
        int c = 0;
        for (Dec x : hairs) c += (x == d);
        return c;
    }
    // First Betti number, hair vertices included.
    int loop_order() const { return edge_count() - (internal_count + hair_count()) + 1; }

    bool operator==(const HairyGraph&) const = default;
};

// (n-1)#E - n#V - m#(omega-hairs); every edge counts, hair edges included.
long degree(const HairyGraph& g, const Parameters& p);

// Throws std::invalid_argument when malformed for the given flavor/mode.
void validate(const HairyGraph& g, Flavor f, Mode mode = Mode::Strict);
bool is_valid(const HairyGraph& g, Flavor f, Mode mode = Mode::Strict);

bool is_connected(const HairyGraph& g);
std::vector<int> valences(const HairyGraph& g);  // internal vertices only; tadpole counts twice
bool has_tadpole(const HairyGraph& g);
bool has_multi_edge(const HairyGraph& g);  // some unordered endpoint pair with multiplicity >= 2

// A relabeling of g: internal vertex i -> perm_v[i], hair j -> perm_h[j].
// Returns the relabeled graph in canonical list layout (edges sorted by
// normalized endpoint pair, directed low->high, stable within parallel
// bundles; hairs listed in new index order) together with the orientation
// sign relating g to it.
std::pair<HairyGraph, int> relabel(const HairyGraph& g, const std::vector<int>& perm_v,
                                   const std::vector<int>& perm_h, const Parameters& p);

// Total-order fingerprint of a *labeled* graph; equal strings iff identical
// presented graphs up to edge-list normalization. Used as the canonical key.
std::string encode(const HairyGraph& g);

// Koszul sign of a permutation where every element has degree parity `odd`:
// sgn(perm) when odd, +1 otherwise. perm maps position -> image.
int permutation_sign(const std::vector<int>& perm);

}  // namespace hgc
