#pragma once

#include <string>
#include <vector>

#include "hgc/graph.hpp"

namespace hgc {

// Canonical representative plus the orientation sign carrying the input to
// it. sign == 0 exactly when the graph admits an automorphism acting by -1
// on its orientation, i.e. the element is zero in the complex.
struct SignedCanonicalGraph {
    HairyGraph graph;
    int sign = 0;

    bool is_zero() const { return sign == 0; }
};

// Canonical labeling by branch-and-bound over the lexicographically least
// adjacency encoding; exact, with automorphism sign scan for zero detection.
SignedCanonicalGraph canonicalize(const HairyGraph& g, const Parameters& p, Flavor f,
                                  Mode mode = Mode::Strict);

// Same contract, implemented by exhausting every decoration-preserving
// relabeling. Test oracle; requires <= 6 internal vertices and <= 8 hairs.
SignedCanonicalGraph canonicalize_brute_force(const HairyGraph& g, const Parameters& p, Flavor f,
                                              Mode mode = Mode::Strict);

// Sign s with [g] = s * [h] in the complex; requires g and h isomorphic as
// abstract decorated graphs (throws otherwise). For graphs that vanish by
// odd symmetry both signs relate the orientations; the returned one is the
// deterministic composite of the two canonical relabelings.
int orientation_sign(const HairyGraph& g, const HairyGraph& h, const Parameters& p, Flavor f,
                     Mode mode = Mode::Strict);

// Canonical key of a bare (possibly hairless) multigraph; no validation,
// no sign. Used to deduplicate internal shapes during enumeration.
std::string internal_shape_key(const HairyGraph& g);

enum class Named { L, D, T, Lprime, Dprime, Ldoubleprime, Lomega, Tomega, Example31 };

Named named_from_string(const std::string& s);
std::string named_to_string(Named w);

// The diagram itself, in its reference presentation (not canonicalized).
HairyGraph named_graph_raw(Named w);

// Natural flavor the named diagram lives in (Abar for all-omega diagrams,
// otherwise A); it is also legal in any flavor containing its decorations.
Flavor named_graph_flavor(Named w);

SignedCanonicalGraph named_graph(Named w, const Parameters& p);

}  // namespace hgc
