#pragma once

#include <map>
#include <vector>

#include "hgc/canonical.hpp"

namespace hgc {

// Sub-sector filters of a complex. UT is the Aprime tree sector with exactly
// one epsilon hair; W0 the A-flavor zero-omega sector; Primed requires at
// least one omega-hair and one internal vertex; OmegaTrees = Trees with
// every hair omega (the sector carrying all degree <= 0 classes).
enum class Sector { All, Trees, UT, W0, Primed, OmegaOnly, OmegaTrees };

std::string sector_name(Sector s);
Sector sector_from_string(const std::string& s);
bool sector_contains(Sector s, const HairyGraph& g);
void check_sector_flavor(Sector s, Flavor f);

struct Window {
    Parameters p;
    Flavor flavor = Flavor::Abar;
    Sector sector = Sector::All;
    int max_internal = 0;
    int max_hairs = 0;
    int max_edges = 0;  // 0 -> default_max_edges(max_internal, max_hairs)
    long work_cap = 50'000'000;

    int effective_max_edges() const;
    std::string key() const;  // memo/cache key
};

// E is capped two loops above the sparsest admissible graph when the caller
// leaves max_edges at 0.
int default_max_edges(int max_internal, int max_hairs);

struct BasisSlice {
    long degree = 0;
    std::vector<HairyGraph> graphs;  // canonical, nonzero, sorted by encoding
    bool complete = false;
};

// Exhaustive canonical bases, grouped by degree. Deterministic; memoized in
// process and optionally on disk via HGC_CACHE_DIR.
const std::map<long, BasisSlice>& enumerate_basis(const Window& w);

// Feasible profile of a graph class by counting constraints only.
struct Profile {
    int internal = 0;
    int omega = 0;
    int units = 0;
    int edges = 0;
    int hairs() const { return omega + units; }
};

// All profiles a degree-d graph of the sector can have, regardless of any
// window: the basis slice at d is complete in a window iff every profile
// fits inside it.
std::vector<Profile> feasible_profiles(const Parameters& p, Flavor f, Sector s, long degree);
bool slice_complete(const Window& w, long degree);

// Smallest window whose slices are complete on the whole degree range.
Window window_covering(const Parameters& p, Flavor f, Sector s, long deg_lo, long deg_hi);

// Trees with all hairs omega and degree <= 0; finite and complete.
std::map<long, BasisSlice> tree_sector_nonpositive(const Parameters& p);

}  // namespace hgc
