#include "hgc/canonical.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hgc {

namespace {

// Slot universe: internal labels 0..V-1, then hair labels grouped by
// decoration code (code-0 hairs before omega). Both canonicalizers minimize
// the same row-by-row adjacency encoding over this label structure.
struct SearchContext {
    const HairyGraph& g;
    const Parameters& p;
    int V, H, N;
    std::vector<std::vector<int>> mult;  // (V+H)^2 multiplicities, diagonal = tadpoles
    std::vector<int> hair_class_of;      // hair index -> class rank
    std::vector<std::vector<int>> class_members;
    std::vector<int> slot_class;         // hair slot (0..H-1) -> class rank

    explicit SearchContext(const HairyGraph& g_, const Parameters& p_) : g(g_), p(p_) {
        V = g.internal_count;
        H = g.hair_count();
        N = V + H;
        mult.assign(N, std::vector<int>(N, 0));
        auto id = [&](Endpoint e) { return e.hair ? V + e.idx : e.idx; };
        for (const auto& [a, b] : g.edges) {
            int i = id(a), j = id(b);
            if (i == j)
                mult[i][i]++;
            else {
                mult[i][j]++;
                mult[j][i]++;
            }
        }
        // Decoration classes ordered by (code, tag char); the canonical hair
        // label ranges follow this order.
        std::vector<std::pair<std::pair<int, char>, Dec>> present;
        for (Dec d : {Dec::One, Dec::Epsilon, Dec::Omega}) {
            if (g.count_dec(d) > 0) present.push_back({{dec_code(d), dec_char(d)}, d});
        }
        std::sort(present.begin(), present.end());
        hair_class_of.assign(H, -1);
        class_members.resize(present.size());
        for (size_t c = 0; c < present.size(); ++c)
            for (int i = 0; i < H; ++i)
                if (g.hairs[i] == present[c].second) {
                    hair_class_of[i] = static_cast<int>(c);
                    class_members[c].push_back(i);
                }
        slot_class.resize(H);
        int s = 0;
        for (size_t c = 0; c < present.size(); ++c)
            for (size_t k = 0; k < class_members[c].size(); ++k) slot_class[s++] = static_cast<int>(c);
    }

    int orig_id(int level_orig_internal_or_hair, bool hair) const {
        return hair ? V + level_orig_internal_or_hair : level_orig_internal_or_hair;
    }
};

// Row-major multiplicity-matrix fingerprint; the search prunes on matrix
// rows, so leaf comparison must use the same total order.
std::string matrix_key(const HairyGraph& g) {
    int V = g.internal_count, N = V + g.hair_count();
    std::vector<std::vector<int>> mult(N, std::vector<int>(N, 0));
    auto id = [&](Endpoint e) { return e.hair ? V + e.idx : e.idx; };
    for (const auto& [a, b] : g.edges) {
        int i = id(a), j = id(b);
        if (i == j)
            mult[i][i]++;
        else {
            mult[i][j]++;
            mult[j][i]++;
        }
    }
    std::string s = std::to_string(V) + ";";
    for (Dec d : g.hairs) s += dec_char(d);
    s += ';';
    for (int k = 0; k < N; ++k)
        for (int j = 0; j <= k; ++j) {
            s += std::to_string(mult[k][j]);
            s += ',';
        }
    return s;
}

// Tracks the lex-least leaf over the searched labelings. Tie branches can
// produce non-minimal leaves; only the minimum and its sign set matter, and
// every minimizing labeling is guaranteed to be visited.
struct LeafCollector {
    bool have = false;
    std::string key;
    HairyGraph graph;
    int sign = 0;
    bool zero = false;

    void visit(const HairyGraph& canon, int s) {
        std::string k = matrix_key(canon);
        if (!have || k < key) {
            have = true;
            key = std::move(k);
            graph = canon;
            sign = s;
            zero = false;
        } else if (k == key) {
            if (s != sign) zero = true;
        }
    }
};

void leaf_from_assignment(const SearchContext& cx, const std::vector<int>& label_of_orig,
                          LeafCollector& out) {
    std::vector<int> perm_v(cx.V), perm_h(cx.H);
    for (int i = 0; i < cx.V; ++i) perm_v[i] = label_of_orig[i];
    for (int j = 0; j < cx.H; ++j) perm_h[j] = label_of_orig[cx.V + j] - cx.V;
    auto [canon, s] = relabel(cx.g, perm_v, perm_h, cx.p);
    out.visit(canon, s);
}

// Exact lex-min search: at each level only candidates realizing the minimal
// next encoding row survive, so every leaf reaches the same canonical matrix
// and the leaf set is exactly the set of minimizing labelings.
void search(const SearchContext& cx, int level, std::vector<int>& assigned_orig,
            std::vector<int>& label_of_orig, LeafCollector& out) {
    if (level == cx.N) {
        leaf_from_assignment(cx, label_of_orig, out);
        return;
    }
    std::vector<int> candidates;
    if (level < cx.V) {
        for (int v = 0; v < cx.V; ++v)
            if (label_of_orig[v] < 0) candidates.push_back(v);
    } else {
        int cls = cx.slot_class[level - cx.V];
        for (int h : cx.class_members[cls])
            if (label_of_orig[cx.V + h] < 0) candidates.push_back(cx.V + h);
    }
    std::vector<int> best_row;
    std::vector<int> best;
    std::vector<int> row(level + 1);
    for (int cand : candidates) {
        for (int k = 0; k < level; ++k) row[k] = cx.mult[cand][assigned_orig[k]];
        row[level] = cx.mult[cand][cand];
        if (best.empty() || row < best_row) {
            best_row = row;
            best.assign(1, cand);
        } else if (row == best_row) {
            best.push_back(cand);
        }
    }
    for (int cand : best) {
        assigned_orig.push_back(cand);
        label_of_orig[cand] = level;
        search(cx, level + 1, assigned_orig, label_of_orig, out);
        label_of_orig[cand] = -1;
        assigned_orig.pop_back();
    }
}

SignedCanonicalGraph finish(const HairyGraph& g, const Parameters& p, const LeafCollector& out) {
    SignedCanonicalGraph r;
    r.graph = out.graph;
    r.sign = out.sign;
    if (out.zero) r.sign = 0;
    // Edge-slot automorphisms not visible to vertex/hair permutations:
    // flipping a tadpole costs (-1)^n, swapping a parallel pair (-1)^(n-1).
    if (has_tadpole(g) && p.n % 2 != 0) r.sign = 0;
    if (has_multi_edge(g) && p.n % 2 == 0) r.sign = 0;
    return r;
}

}  // namespace

SignedCanonicalGraph canonicalize(const HairyGraph& g, const Parameters& p, Flavor f, Mode mode) {
    validate(g, f, mode);
    SearchContext cx(g, p);
    LeafCollector out;
    std::vector<int> assigned;
    std::vector<int> label_of_orig(cx.N, -1);
    search(cx, 0, assigned, label_of_orig, out);
    return finish(g, p, out);
}

SignedCanonicalGraph canonicalize_brute_force(const HairyGraph& g, const Parameters& p, Flavor f,
                                              Mode mode) {
    validate(g, f, mode);
    if (g.internal_count > 6 || g.hair_count() > 8)
        throw std::invalid_argument("canonicalize_brute_force: size bound exceeded");
    SearchContext cx(g, p);

    std::vector<int> perm_v(cx.V);
    std::iota(perm_v.begin(), perm_v.end(), 0);

    // Hair permutations must keep each decoration class inside its label
    // range; enumerate per-class permutations of target slots.
    std::vector<std::vector<int>> class_slots(cx.class_members.size());
    {
        int s = 0;
        for (size_t c = 0; c < cx.class_members.size(); ++c)
            for (size_t k = 0; k < cx.class_members[c].size(); ++k) class_slots[c].push_back(s++);
    }

    std::string best_key;
    HairyGraph best_graph;
    int best_sign = 0;
    bool zero = false;

    std::vector<int> perm_h(cx.H, -1);
    auto consider = [&]() {
        auto [canon, s] = relabel(g, perm_v, perm_h, p);
        std::string key = matrix_key(canon);
        if (best_key.empty() || key < best_key) {
            best_key = key;
            best_graph = canon;
            best_sign = s;
            zero = false;
        } else if (key == best_key) {
            if (!(canon == best_graph)) throw std::logic_error("brute force: encode collision");
            if (s != best_sign) zero = true;
        }
    };

    // Nested enumeration: per-class assignment of hairs to slots.
    std::vector<std::vector<int>> class_perms;  // current slot choice per class member
    std::function<void(size_t)> rec_class = [&](size_t c) {
        if (c == cx.class_members.size()) {
            consider();
            return;
        }
        std::vector<int> slots = class_slots[c];
        std::sort(slots.begin(), slots.end());
        do {
            for (size_t k = 0; k < cx.class_members[c].size(); ++k)
                perm_h[cx.class_members[c][k]] = slots[k];
            rec_class(c + 1);
        } while (std::next_permutation(slots.begin(), slots.end()));
    };

    std::sort(perm_v.begin(), perm_v.end());
    do {
        rec_class(0);
    } while (std::next_permutation(perm_v.begin(), perm_v.end()));

    LeafCollector out;
    out.have = true;
    out.graph = best_graph;
    out.sign = best_sign;
    out.zero = zero;
    return finish(g, p, out);
}

std::string internal_shape_key(const HairyGraph& g) {
    Parameters dummy(1, 4);
    SearchContext cx(g, dummy);
    LeafCollector out;
    std::vector<int> assigned;
    std::vector<int> label_of_orig(cx.N, -1);
    search(cx, 0, assigned, label_of_orig, out);
    return encode(out.graph);
}

int orientation_sign(const HairyGraph& g, const HairyGraph& h, const Parameters& p, Flavor f,
                     Mode mode) {
    auto cg = canonicalize(g, p, f, mode);
    auto ch = canonicalize(h, p, f, mode);
    if (!(cg.graph == ch.graph))
        throw std::invalid_argument("orientation_sign: graphs are not isomorphic");
    if (cg.sign == 0) {
        // Zero element: both signs relate the orientations; report the
        // composite of the deterministic canonical relabelings.
        SearchContext cxg(g, p), cxh(h, p);
        LeafCollector og, oh;
        std::vector<int> a, l(cxg.N, -1);
        search(cxg, 0, a, l, og);
        a.clear();
        l.assign(cxh.N, -1);
        search(cxh, 0, a, l, oh);
        return og.sign * oh.sign;
    }
    return cg.sign * ch.sign;
}

Named named_from_string(const std::string& s) {
    if (s == "L") return Named::L;
    if (s == "D") return Named::D;
    if (s == "T") return Named::T;
    if (s == "Lprime") return Named::Lprime;
    if (s == "Dprime") return Named::Dprime;
    if (s == "Ldoubleprime") return Named::Ldoubleprime;
    if (s == "Lomega") return Named::Lomega;
    if (s == "Tomega") return Named::Tomega;
    if (s == "Example31") return Named::Example31;
    throw std::invalid_argument("unknown named graph: " + s);
}

std::string named_to_string(Named w) {
    switch (w) {
        case Named::L: return "L";
        case Named::D: return "D";
        case Named::T: return "T";
        case Named::Lprime: return "Lprime";
        case Named::Dprime: return "Dprime";
        case Named::Ldoubleprime: return "Ldoubleprime";
        case Named::Lomega: return "Lomega";
        case Named::Tomega: return "Tomega";
        case Named::Example31: return "Example31";
    }
    return "?";
}

HairyGraph named_graph_raw(Named w) {
    HairyGraph g;
    switch (w) {
        case Named::L:
            g.hairs = {Dec::One, Dec::Omega};
            g.edges = {{hx(0), hx(1)}};
            break;
        case Named::D:
            g.internal_count = 1;
            g.hairs = {Dec::Omega};
            g.edges = {{vx(0), vx(0)}, {vx(0), hx(0)}};
            break;
        case Named::T:
            g.internal_count = 1;
            g.hairs = {Dec::One, Dec::Omega, Dec::Omega};
            g.edges = {{vx(0), hx(0)}, {vx(0), hx(1)}, {vx(0), hx(2)}};
            break;
        case Named::Lprime:
            g.hairs = {Dec::One, Dec::One};
            g.edges = {{hx(0), hx(1)}};
            break;
        case Named::Dprime:
            g.internal_count = 1;
            g.hairs = {Dec::One};
            g.edges = {{vx(0), vx(0)}, {vx(0), hx(0)}};
            break;
        case Named::Ldoubleprime:
        case Named::Lomega:
            g.hairs = {Dec::Omega, Dec::Omega};
            g.edges = {{hx(0), hx(1)}};
            break;
        case Named::Tomega:
            g.internal_count = 1;
            g.hairs = {Dec::Omega, Dec::Omega, Dec::Omega};
            g.edges = {{vx(0), hx(0)}, {vx(0), hx(1)}, {vx(0), hx(2)}};
            break;
        case Named::Example31:
            g.internal_count = 4;
            g.hairs = {Dec::Omega, Dec::One, Dec::Omega};
            g.edges = {{vx(0), vx(1)}, {vx(0), vx(3)}, {vx(1), vx(3)}, {vx(2), vx(1)},
                       {vx(2), vx(3)}, {vx(0), hx(0)}, {vx(2), hx(1)}, {vx(3), hx(2)}};
            break;
    }
    return g;
}

Flavor named_graph_flavor(Named w) {
    switch (w) {
        case Named::Ldoubleprime:
        case Named::Lomega:
        case Named::Tomega: return Flavor::Abar;
        default: return Flavor::A;
    }
}

SignedCanonicalGraph named_graph(Named w, const Parameters& p) {
    return canonicalize(named_graph_raw(w), p, named_graph_flavor(w));
}

}  // namespace hgc
