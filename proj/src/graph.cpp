#include "hgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hgc {

long degree(const HairyGraph& g, const Parameters& p) {
    return static_cast<long>(p.n - 1) * g.edge_count() - static_cast<long>(p.n) * g.internal_count -
           static_cast<long>(p.m) * g.omega_count();
}

std::vector<int> valences(const HairyGraph& g) {
    std::vector<int> val(g.internal_count, 0);
    for (const auto& [a, b] : g.edges) {
        if (!a.hair) val[a.idx]++;
        if (!b.hair) val[b.idx]++;
    }
    return val;
}

bool is_connected(const HairyGraph& g) {
    int n = g.internal_count + g.hair_count();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    auto id = [&](Endpoint e) { return e.hair ? g.internal_count + e.idx : e.idx; };
    for (const auto& [a, b] : g.edges) {
        adj[id(a)].push_back(id(b));
        adj[id(b)].push_back(id(a));
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                reached++;
                stack.push_back(w);
            }
    }
    return reached == n;
}

bool has_tadpole(const HairyGraph& g) {
    for (const auto& [a, b] : g.edges)
        if (a == b) return true;
    return false;
}

bool has_multi_edge(const HairyGraph& g) {
    std::vector<std::pair<Endpoint, Endpoint>> norm;
    norm.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        if (b < a) std::swap(a, b);
        norm.emplace_back(a, b);
    }
    std::sort(norm.begin(), norm.end());
    for (size_t i = 1; i < norm.size(); ++i)
        if (norm[i] == norm[i - 1]) return true;
    return false;
}

void validate(const HairyGraph& g, Flavor f, Mode mode) {
    if (g.internal_count < 0) throw std::invalid_argument("graph: negative vertex count");
    if (g.hair_count() < 1) throw std::invalid_argument("graph: at least one hair required");
    for (Dec d : g.hairs)
        if (!dec_legal(f, d))
            throw std::invalid_argument(std::string("graph: decoration '") + dec_char(d) +
                                        "' illegal for flavor " + flavor_name(f));
    std::vector<int> hair_val(g.hair_count(), 0);
    for (const auto& [a, b] : g.edges) {
        for (Endpoint e : {a, b}) {
            if (e.hair) {
                if (e.idx < 0 || e.idx >= g.hair_count())
                    throw std::invalid_argument("graph: hair endpoint out of range");
                hair_val[e.idx]++;
            } else if (e.idx < 0 || e.idx >= g.internal_count) {
                throw std::invalid_argument("graph: vertex endpoint out of range");
            }
        }
        if (a == b && a.hair) throw std::invalid_argument("graph: tadpole at a hair");
    }
    for (int v : hair_val)
        if (v != 1) throw std::invalid_argument("graph: hair valence must be exactly 1");
    int min_val = mode == Mode::Strict ? 3 : 1;
    for (int v : valences(g))
        if (v < min_val)
            throw std::invalid_argument("graph: internal valence below " + std::to_string(min_val));
    if (!is_connected(g)) throw std::invalid_argument("graph: not connected");
}

bool is_valid(const HairyGraph& g, Flavor f, Mode mode) {
    try {
        validate(g, f, mode);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            len++;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::pair<HairyGraph, int> relabel(const HairyGraph& g, const std::vector<int>& perm_v,
                                   const std::vector<int>& perm_h, const Parameters& p) {
    if (static_cast<int>(perm_v.size()) != g.internal_count ||
        static_cast<int>(perm_h.size()) != g.hair_count())
        throw std::invalid_argument("relabel: permutation size mismatch");

    HairyGraph out;
    out.internal_count = g.internal_count;
    out.hairs.resize(g.hair_count());
    for (int i = 0; i < g.hair_count(); ++i) out.hairs[perm_h[i]] = g.hairs[i];

    // Map every edge, normalizing direction to low->high; count reversals.
    struct Slot {
        std::pair<Endpoint, Endpoint> e;
        int orig;
    };
    std::vector<Slot> slots;
    slots.reserve(g.edges.size());
    int reversals = 0;
    auto map_ep = [&](Endpoint e) {
        return e.hair ? hx(perm_h[e.idx]) : vx(perm_v[e.idx]);
    };
    for (size_t i = 0; i < g.edges.size(); ++i) {
        Endpoint a = map_ep(g.edges[i].first);
        Endpoint b = map_ep(g.edges[i].second);
        if (b < a) {
            std::swap(a, b);
            reversals++;
        }
        slots.push_back({{a, b}, static_cast<int>(i)});
    }
    // Stable sort fixes the matching inside parallel bundles; the leftover
    // ambiguity is an automorphism handled by the zero rules.
    std::stable_sort(slots.begin(), slots.end(),
                     [](const Slot& x, const Slot& y) { return x.e < y.e; });
    std::vector<int> edge_perm(slots.size());
    for (size_t pos = 0; pos < slots.size(); ++pos) {
        edge_perm[slots[pos].orig] = static_cast<int>(pos);
        out.edges.push_back(slots[pos].e);
    }

    // Induced permutation on omega-hair ranks.
    std::vector<int> omega_old;  // hair index -> omega rank in g
    std::vector<int> omega_new(g.hair_count(), -1);
    {
        int r = 0;
        omega_old.assign(g.hair_count(), -1);
        for (int i = 0; i < g.hair_count(); ++i)
            if (g.hairs[i] == Dec::Omega) omega_old[i] = r++;
        r = 0;
        for (int i = 0; i < g.hair_count(); ++i)
            if (out.hairs[i] == Dec::Omega) omega_new[i] = r++;
    }
    std::vector<int> omega_perm;
    for (int i = 0; i < g.hair_count(); ++i)
        if (g.hairs[i] == Dec::Omega) omega_perm.push_back(omega_new[perm_h[i]]);

    int sign = 1;
    if (p.n % 2 != 0 && reversals % 2 != 0) sign = -sign;              // edge reversals: (-1)^n each
    if ((p.n - 1) % 2 != 0) sign *= permutation_sign(edge_perm);       // edges have degree n-1
    if (p.n % 2 != 0) sign *= permutation_sign(perm_v);                // vertices have degree -n
    if (p.m % 2 != 0) sign *= permutation_sign(omega_perm);            // omega-hairs have degree -m
    return {std::move(out), sign};
}

std::string encode(const HairyGraph& g) {
    std::string s;
    s.reserve(8 + g.hairs.size() + 6 * g.edges.size());
    s += std::to_string(g.internal_count);
    s += ';';
    for (Dec d : g.hairs) s += dec_char(d);
    s += ';';
    std::vector<std::pair<Endpoint, Endpoint>> norm;
    norm.reserve(g.edges.size());
    for (auto [a, b] : g.edges) {
        if (b < a) std::swap(a, b);
        norm.emplace_back(a, b);
    }
    std::sort(norm.begin(), norm.end());
    auto put = [&](Endpoint e) {
        s += e.hair ? 'h' : 'v';
        s += std::to_string(e.idx);
    };
    for (const auto& [a, b] : norm) {
        put(a);
        put(b);
        s += ',';
    }
    return s;
}

}  // namespace hgc
