#include "hgc/moves.hpp"

#include <functional>
#include <stdexcept>

namespace hgc {

namespace {

Endpoint shift_internal(Endpoint e) { return e.hair ? e : vx(e.idx + 1); }

}  // namespace

int hair_edge_index(const HairyGraph& g, int hair) {
    for (size_t i = 0; i < g.edges.size(); ++i)
        if (g.edges[i].first == hx(hair) || g.edges[i].second == hx(hair))
            return static_cast<int>(i);
    throw std::invalid_argument("hair has no incident edge");
}

int hair_attachment(const HairyGraph& g, int hair) {
    const auto& e = g.edges[hair_edge_index(g, hair)];
    Endpoint other = (e.first == hx(hair)) ? e.second : e.first;
    return other.hair ? -1 : other.idx;
}

std::vector<Move> split_moves(const HairyGraph& g, int min_block) {
    std::vector<Move> out;
    for (int v = 0; v < g.internal_count; ++v) {
        // Half-edges at v as (edge index, side).
        std::vector<std::pair<int, int>> star;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (g.edges[e].first == vx(v)) star.push_back({static_cast<int>(e), 0});
            if (g.edges[e].second == vx(v)) star.push_back({static_cast<int>(e), 1});
        }
        int s = static_cast<int>(star.size());
        if (s == 0) continue;
        // Unordered splits once each: the block containing star[0] stays at
        // v, its complement moves to the new vertex.
        for (unsigned mask = 0; mask < (1u << (s - 1)); ++mask) {
            int stay = 1 + __builtin_popcount(mask);
            int move = s - stay;
            if (stay < min_block || move < min_block) continue;
            HairyGraph h;
            h.internal_count = g.internal_count + 1;
            h.hairs = g.hairs;
            h.edges.reserve(g.edges.size() + 1);
            h.edges.emplace_back(vx(v + 1), vx(0));  // fresh edge old->new, prepended
            for (const auto& e : g.edges)
                h.edges.emplace_back(shift_internal(e.first), shift_internal(e.second));
            for (int k = 1; k < s; ++k) {
                if (mask & (1u << (k - 1))) continue;  // stays at v
                auto [ei, side] = star[k];
                auto& edge = h.edges[ei + 1];
                (side == 0 ? edge.first : edge.second) = vx(0);
            }
            out.push_back({+1, std::move(h)});
        }
    }
    return out;
}

std::vector<Move> join_moves(const HairyGraph& g, const Parameters& p, Flavor f, int min_size) {
    std::vector<Move> out;
    int H = g.hair_count();
    std::vector<int> omega_rank(H, -1);
    {
        int r = 0;
        for (int i = 0; i < H; ++i)
            if (g.hairs[i] == Dec::Omega) omega_rank[i] = r++;
    }
    for (unsigned mask = 1; mask < (1u << H); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < min_size) continue;
        int n_omega = 0, n_unit = 0, omega_idx = -1;
        for (int i = 0; i < H; ++i)
            if (mask & (1u << i)) {
                if (g.hairs[i] == Dec::Omega) {
                    n_omega++;
                    omega_idx = i;
                } else {
                    n_unit++;
                }
            }
        auto product = fuse(f, n_omega, n_unit);
        if (!product) continue;

        int sign = 1;
        if (*product == Dec::Omega && p.m % 2 != 0 && omega_rank[omega_idx] % 2 != 0) sign = -1;

        HairyGraph h;
        h.internal_count = g.internal_count + 1;
        h.hairs.push_back(*product);
        std::vector<int> new_hair_idx(H, -1);
        for (int i = 0; i < H; ++i)
            if (!(mask & (1u << i))) {
                new_hair_idx[i] = static_cast<int>(h.hairs.size());
                h.hairs.push_back(g.hairs[i]);
            }
        auto map_ep = [&](Endpoint e) -> Endpoint {
            if (!e.hair) return vx(e.idx + 1);
            if (mask & (1u << e.idx)) return vx(0);
            return hx(new_hair_idx[e.idx]);
        };
        h.edges.reserve(g.edges.size() + 1);
        h.edges.emplace_back(hx(0), vx(0));  // fresh edge hair->vertex, prepended
        for (const auto& e : g.edges) h.edges.emplace_back(map_ep(e.first), map_ep(e.second));
        out.push_back({sign, std::move(h)});
    }
    return out;
}

std::vector<Move> attach_moves(const HairyGraph& g) {
    std::vector<Move> out;
    for (int v = 0; v < g.internal_count; ++v) out.push_back(attach_with_hairs(g, v, {}));
    return out;
}

std::vector<Move> subdivide_moves(const HairyGraph& g) {
    std::vector<Move> out;
    for (int h = 0; h < g.hair_count(); ++h)
        if (g.hairs[h] == Dec::Omega) out.push_back(subdivide_with_hairs(g, h, {}));
    return out;
}

HairyGraph reconnect_apply(const HairyGraph& g,
                           const std::vector<std::pair<int, int>>& hair_to_vertex) {
    HairyGraph h;
    h.internal_count = g.internal_count;
    int H = g.hair_count();
    std::vector<int> target(H, -1);
    for (auto [hair, v] : hair_to_vertex) target[hair] = v;
    std::vector<int> new_hair_idx(H, -1);
    for (int i = 0; i < H; ++i)
        if (target[i] < 0) {
            new_hair_idx[i] = static_cast<int>(h.hairs.size());
            h.hairs.push_back(g.hairs[i]);
        }
    auto map_ep = [&](Endpoint e) -> Endpoint {
        if (!e.hair) return e;
        if (target[e.idx] >= 0) return vx(target[e.idx]);
        return hx(new_hair_idx[e.idx]);
    };
    h.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) h.edges.emplace_back(map_ep(e.first), map_ep(e.second));
    return h;
}

std::vector<HairyGraph> reconnect_ways(const HairyGraph& g, const std::vector<int>& S) {
    std::vector<HairyGraph> out;
    if (S.empty()) {
        out.push_back(g);
        return out;
    }
    std::vector<int> forbidden;
    for (int hp : S) forbidden.push_back(hair_attachment(g, hp));
    std::vector<std::pair<int, int>> choice;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == S.size()) {
            out.push_back(reconnect_apply(g, choice));
            return;
        }
        for (int v = 0; v < g.internal_count; ++v) {
            if (v == forbidden[k]) continue;
            choice.emplace_back(S[k], v);
            rec(k + 1);
            choice.pop_back();
        }
    };
    rec(0);
    return out;
}

Move attach_with_hairs(const HairyGraph& g, int v, const std::vector<int>& J) {
    HairyGraph h;
    h.internal_count = g.internal_count + 1;
    int H = g.hair_count();
    std::vector<char> pulled(H, 0);
    for (int j : J) pulled[j] = 1;
    std::vector<int> new_hair_idx(H, -1);
    for (int i = 0; i < H; ++i)
        if (!pulled[i]) {
            new_hair_idx[i] = static_cast<int>(h.hairs.size());
            h.hairs.push_back(g.hairs[i]);
        }
    auto map_ep = [&](Endpoint e) -> Endpoint {
        if (!e.hair) return vx(e.idx + 1);
        if (pulled[e.idx]) return vx(0);
        return hx(new_hair_idx[e.idx]);
    };
    h.edges.emplace_back(vx(v + 1), vx(0));
    for (const auto& e : g.edges) h.edges.emplace_back(map_ep(e.first), map_ep(e.second));
    return {+1, std::move(h)};
}

Move subdivide_with_hairs(const HairyGraph& g, int hair, const std::vector<int>& J) {
    if (g.hairs[hair] != Dec::Omega)
        throw std::invalid_argument("subdivide: expected an omega-hair");
    int target_edge = hair_edge_index(g, hair);
    HairyGraph h;
    h.internal_count = g.internal_count + 1;
    int H = g.hair_count();
    std::vector<char> pulled(H, 0);
    for (int j : J) {
        if (j == hair) throw std::invalid_argument("subdivide: J may not contain the omega-hair");
        pulled[j] = 1;
    }
    std::vector<int> new_hair_idx(H, -1);
    for (int i = 0; i < H; ++i)
        if (!pulled[i]) {
            new_hair_idx[i] = static_cast<int>(h.hairs.size());
            h.hairs.push_back(g.hairs[i]);
        }
    auto map_ep = [&](Endpoint e, bool move_hair_end) -> Endpoint {
        if (!e.hair) return vx(e.idx + 1);
        if (pulled[e.idx]) return vx(0);
        if (move_hair_end && e.idx == hair) return vx(0);
        return hx(new_hair_idx[e.idx]);
    };
    h.edges.emplace_back(hx(new_hair_idx[hair]), vx(0));  // fresh hair-side edge
    for (size_t i = 0; i < g.edges.size(); ++i) {
        bool subdividing = static_cast<int>(i) == target_edge;
        h.edges.emplace_back(map_ep(g.edges[i].first, subdividing),
                             map_ep(g.edges[i].second, subdividing));
    }
    return {+1, std::move(h)};
}

}  // namespace hgc
