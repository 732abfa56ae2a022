#include "hgc/basis.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hgc/json_io.hpp"

namespace hgc {

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::All: return "all";
        case Sector::Trees: return "trees";
        case Sector::UT: return "ut";
        case Sector::W0: return "w0";
        case Sector::Primed: return "primed";
        case Sector::OmegaOnly: return "omega";
        case Sector::OmegaTrees: return "omega-trees";
    }
    return "?";
}

Sector sector_from_string(const std::string& s) {
    if (s == "all") return Sector::All;
    if (s == "trees") return Sector::Trees;
    if (s == "ut") return Sector::UT;
    if (s == "w0") return Sector::W0;
    if (s == "primed") return Sector::Primed;
    if (s == "omega") return Sector::OmegaOnly;
    if (s == "omega-trees") return Sector::OmegaTrees;
    throw std::invalid_argument("unknown sector: " + s);
}

bool sector_contains(Sector s, const HairyGraph& g) {
    switch (s) {
        case Sector::All: return true;
        case Sector::Trees: return g.loop_order() == 0;
        case Sector::UT:
            return g.loop_order() == 0 && g.hair_count() - g.omega_count() == 1;
        case Sector::W0: return g.omega_count() == 0;
        case Sector::Primed: return g.omega_count() >= 1 && g.internal_count >= 1;
        case Sector::OmegaOnly: return g.omega_count() == g.hair_count();
        case Sector::OmegaTrees:
            return g.loop_order() == 0 && g.omega_count() == g.hair_count();
    }
    return false;
}

void check_sector_flavor(Sector s, Flavor f) {
    if (s == Sector::UT && f != Flavor::Aprime)
        throw std::invalid_argument("sector ut requires flavor Aprime");
    if (s == Sector::W0 && f != Flavor::A)
        throw std::invalid_argument("sector w0 requires flavor A");
}

int default_max_edges(int max_internal, int max_hairs) {
    return (3 * max_internal + max_hairs) / 2 + 2;
}

int Window::effective_max_edges() const {
    return max_edges > 0 ? max_edges : default_max_edges(max_internal, max_hairs);
}

std::string Window::key() const {
    return "hgc-basis-v1;m=" + std::to_string(p.m) + ";n=" + std::to_string(p.n) +
           ";f=" + flavor_name(flavor) + ";s=" + sector_name(sector) +
           ";V=" + std::to_string(max_internal) + ";H=" + std::to_string(max_hairs) +
           ";E=" + std::to_string(effective_max_edges());
}

namespace {

bool sector_trees_only(Sector s) {
    return s == Sector::Trees || s == Sector::UT || s == Sector::OmegaTrees;
}

// Connected internal multigraphs on V vertices, one representative per
// isomorphism class, pruned by the valence deficiency a hair budget can
// still repair.
std::vector<HairyGraph> internal_shapes(int V, int max_eint, int hair_budget, bool trees_only) {
    std::vector<HairyGraph> shapes;
    if (V == 0) return shapes;
    std::map<std::string, char> seen;
    std::vector<int> tad(V, 0);
    std::vector<std::vector<int>> mult(V, std::vector<int>(V, 0));
    std::vector<int> val(V, 0);
    int eint = 0;
    int deficiency = 0;

    std::function<void(int)> start_row;
    std::function<void(int, int)> fill_pairs;

    auto emit = [&]() {
        HairyGraph g;
        g.internal_count = V;
        for (int a = 0; a < V; ++a) {
            for (int t = 0; t < tad[a]; ++t) g.edges.emplace_back(vx(a), vx(a));
            for (int b = a + 1; b < V; ++b)
                for (int k = 0; k < mult[a][b]; ++k) g.edges.emplace_back(vx(a), vx(b));
        }
        if (trees_only && eint != V - 1) return;
        // connectivity of the bare internal graph
        std::vector<int> comp(V);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (const auto& [a, b] : g.edges) comp[find(a.idx)] = find(b.idx);
        int roots = 0;
        for (int x = 0; x < V; ++x) roots += (find(x) == x);
        if (roots != 1) return;
        std::string key = internal_shape_key(g);
        if (seen.emplace(std::move(key), 1).second) shapes.push_back(std::move(g));
    };

    start_row = [&](int u) {
        if (u == V) {
            emit();
            return;
        }
        int cap = trees_only ? 0 : max_eint - eint;
        for (int t = 0; t <= cap; ++t) {
            tad[u] = t;
            eint += t;
            fill_pairs(u, u + 1);
            eint -= t;
            tad[u] = 0;
        }
    };

    fill_pairs = [&](int u, int w) {
        if (w == V) {
            val[u] = 2 * tad[u];
            for (int x = 0; x < V; ++x) val[u] += mult[u][x];
            // representative pruning: internal valences non-increasing
            if (u > 0 && val[u] > val[u - 1]) return;
            int need = std::max(0, 3 - val[u]);
            deficiency += need;
            if (deficiency <= hair_budget) start_row(u + 1);
            deficiency -= need;
            return;
        }
        int pcap = trees_only ? 1 : max_eint - eint;
        for (int k = 0; k <= pcap; ++k) {
            mult[u][w] = mult[w][u] = k;
            eint += k;
            fill_pairs(u, w + 1);
            eint -= k;
            mult[u][w] = mult[w][u] = 0;
        }
    };

    start_row(0);
    return shapes;
}

struct Collector {
    const Window& w;
    std::map<std::string, HairyGraph> found;
    long work = 0;

    void offer(const HairyGraph& g) {
        if (++work > w.work_cap) throw std::runtime_error("enumeration work cap exceeded");
        if (!sector_contains(w.sector, g)) return;
        auto canon = canonicalize(g, w.p, w.flavor);
        if (canon.is_zero()) return;
        found.emplace(encode(canon.graph), canon.graph);
    }
};

void enumerate_hairless_shapes(const Window& w, Collector& out) {
    int maxE = w.effective_max_edges();
    bool trees_only = sector_trees_only(w.sector);

    // V = 0: a single edge joining two hairs.
    std::vector<Dec> decs;
    for (Dec d : {Dec::One, Dec::Epsilon, Dec::Omega})
        if (dec_legal(w.flavor, d)) decs.push_back(d);
    if (w.max_hairs >= 2 && maxE >= 1) {
        for (size_t i = 0; i < decs.size(); ++i)
            for (size_t j = i; j < decs.size(); ++j) {
                HairyGraph g;
                g.hairs = {decs[i], decs[j]};
                g.edges = {{hx(0), hx(1)}};
                out.offer(g);
            }
    }

    for (int V = 1; V <= w.max_internal; ++V) {
        int max_eint = trees_only ? V - 1 : maxE - 1;
        if (max_eint < V - 1) continue;
        auto shapes = internal_shapes(V, max_eint, w.max_hairs, trees_only);
        for (const auto& shape : shapes) {
            auto val = valences(shape);
            int eint = shape.edge_count();
            std::vector<int> need(V);
            int total_need = 0;
            for (int v = 0; v < V; ++v) {
                need[v] = std::max(0, 3 - val[v]);
                total_need += need[v];
            }
            int max_htot = std::min(w.max_hairs, maxE - eint);
            for (int htot = std::max(1, total_need); htot <= max_htot; ++htot) {
                // distribute htot hairs with h[v] >= need[v]
                std::vector<int> h(V);
                std::function<void(int, int)> dist = [&](int v, int left) {
                    if (v == V) {
                        if (left != 0) return;
                        // decoration counts per vertex: a[v] omegas
                        std::vector<int> a(V);
                        std::function<void(int)> decorate = [&](int u) {
                            if (u == V) {
                                HairyGraph g = shape;
                                for (int x = 0; x < V; ++x) {
                                    for (int k = 0; k < h[x]; ++k) {
                                        Dec d = k < a[x] ? Dec::Omega
                                                         : *dec_unit(w.flavor);
                                        int hi = g.hair_count();
                                        g.hairs.push_back(d);
                                        g.edges.emplace_back(vx(x), hx(hi));
                                    }
                                }
                                out.offer(g);
                                return;
                            }
                            int lo = 0, hi = h[u];
                            if (w.flavor == Flavor::Abar) lo = hi;
                            if (w.sector == Sector::OmegaOnly || w.sector == Sector::OmegaTrees)
                                lo = hi;
                            if (w.sector == Sector::W0) hi = 0;
                            for (a[u] = lo; a[u] <= hi; ++a[u]) decorate(u + 1);
                            a[u] = 0;
                        };
                        decorate(0);
                        return;
                    }
                    for (int k = need[v]; k <= left; ++k) {
                        h[v] = k;
                        dist(v + 1, left - k);
                    }
                    h[v] = 0;
                };
                dist(0, htot);
            }
        }
    }
}

std::map<long, BasisSlice> build_basis(const Window& w) {
    check_sector_flavor(w.sector, w.flavor);
    w.p.validate();
    Collector out{w};
    enumerate_hairless_shapes(w, out);

    std::map<long, BasisSlice> slices;
    for (const auto& [key, g] : out.found) {
        long d = degree(g, w.p);
        auto& slice = slices[d];
        slice.degree = d;
        slice.graphs.push_back(g);
    }
    for (auto& [d, slice] : slices) slice.complete = slice_complete(w, d);
    return slices;
}

std::filesystem::path cache_path_for(const Window& w) {
    const char* dir = std::getenv("HGC_CACHE_DIR");
    if (!dir || !*dir) return {};
    size_t h = std::hash<std::string>{}(w.key());
    char name[32];
    std::snprintf(name, sizeof(name), "basis-%016zx.json", h);
    return std::filesystem::path(dir) / name;
}

bool load_cached(const Window& w, std::map<long, BasisSlice>& slices) {
    auto path = cache_path_for(w);
    if (path.empty() || !std::filesystem::exists(path)) return false;
    std::ifstream in(path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || j.value("key", "") != w.key()) return false;
    for (const auto& js : j.at("slices")) {
        BasisSlice s;
        s.degree = js.at("degree").get<long>();
        s.complete = js.at("complete").get<bool>();
        for (const auto& jg : js.at("graphs")) s.graphs.push_back(graph_from_json(jg).graph);
        slices[s.degree] = std::move(s);
    }
    return true;
}

void store_cached(const Window& w, const std::map<long, BasisSlice>& slices) {
    auto path = cache_path_for(w);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    nlohmann::ordered_json j;
    j["key"] = w.key();
    j["slices"] = nlohmann::ordered_json::array();
    for (const auto& [d, s] : slices) {
        nlohmann::ordered_json js;
        js["degree"] = s.degree;
        js["complete"] = s.complete;
        js["graphs"] = nlohmann::ordered_json::array();
        for (const auto& g : s.graphs) js["graphs"].push_back(graph_to_json(g, w.p, w.flavor));
        j["slices"].push_back(std::move(js));
    }
    std::ofstream(path) << j.dump();
}

}  // namespace

const std::map<long, BasisSlice>& enumerate_basis(const Window& w) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<std::map<long, BasisSlice>>> memo;
    std::string key = w.key();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return *it->second;
    }
    auto built = std::make_unique<std::map<long, BasisSlice>>();
    if (!load_cached(w, *built)) {
        *built = build_basis(w);
        store_cached(w, *built);
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.emplace(key, std::move(built));
    return *it->second;
}

std::vector<Profile> feasible_profiles(const Parameters& p, Flavor f, Sector s, long degree) {
    std::vector<Profile> out;
    const int n = p.n, m = p.m;
    bool omega_only = (f == Flavor::Abar) || s == Sector::OmegaOnly || s == Sector::OmegaTrees;

    // Rigorous scan bounds. From 2E >= 3V + Hw and (n-1)E = d + nV + mHw:
    //   V(n-3) <= 2d + (2m-n+1)Hw,
    // and internal connectivity E >= V + Htot - 1 gives
    //   Hw(n-1-m) <= d + V + n - 1.
    // Substituting the latter bounds V by
    //   V (n-1)(n-2-m) <= 2d(n-1-m) + max(0, 2m-n+1)(d + n - 1) (+ slack),
    // with n-2-m >= 1 whenever n - m >= 3.
    long capV;
    if (2 * m - n + 1 <= 0) {
        capV = std::max(0L, 2 * degree / (n - 3 > 0 ? n - 3 : 1));
    } else {
        long num = 2 * degree * (n - 1 - m) + (2L * m - n + 1) * (degree + n - 1);
        long den = static_cast<long>(n - 1) * (n - 2 - m);
        capV = std::max(0L, num / den + 1);
    }
    long capH = std::max(2L, (capV + degree + n - 1) / (n - 1 - m) + 1);
    if (capV > 512 || capH > 512)
        throw std::runtime_error("feasible_profiles: degree out of desk-scale range");

    for (long V = 0; V <= capV; ++V) {
        for (long Hw = 0; Hw <= capH; ++Hw) {
            long num = degree + static_cast<long>(n) * V + static_cast<long>(m) * Hw;
            if (num <= 0 || num % (n - 1) != 0) continue;
            long E = num / (n - 1);
            int H1_min = 0, H1_max;
            if (V == 0) {
                // only the single-edge two-hair graphs
                if (E != 1 || Hw > 2) continue;
                H1_min = H1_max = static_cast<int>(2 - Hw);
            } else {
                long cap1 = 2 * E - 3 * V - Hw;
                long cap2 = E - V + 1 - Hw;
                H1_max = static_cast<int>(std::min(cap1, cap2));
            }
            for (int H1 = H1_min; H1 <= H1_max; ++H1) {
                if (omega_only && H1 != 0) continue;
                long Htot = Hw + H1;
                if (Htot < 1) continue;
                if (V >= 1 && E < V + Htot - 1) continue;
                if (V >= 1 && 2 * E < 3 * V + Htot) continue;
                bool tree = (E == V + Htot - 1);
                switch (s) {
                    case Sector::Trees:
                    case Sector::OmegaTrees:
                        if (!tree) continue;
                        break;
                    case Sector::UT:
                        if (!tree || H1 != 1) continue;
                        break;
                    case Sector::W0:
                        if (Hw != 0) continue;
                        break;
                    case Sector::Primed:
                        if (Hw < 1 || V < 1) continue;
                        break;
                    default: break;
                }
                if (f == Flavor::Abar && H1 != 0) continue;
                out.push_back({static_cast<int>(V), static_cast<int>(Hw), H1,
                               static_cast<int>(E)});
            }
        }
    }
    return out;
}

bool slice_complete(const Window& w, long degree) {
    for (const auto& t : feasible_profiles(w.p, w.flavor, w.sector, degree)) {
        if (t.internal > w.max_internal) return false;
        if (t.hairs() > w.max_hairs) return false;
        if (t.edges > w.effective_max_edges()) return false;
    }
    return true;
}

Window window_covering(const Parameters& p, Flavor f, Sector s, long deg_lo, long deg_hi) {
    Window w;
    w.p = p;
    w.flavor = f;
    w.sector = s;
    w.max_internal = 0;
    w.max_hairs = 1;
    w.max_edges = 1;
    for (long d = deg_lo; d <= deg_hi; ++d) {
        for (const auto& t : feasible_profiles(p, f, s, d)) {
            w.max_internal = std::max(w.max_internal, t.internal);
            w.max_hairs = std::max(w.max_hairs, t.hairs());
            w.max_edges = std::max(w.max_edges, t.edges);
        }
    }
    return w;
}

std::map<long, BasisSlice> tree_sector_nonpositive(const Parameters& p) {
    long dmin = 0;
    bool any = false;
    for (int V = 0; V <= 64; ++V) {
        int Hlo = V == 0 ? 2 : V + 2;
        for (int H = Hlo; H <= 64; ++H) {
            if (V == 0 && H != 2) break;
            long E = V + H - 1;
            long d = static_cast<long>(p.n - 1) * E - static_cast<long>(p.n) * V -
                     static_cast<long>(p.m) * H;
            if (d <= 0) {
                dmin = std::min(dmin, d);
                any = true;
            }
        }
    }
    std::map<long, BasisSlice> out;
    if (!any) return out;
    Window w = window_covering(p, Flavor::Abar, Sector::OmegaTrees, dmin, 0);
    for (const auto& [d, slice] : enumerate_basis(w)) {
        if (d > 0) continue;
        if (!slice.complete) throw std::logic_error("tree sector slice unexpectedly incomplete");
        out[d] = slice;
    }
    // Degrees with no graphs at all are complete too; report them when the
    // caller asks by leaving them absent (empty slice semantics).
    return out;
}

}  // namespace hgc
