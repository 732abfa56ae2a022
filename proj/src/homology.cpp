#include "hgc/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgc {

namespace {

struct SliceView {
    const std::vector<HairyGraph>* graphs;
    bool complete;

    int size() const { return graphs ? static_cast<int>(graphs->size()) : 0; }
};

SliceView slice_view(const Window& w, long degree) {
    const auto& slices = enumerate_basis(w);
    auto it = slices.find(degree);
    if (it == slices.end()) return {nullptr, slice_complete(w, degree)};
    return {&it->second.graphs, it->second.complete};
}

std::map<std::string, int> index_of(const SliceView& v) {
    std::map<std::string, int> idx;
    if (v.graphs)
        for (size_t i = 0; i < v.graphs->size(); ++i) idx.emplace(encode((*v.graphs)[i]), i);
    return idx;
}

// Fraction-free elimination working set.
struct IntColumns {
    std::vector<std::map<int, Integer>> cols;

    explicit IntColumns(const SparseMatrix& m) : cols(m.cols) {
        for (int c = 0; c < m.cols; ++c) {
            Integer lcm = 1;
            for (const auto& [r, v] : m.columns[c]) {
                Integer den = v.get_den();
                lcm = lcm / gcd(lcm, den) * den;
            }
            for (const auto& [r, v] : m.columns[c]) {
                Integer num = v.get_num() * (lcm / v.get_den());
                if (num != 0) cols[c][r] = num;
            }
        }
    }
};

}  // namespace

int rank_exact(const SparseMatrix& m) {
    IntColumns work(m);
    std::vector<char> col_active(m.cols, 1), row_active(m.rows, 1);
    Integer prev_pivot = 1;
    int rank = 0;
    while (true) {
        int pc = -1;
        size_t pc_nnz = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (!col_active[c]) continue;
            size_t nnz = 0;
            for (const auto& [r, v] : work.cols[c]) nnz += row_active[r] && v != 0;
            if (nnz == 0) {
                col_active[c] = 0;  // exhausted column
                continue;
            }
            if (pc < 0 || nnz < pc_nnz) {
                pc = c;
                pc_nnz = nnz;
            }
        }
        if (pc < 0) break;
        int pr = -1;
        for (const auto& [r, v] : work.cols[pc])
            if (row_active[r] && v != 0) {
                pr = r;
                break;
            }
        Integer piv = work.cols[pc][pr];
        for (int c = 0; c < m.cols; ++c) {
            if (!col_active[c] || c == pc) continue;
            Integer beta = 0;
            auto itb = work.cols[c].find(pr);
            if (itb != work.cols[c].end()) beta = itb->second;
            // rows touched by either column
            std::map<int, Integer>& col = work.cols[c];
            if (beta == 0) {
                for (auto& [r, v] : col) {
                    if (!row_active[r]) continue;
                    v = v * piv / prev_pivot;
                }
            } else {
                for (const auto& [r, pv] : work.cols[pc]) {
                    if (!row_active[r] || r == pr) continue;
                    auto it = col.find(r);
                    if (it == col.end() && pv != 0) col.emplace(r, 0);
                }
                for (auto it = col.begin(); it != col.end();) {
                    int r = it->first;
                    if (!row_active[r] || r == pr) {
                        ++it;
                        continue;
                    }
                    Integer a = it->second;
                    Integer b = 0;
                    auto itp = work.cols[pc].find(r);
                    if (itp != work.cols[pc].end()) b = itp->second;
                    Integer nv = (a * piv - b * beta) / prev_pivot;
                    if (nv == 0)
                        it = col.erase(it);
                    else {
                        it->second = nv;
                        ++it;
                    }
                }
            }
        }
        row_active[pr] = 0;
        col_active[pc] = 0;
        prev_pivot = piv;
        rank++;
    }
    return rank;
}

int rank_dense_oracle(const SparseMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, 0));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.columns[c]) a[r][c] = v;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[row]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[row][col];
            for (int c = col; c < m.cols; ++c) a[r][c] -= f * a[row][c];
        }
        row++;
        rank++;
    }
    return rank;
}

DifferentialMatrix assemble_matrix(const Window& w, long degree, DifferentialKind kind) {
    if (kind_flavor(kind) != w.flavor)
        throw std::invalid_argument("assemble_matrix: window flavor does not match kind");
    SliceView rows = slice_view(w, degree - 1);
    SliceView cols = slice_view(w, degree);
    auto row_idx = index_of(rows);

    DifferentialMatrix out;
    out.degree = degree;
    out.rows_complete = rows.complete;
    out.cols_complete = cols.complete;
    out.mat.resize(rows.size(), cols.size());
    for (int j = 0; j < cols.size(); ++j) {
        FormalSum dx = differential(inject((*cols.graphs)[j], w.p, w.flavor), kind);
        for (const auto& [key, t] : dx.terms()) {
            auto it = row_idx.find(key);
            if (it == row_idx.end()) {
                if (!sector_contains(w.sector, t.graph))
                    throw std::invalid_argument(
                        "assemble_matrix: sector is not closed under the differential");
                if (rows.complete)
                    throw std::logic_error(
                        "assemble_matrix: differential left a complete slice");
                out.leaked = true;
                continue;
            }
            out.mat.set(it->second, j, t.coeff);
        }
    }
    return out;
}

BettiReport betti(const Window& w, DifferentialKind kind, long degree) {
    DifferentialMatrix down = assemble_matrix(w, degree, kind);
    DifferentialMatrix in = assemble_matrix(w, degree + 1, kind);
    BettiReport r;
    r.degree = degree;
    r.kernel_dim = down.mat.cols - rank_exact(down.mat);
    r.image_dim = rank_exact(in.mat);
    r.betti = r.kernel_dim - r.image_dim;
    r.certified = down.rows_complete && down.cols_complete && in.cols_complete && !down.leaked &&
                  !in.leaked;
    return r;
}

namespace {

struct ConeBasis {
    SliceView bar;   // Abar at cone degree - 1
    SliceView full;  // A at cone degree
    std::map<std::string, int> bar_idx, full_idx;

    int size() const { return bar.size() + full.size(); }
};

ConeBasis cone_basis(const Window& w, long cone_degree) {
    Window wb = w, wf = w;
    wb.flavor = Flavor::Abar;
    wf.flavor = Flavor::A;
    ConeBasis b{slice_view(wb, cone_degree - 1), slice_view(wf, cone_degree)};
    b.bar_idx = index_of(b.bar);
    b.full_idx = index_of(b.full);
    return b;
}

// Columns over cone degree k, rows over k-1; cone differential
// (x, y) -> (-d x, i(x) + d y).
DifferentialMatrix assemble_cone_matrix(const Window& w, long cone_degree) {
    ConeBasis cols = cone_basis(w, cone_degree);
    ConeBasis rows = cone_basis(w, cone_degree - 1);
    DifferentialMatrix out;
    out.degree = cone_degree;
    out.rows_complete = rows.bar.complete && rows.full.complete;
    out.cols_complete = cols.bar.complete && cols.full.complete;
    out.mat.resize(rows.size(), cols.size());
    int full_row_base = rows.bar.size();

    for (int j = 0; j < cols.bar.size(); ++j) {
        const HairyGraph& g = (*cols.bar.graphs)[j];
        FormalSum dx = differential(inject(g, w.p, Flavor::Abar), DifferentialKind::SplitOnly);
        for (const auto& [key, t] : dx.terms()) {
            auto it = rows.bar_idx.find(key);
            if (it == rows.bar_idx.end()) {
                if (rows.bar.complete)
                    throw std::logic_error("cone matrix: split left a complete bar slice");
                out.leaked = true;
                continue;
            }
            out.mat.set(it->second, j, -t.coeff);
        }
        auto it = rows.full_idx.find(encode(g));
        if (it == rows.full_idx.end()) {
            if (rows.full.complete)
                throw std::logic_error("cone matrix: inclusion image missing from full slice");
            out.leaked = true;
        } else {
            out.mat.set(full_row_base + it->second, j, 1);
        }
    }
    for (int j = 0; j < cols.full.size(); ++j) {
        const HairyGraph& g = (*cols.full.graphs)[j];
        FormalSum dy = differential(inject(g, w.p, Flavor::A), DifferentialKind::Full);
        for (const auto& [key, t] : dy.terms()) {
            auto it = rows.full_idx.find(key);
            if (it == rows.full_idx.end()) {
                if (rows.full.complete)
                    throw std::logic_error("cone matrix: differential left a complete slice");
                out.leaked = true;
                continue;
            }
            out.mat.set(full_row_base + it->second, cols.bar.size() + j, t.coeff);
        }
    }
    return out;
}

}  // namespace

BettiReport cone_betti(const Window& w, long degree) {
    DifferentialMatrix down = assemble_cone_matrix(w, degree);
    DifferentialMatrix in = assemble_cone_matrix(w, degree + 1);
    BettiReport r;
    r.degree = degree;
    r.kernel_dim = down.mat.cols - rank_exact(down.mat);
    r.image_dim = rank_exact(in.mat);
    r.betti = r.kernel_dim - r.image_dim;
    r.certified = down.rows_complete && down.cols_complete && in.cols_complete && !down.leaked &&
                  !in.leaked;
    return r;
}

std::string cycle_class_name(CycleClass c) {
    switch (c) {
        case CycleClass::NotCycle: return "NotCycle";
        case CycleClass::Boundary: return "Boundary";
        case CycleClass::NontrivialInWindow: return "NontrivialInWindow";
    }
    return "?";
}

namespace {

// rank([M]) vs rank([M | v]); v given as (row index, coefficient) pairs.
bool in_column_span(const SparseMatrix& m, const std::map<int, Rational>& v) {
    SparseMatrix aug;
    aug.resize(m.rows, m.cols + 1);
    aug.columns = m.columns;
    aug.columns.push_back(v);
    return rank_exact(aug) == rank_exact(m);
}

}  // namespace

CycleClass cycle_class_check(const FormalSum& x, const Window& w) {
    if (x.flavor() != w.flavor) throw std::invalid_argument("cycle_class_check: flavor mismatch");
    if (x.empty()) return CycleClass::Boundary;
    if (!differential(x, flavor_kind(x.flavor())).empty()) return CycleClass::NotCycle;
    long d = x.homogeneous_degree();
    SliceView slice = slice_view(w, d);
    auto idx = index_of(slice);
    std::map<int, Rational> v;
    for (const auto& [key, t] : x.terms()) {
        auto it = idx.find(key);
        if (it == idx.end())
            throw std::invalid_argument("cycle_class_check: element outside the window basis");
        v[it->second] = t.coeff;
    }
    DifferentialMatrix in = assemble_matrix(w, d + 1, flavor_kind(x.flavor()));
    return in_column_span(in.mat, v) ? CycleClass::Boundary : CycleClass::NontrivialInWindow;
}

CycleClass cone_cycle_class_check(const ConeElement& x, const Window& w) {
    if (x.is_zero()) return CycleClass::Boundary;
    if (!cone_differential(x).is_zero()) return CycleClass::NotCycle;
    long cone_deg =
        x.full_part.empty() ? x.bar_part.homogeneous_degree() + 1 : x.full_part.homogeneous_degree();
    ConeBasis basis = cone_basis(w, cone_deg);
    std::map<int, Rational> v;
    for (const auto& [key, t] : x.bar_part.terms()) {
        auto it = basis.bar_idx.find(key);
        if (it == basis.bar_idx.end())
            throw std::invalid_argument("cone_cycle_class_check: bar part outside window");
        v[it->second] = t.coeff;
    }
    for (const auto& [key, t] : x.full_part.terms()) {
        auto it = basis.full_idx.find(key);
        if (it == basis.full_idx.end())
            throw std::invalid_argument("cone_cycle_class_check: full part outside window");
        v[basis.bar.size() + it->second] = t.coeff;
    }
    DifferentialMatrix in = assemble_cone_matrix(w, cone_deg + 1);
    return in_column_span(in.mat, v) ? CycleClass::Boundary : CycleClass::NontrivialInWindow;
}

}  // namespace hgc
