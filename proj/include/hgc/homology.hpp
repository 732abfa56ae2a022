#pragma once

#include "hgc/basis.hpp"
#include "hgc/complexes.hpp"

namespace hgc {

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::map<int, Rational>> columns;  // col -> (row -> entry)

    void resize(int r, int c) {
        rows = r;
        cols = c;
        columns.assign(c, {});
    }
    void set(int r, int c, const Rational& v) {
        if (v != 0) columns[c][r] = v;
    }
    long nnz() const {
        long t = 0;
        for (const auto& col : columns) t += static_cast<long>(col.size());
        return t;
    }
};

// Exact rank over Q: denominators cleared per column, then fraction-free
// one-step elimination with Markowitz-style pivoting (sparsest column
// first, ties by index, then lowest active row).
int rank_exact(const SparseMatrix& m);

// Independent oracle: plain rational Gaussian elimination on a dense copy.
int rank_dense_oracle(const SparseMatrix& m);

// The differential of basis graphs at `degree` expanded in the basis one
// degree below. `leaked` records terms that fell outside the row slice of
// an incomplete window; with a complete row slice such a term is an
// internal consistency failure and throws.
struct DifferentialMatrix {
    SparseMatrix mat;
    long degree = 0;
    bool rows_complete = false;
    bool cols_complete = false;
    bool leaked = false;
};

DifferentialMatrix assemble_matrix(const Window& w, long degree, DifferentialKind kind);

struct BettiReport {
    long degree = 0;
    int kernel_dim = 0;
    int image_dim = 0;
    int betti = 0;
    bool certified = false;
};

BettiReport betti(const Window& w, DifferentialKind kind, long degree);

// Mapping-cone homology of Abar -> A over the window geometry (the window's
// flavor field is ignored; both flavors are enumerated with its bounds).
// Cone degree k holds Abar degree k-1 and A degree k.
BettiReport cone_betti(const Window& w, long degree);

enum class CycleClass { NotCycle, Boundary, NontrivialInWindow };
std::string cycle_class_name(CycleClass c);

// NotCycle if dx != 0; Boundary if x lies in the image of the incoming
// matrix; certified nontrivial otherwise (exact when the report's slices
// were complete -- the caller can consult betti() for that).
CycleClass cycle_class_check(const FormalSum& x, const Window& w);
CycleClass cone_cycle_class_check(const ConeElement& x, const Window& w);

}  // namespace hgc
