#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "hgc/canonical.hpp"
#include "hgc/rational.hpp"

namespace hgc {

// Exact rational linear combination of canonical graphs. Keys are canonical
// encodings so term order is deterministic; zero-sign graphs are never
// stored and negative-sign representatives fold into the coefficient.
class FormalSum {
  public:
    struct Term {
        HairyGraph graph;
        Rational coeff;
    };

    FormalSum(Parameters p, Flavor f) : p_(p), f_(f) {}

    const Parameters& params() const { return p_; }
    Flavor flavor() const { return f_; }
    const std::map<std::string, Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    // Canonicalizes g and adds c * [g]; drops zero graphs and pruned terms.
    void add_graph(const HairyGraph& g, const Rational& c, Mode mode = Mode::Strict);
    // Adds c * [g] for an already-canonical g (no canonicalization pass).
    void add_canonical(const HairyGraph& g, const Rational& c);

    FormalSum& operator+=(const FormalSum& other);
    FormalSum& operator*=(const Rational& c);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
    FormalSum operator-() const;

    bool operator==(const FormalSum& other) const;

    // Coefficient of a canonical graph (zero when absent).
    Rational coeff(const HairyGraph& canonical_graph) const;

    // All terms share this degree; throws when the sum is inhomogeneous.
    long homogeneous_degree() const;
    bool is_homogeneous() const;

  private:
    Parameters p_;
    Flavor f_;
    std::map<std::string, Term> terms_;
};

FormalSum add(const FormalSum& a, const FormalSum& b);
FormalSum scale(const Rational& q, const FormalSum& a);

// Single-term sum sign * [canonical(g)], empty when the graph is zero.
FormalSum inject(const HairyGraph& g, const Parameters& p, Flavor f, Mode mode = Mode::Strict);

// Re-flavors every graph of an Abar sum as an A-flavor sum (identity on
// graphs; the inclusion of complexes).
FormalSum inclusion_bar_to_full(const FormalSum& x);

// Bijection between Aprime and A elements identifying epsilon and 1 hairs.
FormalSum reflavor(const FormalSum& x, Flavor target);
HairyGraph reflavor_graph(const HairyGraph& g, Flavor target);

}  // namespace hgc
