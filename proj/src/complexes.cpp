#include "hgc/complexes.hpp"

#include "hgc/moves.hpp"

namespace hgc {

Flavor kind_flavor(DifferentialKind k) {
    switch (k) {
        case DifferentialKind::SplitOnly: return Flavor::Abar;
        case DifferentialKind::Full: return Flavor::A;
        case DifferentialKind::Prime: return Flavor::Aprime;
    }
    throw std::logic_error("bad kind");
}

DifferentialKind flavor_kind(Flavor f) {
    switch (f) {
        case Flavor::Abar: return DifferentialKind::SplitOnly;
        case Flavor::A: return DifferentialKind::Full;
        case Flavor::Aprime: return DifferentialKind::Prime;
    }
    throw std::logic_error("bad flavor");
}

std::string kind_name(DifferentialKind k) {
    switch (k) {
        case DifferentialKind::SplitOnly: return "split";
        case DifferentialKind::Full: return "full";
        case DifferentialKind::Prime: return "prime";
    }
    return "?";
}

DifferentialKind kind_from_string(const std::string& s) {
    if (s == "split") return DifferentialKind::SplitOnly;
    if (s == "full") return DifferentialKind::Full;
    if (s == "prime") return DifferentialKind::Prime;
    throw std::invalid_argument("unknown differential kind: " + s);
}

FormalSum delta_split(const FormalSum& x) {
    FormalSum out(x.params(), x.flavor());
    for (const auto& [k, t] : x.terms())
        for (const Move& mv : split_moves(t.graph, 2))
            out.add_graph(mv.graph, detail::kDiffSign * mv.sign * t.coeff);
    return out;
}

FormalSum delta_join(const FormalSum& x) {
    if (x.flavor() == Flavor::Abar)
        throw std::invalid_argument("delta_join: absent on the Abar complex");
    FormalSum out(x.params(), x.flavor());
    for (const auto& [k, t] : x.terms())
        for (const Move& mv : join_moves(t.graph, x.params(), x.flavor(), 2))
            out.add_graph(mv.graph, detail::kDiffSign * mv.sign * t.coeff);
    return out;
}

FormalSum differential(const FormalSum& x, DifferentialKind k) {
    if (x.flavor() != kind_flavor(k))
        throw std::invalid_argument("differential: flavor does not match kind");
    FormalSum out = delta_split(x);
    if (k != DifferentialKind::SplitOnly) out += delta_join(x);
    return out;
}

ConeElement::ConeElement(FormalSum bar, FormalSum full)
    : bar_part(std::move(bar)), full_part(std::move(full)) {
    if (bar_part.flavor() != Flavor::Abar || full_part.flavor() != Flavor::A)
        throw std::invalid_argument("cone element: parts must be (Abar, A)");
    if (!(bar_part.params() == full_part.params()))
        throw std::invalid_argument("cone element: parameter mismatch");
    if (!bar_part.empty() && !full_part.empty() &&
        bar_part.homogeneous_degree() != full_part.homogeneous_degree() - 1)
        throw std::invalid_argument(
            "cone element: bar degree must sit one below full degree");
}

ConeElement cone_differential(const ConeElement& c) {
    FormalSum bar = -differential(c.bar_part, DifferentialKind::SplitOnly);
    FormalSum full = inclusion_bar_to_full(c.bar_part) +
                     differential(c.full_part, DifferentialKind::Full);
    return ConeElement(std::move(bar), std::move(full));
}

}  // namespace hgc
