#include "hgc/formal.hpp"

namespace hgc {

void FormalSum::add_canonical(const HairyGraph& g, const Rational& c) {
    if (c == 0) return;
    std::string key = encode(g);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), Term{g, c});
    } else {
        it->second.coeff += c;
        if (it->second.coeff == 0) terms_.erase(it);
    }
}

void FormalSum::add_graph(const HairyGraph& g, const Rational& c, Mode mode) {
    if (c == 0) return;
    auto canon = canonicalize(g, p_, f_, mode);
    if (canon.is_zero()) return;
    add_canonical(canon.graph, canon.sign * c);
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    if (!(p_ == other.p_) || f_ != other.f_)
        throw std::invalid_argument("formal sum: parameter/flavor mismatch");
    for (const auto& [k, t] : other.terms_) add_canonical(t.graph, t.coeff);
    return *this;
}

FormalSum& FormalSum::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, t] : terms_) t.coeff *= c;
    return *this;
}

FormalSum FormalSum::operator-() const {
    FormalSum r = *this;
    r *= -1;
    return r;
}

bool FormalSum::operator==(const FormalSum& other) const {
    if (!(p_ == other.p_) || f_ != other.f_) return false;
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [k, t] : terms_) {
        if (k != it->first || t.coeff != it->second.coeff) return false;
        ++it;
    }
    return true;
}

Rational FormalSum::coeff(const HairyGraph& g) const {
    auto it = terms_.find(encode(g));
    return it == terms_.end() ? Rational(0) : it->second.coeff;
}

long FormalSum::homogeneous_degree() const {
    if (terms_.empty()) throw std::logic_error("empty sum has no degree");
    long d = degree(terms_.begin()->second.graph, p_);
    for (const auto& [k, t] : terms_)
        if (degree(t.graph, p_) != d) throw std::logic_error("sum is not homogeneous");
    return d;
}

bool FormalSum::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = degree(terms_.begin()->second.graph, p_);
    for (const auto& [k, t] : terms_)
        if (degree(t.graph, p_) != d) return false;
    return true;
}

FormalSum add(const FormalSum& a, const FormalSum& b) { return a + b; }

FormalSum scale(const Rational& q, const FormalSum& a) { return q * a; }

FormalSum inject(const HairyGraph& g, const Parameters& p, Flavor f, Mode mode) {
    FormalSum s(p, f);
    s.add_graph(g, 1, mode);
    return s;
}

HairyGraph reflavor_graph(const HairyGraph& g, Flavor target) {
    HairyGraph out = g;
    for (Dec& d : out.hairs) {
        if (d == Dec::Omega) continue;
        std::optional<Dec> u = dec_unit(target);
        if (!u) throw std::invalid_argument("reflavor: target flavor has no unit decoration");
        d = *u;
    }
    return out;
}

FormalSum reflavor(const FormalSum& x, Flavor target) {
    FormalSum out(x.params(), target);
    // One and epsilon share a decoration class, so canonical forms map over
    // verbatim with sign +1.
    for (const auto& [k, t] : x.terms()) out.add_canonical(reflavor_graph(t.graph, target), t.coeff);
    return out;
}

FormalSum inclusion_bar_to_full(const FormalSum& x) {
    if (x.flavor() != Flavor::Abar)
        throw std::invalid_argument("inclusion_bar_to_full: expected Abar input");
    FormalSum out(x.params(), Flavor::A);
    for (const auto& [k, t] : x.terms()) out.add_canonical(t.graph, t.coeff);
    return out;
}

}  // namespace hgc
