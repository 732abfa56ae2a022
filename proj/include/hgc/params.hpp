#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hgc {

// Dimension pair (m, n); all parity sign rules derive from it.
struct Parameters {
    int m = 0;
    int n = 0;

    Parameters() = default;
    Parameters(int m_, int n_) : m(m_), n(n_) { validate(); }

    void validate() const {
        if (m < 1) throw std::invalid_argument("parameters: m must be positive");
        if (n - m < 3) throw std::invalid_argument("parameters: need n - m >= 3");
    }

    bool operator==(const Parameters&) const = default;
};

// Which decoration algebra governs hairs and hair-fusion products.
//   Abar:   span{w},    w*w = 0
//   A:      span{1, w}, 1*1 = 1, 1*w = w, w*w = 0
//   Aprime: span{e, w}, e*e = e, e*w = w*w = 0
enum class Flavor { Abar, A, Aprime };

enum class Dec : unsigned char { One, Epsilon, Omega };

inline int dec_code(Dec d) { return d == Dec::Omega ? 1 : 0; }

inline char dec_char(Dec d) {
    switch (d) {
        case Dec::One: return '1';
        case Dec::Epsilon: return 'e';
        case Dec::Omega: return 'w';
    }
    return '?';
}

inline Dec dec_from_char(char c) {
    switch (c) {
        case '1': return Dec::One;
        case 'e': return Dec::Epsilon;
        case 'w': return Dec::Omega;
    }
    throw std::invalid_argument(std::string("unknown decoration: ") + c);
}

inline bool dec_legal(Flavor f, Dec d) {
    switch (f) {
        case Flavor::Abar: return d == Dec::Omega;
        case Flavor::A: return d == Dec::One || d == Dec::Omega;
        case Flavor::Aprime: return d == Dec::Epsilon || d == Dec::Omega;
    }
    return false;
}

// Unit-like decoration of the flavor (the non-omega generator), if any.
inline std::optional<Dec> dec_unit(Flavor f) {
    switch (f) {
        case Flavor::Abar: return std::nullopt;
        case Flavor::A: return Dec::One;
        case Flavor::Aprime: return Dec::Epsilon;
    }
    return std::nullopt;
}

// Product of n_omega copies of w and n_unit copies of the unit-like
// decoration; nullopt encodes zero in the algebra.
inline std::optional<Dec> fuse(Flavor f, int n_omega, int n_unit) {
    if (n_omega + n_unit < 1) throw std::invalid_argument("fuse: empty product");
    switch (f) {
        case Flavor::Abar:
            if (n_unit > 0) throw std::invalid_argument("fuse: no unit decoration in Abar");
            return n_omega == 1 ? std::optional<Dec>(Dec::Omega) : std::nullopt;
        case Flavor::A:
            if (n_omega >= 2) return std::nullopt;
            return n_omega == 1 ? Dec::Omega : Dec::One;
        case Flavor::Aprime:
            if (n_omega >= 2) return std::nullopt;
            if (n_omega == 1) return n_unit == 0 ? std::optional<Dec>(Dec::Omega) : std::nullopt;
            return Dec::Epsilon;
    }
    return std::nullopt;
}

inline std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::Abar: return "Abar";
        case Flavor::A: return "A";
        case Flavor::Aprime: return "Aprime";
    }
    return "?";
}

inline Flavor flavor_from_name(const std::string& s) {
    if (s == "Abar" || s == "abar") return Flavor::Abar;
    if (s == "A" || s == "a") return Flavor::A;
    if (s == "Aprime" || s == "aprime") return Flavor::Aprime;
    throw std::invalid_argument("unknown flavor: " + s);
}

}  // namespace hgc
