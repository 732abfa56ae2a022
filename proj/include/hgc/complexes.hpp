#pragma once

#include "hgc/formal.hpp"

namespace hgc {

// SplitOnly is the Abar differential, Full the A one (split + join), Prime
// the Aprime one (split + join with the Aprime product table).
enum class DifferentialKind { SplitOnly, Full, Prime };

Flavor kind_flavor(DifferentialKind k);
DifferentialKind flavor_kind(Flavor f);
std::string kind_name(DifferentialKind k);
DifferentialKind kind_from_string(const std::string& s);

// Vertex-splitting part; defined for every flavor.
FormalSum delta_split(const FormalSum& x);

// Hair-fusion part; undefined on Abar (throws).
FormalSum delta_join(const FormalSum& x);

// The differential of the respective complex; lowers degree by 1 and
// squares to zero. Normalized so that dL = D in flavor A for n even.
FormalSum differential(const FormalSum& x, DifferentialKind k);

// Mapping cone of the inclusion Abar -> A, graded C_k = Abar_(k-1) + A_k
// so that the differential (x,y) -> (-d x, i(x) + d y) lowers the cone
// degree by one; a homogeneous element has bar degree = full degree - 1.
struct ConeElement {
    FormalSum bar_part;
    FormalSum full_part;

    ConeElement(Parameters p) : bar_part(p, Flavor::Abar), full_part(p, Flavor::A) {}
    ConeElement(FormalSum bar, FormalSum full);

    bool is_zero() const { return bar_part.empty() && full_part.empty(); }
    bool operator==(const ConeElement&) const = default;
};

ConeElement cone_differential(const ConeElement& c);

namespace detail {
// Shared global normalization of all differential-type operators.
inline constexpr int kDiffSign = -1;
}  // namespace detail

}  // namespace hgc
