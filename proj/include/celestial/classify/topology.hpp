#pragma once

#include "celestial/translate.hpp"

#include <cstdint>
#include <string>

namespace celestial {

enum class Topology { exclusive_tori, torus, inclusive_tori, not_applicable };
std::string to_string(Topology t);

struct TopologyResult {
    Topology tag = Topology::not_applicable;
    int real_points = 0;
    bool double_root = false;
    // the little member t -> F(s_member, t) used for the count
    Rational s_member;
    // common roots with the coincident circle, chart (t0:t1) = (t : 1)
    UPoly<Rational> intersection;
    bool at_infinity = false;
};

// forms of a circle pulled back along a member curve, as binary forms in (t0, t1)
std::array<Poly, 2> circle_forms_on(const Circle& c, const std::array<Poly, 5>& curve);

TopologyResult topology_class(const SurfaceParam& f, const CoincidentRulings& cr, std::uint64_t seed = 1);

} // namespace celestial
