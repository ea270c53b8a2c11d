#pragma once

#include "celestial/moebius.hpp"
#include "celestial/translate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace celestial {

enum class FixtureMode { clifford_left, clifford_right, euclidean };

struct Fixture {
    std::string name;
    Circle c1, c2;
    FixtureMode mode = FixtureMode::clifford_left;
    int max_degree = 8;
    std::uint64_t seed = 1;
    std::optional<SpherePoint> center;
};

std::string to_string(FixtureMode m);
FixtureMode parse_mode(const std::string& s);

SurfaceParam synthesize(const Fixture& f);

// the first circle of all built-in Clifford fixtures: unit circle of the w-i plane
Circle great_circle_wi();
Circle great_circle_wj();

// little circle through m in the chart plane y = 0 with center (1, 0, r) and radius r
Circle radius_family_circle(const Rational& r);

// names: torus, great-little, little-little, topology-exclusive, topology-torus,
// topology-inclusive, euclid-plane, euclid-circular-cylinder, euclid-elliptic-cylinder, euclid-quartic
std::vector<std::string> builtin_fixture_names();
Fixture builtin_fixture(const std::string& name);

// parse a fixture JSON document; errors carry a field path or a byte position
Fixture parse_fixture(const std::string& text, const std::string& name = "fixture");
Circle parse_circle_json(const std::string& text);

// inverse of parse_fixture; circles are written by their three spanning points, base first
std::string fixture_to_json(const Fixture& f);

} // namespace celestial
