#pragma once

#include "celestial/classify/lattice.hpp"
#include "celestial/fixtures.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace celestial {

enum class CliffordKind { great_great, great_little, little_little, not_clifford };
std::string to_string(CliffordKind k);
CliffordKind clifford_kind(const Fixture& f);

struct ReportDegrees {
    int sphere = 0;
    int tau = 0;
    int pi = 0;
    // euclidean kind: bidegree of the inverse stereographic lift
    std::optional<std::array<int, 2>> lift_bidegree;
    bool operator==(const ReportDegrees&) const = default;
};

struct SingularComponentRecord {
    std::string label; // V0 V1 V2 Va Vb W0 W1 W2 other
    std::string level; // sphere or tau
    std::string curve;
    int multiplicity = 0;
    std::optional<int> sectional_delta;
    std::string certificate;
    bool operator==(const SingularComponentRecord&) const = default;
};

struct ExpectationDiff {
    std::string check;
    std::string expected;
    std::string actual;
    bool operator==(const ExpectationDiff&) const = default;
};

struct ClassificationReport {
    ReportDegrees degrees;
    std::string elliptic_type;
    std::string euclidean_type;
    std::vector<SingularComponentRecord> singular_components;
    std::string topology = "n/a";
    std::vector<LatticeCheck> lattice_checks;
    std::vector<ExpectationDiff> expectation_diffs;
    std::string implicit_tau;
    std::string implicit_pi;
    bool operator==(const ClassificationReport&) const = default;
};

ClassificationReport classify_celestial(const Fixture& f);

std::string to_json(const ClassificationReport& r, int indent = 2);
ClassificationReport report_from_json(const std::string& text);

} // namespace celestial
