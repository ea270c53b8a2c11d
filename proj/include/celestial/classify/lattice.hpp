#pragma once

#include <string>
#include <utility>
#include <vector>

namespace celestial {

enum class LatticeType { S2, S4, S8, E4, U1 };
std::string to_string(LatticeType t);
LatticeType parse_lattice_type(const std::string& s);
const std::vector<LatticeType>& all_lattice_types();

using DivisorClass = std::vector<int>;

struct NamedClass {
    std::string name;
    DivisorClass c;
};

struct PicardLattice {
    LatticeType type;
    std::vector<std::string> basis;
    std::vector<std::vector<int>> gram;
    DivisorClass canonical;
    // sigma[i] is the image of basis element i
    std::vector<DivisorClass> sigma;
    // recorded section dimensions
    std::vector<std::pair<NamedClass, int>> h0_table;
    // hyperplane class of the model the type is used for
    NamedClass polarization;
    // S4 only: line classes L1..L4 and isolated singularity classes in the absolute
    std::vector<NamedClass> lines, singular;
    // S4: classes of circle families
    std::vector<NamedClass> families;
};

PicardLattice picard_lattice(LatticeType t);

int intersection_product(const PicardLattice& l, const DivisorClass& a, const DivisorClass& b);
int arithmetic_genus(const PicardLattice& l, const DivisorClass& c);
DivisorClass apply_sigma(const PicardLattice& l, const DivisorClass& c);

struct LatticeCheck {
    std::string name;
    bool pass = false;
    bool operator==(const LatticeCheck&) const = default;
};

std::vector<LatticeCheck> lattice_consistency(LatticeType t);

} // namespace celestial
