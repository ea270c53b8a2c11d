#include "celestial/acceptance.hpp"

#include <iostream>

int main()
{
    auto rs = celestial::run_acceptance();
    std::cout << celestial::format_results(rs);
    return celestial::all_pass(rs) ? 0 : 1;
}
