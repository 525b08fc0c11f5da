#include "stabmod/gmod/catalog.hpp"

#include "stabmod/hopf/builtins.hpp"

namespace stabmod::gmod {

AModule joker(int offset)
{
    auto name = [](int d) { return "j" + std::to_string(d); };
    std::vector<std::pair<std::string, int>> basis;
    for (int d = -2; d <= 2; ++d)
        basis.push_back({name(d), d + offset});
    return module_from_arrows(hopf::builtin_A1(), basis,
                              {{"Sq1", name(-2), {name(-1)}},
                               {"Sq1", name(1), {name(2)}},
                               {"Sq2", name(-2), {name(0)}},
                               {"Sq2", name(-1), {name(1)}},
                               {"Sq2", name(0), {name(2)}}});
}

AModule module_M()
{
    return module_from_arrows(hopf::builtin_E1(),
                              {{"m0", 0}, {"m2", 2}, {"m3", 3}, {"m4", 4}, {"m5", 5}, {"m7", 7}},
                              {{"Q0", "m2", {"m3"}},
                               {"Q0", "m4", {"m5"}},
                               {"Q1", "m0", {"m3"}},
                               {"Q1", "m2", {"m5"}},
                               {"Q1", "m4", {"m7"}}});
}

AModule module_N()
{
    return module_from_arrows(hopf::builtin_E1(), {{"n-1", -1}, {"n0", 0}, {"n1", 1}, {"n2", 2}},
                              {{"Q0", "n-1", {"n0"}}, {"Q0", "n1", {"n2"}}, {"Q1", "n-1", {"n2"}}});
}

} // namespace stabmod::gmod
