#include "stabmod/hopf/builtins.hpp"

namespace stabmod::hopf {

Presentation presentation_E1()
{
    Presentation p;
    p.name = "E1";
    p.generators = {{"Q0", 1}, {"Q1", 3}};
    p.relations = {{"(Q0)^2", {{0, 0}}}, {"(Q1)^2", {{1, 1}}}, {"Q0 Q1 + Q1 Q0", {{0, 1}, {1, 0}}}};
    return p;
}

Presentation presentation_A1()
{
    Presentation p;
    p.name = "A1";
    p.generators = {{"Sq1", 1}, {"Sq2", 2}};
    p.relations = {{"(Sq1)^2", {{0, 0}}}, {"(Sq2)^2 + Sq1 Sq2 Sq1", {{1, 1}, {0, 1, 0}}}};
    p.coproducts[1].terms = {{{1}, {}}, {{0}, {0}}, {{}, {1}}};
    return p;
}

HopfPtr builtin_E1()
{
    static const HopfPtr e1 = [] {
        HopfAlgebra h;
        h.name = "E1";
        h.basis_names = {"1", "Q0", "Q1", "Q0 Q1"};
        h.degrees = {0, 1, 3, 4};
        h.mult = {
            {0x1, 0x2, 0x4, 0x8},
            {0x2, 0x0, 0x8, 0x0},
            {0x4, 0x8, 0x0, 0x0},
            {0x8, 0x0, 0x0, 0x0},
        };
        h.comult = {
            {{0, 0}},
            {{0, 1}, {1, 0}},
            {{0, 2}, {2, 0}},
            {{0, 3}, {1, 2}, {2, 1}, {3, 0}},
        };
        h.counit = 0x1;
        h.antipode = {0x1, 0x2, 0x4, 0x8};
        h.generators = {1, 2};
        h.relations = presentation_E1().relations;
        finalize(h);
        return std::make_shared<const HopfAlgebra>(std::move(h));
    }();
    return e1;
}

HopfPtr builtin_A1()
{
    static const HopfPtr a1 = [] {
        HopfAlgebra h;
        h.name = "A1";
        h.basis_names = {"1", "Sq1", "Sq2", "Sq1 Sq2", "Sq2 Sq1", "Sq1 Sq2 Sq1", "Sq2 Sq1 Sq2", "Sq1 Sq2 Sq1 Sq2"};
        h.degrees = {0, 1, 2, 3, 3, 4, 5, 6};
        h.mult = {
            {0x1, 0x2, 0x4, 0x8, 0x10, 0x20, 0x40, 0x80},
            {0x2, 0x0, 0x8, 0x0, 0x20, 0x0, 0x80, 0x0},
            {0x4, 0x10, 0x20, 0x40, 0x0, 0x80, 0x0, 0x0},
            {0x8, 0x20, 0x0, 0x80, 0x0, 0x0, 0x0, 0x0},
            {0x10, 0x0, 0x40, 0x0, 0x80, 0x0, 0x0, 0x0},
            {0x20, 0x0, 0x80, 0x0, 0x0, 0x0, 0x0, 0x0},
            {0x40, 0x80, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0},
            {0x80, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0, 0x0},
        };
        h.comult = {
            {{0, 0}},
            {{0, 1}, {1, 0}},
            {{0, 2}, {1, 1}, {2, 0}},
            {{0, 3}, {1, 2}, {2, 1}, {3, 0}},
            {{0, 4}, {1, 2}, {2, 1}, {4, 0}},
            {{0, 5}, {1, 3}, {1, 4}, {3, 1}, {4, 1}, {5, 0}},
            {{0, 6}, {1, 5}, {2, 3}, {2, 4}, {3, 2}, {4, 2}, {5, 1}, {6, 0}},
            {{0, 7}, {1, 6}, {2, 5}, {3, 4}, {4, 3}, {5, 2}, {6, 1}, {7, 0}},
        };
        h.counit = 0x1;
        h.antipode = {0x1, 0x2, 0x4, 0x10, 0x8, 0x20, 0x40, 0x80};
        h.generators = {1, 2};
        h.relations = presentation_A1().relations;
        // Q0 = Sq1, Q1 = Sq1 Sq2 + Sq2 Sq1.
        h.quasi_elementary = {{"E1", {"Q0", "Q1"}, {0x2, 0x18}}};
        finalize(h);
        return std::make_shared<const HopfAlgebra>(std::move(h));
    }();
    return a1;
}

const SubHopfInclusion& builtin_E1_in_A1()
{
    static const SubHopfInclusion inc = make_inclusion(builtin_E1(), builtin_A1(), {0x2, 0x18});
    return inc;
}

HopfPtr builtin_by_name(const std::string& name)
{
    if (name == "A1" || name == "A(1)")
        return builtin_A1();
    if (name == "E1" || name == "E(1)")
        return builtin_E1();
    if (name == "F")
        return trivial_algebra();
    return nullptr;
}

} // namespace stabmod::hopf
