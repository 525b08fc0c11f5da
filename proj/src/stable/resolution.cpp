#include "stabmod/stable/stable.hpp"

#include <mutex>
#include <stdexcept>

namespace stabmod::stable {

namespace {

struct OneSided
{
    std::vector<std::vector<int>> generators; // P_0, P_1, ...
    std::vector<BitMatrix> differential;      // d_1, d_2, ... (index k-1 holds d_k)
    BitMatrix augmentation;
};

/// Minimal free resolution of m with terms P_0 .. P_length.
OneSided minimal_resolution(const AModule& m, int length)
{
    OneSided out;
    auto cover = minimal_cover(m);
    out.generators.push_back(cover.generator_degrees);
    out.augmentation = cover.map.matrix;
    ModuleMap current = cover.map;
    for (int k = 1; k <= length; ++k) {
        const auto kb = f2::kernel_basis(current.matrix);
        if (kb.rows() == 0) {
            out.generators.push_back({});
            out.differential.push_back(BitMatrix(current.matrix.cols(), 0));
            current = ModuleMap{gmod::share(gmod::zero_module(m.alg)), current.source, 0, BitMatrix(current.matrix.cols(), 0)};
            continue;
        }
        auto [kernel, inclusion] = gmod::submodule(current.source, kb);
        auto next = minimal_cover(kernel);
        out.generators.push_back(next.generator_degrees);
        out.differential.push_back(inclusion.matrix * next.map.matrix);
        current = ModuleMap{next.map.source, current.source, 0, out.differential.back()};
    }
    return out;
}

/// Invertible map from the standard free module onto a free module given in another basis.
BitMatrix standard_basis_iso(const AModule& free, std::vector<int>& generator_degrees)
{
    auto c = minimal_cover(free);
    if (c.map.matrix.rows() != c.map.matrix.cols() || f2::rank(c.map.matrix) != c.map.matrix.rows())
        throw std::logic_error("standard_basis_iso: module is not free");
    generator_degrees = c.generator_degrees;
    return c.map.matrix;
}

} // namespace

AModule CompleteResolution::term(int s) const { return gmod::free_module(module->alg, generators.at(s)); }

CompleteResolution complete_resolution(const AModule& m, int s_min, int s_max)
{
    if (s_min > s_max)
        throw std::invalid_argument("complete_resolution: empty window");
    CompleteResolution r;
    r.module = gmod::share(m);
    r.s_min = s_min;
    r.s_max = s_max;
    const auto& alg = m.alg;

    const int pos_len = std::max(s_max, 0);
    auto pos = minimal_resolution(m, pos_len);
    for (int k = 0; k <= pos_len; ++k)
        if (k >= s_min)
            r.generators[k] = pos.generators[static_cast<std::size_t>(k)];
    for (int k = 1; k <= pos_len; ++k)
        if (k - 1 >= s_min && k <= s_max)
            r.differential[k] = pos.differential[static_cast<std::size_t>(k - 1)];
    r.augmentation = pos.augmentation;

    const int neg_len = std::max(-1 - s_min, 0);
    auto neg = minimal_resolution(gmod::dual(m), neg_len);
    // P_{-1-k} is the standard free module isomorphic to dual(Q_k).
    std::vector<BitMatrix> to_dual; // phi_k : P_{-1-k} -> dual(Q_k)
    std::vector<BitMatrix> from_dual;
    for (int k = 0; k <= neg_len; ++k) {
        const auto qk = gmod::dual(gmod::free_module(alg, neg.generators[static_cast<std::size_t>(k)]));
        std::vector<int> degs;
        auto phi = standard_basis_iso(qk, degs);
        from_dual.push_back(*f2::inverse(phi));
        to_dual.push_back(std::move(phi));
        if (-1 - k >= s_min)
            r.generators[-1 - k] = degs;
    }
    r.coaugmentation = from_dual[0] * neg.augmentation.transpose();
    for (int k = 1; k <= neg_len; ++k)
        if (-k - 1 >= s_min && -k <= s_max)
            r.differential[-k] = from_dual[static_cast<std::size_t>(k)] * neg.differential[static_cast<std::size_t>(k - 1)].transpose() *
                                 to_dual[static_cast<std::size_t>(k - 1)];
    if (s_min <= -1 && s_max >= 0)
        r.differential[0] = r.coaugmentation * r.augmentation;
    return r;
}

std::shared_ptr<const CompleteResolution> unit_resolution(const hopf::HopfPtr& alg, int s_min, int s_max)
{
    static std::mutex mutex;
    static std::map<std::string, std::shared_ptr<const CompleteResolution>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[alg->name];
    if (slot && slot->s_min <= s_min && slot->s_max >= s_max && slot->module->alg == alg)
        return slot;
    int lo = s_min, hi = s_max;
    if (slot && slot->module->alg == alg) {
        lo = std::min(lo, slot->s_min);
        hi = std::max(hi, slot->s_max);
    }
    slot = std::make_shared<const CompleteResolution>(complete_resolution(gmod::unit_module(alg), lo, hi));
    return slot;
}

std::vector<std::string> check_resolution(const CompleteResolution& r)
{
    std::vector<std::string> report;
    const std::size_t da = static_cast<std::size_t>(r.module->alg->dim());
    for (auto& [s, d] : r.differential) {
        auto src = gmod::share(r.term(s));
        auto tgt = gmod::share(r.term(s - 1));
        for (const auto& e : gmod::validate_map(ModuleMap{src, tgt, 0, d}))
            report.push_back("d_" + std::to_string(s) + ": " + e);
        // The splice d_0 is minimal exactly when the module has no free summand, so it is not checked.
        for (std::size_t j = 0; s != 0 && j < r.generators.at(s - 1).size(); ++j)
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (d.get(j * da, c)) {
                    report.push_back("d_" + std::to_string(s) + " is not minimal");
                    j = r.generators.at(s - 1).size();
                    break;
                }
        if (r.differential.count(s - 1) && !(r.differential.at(s - 1) * d).is_zero())
            report.push_back("d_" + std::to_string(s - 1) + " d_" + std::to_string(s) + " != 0");
        if (r.differential.count(s + 1)) {
            const auto dim = static_cast<std::size_t>(src->dim());
            if (f2::rank(d) + f2::rank(r.differential.at(s + 1)) != dim)
                report.push_back("not exact at P_" + std::to_string(s));
        }
    }
    if (r.generators.count(0) && !(r.augmentation.rows() == static_cast<std::size_t>(r.module->dim()) &&
                                    f2::rank(r.augmentation) == r.augmentation.rows()))
        report.push_back("augmentation is not surjective");
    if (r.generators.count(-1) && f2::rank(r.coaugmentation) != static_cast<std::size_t>(r.module->dim()))
        report.push_back("coaugmentation is not injective");
    return report;
}

} // namespace stabmod::stable
