#pragma once

#include "graycube/morphism.hpp"
#include "graycube/solver.hpp"

namespace graycube {

struct SectionSearch {
    std::vector<Morphism> sections;
    Coefficient coeff_bound = 0;
};

/// Every positive chain map s with q ∘ s = id whose coefficients are bounded
/// by `coeff_bound`, built degree by degree. Completeness holds only within the
/// bound. With `bipointed`, only sections preserving both chosen points survive
/// (q's source and target must then carry bipointings).
inline SectionSearch solve_sections(const Morphism& q, Coefficient coeff_bound = 3, bool bipointed = false,
                                    std::size_t node_cap = 1'000'000)
{
    if (coeff_bound < 1)
        throw DomainError("solve_sections needs a positive coefficient bound (unbounded search is not supported)");
    const Complex& base = *q.target();  // sections go base -> total
    const Complex& total = *q.source();
    if (bipointed && (!base.is_bipointed() || !total.is_bipointed()))
        throw DomainError("bipointed section search needs bipointed complexes");

    // partial[i] = chosen image of base element i; grown one degree at a time
    std::vector<std::vector<Chain>> partials{std::vector<Chain>(base.size())};

    for (int deg = 0; deg <= base.dim(); ++deg) {
        std::vector<std::pair<std::size_t, std::vector<Chain>>> per_element;
        std::vector<std::vector<Chain>> next;
        for (auto& partial : partials) {
            per_element.clear();
            bool dead = false;
            for (auto xi : base.of_degree(deg)) {
                auto& x = base.at(xi);
                Chain want = Chain::basis(deg, x.id);
                std::vector<Chain> cands;
                if (deg == 0) {
                    for (auto pi : total.of_degree(0)) {
                        Chain p = Chain::basis(0, total.at(pi).id);
                        if (q.apply(p) == want)
                            cands.push_back(p);
                    }
                    if (bipointed) {
                        auto& bb = *base.bipointing();
                        auto& tb = *total.bipointing();
                        if (x.id == bb.bottom)
                            std::erase_if(cands, [&](const Chain& c) { return c.coefficient(tb.bottom) != 1; });
                        if (x.id == bb.top)
                            std::erase_if(cands, [&](const Chain& c) { return c.coefficient(tb.top) != 1; });
                    }
                }
                else {
                    // s(∂x) from lower degrees
                    Chain dx = base.boundary(x.id);
                    Chain target(deg - 1);
                    for (auto& [id, k] : dx.terms())
                        target += partial[base.index_of(id)].scaled(k);
                    // terms of s(x) must map under q into {0, x}
                    auto allowed = [&](std::size_t ti) {
                        const Chain& img = q(total.at(ti).id);
                        return img.is_zero() || img == want;
                    };
                    cands = solve_boundary(total, deg, target, {coeff_bound, node_cap}, allowed);
                    std::erase_if(cands, [&](const Chain& c) { return !(q.apply(c) == want); });
                }
                if (cands.empty()) {
                    dead = true;
                    break;
                }
                per_element.emplace_back(xi, std::move(cands));
            }
            if (dead)
                continue;
            // cartesian product of per-element candidates
            std::vector<std::size_t> pick(per_element.size(), 0);
            while (true) {
                auto ext = partial;
                for (std::size_t e = 0; e < per_element.size(); ++e)
                    ext[per_element[e].first] = per_element[e].second[pick[e]];
                next.push_back(std::move(ext));
                std::size_t e = 0;
                while (e < pick.size() && ++pick[e] == per_element[e].second.size())
                    pick[e++] = 0;
                if (e == pick.size())
                    break;
            }
        }
        partials = std::move(next);
    }

    SectionSearch out;
    out.coeff_bound = coeff_bound;
    auto base_ptr = q.target();
    auto total_ptr = q.source();
    for (auto& p : partials) {
        Morphism s(base_ptr, total_ptr, p);
        if (validate_morphism(s).empty() && is_identity(compose(q, s)))
            out.sections.push_back(std::move(s));
    }
    std::sort(out.sections.begin(), out.sections.end(),
              [](const Morphism& a, const Morphism& b) { return a.images() < b.images(); });
    return out;
}

} // namespace graycube
