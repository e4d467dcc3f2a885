#pragma once

#include "graycube/morphism.hpp"
#include "graycube/solver.hpp"

#include <map>

namespace graycube {

/// A cell table: source[k] = x⁻_k, target[k] = x⁺_k for 0 <= k <= n, with
/// source[n] == target[n]. Identity cells have a zero top entry.
struct Cell {
    std::vector<Chain> source;
    std::vector<Chain> target;

    int dimension() const { return static_cast<int>(source.size()) - 1; }
    const Chain& top() const { return source.back(); }
    bool is_identity() const { return dimension() > 0 && top().is_zero(); }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend bool operator<(const Cell& a, const Cell& b)
    {
        if (a.source.size() != b.source.size())
            return a.source.size() < b.source.size();
        if (a.source != b.source)
            return a.source < b.source;
        return a.target < b.target;
    }
};

/// Empty string when `c` satisfies the table invariants in K.
inline std::string check_cell(const Complex& k, const Cell& c)
{
    int n = c.dimension();
    if (n < 0 || c.target.size() != c.source.size())
        return "malformed table";
    if (!(c.source[static_cast<std::size_t>(n)] == c.target[static_cast<std::size_t>(n)]))
        return "top entries differ";
    for (int j = 0; j <= n; ++j)
        for (auto* e : {&c.source[static_cast<std::size_t>(j)], &c.target[static_cast<std::size_t>(j)]}) {
            if (!e->is_positive())
                return "entry in degree " + std::to_string(j) + " is not positive";
            for (auto& [id, v] : e->terms())
                if (!k.contains(id) || k.at(id).degree != j)
                    return "entry in degree " + std::to_string(j) + " has a wrong-degree term";
        }
    if (c.source[0].augmentation() != 1 || c.target[0].augmentation() != 1)
        return "degree-0 entries do not have augmentation 1";
    for (int j = 1; j <= n; ++j) {
        Chain want = c.target[static_cast<std::size_t>(j - 1)] - c.source[static_cast<std::size_t>(j - 1)];
        for (auto* e : {&c.source[static_cast<std::size_t>(j)], &c.target[static_cast<std::size_t>(j)]})
            if (!(k.boundary(*e) == want))
                return "boundary condition fails in degree " + std::to_string(j);
    }
    return {};
}

/// The atom generated by one basis element.
inline Cell atom_cell(const Complex& k, const std::string& id)
{
    auto& x = k.at(id);
    int n = x.degree;
    Cell c;
    c.source.resize(static_cast<std::size_t>(n + 1));
    c.target.resize(static_cast<std::size_t>(n + 1));
    Chain top = Chain::basis(n, id);
    for (int j = 0; j <= n; ++j) {
        c.source[static_cast<std::size_t>(j)] = iterated_face(k, top, -1, j);
        c.target[static_cast<std::size_t>(j)] = iterated_face(k, top, +1, j);
    }
    if (auto err = check_cell(k, c); !err.empty())
        throw DomainError("atom of '" + id + "' is not a cell (" + err + "); is the complex valid?");
    return c;
}

/// Identity of an n-cell, as an (n+1)-cell.
inline Cell identity_cell(const Cell& c)
{
    Cell r = c;
    r.source.push_back(Chain(c.dimension() + 1));
    r.target.push_back(Chain(c.dimension() + 1));
    return r;
}

inline Cell padded(Cell c, int dim)
{
    while (c.dimension() < dim)
        c = identity_cell(c);
    return c;
}

/// k-source / k-target of a cell, as a k-cell.
inline Cell boundary_cell(const Cell& c, int k, bool target_side)
{
    Cell r;
    r.source.assign(c.source.begin(), c.source.begin() + k + 1);
    r.target.assign(c.target.begin(), c.target.begin() + k + 1);
    if (target_side)
        r.source[static_cast<std::size_t>(k)] = r.target[static_cast<std::size_t>(k)];
    else
        r.target[static_cast<std::size_t>(k)] = r.source[static_cast<std::size_t>(k)];
    return r;
}

/// Composite a #_k b, defined when the k-target of a is the k-source of b.
/// Lower-dimensional operands are padded with identities.
inline Cell compose_cells(const Complex& k, const Cell& a, const Cell& b, int along)
{
    if (along < 0 || along >= a.dimension() || along >= b.dimension())
        throw CompositionError("composition degree " + std::to_string(along) + " out of range");
    Cell at = boundary_cell(a, along, true);
    Cell bs = boundary_cell(b, along, false);
    for (int j = 0; j <= along; ++j) {
        auto u = static_cast<std::size_t>(j);
        if (!(at.source[u] == bs.source[u]) || !(at.target[u] == bs.target[u]))
            throw CompositionError("cells are not composable: tables differ in degree " + std::to_string(j));
    }
    int n = std::max(a.dimension(), b.dimension());
    Cell pa = padded(a, n), pb = padded(b, n);
    Cell r;
    r.source.resize(static_cast<std::size_t>(n + 1));
    r.target.resize(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
        auto u = static_cast<std::size_t>(j);
        if (j < along) {
            r.source[u] = pa.source[u];
            r.target[u] = pa.target[u];
        }
        else if (j == along) {
            r.source[u] = pa.source[u];
            r.target[u] = pb.target[u];
        }
        else {
            r.source[u] = pa.source[u] + pb.source[u];
            r.target[u] = pa.target[u] + pb.target[u];
        }
    }
    if (auto err = check_cell(k, r); !err.empty())
        throw CompositionError("composite violates the table invariants: " + err);
    return r;
}

struct EnumerationLimits {
    int max_dim = 3;
    Coefficient coeff_bound = 2;
    std::size_t cap_per_degree = 1'000'000; ///< cells per degree before giving up
};

namespace detail {

using LowerKey = std::pair<std::vector<Chain>, std::vector<Chain>>;

// Extends a set of parallel-grouped (n-1)-cells to all n-cells between them.
inline std::vector<Cell> cells_above(const Complex& k, const std::vector<Cell>& lower, const EnumerationLimits& lim, int n)
{
    std::map<LowerKey, std::vector<const Cell*>> groups;
    for (auto& c : lower) {
        LowerKey key{{c.source.begin(), c.source.end() - 1}, {c.target.begin(), c.target.end() - 1}};
        groups[key].push_back(&c);
    }
    std::vector<Cell> out;
    for (auto& [key, members] : groups)
        for (auto* u : members)
            for (auto* v : members) {
                Chain want = v->top() - u->top();
                auto tops = solve_boundary(k, n, want, {lim.coeff_bound, lim.cap_per_degree});
                for (auto& x : tops) {
                    Cell c;
                    c.source = u->source;
                    c.target = v->target;
                    c.source.push_back(x);
                    c.target.push_back(x);
                    // target[n-1] must be v's top and source[n-1] u's top
                    c.target[static_cast<std::size_t>(n - 1)] = v->top();
                    c.source[static_cast<std::size_t>(n - 1)] = u->top();
                    out.push_back(std::move(c));
                    if (out.size() > lim.cap_per_degree)
                        throw ResourceError("cell enumeration exceeded " + std::to_string(lim.cap_per_degree) +
                                            " cells in degree " + std::to_string(n));
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// All cells of dimension <= max_dim with coefficients <= coeff_bound, in
/// canonical order (by dimension, then table).
inline std::vector<Cell> enumerate_cells(const Complex& k, const EnumerationLimits& lim = {})
{
    std::vector<Cell> level;
    for (auto i : k.of_degree(0)) {
        Chain p = Chain::basis(0, k.at(i).id);
        level.push_back({{p}, {p}});
    }
    std::sort(level.begin(), level.end());
    std::vector<Cell> all = level;
    for (int n = 1; n <= lim.max_dim; ++n) {
        level = detail::cells_above(k, level, lim, n);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

/// Cells of dimension 1..max_dim from a to b.
inline std::vector<Cell> hom_set(const Complex& k, const std::string& a, const std::string& b,
                                 const EnumerationLimits& lim = {}, bool include_identities = true)
{
    for (auto* p : {&a, &b})
        if (!k.contains(*p) || k.at(*p).degree != 0)
            throw DomainError("'" + *p + "' is not a point");
    std::vector<Cell> all;
    if (lim.max_dim < 1)
        return all;
    Chain pa = Chain::basis(0, a), pb = Chain::basis(0, b);
    std::vector<Cell> level;
    for (auto& x : solve_boundary(k, 1, pb - pa, {lim.coeff_bound, lim.cap_per_degree}))
        level.push_back({{pa, x}, {pb, x}});
    std::sort(level.begin(), level.end());
    all = level;
    for (int n = 2; n <= lim.max_dim; ++n) {
        level = detail::cells_above(k, level, lim, n);
        all.insert(all.end(), level.begin(), level.end());
    }
    if (!include_identities)
        std::erase_if(all, [](const Cell& c) { return c.is_identity(); });
    return all;
}

/// Applies f entrywise; the result is re-checked against the table invariants.
inline Cell apply_morphism_cellwise(const Morphism& f, const Cell& c)
{
    Cell r;
    for (auto& e : c.source)
        r.source.push_back(f.apply(e));
    for (auto& e : c.target)
        r.target.push_back(f.apply(e));
    if (auto err = check_cell(*f.target(), r); !err.empty())
        throw ConstructionError("image of a cell violates the table invariants (" + err + ")");
    return r;
}

struct HomComparison {
    std::string a, b;
    std::size_t source_count = 0;
    std::size_t target_count = 0;
    bool injective = false;
    bool surjective = false;
};

struct FullFaithfulnessReport {
    bool fully_faithful = true;
    bool complete = true; ///< false when an enumeration guard was hit
    std::vector<HomComparison> pairs;
};

/// For each pair of points, checks that f induces a bijection between the
/// bounded hom-sets. An empty `pairs` list means all ordered pairs of points.
inline FullFaithfulnessReport check_fully_faithful(const Morphism& f,
                                                   std::vector<std::pair<std::string, std::string>> pairs,
                                                   const EnumerationLimits& lim = {})
{
    auto& src = *f.source();
    auto& tgt = *f.target();
    if (pairs.empty())
        for (auto i : src.of_degree(0))
            for (auto j : src.of_degree(0))
                pairs.emplace_back(src.at(i).id, src.at(j).id);
    auto point_of = [](const Chain& c) { return c.terms().begin()->first; };
    FullFaithfulnessReport report;
    for (auto& [a, b] : pairs) {
        HomComparison cmp{a, b};
        try {
            auto hs = hom_set(src, a, b, lim);
            auto ht = hom_set(tgt, point_of(f(a)), point_of(f(b)), lim);
            cmp.source_count = hs.size();
            cmp.target_count = ht.size();
            std::vector<Cell> images;
            for (auto& c : hs)
                images.push_back(apply_morphism_cellwise(f, c));
            std::sort(images.begin(), images.end());
            cmp.injective = std::adjacent_find(images.begin(), images.end()) == images.end();
            cmp.surjective = images.size() >= ht.size() &&
                             std::includes(images.begin(), images.end(), ht.begin(), ht.end());
        }
        catch (const ResourceError&) {
            report.complete = false;
        }
        report.fully_faithful = report.fully_faithful && cmp.injective && cmp.surjective;
        report.pairs.push_back(cmp);
    }
    return report;
}

} // namespace graycube
