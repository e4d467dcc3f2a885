#pragma once

// Naive reference computations. They share no search code with the library:
// everything is plain enumeration over bounded coefficient vectors.

#include "graycube/graycube.hpp"

#include <functional>
#include <ostream>

namespace oracle {

using namespace graycube;

/// Every chain of degree `deg` with coefficients in [0, bound].
inline std::vector<Chain> all_bounded_chains(const Complex& k, int deg, Coefficient bound)
{
    auto elems = k.of_degree(deg);
    std::vector<Coefficient> c(elems.size(), 0);
    std::vector<Chain> out;
    while (true) {
        Chain ch(deg);
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (c[i] != 0)
                ch.add(k.at(elems[i]).id, c[i]);
        out.push_back(ch);
        std::size_t i = 0;
        while (i < c.size() && ++c[i] > bound)
            c[i++] = 0;
        if (i == c.size())
            break;
    }
    return out;
}

inline std::vector<Chain> boundary_solutions(const Complex& k, int deg, const Chain& target, Coefficient bound)
{
    std::vector<Chain> out;
    for (auto& c : all_bounded_chains(k, deg, bound))
        if (k.boundary(c) == target)
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

/// All bounded chains of one degree, grouped by boundary.
inline std::map<Chain, std::vector<Chain>> chains_by_boundary(const Complex& k, int deg, Coefficient bound)
{
    std::map<Chain, std::vector<Chain>> out;
    for (auto& c : all_bounded_chains(k, deg, bound)) {
        Chain b = k.boundary(c);
        b.set_degree(deg - 1);
        out[b].push_back(c);
    }
    for (auto& [b, v] : out)
        std::sort(v.begin(), v.end());
    return out;
}

/// Counts cells from a to b of dimensions 1..max_dim (identities included),
/// assembled level by level from naively enumerated chains.
class HomCounter {
public:
    HomCounter(const Complex& k, int max_dim, Coefficient bound) : max_dim_(max_dim)
    {
        by_boundary_.resize(static_cast<std::size_t>(max_dim + 1));
        for (int d = 1; d <= max_dim; ++d)
            by_boundary_[static_cast<std::size_t>(d)] = chains_by_boundary(k, d, bound);
    }

    std::size_t count(const std::string& a, const std::string& b) const
    {
        struct Table {
            std::vector<Chain> src, tgt;
        };
        Chain pa = Chain::basis(0, a), pb = Chain::basis(0, b);
        std::vector<Table> level;
        for (auto& x : lookup(1, pb - pa))
            level.push_back({{pa, x}, {pb, x}});
        std::size_t total = level.size();
        for (int d = 2; d <= max_dim_; ++d) {
            std::vector<Table> next;
            for (auto& u : level)
                for (auto& v : level) {
                    bool parallel = true;
                    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(d); ++j)
                        parallel = parallel && u.src[j] == v.src[j] && u.tgt[j] == v.tgt[j];
                    if (!parallel)
                        continue;
                    for (auto& x : lookup(d, v.src.back() - u.src.back())) {
                        Table t{u.src, v.tgt};
                        t.src.push_back(x);
                        t.tgt.push_back(x);
                        next.push_back(std::move(t));
                    }
                }
            total += next.size();
            level = std::move(next);
        }
        return total;
    }

private:
    std::vector<Chain> lookup(int d, Chain want) const
    {
        want.set_degree(d - 1);
        auto& m = by_boundary_[static_cast<std::size_t>(d)];
        auto it = m.find(want);
        return it == m.end() ? std::vector<Chain>{} : it->second;
    }

    int max_dim_;
    std::vector<std::map<Chain, std::vector<Chain>>> by_boundary_;
};

inline std::size_t hom_count(const Complex& k, const std::string& a, const std::string& b, int max_dim, Coefficient bound)
{
    return HomCounter(k, max_dim, bound).count(a, b);
}

/// Sections of q found degree by degree from the naive chain lists.
inline std::size_t count_sections(const Morphism& q, Coefficient bound, bool bipointed)
{
    auto& base = *q.target();
    auto& total = *q.source();
    std::vector<std::vector<Chain>> by_degree;
    for (int d = 0; d <= total.dim(); ++d)
        by_degree.push_back(all_bounded_chains(total, d, bound));
    std::size_t count = 0;
    std::vector<Chain> img(base.size());
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == base.size()) {
            Morphism s(q.target(), q.source(), img);
            if (is_valid(s) && is_identity(compose(q, s)) && (!bipointed || is_bipointed(s)))
                ++count;
            return;
        }
        auto& x = base.at(i);
        Chain want = Chain::basis(x.degree, x.id);
        Chain need(x.degree - 1);
        Chain dx = x.degree > 0 ? base.boundary(x.id) : Chain();
        if (x.degree > 0)
            for (auto& [id, k] : dx.terms())
                need += img[base.index_of(id)].scaled(k);
        for (auto& c : by_degree[static_cast<std::size_t>(x.degree)]) {
            if (x.degree == 0 && c.augmentation() != 1)
                continue;
            if (!(q.apply(c) == want))
                continue;
            if (x.degree > 0 && !(total.boundary(c) == need))
                continue;
            img[i] = c;
            go(i + 1);
        }
    };
    go(0);
    return count;
}

/// (□^1 ⊗ C) with ∂□^1 ⊗ C collapsed to the two endpoints, written out by hand:
/// points "0", "1", and one element "[x]" of degree |x|+1 per basis element x of C.
inline ComplexPtr collapsed_cylinder(const ComplexPtr& c)
{
    // In □^1 ⊗ C: ∂^ε(i⊗x) = ∂^ε i ⊗ x + i ⊗ ∂^{-ε} x.
    std::vector<BasisElement> basis{{"0", 0, {}, {}}, {"1", 0, {}, {}}};
    for (auto& x : c->basis()) {
        Chain plus(x.degree), minus(x.degree);
        if (x.degree == 0) {
            plus.add("1", 1);
            minus.add("0", 1);
        }
        else {
            for (auto& [id, k] : x.minus.terms())
                plus.add("[" + id + "]", k);
            for (auto& [id, k] : x.plus.terms())
                minus.add("[" + id + "]", k);
        }
        basis.push_back({"[" + x.id + "]", x.degree + 1, plus, minus});
    }
    return make_complex(Complex::build(basis, Bipointing{"0", "1"}));
}

/// The quotient □^1 ⊗ C -> collapsed_cylinder(C).
inline Morphism cylinder_quotient(const ComplexPtr& c)
{
    auto cyl = tensor(interval(), c);
    auto target = collapsed_cylinder(c);
    return Morphism::from_rule(cyl, target, [&](const BasisElement& e) {
        auto parts = ids::components(e.id);
        std::string head = parts.front();
        std::string rest = ids::join({parts.begin() + 1, parts.end()});
        if (head == "i")
            return Chain::basis(e.degree, "[" + rest + "]");
        return e.degree == 0 ? Chain::basis(0, head) : Chain(e.degree);
    });
}

} // namespace oracle

namespace graycube {

inline void PrintTo(const Complex& k, std::ostream* os)
{
    for (auto& x : k.basis())
        *os << x.id << " ";
}

inline void PrintTo(const Morphism& f, std::ostream* os)
{
    for (std::size_t i = 0; i < f.images().size(); ++i)
        *os << f.source()->at(i).id << "->" << f.image(i).to_string() << " ";
}

inline void PrintTo(const Chain& c, std::ostream* os) { *os << c.to_string(); }

} // namespace graycube
