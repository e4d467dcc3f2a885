// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

using namespace graycube;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool good(const Morphism& f) { return validate_morphism(f).empty() && is_bipointed(f); }

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Outcome wedge_retraction()
{
    Outcome o;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n) {
            auto i = iota(m, n);
            auto r = rho(m, n);
            o.require(good(i) && good(r), "invalid or unpointed map at " + pair_str(m, n));
            o.require(is_identity(compose(r, i)), "rho.iota != id at " + pair_str(m, n));
        }
    return o;
}

Outcome suspension_retraction()
{
    Outcome o;
    for (int n = 0; n <= 5; ++n) {
        o.require(good(phi(n)) && good(psi(n)), "invalid or unpointed map at n=" + std::to_string(n));
        o.require(is_identity(compose(psi(n), phi(n))), "psi.phi != id at n=" + std::to_string(n));
    }
    return o;
}

Outcome factorizations()
{
    Outcome o;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            auto lifted = tensor_morphism(iota(m, n), Morphism::identity(interval()));
            lifted = rebased(lifted, lifted.source(), cube(m + n + 1));
            auto via = compose(lifted, inverse_relabeling(split_tensor_identification(m, n)), eta(m, n));
            o.require(via == iota(m, n + 1), "iota does not factor through eta at " + pair_str(m, n));
        }
    for (int n = 0; n <= 4; ++n) {
        auto lifted = tensor_morphism(psi(n), Morphism::identity(interval()));
        auto via = compose(xi(n), rebased(lifted, cube(n + 2), lifted.target()));
        o.require(via == psi(n + 1), "psi does not factor through xi at n=" + std::to_string(n));
    }
    return o;
}

Outcome section_uniqueness()
{
    Outcome o;
    for (int n = 0; n <= 2; ++n) {
        auto found = solve_sections(xi(n), 3, true);
        o.require(found.sections.size() == 1,
                  std::to_string(found.sections.size()) + " bipointed sections at n=" + std::to_string(n));
        if (found.sections.size() == 1)
            o.require(found.sections.front() == chi(n), "section differs from chi at n=" + std::to_string(n));
    }
    // independent count for the smallest case
    o.require(oracle::count_sections(xi(0), 3, true) == 1, "naive count disagrees at n=0");
    return o;
}

Outcome suspension_pushout()
{
    Outcome o;
    for (int n = 0; n <= 3; ++n) {
        auto c = cube(n);
        auto [endpoints, incl0] = skeleton(interval(), 0);
        auto incl = tensor_morphism(incl0, Morphism::identity(c));
        auto collapse = Morphism::from_rule(tensor(endpoints, c), endpoints, [](const BasisElement& x) {
            return x.degree == 0 ? Chain::basis(0, ids::components(x.id).front()) : Chain(x.degree);
        });
        auto po = pushout(incl, collapse);
        o.require(is_valid(*po.object), "pushout invalid at n=" + std::to_string(n));
        auto iso = find_isomorphism(po.object, suspension(c));
        o.require(iso.has_value(), "pushout not isomorphic to the suspension at n=" + std::to_string(n));
        o.require(isomorphic(po.object, oracle::collapsed_cylinder(c)), "pushout disagrees with the hand quotient");
    }
    return o;
}

std::vector<std::string> points_of(const Complex& k)
{
    std::vector<std::string> out;
    for (auto i : k.of_degree(0))
        out.push_back(k.at(i).id);
    return out;
}

Outcome face_inclusions()
{
    Outcome o;
    std::size_t maps = 0;
    for (int m = 0; m <= 2; ++m)
        for (int p = 0; p <= 2; ++p)
            for (int n = 0; n <= 2; ++n)
                for (auto& x : points_of(*cube(m)))
                    for (auto& y : points_of(*cube(p))) {
                        auto f = tensor_morphism(tensor_morphism(point_map(cube(m), x), Morphism::identity(cube(n))),
                                                 point_map(cube(p), y));
                        f = rebased(f, cube(n), cube(m + n + p));
                        auto report = check_fully_faithful(f, {}, {3, 2});
                        o.require(report.complete, "enumeration guard hit");
                        o.require(report.fully_faithful, "face " + x + " x id x " + y + " not fully faithful (n=" +
                                                             std::to_string(n) + ")");
                        ++maps;
                    }
    o.require(maps == 147, "expected 147 face inclusions, saw " + std::to_string(maps));
    return o;
}

Outcome hom_terminality()
{
    Outcome o;
    const int max_dim = 3;
    for (auto& x_obj : {cube(0), cube(1), cube(2), suspended_cube(1)}) {
        auto k = tensor(x_obj, interval());
        oracle::HomCounter naive(*k, max_dim, 2);
        for (auto& x : points_of(*x_obj))
            for (auto [a, b] : {std::pair{"0", "0"}, {"0", "1"}, {"1", "1"}}) {
                auto cells = hom_set(*k, ids::tensor(x, a), ids::tensor(x, b), {max_dim, 2});
                for (int d = 1; d <= max_dim; ++d) {
                    auto count = std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return c.dimension() == d; });
                    o.require(count == 1, "hom from (" + x + "," + a + ") to (" + x + "," + b + ") has " +
                                              std::to_string(count) + " cells in dimension " + std::to_string(d));
                }
                o.require(naive.count(ids::tensor(x, a), ids::tensor(x, b)) == cells.size(),
                          "naive hom count disagrees");
            }
    }
    return o;
}

// Adds one to the coefficient at (element, term) of a map.
Morphism perturbed(const Morphism& f, std::size_t element, const std::string& term)
{
    auto images = f.images();
    images[element].add(term, 1);
    return Morphism(f.source(), f.target(), images);
}

std::vector<std::pair<std::size_t, std::string>> coefficient_slots(const Morphism& f)
{
    std::vector<std::pair<std::size_t, std::string>> out;
    for (std::size_t i = 0; i < f.images().size(); ++i)
        for (auto& [id, k] : f.image(i).terms())
            out.emplace_back(i, id);
    return out;
}

Outcome theta_witnesses()
{
    Outcome o;
    std::size_t trees = 0, tampered = 0;
    for (int e = 0; e <= 7; ++e)
        for (auto& t : trees_with_edges(e)) {
            ++trees;
            auto w = theta_witness(t);
            o.require(verify_theta_witness(w, t).empty(), "witness fails for " + to_string(t));
            o.require(validate_complex(*w.object).empty(), "object invalid for " + to_string(t));
            // every coefficient for small trees, an evenly spaced sample beyond
            for (bool on_section : {true, false}) {
                const Morphism& f = on_section ? w.section : w.retraction;
                auto slots = coefficient_slots(f);
                std::size_t stride = e <= 3 ? 1 : std::max<std::size_t>(1, slots.size() / 4);
                for (std::size_t s = 0; s < slots.size(); s += stride) {
                    auto bad = w;
                    (on_section ? bad.section : bad.retraction) = perturbed(f, slots[s].first, slots[s].second);
                    o.require(!verify_theta_witness(bad, t).empty(), "undetected corruption in " + to_string(t));
                    ++tampered;
                }
            }
        }
    o.require(trees == 626, "expected 626 trees, saw " + std::to_string(trees));
    o.detail = o.ok ? std::to_string(trees) + " trees, " + std::to_string(tampered) + " corruptions caught" : o.detail;
    return o;
}

Outcome axiom_preservation()
{
    Outcome o;
    std::vector<std::vector<ComplexPtr>> by_ops{{point(), interval()}};
    std::set<std::string> seen;
    auto keep = [&](std::vector<ComplexPtr>& level, const ComplexPtr& k) {
        if (seen.insert(dump(complex_to_json(*k))).second)
            level.push_back(k);
    };
    for (auto& k : by_ops[0])
        seen.insert(dump(complex_to_json(*k)));
    for (int ops = 1; ops <= 3; ++ops) {
        std::vector<ComplexPtr> level;
        for (auto& k : by_ops[static_cast<std::size_t>(ops - 1)]) {
            keep(level, suspension(k));
            for (int d = 0; d < k->dim(); ++d)
                keep(level, skeleton(k, d).first);
        }
        for (int i = 0; i < ops; ++i)
            for (auto& a : by_ops[static_cast<std::size_t>(i)])
                for (auto& b : by_ops[static_cast<std::size_t>(ops - 1 - i)]) {
                    keep(level, tensor(a, b));
                    keep(level, wedge(a, b));
                }
        by_ops.push_back(std::move(level));
    }
    std::size_t total = 0;
    for (auto& level : by_ops)
        for (auto& k : level) {
            ++total;
            auto report = validate_complex(*k);
            o.require(report.empty(), report.empty() ? "" : report.front().to_string());
        }
    o.detail = o.ok ? std::to_string(total) + " distinct complexes" : o.detail;
    return o;
}

Outcome oracle_agreement()
{
    Outcome o;
    struct Pair {
        std::string name;
        Morphism a, b;
    };
    std::vector<Pair> pairs;
    for (int n = 0; n <= 2; ++n) {
        auto s = suspended_cube(n);
        pairs.push_back({"psi.phi vs id", compose(psi(n), phi(n)), Morphism::identity(s)});
        pairs.push_back({"phi.psi vs id", compose(phi(n), psi(n)), Morphism::identity(cube(n + 1))});
        pairs.push_back({"psi.phi.psi vs psi", compose(psi(n), phi(n), psi(n)), psi(n)});
    }
    for (int n = 0; n <= 1; ++n)
        pairs.push_back({"xi.chi vs id", compose(xi(n), chi(n)), Morphism::identity(suspended_cube(n + 1))});
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 3; ++n) {
            auto e = compose(iota(m, n), rho(m, n));
            pairs.push_back({"iota.rho vs id", e, Morphism::identity(cube(m + n))});
            pairs.push_back({"idempotent", compose(e, e), e});
            pairs.push_back({"rho.iota.rho vs rho", compose(rho(m, n), e), rho(m, n)});
        }
    std::size_t unequal = 0;
    for (auto& p : pairs) {
        bool chain_equal = p.a == p.b;
        bool cells_equal = true;
        for (auto& c : enumerate_cells(*p.a.source(), {3, 2}))
            cells_equal = cells_equal && apply_morphism_cellwise(p.a, c) == apply_morphism_cellwise(p.b, c);
        o.require(chain_equal == cells_equal, p.name + ": chain-level and cellwise comparisons disagree");
        unequal += chain_equal ? 0 : 1;
    }
    o.require(unequal > 0, "no unequal pair exercised");
    return o;
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"wedge retraction", wedge_retraction},
        {"suspension retraction", suspension_retraction},
        {"factorizations", factorizations},
        {"section uniqueness", section_uniqueness},
        {"suspension pushout formula", suspension_pushout},
        {"face inclusions fully faithful", face_inclusions},
        {"hom terminality", hom_terminality},
        {"theta witnesses", theta_witnesses},
        {"axiom preservation", axiom_preservation},
        {"oracle agreement", oracle_agreement},
    };
    int failed = 0;
    for (auto& [name, run] : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        }
        catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.ok ? "PASS " : "FAIL ") << name;
        if (!o.detail.empty())
            line << ": " << o.detail;
        line.precision(2);
        line << std::fixed << " [" << secs << "s]";
        std::cout << line.str() << std::endl;
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
