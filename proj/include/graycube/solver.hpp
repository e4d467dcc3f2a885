#pragma once

#include "graycube/complex.hpp"

#include <functional>
#include <set>
#include <unordered_set>

namespace graycube {

struct SolveLimits {
    Coefficient coeff_bound = 3;
    std::size_t node_cap = 1'000'000; ///< search states visited before giving up
};

/// All positive chains c of the given degree (>= 1) with ∂c = boundary and
/// every coefficient <= limits.coeff_bound. `allowed`, when given, restricts
/// which basis elements (by index) may occur in c.
///
/// The search is residual-driven: pick the first basis element z where
/// boundary - ∂c is nonzero and raise some element whose differential has the
/// matching sign at z. In a strongly loop-free complex a nonzero positive chain
/// has nonzero boundary, so every solution is reached this way.
inline std::vector<Chain> solve_boundary(const Complex& k, int degree, const Chain& boundary, const SolveLimits& limits,
                                         const std::function<bool(std::size_t)>& allowed = {})
{
    if (degree < 1)
        throw DomainError("solve_boundary needs degree >= 1");
    if (limits.coeff_bound < 1)
        throw DomainError("coefficient bound must be positive");
    auto& cols = k.of_degree(degree);
    auto& rows = k.of_degree(degree - 1);
    std::unordered_map<std::size_t, std::size_t> row_pos;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_pos.emplace(rows[r], r);

    // incidence[r] = list of (column, coefficient of row r in ∂column)
    std::vector<std::vector<std::pair<std::size_t, Coefficient>>> incidence(rows.size());
    std::vector<std::vector<std::pair<std::size_t, Coefficient>>> column(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (allowed && !allowed(cols[j]))
            continue;
        auto& e = k.at(cols[j]);
        Chain d = e.plus - e.minus;
        for (auto& [id, c] : d.terms()) {
            auto r = row_pos.at(k.index_of(id));
            incidence[r].emplace_back(j, c);
            column[j].emplace_back(r, c);
        }
    }

    std::vector<Coefficient> residual(rows.size(), 0);
    for (auto& [id, c] : boundary.terms()) {
        auto it = row_pos.find(k.index_of(id));
        if (it == row_pos.end())
            throw DomainError("target boundary has the wrong degree");
        residual[it->second] += c;
    }

    std::vector<Coefficient> coeffs(cols.size(), 0);
    std::set<std::vector<Coefficient>> visited;
    std::vector<Chain> solutions;
    std::size_t nodes = 0;

    std::function<void()> search = [&]() {
        if (!visited.insert(coeffs).second)
            return;
        if (++nodes > limits.node_cap)
            throw ResourceError("boundary search exceeded " + std::to_string(limits.node_cap) + " states in degree " +
                                std::to_string(degree));
        std::size_t z = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (residual[r] != 0) {
                z = r;
                break;
            }
        if (z == rows.size()) {
            Chain c(degree);
            for (std::size_t j = 0; j < cols.size(); ++j)
                c.add(k.at(cols[j]).id, coeffs[j]);
            solutions.push_back(std::move(c));
            return;
        }
        for (auto& [j, c] : incidence[z]) {
            if ((c > 0) != (residual[z] > 0) || coeffs[j] >= limits.coeff_bound)
                continue;
            ++coeffs[j];
            for (auto& [r, a] : column[j])
                residual[r] -= a;
            search();
            for (auto& [r, a] : column[j])
                residual[r] += a;
            --coeffs[j];
        }
    };
    search();
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

} // namespace graycube
