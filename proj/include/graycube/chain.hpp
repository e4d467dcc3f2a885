#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace graycube {

using Coefficient = std::int64_t;

/// Homogeneous integer combination of basis elements, keyed by basis id.
/// Zero coefficients are never stored.
class Chain {
public:
    using Terms = std::map<std::string, Coefficient>;

    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}
    Chain(int degree, Terms terms) : degree_(degree)
    {
        for (auto& [id, c] : terms)
            add(id, c);
    }

    static Chain basis(int degree, const std::string& id, Coefficient c = 1)
    {
        Chain r(degree);
        r.add(id, c);
        return r;
    }

    int degree() const { return degree_; }
    void set_degree(int d) { degree_ = d; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Coefficient coefficient(const std::string& id) const
    {
        auto it = terms_.find(id);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const std::string& id, Coefficient c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(id, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    Chain& operator+=(const Chain& o)
    {
        for (auto& [id, c] : o.terms_)
            add(id, c);
        return *this;
    }
    Chain& operator-=(const Chain& o)
    {
        for (auto& [id, c] : o.terms_)
            add(id, -c);
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }

    Chain scaled(Coefficient k) const
    {
        Chain r(degree_);
        if (k != 0)
            for (auto& [id, c] : terms_)
                r.terms_.emplace(id, c * k);
        return r;
    }

    /// All coefficients >= 1. The zero chain is positive.
    bool is_positive() const
    {
        for (auto& [id, c] : terms_)
            if (c < 1)
                return false;
        return true;
    }

    Coefficient augmentation() const
    {
        Coefficient s = 0;
        for (auto& [id, c] : terms_)
            s += c;
        return s;
    }

    Chain positive_part() const
    {
        Chain r(degree_);
        for (auto& [id, c] : terms_)
            if (c > 0)
                r.terms_.emplace(id, c);
        return r;
    }

    /// Negative part, returned as a positive chain.
    Chain negative_part() const
    {
        Chain r(degree_);
        for (auto& [id, c] : terms_)
            if (c < 0)
                r.terms_.emplace(id, -c);
        return r;
    }

    Coefficient max_coefficient() const
    {
        Coefficient m = 0;
        for (auto& [id, c] : terms_)
            m = std::max(m, c < 0 ? -c : c);
        return m;
    }

    bool shares_support(const Chain& o) const
    {
        for (auto& [id, c] : terms_)
            if (o.terms_.count(id))
                return true;
        return false;
    }

    /// Equality ignores the degree of zero chains.
    friend bool operator==(const Chain& a, const Chain& b)
    {
        if (a.terms_.empty() && b.terms_.empty())
            return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator<(const Chain& a, const Chain& b)
    {
        // zero chains of any degree are equal, so they sort first together
        int da = a.terms_.empty() ? -1 : a.degree_;
        int db = b.terms_.empty() ? -1 : b.degree_;
        if (da != db)
            return da < db;
        return a.terms_ < b.terms_;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (auto& [id, c] : terms_) {
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            Coefficient a = c < 0 ? -c : c;
            if (a != 1)
                s += std::to_string(a) + "*";
            s += id;
        }
        return s;
    }

private:
    int degree_ = 0;
    Terms terms_;
};

} // namespace graycube
