#pragma once

#include <cstddef>
#include <map>

namespace dilogeq {

// Integer linear combination over an ordered symbol type. Exact arithmetic;
// zero coefficients are never stored, so is_zero() is emptiness.
template <class Symbol>
class FormalSum {
public:
    using coeff_t = long long;

    void add(const Symbol& s, coeff_t c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }

    void add_scaled(const FormalSum& o, coeff_t k) {
        for (const auto& [s, c] : o.terms_) add(s, c * k);
    }

    FormalSum operator-(const FormalSum& o) const {
        FormalSum r = *this;
        r.add_scaled(o, -1);
        return r;
    }

    coeff_t coeff(const Symbol& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Symbol, coeff_t>& terms() const { return terms_; }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

private:
    std::map<Symbol, coeff_t> terms_;
};

}  // namespace dilogeq
