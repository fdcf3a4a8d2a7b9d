#pragma once

#include <span>
#include <vector>

#include "qkernel/errors.hpp"
#include "qkernel/scalar.hpp"

namespace qk {

/// Ordered multiset of nonzero complex parameters (the bold sets of
/// multi-parameter integrals), with the drop / scale / pair-product
/// conventions a_[k], b*a and {a_i a_j}.
class ParamSet {
public:
    ParamSet() = default;
    explicit ParamSet(std::vector<CScalar> values) : v_(std::move(values)) {
        for (const auto& x : v_)
            if (x == CScalar(0.0)) throw DomainError("ParamSet element must be nonzero");
    }
    ParamSet(std::initializer_list<CScalar> values) : ParamSet(std::vector<CScalar>(values)) {}

    std::span<const CScalar> values() const { return v_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    CScalar operator[](std::size_t i) const { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    /// Set without index k.
    ParamSet drop(std::size_t k) const {
        std::vector<CScalar> out;
        out.reserve(v_.size() - 1);
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (i != k) out.push_back(v_[i]);
        ParamSet p;
        p.v_ = std::move(out);
        return p;
    }

    /// Every element multiplied by b.
    ParamSet scale(CScalar b) const {
        ParamSet p;
        p.v_.reserve(v_.size());
        for (const auto& x : v_) p.v_.push_back(b * x);
        return p;
    }

    /// All products a_i a_j with i < j.
    std::vector<CScalar> pairproducts() const {
        std::vector<CScalar> out;
        for (std::size_t i = 0; i < v_.size(); ++i)
            for (std::size_t j = i + 1; j < v_.size(); ++j) out.push_back(v_[i] * v_[j]);
        return out;
    }

    /// Product of all elements (empty product is unity).
    CScalar product() const {
        CScalar p = 1.0;
        for (const auto& x : v_) p *= x;
        return p;
    }

private:
    std::vector<CScalar> v_;
};

}  // namespace qk
