#pragma once

#include "fachom/algebra.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>

namespace fachom {

using AlgebraPtr = std::shared_ptr<const WgAlgebra>;

/// Chain complex with a left action of one algebra and/or a right action of
/// another. Unit elements act as the identity; missing entries act by zero.
class WgModule {
public:
    WgModule() = default;
    WgModule(ChainComplex carrier, AlgebraPtr left, AlgebraPtr right, int max_weight);

    const ChainComplex& carrier() const noexcept { return carrier_; }
    const BigradedSpace& space() const noexcept { return carrier_.space(); }
    std::size_t size() const noexcept { return carrier_.size(); }
    int max_weight() const noexcept { return max_weight_; }
    const AlgebraPtr& left_algebra() const noexcept { return left_; }
    const AlgebraPtr& right_algebra() const noexcept { return right_; }

    const LinComb& act_left(std::size_t a, std::size_t m) const;
    const LinComb& act_right(std::size_t m, std::size_t a) const;
    void set_left(std::size_t a, std::size_t m, LinComb value);
    void set_right(std::size_t m, std::size_t a, LinComb value);

private:
    ChainComplex carrier_;
    AlgebraPtr left_, right_;
    int max_weight_ = 0;
    std::unordered_map<std::uint64_t, LinComb> left_action_, right_action_;
    std::vector<LinComb> identity_;
};

/// A over itself on both sides.
WgModule regular_module(const AlgebraPtr& a);
/// Q at (0,0) with both actions through the augmentation.
WgModule trivial_module(const AlgebraPtr& a);
enum class Side { Left, Right };

/// M restricted along Q -> A on one side: `unit` (a copy of the ground
/// field) acts there by the identity, the other action is kept.
WgModule restrict_to_unit(const WgModule& m, const AlgebraPtr& unit, Side side);

/// A as a left or right module over A (x) A^op, with outer actions
/// (x (x) y) m = (-1)^{|y||m|} x m y and m (x (x) y) = (-1)^{|y|(|m|+|x|)} y m x.
/// `ae` must come from algebra_tensor_factors(a, opposite(a)). The two
/// actions do not commute, so each side is its own module.
WgModule hochschild_module(const AlgebraPtr& a, const AlgebraPtr& ae,
                           const std::vector<std::pair<std::size_t, std::size_t>>& factors, Side side);

/// Action associativity and unit, Leibniz, bimodule compatibility.
void validate(const WgModule& m);

/// Normalized two-sided bar complex B(R, A, L), truncated at |weight| <= W.
/// R must be a right module and L a left module over the same algebra object.
ChainComplex two_sided_bar(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int max_weight);
/// As two_sided_bar, keeping the left action on R and the right action on L.
WgModule two_sided_bar_module(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int max_weight);

ChainComplex bar(const AlgebraPtr& a, int max_weight);
/// Reduced Hochschild complex A (x) Abar^{(x)s} with the wrap-around face.
ChainComplex cyclic_bar(const WgAlgebra& a, int max_weight);
BettiTable relative_tensor(const WgModule& r, const AlgebraPtr& a, const WgModule& l, int max_weight);

}  // namespace fachom
