#pragma once

#include "fachom/complexes.hpp"

#include <cstdint>
#include <unordered_map>

namespace fachom {

/// Weight-graded dg Lie algebra with exact structure constants. The bracket
/// is weight- and degree-additive; results outside the weight window are
/// dropped.
class WgLieAlgebra {
public:
    WgLieAlgebra() = default;
    WgLieAlgebra(ChainComplex carrier, int max_weight);

    const ChainComplex& carrier() const noexcept { return carrier_; }
    const BigradedSpace& space() const noexcept { return carrier_.space(); }
    std::size_t size() const noexcept { return carrier_.size(); }
    int max_weight() const noexcept { return max_weight_; }
    /// +1 or -1 for the common sign of all weights, 0 when empty.
    int weight_sign() const;

    const LinComb& bracket(std::size_t i, std::size_t j) const;
    void set_bracket(std::size_t i, std::size_t j, LinComb value);
    /// Sets [i,j] and the graded-antisymmetric [j,i].
    void set_antisymmetric(std::size_t i, std::size_t j, const LinComb& value);
    LinComb bracket(const LinComb& x, const LinComb& y) const;
    bool is_abelian() const noexcept { return brackets_.empty(); }

private:
    ChainComplex carrier_;
    int max_weight_ = 0;
    std::unordered_map<std::uint64_t, LinComb> brackets_;
};

/// Graded antisymmetry, Jacobi, d a derivation, d^2 = 0. Throws Validation
/// naming the first offending tuple.
void validate(const WgLieAlgebra& g);

}  // namespace fachom
