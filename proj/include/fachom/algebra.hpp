#pragma once

#include "fachom/complexes.hpp"
#include "fachom/lie_algebra.hpp"
#include "fachom/monomials.hpp"

#include <cstdint>
#include <limits>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fachom {

/// Weight-graded dg algebra. The weight-0 part is the span of the unit and
/// the augmentation ideal lives in strictly signed weights.
class WgAlgebra {
public:
    WgAlgebra() = default;
    WgAlgebra(ChainComplex carrier, std::size_t unit, bool commutative, int max_weight);

    const ChainComplex& carrier() const noexcept { return carrier_; }
    const BigradedSpace& space() const noexcept { return carrier_.space(); }
    std::size_t size() const noexcept { return carrier_.size(); }
    std::size_t unit() const noexcept { return unit_; }
    bool commutative() const noexcept { return commutative_; }
    void set_commutative(bool value) noexcept { commutative_ = value; }
    /// Products are complete for |weight| <= max_weight.
    int max_weight() const noexcept { return max_weight_; }
    int weight_sign() const;

    const LinComb& product(std::size_t i, std::size_t j) const;
    void set_product(std::size_t i, std::size_t j, LinComb value);
    LinComb multiply(const LinComb& x, const LinComb& y) const;

    Rational augmentation(std::size_t i) const { return i == unit_ ? Rational(1) : Rational(0); }
    /// Basis indices of nonzero weight.
    std::vector<std::size_t> augmentation_ideal() const;

private:
    ChainComplex carrier_;
    std::size_t unit_ = 0;
    bool commutative_ = false;
    int max_weight_ = 0;
    std::unordered_map<std::uint64_t, LinComb> products_;
    std::vector<LinComb> unit_images_;
};

struct RelationTerm {
    std::vector<std::string> word;
    Rational coefficient;
};

struct BracketSpec {
    std::string left;
    std::string right;
    std::vector<std::pair<std::string, Rational>> value;
};

/// Generators with (name, degree, weight), optional relations for algebra
/// quotients and optional brackets for Lie presentations.
struct GradedSpacePresentation {
    std::vector<GradedGenerator> generators;
    std::vector<std::vector<RelationTerm>> relations;
    std::vector<BracketSpec> brackets;
    bool commutative = false;
};

/// Unit, associativity, Leibniz, graded commutativity (when flagged),
/// weight-0 = span(unit), d^2 = 0. Throws Validation naming the tuple.
void validate(const WgAlgebra& a);
/// Graded commutativity on all basis pairs.
bool is_graded_commutative(const WgAlgebra& a);

/// Truncation of an algebra that is exact in every weight.
inline constexpr int kAllWeights = std::numeric_limits<int>::max() / 4;

WgAlgebra unit_algebra();
WgAlgebra tensor_algebra(const GradedSpacePresentation& v, int max_weight);
WgAlgebra sym_algebra(const GradedSpacePresentation& v, int max_weight);
/// T(V) modulo the two-sided ideal of the relations (plus graded
/// commutators when v.commutative), reduced weight by weight.
WgAlgebra quotient_algebra(const GradedSpacePresentation& v, int max_weight);
/// Dispatch used for presentation files: plain generators give T(V) or
/// Sym(V), relations give the quotient.
WgAlgebra algebra_from_presentation(const GradedSpacePresentation& v, int max_weight);

WgAlgebra enveloping(const WgLieAlgebra& g, int max_weight);
/// Dimension table of U_n g, i.e. of Sym(g[1-n]).
BettiTable enveloping_n(const WgLieAlgebra& g, int n, int max_weight);

WgAlgebra opposite(const WgAlgebra& a);
WgAlgebra algebra_tensor(const WgAlgebra& a, const WgAlgebra& b);
/// As algebra_tensor, also returning the (a-index, b-index) of every basis element.
std::pair<WgAlgebra, std::vector<std::pair<std::size_t, std::size_t>>> algebra_tensor_factors(const WgAlgebra& a,
                                                                                              const WgAlgebra& b);

/// Chevalley-Eilenberg cochains Sym(g^v[-1]) as the graded dual of the CE
/// chain coalgebra: weights negated, differential dual to bracket and
/// internal differential.
WgAlgebra ce_cochains(const WgLieAlgebra& g, int max_weight);

/// Lie algebra whose basis is the presentation's generators.
WgLieAlgebra lie_from_presentation(const GradedSpacePresentation& v, int max_weight);

}  // namespace fachom
