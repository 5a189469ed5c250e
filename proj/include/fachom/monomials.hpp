#pragma once

#include "fachom/complexes.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fachom {

struct GradedGenerator {
    std::string name;
    int weight = 0;
    int degree = 0;
    bool odd() const noexcept { return degree % 2 != 0; }
};

/// Graded-commutative monomial: sorted generator indices, odd generators at
/// most once.
using Monomial = std::vector<std::size_t>;

/// All monomials with 0 < |weight| <= max_weight, plus the empty monomial.
/// Generator weights must be nonzero and share one sign.
std::vector<Monomial> enumerate_monomials(const std::vector<GradedGenerator>& gens, int max_weight);

int monomial_weight(const std::vector<GradedGenerator>& gens, const Monomial& m);
int monomial_degree(const std::vector<GradedGenerator>& gens, const Monomial& m);
std::string monomial_label(const std::vector<GradedGenerator>& gens, const Monomial& m);

/// Sorts an arbitrary product of generators into a monomial. Returns the
/// Koszul sign (+1/-1), or 0 when an odd generator repeats.
int normalize_product(const std::vector<GradedGenerator>& gens, std::vector<std::size_t>& sequence);

/// Sign and result of a*b; sign 0 means the product vanishes.
std::pair<int, Monomial> multiply_monomials(const std::vector<GradedGenerator>& gens, const Monomial& a,
                                            const Monomial& b);

/// Dimension table of the free graded-commutative algebra, |weight| <= max_weight.
BettiTable sym_dimensions(const std::vector<GradedGenerator>& gens, int max_weight);

/// Throws MixedWeightSigns unless all weights are nonzero with a common sign.
/// Returns that sign (+1/-1), or 0 for an empty list.
int common_weight_sign(const std::vector<GradedGenerator>& gens);

}  // namespace fachom
