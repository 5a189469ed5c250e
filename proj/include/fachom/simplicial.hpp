#pragma once

#include "fachom/algebra.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fachom {

/// Levels 0..size()-1 of a simplicial set. faces[i][x] is d_i of simplex x
/// (into the level below); degeneracies[j][x] is s_j of x (into the level
/// above, absent on the top level).
struct SimplicialLevel {
    std::vector<std::string> simplices;
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::vector<std::size_t>> degeneracies;
};

class FiniteSimplicialSet {
public:
    FiniteSimplicialSet() = default;
    FiniteSimplicialSet(std::string name, std::vector<SimplicialLevel> levels);

    const std::string& name() const noexcept { return name_; }
    std::size_t level_count() const noexcept { return levels_.size(); }
    const SimplicialLevel& level(std::size_t k) const { return levels_.at(k); }
    std::size_t size(std::size_t k) const { return levels_.at(k).simplices.size(); }
    std::size_t face(std::size_t k, std::size_t i, std::size_t x) const { return levels_[k].faces[i][x]; }
    std::size_t degeneracy(std::size_t k, std::size_t j, std::size_t x) const { return levels_[k].degeneracies[j][x]; }

    /// Bitmask of j with s_j d_j x = x, for a simplex x on level k >= 1.
    std::uint64_t degeneracy_set(std::size_t k, std::size_t x) const;
    /// Largest dimension of a nondegenerate simplex among the stored levels.
    int max_nondegenerate_dimension() const;

    nlohmann::json to_json() const;
    static FiniteSimplicialSet from_json(const nlohmann::json& j, std::string name = "custom");

private:
    std::string name_;
    std::vector<SimplicialLevel> levels_;
};

/// point, circle, sphere2, torus, interval; levels 0..level_count-1.
/// Throws UnknownModel.
FiniteSimplicialSet builtin_model(const std::string& name, std::size_t level_count = 4);
FiniteSimplicialSet product(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y);

/// Checks every simplicial identity among the stored levels; throws
/// Validation naming the identity and simplex.
void check_simplicial_identities(const FiniteSimplicialSet& x);

/// Rational homology from normalized chains, in degrees below the top
/// stored level, placed at weight 0.
BettiTable simplicial_homology(const FiniteSimplicialSet& x);
/// floor(W / min |weight of Abar|) * max nondegenerate dimension.
int default_level_cap(const FiniteSimplicialSet& x, const WgAlgebra& a, int max_weight);

/// Normalized total complex of k -> A^{(x) X_k}, |weight| <= W. Levels
/// 0..level_cap are built and level_cap+1 is checked to vanish in the
/// window (LevelCapTooSmall otherwise, also when the model has too few
/// levels). A must be graded commutative.
ChainComplex space_tensor(const FiniteSimplicialSet& x, const WgAlgebra& a, int max_weight,
                          std::optional<int> level_cap = std::nullopt);
/// Total complex of the normalized multisimplicial object
/// (p_1..p_r) -> A^{(x) (X1_{p_1} x ... x Xr_{p_r})}; by Eilenberg-Zilber it
/// is quasi-isomorphic to space_tensor of the levelwise product. The face in
/// direction j carries the sign (-1)^{p_1+...+p_{j-1}}.
ChainComplex space_tensor(const std::vector<FiniteSimplicialSet>& factors, const WgAlgebra& a, int max_weight,
                          const std::vector<int>& level_caps);
/// Builds the built-in model with enough levels for the default cap. The
/// torus runs as the bisimplicial circle x circle.
ChainComplex space_tensor(const std::string& model, const WgAlgebra& a, int max_weight);

}  // namespace fachom
