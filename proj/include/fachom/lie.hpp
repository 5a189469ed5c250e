#pragma once

#include "fachom/algebra.hpp"
#include "fachom/lie_algebra.hpp"

#include <map>
#include <string>
#include <utility>

namespace fachom {

/// Finite-dimensional graded-commutative algebra, possibly without unit, in
/// weight 0 and nonpositive degrees. Models (compactly supported) cochains
/// of a manifold.
struct CommutativeModel {
    std::string name;
    ChainComplex carrier;
    std::map<std::pair<std::size_t, std::size_t>, LinComb> products;

    const BigradedSpace& space() const noexcept { return carrier.space(); }
    const LinComb& product(std::size_t i, std::size_t j) const;
};

/// Koszul commutativity, associativity, Leibniz, weight 0. Throws Validation.
void validate(const CommutativeModel& m);

CommutativeModel point_model();
/// Compactly supported cochains of R^n: Q in degree -n, zero product.
CommutativeModel euclidean_model(int n);
/// Full cochains of the circle: H^*(S^1) = Q{1, e}, e in degree -1.
CommutativeModel circle_model();
/// Compactly supported cochains of S^m x R^k. For k = 0 this is H^*(S^m)
/// with its cup product; for k >= 1 all products vanish.
CommutativeModel sphere_model(int m, int k);
/// Names: point, R<n>, S1, S<m>xR<k>. Throws UnknownModel.
CommutativeModel commutative_model(const std::string& name);

/// Chevalley-Eilenberg chains Sym(l[1]) with bracket and internal boundary.
ChainComplex ce_chains(const WgLieAlgebra& l, int max_weight);

/// Free graded Lie algebra on V[n-1] (degree-0 bracket), weight <= W. Basis:
/// standard bracketings of Lyndon words, plus [w,w] for odd Lyndon words w.
WgLieAlgebra free_lie(const GradedSpacePresentation& v, int n, int max_weight);

/// Map_c modelled as m (x) g with [a x, b y] = (-1)^{|x||b|} ab (x) [x,y].
WgLieAlgebra mapping_lie(const CommutativeModel& m, const WgLieAlgebra& g);

}  // namespace fachom
