#pragma once

#include "fachom/audit.hpp"
#include "fachom/lie.hpp"
#include "fachom/report.hpp"

namespace fachom {

/// Graded dimensions; serializes exactly like a Betti table.
using DimTable = BettiTable;

/// Dimensions of the free n-disk algebra on V, via PBW:
/// dim Free_n(V) = dim Sym(FreeLie(V[n-1])[1-n]).
DimTable free_en_dims(int n, const GradedSpacePresentation& v, int max_weight);

/// The functions below audit every object they build when `audit` is set.

/// Homology of C^Lie_*(Map_c(M, FreeLie(V[n-1]))) with the model m of M.
/// With free_lie in the degrees of V[n-1] this already lands in the
/// normalization of free_en_dims, so the per-weight re-shift is zero.
DimTable conf_labeled_homology(const CommutativeModel& m, int n, const GradedSpacePresentation& v, int max_weight,
                               Audit* audit = nullptr);

/// The presentation with every degree raised by k.
GradedSpacePresentation shifted(const GradedSpacePresentation& v, int k);

/// S^m x R^{n-m}: Lie-model route against Free_n(V) (x) Free_{n-m}(V[m]).
/// Throws InvalidCodim unless 0 <= m < n.
Report check_splits(int n, int m, const GradedSpacePresentation& v, int max_weight, Audit* audit = nullptr);

/// n = 1: homology of bar(T(V)) against Q + V[1]. n >= 2: the free Lie
/// engine on V with n against V[1] with n-1 (both FreeLie(V[n-1])), and the
/// first fed through Sym against Free_{n-1}(V[1]).
Report check_bar_free(int n, const GradedSpacePresentation& v, int max_weight, Audit* audit = nullptr);

/// Homology of bar(Sym(V)) against the counts of Sym(V[1]).
Report check_bar_sym(const GradedSpacePresentation& v, int max_weight, Audit* audit = nullptr);

}  // namespace fachom
