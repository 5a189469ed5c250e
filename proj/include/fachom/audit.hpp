#pragma once

#include "fachom/bar.hpp"
#include "fachom/lie.hpp"
#include "fachom/simplicial.hpp"

#include <string>
#include <vector>

namespace fachom {

/// Structural invariants re-checked on every object a verification run
/// builds. Each method throws Validation (or DifferentialSquareNonzero)
/// naming the object and the offending slot or tuple.
class Audit {
public:
    /// d^2 = 0, Euler characteristic per weight of the chains against the
    /// homology, and homology(dual c) = reflected homology.
    void complex(const std::string& what, const ChainComplex& c, const BettiTable& homology, Window weights);
    void algebra(const std::string& what, const WgAlgebra& a);
    void lie(const std::string& what, const WgLieAlgebra& g);
    void module(const std::string& what, const WgModule& m);
    void model(const std::string& what, const CommutativeModel& m);
    void simplicial(const std::string& what, const FiniteSimplicialSet& x);

    std::size_t count() const noexcept { return log_.size(); }
    const std::vector<std::string>& log() const noexcept { return log_; }

private:
    std::vector<std::string> log_;
};

/// Homology of c on |weight| <= W, audited.
BettiTable audited_homology(Audit& audit, const std::string& what, const ChainComplex& c, int max_weight);

}  // namespace fachom
