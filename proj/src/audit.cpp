#include "fachom/audit.hpp"

#include "fachom/errors.hpp"
#include "fachom/report.hpp"

#include <set>

namespace fachom {

void Audit::complex(const std::string& what, const ChainComplex& c, const BettiTable& h, Window weights) {
    c.check_square_zero(weights);
    BettiTable chains = c.space().dimensions().restricted(weights);
    BettiTable homology_part = h.restricted(weights);
    std::set<int> ws;
    for (int w : chains.weights()) ws.insert(w);
    for (int w : homology_part.weights()) ws.insert(w);
    for (int w : ws)
        if (chains.euler_characteristic(w) != homology_part.euler_characteristic(w))
            throw Error(ErrorKind::Validation, what + ": Euler characteristic of weight " + std::to_string(w) +
                                                   " is " + std::to_string(chains.euler_characteristic(w)) +
                                                   " on chains but " +
                                                   std::to_string(homology_part.euler_characteristic(w)) +
                                                   " on homology");
    Window reflected{weights.hi == Window::all().hi ? Window::all().lo : -weights.hi,
                     weights.lo == Window::all().lo ? Window::all().hi : -weights.lo};
    BettiTable dual_h = homology(dual(c), reflected);
    if (auto slot = first_divergence(dual_h, homology_part.reflected()))
        throw Error(ErrorKind::Validation, what + ": homology of the dual is not the reflection at " + to_string(*slot));
    log_.push_back("complex " + what);
}

void Audit::algebra(const std::string& what, const WgAlgebra& a) {
    validate(a);
    log_.push_back("algebra " + what);
}

void Audit::lie(const std::string& what, const WgLieAlgebra& g) {
    validate(g);
    log_.push_back("lie " + what);
}

void Audit::module(const std::string& what, const WgModule& m) {
    validate(m);
    log_.push_back("module " + what);
}

void Audit::model(const std::string& what, const CommutativeModel& m) {
    validate(m);
    log_.push_back("model " + what);
}

void Audit::simplicial(const std::string& what, const FiniteSimplicialSet& x) {
    check_simplicial_identities(x);
    log_.push_back("simplicial " + what);
}

BettiTable audited_homology(Audit& audit, const std::string& what, const ChainComplex& c, int W) {
    Window window = Window::abs_at_most(W);
    BettiTable h = homology(c, window);
    audit.complex(what, c, h, window);
    return h;
}

}  // namespace fachom
