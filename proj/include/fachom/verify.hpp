#pragma once

#include "fachom/audit.hpp"
#include "fachom/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fachom {

/// Dual of HH(Ug) against HH(C*_Lie g); both live in negative weights.
Report run_hoch_duality(const WgLieAlgebra& g, int max_weight, Audit& audit, const std::string& name = "g");
/// HH(Ug) against CE chains of the circle mapping algebra H^*(S^1) (x) g.
Report run_env_circle(const WgLieAlgebra& g, int max_weight, Audit& audit, const std::string& name = "g");
/// HH(C*_Lie g) against CE cochains of H^*(S^1) (x) g.
Report run_coh_circle(const WgLieAlgebra& g, int max_weight, Audit& audit, const std::string& name = "g");

/// cyclic bar, bimodule bar and (commutative only) the circle tensor.
Report run_circle_hochschild(const AlgebraPtr& a, int max_weight, Audit& audit, const std::string& name = "A");
/// space_tensor(model, Sym(V)) against Sym(H_*(model) (x) V).
Report run_sym_tensor(const std::string& model, const GradedSpacePresentation& v, int max_weight, Audit& audit,
                      const std::string& name = "V");

struct RegisteredCheck {
    std::string id;
    std::function<Report(int max_weight, Audit& audit)> run;
};

/// Every named check on the built-in corpus, in a fixed order.
const std::vector<RegisteredCheck>& registry();

/// Selectors are exact ids, family names (the part before the first ':'),
/// glob patterns with '*', or "all". Throws Input when a selector matches
/// nothing.
std::vector<const RegisteredCheck*> select_checks(const std::vector<std::string>& selectors);

struct VerifyRun {
    int max_weight = 3;
    std::vector<Report> reports;
    std::size_t audited = 0;
    bool pass() const;
    nlohmann::json to_json() const;
};

VerifyRun run_checks(const std::vector<const RegisteredCheck*>& checks, int max_weight);
VerifyRun run_all(int max_weight);

}  // namespace fachom
