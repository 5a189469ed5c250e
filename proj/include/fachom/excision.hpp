#pragma once

#include "fachom/bar.hpp"
#include "fachom/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fachom {

/// What a subexpression must provide to its parent.
enum class Role { Value, Algebra, RightModule, LeftModule };
const char* to_string(Role role);

/// Syntax tree of a decomposed 1-manifold:
///   expr := name | circle(expr) | glue(expr; expr; expr)
/// The middle of a glue and the argument of a circle must be names (they
/// carry algebras); the sides of a glue are names or glues (modules).
struct GluingExpr {
    enum class Kind { Leaf, Glue, Circle };
    Kind kind = Kind::Leaf;
    std::string name;
    /// 1-based character position of the node in the source text.
    std::size_t offset = 1;
    Role role = Role::Value;
    std::vector<GluingExpr> children;

    std::string to_string() const;
};

/// Throws SyntaxError (offset is the 1-based character position) or
/// RoleMismatch.
GluingExpr parse_gluing(const std::string& text);

/// Named coefficients. `unit` is reserved: Q as algebra, and the
/// augmentation module over whichever algebra it is glued along. Gluing
/// along `unit` restricts the sides along Q -> A, so any value can sit there.
class CoefficientAssignment {
public:
    void bind(const std::string& name, AlgebraPtr algebra);
    void bind(const std::string& name, WgModule module);
    bool contains(const std::string& name) const;
    /// nullptr when the name is bound to a module or unbound.
    AlgebraPtr algebra(const std::string& name) const;
    const WgModule* module(const std::string& name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, AlgebraPtr> algebras_;
    std::map<std::string, WgModule> modules_;
};

/// Leaf -> homology of its value; glue -> homology of the two-sided bar;
/// circle(A) -> homology of B(A, A (x) A^op, A). Unbound names and module
/// structures over the wrong algebra raise RoleMismatch.
BettiTable evaluate(const GluingExpr& e, const CoefficientAssignment& c, int max_weight);
ChainComplex evaluate_complex(const GluingExpr& e, const CoefficientAssignment& c, int max_weight);

}  // namespace fachom
