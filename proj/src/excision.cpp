#include "fachom/excision.hpp"

#include "fachom/errors.hpp"

#include <cctype>

namespace fachom {

const char* to_string(Role role) {
    switch (role) {
        case Role::Value: return "value";
        case Role::Algebra: return "algebra";
        case Role::RightModule: return "right module";
        case Role::LeftModule: return "left module";
    }
    return "?";
}

std::string GluingExpr::to_string() const {
    switch (kind) {
        case Kind::Leaf: return name;
        case Kind::Circle: return "circle(" + children[0].to_string() + ")";
        case Kind::Glue:
            return "glue(" + children[0].to_string() + "; " + children[1].to_string() + "; " +
                   children[2].to_string() + ")";
    }
    return {};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    GluingExpr parse() {
        GluingExpr e = expr(Role::Value);
        skip();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' after expression");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
        if (text_[pos_] != c) fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        ++pos_;
    }

    static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' || c == '\'';
    }

    static void require(const GluingExpr& e, Role role) {
        bool ok = true;
        if (role == Role::Algebra) ok = e.kind == GluingExpr::Kind::Leaf;
        if (role == Role::LeftModule || role == Role::RightModule) ok = e.kind != GluingExpr::Kind::Circle;
        if (!ok)
            throw Error(ErrorKind::RoleMismatch, "'" + e.to_string() + "' at offset " + std::to_string(e.offset) +
                                                     " cannot serve as " + to_string(role));
    }

    GluingExpr expr(Role role) {
        skip();
        if (pos_ >= text_.size()) fail("expected an expression before end of input");
        if (!name_start(text_[pos_])) fail("expected a name, found '" + std::string(1, text_[pos_]) + "'");
        GluingExpr e;
        e.offset = pos_ + 1;
        e.role = role;
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
        e.name = text_.substr(start, pos_ - start);
        std::size_t after = pos_;
        skip();
        bool call = pos_ < text_.size() && text_[pos_] == '(';
        if (!call || (e.name != "circle" && e.name != "glue")) {
            pos_ = after;
            return e;
        }
        ++pos_;
        if (e.name == "circle") {
            e.kind = GluingExpr::Kind::Circle;
            e.children.push_back(expr(Role::Algebra));
        } else {
            e.kind = GluingExpr::Kind::Glue;
            e.children.push_back(expr(Role::RightModule));
            expect(';');
            e.children.push_back(expr(Role::Algebra));
            expect(';');
            e.children.push_back(expr(Role::LeftModule));
        }
        expect(')');
        e.name.clear();
        for (const auto& child : e.children) require(child, child.role);
        return e;
    }
};

AlgebraPtr unit_ptr() {
    static const AlgebraPtr unit = std::make_shared<const WgAlgebra>(unit_algebra());
    return unit;
}

[[noreturn]] void unbound(const GluingExpr& e) {
    throw Error(ErrorKind::RoleMismatch, "'" + e.name + "' at offset " + std::to_string(e.offset) + " is unbound");
}

AlgebraPtr algebra_of(const GluingExpr& e, const CoefficientAssignment& c) {
    if (e.name == "unit") return unit_ptr();
    if (auto a = c.algebra(e.name)) return a;
    if (c.module(e.name))
        throw Error(ErrorKind::RoleMismatch, "'" + e.name + "' at offset " + std::to_string(e.offset) +
                                                 " is a module but is used as an algebra");
    unbound(e);
}

/// Module value of a side of a glue over `over`; `side` is the side facing
/// the gluing algebra.
WgModule module_of(const GluingExpr& e, const CoefficientAssignment& c, const AlgebraPtr& over, Side side, int W);

WgModule glue_module(const GluingExpr& e, const CoefficientAssignment& c, int W) {
    AlgebraPtr a = algebra_of(e.children[1], c);
    WgModule r = module_of(e.children[0], c, a, Side::Right, W);
    WgModule l = module_of(e.children[2], c, a, Side::Left, W);
    return two_sided_bar_module(r, a, l, W);
}

WgModule plain_module_of(const GluingExpr& e, const CoefficientAssignment& c, const AlgebraPtr& over, int W) {
    if (e.kind == GluingExpr::Kind::Glue) return glue_module(e, c, W);
    if (e.name == "unit") return trivial_module(over);
    if (auto a = c.algebra(e.name)) return regular_module(a);
    if (const WgModule* m = c.module(e.name)) return *m;
    unbound(e);
}

WgModule module_of(const GluingExpr& e, const CoefficientAssignment& c, const AlgebraPtr& over, Side side, int W) {
    WgModule m = plain_module_of(e, c, over, W);
    // every value is a module over the ground field
    const AlgebraPtr& facing = side == Side::Left ? m.left_algebra() : m.right_algebra();
    if (over == unit_ptr() && facing != over) return restrict_to_unit(m, over, side);
    return m;
}

ChainComplex circle_complex(const AlgebraPtr& a, int W) {
    auto [ae, factors] = algebra_tensor_factors(*a, opposite(*a));
    auto aep = std::make_shared<const WgAlgebra>(std::move(ae));
    WgModule right = hochschild_module(a, aep, factors, Side::Right);
    WgModule left = hochschild_module(a, aep, factors, Side::Left);
    return two_sided_bar(right, aep, left, W);
}

}  // namespace

GluingExpr parse_gluing(const std::string& text) { return Parser(text).parse(); }

void CoefficientAssignment::bind(const std::string& name, AlgebraPtr algebra) {
    if (name == "unit") throw Error(ErrorKind::Input, "'unit' is reserved");
    modules_.erase(name);
    algebras_[name] = std::move(algebra);
}

void CoefficientAssignment::bind(const std::string& name, WgModule module) {
    if (name == "unit") throw Error(ErrorKind::Input, "'unit' is reserved");
    algebras_.erase(name);
    modules_[name] = std::move(module);
}

bool CoefficientAssignment::contains(const std::string& name) const {
    return algebras_.count(name) || modules_.count(name);
}

AlgebraPtr CoefficientAssignment::algebra(const std::string& name) const {
    auto it = algebras_.find(name);
    return it == algebras_.end() ? nullptr : it->second;
}

const WgModule* CoefficientAssignment::module(const std::string& name) const {
    auto it = modules_.find(name);
    return it == modules_.end() ? nullptr : &it->second;
}

std::vector<std::string> CoefficientAssignment::names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : algebras_) out.push_back(k);
    for (const auto& [k, v] : modules_) out.push_back(k);
    return out;
}

ChainComplex evaluate_complex(const GluingExpr& e, const CoefficientAssignment& c, int W) {
    switch (e.kind) {
        case GluingExpr::Kind::Circle: return circle_complex(algebra_of(e.children[0], c), W);
        case GluingExpr::Kind::Glue: return glue_module(e, c, W).carrier();
        case GluingExpr::Kind::Leaf:
            if (e.name == "unit") return unit_complex();
            if (auto a = c.algebra(e.name)) return a->carrier();
            if (const WgModule* m = c.module(e.name)) return m->carrier();
            unbound(e);
    }
    return {};
}

BettiTable evaluate(const GluingExpr& e, const CoefficientAssignment& c, int W) {
    return homology(evaluate_complex(e, c, W), Window::abs_at_most(W));
}

}  // namespace fachom
