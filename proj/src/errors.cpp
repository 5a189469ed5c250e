#include "fachom/errors.hpp"
#include "fachom/rational.hpp"

namespace fachom {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CompositionNonzero: return "CompositionNonzero";
        case ErrorKind::DifferentialSquareNonzero: return "DifferentialSquareNonzero";
        case ErrorKind::MixedWeightSigns: return "MixedWeightSigns";
        case ErrorKind::StraighteningOverflow: return "StraighteningOverflow";
        case ErrorKind::UnboundedWeight: return "UnboundedWeight";
        case ErrorKind::UnknownModel: return "UnknownModel";
        case ErrorKind::LevelCapTooSmall: return "LevelCapTooSmall";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::RoleMismatch: return "RoleMismatch";
        case ErrorKind::InvalidCodim: return "InvalidCodim";
        case ErrorKind::Validation: return "Validation";
        case ErrorKind::Input: return "Input";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t offset, const std::string& message)
    : Error(ErrorKind::SyntaxError, message + " at offset " + std::to_string(offset)),
      offset_(offset) {}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw Error(ErrorKind::Input, "empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error(ErrorKind::Input, "malformed rational literal '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorKind::Input, "zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

}  // namespace fachom
