#pragma once

#include "fachom/linear.hpp"
#include "fachom/rational.hpp"

#include <json.hpp>

#include <climits>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fachom {

struct Slot {
    int weight = 0;
    int degree = 0;
    auto operator<=>(const Slot&) const = default;
};

std::string to_string(Slot slot);

/// Closed integer interval.
struct Window {
    int lo = INT_MIN;
    int hi = INT_MAX;
    bool contains(int x) const noexcept { return lo <= x && x <= hi; }
    static Window all() { return {}; }
    static Window abs_at_most(int bound) { return {-bound, bound}; }
};

/// Element of a graded space in the coordinates of its global basis.
using LinComb = std::map<std::size_t, Rational>;

void add_to(LinComb& target, std::size_t index, const Rational& coefficient);
void add_to(LinComb& target, const LinComb& source, const Rational& scale = 1);

struct BasisElement {
    std::string label;
    int weight = 0;
    int degree = 0;
    Slot slot() const noexcept { return {weight, degree}; }
};

class BettiTable;

/// Finite-dimensional vector space with a labelled basis, graded by
/// (weight, degree). Global indices are assigned in insertion order.
class BigradedSpace {
public:
    std::size_t add(std::string label, int weight, int degree);

    std::size_t size() const noexcept { return elements_.size(); }
    const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
    Slot slot_of(std::size_t i) const { return elements_[i].slot(); }
    std::size_t position(std::size_t i) const { return position_[i]; }

    const std::vector<std::size_t>& slot(Slot s) const;
    const std::map<Slot, std::vector<std::size_t>>& slots() const noexcept { return slots_; }
    std::optional<std::size_t> find(Slot s, const std::string& label) const;

    BettiTable dimensions() const;

private:
    std::vector<BasisElement> elements_;
    std::vector<std::size_t> position_;
    std::map<Slot, std::vector<std::size_t>> slots_;
    std::map<Slot, std::unordered_map<std::string, std::size_t>> labels_;
};

/// Observable output of every equivalence claim: (weight, degree) -> dimension.
class BettiTable {
public:
    void set(Slot s, std::size_t dim);
    void add(Slot s, std::size_t dim);
    std::size_t at(Slot s) const;
    const std::map<Slot, std::size_t>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }

    long long euler_characteristic(int weight) const;
    std::vector<int> weights() const;

    /// (w, d) -> (-w, -d)
    BettiTable reflected() const;
    BettiTable restricted(Window weights, Window degrees = Window::all()) const;

    /// Long format with header "weight,degree,dim".
    std::string to_csv() const;
    /// Grid: one row per weight, one column per degree.
    std::string to_text() const;
    nlohmann::json to_json() const;
    static BettiTable from_json(const nlohmann::json& j);
    static BettiTable from_csv(const std::string& text);

    bool operator==(const BettiTable&) const = default;

private:
    std::map<Slot, std::size_t> entries_;
};

/// Betti table convolution over (weight, degree); Künneth over a field.
BettiTable convolve(const BettiTable& a, const BettiTable& b, Window weights = Window::all());

/// Graded space with a weight-preserving differential of degree -1, stored
/// as the image of every basis element.
class ChainComplex {
public:
    ChainComplex() = default;
    explicit ChainComplex(BigradedSpace space);
    /// Throws Validation if an image leaves the slot (w, d-1).
    ChainComplex(BigradedSpace space, std::vector<LinComb> differential);

    const BigradedSpace& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return space_.size(); }
    const LinComb& d(std::size_t i) const { return differential_[i]; }
    const std::vector<LinComb>& differential() const noexcept { return differential_; }
    LinComb apply(const LinComb& x) const;
    bool has_zero_differential() const;

    /// Matrix of d from slot `source` to (w, d-1), in slot positions.
    SparseMatrix differential_matrix(Slot source) const;

    /// Throws DifferentialSquareNonzero naming the first bad slot.
    void check_square_zero(Window weights = Window::all()) const;

private:
    BigradedSpace space_;
    std::vector<LinComb> differential_;
};

/// Worker count used by homology() when none is passed explicitly.
void set_default_jobs(unsigned jobs);
unsigned default_jobs();

BettiTable homology(const ChainComplex& c, Window weights = Window::all(),
                    Window degrees = Window::all(), unsigned jobs = 0);

ChainComplex unit_complex();
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b, Window weights = Window::all());
ChainComplex dual(const ChainComplex& c);
ChainComplex shift(const ChainComplex& c, int k);

std::string tensor_label(const std::string& a, const std::string& b);
std::string dual_label(const std::string& label);

/// Koszul sign (-1)^(a*b) as +1/-1.
inline int koszul(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }
inline int sign_of(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace fachom
