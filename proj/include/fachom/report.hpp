#pragma once

#include "fachom/complexes.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fachom {

struct Route {
    std::string name;
    BettiTable table;
};

/// Outcome of comparing two routes; `slot` is the first disagreeing slot in
/// (weight, degree) order, empty when the tables agree.
struct RouteComparison {
    std::string first;
    std::string second;
    std::optional<Slot> slot;
    bool pass() const noexcept { return !slot; }
};

struct Report {
    std::string id;
    Window weights;
    std::vector<Route> routes;
    std::vector<RouteComparison> comparisons;
    bool pass() const;
    nlohmann::json to_json() const;
    /// One line: "PASS id" or "FAIL id first a vs b at (w,d)".
    std::string summary() const;
};

/// First slot where the tables differ, scanning both supports in order.
std::optional<Slot> first_divergence(const BettiTable& a, const BettiTable& b);

/// Compares every pair of routes on the window.
Report compare_routes(std::string id, std::vector<Route> routes, Window weights);

using TableProducer = std::function<BettiTable()>;

/// Runs every producer and compares all pairs on |weight| <= max_weight.
/// Disagreement is reported, not thrown.
Report check_independence(const std::vector<std::pair<std::string, TableProducer>>& routes, int max_weight,
                          std::string id = "independence");

}  // namespace fachom
