#include "fachom/report.hpp"

#include "fachom/errors.hpp"

namespace fachom {

bool Report::pass() const {
    for (const auto& c : comparisons)
        if (!c.pass()) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["status"] = pass() ? "PASS" : "FAIL";
    nlohmann::json window;
    if (weights.lo != Window::all().lo) window["weight_min"] = weights.lo;
    if (weights.hi != Window::all().hi) window["weight_max"] = weights.hi;
    j["window"] = window;
    j["routes"] = nlohmann::json::array();
    for (const auto& r : routes) j["routes"].push_back({{"name", r.name}, {"table", r.table.to_json()}});
    j["comparisons"] = nlohmann::json::array();
    for (const auto& c : comparisons) {
        nlohmann::json e{{"routes", {c.first, c.second}}, {"status", c.pass() ? "PASS" : "FAIL"}};
        if (c.slot) e["first_divergence"] = {{"weight", c.slot->weight}, {"degree", c.slot->degree}};
        j["comparisons"].push_back(std::move(e));
    }
    return j;
}

std::string Report::summary() const {
    for (const auto& c : comparisons)
        if (!c.pass()) {
            std::size_t da = 0, db = 0;
            for (const auto& r : routes) {
                if (r.name == c.first) da = r.table.at(*c.slot);
                if (r.name == c.second) db = r.table.at(*c.slot);
            }
            return "FAIL " + id + ": " + c.first + " vs " + c.second + " at " + to_string(*c.slot) + " (" +
                   std::to_string(da) + " vs " + std::to_string(db) + ")";
        }
    return "PASS " + id;
}

std::optional<Slot> first_divergence(const BettiTable& a, const BettiTable& b) {
    auto ia = a.entries().begin(), ib = b.entries().begin();
    const auto ea = a.entries().end(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) return ia->first;
        if (ia == ea || ib->first < ia->first) return ib->first;
        if (ia->second != ib->second) return ia->first;
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

Report compare_routes(std::string id, std::vector<Route> routes, Window weights) {
    Report r{std::move(id), weights, {}, {}};
    for (auto& route : routes) route.table = route.table.restricted(weights);
    r.routes = std::move(routes);
    for (std::size_t i = 0; i < r.routes.size(); ++i)
        for (std::size_t j = i + 1; j < r.routes.size(); ++j)
            r.comparisons.push_back(
                {r.routes[i].name, r.routes[j].name, first_divergence(r.routes[i].table, r.routes[j].table)});
    return r;
}

Report check_independence(const std::vector<std::pair<std::string, TableProducer>>& routes, int max_weight,
                          std::string id) {
    if (routes.size() < 2) throw Error(ErrorKind::Input, "an independence check needs at least two routes");
    std::vector<Route> tables;
    for (const auto& [name, produce] : routes) tables.push_back({name, produce()});
    return compare_routes(std::move(id), std::move(tables), Window::abs_at_most(max_weight));
}

}  // namespace fachom
