#include "genuspart/json_io.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genuspart {

using nlohmann::json;

json to_json(const Partition& p) {
    json parts = json::array();
    for (const auto& part : p.parts()) parts.push_back(part);
    return json{{"n", p.n()}, {"parts", parts}};
}

Partition partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("parts"))
        throw std::invalid_argument("partition JSON must be {\"n\": ..., \"parts\": [[...], ...]}");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> parts;
    for (const auto& part : j.at("parts")) parts.push_back(part.get<std::vector<int>>());
    return Partition::from_parts(n, parts);
}

json to_json(const GenusCountTable& t) {
    json counts = json::array();
    for (const auto& [key, count] : t.cells) {
        const auto& [type, genus] = key;
        counts.push_back(json{{"type", type.str()}, {"genus", genus}, {"count", count}});
    }
    return json{{"n", t.n}, {"total", t.total()}, {"counts", counts}};
}

json to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& step : t.steps) {
        steps.push_back(json{{"kind", to_string(step.kind)},
                             {"removed", step.removed},
                             {"before_n", step.before_n},
                             {"after_n", step.after_n}});
    }
    return json{{"initial", to_json(t.initial)},
                {"genus", t.genus},
                {"steps", steps},
                {"reduced", to_json(t.reduced)},
                {"class", to_string(t.result_class)}};
}

json to_json(const std::vector<OrbitRecord>& orbits) {
    json out = json::array();
    for (const auto& o : orbits) {
        out.push_back(json{{"representative", to_json(o.representative)},
                           {"stabilizer_order", o.stabilizer_order},
                           {"orbit_length", o.orbit_length}});
    }
    return out;
}

json to_json(const CensusTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) {
        rows.push_back(json{{"n", r.n},
                            {"two_vertices_only", r.two_vertices_only},
                            {"one_3vertex", r.one_3vertex},
                            {"two_3vertices_prim", r.two_3vertices_prim},
                            {"two_3vertices_semiprim", r.two_3vertices_semiprim},
                            {"one_4vertex", r.one_4vertex},
                            {"total", r.total()}});
    }
    return json{{"rows", rows}};
}

json to_json(const Series<Rat>& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rat_to_string(s.coeff(k)));
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

json to_json(const Series<Poly>& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k).str());
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

namespace {

// joins nonzero "coeff*x^k" terms; `plain` marks coefficients that need no
// parentheses around them
std::string join_terms(int order, const std::function<std::string(int)>& coeff_str,
                       const std::function<bool(int)>& is_zero,
                       const std::function<bool(int)>& plain) {
    std::string out;
    for (int k = 0; k <= order; ++k) {
        if (is_zero(k)) continue;
        std::string c = coeff_str(k);
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += c;
            continue;
        }
        std::string xp = k == 1 ? "x" : "x^" + std::to_string(k);
        if (c == "1")
            out += xp;
        else if (plain(k))
            out += c + "*" + xp;
        else
            out += "(" + c + ")*" + xp;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string series_string(const Series<Rat>& s) {
    return join_terms(
        s.order(), [&](int k) { return rat_to_string(s.coeff(k)); },
        [&](int k) { return s.coeff(k) == 0; }, [](int) { return true; });
}

std::string series_string(const Series<Poly>& s) {
    return join_terms(
        s.order(), [&](int k) { return s.coeff(k).str(); },
        [&](int k) { return s.coeff(k).is_zero(); },
        [&](int k) { return s.coeff(k).terms().size() == 1; });
}

}  // namespace genuspart
