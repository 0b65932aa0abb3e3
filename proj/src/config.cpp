#include "finalg/config.hpp"

#include <json.hpp>

#include "finalg/error.hpp"

namespace finalg {

namespace {

std::vector<int> flatten_matrix(const json& rows, const char* what) {
    if (!rows.is_array()) throw error(errc::validation, std::string(what) + " must be an array of rows");
    std::vector<int> out;
    for (const auto& row : rows) {
        if (!row.is_array()) throw error(errc::validation, std::string(what) + " rows must be arrays");
        for (const auto& v : row) out.push_back(v.get<int>());
    }
    return out;
}

SubSet subset_from(const json& gens, int universe, const char* what) {
    SubSet s(universe);
    for (const auto& g : gens) {
        int e = g.get<int>();
        if (e < 0 || e >= universe)
            throw error(errc::validation, std::string(what) + ": element " + std::to_string(e) +
                                              " out of range");
        s.set(e);
    }
    return s;
}

RingPtr ring_from_config_impl(const json& j);
ModulePtr module_from_config_impl(const RingPtr& r, const json& j);

RingPtr ring_from_config_impl(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") return make_cyclic_ring(j.at("n").get<int>());
    if (kind == "matrix") return make_matrix_ring(j.at("p").get<int>(), j.at("k").get<int>(), false);
    if (kind == "triangular")
        return make_matrix_ring(j.at("p").get<int>(), j.at("k").get<int>(), true);
    if (kind == "product")
        return make_product_ring(ring_from_config_impl(j.at("a")), ring_from_config_impl(j.at("b")));
    if (kind == "quotient") {
        RingPtr base = ring_from_config_impl(j.at("ring"));
        Ideal i = ideal_generated(base, subset_from(j.at("ideal_generators"), base->order,
                                                    "ideal_generators"));
        return make_quotient_ring(base, i).first;
    }
    if (kind == "tables") {
        std::vector<int> add = flatten_matrix(j.at("add"), "add");
        std::vector<int> mul = flatten_matrix(j.at("mul"), "mul");
        int order = int(j.at("add").size());
        return validate_ring(order, std::move(add), std::move(mul),
                             j.value("label", std::string("R")));
    }
    throw error(errc::validation, "unknown ring kind: " + kind);
}

ModulePtr module_from_config_impl(const RingPtr& r, const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "regular") return regular_module(r);
    if (kind == "free") return free_module(r, j.at("rank").get<int>());
    if (kind == "column") return column_module(r, j.at("p").get<int>(), j.at("k").get<int>());
    if (kind == "quotient") {
        ModulePtr base = module_from_config_impl(r, j.at("module"));
        Submodule n = submodule_generated(base, subset_from(j.at("generators"), base->order,
                                                            "generators"));
        return quotient_module(base, n).first;
    }
    if (kind == "presentation") {
        ModulePtr base = free_module(r, j.at("rank").get<int>());
        Submodule n = submodule_generated(base, subset_from(j.at("generators"), base->order,
                                                            "generators"));
        return quotient_module(base, n).first;
    }
    if (kind == "tables") {
        std::vector<int> add = flatten_matrix(j.at("add"), "add");
        std::vector<int> act = flatten_matrix(j.at("act"), "act");
        int order = int(j.at("add").size());
        return validate_module(r, order, std::move(add), std::move(act),
                               j.value("label", std::string("M")));
    }
    throw error(errc::validation, "unknown module kind: " + kind);
}

} // namespace

RingPtr ring_from_config(const json& j) {
    try {
        return ring_from_config_impl(j);
    } catch (const json::exception& e) {
        throw error(errc::validation, std::string("ring config: ") + e.what());
    }
}

ModulePtr module_from_config(const RingPtr& r, const json& j) {
    try {
        return module_from_config_impl(r, j);
    } catch (const json::exception& e) {
        throw error(errc::validation, std::string("module config: ") + e.what());
    }
}

json ring_tables_config(const Ring& r) {
    json add = json::array(), mul = json::array();
    for (int x = 0; x < r.order; ++x) {
        json arow = json::array(), mrow = json::array();
        for (int y = 0; y < r.order; ++y) {
            arow.push_back(r.add(x, y));
            mrow.push_back(r.mul(x, y));
        }
        add.push_back(std::move(arow));
        mul.push_back(std::move(mrow));
    }
    return json{{"kind", "tables"}, {"add", add}, {"mul", mul}, {"label", r.label}};
}

json module_tables_config(const Module& m) {
    json add = json::array(), act = json::array();
    for (int x = 0; x < m.order; ++x) {
        json row = json::array();
        for (int y = 0; y < m.order; ++y) row.push_back(m.add(x, y));
        add.push_back(std::move(row));
    }
    for (int r = 0; r < m.ring->order; ++r) {
        json row = json::array();
        for (int y = 0; y < m.order; ++y) row.push_back(m.act(r, y));
        act.push_back(std::move(row));
    }
    return json{{"kind", "tables"}, {"add", add}, {"act", act}, {"label", m.label}};
}

} // namespace finalg
