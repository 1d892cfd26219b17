#include "fsk/report.hpp"

#include "fsk/errors.hpp"

namespace fsk {

Json report_header(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    return j;
}

Json to_json(const VertexSet& s) { return s.to_vector(); }

Json to_json(const Edge& e) { return Json::array({e.first, e.second}); }

Json to_json(const FskPattern& p) {
    Json j;
    j["s"] = p.s;
    j["k"] = p.k;
    j["order"] = p.order();
    j["size"] = p.size();
    j["hub"] = Json::array({p.a, p.b});
    j["paths"] = p.paths;
    return j;
}

Json to_json(const ConstructionLayout& l) {
    Json j;
    j["n"] = l.n;
    j["s"] = l.s;
    j["k"] = l.k;
    j["alpha"] = to_string(l.alpha);
    j["m"] = l.m;
    j["t"] = l.t;
    j["blocks"] = l.blocks;
    j["z_count"] = l.z_count();
    j["last_x"] = l.last_x;
    j["last_y"] = l.last_y;
    j["degenerate"] = l.degenerate();
    j["theorem_scale"] = l.theorem_scale();
    Json labels = Json::array();
    for (const VertexLabel& label : l.labels) labels.push_back(label.to_string());
    j["labels"] = std::move(labels);
    return j;
}

Json to_json(const Certificate& c) {
    Json j;
    j["passed"] = c.passed();
    Json facts = Json::array();
    for (const CertificateFact& f : c.facts) {
        Json fact{{"name", f.name}, {"passed", f.passed}};
        if (!f.passed) fact["witness"] = f.witness;
        facts.push_back(std::move(fact));
    }
    j["facts"] = std::move(facts);
    return j;
}

Json to_json(const EdgeBoundReport& r) {
    return Json{{"edges", to_string(r.edges)},
                {"holds", r.holds},
                {"theorem_scale", r.theorem_scale},
                {"margin_lo", to_string(r.margin_lo)},
                {"margin_hi", to_string(r.margin_hi)},
                {"margin_lo_decimal", to_decimal(r.margin_lo)}};
}

Json to_json(const WitnessCopy& w) {
    return Json{{"s", w.s}, {"k", w.k}, {"hub", to_json(w.hub_edge())}, {"map", w.map}};
}

Json to_json(const BicliqueSearch& r) {
    return Json{{"size", r.best.size()},
                {"a", to_json(r.best.a)},
                {"b", to_json(r.best.b)},
                {"optimal", r.optimal},
                {"upper_bound", r.upper_bound},
                {"nodes", r.nodes}};
}

Json to_json(const PartitionOutcome& p) {
    Json moves = Json::array();
    for (const PartitionMove& m : p.trace) {
        Json move{{"phase", phase_name(m.phase)}, {"moved", m.moved}};
        move["trigger"] = m.trigger == kNoVertex ? Json(nullptr) : Json(m.trigger);
        moves.push_back(std::move(move));
    }
    return Json{{"h", p.partition.h},
                {"u", to_json(p.partition.u)},
                {"v", to_json(p.partition.v)},
                {"t", to_json(p.partition.t)},
                {"started_bipartite", p.stats.started_bipartite},
                {"initial_cut_edges", p.stats.cut_edges},
                {"min_core_degree", p.stats.min_core_degree},
                {"degree_target", to_string(p.stats.degree_target)},
                {"meets_degree_target", p.stats.meets_degree_target},
                {"moves", std::move(moves)}};
}

Json to_json(const DeletionTrace& t) {
    Json steps = Json::array();
    for (const DeletionStep& s : t.steps) {
        steps.push_back(Json{{"probe", to_json(s.probe)},
                             {"class", omega_name(s.cls)},
                             {"x_anchors", s.x_anchors},
                             {"y_anchors", s.y_anchors},
                             {"x_size", s.x_size},
                             {"y_size", s.y_size},
                             {"deleted_side", s.deleted_u_side ? "U" : "V"},
                             {"deleted", s.deleted},
                             {"claim4", s.claim4}});
    }
    return Json{{"n", t.n},
                {"t_size", t.t_size},
                {"deleted_total", t.deleted_total},
                {"core_size", t.core_size},
                {"claim4_violations", t.claim4_violations},
                {"steps", std::move(steps)}};
}

Json to_json(const BoundReport& r) {
    return Json{{"removed", r.removed},
                {"deleted_total", r.deleted_total},
                {"t_size", r.t_size},
                {"bound", to_string(r.bound)},
                {"within", r.within},
                {"vacuous", r.vacuous},
                {"margin", to_string(r.margin)},
                {"epsilon_lo", to_string(r.epsilon_lo)},
                {"epsilon_hi", to_string(r.epsilon_hi)},
                {"epsilon_decimal", to_decimal(r.epsilon_lo)}};
}

ConstructionLayout layout_from_json(const Json& j) {
    try {
        ConstructionLayout l = plan_layout(j.at("n").get<int>(), j.at("s").get<int>(), j.at("k").get<int>(),
                                           parse_rational(j.at("alpha").get<std::string>()));
        if (j.contains("labels")) {
            const Json& labels = j.at("labels");
            if (labels.size() != l.labels.size()) throw ParseError("layout label count disagrees with n", 0);
            for (std::size_t v = 0; v < labels.size(); ++v)
                if (labels[v].get<std::string>() != l.labels[v].to_string())
                    throw ParseError("layout label of vertex " + std::to_string(v) + " disagrees with the plan", 0);
        }
        return l;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed layout document: ") + e.what(), 0);
    }
}

}  // namespace fsk
