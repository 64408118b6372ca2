#include "signdet/json_io.hpp"

#include "json.hpp"

namespace signdet {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

Json poly_json(const MultilinearPoly& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json term;
        term["coeff"] = coeff.str();
        term["t_deg"] = mono.t_degree;
        Json vars = Json::array();
        for (const auto& v : mono.vars) vars.push_back(v.str());
        term["vars"] = std::move(vars);
        terms.push_back(std::move(term));
    }
    return terms;
}

Json counts_json(const SignCounts& c) {
    Json j;
    j["t"] = c.t;
    j["m_plus"] = c.m_plus;
    j["m_minus"] = c.m_minus;
    j["m"] = c.m();
    return j;
}

Json selection_json(const VertexSelection& sel) {
    Json j;
    Json rows = Json::array(), cols = Json::array();
    for (int r : sel.rows) rows.push_back(r + 1);
    for (int c : sel.cols) cols.push_back(c + 1);
    j["rows"] = std::move(rows);
    j["cols"] = std::move(cols);
    return j;
}

Json cycle_json(const Cycle& c) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < c.cols.size(); ++i) {
        vertices.push_back("C" + std::to_string(c.cols[i] + 1));
        vertices.push_back("R" + std::to_string(c.rows[i] + 1));
    }
    Json j;
    j["vertices"] = std::move(vertices);
    j["c_pairs"] = c.cpair_count;
    j["parity"] = c.is_e() ? "e" : "o";
    return j;
}

const char* class_name(PatternClass k) {
    switch (k) {
        case PatternClass::SNS: return "SNS";
        case PatternClass::SD: return "SD";
        case PatternClass::ZeroDet: return "ZeroDet";
        case PatternClass::General: return "General";
    }
    return "General";
}

const char* genericity_name(Genericity g) {
    switch (g) {
        case Genericity::Generic: return "Generic";
        case Genericity::WeaklyGeneric: return "WeaklyGeneric";
        case Genericity::NotGeneric: return "NotGeneric";
        case Genericity::Unverified: return "Unverified";
    }
    return "Unverified";
}

const char* verdict_name(ZeroOneVerdict v) {
    switch (v) {
        case ZeroOneVerdict::Zero: return "Zero";
        case ZeroOneVerdict::One: return "One";
        case ZeroOneVerdict::MoreThanOne: return "MoreThanOne";
        case ZeroOneVerdict::Inapplicable: return "Inapplicable";
    }
    return "Inapplicable";
}

}  // namespace

std::string poly_to_json(const MultilinearPoly& p, bool pretty) {
    return dump(poly_json(p), pretty);
}

std::string counts_to_json(const SignCounts& c, bool pretty) {
    return dump(counts_json(c), pretty);
}

std::string detsign_report_json(const Classification& c, bool pretty) {
    Json j = counts_json(c.counts);
    j["class"] = class_name(c.kind);
    j["partial"] = c.partial;
    return dump(j, pretty);
}

std::string jacobian_report_json(const ReactionFormResult& rf,
                                 const JacobianSignResult& js, bool pretty) {
    Json j;
    switch (rf.form) {
        case ReactionForm::RF: j["reaction_form"] = "RF"; break;
        case ReactionForm::WeakRF: j["reaction_form"] = "wRF"; break;
        case ReactionForm::Neither: j["reaction_form"] = "Neither"; break;
    }
    Json weak = Json::array();
    for (const auto& [r, s] : rf.weak_violations) weak.push_back({r, s});
    j["weak_violations"] = std::move(weak);
    j["jacobian_has_sign_pattern"] = js.has_pattern();
    if (js.witness) {
        Json w;
        w["i"] = js.witness->i;
        w["j"] = js.witness->j;
        w["k"] = js.witness->k;
        w["l"] = js.witness->l;
        w["cycle"] = cycle_json(js.witness->cycle);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    if (js.pattern) {
        Json rows = Json::array();
        for (int i = 0; i < js.pattern->rows(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < js.pattern->cols(); ++k) {
                int s = js.pattern->sign(i, k);
                row.push_back(s > 0 ? "+" : (s < 0 ? "-" : "0"));
            }
            rows.push_back(std::move(row));
        }
        j["su_sign_pattern"] = std::move(rows);
    } else {
        j["su_sign_pattern"] = nullptr;
    }
    return dump(j, pretty);
}

std::string coredet_report_json(const CoreDetReport& r, bool pretty) {
    Json j;
    j["d"] = r.d;
    j["rank"] = r.rank_r;
    j["cd"] = poly_json(r.cd);
    j["counts"] = counts_json(r.counts);
    j["anomalous"] = r.anomalous;
    Json gen;
    gen["level"] = genericity_name(r.genericity.level);
    if (r.genericity.witness) gen["witness"] = selection_json(*r.genericity.witness);
    else gen["witness"] = nullptr;
    if (!r.genericity.detail.empty()) gen["detail"] = r.genericity.detail;
    j["genericity"] = std::move(gen);

    if (r.options.with_bounds) {
        Json b;
        b["lower"] = r.bounds.lower;
        b["upper"] = r.bounds.upper;
        b["n_lower"] = r.bounds.n_lower;
        b["n_upper"] = r.bounds.n_upper;
        b["n_set_size"] = r.bounds.n_set_size;
        b["advisory"] = r.bounds.advisory;
        j["bounds"] = std::move(b);
    }

    if (r.options.with_zero_one) {
        Json z;
        z["verdict"] = verdict_name(r.zero_one.verdict);
        z["reason"] = r.zero_one.reason;
        z["advisory"] = r.zero_one.advisory;
        j["zero_one"] = std::move(z);
    }

    if (r.cfd) {
        Json cfd;
        cfd["poly"] = poly_json(*r.cfd);
        cfd["counts"] = counts_json(*r.cfd_counts);
        cfd["anomalous"] = r.cfd_anomalous;
        j["cfd"] = std::move(cfd);
    }
    return dump(j, pretty);
}

std::string graph_report_json(const SignedBipartiteGraph& g, std::int64_t limit,
                              bool pretty) {
    Json j;
    j["rows"] = g.row_count;
    j["cols"] = g.col_count;
    j["edges"] = g.edges.size();
    std::int64_t positive = 0, negative = 0;
    for (const auto& e : g.edges) (e.sign > 0 ? positive : negative) += 1;
    j["positive_edges"] = positive;
    j["negative_edges"] = negative;
    j["components"] = connected_components(g).size();
    j["generic_rank"] = generic_rank(g);
    auto cycles = enumerate_cycles(g, limit);
    j["cycles"] = cycles.items.size();
    j["cycles_truncated"] = cycles.limit_exceeded;
    std::int64_t e_cycles = 0;
    for (const auto& c : cycles.items) e_cycles += c.is_e() ? 1 : 0;
    j["e_cycles"] = e_cycles;
    j["single_cycle_short_hair"] = single_cycle_with_short_hair(g);
    return dump(j, pretty);
}

}  // namespace signdet
