#include "modinv/report.hpp"

#include <json.hpp>

namespace modinv {

using json = nlohmann::ordered_json;

namespace {

json config_block(const RunConfig& cfg) {
    json j;
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    json gens = json::array();
    for (auto& m : cfg.generators) {
        json rows = json::array();
        for (auto& r : m) rows.push_back(r);
        gens.push_back(rows);
    }
    j["generators"] = gens;
    if (cfg.degree_bound)
        j["degree_bound"] = *cfg.degree_bound;
    else
        j["degree_bound"] = nullptr;
    j["ideal_elements"] = cfg.ideal_elements;
    auto match = catalog_match(cfg);
    j["catalog"] = match ? json(*match) : json(nullptr);
    return j;
}

json group_block(const MatrixGroup& G) {
    json j;
    j["order"] = G.order();
    j["modular"] = G.is_modular();
    return j;
}

json header(const char* command, const RunConfig& cfg) {
    json j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["config"] = config_block(cfg);
    return j;
}

json invariants_block(const FundamentalSet& F) {
    json j;
    j["count"] = F.count();
    j["degrees"] = F.degrees;
    j["bound"] = F.bound;
    j["complete"] = F.complete;
    if (!F.complete)
        j["warning"] = "bound_too_small: completeness not certified at this bound";
    j["dims"] = F.invariant_dims;
    json gens = json::array();
    for (auto& g : F.generators) gens.push_back(render(g, "x"));
    j["generators"] = gens;
    return j;
}

json presentation_block(const Presentation& P) {
    json j;
    j["weights"] = P.sprime->weights;
    j["relation_count"] = P.relations.elements().size();
    json degs = json::array();
    json rels = json::array();
    for (auto& r : P.relations.elements()) {
        degs.push_back(r.degree());
        rels.push_back(render(r, "y"));
    }
    j["relation_degrees"] = degs;
    j["relations"] = rels;
    j["certified"] = P.certified;
    j["certificate_bound"] = P.certificate_bound;
    return j;
}

json inference_array(const std::vector<InferenceLine>& lines) {
    json arr = json::array();
    for (auto& l : lines) {
        json e;
        e["statement"] = l.statement;
        e["cite"] = l.cite;
        arr.push_back(e);
    }
    return arr;
}

json transfer_block(const TransferIdealResult& T) {
    json j;
    j["applicable"] = true;
    j["monomials_transferred"] = T.monomials_transferred;
    j["nonzero_images"] = T.nonzero_images;
    j["height"] = T.height;
    j["feshbach_strict"] = T.feshbach_strict;
    json gb = json::array();
    for (auto& g : T.ideal_gb) gb.push_back(render(g, "y"));
    j["ideal_with_relations_gb"] = gb;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_group(const RunConfig& cfg, const MatrixGroup& G) {
    json j = header("group", cfg);
    j["group"] = group_block(G);
    return dump(j);
}

std::string report_invariants(const RunConfig& cfg, const FundamentalSet& F) {
    json j = header("invariants", cfg);
    j["group"] = group_block(F.group);
    j["invariants"] = invariants_block(F);
    return dump(j);
}

std::string report_present(const RunConfig& cfg, const Presentation& P) {
    json j = header("present", cfg);
    j["group"] = group_block(P.group());
    j["invariants"] = invariants_block(P.fset);
    j["presentation"] = presentation_block(P);
    return dump(j);
}

std::string report_diagnose(const RunConfig& cfg, const Presentation& P,
                            const DiagnosisReport& D) {
    json j = header("diagnose", cfg);
    j["group"] = group_block(P.group());
    j["invariants"] = invariants_block(P.fset);
    j["presentation"] = presentation_block(P);

    json d;
    d["dim"] = D.dim;
    d["depth"] = D.depth;
    d["depth_oracle"] = D.depth_oracle_value;
    d["pd"] = D.pd;
    d["cmdef"] = D.cmdef;
    d["is_cohen_macaulay"] = D.is_cm;
    d["is_generalized_cm"] = D.is_generalized_cm;
    d["is_quasi_buchsbaum"] = D.is_quasi_buchsbaum;
    d["buchsbaum_by_fact_2_2"] = D.buchsbaum_by_fact_2_2;
    json serre;
    for (auto& [k, v] : D.serre) serre["S" + std::to_string(k)] = v;
    d["serre"] = serre;
    json lc = json::array();
    for (size_t i = 0; i < D.lc_table.size(); ++i) {
        json e;
        e["i"] = i;
        e["zero"] = D.lc_table[i].zero;
        e["finite_length"] = D.lc_table[i].finite_length;
        e["irrelevant_annihilated"] = D.lc_table[i].irrelevant_annihilated;
        lc.push_back(e);
    }
    d["local_cohomology"] = lc;
    json locus;
    for (auto& [t, v] : D.locus_dims) locus[std::to_string(t)] = v;
    d["locus_dims"] = locus;
    d["f_irrelevant"] = D.f_irrelevant;
    d["chain"] = D.chain;
    d["ext_dims"] = D.ext_dims;
    d["resolution_ranks"] = D.resolution_ranks;
    j["diagnosis"] = d;

    if (D.transfer) {
        j["transfer"] = transfer_block(*D.transfer);
    } else {
        json t;
        t["applicable"] = false;
        j["transfer"] = t;
    }

    // the worked 4-dimensional instance carries its own citation
    std::vector<InferenceLine> lines = D.inferences;
    auto match = catalog_match(cfg);
    if (match && *match == "bertin") {
        for (auto& l : lines)
            if (l.cite == "Cor 3.8" && l.statement.find("\xE2\x84\x93") == 0)
                l.cite = "Example 3.9";
    }
    j["inferences"] = inference_array(lines);

    json c;
    c["depth_routes_agree"] = D.consistency.depth_routes_agree;
    c["prop_3_2_collapse"] = D.consistency.prop32_collapse;
    c["depth_floor"] = D.consistency.depth_floor;
    c["dim4_almost_cm"] = D.consistency.dim4_almost_cm;
    c["chain_monotone"] = D.consistency.chain_monotone;
    c["ext_window"] = D.consistency.ext_window;
    c["euler_identity"] = D.consistency.euler_identity;
    c["kemper_bounds"] = D.consistency.kemper_bounds;
    c["feshbach"] = D.consistency.feshbach;
    c["all"] = D.consistency.all();
    j["consistency"] = c;
    return dump(j);
}

std::string report_grade(const RunConfig& cfg, const Presentation& P, const GradeOutcome& G) {
    json j = header("grade", cfg);
    j["group"] = group_block(P.group());
    json i;
    json ex = json::array();
    for (auto& f : G.ideal_x) ex.push_back(render(f, "x"));
    i["elements_x"] = ex;
    json ey = json::array();
    for (auto& f : G.ideal_y) ey.push_back(render(f, "y"));
    i["elements_y"] = ey;
    i["grade"] = G.grade;
    i["height"] = G.height;
    j["ideal"] = i;
    j["inferences"] = inference_array(G.inferences);
    return dump(j);
}

std::string report_transfer(const RunConfig& cfg, const Presentation& P, int bound,
                            const TransferIdealResult& T) {
    json j = header("transfer", cfg);
    j["group"] = group_block(P.group());
    j["bound"] = bound;
    j["transfer"] = transfer_block(T);
    return dump(j);
}

}  // namespace modinv
