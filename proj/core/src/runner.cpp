#include "modinv/runner.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace modinv {

using json = nlohmann::ordered_json;

namespace {

void logline(std::ostream* log, const std::string& s) {
    if (log) (*log) << s << "\n" << std::flush;
}

}  // namespace

Presentation build_presentation(const RunConfig& cfg, const Caps& caps, std::ostream* log) {
    MatrixGroup G = build_group(cfg);
    int bound = cfg.degree_bound ? *cfg.degree_bound
                                 : default_degree_bound(cfg.n, G.order());
    logline(log, "group order " + std::to_string(G.order()) + ", degree bound " +
                     std::to_string(bound));
    FundamentalSet F = fundamental_invariants(G, bound);
    logline(log, "fundamental invariants: " + std::to_string(F.count()));
    Presentation P = presentation(F, caps);
    logline(log, "relations: " + std::to_string(P.relations.elements().size()));
    if (!hilbert_certificate(P, bound))
        throw ValidationError("Hilbert certificate failed at bound " + std::to_string(bound));
    logline(log, "certificate passed up to degree " + std::to_string(bound));
    return P;
}

GradeOutcome run_grade(const RunConfig& cfg, const Presentation& P, const Caps& caps) {
    if (cfg.ideal_elements.empty())
        throw ValidationError("grade requires at least one ideal_element");
    GradeOutcome out;
    const MatrixGroup& G = P.group();
    for (auto& text : cfg.ideal_elements) {
        Polynomial f = parse_polynomial(text, P.fset.xring, "x");
        if (!f.is_homogeneous())
            throw ValidationError("ideal element is not homogeneous: " + text);
        for (auto& g : G.generators()) {
            if (!(apply_matrix(g, f) == f))
                throw ValidationError("ideal element is not invariant: " + text);
        }
        out.ideal_x.push_back(f);
        out.ideal_y.push_back(express_in_generators(f, P));
    }
    IdealSpec a(P.sprime, out.ideal_y);
    out.grade = grade_of_ideal(a, P, caps);
    out.height = height_of_ideal(a, P, caps);
    int dimR = krull_dimension(P.relations);
    GroebnerBasis sum_check = buchberger(
        IdealSpec(P.sprime,
                  [&] {
                      std::vector<Polynomial> g = P.relations.elements();
                      g.insert(g.end(), out.ideal_y.begin(), out.ideal_y.end());
                      return g;
                  }()),
        P.sprime->order, caps);
    bool m_primary = krull_dimension(sum_check) == 0;
    out.inferences = lc_inference(out.grade, out.height, dimR, m_primary);
    return out;
}

std::string run_command(const RunConfig& cfg, Command cmd, const Caps& caps,
                        std::ostream* log) {
    switch (cmd) {
        case Command::group: {
            MatrixGroup G = build_group(cfg);
            return report_group(cfg, G);
        }
        case Command::invariants: {
            MatrixGroup G = build_group(cfg);
            int bound = cfg.degree_bound ? *cfg.degree_bound
                                         : default_degree_bound(cfg.n, G.order());
            FundamentalSet F = fundamental_invariants(G, bound);
            return report_invariants(cfg, F);
        }
        case Command::present: {
            Presentation P = build_presentation(cfg, caps, log);
            return report_present(cfg, P);
        }
        case Command::diagnose: {
            Presentation P = build_presentation(cfg, caps, log);
            DiagnosisReport D = diagnose(P, caps);
            return report_diagnose(cfg, P, D);
        }
        case Command::grade: {
            Presentation P = build_presentation(cfg, caps, log);
            GradeOutcome G = run_grade(cfg, P, caps);
            return report_grade(cfg, P, G);
        }
        case Command::transfer: {
            Presentation P = build_presentation(cfg, caps, log);
            int bound = P.fset.bound;
            TransferIdealResult T = transfer_ideal_height(P, bound, caps);
            return report_transfer(cfg, P, bound, T);
        }
        case Command::verify:
            throw ValidationError("verify runs without a config; use run_verify");
    }
    throw InternalError("unhandled command");
}

namespace {

struct EntryData {
    RunConfig config;
    std::optional<Presentation> pres;
    std::optional<DiagnosisReport> diag;
    std::string diagnose_report;
    std::optional<GradeOutcome> grade;
    std::string grade_report;
};

struct Pass {
    std::map<std::string, EntryData> entries;
    json payload;  // deterministic part, byte-compared between passes
    std::vector<CriterionResult> criteria;
};

bool herbrand_suite(std::string& detail) {
    std::mt19937 rng(987654321u);
    const std::uint32_t primes[] = {2, 3, 5};
    int checked = 0;
    for (int trial = 0; checked < 100 && trial < 10000; ++trial) {
        std::uint32_t p = primes[rng() % 3];
        PrimeField F(p);
        size_t k = 1 + rng() % 6;
        FpMatrix M(F, k, k);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) M.at(i, j) = static_cast<fp_t>(rng() % p);
        if (M.det() == 0) continue;
        // multiplicative order of the matrix
        FpMatrix id = FpMatrix::identity(F, k);
        FpMatrix pw = M;
        size_t order = 1;
        while (!(pw == id) && order < 5000) {
            pw = pw * M;
            ++order;
        }
        if (order >= 5000) continue;
        size_t declared = order * (1 + rng() % 2);  // sometimes a proper multiple
        CyclicModule C(M, declared);
        size_t h1 = cyclic_cohomology(C, 1).dimension;
        size_t h2 = cyclic_cohomology(C, 2).dimension;
        if (h1 != h2) {
            detail = "Herbrand failure: dim=" + std::to_string(k) + " p=" + std::to_string(p) +
                     " H1=" + std::to_string(h1) + " H2=" + std::to_string(h2);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " random cyclic modules, dim H^1 = dim H^2 on each";
    return checked == 100;
}

Pass run_pass(const Caps& caps, const std::optional<std::string>& only, std::ostream* log) {
    Pass pass;
    for (auto& entry : catalog()) {
        if (only && entry.name != *only) continue;
        logline(log, "[verify] computing " + entry.name);
        EntryData data;
        data.config = entry.config;
        Presentation P = build_presentation(entry.config, caps, log);
        DiagnosisReport D = diagnose(P, caps);
        data.diagnose_report = report_diagnose(entry.config, P, D);
        if (!entry.config.ideal_elements.empty()) {
            GradeOutcome G = run_grade(entry.config, P, caps);
            data.grade_report = report_grade(entry.config, P, G);
            data.grade = std::move(G);
        }
        data.diag = std::move(D);
        data.pres = std::move(P);
        pass.entries.emplace(entry.name, std::move(data));
    }

    pass.payload = json::object();
    for (auto& [name, data] : pass.entries) {
        json e;
        e["diagnose"] = json::parse(data.diagnose_report);
        if (!data.grade_report.empty()) e["grade"] = json::parse(data.grade_report);
        pass.payload[name] = e;
    }

    auto have = [&](const std::string& n) { return pass.entries.count(n) > 0; };
    auto skip = [&](int id, const std::string& name) {
        pass.criteria.push_back({id, name, true, true, "skipped (--only)"});
    };

    // 1. Bertin dimensions
    if (have("bertin")) {
        auto& d = *pass.entries.at("bertin").diag;
        int m = pass.entries.at("bertin").pres->num_generators();
        bool ok = d.dim == 4 && d.depth == 3 && d.cmdef == 1 && d.pd == m - 3;
        pass.criteria.push_back({1, "bertin dimensions (dim 4, depth 3, cmdef 1, pd m-3)", ok,
                                 false,
                                 "dim=" + std::to_string(d.dim) + " depth=" +
                                     std::to_string(d.depth) + " cmdef=" +
                                     std::to_string(d.cmdef) + " pd=" + std::to_string(d.pd) +
                                     " m=" + std::to_string(m)});
    } else {
        skip(1, "bertin dimensions");
    }

    // 2. Bertin Serre flags
    if (have("bertin")) {
        auto& d = *pass.entries.at("bertin").diag;
        bool ok = d.serre.at(2) && !d.serre.at(3);
        pass.criteria.push_back({2, "bertin Serre flags (S2 true, S3 false)", ok, false,
                                 std::string("S2=") + (d.serre.at(2) ? "true" : "false") +
                                     " S3=" + (d.serre.at(3) ? "true" : "false")});
    } else {
        skip(2, "bertin Serre flags");
    }

    // 3. Example 3.9 ideal: grade, height, inference lines
    if (have("bertin")) {
        auto& data = pass.entries.at("bertin");
        auto& g = *data.grade;
        bool grade_ok = g.grade == 2;
        bool height_ok = g.height == 3;
        bool line_a = false;
        for (auto& l : g.inferences)
            if (l.statement == "\xE2\x84\x93(H^2_\xF0\x9D\x94\x9E(R)) = \xE2\x88\x9E" &&
                l.cite == "Cor 3.8")
                line_a = true;
        bool line_m = false;
        for (auto& l : data.diag->inferences) {
            if (l.statement == "\xE2\x84\x93(H^3_\xF0\x9D\x94\xAA(R)) = \xE2\x88\x9E")
                line_m = true;  // report layer cites Example 3.9 for this instance
        }
        bool ok = grade_ok && height_ok && line_a && line_m;
        pass.criteria.push_back(
            {3, "Example 3.9 ideal (grade 2, height 3, inference lines)", ok, false,
             "grade=" + std::to_string(g.grade) + " height=" + std::to_string(g.height) +
                 (line_a ? " lineA=yes" : " lineA=no") + (line_m ? " lineM=yes" : " lineM=no") +
                 (height_ok ? ""
                            : "; computed height contradicts the claimed value 3: over F_2 the "
                              "third generator lies in the ideal of the first two (e3 = "
                              "x2*x4*e1 + (x2+x4)*q), so the stated ideal cuts out the same set "
                              "as (e1, q)")});
    } else {
        skip(3, "Example 3.9 ideal");
    }

    // 4. Bertin local cohomology table
    if (have("bertin")) {
        auto& d = *pass.entries.at("bertin").diag;
        auto& t = d.lc_table;
        bool ok = t.size() == 5 && t[0].zero && t[1].zero && t[2].zero && !t[3].zero &&
                  !t[3].finite_length && !t[4].zero;
        std::ostringstream det;
        for (size_t i = 0; i < t.size(); ++i)
            det << "H" << i << (t[i].zero ? "=0 " : (t[i].finite_length ? "!=0(fin) " : "!=0(inf) "));
        pass.criteria.push_back({4, "bertin local cohomology table", ok, false, det.str()});
    } else {
        skip(4, "bertin local cohomology table");
    }

    // 5. Kemper locus bound
    if (have("bertin")) {
        auto& d = *pass.entries.at("bertin").diag;
        int v = d.locus_dims.at(0);
        bool ok = 0 < v && v < 3;
        pass.criteria.push_back({5, "Kemper locus bound (0 < dim loc(cmdef>0) < 3)", ok, false,
                                 "dim loc(cmdef>0) = " + std::to_string(v)});
    } else {
        skip(5, "Kemper locus bound");
    }

    // 6. three-variable Cohen-Macaulay
    {
        bool any = false, ok = true;
        std::string det;
        for (const char* name : {"cyc3_f3", "s3_f2"}) {
            if (!have(name)) continue;
            any = true;
            auto& d = *pass.entries.at(name).diag;
            bool entry_ok = d.depth == 3 && d.dim == 3;
            ok = ok && entry_ok;
            det += std::string(name) + ": dim=" + std::to_string(d.dim) +
                   " depth=" + std::to_string(d.depth) + "  ";
        }
        if (any)
            pass.criteria.push_back({6, "three-variable invariant rings are CM", ok, false, det});
        else
            skip(6, "three-variable invariant rings are CM");
    }

    // 7. Feshbach transfer bound
    {
        bool any = false, ok = true;
        std::string det;
        for (auto& [name, data] : pass.entries) {
            if (!data.pres->group().is_modular()) continue;
            any = true;
            bool entry_ok = data.diag->transfer && data.diag->transfer->feshbach_strict;
            ok = ok && entry_ok;
            det += name + ": height=" +
                   (data.diag->transfer ? std::to_string(data.diag->transfer->height) : "-") +
                   " dim=" + std::to_string(data.diag->dim) + "  ";
        }
        if (any)
            pass.criteria.push_back(
                {7, "Feshbach bound: transfer ideal height < dim on modular entries", ok, false,
                 det});
        else
            skip(7, "Feshbach bound");
    }

    // 8. depth floor
    {
        bool ok = true;
        std::string det;
        for (auto& [name, data] : pass.entries) {
            bool entry_ok = data.diag->depth >= std::min(3, data.diag->dim);
            ok = ok && entry_ok;
            det += name + ": depth=" + std::to_string(data.diag->depth) + "/dim=" +
                   std::to_string(data.diag->dim) + "  ";
        }
        pass.criteria.push_back(
            {8, "depth floor: depth >= min{3, dim} on all entries", ok, false, det});
    }

    // 9. property suites
    {
        bool ok = true;
        std::string det;
        for (auto& [name, data] : pass.entries) {
            auto& c = data.diag->consistency;
            bool entry_ok = c.depth_routes_agree && c.prop32_collapse && c.chain_monotone &&
                            c.euler_identity && c.ext_window && data.pres->certified;
            if (!entry_ok) det += name + ": consistency failure  ";
            ok = ok && entry_ok;
        }
        std::string hdetail;
        bool herbrand_ok = herbrand_suite(hdetail);
        ok = ok && herbrand_ok;
        det += hdetail;
        pass.criteria.push_back(
            {9, "property suites (depth routes, certificates, collapse, chain, Herbrand)", ok,
             false, det});
    }

    return pass;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

VerifyOutcome run_verify(const Caps& caps, const std::optional<std::string>& only,
                         const std::string& golden_dir, std::ostream* log) {
    Pass pass1 = run_pass(caps, only, log);
    logline(log, "[verify] second pass (determinism check)");
    Pass pass2 = run_pass(caps, only, nullptr);

    VerifyOutcome out;
    out.criteria = pass1.criteria;

    // 10. determinism (and agreement with the recorded run, when available)
    {
        std::string b1 = pass1.payload.dump(2);
        std::string b2 = pass2.payload.dump(2);
        bool ok = b1 == b2;
        std::string det = ok ? "two runs byte-identical" : "runs differ";
        if (!golden_dir.empty() && pass1.entries.count("bertin")) {
            std::string golden = read_file(golden_dir + "/bertin_diagnose.json");
            if (golden.empty()) {
                det += "; no golden file found";
            } else if (golden == pass1.entries.at("bertin").diagnose_report) {
                det += "; matches recorded bertin report";
            } else {
                ok = false;
                det += "; bertin report differs from the recorded golden file";
            }
        }
        out.criteria.push_back({10, "determinism: byte-identical verify reports", ok, false, det});
    }

    // golden height comparison folds into criterion 7's detail
    if (!golden_dir.empty() && pass1.entries.count("bertin")) {
        std::string golden = read_file(golden_dir + "/bertin_diagnose.json");
        if (!golden.empty()) {
            auto j = json::parse(golden, nullptr, false);
            if (!j.is_discarded() && j.contains("transfer") && j["transfer"].contains("height")) {
                int recorded = j["transfer"]["height"];
                auto& diag = pass1.entries.at("bertin").diag;
                bool match = diag->transfer && diag->transfer->height == recorded;
                for (auto& c : out.criteria) {
                    if (c.id == 7 && !c.skipped) {
                        c.detail += "recorded bertin height=" + std::to_string(recorded) +
                                    (match ? " (match)" : " (MISMATCH)");
                        if (!match) c.passed = false;
                    }
                }
            }
        }
    }

    json report;
    report["schema_version"] = "1";
    report["command"] = "verify";
    json criteria = json::array();
    bool all = true;
    for (auto& c : out.criteria) {
        json e;
        e["id"] = c.id;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["skipped"] = c.skipped;
        e["detail"] = c.detail;
        criteria.push_back(e);
        if (!c.skipped) all = all && c.passed;
    }
    report["criteria"] = criteria;
    report["entries"] = pass1.payload;
    out.report_json = report.dump(2) + "\n";
    out.all_passed = all;
    return out;
}

}  // namespace modinv
