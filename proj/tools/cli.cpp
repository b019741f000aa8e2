#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rebit/invariants.hpp"
#include "rebit/mixedorbits.hpp"
#include "rebit/selftest.hpp"

namespace rebit::cli {

std::string cyc_text(const CycNum& x) { return x.is_rational() ? x[0].get_str() : x.str(); }

CycNum cyc_parse(const std::string& s) {
    if (s.find(',') == std::string::npos) return CycNum(parse_rational(s));
    return CycNum::parse(s);
}

namespace {

std::string as_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Json lambda_json(const std::vector<CycNum>& lam) {
    Json a = Json::array();
    for (const auto& x : lam) a.push_back(cyc_text(x));
    return a;
}

std::vector<CycNum> parse_lambda_list(const std::string& s) {
    std::vector<CycNum> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(cyc_parse(item));
    return out;
}

std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) throw ParseError("bad integer '" + item + "' in '" + s + "'");
        out.push_back(v);
    }
    return out;
}

Tensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return tensor_from_json(j);
}

Json report_json(int rows, const std::vector<std::string>& failures, const std::vector<std::string>& notes) {
    Json j;
    j["rows"] = rows;
    j["ok"] = failures.empty();
    j["failures"] = failures;
    j["notes"] = notes;
    return j;
}

void print_md_report(std::ostream& out, const std::string& title, const Json& r) {
    out << "## " << title << "\n\n";
    out << "rows: " << r["rows"].get<int>() << ", failures: " << r["failures"].size() << "\n";
    if (!r["failures"].empty()) {
        out << "\n### Failures\n\n";
        for (const auto& f : r["failures"]) out << "- " << f.get<std::string>() << "\n";
    }
    if (!r["notes"].empty()) {
        out << "\n### Notes\n\n";
        for (const auto& f : r["notes"]) out << "- " << f.get<std::string>() << "\n";
    }
    out << "\n";
}

Json weyl_json() {
    Json a = Json::array();
    for (const auto& w : CartanData::get().weyl) a.push_back(matrix_json(w));
    return a;
}

Json roots_json() {
    Json a = Json::array();
    for (const auto& r : CartanData::get().roots) {
        Json x;
        x["values"] = lambda_json({r.values.begin(), r.values.end()});
        x["coroot"] = lambda_json({r.coroot.begin(), r.coroot.end()});
        a.push_back(x);
    }
    return a;
}

Json subsystems_json() {
    Json a = Json::array();
    for (const auto& s : CartanData::get().subsystems) {
        Json x;
        x["i"] = s.i;
        x["type"] = s.type;
        x["roots"] = s.roots;
        x["family"] = matrix_json(s.family);
        Json g = Json::array();
        for (const auto& m : s.gamma_gens) g.push_back(matrix_json(m));
        x["gamma_generators"] = g;
        x["gamma_order"] = s.gamma.size();
        x["centralizer"] = s.centralizer_type;
        a.push_back(x);
    }
    return a;
}

Json cartans_json() {
    Json a = Json::array();
    for (const auto& c : cartan_spaces()) {
        Json x;
        x["m"] = c.m;
        x["name"] = std::string(1, c.name);
        x["witness"] = gelt_json(c.witness);
        x["cocycle"] = gelt_json(cartan_cocycle(c.m));
        Json b = Json::array();
        for (const auto& t : c.basis) b.push_back(tensor_json(t));
        x["basis"] = b;
        a.push_back(x);
    }
    return a;
}

// "i:j" (semisimple block) or "mixed:i:j:r".
Json rows_json(const std::string& spec, const std::string& lambda_text) {
    bool mixed = spec.rfind("mixed:", 0) == 0;
    auto v = parse_ints(mixed ? spec.substr(6) : spec, ':');
    if (v.size() != (mixed ? 3u : 2u)) throw ParseError("--case expects i:j or mixed:i:j:r for rows");
    int i = v[0], j = v[1];
    std::vector<CycNum> lam = lambda_text.empty() ? (mixed ? mixed_sample(i, j) : sample_parameters(i, j)[0])
                                                  : parse_lambda_list(lambda_text);
    if (!admissible(i, j, lam)) throw MathError("parameters are not admissible for block (" + spec + ")");
    Json out;
    out["case"] = spec;
    out["lambda"] = lambda_json(lam);
    Json rows = Json::array();
    if (!mixed) {
        const auto& b = ss_block(i, j);
        for (int k = 1; k <= b.row_count(); ++k) {
            Json r;
            r["k"] = k;
            r["state"] = tensor_json(table_row(i, j, k, lam));
            rows.push_back(r);
        }
    } else {
        for (const auto& m : quadruple_reps(i, j, v[2], lam)) {
            Json r;
            r["k"] = m.k;
            r["semisimple"] = tensor_json(m.s);
            r["nilpotent"] = tensor_json(m.n);
            rows.push_back(r);
        }
    }
    out["rows"] = rows;
    return out;
}

Json criterion_json(const CriterionResult& r) {
    Json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["seconds"] = std::round(r.seconds * 100) / 100;
    j["detail"] = r.detail;
    return j;
}

}  // namespace

Json tensor_json(const Tensor& t) {
    Json c = Json::object();
    for (int k = 0; k < 16; ++k)
        if (!t.t[k].is_zero()) c[Tensor::bits(k)] = cyc_text(t.t[k]);
    Json j;
    j["coeffs"] = c;
    return j;
}

Tensor tensor_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
        throw ParseError("TensorState: expected {\"coeffs\": {...}}");
    Tensor t;
    for (const auto& [key, val] : j["coeffs"].items()) {
        bool ok = key.size() == 4 && key.find_first_not_of("01") == std::string::npos;
        if (!ok) throw ParseError("TensorState: bad index '" + key + "'");
        t.t[Tensor::index(key)] = cyc_parse(as_string(val, "coeffs." + key));
    }
    return t;
}

Json gelt_json(const GElt& g) {
    Json f = Json::array();
    for (const auto& m : g.f)
        f.push_back(Json::array({Json::array({cyc_text(m.a), cyc_text(m.b)}), Json::array({cyc_text(m.c), cyc_text(m.d)})}));
    Json j;
    j["factors"] = f;
    return j;
}

GElt gelt_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array() || j["factors"].size() != 4)
        throw ParseError("GElt: expected {\"factors\": [4 matrices]}");
    GElt g;
    for (int s = 0; s < 4; ++s) {
        const Json& m = j["factors"][s];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
            m[1].size() != 2)
            throw ParseError("GElt: factor " + std::to_string(s + 1) + " is not 2x2");
        g.f[s] = {cyc_parse(as_string(m[0][0], "a")), cyc_parse(as_string(m[0][1], "b")),
                  cyc_parse(as_string(m[1][0], "c")), cyc_parse(as_string(m[1][1], "d"))};
    }
    if (!g.in_sl2()) throw MathError("GElt: factor is not unimodular");
    return g;
}

Json matrix_json(const Matrix& m) {
    Json a = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(cyc_text(m(r, c)));
        a.push_back(row);
    }
    return a;
}

Json classify_json(const Tensor& t) {
    if (!t.is_real()) throw MathError("not a real state");
    Json j;
    auto parts = jordan_decompose(from_tensor(t));
    bool has_n = !lie_is_zero(parts.n);
    try {
        if (!has_n) {
            auto l = classify_semisimple(t);
            j["type"] = "semisimple";
            j["i"] = l.i;
            j["j"] = l.j;
            j["k"] = l.k;
            j["cartan"] = std::string(1, cartan_spaces()[l.m - 1].name);
            j["lambda"] = lambda_json(l.lambda);
            j["same_orbit"] = l.same_orbit;
        } else {
            auto l = classify_mixed(t);
            j["type"] = "mixed";
            j["i"] = l.i;
            j["j"] = l.j;
            j["r"] = l.r;
            j["k"] = l.k;
            j["lambda"] = lambda_json(l.lambda);
            Json same = Json::array();
            for (auto rk : l.same_orbit) same.push_back(Json::array({rk[0], rk[1]}));
            j["same_orbit"] = same;
        }
    } catch (const ClassifyError& e) {
        if (e.kind != "general-position") throw;
        j = Json();
        j["type"] = "family";
        j["families"] = e.families;
        j["message"] = e.what();
    }
    return j;
}

Json decompose_json(const Tensor& t) {
    auto parts = jordan_decompose(from_tensor(t));
    Json j;
    j["semisimple"] = tensor_json(to_graded(parts.s).x1);
    j["nilpotent"] = tensor_json(to_graded(parts.n).x1);
    return j;
}

Json invariants_json(const Tensor& t) {
    auto iv = invariants_of(t);
    Json j;
    j["H"] = cyc_text(iv.H);
    j["L12"] = cyc_text(iv.L12);
    j["L13"] = cyc_text(iv.L13);
    j["L14"] = cyc_text(iv.L14);
    return j;
}

Json h1_json(const std::string& group) {
    Json j;
    j["group"] = group;
    if (group == "normalizer") {
        auto g = normalizer_group();
        auto h = g.h1();
        j["order"] = g.size();
        j["cocycles"] = h.cocycles;
        j["classes"] = h.reps.size();
        Json reps = Json::array();
        for (std::size_t k = 0; k < h.reps.size(); ++k) {
            Json r;
            r["element"] = gelt_json(g.elements()[h.reps[k]]);
            r["class_size"] = h.sizes[k];
            reps.push_back(r);
        }
        j["representatives"] = reps;
        return j;
    }
    auto colon = group.find(':');
    if (colon == std::string::npos) throw ParseError("unknown group '" + group + "'");
    std::string kind = group.substr(0, colon);
    auto idx = parse_ints(group.substr(colon + 1), ',');
    if (idx.size() != 1) throw ParseError("expected one index in '" + group + "'");
    int i = idx[0];
    if (kind == "gamma") {
        if (i < 1 || i > 11) throw MathError("gamma index must be in 1..11");
        auto g = gamma_group(i);
        auto h = g.h1();
        j["order"] = g.size();
        j["cocycles"] = h.cocycles;
        j["classes"] = h.reps.size();
        Json reps = Json::array();
        for (std::size_t k = 0; k < h.reps.size(); ++k) {
            Json r;
            r["element"] = matrix_json(g.elements()[h.reps[k]]);
            r["class_size"] = h.sizes[k];
            reps.push_back(r);
        }
        j["representatives"] = reps;
    } else if (kind == "centralizer") {
        if (i < 1 || i > 10) throw MathError("centralizer index must be in 1..10");
        const auto& sc = ss_case(i);
        const auto& b = ss_block(i, 1);
        auto spec = semisimple_centralizer(i);
        auto zs = block_z(sc, b);
        auto rep = verify_class_list(spec.framed(block_g(sc, b)), zs, static_cast<int>(zs.size()));
        static const char* kinds[] = {"finite", "torus", "sl2"};
        j["kind"] = kinds[static_cast<int>(spec.kind)];
        j["dim"] = spec.dim;
        j["finite_part_order"] = spec.finite_part().size();
        j["classes"] = zs.size();
        Json reps = Json::array();
        for (const auto& z : zs) reps.push_back(gelt_json(z));
        j["representatives"] = reps;
        j["verified"] = rep.ok;
        j["failures"] = rep.failures;
    } else {
        throw ParseError("unknown group '" + group + "'");
    }
    return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact orbit classification for real 2x2x2x2 tensors", "rebit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));

    auto* build = app.add_subcommand("build-check", "Structure checks of D4 and the restricted root data");

    std::string group;
    auto* h1 = app.add_subcommand("h1", "First cohomology class representatives");
    h1->add_option("--group", group, "normalizer | gamma:<i> | centralizer:<i>")->required();

    auto* tables = app.add_subcommand("tables", "Verify or emit the tabulated data");
    tables->require_subcommand(1);
    tables->fallthrough();
    std::string case_spec, what, lambda_text;
    auto* verify = tables->add_subcommand("verify", "Verify representative rows");
    verify->add_option("--case", case_spec, "i | mixed:i | nilpotent (default: all)");
    auto* emit = tables->add_subcommand("emit", "Emit Weyl, subsystem, Cartan or row data as JSON");
    emit->add_option("--what", what, "weyl | roots | subsystems | cartans | rows")
        ->required()
        ->check(CLI::IsMember({"weyl", "roots", "subsystems", "cartans", "rows"}));
    emit->add_option("--case", case_spec, "i:j or mixed:i:j:r (rows only)");
    emit->add_option("--sample-lambda", lambda_text, "Parameters separated by ';' (rows only)");

    std::string file;
    auto* classify = app.add_subcommand("classify", "Classify a real tensor");
    classify->add_option("file", file, "TensorState JSON")->required();
    auto* decompose = app.add_subcommand("decompose", "Jordan decomposition of a tensor");
    decompose->add_option("file", file, "TensorState JSON")->required();
    auto* invariants = app.add_subcommand("invariants", "Polynomial invariants of a tensor");
    invariants->add_option("file", file, "TensorState JSON")->required();

    std::uint64_t seed = SelftestOptions{}.seed;
    std::string only;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
    selftest->add_option("--seed", seed, "Seed of the randomized suites");
    selftest->add_option("--only", only, "Comma-separated criterion ids");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    auto emit_json = [&](const Json& j) { out << j.dump(2) << "\n"; };
    try {
        if (*build) {
            auto r1 = criterion_structure();
            auto r2 = criterion_restricted();
            const auto& cd = CartanData::get();
            Json j;
            j["dim"] = kDim;
            j["structure"] = criterion_json(r1);
            j["roots"] = cd.roots.size();
            j["weyl"] = cd.weyl.size();
            j["center"] = cd.center.size();
            j["normalizer"] = cd.normalizer.size();
            j["ok"] = r1.pass && r2.pass;
            emit_json(j);
            return r1.pass && r2.pass ? kOk : kCheckFailed;
        }
        if (*h1) {
            Json j = h1_json(group);
            emit_json(j);
            return j.value("verified", true) ? kOk : kCheckFailed;
        }
        if (*verify) {
            std::vector<std::pair<std::string, Json>> reports;
            if (case_spec.empty() || (case_spec.rfind("mixed", 0) != 0 && case_spec != "nilpotent")) {
                int i = case_spec.empty() ? 0 : parse_ints(case_spec, ',').at(0);
                if (i < 0 || i > 10) throw MathError("case must be in 1..10");
                auto r = verify_ss_tables(i, 1);
                reports.emplace_back("semisimple", report_json(r.rows, r.failures, r.notes));
            }
            if (case_spec.empty() || case_spec.rfind("mixed:", 0) == 0) {
                int i = case_spec.empty() ? 0 : parse_ints(case_spec.substr(6), ',').at(0);
                if (i != 0 && (i < 2 || i > 10)) throw MathError("mixed case must be in 2..10");
                auto r = verify_mixed_tables(i);
                reports.emplace_back("mixed", report_json(r.rows, r.failures, r.notes));
            }
            if (case_spec.empty() || case_spec == "nilpotent") {
                auto r = verify_nilpotent_elements();
                reports.emplace_back("nilpotent", report_json(r.rows, r.failures, r.notes));
            }
            if (reports.empty()) throw ParseError("bad --case '" + case_spec + "'");
            bool ok = true;
            Json j;
            for (const auto& [name, r] : reports) {
                ok = ok && r["ok"].get<bool>();
                j[name] = r;
            }
            if (format == "md")
                for (const auto& [name, r] : reports) print_md_report(out, name, r);
            else
                emit_json(j);
            return ok ? kOk : kCheckFailed;
        }
        if (*emit) {
            if (what == "weyl") emit_json(weyl_json());
            if (what == "roots") emit_json(roots_json());
            if (what == "subsystems") emit_json(subsystems_json());
            if (what == "cartans") emit_json(cartans_json());
            if (what == "rows") {
                if (case_spec.empty()) throw ParseError("--what rows needs --case");
                emit_json(rows_json(case_spec, lambda_text));
            }
            return kOk;
        }
        if (*classify) {
            emit_json(classify_json(read_tensor_file(file)));
            return kOk;
        }
        if (*decompose) {
            emit_json(decompose_json(read_tensor_file(file)));
            return kOk;
        }
        if (*invariants) {
            emit_json(invariants_json(read_tensor_file(file)));
            return kOk;
        }
        if (*selftest) {
            SelftestOptions opt;
            opt.seed = seed;
            if (!only.empty()) opt.only = parse_ints(only, ',');
            if (format == "md") {
                out << "| # | criterion | result | seconds | detail |\n|---|---|---|---|---|\n";
                opt.on_result = [&](const CriterionResult& r) {
                    out << "| " << r.id << " | " << r.name << " | " << (r.pass ? "PASS" : "FAIL") << " | "
                        << std::fixed << std::setprecision(2) << r.seconds << " | " << r.detail << " |" << std::endl;
                };
            }
            auto results = run_selftest(opt);
            bool ok = true;
            Json a = Json::array();
            for (const auto& r : results) {
                ok = ok && r.pass;
                a.push_back(criterion_json(r));
            }
            if (format == "json") {
                Json j;
                j["criteria"] = a;
                j["ok"] = ok;
                emit_json(j);
            }
            return ok ? kOk : kCheckFailed;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kMalformed;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kMalformed;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}

}  // namespace rebit::cli
