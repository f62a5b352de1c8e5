#include "multizero/report.hpp"

#include <sstream>

#include "multizero/signs.hpp"

namespace multizero {

namespace {

Json rat_vector(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

Json float_vector(const std::vector<BigFloat>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(x.to_string());
    }
    return out;
}

Json rat_matrix(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_string(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json sign_matrix(const SignMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(int(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json signs(const std::vector<Sign>& v) {
    Json out = Json::array();
    for (auto x : v) {
        out.push_back(int(x));
    }
    return out;
}

/// 1-based index list.
Json one_based(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (auto x : v) {
        out.push_back(x + 1);
    }
    return out;
}

std::vector<Rat> rats_from(const Json& j) {
    std::vector<Rat> out;
    for (const auto& x : j) {
        out.push_back(parse_rat(x.get<std::string>()));
    }
    return out;
}

std::vector<BigFloat> floats_from(const Json& j, long precision) {
    std::vector<BigFloat> out;
    for (const auto& x : j) {
        out.push_back(BigFloat::parse(x.get<std::string>(), precision));
    }
    return out;
}

Json lambda_json(const RowLambda& row) {
    Json out = Json::object();
    const std::pair<const char*, const std::vector<std::size_t>*> sets[] = {
        {"++", &row.plus_plus},  {"+-", &row.plus_minus},   {"0+", &row.zero_plus}, {"0-", &row.zero_minus},
        {"-+", &row.minus_plus}, {"--", &row.minus_minus}, {"+0", &row.plus_zero}};
    for (const auto& [name, set] : sets) {
        if (!set->empty()) {
            out[name] = one_based(*set);
        }
    }
    return out;
}

}  // namespace

Json witness_to_json(const Witness& w) {
    return Json{{"precision", w.precision},           {"kappa", float_vector(w.kappa)},
                {"b", float_vector(w.b)},             {"x", float_vector(w.x)},
                {"y", float_vector(w.y)},             {"delta", rat_vector(w.delta)},
                {"kernel_witness", rat_vector(w.kernel_witness)}};
}

Witness witness_from_json(const Json& j) {
    const Json& src = j.contains("witness") ? j.at("witness") : j;
    if (!src.is_object()) {
        throw Error("no witness object in JSON");
    }
    try {
        Witness w;
        w.precision = src.value("precision", default_precision);
        w.kappa = floats_from(src.at("kappa"), w.precision);
        w.b = floats_from(src.at("b"), w.precision);
        w.x = floats_from(src.at("x"), w.precision);
        w.y = floats_from(src.at("y"), w.precision);
        if (src.contains("delta")) {
            w.delta = rats_from(src.at("delta"));
        }
        if (src.contains("kernel_witness")) {
            w.kernel_witness = rats_from(src.at("kernel_witness"));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed witness: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(std::string("malformed witness number: ") + e.what());
    }
}

Json verification_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"value", c.value.to_string()}, {"bound", c.bound.to_string()},
                          {"passed", c.passed}});
    }
    return Json{{"precision", report.precision},
                {"tolerance", report.tolerance.to_string()},
                {"passed", report.passed},
                {"max_residual", report.max_residual().to_string()},
                {"checks", checks}};
}

Json certificate_to_json(const Certificate& cert, const Reduction& red, std::size_t species) {
    const VariableLayout layout(red, species);
    const auto lambda = lambda_sets(red.P, cert.sigma, cert.S);
    Json lambda_rows = Json::array();
    for (const auto& row : lambda.rows) {
        lambda_rows.push_back(lambda_json(row));
    }
    Json conditions = Json::array();
    if (const auto sys = encode_sign_conditions(red.P, cert.sigma, cert.S, layout)) {
        for (const auto& c : sys->constraints()) {
            conditions.push_back(sys->describe(c));
        }
    }
    const auto not_d = encode_not_D(red.P, cert.sigma, cert.S, lambda, layout);
    Json not_d_cases = Json::array();
    for (const auto& c : not_d.cases) {
        std::string text = c.provenance;
        for (const auto& factor : c.constraints.factors) {
            std::string alts;
            for (const auto& b : factor) {
                alts += (alts.empty() ? "" : " or ") + b.provenance;
            }
            text += "; " + alts;
        }
        for (const auto& con : c.constraints.fixed.constraints()) {
            text += "; " + con.label;
        }
        not_d_cases.push_back(text);
    }
    return Json{{"orientation_index", cert.orientation_index + 1},
                {"sigma", {{"first", signs(cert.sigma.first)}, {"second", signs(cert.sigma.second)}}},
                {"S", sign_matrix(cert.S)},
                {"lambda", lambda_rows},
                {"D", describe_D(red.P, cert.sigma, lambda, layout)},
                {"not_D", not_d_cases},
                {"sign_conditions", conditions},
                {"rho", rat_vector(cert.rho)},
                {"delta", rat_vector(cert.delta)},
                {"delta_sign", signs(cert.delta_sign)},
                {"alpha_plus", rat_vector(cert.alpha_plus)},
                {"alpha_minus", rat_vector(cert.alpha_minus)},
                {"kernel_witness", rat_vector(cert.kernel_witness)},
                {"I_plus", one_based(cert.i_plus)},
                {"I_minus", one_based(cert.i_minus)},
                {"base_mu", rat_vector(cert.base_mu)},
                {"trace", cert.branch_trace}};
}

Json verdict_to_json(const Verdict& verdict, const AugmentedVerticalSystem& sys, const RunInfo& info) {
    const Reduction& red = verdict.reduction;
    Json tau = Json::array();
    for (const auto& block : red.tau) {
        tau.push_back(one_based(block));
    }
    Json alpha = Json::array();
    for (const auto& block : red.alpha) {
        alpha.push_back(one_based(block));
    }
    Json certs = Json::array();
    for (const auto& cert : verdict.certificates) {
        certs.push_back(certificate_to_json(cert, red, sys.species_count()));
    }
    Json input{{"path", info.input_path},
               {"format", info.format},
               {"n", sys.species_count()},
               {"m_bar", sys.monomial_count()},
               {"s_bar", sys.equation_count()},
               {"l_bar", sys.kernel_dimension()},
               {"s", red.s()},
               {"l", red.l()},
               {"partition_mode", to_string(red.mode)},
               {"pbar_forest", verdict.pbar_forest},
               {"p_forest", verdict.p_forest},
               {"column_permutation", one_based(sys.column_permutation)}};
    if (verdict.pbar_forest != verdict.p_forest) {
        input["hint"] = "forest status differs between Pbar and P";
    } else if (!verdict.p_forest) {
        input["hint"] = "P does not induce a forest; another principal column ordering of C may give a different Pbar";
    }
    const auto& st = verdict.stats;
    Json out{{"input", input},
             {"verdict", to_string(verdict.kind)},
             {"reason", verdict.reason},
             {"exit_code", exit_code(verdict.kind)},
             {"reduction",
              {{"Pbar", rat_matrix(red.Pbar)},
               {"tau", tau},
               {"alpha", alpha},
               {"gamma", rat_vector(red.gamma)},
               {"gamma_prime", rat_vector(red.gamma_prime)},
               {"U1", one_based(red.U1())},
               {"U2", one_based(red.U2())},
               {"P", rat_matrix(red.P)}}},
             {"certificates", certs},
             {"witness", verdict.witness ? witness_to_json(*verdict.witness) : Json(nullptr)},
             {"verification", verdict.verification ? verification_to_json(*verdict.verification) : Json(nullptr)},
             {"stats",
              {{"orientations", st.orientations},
               {"orientations_skipped", st.orientations_skipped},
               {"sign_matrices", st.sign_matrices},
               {"sign_condition_dead", st.sign_condition_dead},
               {"branches", st.branches},
               {"lp_calls", st.lp_calls},
               {"gamma_pruned", st.gamma_pruned}}},
             {"options",
              {{"precision", info.precision},
               {"threads", info.threads},
               {"seed", info.seed ? Json(*info.seed) : Json(nullptr)},
               {"witness", info.witness_requested}}},
             {"wall_seconds", info.wall_seconds}};
    return out;
}

namespace {

std::string join(const Json& arr, const std::string& sep = " ") {
    std::string out;
    for (const auto& x : arr) {
        out += (out.empty() ? "" : sep) + (x.is_string() ? x.get<std::string>() : x.dump());
    }
    return out;
}

void print_matrix(std::ostream& os, const std::string& name, const Json& m) {
    os << name << ":\n";
    if (m.empty()) {
        os << "  (empty)\n";
    }
    for (const auto& row : m) {
        os << "  [" << join(row) << "]\n";
    }
}

std::string blocks(const Json& b) {
    std::string out;
    for (const auto& block : b) {
        out += "{" + join(block, ",") + "}";
    }
    return out;
}

}  // namespace

std::string verdict_to_text(const Verdict& verdict, const AugmentedVerticalSystem& sys, const RunInfo& info) {
    const Json j = verdict_to_json(verdict, sys, info);
    std::ostringstream os;
    const Json& in = j["input"];
    os << "input: " << in["path"].get<std::string>() << " (" << in["format"].get<std::string>() << ")\n";
    os << "n = " << in["n"] << ", m_bar = " << in["m_bar"] << ", s_bar = " << in["s_bar"] << ", l_bar = " << in["l_bar"]
       << ", s = " << in["s"] << ", l = " << in["l"] << '\n';
    os << "partitions: " << in["partition_mode"].get<std::string>() << '\n';
    os << "column order of C: " << join(in["column_permutation"]) << '\n';
    os << "Pbar induces a forest: " << (in["pbar_forest"].get<bool>() ? "yes" : "no")
       << ", P induces a forest: " << (in["p_forest"].get<bool>() ? "yes" : "no") << '\n';
    if (in.contains("hint")) {
        os << "hint: " << in["hint"].get<std::string>() << '\n';
    }
    os << '\n';
    const Json& red = j["reduction"];
    print_matrix(os, "Pbar", red["Pbar"]);
    os << "row blocks tau: " << blocks(red["tau"]) << "  gamma': " << join(red["gamma_prime"]) << '\n';
    os << "column blocks alpha: " << blocks(red["alpha"]) << "  gamma: " << join(red["gamma"]) << '\n';
    os << "U1: {" << join(red["U1"], ",") << "}  U2: {" << join(red["U2"], ",") << "}\n";
    print_matrix(os, "P", red["P"]);
    os << '\n';
    os << "verdict: " << j["verdict"].get<std::string>() << " (exit " << j["exit_code"] << ")\n";
    os << "reason: " << j["reason"].get<std::string>() << '\n';

    std::size_t number = 0;
    for (const auto& c : j["certificates"]) {
        os << "\ncertificate " << ++number << " (orientation " << c["orientation_index"] << ")\n";
        os << "  sigma: (" << join(c["sigma"]["first"]) << "; " << join(c["sigma"]["second"]) << ")\n";
        os << "  S:";
        for (const auto& row : c["S"]) {
            os << " [" << join(row) << "]";
        }
        os << '\n';
        std::size_t r = 0;
        for (const auto& row : c["lambda"]) {
            ++r;
            for (const auto& [name, set] : row.items()) {
                os << "  Lambda_" << r << "^{" << name << "} = {" << join(set, ",") << "}\n";
            }
        }
        os << "  sign conditions C:\n";
        for (const auto& cond : c["sign_conditions"]) {
            os << "    " << cond.get<std::string>() << '\n';
        }
        os << "  D:\n";
        std::istringstream d(c["D"].get<std::string>());
        for (std::string line; std::getline(d, line);) {
            os << "    " << line << '\n';
        }
        os << "  not D, by case:\n";
        for (const auto& nd : c["not_D"]) {
            os << "    " << nd.get<std::string>() << '\n';
        }
        os << "  rho: (" << join(c["rho"], ", ") << ")\n";
        os << "  delta: (" << join(c["delta"], ", ") << ")\n";
        os << "  delta sign: (" << join(c["delta_sign"], ",") << ")\n";
        os << "  alpha+: (" << join(c["alpha_plus"], ", ") << ")  alpha-: (" << join(c["alpha_minus"], ", ") << ")\n";
        os << "  kernel point z: (" << join(c["kernel_witness"], ", ") << ")\n";
        os << "  I+: {" << join(c["I_plus"], ",") << "}  I-: {" << join(c["I_minus"], ",") << "}\n";
        os << "  base mu: (" << join(c["base_mu"], ", ") << ")\n";
        os << "  trace:\n";
        for (const auto& t : c["trace"]) {
            os << "    " << t.get<std::string>() << '\n';
        }
    }

    if (!j["witness"].is_null()) {
        const Json& w = j["witness"];
        os << "\nwitness (precision " << w["precision"] << " bits)\n";
        for (const char* key : {"kappa", "b", "x", "y"}) {
            os << "  " << key << ":\n";
            for (const auto& v : w[key]) {
                os << "    " << v.get<std::string>() << '\n';
            }
        }
    }
    if (!j["verification"].is_null()) {
        const Json& v = j["verification"];
        os << "\nverification at " << v["precision"] << " bits, tolerance " << v["tolerance"].get<std::string>()
           << ": " << (v["passed"].get<bool>() ? "passed" : "FAILED") << '\n';
        for (const auto& c : v["checks"]) {
            os << "  " << (c["passed"].get<bool>() ? "ok   " : "FAIL ") << c["name"].get<std::string>() << " = "
               << c["value"].get<std::string>() << " (bound " << c["bound"].get<std::string>() << ")\n";
        }
    }

    const Json& st = j["stats"];
    os << "\nstats:";
    for (const auto& [key, value] : st.items()) {
        os << ' ' << key << '=' << value;
    }
    os << '\n';
    const Json& opt = j["options"];
    os << "precision " << opt["precision"] << ", threads " << opt["threads"] << ", seed "
       << (opt["seed"].is_null() ? std::string("none") : opt["seed"].dump()) << ", witness "
       << (opt["witness"].get<bool>() ? "on" : "off") << '\n';
    os << "wall time: " << j["wall_seconds"].get<double>() << " s\n";
    return os.str();
}

}  // namespace multizero
