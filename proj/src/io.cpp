#include "revnf/io.hpp"

#include <fstream>
#include <sstream>

namespace revnf {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational parse_coeff(const Json& j, const std::string& where) {
    if (!j.is_string()) throw SpecError("coefficient", where, "coefficients must be \"p/q\" strings");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SpecError("coefficient", where, e.what());
    }
}

RatMat parse_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SpecError("shape", where, "matrix must be a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    if (!j[0].is_array()) throw SpecError("shape", where, "matrix rows must be arrays");
    int cols = static_cast<int>(j[0].size());
    RatMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw SpecError("shape", where + "/" + std::to_string(i), "ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = parse_coeff(j[i][c], where + "/" + std::to_string(i) + "/" + std::to_string(c));
    }
    return m;
}

Monomial parse_exponents(const Json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw SpecError("shape", where, "exponents must be an array of length " + std::to_string(n));
    std::vector<int> exps(n);
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_number_integer() || j[i].get<int>() < 0)
            throw SpecError("shape", where + "/" + std::to_string(i), "exponents must be non-negative integers");
        exps[i] = j[i].get<int>();
    }
    return Monomial(std::move(exps));
}

}  // namespace

Json terms_json(const ScalarPoly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exponents"] = m.exponents();
        t["coefficient"] = rat_to_string(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json terms_json(const VecPoly& p) {
    Json arr = Json::array();
    for (int i = 0; i < p.vars(); ++i)
        for (const auto& [m, c] : p.comp(i).terms()) {
            Json t;
            t["component"] = i + 1;
            t["exponents"] = m.exponents();
            t["coefficient"] = rat_to_string(c);
            arr.push_back(std::move(t));
        }
    return arr;
}

ScalarPoly scalar_from_terms(const Json& terms, int n) {
    if (!terms.is_array()) throw SpecError("shape", "/", "term list must be an array");
    ScalarPoly p(n);
    int i = 0;
    for (const auto& t : terms) {
        std::string where = "/" + std::to_string(i++);
        if (t.contains("component")) throw SpecError("shape", where, "scalar term must not carry a component");
        p.add_term(parse_exponents(t.at("exponents"), n, where + "/exponents"),
                   parse_coeff(t.at("coefficient"), where + "/coefficient"));
    }
    return p;
}

VecPoly vec_from_terms(const Json& terms, int n) {
    if (!terms.is_array()) throw SpecError("shape", "/", "term list must be an array");
    VecPoly p(n);
    int i = 0;
    for (const auto& t : terms) {
        std::string where = "/" + std::to_string(i++);
        if (!t.contains("component") || !t.at("component").is_number_integer())
            throw SpecError("shape", where, "vector term needs an integer 1-based component");
        int comp = t.at("component").get<int>();
        if (comp < 1 || comp > n) throw SpecError("shape", where + "/component", "component out of range");
        p.comp(comp - 1).add_term(parse_exponents(t.at("exponents"), n, where + "/exponents"),
                                  parse_coeff(t.at("coefficient"), where + "/coefficient"));
    }
    return p;
}

Json subspace_json(const GradedSubspace& s) {
    Json j;
    j["kind"] = s.kind == SpaceKind::scalar ? "scalar" : "vector";
    j["n"] = s.n;
    j["k"] = s.k;
    j["dim"] = s.dim();
    Json basis = Json::array();
    if (s.kind == SpaceKind::scalar)
        for (const auto& p : scalar_basis_polys(s)) basis.push_back(terms_json(p));
    else
        for (const auto& p : vector_basis_polys(s)) basis.push_back(terms_json(p));
    j["basis"] = std::move(basis);
    return j;
}

Json linear_part_json(const LinearPart& L) {
    Json j;
    Json rows = Json::array();
    for (int i = 0; i < L.matrix.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < L.matrix.cols(); ++c) row.push_back(rat_to_string(L.matrix.at(i, c)));
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    if (L.resonant) {
        Json r;
        r["n1"] = L.resonant->n1;
        r["n2"] = L.resonant->n2;
        r["mode"] = L.resonant->mode == ResonanceMode::resonant ? "resonant" : "nonresonant-surrogate";
        if (L.resonant->mode == ResonanceMode::nonresonant_surrogate) {
            r["surrogate_prime"] = L.resonant->surrogate_prime;
            r["valid_to_degree"] = L.resonant->valid_to_degree;
        }
        j["resonant"] = std::move(r);
    }
    return j;
}

Json group_json(const FiniteSignedGroup& G) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : G.generators()) {
        Json e;
        Json rows = Json::array();
        for (int i = 0; i < g.matrix.rows(); ++i) {
            Json row = Json::array();
            for (int c = 0; c < g.matrix.cols(); ++c) row.push_back(rat_to_string(g.matrix.at(i, c)));
            rows.push_back(std::move(row));
        }
        e["matrix"] = std::move(rows);
        e["sigma"] = g.sign;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    j["order"] = G.order();
    return j;
}

Json problem_spec_json(const ProblemSpec& spec, const SpecOptions& options) {
    Json j;
    j["schema_version"] = 1;
    j["dimension"] = spec.n;
    Json lp = linear_part_json(spec.L);
    j["linear_part"] = std::move(lp);
    if (spec.group.order() > 1 || spec.group.has_reversing()) {
        Json g;
        g["generators"] = group_json(spec.group)["generators"];
        j["group"] = std::move(g);
    }
    j["degree_max"] = spec.kmax;
    if (spec.field) j["vector_field"] = terms_json(*spec.field);
    Json opt;
    opt["output"] = options.output;
    if (options.hilbert_dmax >= 0) opt["hilbert_dmax"] = options.hilbert_dmax;
    j["options"] = std::move(opt);
    return j;
}

namespace {

LinearPart parse_linear_part(const Json& j, int n, int degree_max) {
    if (j.contains("resonant")) {
        const Json& r = j.at("resonant");
        if (n != 6) throw SpecError("shape", "/linear_part/resonant", "resonant descriptor needs dimension 6");
        if (!r.contains("n1") || !r.contains("n2"))
            throw SpecError("shape", "/linear_part/resonant", "descriptor needs n1 and n2");
        int n1 = r.at("n1").get<int>(), n2 = r.at("n2").get<int>();
        std::string mode = r.value("mode", "resonant");
        try {
            if (mode == "resonant") return build_resonant_L(n1, n2, ResonanceMode::resonant, degree_max);
            if (mode == "nonresonant-surrogate")
                return build_resonant_L(n1, n2, ResonanceMode::nonresonant_surrogate, degree_max);
        } catch (const std::invalid_argument& e) {
            throw SpecError("shape", "/linear_part/resonant", e.what());
        }
        throw SpecError("shape", "/linear_part/resonant/mode", "unknown mode '" + mode + "'");
    }
    if (!j.contains("matrix")) throw SpecError("shape", "/linear_part", "needs a matrix or a resonant descriptor");
    RatMat m = parse_matrix(j.at("matrix"), "/linear_part/matrix");
    if (m.rows() != n || m.cols() != n)
        throw SpecError("shape", "/linear_part/matrix", "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    return linear_part_from_matrix(m);
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SpecError("syntax", line_col(text, e.byte), e.what());
    }
    if (!doc.is_object()) throw SpecError("shape", "/", "spec document must be a JSON object");
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer())
        throw SpecError("shape", "/dimension", "dimension must be an integer");
    int n = doc.at("dimension").get<int>();
    if (n < 1) throw SpecError("shape", "/dimension", "dimension must be positive");
    if (!doc.contains("degree_max")) throw SpecError("shape", "/degree_max", "degree_max is required");
    int kmax = doc.at("degree_max").get<int>();
    if (kmax < 2) throw SpecError("shape", "/degree_max", "degree_max must be at least 2");
    if (!doc.contains("linear_part")) throw SpecError("shape", "/linear_part", "linear_part is required");

    ParsedSpec out;
    out.problem.n = n;
    out.problem.kmax = kmax;
    out.problem.L = parse_linear_part(doc.at("linear_part"), n, kmax);

    if (doc.contains("group")) {
        const Json& g = doc.at("group");
        if (!g.contains("generators") || !g.at("generators").is_array() || g.at("generators").empty())
            throw SpecError("group", "/group/generators", "needs a non-empty generator list");
        std::vector<SignedElement> gens;
        int i = 0;
        for (const auto& e : g.at("generators")) {
            std::string where = "/group/generators/" + std::to_string(i++);
            RatMat m = parse_matrix(e.at("matrix"), where + "/matrix");
            if (m.rows() != n || m.cols() != n) throw SpecError("shape", where + "/matrix", "generator must be n x n");
            if (!e.contains("sigma") || !e.at("sigma").is_number_integer())
                throw SpecError("group", where + "/sigma", "sigma must be +1 or -1");
            int sign = e.at("sigma").get<int>();
            if (sign != 1 && sign != -1) throw SpecError("group", where + "/sigma", "sigma must be +1 or -1");
            gens.push_back({std::move(m), sign});
        }
        int max_order = g.value("max_order", 64);
        try {
            out.problem.group = close_group(gens, max_order);
        } catch (const std::exception& e) {
            throw SpecError("group", "/group/generators", e.what());
        }
    } else {
        out.problem.group = FiniteSignedGroup::trivial(n);
    }

    if (doc.contains("vector_field")) {
        try {
            out.problem.field = vec_from_terms(doc.at("vector_field"), n);
        } catch (const SpecError&) {
            throw;
        } catch (const std::exception& e) {
            throw SpecError("field", "/vector_field", e.what());
        }
    }

    if (doc.contains("u_list")) {
        const Json& ul = doc.at("u_list");
        if (!ul.is_array()) throw SpecError("shape", "/u_list", "u_list must be an array of term lists");
        int i = 0;
        for (const auto& terms : ul) {
            try {
                out.u_list.push_back(scalar_from_terms(terms, n));
            } catch (const SpecError&) {
                throw;
            } catch (const std::exception& e) {
                throw SpecError("shape", "/u_list/" + std::to_string(i), e.what());
            }
            ++i;
        }
    }

    if (doc.contains("options")) {
        const Json& opt = doc.at("options");
        out.options.output = opt.value("output", "text");
        out.options.hilbert_dmax = opt.value("hilbert_dmax", -1);
    }

    try {
        validate_problem_spec(out.problem);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::string category = msg.find("incompatible") != std::string::npos ? "compatibility" : "field";
        throw SpecError(category, "/", msg);
    }
    return out;
}

std::vector<std::string> builtin_spec_names() {
    return {"nilpotent-2d", "resonant-1-1", "resonant-1-2", "z2xz2-1-2-A", "z2xz2-1-2-B", "z2xz2-1-2-C",
            "z2xz2-1-2-D"};
}

namespace {

Json z2xz2_builtin(char type) {
    std::array<int, 3> signs{1, 1, 1};
    switch (type) {
        case 'A': signs = {1, -1, 1}; break;
        case 'B': signs = {1, -1, -1}; break;
        case 'C': signs = {-1, 1, 1}; break;
        case 'D': signs = {-1, -1, -1}; break;
    }
    ProblemSpec spec;
    spec.n = 6;
    spec.kmax = 6;
    spec.L = build_resonant_L(1, 2, ResonanceMode::resonant, spec.kmax);
    spec.group = golden_group(GoldenFamily::z2xz2, signs);
    return problem_spec_json(spec, {});
}

}  // namespace

std::string builtin_spec_text(const std::string& name) {
    Json j;
    if (name == "nilpotent-2d") {
        ProblemSpec spec;
        spec.n = 2;
        spec.kmax = 8;
        spec.L = linear_part_from_matrix(RatMat::from({{0, 1}, {0, 0}}));
        spec.group = FiniteSignedGroup::trivial(2);
        j = problem_spec_json(spec, {});
    } else if (name == "resonant-1-1" || name == "resonant-1-2") {
        int n2 = name == "resonant-1-1" ? 1 : 2;
        ProblemSpec spec;
        spec.n = 6;
        spec.kmax = 6;
        spec.L = build_resonant_L(1, n2, ResonanceMode::resonant, spec.kmax);
        spec.group = golden_group(GoldenFamily::z2, {1, 1, 1});
        j = problem_spec_json(spec, {});
    } else if (name.rfind("z2xz2-1-2-", 0) == 0 && name.size() == 11) {
        j = z2xz2_builtin(name.back());
    } else {
        throw SpecError("usage", "/", "unknown builtin spec '" + name + "'");
    }
    return render_json(j);
}

ParsedSpec load_spec(const std::string& path_or_name) {
    for (const auto& name : builtin_spec_names())
        if (name == path_or_name) return parse_spec(builtin_spec_text(name));
    std::ifstream in(path_or_name);
    if (!in) throw SpecError("usage", "/", "no builtin spec or readable file named '" + path_or_name + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string num = q.get_num().get_str();
    bool neg = !num.empty() && num[0] == '-';
    if (neg) num = num.substr(1);
    return std::string(neg ? "-" : "") + "\\tfrac{" + num + "}{" + q.get_den().get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        if (m.exp(i) == 0) continue;
        s += "x_{" + std::to_string(i + 1) + "}";
        if (m.exp(i) > 1) s += "^{" + std::to_string(m.exp(i)) + "}";
    }
    return s;
}

}  // namespace

std::string latex_poly(const ScalarPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms()) {
        std::string cs = latex_rational(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg)
            s += "-";
        if (neg) cs = cs.substr(1);
        std::string ms = latex_monomial(m);
        if (ms.empty())
            s += cs;
        else if (cs == "1")
            s += ms;
        else
            s += cs + "\\," + ms;
    }
    return s;
}

namespace {

std::string latex_tuple(const VecPoly& p) {
    std::string s = "\\bigl(";
    for (int i = 0; i < p.vars(); ++i) s += latex_poly(p.comp(i)) + (i + 1 < p.vars() ? ",\\; " : "");
    return s + "\\bigr)";
}

}  // namespace

std::string latex_field(const VecPoly& p) {
    std::string s = "\\begin{aligned}\n";
    for (int i = 0; i < p.vars(); ++i)
        s += "\\dot{x}_{" + std::to_string(i + 1) + "} &= " + latex_poly(p.comp(i)) +
             (i + 1 < p.vars() ? " \\\\\n" : "\n");
    return s + "\\end{aligned}\n";
}

Json verify_report_json(const VerifyReport& r) {
    Json j;
    j["schema_version"] = 1;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    Json lines = Json::array();
    Json failures = Json::array();
    for (const auto& l : r.lines) {
        Json e;
        e["name"] = l.name;
        if (l.k >= 0) e["k"] = l.k;
        for (const auto& [key, value] : l.data) e[key] = value;
        e["pass"] = l.pass;
        if (!l.pass) failures.push_back(e);
        lines.push_back(std::move(e));
    }
    j["checks"] = std::move(lines);
    j["failures"] = std::move(failures);
    return j;
}

Json golden_report_json(const GoldenReport& r) {
    Json j;
    j["schema_version"] = 1;
    j["family"] = r.family == GoldenFamily::z2 ? "z2" : "z2xz2";
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["signs"] = {r.signs[0], r.signs[1], r.signs[2]};
    j["type"] = std::string(1, r.type);
    j["pass"] = r.pass();
    Json lines = Json::array();
    Json failures = Json::array();
    for (const auto& l : r.lines) {
        Json e;
        e["k"] = l.k;
        e["dim_complement"] = l.dim_complement;
        e["dim_module"] = l.dim_module;
        e["equal"] = l.equal;
        if (!l.equal) failures.push_back(e);
        lines.push_back(std::move(e));
    }
    j["degrees"] = std::move(lines);
    j["failures"] = std::move(failures);
    return j;
}

Json compatibility_json(const CompatibilityReport& r) {
    Json j;
    j["pass"] = r.pass();
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["generator"] = e.generator_index;
        x["sigma"] = e.sign;
        x["conjugates_L"] = e.pass_L;
        x["conjugates_Lt"] = e.pass_Lt;
        x["pass"] = e.pass();
        entries.push_back(std::move(x));
    }
    j["generators"] = std::move(entries);
    return j;
}

Json normal_form_json(const NormalFormResult& r) {
    Json j;
    j["schema_version"] = 1;
    j["spec"] = problem_spec_json(r.spec, {});
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json e;
        e["k"] = s.k;
        e["dim_complement"] = s.dim_complement;
        e["g_k"] = terms_json(s.g_k);
        e["xi_k"] = terms_json(s.xi_k);
        e["checks"] = Json{{"residual_exact", s.residual_check}};
        steps.push_back(std::move(e));
    }
    j["steps"] = std::move(steps);
    j["normal_field"] = terms_json(r.normal_field);
    j["coordinate_change"] = terms_json(r.total_change);
    return j;
}

Json complement_report_json(const ComplementReport& r) {
    Json j;
    j["schema_version"] = 1;
    j["spec"] = problem_spec_json(r.spec, {});
    Json slices = Json::array();
    for (const auto& s : r.slices) slices.push_back(subspace_json(s));
    j["complements"] = std::move(slices);
    return j;
}

namespace {

std::string text_table_verify(const VerifyReport& r) {
    std::ostringstream out;
    out << "suite: " << r.suite << "\n";
    for (const auto& l : r.lines) {
        out << (l.pass ? "PASS" : "FAIL") << "  " << l.name;
        if (l.k >= 0) out << "  k=" << l.k;
        for (const auto& [key, value] : l.data) out << "  " << key << "=" << value;
        out << "\n";
    }
    out << (r.pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

}  // namespace

std::string emit_verify(const VerifyReport& r, const std::string& format) {
    if (format == "json") return render_json(verify_report_json(r));
    if (format == "text") return text_table_verify(r);
    if (format == "latex") {
        std::ostringstream out;
        out << "\\begin{tabular}{llrl}\n";
        for (const auto& l : r.lines)
            out << l.name << " & $k=" << l.k << "$ & & " << (l.pass ? "pass" : "fail") << " \\\\\n";
        out << "\\end{tabular}\n";
        return out.str();
    }
    throw SpecError("usage", "/", "unknown output format '" + format + "'");
}

std::string emit_golden(const GoldenReport& r, const std::string& format) {
    if (format == "json") return render_json(golden_report_json(r));
    std::ostringstream out;
    if (format == "text") {
        out << "family=" << (r.family == GoldenFamily::z2 ? "z2" : "z2xz2") << " n1=" << r.n1 << " n2=" << r.n2
            << " type=" << r.type << "\n";
        for (const auto& l : r.lines)
            out << (l.equal ? "PASS" : "FAIL") << "  k=" << l.k << "  dim_complement=" << l.dim_complement
                << "  dim_module=" << l.dim_module << "\n";
        out << (r.pass() ? "all degrees match" : "MISMATCH") << "\n";
        return out.str();
    }
    if (format == "latex") {
        out << "\\begin{tabular}{rrrl}\nk & \\dim Q & \\dim M & \\\\\n";
        for (const auto& l : r.lines)
            out << l.k << " & " << l.dim_complement << " & " << l.dim_module << " & "
                << (l.equal ? "=" : "\\neq") << " \\\\\n";
        out << "\\end{tabular}\n";
        return out.str();
    }
    throw SpecError("usage", "/", "unknown output format '" + format + "'");
}

std::string emit_complement(const ComplementReport& r, const std::string& format) {
    if (format == "json") return render_json(complement_report_json(r));
    std::ostringstream out;
    if (format == "text") {
        for (const auto& s : r.slices) {
            out << "k=" << s.k << "  dim=" << s.dim() << "\n";
            for (const auto& p : vector_basis_polys(s)) out << "  " << p.str() << "\n";
        }
        return out.str();
    }
    if (format == "latex") {
        for (const auto& s : r.slices) {
            out << "% degree " << s.k << ", dimension " << s.dim() << "\n\\begin{gather*}\n";
            auto polys = vector_basis_polys(s);
            for (std::size_t i = 0; i < polys.size(); ++i) {
                out << "\\bigl(";
                for (int c = 0; c < polys[i].vars(); ++c)
                    out << latex_poly(polys[i].comp(c)) << (c + 1 < polys[i].vars() ? ",\\; " : "");
                out << "\\bigr)" << (i + 1 < polys.size() ? " \\\\\n" : "\n");
            }
            out << "\\end{gather*}\n";
        }
        return out.str();
    }
    throw SpecError("usage", "/", "unknown output format '" + format + "'");
}

std::string emit_normal_form(const NormalFormResult& r, const std::string& format) {
    if (format == "json") return render_json(normal_form_json(r));
    std::ostringstream out;
    if (format == "text") {
        for (const auto& s : r.steps)
            out << "k=" << s.k << "  g_k=" << s.g_k.str() << "  xi_k=" << s.xi_k.str()
                << (s.residual_check ? "" : "  RESIDUAL-FAIL") << "\n";
        out << "normal field: " << r.normal_field.str() << "\n";
        out << "coordinate change: " << r.total_change.str() << "\n";
        return out.str();
    }
    if (format == "latex") {
        std::string s;
        for (const auto& step : r.steps)
            s += "% degree " + std::to_string(step.k) + " retained term (complement dimension " +
                 std::to_string(step.dim_complement) + ")\n\\[ g_{" + std::to_string(step.k) + "} = " +
                 latex_tuple(step.g_k) + " \\]\n";
        s += "% normal field\n";
        s += latex_field(r.normal_field);
        return s;
    }
    throw SpecError("usage", "/", "unknown output format '" + format + "'");
}

std::string emit_hilbert(const std::vector<ScalarPoly>& basis, const VerifyReport& span_check,
                         const std::string& format) {
    if (format == "json") {
        Json j;
        j["schema_version"] = 1;
        Json arr = Json::array();
        for (const auto& p : basis) arr.push_back(terms_json(p));
        j["basis"] = std::move(arr);
        j["span_check"] = verify_report_json(span_check);
        return render_json(j);
    }
    std::ostringstream out;
    if (format == "text") {
        out << "hilbert basis (" << basis.size() << " generators):\n";
        for (const auto& p : basis) out << "  " << p.str() << "\n";
        out << text_table_verify(span_check);
        return out.str();
    }
    if (format == "latex") {
        out << "\\begin{gather*}\n";
        for (std::size_t i = 0; i < basis.size(); ++i)
            out << latex_poly(basis[i]) << (i + 1 < basis.size() ? ", \\\\\n" : "\n");
        out << "\\end{gather*}\n";
        return out.str();
    }
    throw SpecError("usage", "/", "unknown output format '" + format + "'");
}

}  // namespace revnf
