#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revnf/io.hpp"
#include "revnf/parallel.hpp"

namespace py = pybind11;
using namespace revnf;

namespace {

std::string complement_json(const std::string& spec, int k_from, int k_to, int jobs) {
    ParsedSpec parsed = load_spec(spec);
    if (k_to < 0) k_to = parsed.problem.kmax;
    ComplementReport report;
    report.spec = parsed.problem;
    report.slices.resize(std::max(0, k_to - k_from + 1));
    parallel_for(static_cast<int>(report.slices.size()), jobs, [&](int i) {
        report.slices[i] = complement_deg(parsed.problem.L, parsed.problem.group, k_from + i);
    });
    return render_json(complement_report_json(report));
}

std::string normal_form_json_str(const std::string& spec) {
    ParsedSpec parsed = load_spec(spec);
    return render_json(normal_form_json(normal_form(parsed.problem)));
}

std::string verify_json(const std::string& case_name, const std::string& spec, int k_from, int k_to, int samples,
                        std::uint64_t seed, int jobs) {
    ParsedSpec parsed = load_spec(spec);
    if (k_to < 0) k_to = parsed.problem.kmax;
    VerifyReport report;
    if (case_name == "elphick")
        report = run_elphick(parsed.problem.L, k_from, k_to, jobs);
    else if (case_name == "thm-4-4")
        report = run_thm44(parsed.problem.L, parsed.problem.group, k_from, k_to, jobs);
    else if (case_name == "lemmas")
        report = run_lemmas(parsed.problem.L, parsed.problem.group, k_from, k_to, samples, seed, jobs);
    else if (case_name == "pi")
        report = run_pi(parsed.problem.L, parsed.problem.group, k_from, k_to, samples, seed, jobs);
    else if (case_name == "decompose-plus")
        report = run_decompose_plus(parsed.problem.group, k_from, k_to, jobs);
    else
        throw std::invalid_argument("unknown verify case '" + case_name + "'");
    return render_json(verify_report_json(report));
}

std::string golden_json(const std::string& family, int n1, int n2, const std::vector<int>& signs, int k_from,
                        int k_to, int jobs) {
    GoldenFamily fam;
    if (family == "z2")
        fam = GoldenFamily::z2;
    else if (family == "z2xz2")
        fam = GoldenFamily::z2xz2;
    else
        throw std::invalid_argument("unknown golden family '" + family + "'");
    if (signs.size() != 3) throw std::invalid_argument("signs must have three entries");
    std::array<int, 3> s{signs[0], signs[1], signs[2]};
    if (k_to < 0) k_to = golden_default_k_to(n1, n2);
    return render_json(golden_report_json(golden_check(fam, n1, n2, s, k_from, k_to, jobs)));
}

std::string hilbert_json(int n1, int n2, int dmax) {
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    auto u = golden_basic_invariants(n1, n2);
    if (dmax < 0) dmax = 2 * (n1 + n2) + 2;
    LinearPart L = build_resonant_L(n1, n2, ResonanceMode::resonant, std::max(2, dmax));
    auto basis = hilbert_basis_sigma(G, u, dmax);
    Json j;
    j["schema_version"] = 1;
    Json arr = Json::array();
    for (const auto& p : basis) arr.push_back(terms_json(p));
    j["basis"] = std::move(arr);
    Json spans = Json::array();
    bool pass = true;
    for (int d = 0; d <= dmax; ++d) {
        GradedSubspace lhs = algebra_slice(basis, 6, d);
        GradedSubspace rhs = intersect(s_invariants_deg(L, d), invariants_deg(G, d));
        bool ok = subspace_equal(lhs, rhs);
        pass = pass && ok;
        spans.push_back(Json{{"d", d}, {"dim", lhs.dim()}, {"equal", ok}});
    }
    j["span_check"] = std::move(spans);
    j["pass"] = pass;
    return render_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact normal forms of reversible-equivariant vector fields";

    m.def("complement", &complement_json, py::arg("spec"), py::arg("k_from") = 2, py::arg("k_to") = -1,
          py::arg("jobs") = 1,
          "Complement slices for a spec document (path, builtin name); returns a JSON string");
    m.def("normal_form", &normal_form_json_str, py::arg("spec"),
          "Degree-by-degree normalization of the spec's vector field; returns a JSON string");
    m.def("verify", &verify_json, py::arg("case"), py::arg("spec"), py::arg("k_from") = 2, py::arg("k_to") = -1,
          py::arg("samples") = 100, py::arg("seed") = 987654321ULL, py::arg("jobs") = 1,
          "Run one property suite; returns a JSON string");
    m.def("golden", &golden_json, py::arg("family"), py::arg("n1"), py::arg("n2"),
          py::arg("signs") = std::vector<int>{1, 1, 1}, py::arg("k_from") = 2, py::arg("k_to") = -1,
          py::arg("jobs") = 1, "Compare the computed complement with the reference module data");
    m.def("hilbert", &hilbert_json, py::arg("n1"), py::arg("n2"), py::arg("dmax") = -1,
          "Hilbert basis of the sigma-twisted invariant ring for the resonant family");
    m.def("builtin_specs", &builtin_spec_names, "Names of the builtin spec documents");
    m.def("builtin_spec_text", &builtin_spec_text, py::arg("name"), "JSON text of a builtin spec document");
    m.def("parse_spec_echo", [](const std::string& text) {
        ParsedSpec parsed = parse_spec(text);
        return render_json(problem_spec_json(parsed.problem, parsed.options));
    }, py::arg("text"), "Validate a spec document and return its canonical echo");

    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
}
