#include <CLI11.hpp>
#include <iostream>

#include "revnf/io.hpp"
#include "revnf/parallel.hpp"

namespace {

using namespace revnf;

int finish(bool pass, const Json& failures, const std::string& rendered) {
    std::cout << rendered;
    if (!pass) {
        std::cerr << render_json(Json{{"pass", false}, {"failures", failures}});
        return 1;
    }
    return 0;
}

std::array<int, 3> parse_signs(const std::string& text) {
    std::array<int, 3> signs{1, 1, 1};
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 3) signs[i++] = std::stoi(item);
    if (i != 3) throw SpecError("usage", "/", "--signs needs three comma-separated values, e.g. 1,-1,1");
    for (int s : signs)
        if (s != 1 && s != -1) throw SpecError("usage", "/", "signs must be +1 or -1");
    return signs;
}

int run_complement_cmd(const std::string& spec_arg, int k_from, int k_to, const std::string& out, int jobs) {
    ParsedSpec parsed = load_spec(spec_arg);
    if (k_to < 0) k_to = parsed.problem.kmax;
    ComplementReport report;
    report.spec = parsed.problem;
    report.slices.resize(std::max(0, k_to - k_from + 1));
    parallel_for(static_cast<int>(report.slices.size()), jobs, [&](int i) {
        report.slices[i] = complement_deg(parsed.problem.L, parsed.problem.group, k_from + i);
    });
    std::cout << emit_complement(report, out.empty() ? parsed.options.output : out);
    return 0;
}

int run_normal_form_cmd(const std::string& spec_arg, const std::string& out) {
    ParsedSpec parsed = load_spec(spec_arg);
    NormalFormResult result = normal_form(parsed.problem);
    std::cout << emit_normal_form(result, out.empty() ? parsed.options.output : out);
    return 0;
}

int run_verify_cmd(const std::string& case_name, const std::string& spec_arg, int k_from, int k_to,
                   int samples, std::uint64_t seed, const std::string& out, int jobs) {
    ParsedSpec parsed = load_spec(spec_arg);
    const LinearPart& L = parsed.problem.L;
    const FiniteSignedGroup& G = parsed.problem.group;
    if (k_to < 0) k_to = parsed.problem.kmax;
    VerifyReport report;
    if (case_name == "elphick")
        report = run_elphick(L, k_from, k_to, jobs);
    else if (case_name == "thm-4-4")
        report = run_thm44(L, G, k_from, k_to, jobs);
    else if (case_name == "lemmas")
        report = run_lemmas(L, G, k_from, k_to, samples, seed, jobs);
    else if (case_name == "pi")
        report = run_pi(L, G, k_from, k_to, samples, seed, jobs);
    else if (case_name == "decompose-plus")
        report = run_decompose_plus(G, k_from, k_to, jobs);
    else
        throw SpecError("usage", "/",
                        "unknown verify case '" + case_name +
                            "' (expected elphick, thm-4-4, lemmas, pi or decompose-plus)");
    std::string fmt = out.empty() ? parsed.options.output : out;
    return finish(report.pass(), verify_report_json(report)["failures"], emit_verify(report, fmt));
}

int run_golden_cmd(const std::string& case_name, int n1, int n2, const std::string& signs_text, int k_from,
                   int k_to, const std::string& out, int jobs) {
    GoldenFamily family;
    if (case_name == "z2")
        family = GoldenFamily::z2;
    else if (case_name == "z2xz2")
        family = GoldenFamily::z2xz2;
    else
        throw SpecError("usage", "/", "unknown golden case '" + case_name + "' (expected z2 or z2xz2)");
    std::array<int, 3> signs = parse_signs(signs_text);
    if (k_to < 0) k_to = golden_default_k_to(n1, n2);
    GoldenReport report = golden_check(family, n1, n2, signs, k_from, k_to, jobs);
    return finish(report.pass(), golden_report_json(report)["failures"],
                  emit_golden(report, out.empty() ? "text" : out));
}

int run_hilbert_cmd(const std::string& spec_arg, const std::string& case_name, int n1, int n2, int dmax,
                    const std::string& out, int jobs) {
    FiniteSignedGroup G = FiniteSignedGroup::trivial(1);
    std::vector<ScalarPoly> u_list;
    std::optional<LinearPart> L;  // present: compare spans against the S ⋊ Gamma invariants
    std::string fmt = out.empty() ? "text" : out;
    if (!case_name.empty()) {
        if (case_name != "z2") throw SpecError("usage", "/", "hilbert --case supports the z2 family");
        G = golden_group(GoldenFamily::z2, {1, 1, 1});
        u_list = golden_basic_invariants(n1, n2);
        L = build_resonant_L(n1, n2, ResonanceMode::resonant, std::max(2, dmax));
        if (dmax < 0) dmax = golden_default_k_to(n1, n2);
    } else {
        ParsedSpec parsed = load_spec(spec_arg);
        if (parsed.u_list.empty())
            throw SpecError("usage", "/u_list", "hilbert needs a spec with a u_list or --case z2");
        G = parsed.problem.group;
        u_list = parsed.u_list;
        if (parsed.problem.L.resonant) L = parsed.problem.L;
        if (dmax < 0) dmax = parsed.options.hilbert_dmax >= 0 ? parsed.options.hilbert_dmax : G.order();
        if (out.empty()) fmt = parsed.options.output;
    }
    std::vector<ScalarPoly> basis = hilbert_basis_sigma(G, u_list, dmax);

    VerifyReport span_check;
    span_check.suite = "hilbert-span";
    int n = G.dim();
    span_check.lines.resize(dmax + 1);
    parallel_for(dmax + 1, jobs, [&](int d) {
        GradedSubspace lhs = algebra_slice(basis, n, d);
        GradedSubspace rhs = L ? intersect(s_invariants_deg(*L, d), invariants_deg(G, d)) : invariants_deg(G, d);
        CheckLine line;
        line.name = "algebra-span-equals-invariants";
        line.k = d;
        line.data = {{"dim_span", lhs.dim()}, {"dim_invariants", rhs.dim()}};
        line.pass = subspace_equal(lhs, rhs);
        span_check.lines[d] = std::move(line);
    });
    return finish(span_check.pass(), verify_report_json(span_check)["failures"],
                  emit_hilbert(basis, span_check, fmt));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact normal forms of reversible-equivariant vector fields"};
    app.require_subcommand(1);

    std::string spec_arg, out, case_name, signs_text = "1,1,1";
    int k_from = 2, k_to = -1, n1 = 1, n2 = 1, samples = 100, dmax = -1, jobs = 1;
    std::uint64_t seed = 987654321;

    auto* complement = app.add_subcommand("complement", "Compute the normal-form complement per degree");
    complement->add_option("--spec", spec_arg, "Spec file or builtin name")->required();
    complement->add_option("--k-from", k_from, "First degree");
    complement->add_option("--k-to", k_to, "Last degree (default: spec degree_max)");
    complement->add_option("--out", out, "json | latex | text");
    complement->add_option("--jobs", jobs, "Parallel degree workers");

    auto* nf = app.add_subcommand("normal-form", "Run the degree-by-degree normalization");
    nf->add_option("--spec", spec_arg, "Spec file or builtin name")->required();
    nf->add_option("--out", out, "json | latex | text");
    nf->add_option("--jobs", jobs, "Parallel degree workers");

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--case", case_name, "elphick | thm-4-4 | lemmas | pi | decompose-plus")->required();
    verify->add_option("--spec", spec_arg, "Spec file or builtin name")->required();
    verify->add_option("--k-from", k_from, "First degree");
    verify->add_option("--k-to", k_to, "Last degree (default: spec degree_max)");
    verify->add_option("--samples", samples, "Random samples per identity");
    verify->add_option("--seed", seed, "Seed for the random samples");
    verify->add_option("--out", out, "json | latex | text");
    verify->add_option("--jobs", jobs, "Parallel degree workers");

    auto* golden = app.add_subcommand("golden", "Compare the computed complement with the reference module");
    golden->add_option("--case", case_name, "z2 | z2xz2")->required();
    golden->add_option("--n1", n1, "Resonance n1")->required();
    golden->add_option("--n2", n2, "Resonance n2")->required();
    golden->add_option("--signs", signs_text, "a0,a1,a2 for the z2xz2 family");
    golden->add_option("--k-from", k_from, "First degree");
    golden->add_option("--k-to", k_to, "Last degree (default: 2(n1+n2)+1)");
    golden->add_option("--out", out, "json | latex | text");
    golden->add_option("--jobs", jobs, "Parallel degree workers");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the sigma-twisted invariants");
    hilbert->add_option("--spec", spec_arg, "Spec file with a u_list");
    hilbert->add_option("--case", case_name, "z2 (uses the resonant u-list)");
    hilbert->add_option("--n1", n1, "Resonance n1");
    hilbert->add_option("--n2", n2, "Resonance n2");
    hilbert->add_option("--dmax", dmax, "Pruning/verification degree bound");
    hilbert->add_option("--out", out, "json | latex | text");
    hilbert->add_option("--jobs", jobs, "Parallel degree workers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (complement->parsed()) return run_complement_cmd(spec_arg, k_from, k_to, out, jobs);
        if (nf->parsed()) return run_normal_form_cmd(spec_arg, out);
        if (verify->parsed()) return run_verify_cmd(case_name, spec_arg, k_from, k_to, samples, seed, out, jobs);
        if (golden->parsed()) return run_golden_cmd(case_name, n1, n2, signs_text, k_from, k_to, out, jobs);
        if (hilbert->parsed()) return run_hilbert_cmd(spec_arg, case_name, n1, n2, dmax, out, jobs);
    } catch (const SpecError& e) {
        std::cerr << render_json(Json{{"error", e.what()}, {"category", e.category()}, {"location", e.location()}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << render_json(Json{{"error", e.what()}});
        return 2;
    }
    return 2;
}
