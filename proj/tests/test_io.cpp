#include <doctest.h>

#include "revnf/io.hpp"

using namespace revnf;

TEST_CASE("builtin specs parse and echo stably") {
    for (const auto& name : builtin_spec_names()) {
        ParsedSpec first = parse_spec(builtin_spec_text(name));
        std::string echo = render_json(problem_spec_json(first.problem, first.options));
        ParsedSpec second = parse_spec(echo);
        CHECK(render_json(problem_spec_json(second.problem, second.options)) == echo);
        CHECK(second.problem.n == first.problem.n);
        CHECK(second.problem.kmax == first.problem.kmax);
        CHECK(second.problem.L.matrix == first.problem.L.matrix);
        CHECK(second.problem.group.order() == first.problem.group.order());
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_spec("{\n  \"dimension\": 2,\n  oops\n}");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.category() == "syntax");
        CHECK(std::string(e.location()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("semantic errors are categorized") {
    // Non-coprime resonance.
    std::string bad_res = R"({"dimension":6,"degree_max":4,"linear_part":{"resonant":{"n1":2,"n2":4}}})";
    CHECK_THROWS_WITH_AS(parse_spec(bad_res), doctest::Contains("reduce the ratio"), SpecError);

    // Field whose linear part disagrees with L.
    std::string mismatch = R"({
      "dimension": 2, "degree_max": 3,
      "linear_part": {"matrix": [["0","1"],["0","0"]]},
      "vector_field": [{"component": 1, "exponents": [1,0], "coefficient": "1"}]
    })";
    CHECK_THROWS_WITH_AS(parse_spec(mismatch), doctest::Contains("linear part mismatch"), SpecError);

    // Bad coefficient string.
    std::string bad_coeff = R"({"dimension":2,"degree_max":3,"linear_part":{"matrix":[["0","x"],["0","0"]]}})";
    try {
        parse_spec(bad_coeff);
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(e.category() == "coefficient");
        CHECK(e.location() == "/linear_part/matrix/0/1");
    }

    // Sign map inconsistency surfaces as a group error.
    std::string bad_group = R"({
      "dimension": 2, "degree_max": 3,
      "linear_part": {"matrix": [["0","0"],["0","0"]]},
      "group": {"generators": [
        {"matrix": [["1","0"],["0","-1"]], "sigma": 1},
        {"matrix": [["1","0"],["0","-1"]], "sigma": -1}
      ]}
    })";
    CHECK_THROWS_WITH_AS(parse_spec(bad_group), doctest::Contains("homomorphism"), SpecError);
}

TEST_CASE("minimal resonant document") {
    std::string text = R"({
      "dimension": 6,
      "degree_max": 4,
      "linear_part": {"resonant": {"n1": 1, "n2": 2}},
      "group": {"generators": [{"matrix": [
        ["1","0","0","0","0","0"],["0","-1","0","0","0","0"],
        ["0","0","1","0","0","0"],["0","0","0","-1","0","0"],
        ["0","0","0","0","1","0"],["0","0","0","0","0","-1"]],
        "sigma": -1}]}
    })";
    ParsedSpec parsed = parse_spec(text);
    CHECK(parsed.problem.n == 6);
    CHECK(parsed.problem.group.order() == 2);
    CHECK(parsed.problem.L.matrix.at(4, 5) == rat(2));
    CHECK(parsed.problem.group.has_reversing());
}

TEST_CASE("term lists round-trip") {
    VecPoly p(3);
    p.comp(0) = ScalarPoly::variable(3, 1) * rat(7, 3);
    p.comp(2) = ScalarPoly::variable(3, 0) * ScalarPoly::variable(3, 2) * rat(-1, 2);
    CHECK(vec_from_terms(terms_json(p), 3) == p);

    ScalarPoly s = ScalarPoly::variable(2, 0) * rat(4) + ScalarPoly::constant(2, rat(-1, 5));
    CHECK(scalar_from_terms(terms_json(s), 2) == s);
}

TEST_CASE("emitters render deterministically") {
    LinearPart L = build_resonant_L(1, 1, ResonanceMode::resonant, 3);
    FiniteSignedGroup G = golden_group(GoldenFamily::z2, {1, 1, 1});
    ComplementReport report;
    report.spec.n = 6;
    report.spec.L = L;
    report.spec.group = G;
    report.spec.kmax = 2;
    report.slices.push_back(complement_deg(L, G, 2));

    std::string json_out = emit_complement(report, "json");
    CHECK(json_out == emit_complement(report, "json"));
    CHECK(json_out.find("\"schema_version\"") != std::string::npos);
    std::string text_out = emit_complement(report, "text");
    CHECK(text_out.find("k=2") != std::string::npos);
    std::string latex_out = emit_complement(report, "latex");
    CHECK(latex_out.find("\\begin{gather*}") != std::string::npos);
    CHECK_THROWS_AS(emit_complement(report, "html"), SpecError);

    // Empty result still renders a valid document skeleton.
    ComplementReport empty = report;
    empty.slices.clear();
    Json parsed = Json::parse(emit_complement(empty, "json"));
    CHECK(parsed["complements"].is_array());
    CHECK(parsed["complements"].empty());
}

TEST_CASE("normal form of the bare linear field emits empty g_k lists") {
    ParsedSpec parsed = load_spec("nilpotent-2d");
    ProblemSpec spec = parsed.problem;
    spec.kmax = 3;
    spec.field = VecPoly::linear(spec.L.matrix);
    NormalFormResult result = normal_form(spec);
    Json j = Json::parse(emit_normal_form(result, "json"));
    for (const auto& step : j["steps"]) CHECK(step["g_k"].empty());
    std::string latex = emit_normal_form(result, "latex");
    CHECK(latex.find("\\dot{x}_{1}") != std::string::npos);
}

TEST_CASE("load_spec rejects unknown names") {
    CHECK_THROWS_AS(load_spec("definitely-not-a-spec"), SpecError);
}
