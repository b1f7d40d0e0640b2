#ifndef REVNF_IO_HPP
#define REVNF_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "revnf/golden.hpp"
#include "revnf/normalform.hpp"
#include "revnf/verify.hpp"

namespace revnf {

using Json = nlohmann::json;

// Parse or validation failure with a category and a document location
// (line/column for syntax errors, a JSON pointer for semantic ones).
class SpecError : public std::runtime_error {
  public:
    SpecError(std::string category, std::string location, const std::string& message)
        : std::runtime_error(category + " error at " + location + ": " + message),
          category_(std::move(category)),
          location_(std::move(location)) {}
    const std::string& category() const { return category_; }
    const std::string& location() const { return location_; }

  private:
    std::string category_, location_;
};

struct SpecOptions {
    std::string output = "text";
    int hilbert_dmax = -1;  // -1: derive a default at the use site
};

struct ParsedSpec {
    ProblemSpec problem;
    SpecOptions options;
    std::vector<ScalarPoly> u_list;  // optional input of the hilbert command
};

// Full validation cascade: document shape, coefficient syntax, group
// closure and sign consistency, compatibility, field invariants.
ParsedSpec parse_spec(const std::string& text);

// Either a builtin case name or a path to a spec document.
ParsedSpec load_spec(const std::string& path_or_name);
std::vector<std::string> builtin_spec_names();
std::string builtin_spec_text(const std::string& name);

// Term-record serialization: {component (1-based, vectors only),
// exponents: [int], coefficient: "p/q"}.
Json terms_json(const ScalarPoly& p);
Json terms_json(const VecPoly& p);
ScalarPoly scalar_from_terms(const Json& terms, int n);
VecPoly vec_from_terms(const Json& terms, int n);

Json subspace_json(const GradedSubspace& s);
Json linear_part_json(const LinearPart& L);
Json group_json(const FiniteSignedGroup& G);
Json problem_spec_json(const ProblemSpec& spec, const SpecOptions& options = {});
Json normal_form_json(const NormalFormResult& r);
Json verify_report_json(const VerifyReport& r);
Json golden_report_json(const GoldenReport& r);
Json compatibility_json(const CompatibilityReport& r);

std::string render_json(const Json& doc);

std::string latex_poly(const ScalarPoly& p);
std::string latex_field(const VecPoly& p);

// Per-degree complement (or kernel) listing used by the complement command.
struct ComplementReport {
    ProblemSpec spec;
    std::vector<GradedSubspace> slices;
};
Json complement_report_json(const ComplementReport& r);
std::string emit_complement(const ComplementReport& r, const std::string& format);
std::string emit_normal_form(const NormalFormResult& r, const std::string& format);
std::string emit_verify(const VerifyReport& r, const std::string& format);
std::string emit_golden(const GoldenReport& r, const std::string& format);
std::string emit_hilbert(const std::vector<ScalarPoly>& basis, const VerifyReport& span_check,
                         const std::string& format);

}  // namespace revnf

#endif
