#ifndef WILDRAM_SUITES_HPP
#define WILDRAM_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/report.hpp"

namespace wildram {

// A batch verification case: the action data plus knobs for the verifier
// suites.  Polynomials are given as grammar strings in x1..xn.
struct CaseSpec {
    std::string name = "case";
    std::uint32_t p = 2;
    std::uint32_t n = 2;
    std::vector<std::string> a;
    std::string mu = "1";
    std::vector<std::string> suites;  // empty = all
    std::uint32_t precision = 16;
    std::uint32_t length_cap = 32;
    std::uint32_t degree_cap = 6;
    std::uint64_t seed = 1;

    void validate() const;  // throws on malformed data
};

const std::vector<std::string>& all_suites();

// Built-in named cases ("artin-p2", "n2-p3", "n3-p2").
std::optional<CaseSpec> builtin_case(const std::string& name);
std::vector<std::string> builtin_case_names();

// Parse a case from JSON text; throws parse_error with diagnostics.
CaseSpec case_from_json(const std::string& text);

// Execute the selected suites.
Report run_case(const CaseSpec& spec);

// Deterministic JSON serialization; timings included only when requested.
std::string report_to_json(const Report& rep, const CaseSpec& spec, bool timings);

}  // namespace wildram

#endif
