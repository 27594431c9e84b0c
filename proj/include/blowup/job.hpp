#ifndef BLOWUP_JOB_HPP
#define BLOWUP_JOB_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace blowup {

struct IdealSpec {
    enum class Kind { gens, exponents, minors, fitting, maximal };
    std::string name;
    Kind kind = Kind::gens;
    std::vector<std::string> genTexts;
    std::vector<long> exponents;
    std::vector<std::string> plusVars;  // extra variable generators next to exponents
    std::vector<std::vector<std::string>> matrix;
    int minorSize = 0;
    bool hilbertBurch = false;  // row-deletion numbering with alternating signs
    std::string fittingOf;
    int fittingIndex = 0;
};

struct AnalysisSpec {
    std::string name;
    std::map<std::string, std::string> params;
};

// One validated input: a coefficient field, a ring (explicit or a numerical
// semigroup), named ideals, and an ordered list of requested analyses.
struct Job {
    std::string fieldSpec = "gf:32003";
    bool isSemigroup = false;
    std::vector<long> semigroupGens;
    std::vector<std::string> ringVars;
    std::vector<long> ringWeights;
    std::vector<std::string> relationTexts;
    std::vector<std::string> adjoinVars;  // extra weight-1 variables
    std::vector<IdealSpec> ideals;
    std::vector<AnalysisSpec> analyses;
    std::uint64_t seed = 0;
    int trials = 5;
};

// Accepts the line-oriented text schema or the equivalent JSON encoding
// (sniffed by a leading '{'). Diagnostics carry line/field context.
Job parse_job_text(const std::string& text);
Job parse_job_file(const std::string& path);

}  // namespace blowup

#endif
