#ifndef CGFLZ_REPORT_HPP
#define CGFLZ_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cgflz/bounds.hpp"
#include "cgflz/encoder.hpp"
#include "cgflz/rational.hpp"
#include "cgflz/sequence.hpp"

namespace cgflz {

using Json = nlohmann::ordered_json;

inline constexpr int kReportFormatVersion = 1;

/// Inequality acceptance slack: lhs <= rhs + abs_slack + rel_slack * max(|lhs|,|rhs|).
struct SlackPolicy {
    double abs_slack = 1e-9;
    double rel_slack = 1e-12;

    bool leq(double lhs, double rhs) const;
};

struct AnalysisResult {
    Json report;
    std::size_t violations = 0;
};

enum class FvCoder { TiltedBlock, EncoderTable, BlockLz };

struct AnalyzeFvOptions {
    std::size_t ell = 1;
    std::vector<Rational> lambdas;
    std::size_t states = 1;
    FvCoder coder = FvCoder::TiltedBlock;
    std::optional<EncoderSpec> encoder;  // required for EncoderTable
    std::size_t z1 = 0;
    bool truncate = false;
    std::string input_path;
};

AnalysisResult analyze_fv(const SymbolSequence& x, const AnalyzeFvOptions& opt);

struct AnalyzeVvOptions {
    std::vector<Rational> lambdas;
    std::size_t states = 1;
    std::optional<Parsing> parsing;  // default: incremental
    std::string input_path;
    std::string parsing_path;
};

AnalysisResult analyze_vv(const SymbolSequence& x, const AnalyzeVvOptions& opt);

struct AnalyzeSideinfoOptions {
    std::vector<Rational> lambdas;
    std::size_t states = 1;
    std::optional<std::size_t> ell;      // enables the block converse row
    std::optional<EncoderSpec> encoder;  // side-input table to measure against it
    std::size_t z1 = 0;
    bool truncate = false;
    std::string input_path;
    std::string side_path;
};

AnalysisResult analyze_sideinfo(const SymbolSequence& x, const SymbolSequence& u,
                                const AnalyzeSideinfoOptions& opt);

/// Flat CSV projection of an analysis/verify report (one row per measured value,
/// bound, and inequality).
std::string report_to_csv(const Json& report);

Json bound_to_json(const BoundReport& b);

}  // namespace cgflz

#endif
