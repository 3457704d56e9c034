#pragma once

#include "aspic/postulates.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace aspic {

enum class ReportFormat { Json, Text };

struct EvalOptions {
    Semantics semantics = Semantics::Preferred;
    Mode mode = Mode::Deductive;
    EvalLimits limits;
};

/// Outcome of one `eval` run, including failures that stopped it early.
struct EvalReport {
    std::string provenance;
    EvalOptions options;

    /// "ok", "limit_exceeded" or "inconsistent".
    std::string status = "ok";
    std::string message;
    std::optional<std::string> limit_name;
    std::optional<std::size_t> limit_value;

    ArgumentationSystem system;
    bool consistent = true;
    std::optional<Evaluation> evaluation;
    std::vector<PostulateReport> postulates;

    /// Some conclusion set violates a postulate. Always false out of postulate scope.
    bool violation_found() const;
};

/// Runs the pipeline, capturing LimitExceeded and InconsistentSystem in the status.
EvalReport run_eval(const ArgumentationSystem& as, const EvalOptions& options, std::string provenance);

nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const ArgumentStore& store);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const PostulateReport& report);

/// Canonical serialization: sorted keys, sorted lists, LF-terminated.
std::string emit_report(const EvalReport& report, ReportFormat format);
std::string emit_arguments(const ArgumentStore& store, ReportFormat format);
std::string emit_comparisons(const std::vector<ComparisonReport>& reports, const std::string& provenance,
                             ReportFormat format);

} // namespace aspic
