#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "charclass/classify.hpp"

namespace charclass {

struct DerivationStep {
    std::string rule;
    std::string expression;
    std::string total_class;

    bool operator==(const DerivationStep&) const = default;
};

// What the CLI prints for one instance. Serializes with a stable key order
// so JSON output can be golden-file tested.
struct ReportDocument {
    std::string schema_version = "1";
    Classification classification;
    std::vector<std::string> caveats;
    std::optional<std::vector<DerivationStep>> derivation;

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(const StiefelParams& p, bool with_derivation = false);

// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; report_from_json accepts both.
nlohmann::ordered_json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::ordered_json& j);

std::string report_to_text(const ReportDocument& doc);

}  // namespace charclass
