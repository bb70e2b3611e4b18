#pragma once

#include "adelic/catalog.hpp"
#include "adelic/chars.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adelic {

using Json = nlohmann::json;

inline const char* kToolName = "adelic-chars";
inline const char* kToolVersion = "0.1.0";

/// A system file: the LeviSystem plus optional named Levi elements given as
/// words (used as classification samples).
struct SystemDocument {
    LeviSystem system;
    std::vector<NamedLeviElement> named_elements;
};

struct VerificationRecord {
    std::string check;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool result = false;
    /// Absent for exact checks.
    std::optional<double> tolerance;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
    std::optional<ClassificationReport> report;
    std::vector<VerificationRecord> verification;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

// All from_json functions throw ParseError on malformed input; system_from_json
// additionally throws ValidationError when the data does not define a system.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json to_json(const AdeleCharacter& lambda);
AdeleCharacter lambda_from_json(const Json& j);

Json to_json(const LeviSystem& system, const std::vector<NamedLeviElement>& named = {});
SystemDocument system_from_json(const Json& j);

Json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const Json& j);

Json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const Json& j);

Json to_json(const ReportDocument& d);
ReportDocument document_from_json(const Json& j);

Json to_json(const QuasiOrbitKey& key);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);
/// Throws ParseError with the parser's message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace adelic
