#pragma once

#include <optional>
#include <string>

namespace opcount {

// Counting routes exposed by the CLI and tagged per table cell.
enum class Method { Oracle, InclusionExclusion, DoubleSum, Recurrence, Gf, Diagonal };

inline std::string method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::InclusionExclusion: return "inclusion-exclusion";
        case Method::DoubleSum: return "double-sum";
        case Method::Recurrence: return "recurrence";
        case Method::Gf: return "gf";
        case Method::Diagonal: return "diagonal";
    }
    return "unknown";
}

inline std::optional<Method> method_from_name(const std::string& name) {
    if (name == "oracle") return Method::Oracle;
    if (name == "inclusion-exclusion") return Method::InclusionExclusion;
    if (name == "double-sum") return Method::DoubleSum;
    if (name == "recurrence") return Method::Recurrence;
    if (name == "gf") return Method::Gf;
    if (name == "diagonal") return Method::Diagonal;
    return std::nullopt;
}

}  // namespace opcount
