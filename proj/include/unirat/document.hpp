#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "unirat/types.hpp"

namespace unirat {

inline constexpr const char* kToolVersion = "0.1.0";

/// Serializable snapshot of a computed approximant. Interp fields are
/// only present when the approximant carries equioscillation structure
/// (AAA output without detected interpolation nodes leaves them null).
struct ApproximantDocument {
    int n = 0;
    double omega = 0.0;
    std::vector<double> support_nodes;
    std::vector<double> weight_real;
    std::vector<double> weight_imag;
    std::vector<double> support_value_real;
    std::vector<double> support_value_imag;
    std::optional<std::vector<double>> interp_nodes;
    std::optional<std::vector<double>> eta;
    std::optional<std::vector<double>> eps;
    std::optional<double> delta;
    std::optional<double> uniform_error;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;
    std::vector<double> poles_real;
    std::vector<double> poles_imag;
    std::vector<double> zeros_real;
    std::vector<double> zeros_imag;
    int iterations = 0;
    std::string strategy;
    bool converged = false;
    std::string tool_version = kToolVersion;
};

[[nodiscard]] nlohmann::json to_json(const ApproximantDocument& doc);
[[nodiscard]] ApproximantDocument document_from_json(const nlohmann::json& j);

/// Rebuilds the barycentric function stored in a document.
[[nodiscard]] BarycentricRational rational_from_document(
    const ApproximantDocument& doc);

/// Fills the function part (support, weights, values, poles, zeros) of a
/// document from a barycentric rational.
void fill_function_fields(ApproximantDocument& doc,
                          const BarycentricRational& r);

}  // namespace unirat
