#include "unirat/document.hpp"

#include "unirat/numerics.hpp"

namespace unirat {

namespace {

using nlohmann::json;

json optional_array(const std::optional<std::vector<double>>& v) {
    if (!v) return nullptr;
    return *v;
}

json optional_number(const std::optional<double>& v) {
    if (!v) return nullptr;
    return *v;
}

std::optional<std::vector<double>> read_optional_array(const json& j,
                                                       const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::vector<double>>();
}

std::optional<double> read_optional_number(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const ApproximantDocument& doc) {
    return json{{"n", doc.n},
                {"omega", doc.omega},
                {"support_nodes", doc.support_nodes},
                {"weight_real", doc.weight_real},
                {"weight_imag", doc.weight_imag},
                {"support_value_real", doc.support_value_real},
                {"support_value_imag", doc.support_value_imag},
                {"interp_nodes", optional_array(doc.interp_nodes)},
                {"eta", optional_array(doc.eta)},
                {"eps", optional_array(doc.eps)},
                {"delta", optional_number(doc.delta)},
                {"uniform_error", optional_number(doc.uniform_error)},
                {"lower_bound", optional_number(doc.lower_bound)},
                {"upper_bound", optional_number(doc.upper_bound)},
                {"poles_real", doc.poles_real},
                {"poles_imag", doc.poles_imag},
                {"zeros_real", doc.zeros_real},
                {"zeros_imag", doc.zeros_imag},
                {"iterations", doc.iterations},
                {"strategy", doc.strategy},
                {"converged", doc.converged},
                {"tool_version", doc.tool_version}};
}

ApproximantDocument document_from_json(const json& j) {
    ApproximantDocument doc;
    doc.n = j.at("n").get<int>();
    doc.omega = j.at("omega").get<double>();
    doc.support_nodes = j.at("support_nodes").get<std::vector<double>>();
    doc.weight_real = j.at("weight_real").get<std::vector<double>>();
    doc.weight_imag = j.at("weight_imag").get<std::vector<double>>();
    doc.support_value_real =
        j.at("support_value_real").get<std::vector<double>>();
    doc.support_value_imag =
        j.at("support_value_imag").get<std::vector<double>>();
    doc.interp_nodes = read_optional_array(j, "interp_nodes");
    doc.eta = read_optional_array(j, "eta");
    doc.eps = read_optional_array(j, "eps");
    doc.delta = read_optional_number(j, "delta");
    doc.uniform_error = read_optional_number(j, "uniform_error");
    doc.lower_bound = read_optional_number(j, "lower_bound");
    doc.upper_bound = read_optional_number(j, "upper_bound");
    doc.poles_real = j.at("poles_real").get<std::vector<double>>();
    doc.poles_imag = j.at("poles_imag").get<std::vector<double>>();
    doc.zeros_real = j.at("zeros_real").get<std::vector<double>>();
    doc.zeros_imag = j.at("zeros_imag").get<std::vector<double>>();
    doc.iterations = j.at("iterations").get<int>();
    doc.strategy = j.at("strategy").get<std::string>();
    doc.converged = j.at("converged").get<bool>();
    doc.tool_version = j.at("tool_version").get<std::string>();
    return doc;
}

BarycentricRational rational_from_document(const ApproximantDocument& doc) {
    const std::size_t m = doc.support_nodes.size();
    if (doc.weight_real.size() != m || doc.weight_imag.size() != m ||
        doc.support_value_real.size() != m ||
        doc.support_value_imag.size() != m)
        throw DomainError("inconsistent field lengths in document");
    BarycentricRational r;
    r.degree_n = doc.n;
    r.support_nodes = doc.support_nodes;
    r.weights.resize(m);
    r.support_values.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        r.weights[k] = {doc.weight_real[k], doc.weight_imag[k]};
        r.support_values[k] = {doc.support_value_real[k],
                               doc.support_value_imag[k]};
    }
    return r;
}

void fill_function_fields(ApproximantDocument& doc,
                          const BarycentricRational& r) {
    const std::size_t m = r.support_nodes.size();
    doc.support_nodes = r.support_nodes;
    doc.weight_real.resize(m);
    doc.weight_imag.resize(m);
    doc.support_value_real.resize(m);
    doc.support_value_imag.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        doc.weight_real[k] = r.weights[k].real();
        doc.weight_imag[k] = r.weights[k].imag();
        doc.support_value_real[k] = r.support_values[k].real();
        doc.support_value_imag[k] = r.support_values[k].imag();
    }
    const PoleZeroSet pz = poles_zeros(r);
    doc.poles_real.resize(pz.poles.size());
    doc.poles_imag.resize(pz.poles.size());
    for (std::size_t k = 0; k < pz.poles.size(); ++k) {
        doc.poles_real[k] = pz.poles[k].real();
        doc.poles_imag[k] = pz.poles[k].imag();
    }
    doc.zeros_real.resize(pz.zeros.size());
    doc.zeros_imag.resize(pz.zeros.size());
    for (std::size_t k = 0; k < pz.zeros.size(); ++k) {
        doc.zeros_real[k] = pz.zeros[k].real();
        doc.zeros_imag[k] = pz.zeros[k].imag();
    }
}

}  // namespace unirat
