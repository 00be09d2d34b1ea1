#include "bargmann/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bargmann {

namespace {

using json = nlohmann::json;

json complex_entry(Complex v) { return json::array({v.real(), v.imag()}); }
json quaternion_entry(const Quaternion& v) { return json::array({v.w, v.x, v.y, v.z}); }

Complex parse_complex(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("coefficient document: expected [re, im] entry");
    return {j[0].get<double>(), j[1].get<double>()};
}

Quaternion parse_quaternion(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("coefficient document: expected [w, x, y, z] entry");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json coeffs_json(const CoefficientDocument& doc) {
    json coeffs = json::array();
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, HermiteCoeffs>) {
                for (const Complex& v : d.c) coeffs.push_back(complex_entry(v));
            } else if constexpr (std::is_same_v<T, HermiteCoeffsQ>) {
                for (const Quaternion& v : d.c) coeffs.push_back(quaternion_entry(v));
            } else if constexpr (std::is_same_v<T, FockCoeffs1>) {
                for (const Complex& v : d.a) coeffs.push_back(complex_entry(v));
            } else if constexpr (std::is_same_v<T, FockCoeffs2>) {
                for (std::size_t m = 0; m < d.rows; ++m) {
                    json row = json::array();
                    for (std::size_t n = 0; n < d.cols; ++n)
                        row.push_back(complex_entry(d.at(m, n)));
                    coeffs.push_back(row);
                }
            } else if constexpr (std::is_same_v<T, ASubspaceCoeffs>) {
                for (const Complex& v : d.b) coeffs.push_back(complex_entry(v));
            } else {
                for (const Quaternion& v : d.c) coeffs.push_back(quaternion_entry(v));
            }
        },
        doc);
    return coeffs;
}

}  // namespace

std::string basis_name(const CoefficientDocument& doc) {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, HermiteCoeffs> || std::is_same_v<T, HermiteCoeffsQ>)
                return "hermite";
            else if constexpr (std::is_same_v<T, FockCoeffs1>)
                return "fock1";
            else if constexpr (std::is_same_v<T, FockCoeffs2>)
                return "fock2";
            else if constexpr (std::is_same_v<T, ASubspaceCoeffs>)
                return "a2";
            else
                return "slice";
        },
        doc);
}

double document_nu(const CoefficientDocument& doc) {
    return std::visit([](const auto& d) { return d.nu; }, doc);
}

std::string to_json_string(const CoefficientDocument& doc, int indent) {
    json j;
    j["nu"] = document_nu(doc);
    j["basis"] = basis_name(doc);
    j["coeffs"] = coeffs_json(doc);
    return j.dump(indent);
}

CoefficientDocument parse_coefficient_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("coefficient document: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nu") || !j.contains("basis") || !j.contains("coeffs"))
        throw std::invalid_argument("coefficient document: need nu, basis and coeffs");
    const double nu = j.at("nu").get<double>();
    if (!(nu > 0.0)) throw std::invalid_argument("coefficient document: nu must be positive");
    const std::string basis = j.at("basis").get<std::string>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array())
        throw std::invalid_argument("coefficient document: coeffs must be an array");

    if (basis == "hermite") {
        const bool quaternionic =
            !coeffs.empty() && coeffs.front().is_array() && coeffs.front().size() == 4;
        if (quaternionic) {
            HermiteCoeffsQ d;
            d.nu = nu;
            for (const json& e : coeffs) d.c.push_back(parse_quaternion(e));
            return d;
        }
        HermiteCoeffs d;
        d.nu = nu;
        for (const json& e : coeffs) d.c.push_back(parse_complex(e));
        return d;
    }
    if (basis == "fock1") {
        FockCoeffs1 d;
        d.nu = nu;
        for (const json& e : coeffs) d.a.push_back(parse_complex(e));
        return d;
    }
    if (basis == "fock2") {
        const std::size_t rows = coeffs.size();
        std::size_t cols = 0;
        for (const json& row : coeffs) {
            if (!row.is_array())
                throw std::invalid_argument("coefficient document: fock2 rows must be arrays");
            cols = std::max(cols, row.size());
        }
        FockCoeffs2 d = FockCoeffs2::zero(nu, std::max<std::size_t>(rows, 1),
                                          std::max<std::size_t>(cols, 1));
        for (std::size_t m = 0; m < rows; ++m)
            for (std::size_t n = 0; n < coeffs[m].size(); ++n)
                d.at(m, n) = parse_complex(coeffs[m][n]);
        return d;
    }
    if (basis == "a2") {
        ASubspaceCoeffs d;
        d.nu = nu;
        for (const json& e : coeffs) d.b.push_back(parse_complex(e));
        return d;
    }
    if (basis == "slice") {
        SliceRegularSeries d;
        d.nu = nu;
        for (const json& e : coeffs) d.c.push_back(parse_quaternion(e));
        return d;
    }
    throw std::invalid_argument("coefficient document: unknown basis '" + basis + "'");
}

CoefficientDocument read_coefficient_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficient_document(buf.str());
}

void write_coefficient_document(const std::string& path, const CoefficientDocument& doc) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << to_json_string(doc) << '\n';
}

}  // namespace bargmann
