#pragma once

#include <string>
#include <variant>

#include "bargmann/coefficients.hpp"

namespace bargmann {

/// Any coefficient document the library reads or writes.
/// JSON layout: {"nu": real, "basis": <name>, "coeffs": ...} with
///   hermite      entries [re, im] (or [w, x, y, z] for H-valued inputs)
///   fock1, a2    entries [re, im]
///   fock2        rows of entries [re, im]
///   slice        entries [w, x, y, z]
/// Decimal fidelity: values round-trip exactly (shortest representation
/// that restores the double, at least 17 significant digits when needed).
using CoefficientDocument = std::variant<HermiteCoeffs, HermiteCoeffsQ, FockCoeffs1, FockCoeffs2,
                                         ASubspaceCoeffs, SliceRegularSeries>;

/// "hermite", "fock1", "fock2", "a2" or "slice".
std::string basis_name(const CoefficientDocument& doc);

double document_nu(const CoefficientDocument& doc);

std::string to_json_string(const CoefficientDocument& doc, int indent = 2);

/// Throws std::invalid_argument on malformed documents.
CoefficientDocument parse_coefficient_document(const std::string& json_text);

CoefficientDocument read_coefficient_document(const std::string& path);
void write_coefficient_document(const std::string& path, const CoefficientDocument& doc);

}  // namespace bargmann
