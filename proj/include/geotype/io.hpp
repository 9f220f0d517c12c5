#ifndef GEOTYPE_IO_HPP
#define GEOTYPE_IO_HPP

#include <string>

#include "geotype/boundary.hpp"
#include "geotype/codes.hpp"
#include "geotype/core.hpp"

namespace geotype {

// On-disk document for a geometric type: a JSON object with the fields
// format_version ("1"), n, hv (n pairs [h_i, v_i]), rho (alpha pairs [k, l]
// over horizontal labels in lexicographic order) and epsilon (alpha values
// of -1 or 1). All indices are 1-based. Parsing yields a candidate
// quadruple; validate() decides semantic correctness.
GeometricType parse_type(const std::string& text);
std::string serialize_type(const GeometricType& t);

// Code literals. Bi-infinite: "(L)*.CORE.(R)*@anchor", e.g. "(1)*.1.(2)*@0"
// with an empty middle section for an empty core; the anchor is the index
// of the first core symbol (or of the right-period phase-0 symbol). Words
// are plain digit strings, or comma-separated for symbols above 9.
// One-sided: "TRANSIENT.(PERIOD)*", e.g. "1.(2)*" or "(2)*".
BiCode parse_bicode(const std::string& text);
std::string format_bicode(const BiCode& w);
std::string format_onesided(const OneSidedCode& c);

// Boundary label literals: "s:+1", "s:-1", "u:+2", "u:-2".
BoundaryLabel parse_boundary_label(const std::string& text);
std::string format_boundary_label(const BoundaryLabel& lbl);

}  // namespace geotype

#endif  // GEOTYPE_IO_HPP
