#pragma once

#include <string>
#include <vector>

#include "enriques/invariants.hpp"
#include "enriques/modular.hpp"

namespace enriques {

// Always "num/den" (den included even when 1), per the CLI contract.
std::string rational_frac_string(const Rational& r);

// JSON emission. All objects serialize with sorted, deterministic entry
// order; two identical inputs produce identical bytes.
std::string qseries_to_json(const QSeries& a);
QSeries qseries_from_json(const std::string& text);

std::string ring_element_to_json(const RingElement& e);
std::string e8qseries_to_json(const E8QSeries& a);
std::string mukai_vector_to_json(const MukaiVector& v);

std::string omega_table_to_json(const OmegaTable& t);
OmegaTable omega_table_from_json(const std::string& text);

// RFC 4180 CSV: fields containing comma, quote, CR or LF are quoted with
// embedded quotes doubled; rows end in CRLF.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace enriques
