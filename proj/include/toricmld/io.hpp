#pragma once

// Exact-rational serialization: germ files (JSON), enumerated-set exports
// (CSV plus a structured document embedding the witness germs), and
// accumulation-report exports. Rationals travel as canonical "p/q" strings;
// floating-point literals are rejected everywhere.

#include <string>
#include <vector>

#include <json.hpp>

#include "toricmld/accumulation.hpp"
#include "toricmld/sets.hpp"

namespace toricmld {

using Json = nlohmann::ordered_json;

Rational parse_rational(const std::string& s);
// "1/2,1/3" -> vector; strict, no whitespace tolerance.
RationalVector parse_rational_vector(const std::string& s);
std::string format_vector(const RationalVector& v);

Json germ_to_json(const ToricGerm& germ);
ToricGerm germ_from_json(const Json& doc);
void write_germ_file(const std::string& path, const ToricGerm& germ);
ToricGerm read_germ_file(const std::string& path);

Json set_to_json(const EnumeratedMldSet& set);
// Reconstructs and revalidates: germs are rebuilt through their checked
// constructor and each value is checked against its witness pairing.
EnumeratedMldSet set_from_json(const Json& doc);
// Header value,s,x,a,germ; germ_refs fills the last column (one per entry).
std::string set_to_csv(const EnumeratedMldSet& set,
                       const std::vector<std::string>& germ_refs);
// Writes csv_path plus <csv_path>.germs/entry_<i>.germ files the CSV rows
// reference relatively.
void write_set_csv(const EnumeratedMldSet& set, const std::string& csv_path);

std::string report_to_csv(const AccumulationReport& rep);
std::string report_to_text(const AccumulationReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace toricmld
