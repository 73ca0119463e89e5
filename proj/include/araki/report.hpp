#pragma once

#include <string>

#include "json.hpp"

#include "araki/audit.hpp"
#include "araki/fermion.hpp"
#include "araki/lattice.hpp"

namespace araki {

/// Serializes with sorted keys and every floating-point value printed with
/// 17 significant digits, so equal inputs give byte-identical text.
std::string canonical_json(const nlohmann::json& j);

/// Non-finite values become the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);

nlohmann::json to_json(const AuditReport& report);
nlohmann::json to_json(const MISeries& series);
nlohmann::json to_json(const RationalEmbedding& e, const IntegralEmbedding& integral, long long max_dense_dim = 4096);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json big_to_json(const BigInt& x);

/// check,trial,parameter,lhs,rhs,margin; just the header line when the report is empty.
std::string audit_csv(const AuditReport& report);
/// window,value
std::string series_csv(const MISeries& series);

std::string format_double(double x);

/// Writes text to path; "-" or empty writes to stdout. Throws Error on I/O failure.
void write_output(const std::string& path, const std::string& text);

}  // namespace araki
