#include "araki/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace araki {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

namespace {

void emit(const nlohmann::json& j, std::ostringstream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: keys already sorted
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(it.key()).dump() << ": ";
        emit(it.value(), out, indent + 2);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        emit(v, out, indent + 2);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

std::string canonical_json(const nlohmann::json& j) {
  std::ostringstream out;
  emit(j, out, 0);
  out << "\n";
  return out.str();
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"check", r.check},
                    {"trial", r.trial},
                    {"parameter", json_number(r.parameter)},
                    {"lhs", json_number(r.lhs)},
                    {"rhs", json_number(r.rhs)},
                    {"margin", json_number(r.margin())},
                    {"tolerance", json_number(r.tolerance)}});
  return {{"suite", report.suite},
          {"trials", report.trials},
          {"violations", report.violations},
          {"worst_margin", json_number(report.worst_margin)},
          {"rows", rows}};
}

nlohmann::json to_json(const MISeries& series) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < series.values.size(); ++i)
    rows.push_back({{"window", series.window_sizes[i]}, {"value", json_number(series.values[i])}});
  return {{"series", rows},
          {"extrapolated", json_number(series.extrapolated)},
          {"extrapolation_error", json_number(series.extrapolation_error)},
          {"fitted_order", json_number(series.fitted_order)}};
}

nlohmann::json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

nlohmann::json to_json(const RationalEmbedding& e, const IntegralEmbedding& integral, long long max_dense_dim) {
  const Eigen::Index n = e.rank();
  nlohmann::json blocks = nlohmann::json::array();
  for (std::size_t b = 0; b < e.block_sizes.size(); ++b) {
    nlohmann::json values = nlohmann::json::array();
    nlohmann::json int_values = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      values.push_back(to_string(e.values(i, static_cast<Eigen::Index>(b))));
      int_values.push_back(big_to_json(integral.values(i, static_cast<Eigen::Index>(b))));
    }
    blocks.push_back({{"multiplicity", big_to_json(e.block_sizes[b])}, {"values", values}, {"integer_values", int_values}});
  }
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& r : e.residuals) residuals.push_back(to_string(r));

  nlohmann::json out = {{"rank", n},
                        {"r", big_to_json(e.dimension())},
                        {"k", big_to_json(integral.k)},
                        {"blocks", blocks},
                        {"residuals", residuals}};

  if (auto dense = e.expand(max_dense_dim)) {
    nlohmann::json vectors = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      nlohmann::json v = nlohmann::json::array();
      for (Eigen::Index c = 0; c < dense->cols(); ++c) v.push_back(to_string((*dense)(i, c)));
      vectors.push_back(v);
    }
    out["vectors"] = vectors;
  }
  if (auto dense = integral.expand(max_dense_dim)) {
    nlohmann::json vectors = nlohmann::json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
      nlohmann::json v = nlohmann::json::array();
      for (Eigen::Index c = 0; c < dense->cols(); ++c) v.push_back(big_to_json((*dense)(i, c)));
      vectors.push_back(v);
    }
    out["integer_vectors"] = vectors;
  }
  return out;
}

std::string audit_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "check,trial,parameter,lhs,rhs,margin\n";
  for (const auto& r : report.rows)
    out << r.check << ',' << r.trial << ',' << format_double(r.parameter) << ',' << format_double(r.lhs) << ','
        << format_double(r.rhs) << ',' << format_double(r.margin()) << '\n';
  return out.str();
}

std::string series_csv(const MISeries& series) {
  std::ostringstream out;
  out << "window,value\n";
  for (std::size_t i = 0; i < series.values.size(); ++i)
    out << series.window_sizes[i] << ',' << format_double(series.values[i]) << '\n';
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open output file " + path);
  f << text;
  if (!f) throw Error("failed writing output file " + path);
}

}  // namespace araki
