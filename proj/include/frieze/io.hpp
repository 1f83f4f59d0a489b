// io.hpp
//
// JSON and CSV serialization plus the offset triangular text layout.
//
// Formats:
//   frieze (exact):    {"kind":"exact","n":N,"width":W,
//                       "first_row":[{"num":"p","den":"q"},...]}
//                      with optional "entries": rows 1..W, each a full
//                      period of "p/q" strings in entry order.
//   frieze (float64):  {"kind":"float64","n":N,"width":W,"first_row":[x,...]}
//   triangulation:     {"n":N,"diagonals":[[p,q],...]}  (p < q)
//   sequences/CSV:     lines "i,value"; exact values print as "p/q".
// Rational tokens on input accept integers ("41") and fractions ("18/41").
#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze/cyclic.hpp"
#include "frieze/deformation.hpp"
#include "frieze/errors.hpp"
#include "frieze/geometry.hpp"
#include "frieze/pattern.hpp"
#include "frieze/rational.hpp"
#include "frieze/search.hpp"
#include "frieze/sign_analysis.hpp"
#include "frieze/triangulation.hpp"

namespace frieze {

using json = nlohmann::json;

inline json rational_to_json(const Rational& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_object()) {
    Integer num{j.at("num").get<std::string>()};
    Integer den{j.at("den").get<std::string>()};
    return make_rational(std::move(num), std::move(den));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("expected a rational value");
}

inline json sequence_to_json(const std::vector<Rational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

inline json sequence_to_json(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

template <class Scalar>
json sequence_to_json(const CyclicSeq<Scalar>& seq) {
  return sequence_to_json(seq.values());
}

// ---------------------------------------------------------------------------
// Friezes

inline json frieze_to_json(const FriezeQ& f, bool include_entries = false) {
  json j{{"kind", "exact"}, {"n", f.period()}, {"width", f.width()}};
  json row = json::array();
  for (const auto& a : f.first_row()) row.push_back(rational_to_json(a));
  j["first_row"] = std::move(row);
  if (include_entries) {
    json rows = json::array();
    for (int k = 1; k <= f.width(); ++k) rows.push_back(sequence_to_json(f.row(k)));
    j["entries"] = std::move(rows);
  }
  return j;
}

inline json frieze_to_json(const FriezeD& f, bool include_entries = false) {
  json j{{"kind", "float64"}, {"n", f.period()}, {"width", f.width()}};
  j["first_row"] = sequence_to_json(f.first_row());
  if (include_entries) {
    json rows = json::array();
    for (int k = 1; k <= f.width(); ++k) rows.push_back(sequence_to_json(f.row(k)));
    j["entries"] = std::move(rows);
  }
  return j;
}

inline bool frieze_json_is_exact(const json& j) {
  if (j.contains("kind")) return j.at("kind").get<std::string>() == "exact";
  const auto& row = j.at("first_row");
  return !row.empty() && (row.front().is_object() || row.front().is_string());
}

inline FriezeQ frieze_q_from_json(const json& j) {
  std::vector<Rational> row;
  for (const auto& v : j.at("first_row")) row.push_back(rational_from_json(v));
  return FriezeQ::build_from_first_row(row);
}

inline FriezeD frieze_d_from_json(const json& j) {
  std::vector<double> row;
  for (const auto& v : j.at("first_row")) row.push_back(v.get<double>());
  return FriezeD::build_from_first_row(row);
}

// ---------------------------------------------------------------------------
// Triangulations and polygons

inline json triangulation_to_json(const Triangulation& t) {
  json diags = json::array();
  for (const auto& [p, q] : t.diagonals()) diags.push_back(json::array({p, q}));
  return json{{"n", t.polygon_size()}, {"diagonals", std::move(diags)}};
}

inline Triangulation triangulation_from_json(const json& j) {
  std::vector<Triangulation::Diagonal> diags;
  for (const auto& d : j.at("diagonals")) diags.emplace_back(d.at(0).get<int>(), d.at(1).get<int>());
  return Triangulation(j.at("n").get<int>(), std::move(diags));
}

inline json polygon_to_json(const ProjectivePolygon& p) {
  return json{{"n", p.n}, {"angles", p.angles}, {"radii", p.radii}};
}

inline ProjectivePolygon polygon_from_json(const json& j) {
  ProjectivePolygon p;
  p.n = j.at("n").get<int>();
  p.angles = j.at("angles").get<std::vector<double>>();
  p.radii = j.at("radii").get<std::vector<double>>();
  if (static_cast<int>(p.angles.size()) != p.n || static_cast<int>(p.radii.size()) != p.n)
    throw std::invalid_argument("polygon arrays must have length n");
  return p;
}

inline json polygon_to_json(const EquilateralPolygon& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) verts.push_back(json::array({v.x, v.y}));
  return json{{"n", p.n}, {"vertices", std::move(verts)}, {"convex", p.convex}};
}

inline EquilateralPolygon equilateral_from_json(const json& j) {
  EquilateralPolygon p;
  p.n = j.at("n").get<int>();
  for (const auto& v : j.at("vertices"))
    p.vertices.push_back(Vec2<double>{v.at(0).get<double>(), v.at(1).get<double>()});
  p.convex = j.value("convex", true);
  if (static_cast<int>(p.vertices.size()) != p.n)
    throw std::invalid_argument("vertex array must have length n");
  return p;
}

// ---------------------------------------------------------------------------
// Verdicts and reports

inline constexpr const char* kSignConvention = "zeros-skipped";

template <class Scalar>
json check_to_json(const SignChangeCheck<Scalar>& check) {
  return json{{"k", check.k},
              {"count", check.count},
              {"verdict", to_string(check.verdict)},
              {"sequence", sequence_to_json(check.difference)},
              {"sign_convention", kSignConvention}};
}

inline json cert_to_json(const ViolationCert& cert) {
  return json{{"first_row_a", sequence_to_json(cert.first_row_a)},
              {"first_row_b", sequence_to_json(cert.first_row_b)},
              {"k", cert.k},
              {"difference", sequence_to_json(cert.difference)},
              {"count", cert.count}};
}

inline ViolationCert cert_from_json(const json& j) {
  ViolationCert cert;
  for (const auto& v : j.at("first_row_a")) cert.first_row_a.push_back(rational_from_json(v));
  for (const auto& v : j.at("first_row_b")) cert.first_row_b.push_back(rational_from_json(v));
  cert.k = j.at("k").get<int>();
  for (const auto& v : j.at("difference")) cert.difference.push_back(rational_from_json(v));
  cert.count = j.at("count").get<int>();
  return cert;
}

inline json report_to_json(const ScanReport& report) {
  json mins = json::object();
  for (const auto& [k, c] : report.min_count_per_k) mins[std::to_string(k)] = c;
  json violations = json::array();
  for (const auto& cert : report.violations) violations.push_back(cert_to_json(cert));
  return json{{"scope", report.scope},
              {"pairs_checked", report.pairs_checked},
              {"degenerate_rows", report.degenerate_rows},
              {"min_count_per_k", std::move(mins)},
              {"violations", std::move(violations)},
              {"truncated", report.truncated},
              {"sign_convention", kSignConvention}};
}

inline json validation_to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues)
    issues.push_back(json{{"category", issue.category},
                          {"i", issue.i},
                          {"d", issue.d},
                          {"message", issue.message}});
  return json{{"ok", report.ok}, {"violations", std::move(issues)}};
}

inline json residuals_to_json(const HarmonicResiduals& r) {
  return json{{"constant", r.constant}, {"sine", r.sine}, {"cosine", r.cosine}, {"scale", r.scale}};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string sequence_to_csv(const std::vector<Rational>& values) {
  std::string out = "i,value\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    out += std::to_string(i) + "," + to_string(values[i]) + "\n";
  return out;
}

inline std::string sequence_to_csv(const std::vector<double>& values) {
  std::ostringstream out;
  out << "i,value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i) out << i << "," << values[i] << "\n";
  return out.str();
}

template <class Scalar>
std::string sequence_to_csv(const CyclicSeq<Scalar>& seq) {
  return sequence_to_csv(seq.values());
}

// ---------------------------------------------------------------------------
// Text layout

// The classical offset layout: border rows of 1s, interior rows phased
// exactly as display_row, every other row shifted half a cell.
template <class Scalar>
std::string pretty_frieze(const FriezePattern<Scalar>& f) {
  const int n = f.period();
  const int w = f.width();
  std::vector<std::vector<std::string>> rows;
  auto render = [&](const std::vector<Scalar>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) {
      if constexpr (FriezePattern<Scalar>::is_exact) {
        out.push_back(to_string(v));
      } else {
        std::ostringstream ss;
        ss << std::setprecision(6) << v;
        out.push_back(ss.str());
      }
    }
    return out;
  };
  rows.push_back(std::vector<std::string>(n, "1"));
  for (int k = 1; k <= w; ++k) rows.push_back(render(f.display_row(k)));
  rows.push_back(std::vector<std::string>(n, "1"));

  std::size_t cell = 0;
  for (const auto& row : rows)
    for (const auto& tok : row) cell = std::max(cell, tok.size());
  cell += 2;

  std::string out;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    std::string line((r % 2 == 0) ? cell / 2 : 0, ' ');
    for (const auto& tok : rows[r]) {
      std::string padded = tok;
      padded.resize(cell, ' ');
      line += padded;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace frieze
