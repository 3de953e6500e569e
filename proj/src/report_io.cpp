#include "chebsharp/report_io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

namespace chebsharp {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

const char* region_kind_name(SignRegion::Kind k) {
  switch (k) {
    case SignRegion::Kind::whole_interval: return "whole_interval";
    case SignRegion::Kind::left_half: return "left_half";
    case SignRegion::Kind::identically_zero: return "identically_zero";
  }
  return "?";
}

SignRegion::Kind region_kind_from(const std::string& s) {
  if (s == "whole_interval") return SignRegion::Kind::whole_interval;
  if (s == "left_half") return SignRegion::Kind::left_half;
  if (s == "identically_zero") return SignRegion::Kind::identically_zero;
  throw std::invalid_argument("unknown sign region kind: " + s);
}

json region_to_json(const SignRegion& r) {
  return {{"kind", region_kind_name(r.kind)},
          {"lo", r.lo},
          {"hi", r.hi},
          {"lo_open", r.lo_open},
          {"hi_open", r.hi_open}};
}

SignRegion region_from_json(const json& j) {
  return {region_kind_from(j.at("kind").get<std::string>()), j.at("lo").get<double>(),
          j.at("hi").get<double>(), j.at("lo_open").get<bool>(), j.at("hi_open").get<bool>()};
}

}  // namespace

CertificateRecord to_record(const Certificate& cert) {
  CertificateRecord rec{cert.degree().value(), cert.a(), cert.boundary_coefficient(), {}};
  for (const auto& t : cert.terms()) {
    rec.terms.push_back({t.k, t.parity == Parity::even ? "even" : "odd", t.node, t.constant, t.slope,
                         t.vanishing, t.claimed, t.positive_lo, t.positive_hi});
  }
  return rec;
}

void to_json(json& j, const VerificationReport& r) {
  json violations = json::array();
  for (const auto& [x, v] : r.violations) violations.push_back({{"x", x}, {"value", v}});
  j = {{"subject", r.subject},
       {"interval", {r.lo, r.hi}},
       {"grid_points", r.grid_points},
       {"min_value", r.min_value},
       {"argmin", r.argmin},
       {"equality_points", r.equality_points},
       {"violations", violations},
       {"identically_zero", r.identically_zero},
       {"notes", r.notes},
       {"passed", r.passed}};
}

void from_json(const json& j, VerificationReport& r) {
  r.subject = j.at("subject").get<std::string>();
  r.lo = j.at("interval").at(0).get<double>();
  r.hi = j.at("interval").at(1).get<double>();
  r.grid_points = j.at("grid_points").get<int>();
  r.min_value = j.at("min_value").get<double>();
  r.argmin = j.at("argmin").get<double>();
  r.equality_points = j.at("equality_points").get<std::vector<double>>();
  r.violations.clear();
  for (const auto& v : j.at("violations")) {
    r.violations.emplace_back(v.at("x").get<double>(), v.at("value").get<double>());
  }
  r.identically_zero = j.at("identically_zero").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.passed = j.at("passed").get<bool>();
}

void to_json(json& j, const CertificateRecord& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"k", t.k},
                     {"parity", t.parity},
                     {"node", t.node},
                     {"coefficients", {{"constant", t.constant}, {"slope", t.slope}}},
                     {"vanishing", t.vanishing},
                     {"sign_region", region_to_json(t.sign_region)},
                     {"positive_part", {number_or_null(t.positive_lo), number_or_null(t.positive_hi)}}});
  }
  j = {{"n", r.n}, {"a", r.a}, {"boundary_coefficient", r.boundary_coefficient}, {"terms", terms}};
}

void from_json(const json& j, CertificateRecord& r) {
  r.n = j.at("n").get<int>();
  r.a = j.at("a").get<double>();
  r.boundary_coefficient = j.at("boundary_coefficient").get<double>();
  r.terms.clear();
  for (const auto& t : j.at("terms")) {
    r.terms.push_back({t.at("k").get<int>(), t.at("parity").get<std::string>(), t.at("node").get<double>(),
                       t.at("coefficients").at("constant").get<double>(),
                       t.at("coefficients").at("slope").get<double>(), t.at("vanishing").get<bool>(),
                       region_from_json(t.at("sign_region")), number_from(t.at("positive_part").at(0)),
                       number_from(t.at("positive_part").at(1))});
  }
}

void to_json(json& j, const CertificateReport& r) {
  json checks = json::array();
  for (const auto& c : r.term_checks) {
    checks.push_back({{"k", c.k},
                      {"passed", c.passed},
                      {"worst_x", c.worst_x},
                      {"worst_value", number_or_null(c.worst_value)}});
  }
  j = {{"n", r.n.value()},
       {"a", r.a},
       {"grid_points", r.grid_points},
       {"reconstruction_error", r.reconstruction_error},
       {"reconstruction_worst_x", r.reconstruction_worst_x},
       {"term_checks", checks},
       {"signs_ok", r.signs_ok},
       {"witness",
        {{"k", r.witness_k},
         {"x", r.witness_x},
         {"via_certificate", r.witness_via_certificate},
         {"direct", r.witness_direct},
         {"expected", r.witness_expected},
         {"other_terms", r.witness_other_terms},
         {"ok", r.witness_ok}}},
       {"passed", r.passed}};
}

void to_json(json& j, const CounterexampleSearch& r) {
  j = {{"n_range", {r.n_min, r.n_max}}, {"grid_points", r.grid_points}};
  if (r.hit) {
    j["counterexample"] = {{"n", r.hit->n}, {"x", r.hit->x}, {"value", r.hit->value}};
  } else {
    j["counterexample"] = nullptr;
  }
}

json envelope(const std::string& kind, json payload) {
  return {{"schema", kSchemaVersion}, {"kind", kind}, {"data", std::move(payload)}};
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
  for (const auto& h : header) field(h);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) os_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(double v) {
  separator();
  os_ << format_double(v);
  return *this;
}

CsvWriter& CsvWriter::field(int v) {
  separator();
  os_ << v;
  return *this;
}

CsvWriter& CsvWriter::field(const std::string& v) {
  separator();
  if (v.find_first_of(",\"\r\n") == std::string::npos) {
    os_ << v;
    return *this;
  }
  os_ << '"';
  for (char c : v) {
    if (c == '"') os_ << '"';
    os_ << c;
  }
  os_ << '"';
  return *this;
}

void CsvWriter::end_row() {
  os_ << "\r\n";
  row_started_ = false;
}

}  // namespace chebsharp
