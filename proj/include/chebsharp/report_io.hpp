#ifndef CHEBSHARP_REPORT_IO_HPP
#define CHEBSHARP_REPORT_IO_HPP

// JSON and CSV serialization of reports and certificates. Every JSON
// document carries a top-level "schema" version.

#include <iosfwd>
#include "json.hpp"
#include <string>
#include <vector>

#include "chebsharp/hermite_cert.hpp"
#include "chebsharp/inequalities.hpp"
#include "chebsharp/ultraspherical.hpp"

namespace chebsharp {

inline constexpr int kSchemaVersion = 1;

/// Plain-data image of a Certificate, as written to JSON.
struct CertificateRecord {
  struct Term {
    int k;
    std::string parity;
    double node;
    double constant;
    double slope;
    bool vanishing;
    SignRegion sign_region;
    double positive_lo;
    double positive_hi;

    friend bool operator==(const Term&, const Term&) = default;
  };
  int n;
  double a;
  double boundary_coefficient;
  std::vector<Term> terms;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

[[nodiscard]] CertificateRecord to_record(const Certificate& cert);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);
void to_json(nlohmann::json& j, const CertificateRecord& r);
void from_json(const nlohmann::json& j, CertificateRecord& r);
void to_json(nlohmann::json& j, const CertificateReport& r);
void to_json(nlohmann::json& j, const CounterexampleSearch& r);

/// {"schema": 1, "kind": kind, "data": payload}
[[nodiscard]] nlohmann::json envelope(const std::string& kind, nlohmann::json payload);

/// Shortest round-trip decimal form, independent of the global locale.
[[nodiscard]] std::string format_double(double v);

/// RFC 4180 style writer: header row, comma separated, quotes when needed.
class CsvWriter {
public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);
  CsvWriter& field(double v);
  CsvWriter& field(int v);
  CsvWriter& field(const std::string& v);
  void end_row();

private:
  void separator();
  std::ostream& os_;
  bool row_started_ = false;
};

}  // namespace chebsharp

#endif  // CHEBSHARP_REPORT_IO_HPP
