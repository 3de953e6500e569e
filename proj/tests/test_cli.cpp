#include <cmath>
#include <numbers>

#include "chebsharp/report_io.hpp"
#include "cli_run.hpp"
#include "doctest.h"

using nlohmann::json;

TEST_CASE("verify exit codes") {
  CHECK(cli::run("verify theorem1 --n 12").status == 0);
  CHECK(cli::run("verify theorem2 --n 6").status == 0);
  CHECK(cli::run("verify askey-gasper --n 2..9").status == 0);
  CHECK(cli::run("verify robertson --n 5").status == 0);
  const auto bad = cli::run("verify theorem1 --n 12 --a 0.52");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAILED") != std::string::npos);
  CHECK(cli::run("verify theorem1 --n 1").status == 2);
  CHECK(cli::run("verify theorem9 --n 12").status == 2);
  CHECK(cli::run("verify theorem1 --n 12 --grid 1").status == 2);
  CHECK(cli::run("verify theorem1 --n 12 --tol -1").status == 2);
  CHECK(cli::run("verify theorem1 --n 9..4").status == 2);
  CHECK(cli::run("").status == 2);
}

TEST_CASE("verify json") {
  const auto r = cli::run("--format json verify theorem1 --n 12");
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("schema") == chebsharp::kSchemaVersion);
  CHECK(j.at("kind") == "verify");
  const auto rep = j.at("data").at(0).get<chebsharp::VerificationReport>();
  CHECK(rep.passed);
  CHECK(rep.equality_points.size() == 2);
  const auto again = json::parse(json(rep).dump()).get<chebsharp::VerificationReport>();
  CHECK(again == rep);
}

TEST_CASE("sharp-constant") {
  const auto one = cli::run("--format csv sharp-constant --n 2");
  CHECK(one.status == 0);
  CHECK(one.out.find("\n2,1\r\n") != std::string::npos);
  const auto r = cli::run("--format csv sharp-constant --n 4..16 --numeric");
  REQUIRE(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line.rfind("n,a_closed,a_numeric,diff", 0) == 0);
  int rows = 0;
  while (std::getline(is, line)) {
    const auto last = line.rfind(',');
    CHECK(std::abs(std::stod(line.substr(last + 1))) <= 1e-9);
    ++rows;
  }
  CHECK(rows == 13);
  CHECK(cli::run("sharp-constant --n 1").status == 2);
}

TEST_CASE("certificate") {
  const auto c12 = cli::run("--format json certificate --n 12");
  REQUIRE(c12.status == 0);
  const auto j = json::parse(c12.out);
  const auto rec = j.at("data").at("certificate").get<chebsharp::CertificateRecord>();
  int vanishing = 0;
  for (const auto& t : rec.terms) {
    if (t.vanishing) {
      ++vanishing;
      CHECK(t.k == 11);
    }
  }
  CHECK(vanishing == 1);
  const auto c13 = json::parse(cli::run("--format json certificate --n 13").out);
  for (const auto& t : c13.at("data").at("certificate").at("terms")) {
    CHECK(t.at("vanishing").get<bool>() == (t.at("k").get<int>() == 11));
  }
  const auto sub = cli::run("certificate --n 12 --a 0.4");
  CHECK(sub.status == 1);
  CHECK(cli::run("certificate --n 3").status == 2);
}

TEST_CASE("figure data") {
  for (int n : {12, 13}) {
    const auto r = cli::run("figure --n " + std::to_string(n) + " --points 2001");
    REQUIRE(r.status == 0);
    const auto rows = cli::parse_xy(r.out);
    REQUIRE(rows.size() == 2001);
    double mn = 1e300;
    for (const auto& [x, v] : rows) mn = std::min(mn, v);
    CHECK(mn >= -1e-10);
    const auto zs = cli::near_zeros(rows, 1e-3);
    const double step = 2.0 / 2000;
    std::vector<double> want = n % 2 == 0 ? std::vector<double>{-std::cos(std::numbers::pi / n), 1.0}
                                          : std::vector<double>{-1.0, -std::cos(2 * std::numbers::pi / n), 1.0};
    REQUIRE(zs.size() == want.size());
    for (std::size_t i = 0; i < zs.size(); ++i) CHECK(std::abs(zs[i] - want[i]) <= step);
  }
  const auto j = json::parse(cli::run("--format json figure --n 12 --points 11").out);
  CHECK(j.at("data").at("points").size() == 11);
}

TEST_CASE("ultra") {
  CHECK(cli::run("ultra --lambda 2 --n 10").status == 0);
  CHECK(cli::run("ultra --lambda 1 --n 30").status == 0);
  const auto ce = cli::run("--format json ultra --chebyshev-t --n-max 5");
  CHECK(ce.status == 1);
  const auto j = json::parse(ce.out).at("data");
  CHECK(j.at("counterexample").at("n") == 5);
  CHECK(j.at("counterexample").at("value").get<double>() == doctest::Approx(-4.0));
  CHECK(cli::run("ultra --lambda 0 --n 4").status == 2);
  CHECK(cli::run("ultra --n 4").status == 2);
}

TEST_CASE("out file") {
  const std::string path = "cli_out_test.csv";
  CHECK(cli::run("--format csv --out " + path + " figure --n 4 --points 3").status == 0);
  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[16] = {};
  CHECK(std::fread(buf, 1, 7, f) == 7);
  std::fclose(f);
  CHECK(std::string(buf) == "x,value");
  std::remove(path.c_str());
}
