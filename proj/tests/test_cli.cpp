#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "qwalk/cli.hpp"
#include "qwalk/exactsim.hpp"

using namespace qwalk;
using namespace qwalk::cli;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qwalk");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::size_t col(const std::string &name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    return static_cast<std::size_t>(it - header.begin());
  }
};

std::vector<std::string> split(const std::string &line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Csv parse_csv(const std::string &text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find(" = ");
      if (eq != std::string::npos) csv.meta[line.substr(2, eq - 2)] = line.substr(eq + 3);
      continue;
    }
    if (csv.header.empty()) {
      csv.header = split(line, ',');
      continue;
    }
    std::vector<double> row;
    for (const auto &cell : split(line, ',')) row.push_back(std::stod(cell));
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("parse_tau", "[cli]") {
  CHECK(parse_tau("0.75") == 0.75);
  CHECK(parse_tau("3/4") == 0.75);
  CHECK(parse_tau(" 1/3 ") == 1.0 / 3.0);
  CHECK(parse_tau("1e-1") == 0.1);
  CHECK_THROWS_AS(parse_tau("abc"), UsageError);
  CHECK_THROWS_AS(parse_tau("1/0"), UsageError);
  CHECK_THROWS_AS(parse_tau("0.5x"), UsageError);
}

TEST_CASE("parse_initial", "[cli]") {
  const Spinor v = parse_initial("0.70710678,0,0,0.70710678");
  CHECK(std::abs(v.norm2() - 1.0) < 1e-15);
  CHECK(v.left.imag() == 0.0);
  CHECK(v.right.real() == 0.0);
  CHECK(parse_initial("1,0,0,0").left == cplx(1.0));
  CHECK_THROWS_AS(parse_initial("1,0,0"), UsageError);
  CHECK_THROWS_AS(parse_initial("1,0,0,x"), UsageError);
  CHECK_THROWS_AS(parse_initial("1,0,1,0"), DomainError);
  try {
    parse_initial("1,0,1,0");
  } catch (const DomainError &e) {
    CHECK(std::string(e.what()).find("= 2") != std::string::npos);
  }
}

TEST_CASE("simulate ballistic example", "[cli]") {
  const auto r = invoke({"simulate", "--tau1", "0", "--tau2", "0", "--steps", "10", "--initial", "1,0,0,0"});
  REQUIRE(r.code == kExitOk);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 11);
  const auto n = csv.col("n");
  const auto p = csv.col("prob");
  for (const auto &row : csv.rows) {
    if (row[n] == -10)
      CHECK(row[p] == 1.0);
    else
      CHECK(row[p] == 0.0);
  }
  CHECK(csv.meta.at("command") == "simulate");
  CHECK(csv.meta.at("steps") == "10");
}

TEST_CASE("simulate output round-trips through CSV", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "qwalk_test_roundtrip.csv";
  const auto r = invoke({"simulate", "--tau1", "0.5", "--tau2", "0", "--steps", "100", "--initial",
                         "0.70710678,0,0,0.70710678", "-o", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  const Csv csv = parse_csv(text);
  REQUIRE(csv.rows.size() == 101);
  double total = 0.0;
  const auto n = csv.col("n");
  const auto p = csv.col("prob");
  for (const auto &row : csv.rows) {
    CHECK(static_cast<std::int64_t>(row[n]) % 2 == 0);
    double recomputed = 0.0;
    for (const char *c : {"re_left", "im_left", "re_right", "im_right"}) recomputed += row[csv.col(c)] * row[csv.col(c)];
    CHECK(std::abs(recomputed - row[p]) < 1e-15);
    total += row[p];
  }
  CHECK(std::abs(total - 1.0) <= 1e-9);
  CHECK(std::abs(std::stod(csv.meta.at("total_probability")) - 1.0) <= 1e-12);

  // Same probabilities as the library.
  const auto d = probability(evolve(initial_state(parse_initial("0.70710678,0,0,0.70710678")), make_params(0.5, 0.0), 100));
  for (const auto &row : csv.rows) CHECK(row[p] == d.at(static_cast<std::int64_t>(row[n])));
}

TEST_CASE("compare table", "[cli]") {
  const auto r = invoke({"compare", "--tau1", "3/4", "--tau2", "1/2", "--steps", "100"});
  REQUIRE(r.code == kExitOk);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 101);
  for (const auto &row : csv.rows) {
    CHECK(std::abs(row[csv.col("prob")] - row[csv.col("prob_spectral")]) <= 1e-9);
    CHECK(row[csv.col("spectral_err")] <= 1e-9);
    CHECK(row[csv.col("abs_err")] == std::abs(row[csv.col("prob_asym")] - row[csv.col("prob")]));
  }
  CHECK(std::stod(csv.meta.at("middle_l1_err_two_saddle")) < std::stod(csv.meta.at("middle_l1_err_single_saddle")));
  CHECK(std::stod(csv.meta.at("max_spectral_err")) <= 1e-9);
}

TEST_CASE("asymptotic table flags the decay region", "[cli]") {
  const auto r = invoke({"asymptotic", "--tau1", "0.5", "--tau2", "0", "--steps", "100"});
  REQUIRE(r.code == kExitOk);
  const Csv csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 101);
  const auto decay = csv.col("decay");
  const auto p = csv.col("prob");
  for (const auto &row : csv.rows) {
    const double n = row[csv.col("n")];
    if (std::abs(n) / 100.0 > std::sqrt(0.5)) {
      CHECK(row[decay] == 1.0);
      CHECK(row[p] == 0.0);
    } else {
      CHECK(row[decay] == 0.0);
    }
  }
}

TEST_CASE("json output parses and mirrors the table", "[cli]") {
  const auto r = invoke({"simulate", "--steps", "6", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("config").at("command") == "simulate");
  CHECK(doc.at("config").at("steps") == 6);
  REQUIRE(doc.at("rows").size() == 7);
  double total = 0.0;
  for (const auto &row : doc.at("rows")) {
    CHECK(row.at("n").is_number_integer());
    total += row.at("prob").get<double>();
  }
  CHECK(std::abs(total - 1.0) < 1e-12);
  CHECK(doc.at("summary").contains("variance"));
}

TEST_CASE("spectrum and density tables", "[cli]") {
  const auto s = invoke({"spectrum", "--nodes", "8"});
  REQUIRE(s.code == kExitOk);
  const Csv sc = parse_csv(s.out);
  CHECK(sc.rows.size() == 9);
  for (const auto &row : sc.rows) {
    CHECK(std::abs(std::hypot(row[sc.col("re_lambda1")], row[sc.col("im_lambda1")]) - 1.0) < 1e-12);
  }

  const auto d = invoke({"density", "--steps", "200", "--grid", "51", "--seed", "5"});
  REQUIRE(d.code == kExitOk);
  const Csv dc = parse_csv(d.out);
  CHECK(dc.rows.size() == 51);
  CHECK(std::abs(std::stod(dc.meta.at("density_integral")) - 1.0) < 1e-6);
  CHECK(std::stod(dc.meta.at("ks_distance")) < 0.1);
  CHECK(dc.meta.count("pushforward_ks") == 1);
  double prev = 0.0;
  for (const auto &row : dc.rows) {
    CHECK(row[dc.col("cdf")] >= prev);
    prev = row[dc.col("cdf")];
  }
}

TEST_CASE("exit codes and diagnostics", "[cli]") {
  const auto bad_tau = invoke({"simulate", "--tau1", "1.5", "--tau2", "-0.1"});
  CHECK(bad_tau.code == kExitDomain);
  CHECK(count_lines(bad_tau.err) == 2);

  const auto unparsable = invoke({"simulate", "--tau1", "half"});
  CHECK(unparsable.code == kExitUsage);
  CHECK(count_lines(unparsable.err) == 1);

  const auto norm = invoke({"simulate", "--initial", "1,0,1,0"});
  CHECK(norm.code == kExitDomain);
  CHECK(norm.err.find("= 2") != std::string::npos);

  const auto degenerate = invoke({"asymptotic", "--tau1", "0.3", "--tau2", "0.3"});
  CHECK(degenerate.code == kExitDomain);
  CHECK(count_lines(degenerate.err) == 1);

  const auto nodes = invoke({"compare", "--steps", "50", "--nodes", "103"});
  CHECK(nodes.code == kExitDomain);
  CHECK(nodes.err.find("104") != std::string::npos);

  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"simulate", "--steps", "x"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"--help"}).code == kExitOk);
}
