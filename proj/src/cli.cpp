#include "qwalk/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <tuple>

#include "qwalk/asymptotics.hpp"
#include "qwalk/exactsim.hpp"
#include "qwalk/params.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/weaklimit.hpp"

namespace qwalk::cli {

namespace {

constexpr double kMiddleFraction = 0.6;
constexpr std::size_t kPushforwardSamples = 100000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_whole(std::string_view s, T &value) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_cell(double v, bool integer) {
  if (integer) return std::to_string(static_cast<std::int64_t>(v));
  return format_number(v);
}

PhaseParams config_params(const RunConfig &c) {
  return make_params(parse_tau(c.tau1), parse_tau(c.tau2));
}

bool needs_nondegenerate(Command c) { return c != Command::simulate; }
bool needs_positive_steps(Command c) { return c == Command::asymptotic || c == Command::compare; }

std::vector<Column> amplitude_columns() {
  return {{"n", true},       {"re_left", false},  {"im_left", false},
          {"re_right", false}, {"im_right", false}, {"prob", false}};
}

std::vector<double> amplitude_row(std::int64_t n, const Spinor &v) {
  return {static_cast<double>(n), v.left.real(), v.left.imag(), v.right.real(), v.right.imag(),
          v.norm2()};
}

bool outside_open_line(std::int64_t n, std::int64_t t) {
  return std::abs(static_cast<double>(n) / static_cast<double>(t)) >= 1.0 - 1e-9;
}

AsymptoticAmplitudes asymptotic_row(const PhaseParams &p, const Spinor &alpha0, std::int64_t t,
                                    std::int64_t n, const AsymptoticOptions &opts) {
  // |n/t| -> 1 is always outside the support of a non-degenerate coin.
  if (outside_open_line(n, t)) {
    AsymptoticAmplitudes out;
    out.n = n;
    out.t = t;
    out.decay = true;
    return out;
  }
  return asymptotic_amplitudes(p, alpha0, t, n, opts);
}

Table simulate_table(const RunConfig &c) {
  const PhaseParams p = config_params(c);
  const WalkState s = evolve(initial_state(parse_initial(c.initial)), p, c.steps);
  Table table;
  table.columns = amplitude_columns();
  for (std::int64_t n = -c.steps; n <= c.steps; n += 2) table.rows.push_back(amplitude_row(n, s.at(n)));
  const Moments m = moments(s);
  table.summary = {{"total_probability", probability(s).total()},
                   {"mean", m.mean},
                   {"variance", m.variance}};
  return table;
}

Table asymptotic_table(const RunConfig &c) {
  const PhaseParams p = config_params(c);
  const Spinor alpha0 = parse_initial(c.initial);
  AsymptoticOptions opts;
  opts.two_saddle = c.two_saddle;
  Table table;
  table.columns = amplitude_columns();
  table.columns.push_back({"decay", true});
  table.columns.push_back({"valid", true});
  for (std::int64_t n = -c.steps; n <= c.steps; n += 2) {
    const AsymptoticAmplitudes a = asymptotic_row(p, alpha0, c.steps, n, opts);
    auto row = amplitude_row(n, Spinor{a.alpha_left, a.alpha_right});
    row.push_back(a.decay ? 1.0 : 0.0);
    row.push_back(a.valid ? 1.0 : 0.0);
    table.rows.push_back(std::move(row));
  }
  table.summary = {{"half_width", p.half_width()}};
  return table;
}

Table compare_table(const RunConfig &c) {
  const PhaseParams p = config_params(c);
  const Spinor alpha0 = parse_initial(c.initial);
  const std::int64_t t = c.steps;
  const WalkState exact = evolve(initial_state(alpha0), p, t);
  const std::vector<Spinor> spectral = reconstruct_all(p, alpha0, t, c.nodes);

  AsymptoticOptions chosen;
  chosen.two_saddle = c.two_saddle;
  AsymptoticOptions two;
  two.two_saddle = true;
  AsymptoticOptions one;
  one.two_saddle = false;

  Table table;
  table.columns = amplitude_columns();
  for (const char *name : {"prob_spectral", "spectral_err", "prob_asym", "abs_err"})
    table.columns.push_back({name, false});
  table.columns.push_back({"decay", true});

  double max_spectral_err = 0.0;
  double l1_two = 0.0;
  double l1_one = 0.0;
  const double middle = kMiddleFraction * p.half_width();
  for (std::int64_t n = -t; n <= t; n += 2) {
    const Spinor ex = exact.at(n);
    const Spinor sp = spectral[static_cast<std::size_t>(n + t)];
    const double sp_err = std::max(std::abs(sp.left - ex.left), std::abs(sp.right - ex.right));
    max_spectral_err = std::max(max_spectral_err, sp_err);
    const AsymptoticAmplitudes as = asymptotic_row(p, alpha0, t, n, chosen);

    auto row = amplitude_row(n, ex);
    row.push_back(sp.norm2());
    row.push_back(sp_err);
    row.push_back(as.probability());
    row.push_back(std::abs(as.probability() - ex.norm2()));
    row.push_back(as.decay ? 1.0 : 0.0);
    table.rows.push_back(std::move(row));

    if (std::abs(static_cast<double>(n) / static_cast<double>(t)) <= middle) {
      l1_two += std::abs(asymptotic_probability(p, alpha0, t, n, two) - ex.norm2());
      l1_one += std::abs(asymptotic_probability(p, alpha0, t, n, one) - ex.norm2());
    }
  }
  table.summary = {{"total_probability", probability(exact).total()},
                   {"max_spectral_err", max_spectral_err},
                   {"middle_fraction", kMiddleFraction},
                   {"middle_l1_err_two_saddle", l1_two},
                   {"middle_l1_err_single_saddle", l1_one}};
  return table;
}

Table density_table(const RunConfig &c) {
  const PhaseParams p = config_params(c);
  const Spinor alpha0 = parse_initial(c.initial);
  const LimitLaw law(p);
  const double w = law.half_width();
  Table table;
  table.columns = {{"y", false}, {"density", false}, {"cdf", false}};
  // Open grid: the density diverges at the support edges.
  for (std::int64_t i = 0; i < c.grid; ++i) {
    const double y = -w + (static_cast<double>(i) + 0.5) * 2.0 * w / static_cast<double>(c.grid);
    table.rows.push_back({y, law.density(y), law.cdf(y)});
  }
  table.summary = {{"half_width", w},
                   {"density_integral", density_integral(p)},
                   {"symmetric_initial", satisfies_symmetry_assumption(p, alpha0) ? 1.0 : 0.0}};
  if (c.steps >= 1) table.summary.push_back({"ks_distance", ks_distance(p, alpha0, c.steps)});
  if (c.seed)
    table.summary.push_back({"pushforward_ks", pushforward_ks(p, alpha0, kPushforwardSamples, *c.seed)});
  return table;
}

Table spectrum_table(const RunConfig &c) {
  const PhaseParams p = config_params(c);
  const std::int64_t intervals = c.nodes.value_or(256);
  Table table;
  table.columns = {{"k", false}};
  for (const char *name : {"re_lambda1", "im_lambda1", "re_lambda2", "im_lambda2", "re_v1_left",
                           "im_v1_left", "re_v1_right", "im_v1_right", "re_v2_left", "im_v2_left",
                           "re_v2_right", "im_v2_right", "norm1", "norm2"})
    table.columns.push_back({name, false});
  for (std::int64_t m = 0; m <= intervals; ++m) {
    const double k = -pi + 2.0 * pi * static_cast<double>(m) / static_cast<double>(intervals);
    const MomentumSpectrum s = spectrum(p, k);
    table.rows.push_back({k, s.lambda[0].real(), s.lambda[0].imag(), s.lambda[1].real(),
                          s.lambda[1].imag(), s.vecs[0].left.real(), s.vecs[0].left.imag(),
                          s.vecs[0].right.real(), s.vecs[0].right.imag(), s.vecs[1].left.real(),
                          s.vecs[1].left.imag(), s.vecs[1].right.real(), s.vecs[1].right.imag(),
                          s.normalizers[0], s.normalizers[1]});
  }
  return table;
}

std::vector<std::pair<std::string, std::string>> config_lines(const RunConfig &c) {
  return {{"command", std::string(to_string(c.command))},
          {"tau1", c.tau1},
          {"tau2", c.tau2},
          {"steps", std::to_string(c.steps)},
          {"initial", c.initial},
          {"format", c.format == Format::csv ? "csv" : "json"},
          {"nodes", c.nodes ? std::to_string(*c.nodes) : "default"},
          {"two_saddle", c.two_saddle ? "true" : "false"},
          {"seed", c.seed ? std::to_string(*c.seed) : "none"},
          {"grid", std::to_string(c.grid)}};
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::simulate: return "simulate";
    case Command::asymptotic: return "asymptotic";
    case Command::compare: return "compare";
    case Command::density: return "density";
    case Command::spectrum: return "spectrum";
  }
  return "unknown";
}

double parse_tau(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = 0;
    std::int64_t den = 0;
    if (!parse_whole(s.substr(0, slash), num) || !parse_whole(s.substr(slash + 1), den) || den == 0)
      throw UsageError("cannot parse phase parameter '" + std::string(text) + "'");
    return static_cast<double>(num) / static_cast<double>(den);
  }
  double value = 0.0;
  if (!parse_whole(s, value))
    throw UsageError("cannot parse phase parameter '" + std::string(text) + "'");
  return value;
}

Spinor parse_initial(std::string_view text) {
  std::vector<double> parts;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    double v = 0.0;
    if (!parse_whole(rest.substr(0, comma), v))
      throw UsageError("--initial expects re,im,re,im; got '" + std::string(text) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (parts.size() != 4)
    throw UsageError("--initial expects 4 comma-separated numbers; got " + std::to_string(parts.size()));
  Spinor v{{parts[0], parts[1]}, {parts[2], parts[3]}};
  const double n2 = v.norm2();
  if (!(std::abs(n2 - 1.0) <= kInitialNormTolerance))
    throw DomainError("initial state is not normalized: |alpha_left|^2 + |alpha_right|^2 = " +
                      format_number(n2));
  return cplx(1.0 / std::sqrt(n2)) * v;
}

int validate(const RunConfig &c, std::vector<std::string> &problems) {
  bool usage = false;
  bool domain = false;
  auto usage_problem = [&](std::string msg) {
    usage = true;
    problems.push_back(std::move(msg));
  };
  auto domain_problem = [&](std::string msg) {
    domain = true;
    problems.push_back(std::move(msg));
  };

  std::optional<double> tau1;
  std::optional<double> tau2;
  for (auto [name, text, slot] : {std::tuple{"tau1", &c.tau1, &tau1}, std::tuple{"tau2", &c.tau2, &tau2}}) {
    try {
      const double v = parse_tau(*text);
      if (!(v >= 0.0 && v <= 1.0))
        domain_problem(std::string(name) + " = " + *text + " is outside [0, 1]");
      else
        *slot = v;
    } catch (const UsageError &e) {
      usage_problem(e.what());
    }
  }
  try {
    parse_initial(c.initial);
  } catch (const UsageError &e) {
    usage_problem(e.what());
  } catch (const DomainError &e) {
    domain_problem(e.what());
  }

  if (c.steps < 0) usage_problem("--steps must be nonnegative");
  if (needs_positive_steps(c.command) && c.steps < 1)
    domain_problem(std::string(to_string(c.command)) + " needs --steps >= 1");
  if (c.grid < 2) usage_problem("--grid must be at least 2");

  if (tau1 && tau2 && needs_nondegenerate(c.command) &&
      make_params(*tau1, *tau2).degenerate())
    domain_problem(std::string(to_string(c.command)) +
                   " is undefined for the degenerate coin tau1 == tau2 (b = 0); use simulate");

  if (c.nodes) {
    if (c.command == Command::compare && c.steps >= 0 && *c.nodes < minimum_nodes(c.steps))
      domain_problem("--nodes " + std::to_string(*c.nodes) + " is below the exact-quadrature minimum " +
                     std::to_string(minimum_nodes(c.steps)) + " for t = " + std::to_string(c.steps));
    if (*c.nodes < 1) usage_problem("--nodes must be positive");
  }
  if (usage) return kExitUsage;
  if (domain) return kExitDomain;
  return kExitOk;
}

Table build_table(const RunConfig &c) {
  switch (c.command) {
    case Command::simulate: return simulate_table(c);
    case Command::asymptotic: return asymptotic_table(c);
    case Command::compare: return compare_table(c);
    case Command::density: return density_table(c);
    case Command::spectrum: return spectrum_table(c);
  }
  throw UsageError("unknown command");
}

void write_csv(std::ostream &os, const RunConfig &c, const Table &table) {
  os << "# qwalk " << to_string(c.command) << '\n';
  for (const auto &[k, v] : config_lines(c)) os << "# " << k << " = " << v << '\n';
  for (const auto &e : table.summary) os << "# " << e.key << " = " << format_number(e.value) << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << table.columns[i].name;
  os << '\n';
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_cell(row[i], table.columns[i].integer);
    os << '\n';
  }
}

void write_json(std::ostream &os, const RunConfig &c, const Table &table) {
  using json = nlohmann::ordered_json;
  json config = json::object();
  config["command"] = to_string(c.command);
  config["tau1"] = c.tau1;
  config["tau2"] = c.tau2;
  config["steps"] = c.steps;
  config["initial"] = c.initial;
  config["format"] = c.format == Format::csv ? "csv" : "json";
  config["nodes"] = c.nodes ? json(*c.nodes) : json(nullptr);
  config["two_saddle"] = c.two_saddle;
  config["seed"] = c.seed ? json(*c.seed) : json(nullptr);
  config["grid"] = c.grid;

  json summary = json::object();
  for (const auto &e : table.summary) summary[e.key] = e.value;

  json rows = json::array();
  for (const auto &row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (table.columns[i].integer)
        obj[table.columns[i].name] = static_cast<std::int64_t>(row[i]);
      else
        obj[table.columns[i].name] = row[i];
    }
    rows.push_back(std::move(obj));
  }
  json doc = json::object();
  doc["config"] = std::move(config);
  doc["summary"] = std::move(summary);
  doc["rows"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

int run(const RunConfig &c, std::ostream &out, std::ostream &err) {
  std::vector<std::string> problems;
  if (const int code = validate(c, problems); code != kExitOk) {
    for (const auto &msg : problems) err << "qwalk: error: " << msg << '\n';
    return code;
  }
  Table table;
  try {
    table = build_table(c);
  } catch (const DomainError &e) {
    err << "qwalk: error: " << e.what() << '\n';
    return kExitDomain;
  }

  std::ofstream file;
  if (!c.output.empty()) {
    file.open(c.output, std::ios::binary);
    if (!file) {
      err << "qwalk: error: cannot open output file '" << c.output << "'\n";
      return kExitUsage;
    }
  }
  std::ostream &os = c.output.empty() ? out : file;
  if (c.format == Format::csv)
    write_csv(os, c, table);
  else
    write_json(os, c, table);
  return kExitOk;
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Coined quantum walk on the line with phase-parameter coin C = H T H"};
  app.require_subcommand(1);

  RunConfig config;
  std::int64_t nodes = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::vector<std::pair<CLI::App *, Command>> subs;
  std::vector<CLI::Option *> node_opts;
  std::vector<CLI::Option *> seed_opts;

  auto add = [&](const char *name, const char *help, Command cmd) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("--tau1", config.tau1, "Phase parameter tau1 in [0,1] (decimal or p/q)")
        ->capture_default_str();
    sub->add_option("--tau2", config.tau2, "Phase parameter tau2 in [0,1] (decimal or p/q)")
        ->capture_default_str();
    sub->add_option("--steps,-t", config.steps, "Number of walk steps t")->capture_default_str();
    sub->add_option("--initial", config.initial,
                    "Initial amplitudes re_l,im_l,re_r,im_r at n = 0")
        ->capture_default_str();
    sub->add_option("--output,-o", config.output, "Output file (default: stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    node_opts.push_back(sub->add_option("--nodes", nodes,
                                        "Quadrature nodes (compare) or k intervals (spectrum)"));
    sub->add_option("--two-saddle", config.two_saddle,
                    "Include the companion saddle pi - theta_j (true/false)")
        ->capture_default_str();
    seed_opts.push_back(sub->add_option("--seed", seed, "Seed for the sampled pushforward check"));
    sub->add_option("--grid", config.grid, "Number of y points (density)")->capture_default_str();
    subs.emplace_back(sub, cmd);
  };
  add("simulate", "Exact evolution: amplitudes and probabilities per site", Command::simulate);
  add("asymptotic", "Saddle-point closed-form amplitudes", Command::asymptotic);
  add("compare", "Exact, spectral-reconstruction and asymptotic routes side by side",
      Command::compare);
  add("density", "Limit density and CDF of X_t/t, with KS summary", Command::density);
  add("spectrum", "Eigenvalues and eigenvectors of M_k on a k grid", Command::spectrum);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto &[sub, cmd] : subs)
    if (sub->parsed()) config.command = cmd;
  for (auto *o : node_opts)
    if (o->count() > 0) config.nodes = nodes;
  for (auto *o : seed_opts)
    if (o->count() > 0) config.seed = seed;
  config.format = format == "json" ? Format::json : Format::csv;
  return run(config, out, err);
}

}  // namespace qwalk::cli
