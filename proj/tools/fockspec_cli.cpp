// fockspec command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fockspec/fockspec.h"
#include "json.hpp"

using nlohmann::ordered_json;

namespace {

// Usage, parse and library errors all map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(fs_status st) {
  if (st != FS_OK) throw UsageError(fs_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Domain = std::unique_ptr<fs_domain, Deleter<fs_domain, fs_domain_free>>;
using Spectrum = std::unique_ptr<fs_spectrum, Deleter<fs_spectrum, fs_spectrum_free>>;
using Chain = std::unique_ptr<fs_chain, Deleter<fs_chain, fs_chain_free>>;
using Disks = std::unique_ptr<fs_disks, Deleter<fs_disks, fs_disks_free>>;
using Symbol = std::unique_ptr<fs_symbol, Deleter<fs_symbol, fs_symbol_free>>;
using ReportList = std::unique_ptr<fs_report_list, Deleter<fs_report_list, fs_report_list_free>>;

struct Options {
  double area = 1.0;
  int K = 2;
  double p = 2.0;
  double B = 1.0;
  double w = 2.0;
  int N = 64;
  int n = 10;
  double tol = 0.0;
  double t = 0.0;
  std::uint64_t seed = 0;
  int instances = 100;
  int pieces = 4;
  double b_max = 40.0;
  bool csv = false;
  bool json = false;
  bool allow_non_monotone = false;
  bool normalize = false;
  std::string out;
  std::string input;
  std::string shape = "ball";
  std::string suite = "all";
  std::string alpha = "1,2";
  std::string weights;
  std::string phi = "square";
  std::string x;
  std::string y;
};

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty list");
  return v;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> v;
  for (double d : parse_doubles(text)) {
    if (d != std::floor(d)) throw UsageError("not an integer: " + std::to_string(d));
    v.push_back(static_cast<int>(d));
  }
  return v;
}

ordered_json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

double radius(double sigma) { return std::sqrt(sigma / std::numbers::pi); }

ordered_json report_json(const fs_report& r) {
  return {{"name", r.name},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"satisfied", r.satisfied != 0},
          {"margin", r.margin},
          {"equality_case_detected", r.equality_case_detected != 0}};
}

ordered_json domain_json(const fs_domain* d) {
  ordered_json pieces = ordered_json::array();
  for (std::size_t i = 0; i < fs_domain_piece_count(d); ++i) {
    double a = 0, b = 0;
    check(fs_domain_piece(d, i, &a, &b));
    pieces.push_back({a, b});
  }
  return {{"annuli_sigma", pieces}};
}

Domain domain_from_json(const ordered_json& j) {
  if (!j.contains("annuli_sigma") || !j["annuli_sigma"].is_array())
    throw UsageError("domain JSON needs an \"annuli_sigma\" array");
  std::vector<double> ab;
  try {
    for (const auto& pair : j["annuli_sigma"]) {
      if (!pair.is_array() || pair.size() != 2) throw UsageError("each annulus is [a, b]");
      ab.push_back(pair[0].get<double>());
      ab.push_back(pair[1].get<double>());
    }
  } catch (const ordered_json::exception& e) {
    throw UsageError(e.what());
  }
  fs_domain* d = nullptr;
  check(fs_domain_create(ab.data(), ab.size() / 2, &d));
  return Domain(d);
}

// --input FILE, else --shape {ball, annulus, random} of the given --area.
Domain make_domain(const Options& o) {
  if (!o.input.empty()) return domain_from_json(read_json(o.input));
  fs_domain* d = nullptr;
  if (o.shape == "ball")
    check(fs_domain_ball(o.area, &d));
  else if (o.shape == "annulus")
    check(fs_domain_optimal_annulus(o.area, &d));
  else if (o.shape == "random")
    check(fs_domain_random(o.seed, o.area, o.pieces, o.b_max, &d));
  else if (o.shape == "counterexample")
    check(fs_domain_counterexample_annulus(o.area, &d));
  else
    throw UsageError("unknown shape " + o.shape);
  return Domain(d);
}

Domain ball_like(const fs_domain* d) {
  fs_domain* b = nullptr;
  check(fs_domain_ball(fs_domain_measure(d), &b));
  return Domain(b);
}

Symbol symbol_from_json(const ordered_json& j) {
  fs_symbol* s = nullptr;
  try {
    if (j.contains("piecewise")) {
      std::vector<double> triples;
      for (const auto& piece : j["piecewise"]) {
        triples.push_back(piece.at("a").get<double>());
        triples.push_back(piece.at("b").get<double>());
        triples.push_back(piece.at("v").get<double>());
      }
      check(fs_symbol_piecewise(triples.data(), triples.size() / 3, &s));
    } else if (j.value("analytic", std::string()) == "sigma_p") {
      check(fs_symbol_sigma_p(j.at("K").get<int>(), j.at("p").get<double>(), j.at("B").get<double>(), &s));
    } else {
      throw UsageError("symbol JSON needs \"piecewise\" or \"analytic\": \"sigma_p\"");
    }
  } catch (const ordered_json::exception& e) {
    throw UsageError(e.what());
  }
  return Symbol(s);
}

struct Phi {
  double (*fn)(double, void*);
  double scale;
  double power;
};

Phi named_phi(const std::string& name) {
  if (name == "square") return {[](double t, void*) { return t * t; }, 1.0, 2.0};
  if (name == "cube") return {[](double t, void*) { return t * t * t; }, 1.0, 3.0};
  if (name == "neg-sqrt") return {[](double t, void*) { return -std::sqrt(t); }, 1.0, 0.5};
  if (name == "xlogx") return {[](double t, void*) { return t > 0 ? t * std::log(t) + t : 0.0; }, 5.0, 0.9};
  if (name == "identity") return {[](double t, void*) { return t; }, 1.0, 1.0};
  throw UsageError("unknown phi " + name + " (square, cube, neg-sqrt, xlogx, identity)");
}

// Output sink plus the failure flag that drives exit code 1.
struct Result {
  ordered_json body;
  std::vector<std::vector<std::string>> rows;  // CSV, first row is the header
  bool failed = false;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Result cmd_spectrum(const Options& o) {
  Domain d = make_domain(o);
  fs_spectrum* raw = nullptr;
  check(fs_spectrum_top(d.get(), o.n, o.tol, &raw));
  Spectrum sp(raw);
  Result r;
  r.rows.push_back({"rank", "mode_index", "lambda"});
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < fs_spectrum_size(sp.get()); ++i) {
    double lambda = 0;
    int k = 0;
    check(fs_spectrum_entry(sp.get(), i, &lambda, &k));
    entries.push_back({{"rank", i + 1}, {"mode_index", k}, {"lambda", lambda}});
    r.rows.push_back({std::to_string(i + 1), std::to_string(k), num(lambda)});
  }
  r.body = {{"domain", domain_json(d.get())},
            {"measure", fs_domain_measure(d.get())},
            {"entries", entries},
            {"tail_bound", fs_spectrum_tail_bound(sp.get())},
            {"truncated", fs_spectrum_truncated(sp.get()) != 0}};
  return r;
}

Result cmd_sum_topk(const Options& o) {
  Domain d = make_domain(o);
  fs_report rep{};
  Result r;
  if (o.weights.empty()) {
    check(fs_check_sum_topk(d.get(), o.K, &rep));
    r.body = report_json(rep);
    r.failed = !rep.satisfied;
  } else {
    const auto w = parse_doubles(o.weights);
    check(fs_check_weighted_sum(d.get(), w.data(), w.size(), o.allow_non_monotone ? 0 : 1, &rep));
    r.body = report_json(rep);
    if (o.allow_non_monotone) {
      // Exploration mode: a violation is the expected finding, not a failure.
      r.body["counterexample_found"] = rep.satisfied == 0;
    } else {
      r.failed = !rep.satisfied;
    }
  }
  r.body["domain"] = domain_json(d.get());
  r.rows = {{"name", "lhs", "rhs", "margin", "satisfied"},
            {rep.name, num(rep.lhs), num(rep.rhs), num(rep.margin), rep.satisfied ? "1" : "0"}};
  return r;
}

Result cmd_schatten(const Options& o) {
  Domain d = make_domain(o);
  Domain ball = ball_like(d.get());
  double v = 0, vb = 0;
  check(fs_schatten(d.get(), o.p, o.tol, &v));
  check(fs_schatten(ball.get(), o.p, o.tol, &vb));
  // p > 1: the ball maximizes the norm; p < 1: it minimizes the quasi-norm.
  fs_report rep{};
  std::snprintf(rep.name, sizeof rep.name, "schatten_p=%g", o.p);
  rep.lhs = o.p > 1 ? v : vb;
  rep.rhs = o.p > 1 ? vb : v;
  rep.margin = rep.rhs - rep.lhs;
  rep.satisfied = rep.lhs <= rep.rhs + 1e-9;
  Result r;
  r.body = {{"p", o.p}, {"schatten", v}, {"schatten_ball", vb}, {"report", report_json(rep)}};
  r.rows = {{"p", "schatten", "schatten_ball"}, {num(o.p), num(v), num(vb)}};
  r.failed = !rep.satisfied;
  return r;
}

Result cmd_trace(const Options& o) {
  Domain d = make_domain(o);
  Domain ball = ball_like(d.get());
  const Phi phi = named_phi(o.phi);
  double v = 0, vb = 0;
  check(fs_trace_phi(d.get(), phi.fn, nullptr, phi.scale, phi.power, o.tol, &v));
  check(fs_trace_phi(ball.get(), phi.fn, nullptr, phi.scale, phi.power, o.tol, &vb));
  fs_report rep{};
  std::snprintf(rep.name, sizeof rep.name, "trace_%s", o.phi.c_str());
  rep.lhs = v;
  rep.rhs = vb;
  rep.margin = vb - v;
  rep.satisfied = v <= vb + 1e-9;
  Result r;
  r.body = {{"phi", o.phi}, {"trace", v}, {"trace_ball", vb}, {"measure", fs_domain_measure(d.get())},
            {"report", report_json(rep)}};
  r.rows = {{"phi", "trace", "trace_ball"}, {o.phi, num(v), num(vb)}};
  r.failed = !rep.satisfied;
  return r;
}

Result cmd_annulus(const Options& o) {
  fs_domain* raw = nullptr;
  check(fs_domain_optimal_annulus(o.area, &raw));
  Domain ann(raw);
  double a = 0, b = 0, l2 = 0;
  check(fs_domain_piece(ann.get(), 0, &a, &b));
  check(fs_lambda2_bound(o.area, &l2));
  Result r;
  r.body = {{"a_sigma", a}, {"b_sigma", b}, {"lambda2", l2}, {"a_radius", radius(a)}, {"b_radius", radius(b)}};
  r.rows = {{"a_sigma", "b_sigma", "lambda2", "a_radius", "b_radius"},
            {num(a), num(b), num(l2), num(radius(a)), num(radius(b))}};
  if (!o.input.empty() || o.shape != "ball") {
    Domain d = make_domain(o);
    fs_report rep{};
    check(fs_check_krahn_szego(d.get(), &rep));
    r.body["domain"] = domain_json(d.get());
    r.body["report"] = report_json(rep);
    r.failed = !rep.satisfied;
  }
  return r;
}

Result cmd_reduce_alpha(const Options& o) {
  const std::vector<int> alpha = parse_ints(o.alpha);
  fs_chain* raw = nullptr;
  check(fs_reduce_chain(alpha.data(), alpha.size(), o.area, &raw));
  Chain chain(raw);
  Result r;
  r.rows.push_back({"step", "alpha", "level_t", "integral", "gain"});
  ordered_json rows = ordered_json::array();
  std::vector<int> a(alpha.size());
  double prev = -1;
  bool monotone = true;
  for (std::size_t i = 0; i < fs_chain_length(chain.get()); ++i) {
    double t = 0, integral = 0, gain = 0;
    int leading = 0;
    check(fs_chain_step(chain.get(), i, a.data(), &t, &integral, &gain, &leading));
    rows.push_back({{"alpha", a}, {"level_t", t}, {"integral", integral}, {"gain", gain}});
    std::string joined;
    for (std::size_t j = 0; j < a.size(); ++j) joined += (j ? " " : "") + std::to_string(a[j]);
    r.rows.push_back({std::to_string(i), joined, num(t), num(integral), num(gain)});
    if (i > 0 && (integral < prev - 1e-12 || gain < 0)) monotone = false;
    prev = integral;
  }
  double gk = 0;
  check(fs_g_K(static_cast<int>(alpha.size()), o.area, &gk));
  double bath = 0;
  check(fs_bathtub_integral(alpha.data(), alpha.size(), o.area, &bath));
  double level = 0;
  fs_domain* level_raw = nullptr;
  check(fs_superlevel_of_measure(alpha.data(), alpha.size(), o.area, &level, &level_raw));
  Domain level_set(level_raw);
  r.body = {{"alpha", alpha},
            {"area", o.area},
            {"superlevel", {{"level_t", level}, {"set", domain_json(level_set.get())}}},
            {"bathtub_integral", bath},
            {"chain", rows},
            {"terminal_g_K", gk},
            {"monotone", monotone}};
  if (o.t > 0) {
    fs_domain* at = nullptr;
    check(fs_superlevel_at(alpha.data(), alpha.size(), o.t, &at));
    Domain at_set(at);
    r.body["superlevel_at_t"] = {{"t", o.t}, {"set", domain_json(at_set.get())}};
  }
  r.failed = !monotone || std::fabs(prev - gk) > 1e-9;
  return r;
}

Result cmd_symmetry_break(const Options& o) {
  Result r;
  if (!o.input.empty()) {
    const ordered_json j = read_json(o.input);
    std::vector<double> triples;
    try {
      for (const auto& d : j.at("disks")) {
        triples.push_back(d.at("cx").get<double>());
        triples.push_back(d.at("cy").get<double>());
        triples.push_back(d.at("r").get<double>());
      }
    } catch (const ordered_json::exception& e) {
      throw UsageError(e.what());
    }
    fs_disks* raw = nullptr;
    check(fs_disks_create(triples.data(), triples.size() / 3, &raw));
    Disks disks(raw);
    const int N = std::max(o.N, fs_disks_truncation_size(disks.get()));
    std::vector<double> ev(static_cast<std::size_t>(N));
    check(fs_disks_eigenvalues(disks.get(), N, 0, ev.data()));
    const int shown = std::min(N, o.n);
    r.rows.push_back({"rank", "lambda"});
    ordered_json list = ordered_json::array();
    for (int i = 0; i < shown; ++i) {
      list.push_back({{"rank", i + 1}, {"lambda", ev[static_cast<std::size_t>(i)]}});
      r.rows.push_back({std::to_string(i + 1), num(ev[static_cast<std::size_t>(i)])});
    }
    r.body = {{"area", fs_disks_area(disks.get())}, {"N", N}, {"eigenvalues", list}};
    return r;
  }
  fs_symmetry_report rep{};
  check(fs_symmetry_breaking(o.area, o.w, o.N, 0, &rep));
  r.body = {{"area", o.area},
            {"w", o.w},
            {"N", rep.N},
            {"quad_order", rep.quad_order},
            {"lambda1", rep.lambda1},
            {"lambda2", rep.lambda2},
            {"lambda2_refined", rep.lambda2_refined},
            {"truncation_stable", rep.truncation_stable != 0},
            {"radial_bound", rep.report.lhs},
            {"analytic_lower_bound", rep.analytic_lower_bound},
            {"limit_value", rep.limit_value},
            {"report", report_json(rep.report)}};
  r.rows = {{"lambda1", "lambda2", "radial_bound", "analytic_lower_bound", "limit_value"},
            {num(rep.lambda1), num(rep.lambda2), num(rep.report.lhs), num(rep.analytic_lower_bound),
             num(rep.limit_value)}};
  r.failed = !rep.report.satisfied;
  return r;
}

Result cmd_symbol_opt(const Options& o) {
  fs_symbol* raw = nullptr;
  check(fs_symbol_sigma_p(o.K, o.p, o.B, &raw));
  Symbol best(raw);
  double cp = 0, norm = 0, top = 0, lc = 0;
  check(fs_c_p_constant(o.K, o.p, &cp));
  check(fs_symbol_lp_norm(best.get(), o.p, &norm));
  check(fs_symbol_top_sum(best.get(), o.K, &top));
  check(fs_symbol_layer_cake_top_sum(best.get(), o.K, &lc));
  Result r;
  r.body = {{"K", o.K}, {"p", o.p}, {"B", o.B}, {"c_p", cp}, {"peak", o.B / cp}, {"lp_norm", norm},
            {"top_sum", top}, {"layer_cake_top_sum", lc}};
  r.rows = {{"K", "p", "B", "c_p", "lp_norm", "top_sum"},
            {std::to_string(o.K), num(o.p), num(o.B), num(cp), num(norm), num(top)}};
  r.failed = std::fabs(norm - o.B) > 1e-8 || std::fabs(top - lc) > 1e-6;
  if (!o.input.empty()) {
    Symbol sym = symbol_from_json(read_json(o.input));
    if (o.normalize) {
      double n = 0;
      check(fs_symbol_lp_norm(sym.get(), o.p, &n));
      fs_symbol* scaled = nullptr;
      check(fs_symbol_scaled(sym.get(), o.B / n, &scaled));
      sym.reset(scaled);
    }
    fs_report opt{}, rea{};
    double rhs_lc = 0;
    check(fs_check_optimal_symbol(sym.get(), o.K, o.p, o.B, &opt));
    check(fs_check_rearrangement(sym.get(), o.K, &rea, &rhs_lc));
    r.body["optimal"] = report_json(opt);
    r.body["rearrangement"] = report_json(rea);
    r.body["rearrangement"]["rhs_layer_cake"] = rhs_lc;
    r.failed = r.failed || !opt.satisfied || !rea.satisfied;
  }
  return r;
}

Result cmd_karamata(const Options& o) {
  const auto x = parse_doubles(o.x);
  const auto y = parse_doubles(o.y);
  const Phi phi = named_phi(o.phi);
  fs_report rep{};
  check(fs_karamata_check(x.data(), x.size(), y.data(), y.size(), phi.fn, nullptr, &rep));
  Result r;
  r.body = report_json(rep);
  r.rows = {{"name", "lhs", "rhs", "margin", "satisfied"},
            {rep.name, num(rep.lhs), num(rep.rhs), num(rep.margin), rep.satisfied ? "1" : "0"}};
  r.failed = !rep.satisfied;
  return r;
}

Result cmd_verify(const Options& o) {
  fs_report_list* raw = nullptr;
  check(fs_verify(o.suite.c_str(), o.seed, o.instances, &raw));
  ReportList list(raw);
  Result r;
  r.body = ordered_json::array();
  r.rows.push_back({"name", "lhs", "rhs", "margin", "satisfied", "equality_case_detected"});
  for (std::size_t i = 0; i < fs_report_list_size(list.get()); ++i) {
    fs_report rep{};
    check(fs_report_list_get(list.get(), i, &rep));
    r.body.push_back(report_json(rep));
    r.rows.push_back({rep.name, num(rep.lhs), num(rep.rhs), num(rep.margin), rep.satisfied ? "1" : "0",
                      rep.equality_case_detected ? "1" : "0"});
    r.failed = r.failed || !rep.satisfied;
  }
  return r;
}

void emit(const Result& r, const Options& o) {
  std::ostringstream text;
  if (o.csv) {
    if (r.rows.empty()) throw UsageError("this command has no CSV form");
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
      text << '\n';
    }
  } else {
    text << r.body.dump(2) << '\n';
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of Fock-space localization operators and extremal checks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Random seed");
    c->add_option("--tol", o.tol, "Truncation tolerance (0 = default)");
    c->add_option("--out", o.out, "Write output to FILE");
    auto* csv = c->add_flag("--csv", o.csv, "CSV output");
    c->add_flag("--json", o.json, "JSON output (default)")->excludes(csv);
  };
  auto domain = [&](CLI::App* c) {
    c->add_option("--area", o.area, "Area of the domain");
    c->add_option("--input", o.input, "Domain JSON {\"annuli_sigma\": [[a, b], ...]}");
    c->add_option("--shape", o.shape, "ball, annulus, random or counterexample")
        ->check(CLI::IsMember({"ball", "annulus", "random", "counterexample"}));
    c->add_option("--pieces", o.pieces, "Max pieces for --shape random");
    c->add_option("--b-max", o.b_max, "Outer sigma bound for --shape random");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Leading eigenvalues of a radial domain");
  common(spectrum);
  domain(spectrum);
  spectrum->add_option("--n", o.n, "Number of eigenvalues");

  auto* sum_topk = app.add_subcommand("sum-topk", "Sum of the K largest eigenvalues against the ball");
  common(sum_topk);
  domain(sum_topk);
  sum_topk->add_option("--K", o.K, "Number of eigenvalues");
  sum_topk->add_option("--weights", o.weights, "Comma-separated weights t_1,t_2,...");
  sum_topk->add_flag("--allow-non-monotone", o.allow_non_monotone, "Accept non-decreasing weights");

  auto* schatten = app.add_subcommand("schatten", "Schatten norm against the ball");
  common(schatten);
  domain(schatten);
  schatten->add_option("--p", o.p, "Exponent");

  auto* trace = app.add_subcommand("trace", "Trace of phi(T) against the ball");
  common(trace);
  domain(trace);
  trace->add_option("--phi", o.phi, "square, cube, neg-sqrt, xlogx or identity");

  auto* annulus = app.add_subcommand("annulus", "Annulus maximizing lambda_2");
  common(annulus);
  domain(annulus);

  auto* reduce = app.add_subcommand("reduce-alpha", "Index reduction chain and bathtub integrals");
  common(reduce);
  reduce->add_option("--alpha", o.alpha, "Comma-separated increasing indices");
  reduce->add_option("--area", o.area, "Measure of the superlevel sets");
  reduce->add_option("--t", o.t, "Also report the superlevel set at this level");

  auto* sym = app.add_subcommand("symmetry-break", "Two-disk lambda_2 against the radial bound");
  common(sym);
  sym->add_option("--area", o.area, "Total area");
  sym->add_option("--w", o.w, "Disk centres at +-w");
  sym->add_option("--N", o.N, "Truncation size");
  sym->add_option("--n", o.n, "Eigenvalues shown with --input");
  sym->add_option("--input", o.input, "Disk JSON {\"disks\": [{\"cx\", \"cy\", \"r\"}]}");

  auto* symbol = app.add_subcommand("symbol-opt", "Optimal L^p symbol and symbol checks");
  common(symbol);
  symbol->add_option("--K", o.K, "Number of eigenvalues");
  symbol->add_option("--p", o.p, "Exponent p > 1");
  symbol->add_option("--B", o.B, "L^p budget");
  symbol->add_option("--input", o.input, "Symbol JSON");
  symbol->add_flag("--normalize", o.normalize, "Rescale the input symbol to norm B");

  auto* karamata = app.add_subcommand("karamata", "Majorization inequality for two sequences");
  common(karamata);
  karamata->add_option("--x", o.x, "Decreasing sequence")->required();
  karamata->add_option("--y", o.y, "Decreasing sequence")->required();
  karamata->add_option("--phi", o.phi, "square, cube, neg-sqrt, xlogx or identity");

  auto* verify = app.add_subcommand("verify", "Randomized inequality suites");
  common(verify);
  verify->add_option("--suite", o.suite, "Suite name or all");
  verify->add_option("--instances", o.instances, "Random family size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Result r;
    if (*spectrum) r = cmd_spectrum(o);
    else if (*sum_topk) r = cmd_sum_topk(o);
    else if (*schatten) r = cmd_schatten(o);
    else if (*trace) r = cmd_trace(o);
    else if (*annulus) r = cmd_annulus(o);
    else if (*reduce) r = cmd_reduce_alpha(o);
    else if (*sym) r = cmd_symmetry_break(o);
    else if (*symbol) r = cmd_symbol_opt(o);
    else if (*karamata) r = cmd_karamata(o);
    else r = cmd_verify(o);
    emit(r, o);
    return r.failed ? 1 : 0;
  } catch (const UsageError& e) {
    std::cerr << "fockspec: " << e.what() << '\n';
    return 2;
  }
}
