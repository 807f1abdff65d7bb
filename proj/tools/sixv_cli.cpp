// Command-line front end: enumerate, partition, norms, asymptotics,
// phase-curve, toda. Emits JSON (default) or CSV with 30 significant digits.
// Exit codes: 0 ok, 1 internal error, 2 usage/domain error, 3 cross-check
// disagreement.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sixv/asymptotics.hpp"
#include "sixv/extreal.hpp"
#include "sixv/izergin.hpp"
#include "sixv/lattice.hpp"
#include "sixv/meixner.hpp"
#include "sixv/orthopoly.hpp"
#include "sixv/weights.hpp"

using nlohmann::json;
using namespace sixv;

namespace {

constexpr int kDigits = 30;

struct disagreement_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string t_str, gamma_str, alpha_str, beta_str;
  bool ref = false;
  long precision = ExtReal::kDefaultPrec;
  std::string format = "json";
  std::string out_path;
};

FerroParams ferro_from(const Options& o) {
  if (o.ref) return FerroParams::ref(o.precision);
  if (o.t_str.empty() || o.gamma_str.empty())
    throw CLI::ValidationError("--t and --gamma (or --ref) are required");
  return FerroParams::create(ExtReal::from_string(o.t_str, o.precision),
                             ExtReal::from_string(o.gamma_str, o.precision));
}

void emit(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path " + o.out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

std::string dec(const ExtReal& x) { return x.to_string(kDigits); }

// CSV: '.' decimal separator, ',' field separator, LF line endings, header row
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream s;
  for (size_t i = 0; i < header.size(); ++i) s << (i ? "," : "") << header[i];
  s << '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) s << (i ? "," : "") << r[i];
    s << '\n';
  }
  return s.str();
}

ExtReal validated_at(const Options& o, const std::function<ExtReal(mpfr_prec_t)>& f) {
  return validated(f, o.precision);
}

// ---- enumerate ----
void cmd_enumerate(const Options& o, int n) {
  auto configs = enumerate_dwbc(n);
  std::optional<ABCWeights> w;
  if (o.ref || !o.t_str.empty()) w = ferro_weights(ferro_from(o));

  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < configs.size(); ++i) {
      VertexCounts vc = vertex_counts(configs[i]);
      std::vector<std::string> row{std::to_string(i),           std::to_string(vc.n1), std::to_string(vc.n2),
                                   std::to_string(vc.n3),       std::to_string(vc.n4), std::to_string(vc.n5),
                                   std::to_string(vc.n6),       '"' + asm_to_json(asm_from_config(configs[i])) + '"',
                                   w ? dec(config_weight(configs[i], w->a, w->b, w->c)) : ""};
      rows.push_back(std::move(row));
    }
    emit(o, to_csv({"index", "n1", "n2", "n3", "n4", "n5", "n6", "asm", "weight"}, rows));
    return;
  }
  json out;
  out["n"] = n;
  out["count"] = configs.size();
  json list = json::array();
  for (size_t i = 0; i < configs.size(); ++i) {
    VertexCounts vc = vertex_counts(configs[i]);
    json item{{"index", i},
              {"counts", {{"n1", vc.n1}, {"n2", vc.n2}, {"n3", vc.n3}, {"n4", vc.n4}, {"n5", vc.n5}, {"n6", vc.n6}}},
              {"asm", json::parse(asm_to_json(asm_from_config(configs[i])))},
              {"config", json::parse(config_to_json(configs[i]))}};
    if (w) item["weight"] = dec(config_weight(configs[i], w->a, w->b, w->c));
    list.push_back(std::move(item));
  }
  out["configs"] = std::move(list);
  emit(o, out.dump(2));
}

// ---- partition ----
ExtReal partition_norms_route(const FerroParams& p, int n) {
  OPSystem sys = build(p, n - 1);
  ExtReal prod = ExtReal::pow2(static_cast<long>(n) * n, p.q.precision());
  for (int k = 0; k < n; ++k) prod = prod * sys.h[k];
  ExtReal ab = sinh(p.t - p.gamma) * sinh(p.t + p.gamma);
  ExtReal sf = ExtReal::from_long(1, p.q.precision());
  ExtReal fact = sf;
  for (long j = 1; j < n; ++j) {
    fact = fact * j;
    sf = sf * fact;
  }
  return pow(ab, static_cast<long>(n) * n) / (sf * sf) * prod;
}

void cmd_partition(const Options& o, int n, const std::string& method) {
  FerroParams p = ferro_from(o);
  std::vector<std::pair<std::string, ExtReal>> values;
  if (method == "brute" || (method == "all" && n <= 6)) {
    if (n > 6) throw std::domain_error("brute-force route requires n <= 6");
    ABCWeights w = ferro_weights(p);
    values.emplace_back("brute", brute_force_partition(n, w.a, w.b, w.c));
  }
  if (method == "izergin" || method == "all")
    values.emplace_back("izergin", validated_at(o, [&](mpfr_prec_t pr) {
                          return partition_izergin(p.at_precision(pr), n);
                        }));
  if (method == "norms" || method == "all")
    values.emplace_back("norms", validated_at(o, [&](mpfr_prec_t pr) {
                          return partition_norms_route(p.at_precision(pr), n);
                        }));
  if (values.empty()) throw CLI::ValidationError("unknown method; use brute|izergin|norms|all");

  ExtReal max_rel = ExtReal::from_long(0, o.precision);
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j) {
      ExtReal d = rel_diff(values[i].second, values[j].second);
      if (d > max_rel) max_rel = d;
    }
  bool agree = max_rel < ExtReal::from_string("1e-30", o.precision);

  if (o.format == "csv") {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, v] : values) rows.push_back({name, dec(v)});
    rows.push_back({"max_rel_diff", dec(max_rel)});
    emit(o, to_csv({"method", "Z_n"}, rows));
  } else {
    json out{{"n", n}, {"t", dec(p.t)}, {"gamma", dec(p.gamma)}, {"max_rel_diff", dec(max_rel)}, {"agreement", agree}};
    for (const auto& [name, v] : values) out["values"][name] = dec(v);
    emit(o, out.dump(2));
  }
  if (!agree) throw disagreement_error("partition routes disagree beyond 1e-30 (max rel diff " + dec(max_rel) + ")");
}

// ---- norms ----
void cmd_norms(const Options& o, int kmax) {
  if (kmax > 24) throw std::domain_error("kmax must be <= 24");
  FerroParams p = ferro_from(o);
  // validated norm table: accept the first precision rung where doubling is a no-op
  mpfr_prec_t pr = o.precision;
  ExtReal thr = ExtReal::pow2(-static_cast<long>(pr - 56), 64);
  OPSystem sys = build(p.at_precision(pr), kmax);
  for (int rung = 0; rung < 3; ++rung) {
    OPSystem hi = build(p.at_precision(2 * pr), kmax);
    bool ok = true;
    for (int k = 0; k <= kmax; ++k)
      if (rel_diff(sys.h[k].with_precision(2 * pr), hi.h[k]) >= thr) ok = false;
    if (ok) break;
    pr *= 2;
    sys = std::move(hi);
  }
  ExtReal c0 = inequality_constant(sys.params);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int k = 0; k <= kmax; ++k) {
    ExtReal hq = h_Q(sys.params.q, k);
    ExtReal eps = epsilon_k(sys, k);
    ExtReal del = delta_k(sys, k);
    ExtReal slack = c0 * (1 + eps) * del - eps * eps;
    rows.push_back({std::to_string(k), dec(sys.h[k]), dec(hq), dec(eps), dec(del), dec(slack)});
    jrows.push_back(json{{"k", k},
                         {"h_k", dec(sys.h[k])},
                         {"h_k_Q", dec(hq)},
                         {"eps_k", dec(eps)},
                         {"delta_k", dec(del)},
                         {"ineq_slack", dec(slack)}});
  }
  if (o.format == "csv")
    emit(o, to_csv({"k", "h_k", "h_k_Q", "eps_k", "delta_k", "ineq_slack"}, rows));
  else
    emit(o, jrows.dump(2));
}

// ---- asymptotics ----
void cmd_asymptotics(const Options& o, int nmax) {
  FerroParams p = ferro_from(o);
  AsymptoticConstants c = constants(p);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int n = 1; n <= nmax; ++n) {
    ExtReal z = validated_at(o, [&](mpfr_prec_t pr) { return partition_izergin(p.at_precision(pr), n); });
    ExtReal model = c.C * pow(c.G, n) * pow(c.F, static_cast<long>(n) * n);
    ExtReal ratio = z / model;
    rows.push_back({std::to_string(n), dec(z), dec(model), dec(ratio)});
    jrows.push_back(json{{"n", n}, {"Z_n", dec(z)}, {"CG^nF^n2", dec(model)}, {"ratio", dec(ratio)}});
  }
  if (o.format == "csv")
    emit(o, to_csv({"n", "Z_n", "CG^nF^n2", "ratio"}, rows));
  else
    emit(o, jrows.dump(2));
}

// ---- phase-curve ----
void cmd_phase_curve(const Options& o, const std::string& bmin_s, const std::string& bmax_s, int samples) {
  if (o.alpha_str.empty()) throw CLI::ValidationError("--alpha is required");
  if (samples < 2) throw std::domain_error("samples must be >= 2");
  ExtReal alpha = ExtReal::from_string(o.alpha_str, o.precision);
  ExtReal bmin = ExtReal::from_string(bmin_s, o.precision);
  ExtReal bmax = ExtReal::from_string(bmax_s, o.precision);
  if (!(bmin < bmax)) throw std::domain_error("beta-min must be < beta-max");
  ExtReal h = ExtReal::from_string("1e-6", o.precision);  // F0' central step
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int i = 0; i < samples; ++i) {
    ExtReal beta = bmin + (bmax - bmin) * i / (samples - 1);
    ExtReal f0 = F0_on_line(alpha, beta);
    ExtReal d = (F0_on_line(alpha, beta + h) - F0_on_line(alpha, beta - h)) / (2 * h);
    rows.push_back({dec(beta), dec(f0), dec(d)});
    jrows.push_back(json{{"beta", dec(beta)}, {"F0", dec(f0)}, {"F0_prime", dec(d)}});
  }
  if (o.format == "csv")
    emit(o, to_csv({"beta", "F0", "F0_prime"}, rows));
  else
    emit(o, jrows.dump(2));
}

// ---- toda ----
void cmd_toda(const Options& o, const std::string& nrange, const std::string& step_s) {
  FerroParams p = ferro_from(o);
  int lo, hi;
  auto dots = nrange.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::stoi(nrange);
  } else {
    lo = std::stoi(nrange.substr(0, dots));
    hi = std::stoi(nrange.substr(dots + 2));
  }
  if (lo < 2 || hi < lo) throw std::domain_error("toda range requires 2 <= nmin <= nmax");
  ExtReal step = ExtReal::from_string(step_s, o.precision);
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (int n = lo; n <= hi; ++n) {
    auto [r1, r2] = toda_residuals(p, n, step);
    rows.push_back({std::to_string(n), dec(r1), dec(r2)});
    jrows.push_back(json{{"n", n}, {"r1", dec(r1)}, {"r2", dec(r2)}});
  }
  if (o.format == "csv")
    emit(o, to_csv({"n", "r1", "r2"}, rows));
  else
    emit(o, jrows.dump(2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-vertex model with domain wall boundary conditions: exact and asymptotic computations"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--t", o.t_str, "ferroelectric parameter t (decimal string)");
  app.add_option("--gamma", o.gamma_str, "ferroelectric parameter gamma (decimal string)");
  app.add_option("--alpha", o.alpha_str, "line parameter alpha = (a+b)/c");
  app.add_option("--beta", o.beta_str, "line parameter beta = (b-a)/c");
  app.add_flag("--ref", o.ref, "use the reference point t = ln 2, gamma = (ln 2)/2");
  app.add_option("--precision", o.precision, "working precision in bits (>= 64)")->default_val(256);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->default_val("json");
  app.add_option("--out", o.out_path, "write output to a file instead of stdout");

  int n = 0, nmax = 12, kmax = 24, samples = 101;
  std::string method = "all", nrange = "2..6", step_s = "1e-4", bmin_s = "-0.999", bmax_s = "1.5";

  auto* c_enum = app.add_subcommand("enumerate", "list all DWBC configurations (n <= 6)");
  c_enum->fallthrough();
  c_enum->add_option("--n", n, "lattice size")->required();
  auto* c_part = app.add_subcommand("partition", "partition function Z_n by one or all routes");
  c_part->fallthrough();
  c_part->add_option("--n", n, "lattice size")->required();
  c_part->add_option("--method", method, "brute | izergin | norms | all")->default_val("all");
  auto* c_norms = app.add_subcommand("norms", "orthogonal polynomial norms table (k <= kmax <= 24)");
  c_norms->fallthrough();
  c_norms->add_option("--kmax", kmax, "largest k")->default_val(24);
  auto* c_asym = app.add_subcommand("asymptotics", "Z_n against the C G^n F^{n^2} model");
  c_asym->fallthrough();
  c_asym->add_option("--nmax", nmax, "largest n")->default_val(12);
  auto* c_phase = app.add_subcommand("phase-curve", "F0 and F0' on the line (a+b)/c = alpha");
  c_phase->fallthrough();
  c_phase->add_option("--beta-min", bmin_s)->default_val("-0.999");
  c_phase->add_option("--beta-max", bmax_s)->default_val("1.5");
  c_phase->add_option("--samples", samples)->default_val(101);
  auto* c_toda = app.add_subcommand("toda", "finite-difference Toda residuals");
  c_toda->fallthrough();
  c_toda->add_option("--n", nrange, "n or nmin..nmax")->default_val("2..6");
  c_toda->add_option("--step", step_s, "central-difference step")->default_val("1e-4");

  try {
    app.parse(argc, argv);
    if (o.precision < ExtReal::kMinPrec) throw std::domain_error("--precision must be >= 64");
    if (c_enum->parsed()) cmd_enumerate(o, n);
    if (c_part->parsed()) cmd_partition(o, n, method);
    if (c_norms->parsed()) cmd_norms(o, kmax);
    if (c_asym->parsed()) cmd_asymptotics(o, nmax);
    if (c_phase->parsed()) cmd_phase_curve(o, bmin_s, bmax_s, samples);
    if (c_toda->parsed()) cmd_toda(o, nrange, step_s);
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const disagreement_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
