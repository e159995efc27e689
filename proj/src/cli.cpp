#include "eulerref/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>

#include "eulerref/errors.hpp"
#include "eulerref/exact_core.hpp"
#include "eulerref/moments.hpp"
#include "eulerref/real_roots.hpp"
#include "eulerref/series.hpp"
#include "eulerref/stein.hpp"
#include "eulerref/table_cache.hpp"
#include "eulerref/verify.hpp"

namespace eulerref {

namespace {

using Json = nlohmann::ordered_json;

struct Params {
  std::string command;
  std::string format = "json";
  int digits = 12;
  int n = 0;
  int d = 0;
  int k = 0;
  int l = 0;
  int m = 4;
  std::string method = "closed_form";
  std::string suite = "all";
  int nmax = 0;
  long samples = 100000;
  std::uint64_t seed = 42;
  int workers = 1;
  int cap = 0;
  std::string cache_dir;
  bool pde = false;
  std::vector<int> orders{8, 9, 8};
  std::vector<double> probe;
  int probe_terms = 18;
  double tol = 1e-6;
};

// Every numeric JSON field is an exact string or a tagged float.
Json num(long v) { return std::to_string(v); }
Json num(const Count& c) { return to_string(c); }
Json num(const Ratio& r) { return to_string(r); }
Json tagged(double v) { return Json{{"type", "float"}, {"value", v}}; }

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(num(c));
  return a;
}

Json verdict_json(const RootVerdict& v) {
  return Json{{"degree", num(v.degree)},
              {"distinct_real_roots", num(v.distinct_real_roots)},
              {"squarefree", v.squarefree},
              {"verdict", v.verdict}};
}

class Command {
 public:
  explicit Command(Params p) : p_(std::move(p)) {}
  virtual ~Command() = default;
  virtual Json params() const = 0;
  virtual Json run() = 0;
  // Commands that carry their own CSV or text shape override these.
  virtual bool write_csv(const Json&, std::ostream&) const { return false; }
  virtual bool write_text(const Json&, std::ostream&) const { return false; }
  bool failed() const { return failed_; }

 protected:
  Params p_;
  bool failed_ = false;
};

class TableCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    return Json{{"n", num(p_.n)}, {"method", p_.method}, {"format", p_.format}, {"cache_dir", p_.cache_dir}};
  }
  Json run() override {
    const auto t = cached_table(p_.n, parse_table_method(p_.method), p_.cache_dir);
    Json rows = Json::array();
    for (int d = 0; d < p_.n; ++d) {
      Json row = Json::array();
      for (int k = 1; k <= p_.n; ++k) row.push_back(num(t->at(d, k)));
      rows.push_back(row);
    }
    Json rs = Json::array(), cs = Json::array();
    for (int d = 0; d < p_.n; ++d) rs.push_back(num(t->row_sum(d)));
    for (int k = 1; k <= p_.n; ++k) cs.push_back(num(t->column_sum(k)));
    table_ = t;
    return Json{{"counts", rows}, {"row_sums", rs}, {"column_sums", cs}};
  }
  bool write_csv(const Json&, std::ostream& out) const override {
    out << "n,d,k,count\n";
    for (int d = 0; d < p_.n; ++d)
      for (int k = 1; k <= p_.n; ++k) out << p_.n << ',' << d << ',' << k << ',' << table_->at(d, k).get_str() << '\n';
    return true;
  }

 private:
  std::shared_ptr<const RefinedTable> table_;
};

class VerifyCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    return Json{{"suite", p_.suite}, {"nmax", num(p_.nmax)}, {"format", p_.format}};
  }
  Json run() override {
    records_ = run_suite(p_.suite, p_.nmax);
    Json checks = Json::array(), failures = Json::array();
    for (const auto& r : records_) {
      const char* status = r.skipped ? "skip" : (r.passed ? "pass" : "fail");
      Json c{{"identity", r.identity}, {"status", status}, {"witness", r.witness}};
      if (!r.passed) failures.push_back(c);
      checks.push_back(std::move(c));
    }
    failed_ = !failures.empty();
    return Json{{"passed", !failed_}, {"checks", checks}, {"failures", failures}};
  }
  bool write_csv(const Json&, std::ostream& out) const override {
    out << "identity,status,witness\n";
    for (const auto& r : records_)
      out << r.identity << ',' << (r.skipped ? "skip" : (r.passed ? "pass" : "fail")) << ",\"" << r.witness << "\"\n";
    return true;
  }
  bool write_text(const Json& result, std::ostream& out) const override {
    std::size_t width = 0;
    for (const auto& r : records_) width = std::max(width, r.identity.size());
    for (const auto& r : records_) {
      out << (r.skipped ? "SKIP " : (r.passed ? "PASS " : "FAIL ")) << r.identity
          << std::string(width + 2 - r.identity.size(), ' ') << r.witness << '\n';
    }
    out << (result["passed"].get<bool>() ? "all checks passed" : "some checks FAILED") << '\n';
    return true;
  }

 private:
  std::vector<CheckRecord> records_;
};

class MomentsCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    return Json{{"n", num(p_.n)}, {"d", num(p_.d)}, {"m", num(p_.m)}, {"format", p_.format}};
  }
  Json run() override {
    const auto f = first_dist(p_.n, p_.d);
    Json probs = Json::array();
    for (const auto& q : f.probs) probs.push_back(num(q));
    Json moments = Json::array();
    for (int m = 0; m <= p_.m; ++m) {
      const Ratio a = rising_moment(p_.n, p_.d, m);
      if (a != rising_moment_direct(p_.n, p_.d, m)) throw ConsistencyError("rising moment routes disagree");
      moments.push_back(num(a));
    }
    const auto uv = unimodal_case(p_.n, p_.d);
    const auto mv = des_mean_var(p_.n);
    failed_ = !uv.holds;
    return Json{{"first_dist", probs},
                {"expected_first", num(expected_first(p_.n, p_.d))},
                {"expected_last", num(expected_last(p_.n, p_.d))},
                {"rising_moments", moments},
                {"unimodal_case", std::string(to_string(uv.label))},
                {"unimodal_holds", uv.holds},
                {"des_mean", num(mv.mean)},
                {"des_variance", num(mv.variance)}};
  }
};

class GeomCmd : public Command {
 public:
  using Command::Command;
  Json params() const override { return Json{{"n", num(p_.n)}, {"d", num(p_.d)}, {"format", p_.format}}; }
  Json run() override {
    return Json{{"p", num(make_ratio(p_.d, p_.d + 1))},
                {"ratio_sup", num(geometric_ratio_sup(p_.n, p_.d))},
                {"tvd", num(tvd_geometric(p_.n, p_.d))}};
  }
};

class RootsCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    Json j{{"n", num(p_.n)}, {"k", num(p_.k)}};
    if (p_.l > 0) j["l"] = num(p_.l);
    j["cap"] = num(cap());
    j["format"] = p_.format;
    return j;
  }
  Json run() override {
    if (p_.n > cap()) {
      throw ResourceLimit("tower_cap", cap(),
                          "n = " + std::to_string(p_.n) + " exceeds tower_cap = " + std::to_string(cap()));
    }
    if (p_.l > 0) {
      const auto v = check_neggers_both_fixed(p_.n, p_.k, p_.l, cap());
      failed_ = !v.verdict;
      return Json{{"polynomial", poly_json(both_fixed_descent_poly(p_.n, p_.k, p_.l))},
                  {"reduced", poly_json(both_fixed_reduced_poly(p_.n, p_.k, p_.l))},
                  {"sturm", verdict_json(v)}};
    }
    const int u = p_.k - 1, v = p_.n - p_.k;
    const auto verdict = check_neggers_first_fixed(p_.n, p_.k, cap());
    Json tower = Json::array();
    for (const auto& h : h_tower(u, v, cap()))
      tower.push_back(Json{{"numerator", poly_json(h.numerator)}, {"pole_order", num(h.pole_order)}});
    const bool interlaces = p_.n <= 12 ? tower_interlaces(u, v) : true;
    failed_ = !verdict.verdict || !interlaces;
    Json j{{"polynomial", poly_json(c_poly(u, v, cap()))}, {"sturm", verdict_json(verdict)}, {"tower", tower}};
    if (p_.n <= 12) j["interlaces"] = interlaces;
    return j;
  }

 private:
  int cap() const { return p_.cap > 0 ? p_.cap : kDefaultTowerCap; }
};

class SteinCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    return Json{{"n", num(p_.n)},          {"d", num(p_.d)},         {"samples", num(p_.samples)},
                {"seed", std::to_string(p_.seed)}, {"workers", num(p_.workers)},
                {"cap", num(cap())},       {"format", p_.format}};
  }
  Json run() override {
    const auto r = mc_drift(p_.n, p_.d, p_.samples, p_.seed, p_.workers);
    Json j{{"n", num(r.n)},
           {"d", num(r.d)},
           {"samples", num(r.samples)},
           {"seed", std::to_string(r.seed)},
           {"workers", num(r.workers)},
           {"mean", tagged(r.mean)},
           {"std_error", tagged(r.std_error)},
           {"exact_target", num(r.exact_target)},
           {"acceptance_rate", tagged(r.acceptance_rate)}};
    if (p_.n <= cap()) {
      j["exact_drift"] = num(exact_drift(p_.n, p_.d));
      j["lambda"] = num(lambda_of(p_.n));
      j["lambda_verified"] = verify_lambda(p_.n, cap());
      failed_ = !j["lambda_verified"].get<bool>();
    }
    return j;
  }

 private:
  int cap() const { return p_.cap > 0 ? p_.cap : kDefaultPairCap; }
};

class GfCmd : public Command {
 public:
  using Command::Command;
  Json params() const override {
    Json j;
    if (!p_.probe.empty()) {
      j = Json{{"probe", Json{tagged(p_.probe[0]), tagged(p_.probe[1]), tagged(p_.probe[2])}},
               {"terms", num(p_.probe_terms)},
               {"tol", tagged(p_.tol)}};
    } else if (p_.pde) {
      j = Json{{"orders", Json{num(p_.orders[0]), num(p_.orders[1]), num(p_.orders[2])}}};
    } else {
      j = Json{{"n", num(p_.n)}};
      if (p_.k > 0) j["k"] = num(p_.k);
      if (p_.d >= 0) j["d"] = num(p_.d);
    }
    j["format"] = p_.format;
    return j;
  }
  Json run() override {
    if (!p_.probe.empty()) {
      const double r = gfall_numeric_check(p_.probe[0], p_.probe[1], p_.probe[2], p_.probe_terms, p_.tol);
      failed_ = !(r < p_.tol);
      return Json{{"residual", tagged(r)}, {"within_tol", !failed_}};
    }
    if (p_.pde) {
      failed_ = !pde_check(p_.orders[0], p_.orders[1], p_.orders[2]);
      return Json{{"pde_holds", !failed_}};
    }
    if (p_.n < 1) throw InvalidArgument("--n must be >= 1");
    if (p_.k > 0) return Json{{"gf_nk", poly_json(gf_nk(p_.n, p_.k))}};
    if (p_.d >= 0) return Json{{"gf_nd", poly_json(gf_nd(p_.n, p_.d))}};
    const BiPoly b = gf_n(p_.n);
    Json rows = Json::array();
    for (int i = 0; i < b.x_terms(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < b.y_terms(); ++j) row.push_back(num(b.at(i, j)));
      rows.push_back(row);
    }
    return Json{{"gf_n", rows}};
  }
};

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Scalar rendering for text and generic CSV output.
std::string scalar(const Json& v, int digits, bool decorate) {
  if (v.is_object() && v.contains("type") && v["type"] == "float") return format_double(v["value"].get<double>(), digits);
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (decorate && s.find('/') != std::string::npos) {
      Ratio r;
      if (r.set_str(s, 10) == 0) return s + " (" + to_decimal(r, digits) + ")";
    }
    return s;
  }
  return v.dump();
}

bool is_leaf(const Json& v) { return !v.is_structured() || (v.is_object() && v.contains("type")); }

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, const Json*>>& out) {
  if (is_leaf(v)) {
    out.emplace_back(path, &v);
    return;
  }
  if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), is_leaf)) {
      out.emplace_back(path, &v);
      return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
}

std::string render_leaf(const Json& v, int digits, bool decorate, const char* sep) {
  if (!v.is_array()) return scalar(v, digits, decorate);
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + scalar(v[i], digits, decorate);
  return s;
}

std::string header_line(const std::string& command, const Json& params) {
  std::string s = "# eulerref " + command;
  std::vector<std::pair<std::string, const Json*>> flat;
  flatten(params, "", flat);
  for (const auto& [k, v] : flat) s += " " + k + "=" + render_leaf(*v, 17, false, ",");
  return s;
}

void emit(const Params& p, const Command& cmd, const Json& params, const Json& result, std::ostream& out) {
  if (p.format == "json") {
    out << Json{{"command", p.command}, {"params", params}, {"result", result}}.dump(2) << '\n';
    return;
  }
  out << header_line(p.command, params) << '\n';
  if (p.format == "csv" && cmd.write_csv(result, out)) return;
  if (p.format == "text" && cmd.write_text(result, out)) return;
  std::vector<std::pair<std::string, const Json*>> flat;
  flatten(result, "", flat);
  if (p.format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : flat) out << k << ",\"" << render_leaf(*v, p.digits, false, " ") << "\"\n";
    return;
  }
  for (const auto& [k, v] : flat) out << k << ": " << render_leaf(*v, p.digits, true, "  ") << '\n';
}

void emit_error(const Params& p, const Json& params, const Json& error, std::ostream& out, std::ostream& err) {
  if (p.format == "json") {
    out << Json{{"command", p.command}, {"params", params}, {"error", error}}.dump(2) << '\n';
  }
  err << "eulerref: " << error["message"].get<std::string>() << '\n';
}

std::unique_ptr<Command> make_command(const Params& p) {
  if (p.command == "table") return std::make_unique<TableCmd>(p);
  if (p.command == "verify") return std::make_unique<VerifyCmd>(p);
  if (p.command == "moments") return std::make_unique<MomentsCmd>(p);
  if (p.command == "geom") return std::make_unique<GeomCmd>(p);
  if (p.command == "roots") return std::make_unique<RootsCmd>(p);
  if (p.command == "stein") return std::make_unique<SteinCmd>(p);
  return std::make_unique<GfCmd>(p);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Params p;
  p.cache_dir = default_cache_dir().string();

  CLI::App app{"Eulerian numbers refined by first and last letter", "eulerref"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", p.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--digits", p.digits, "significant digits for decimal renderings")->check(CLI::Range(1, 40));
  };

  auto* table = app.add_subcommand("table", "refined table <n,d>_k");
  table->add_option("--n", p.n)->required()->check(CLI::Range(1, 100000));
  table->add_option("--method", p.method)->check(CLI::IsMember({"closed_form", "rec1", "rec2", "rec3"}));
  table->add_option("--cache-dir", p.cache_dir, "table cache directory (default $EULERREF_CACHE_DIR)");
  add_format(table);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", p.suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--nmax", p.nmax, "largest n per check (default: each check's ceiling)")
      ->check(CLI::NonNegativeNumber);
  add_format(verify);

  auto* moments = app.add_subcommand("moments", "law of the first letter given d descents");
  moments->add_option("--n", p.n)->required()->check(CLI::PositiveNumber);
  moments->add_option("--d", p.d)->required();
  moments->add_option("--m", p.m, "highest rising moment")->check(CLI::Range(0, 64));
  add_format(moments);

  auto* geom = app.add_subcommand("geom", "distance to the geometric limit");
  geom->add_option("--n", p.n)->required()->check(CLI::PositiveNumber);
  geom->add_option("--d", p.d)->required();
  add_format(geom);

  auto* roots = app.add_subcommand("roots", "real-rootedness of first- or both-fixed descent polynomials");
  roots->add_option("--n", p.n)->required()->check(CLI::PositiveNumber);
  roots->add_option("--k", p.k)->required();
  roots->add_option("--l", p.l, "last letter; selects the both-ends polynomial");
  roots->add_option("--cap", p.cap, "tower cap (default 40)")->check(CLI::PositiveNumber);
  add_format(roots);

  auto* stein = app.add_subcommand("stein", "exchangeable-pair drift by Monte Carlo");
  stein->add_option("--n", p.n)->required();
  stein->add_option("--d", p.d)->required();
  stein->add_option("--samples", p.samples)->check(CLI::PositiveNumber);
  stein->add_option("--seed", p.seed);
  stein->add_option("--workers", p.workers)->check(CLI::Range(1, 1024));
  stein->add_option("--cap", p.cap, "largest n for exact enumeration (default 8)")->check(CLI::PositiveNumber);
  add_format(stein);

  auto* gf = app.add_subcommand("gf", "generating-function coefficients and checks");
  p.d = -1;
  gf->add_option("--n", p.n);
  auto* gk = gf->add_option("--k", p.k);
  auto* gd = gf->add_option("--d", p.d);
  gk->excludes(gd);
  auto* pde = gf->add_flag("--pde", p.pde, "check the defining PDE of the trivariate series");
  gf->add_option("--orders", p.orders, "x, y, z orders for --pde")->expected(3)->needs(pde);
  auto* probe = gf->add_option("--probe", p.probe, "x y z: compare with the integral form")->expected(3);
  gf->add_option("--terms", p.probe_terms, "largest n kept in the series for --probe")->needs(probe);
  gf->add_option("--tol", p.tol)->needs(probe)->check(CLI::PositiveNumber);
  probe->excludes(pde);
  add_format(gf);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  p.command = app.get_subcommands().front()->get_name();

  auto cmd = make_command(p);
  Json params = cmd->params();
  try {
    Json result = cmd->run();
    emit(p, *cmd, params, result, out);
    return cmd->failed() ? kExitCheckFailed : kExitOk;
  } catch (const ResourceLimit& e) {
    emit_error(p, params, Json{{"kind", "resource_limit"}, {"cap", e.cap}, {"value", num(e.value)}, {"message", e.what()}},
               out, err);
    return kExitResource;
  } catch (const ConsistencyError& e) {
    emit_error(p, params, Json{{"kind", "consistency"}, {"message", e.what()}}, out, err);
    return kExitCheckFailed;
  } catch (const InvalidArgument& e) {
    emit_error(p, params, Json{{"kind", "invalid_argument"}, {"message", e.what()}}, out, err);
    return kExitUsage;
  } catch (const UndefinedDistribution& e) {
    emit_error(p, params, Json{{"kind", "undefined_distribution"}, {"message", e.what()}}, out, err);
    return kExitUsage;
  } catch (const DomainError& e) {
    emit_error(p, params, Json{{"kind", "domain"}, {"message", e.what()}}, out, err);
    return kExitUsage;
  }
}

}  // namespace eulerref
