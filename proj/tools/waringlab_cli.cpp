#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "waringlab/waringlab.h"

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kBadConfig = 2, kBudget = 3, kNumeric = 4 };

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

[[noreturn]] void bad_config(const std::string& m) { throw CliError(kBadConfig, "config: " + m); }

int exit_for(wl_status st) {
  switch (st) {
    case WL_OK: return kOk;
    case WL_BUDGET_EXCEEDED: return kBudget;
    case WL_INVALID_ARGUMENT:
    case WL_MESH_TOO_COARSE:
    case WL_HYPOTHESIS: return kBadConfig;
    default: return kNumeric;
  }
}

void check(wl_status st) {
  if (st != WL_OK) throw CliError(exit_for(st), std::string(wl_status_name(st)) + ": " + wl_last_error());
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// FNV-1a 64 over the canonical (key-sorted, compact) dump, run metadata removed.
std::string config_hash(const json& cfg) {
  json c = cfg;
  if (c.is_object()) {
    c.erase("workers");
    c.erase("label");
  }
  const std::string text = c.dump();
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- typed config access ----

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) bad_config(std::string("missing field '") + key + "'");
  return j.at(key);
}

double get_num(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) bad_config(std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad_config(std::string("'") + key + "' must be finite");
  return d;
}

double get_num(const json& j, const char* key, double dflt) { return j.contains(key) ? get_num(j, key) : dflt; }

int get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad_config(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

int get_int(const json& j, const char* key, int dflt) { return j.contains(key) ? get_int(j, key) : dflt; }

std::string get_str(const json& j, const char* key, const std::string& dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_string()) bad_config(std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

bool get_bool(const json& j, const char* key, bool dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_boolean()) bad_config(std::string("'") + key + "' must be true or false");
  return j.at(key).get<bool>();
}

std::vector<double> get_num_list(const json& j, const char* key) {
  const json& v = field(j, key);
  std::vector<double> out;
  if (v.is_number()) {
    out.push_back(v.get<double>());
  } else if (v.is_array() && !v.empty()) {
    for (const auto& e : v) {
      if (!e.is_number()) bad_config(std::string("'") + key + "' entries must be numbers");
      out.push_back(e.get<double>());
    }
  } else {
    bad_config(std::string("'") + key + "' must be a number or a non-empty array of numbers");
  }
  return out;
}

std::string shift_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return num(v.get<double>());
  bad_config("theta entries must be preset names or numbers");
}

// theta: one value (broadcast to all s variables) or an array of length s.
std::vector<std::string> get_thetas(const json& j, int s) {
  const json& v = field(j, "theta");
  std::vector<std::string> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(shift_text(e));
    if (static_cast<int>(out.size()) != s) bad_config("theta array length must equal s");
  } else {
    out.assign(static_cast<std::size_t>(std::max(s, 0)), shift_text(v));
  }
  return out;
}

double get_theta(const json& j) {
  double t = 0;
  check(wl_parse_shift(shift_text(field(j, "theta")).c_str(), &t));
  return t;
}

struct InstanceHandle {
  wl_instance* p = nullptr;
  ~InstanceHandle() { wl_instance_free(p); }
};
struct KernelHandle {
  wl_kernel* p = nullptr;
  ~KernelHandle() { wl_kernel_free(p); }
};
struct DissectionHandle {
  wl_dissection* p = nullptr;
  ~DissectionHandle() { wl_dissection_free(p); }
};

void make_instance(const json& cfg, InstanceHandle& h) {
  const int k = get_int(cfg, "k"), s = get_int(cfg, "s");
  if (s < 1) bad_config("s must be positive");
  const auto th = get_thetas(cfg, s);
  std::vector<const char*> ptrs;
  for (const auto& t : th) ptrs.push_back(t.c_str());
  check(wl_instance_create_named(k, ptrs.data(), s, get_num(cfg, "eta"), &h.p));
}

// "kernel": {"kind": "dh", "eta": 1, "t_choice": "logP", "t_fixed": 0}; eta defaults to the instance eta.
void make_kernel(const json& cfg, double P, double default_eta, KernelHandle& h) {
  const json kj = cfg.contains("kernel") ? cfg.at("kernel") : json::object();
  if (!kj.is_object()) bad_config("'kernel' must be an object");
  const std::string kind = get_str(kj, "kind", "dh");
  const std::string tc = get_str(kj, "t_choice", "logP");
  check(wl_kernel_create(kind.c_str(), get_num(kj, "eta", default_eta), P, tc.c_str(), get_num(kj, "t_fixed", 0),
                         &h.p));
}

// "dissection": {"xi": 0.5, "q_scale": 0, "t_choice": "logP", "t_fixed": 0, "t_exp": 0}
void make_dissection(const json& cfg, double P, int k, DissectionHandle& h) {
  const json dj = cfg.contains("dissection") ? cfg.at("dissection") : json::object();
  if (!dj.is_object()) bad_config("'dissection' must be an object");
  const std::string tc = get_str(dj, "t_choice", "logP");
  check(wl_dissection_create(P, k, get_num(dj, "xi", 0.5), get_num(dj, "q_scale", 0), tc.c_str(),
                             get_num(dj, "t_fixed", 0), get_num(dj, "t_exp", 0), &h.p));
}

// ---- output ----

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<double> runtime_ms;

  std::string render(const std::string& hash) const {
    std::ostringstream os;
    for (const auto& h : header) os << h << ',';
    os << "config_hash\n";
    for (const auto& r : rows) {
      for (const auto& c : r) os << csv_field(c) << ',';
      os << hash << '\n';
    }
    return os.str();
  }
};

struct Run {
  json cfg;
  std::string out_path;
  int workers = 1;
  std::int64_t budget_tuples = 0;
  std::string command;

  wl_options options() const { return {budget_tuples, 0, workers}; }
};

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kBadConfig, "cannot open output file " + path);
  f << body;
}

void emit(const Run& run, const Table& t, double total_ms) {
  const std::string body = t.render(config_hash(run.cfg));
  if (run.out_path.empty()) {
    std::cout << body;
    return;
  }
  write_file(run.out_path, body);
  json meta;
  meta["command"] = run.command;
  meta["version"] = wl_version();
  meta["workers"] = run.workers;
  meta["config_hash"] = config_hash(run.cfg);
  meta["runtime_ms_total"] = total_ms;
  meta["runtime_ms"] = t.runtime_ms;
  meta["finished_unix"] = static_cast<std::int64_t>(std::time(nullptr));
  write_file(run.out_path + ".meta.json", meta.dump(2) + "\n");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void add_quad_cols(std::vector<std::string>& row, const wl_quad_result& r) {
  row.insert(row.end(), {num(r.re), num(r.im), num(r.tail_bound), num(r.disc_error), std::to_string(r.panels),
                         num(r.mesh)});
}
const std::vector<std::string> kQuadCols{"value_re", "value_im", "tail_bound", "disc_error", "panels", "mesh"};

// ---- subcommands ----

// A budget failure keeps the rows already computed and appends a diagnostic row.
int cmd_count(const Run& run, Table& t) {
  const json& c = run.cfg;
  InstanceHandle inst;
  make_instance(c, inst);
  const auto taus = get_num_list(c, "tau");
  const std::string method = get_str(c, "method", "auto");
  if (method != "auto" && method != "brute" && method != "mitm") bad_config("method must be auto, brute or mitm");
  const int k = get_int(c, "k"), s = get_int(c, "s");
  const wl_count_method m =
      method == "mitm" || (method == "auto" && s >= 4) ? WL_MITM : WL_BRUTE;
  t.header = {"tau", "P", "N", "Nstar", "weighted", "main_term", "ratio", "method"};
  const wl_options opts = run.options();
  for (double tau : taus) {
    const auto t0 = std::chrono::steady_clock::now();
    const double P = std::pow(tau, 1.0 / k);
    wl_count_result n{}, ns{}, w{};
    double mt = 0;
    wl_status st = wl_count(inst.p, tau, WL_COUNT_N, m, &opts, &n);
    if (st == WL_OK) st = wl_count(inst.p, tau, WL_COUNT_NSTAR, m, &opts, &ns);
    if (st == WL_OK) st = wl_count(inst.p, tau, WL_COUNT_WEIGHTED, m, &opts, &w);
    if (st == WL_OK) st = wl_main_term(inst.p, tau, &mt);
    if (st == WL_BUDGET_EXCEEDED) {
      t.rows.push_back({num(tau), num(P), "", "", "", "", "", std::string("budget_exceeded: ") + wl_last_error()});
      t.runtime_ms.push_back(ms_since(t0));
      return kBudget;
    }
    check(st);
    t.rows.push_back({num(tau), num(P), num(n.value), num(ns.value), num(w.value), num(mt), num(n.value / mt),
                      n.method == WL_MITM ? "mitm" : "brute"});
    t.runtime_ms.push_back(ms_since(t0));
  }
  return kOk;
}

int cmd_integrate(const Run& run, Table& t) {
  const json& c = run.cfg;
  InstanceHandle inst;
  make_instance(c, inst);
  const int k = get_int(c, "k");
  const double A = get_num(c, "A"), mesh = get_num(c, "mesh", 0);
  const bool with_count = get_bool(c, "weighted_count", false);
  t.header = {"tau", "kernel", "A"};
  t.header.insert(t.header.end(), kQuadCols.begin(), kQuadCols.end());
  if (with_count) t.header.push_back("weighted");
  const wl_options opts = run.options();
  for (double tau : get_num_list(c, "tau")) {
    const auto t0 = std::chrono::steady_clock::now();
    KernelHandle kern;
    make_kernel(c, std::pow(tau, 1.0 / k), wl_instance_eta(inst.p), kern);
    wl_quad_result r{};
    check(wl_dh_integral(inst.p, tau, kern.p, A, mesh, run.workers, &r));
    std::vector<std::string> row{num(tau), get_str(c.value("kernel", json::object()), "kind", "dh"), num(A)};
    add_quad_cols(row, r);
    if (with_count) {
      wl_count_result w{};
      check(wl_count(inst.p, tau, WL_COUNT_WEIGHTED, WL_BRUTE, &opts, &w));
      row.push_back(num(w.value));
    }
    t.rows.push_back(std::move(row));
    t.runtime_ms.push_back(ms_since(t0));
  }
  return kOk;
}

int cmd_arcs(const Run& run, Table& t) {
  const json& c = run.cfg;
  InstanceHandle inst;
  make_instance(c, inst);
  const int k = get_int(c, "k");
  const double tau = get_num(c, "tau"), A = get_num(c, "A"), mesh = get_num(c, "mesh", 0);
  const double P = std::pow(tau, 1.0 / k);
  KernelHandle kern;
  make_kernel(c, P, wl_instance_eta(inst.p), kern);
  DissectionHandle d;
  make_dissection(c, P, k, d);
  const auto t0 = std::chrono::steady_clock::now();
  wl_quad_result parts[7], total{};
  check(wl_arc_contributions(inst.p, tau, kern.p, d.p, A, mesh, run.workers, parts, &total));
  const double elapsed = ms_since(t0);
  t.header = {"class"};
  t.header.insert(t.header.end(), kQuadCols.begin(), kQuadCols.end());
  for (int i = 0; i < 7; ++i) {
    std::vector<std::string> row{wl_arc_class_name(i)};
    add_quad_cols(row, parts[i]);
    t.rows.push_back(std::move(row));
  }
  std::vector<std::string> row{"total"};
  add_quad_cols(row, total);
  t.rows.push_back(std::move(row));
  t.runtime_ms.push_back(elapsed);
  return kOk;
}

wl_quad_result minor_point(const Run& run, const json& c, double P) {
  const int k = get_int(c, "k"), s = get_int(c, "s");
  const double theta = get_theta(c);
  KernelHandle kern;
  make_kernel(c, P, 1.0, kern);
  DissectionHandle d;
  make_dissection(c, P, k, d);
  wl_quad_result r{};
  check(wl_minor_moment(theta, 2 * s, k, P, kern.p, d.p, get_num(c, "A"), get_num(c, "mesh", 0), run.workers,
                        get_bool(c, "whole_line", false) ? 1 : 0, &r));
  return r;
}

wl_quad_result hua_point(const Run& run, const json& c, double P) {
  wl_quad_result r{};
  check(wl_hua_moment(get_theta(c), get_int(c, "j"), get_int(c, "k"), P, get_num(c, "zeta"), get_num(c, "A"),
                      get_num(c, "mesh", 0), run.workers, &r));
  return r;
}

int sweep(const Run& run, Table& t, const std::function<wl_quad_result(double)>& point,
          std::vector<std::pair<double, double>>* pts = nullptr) {
  t.header = {"P"};
  t.header.insert(t.header.end(), kQuadCols.begin(), kQuadCols.end());
  for (double P : get_num_list(run.cfg, "P")) {
    const auto t0 = std::chrono::steady_clock::now();
    const wl_quad_result r = point(P);
    std::vector<std::string> row{num(P)};
    add_quad_cols(row, r);
    t.rows.push_back(std::move(row));
    t.runtime_ms.push_back(ms_since(t0));
    if (pts) pts->emplace_back(P, r.re);
  }
  return kOk;
}

int cmd_minor(const Run& run, Table& t) {
  return sweep(run, t, [&](double P) { return minor_point(run, run.cfg, P); });
}

int cmd_hua(const Run& run, Table& t) {
  return sweep(run, t, [&](double P) { return hua_point(run, run.cfg, P); });
}

int cmd_jcount(const Run& run, Table& t) {
  const json& c = run.cfg;
  const int s = get_int(c, "s"), k = get_int(c, "k");
  const bool shifted = c.contains("theta");
  const double theta = shifted ? get_theta(c) : 0;
  const double eta = shifted ? get_num(c, "eta") : 0;
  const wl_options opts = run.options();
  t.header = {"s", "k", "P", "J"};
  if (shifted) t.header.push_back("J_shifted");
  for (double Pd : get_num_list(c, "P")) {
    if (Pd != std::floor(Pd)) bad_config("P must be integers for jcount");
    const auto t0 = std::chrono::steady_clock::now();
    const auto P = static_cast<std::int64_t>(Pd);
    std::int64_t j = 0, js = 0;
    check(wl_count_j(s, k, P, &opts, &j));
    std::vector<std::string> row{std::to_string(s), std::to_string(k), std::to_string(P), std::to_string(j)};
    if (shifted) {
      check(wl_count_j_shifted(s, k, P, theta, eta, &opts, &js));
      row.push_back(std::to_string(js));
    }
    t.rows.push_back(std::move(row));
    t.runtime_ms.push_back(ms_since(t0));
  }
  return kOk;
}

int cmd_classify(const Run& run, Table& t) {
  const json& c = run.cfg;
  InstanceHandle inst;
  make_instance(c, inst);
  const int k = get_int(c, "k");
  DissectionHandle d;
  make_dissection(c, get_num(c, "P"), k, d);
  const int idx = get_int(c, "theta3_index", 0);
  t.header = {"alpha", "label", "class"};
  for (double a : get_num_list(c, "alpha")) {
    const auto t0 = std::chrono::steady_clock::now();
    char label[128];
    int cls = 0;
    check(wl_classify(d.p, inst.p, idx, a, label, sizeof label, &cls));
    t.rows.push_back({num(a), label, wl_arc_class_name(cls)});
    t.runtime_ms.push_back(ms_since(t0));
  }
  return kOk;
}

int cmd_slopes(const Run& run, Table& t) {
  const json& c = run.cfg;
  const std::string family = get_str(c, "family", "minor");
  if (family != "minor" && family != "hua") bad_config("family must be minor or hua");
  if (get_num_list(c, "P").size() < 4) bad_config("a slope fit needs at least 4 P values");
  double envelope = 0;
  if (family == "minor") {
    envelope = wl_minor_moment_envelope(get_int(c, "s"), get_int(c, "k"));
  } else {
    const int j = get_int(c, "j");
    envelope = static_cast<double>(j) * j;
  }
  std::vector<std::pair<double, double>> pts;
  sweep(run, t, [&](double P) { return family == "minor" ? minor_point(run, c, P) : hua_point(run, c, P); }, &pts);
  std::vector<double> Ps, vs;
  for (const auto& [p, v] : pts) {
    Ps.push_back(p);
    vs.push_back(v);
  }
  double e = 0, b = 0, res = 0;
  check(wl_slope_estimate(Ps.data(), vs.data(), static_cast<int>(Ps.size()), &e, &b, &res));
  json fit;
  fit["family"] = family;
  fit["exponent"] = e;
  fit["intercept"] = b;
  fit["residual"] = res;
  fit["envelope_exponent"] = envelope;
  fit["points"] = static_cast<int>(Ps.size());
  fit["config_hash"] = config_hash(c);
  const std::string text = fit.dump(2) + "\n";
  if (!run.out_path.empty()) write_file(run.out_path + ".fit.json", text);
  std::cerr << text;
  return kOk;
}

// Re-derives the config hash of each listed CSV and compares it row by row.
json hash_checks(const json& c) {
  json out = json::array();
  if (!c.contains("hash_checks")) return out;
  const json& list = c.at("hash_checks");
  if (!list.is_array()) bad_config("hash_checks must be an array");
  for (const auto& e : list) {
    const std::string csv = get_str(e, "csv", ""), cfgp = get_str(e, "config", "");
    if (csv.empty() || cfgp.empty()) bad_config("hash_checks entries need csv and config paths");
    json rec;
    rec["name"] = "config_hash:" + csv;
    bool ok = true;
    std::string detail;
    try {
      std::ifstream cf(cfgp);
      if (!cf) throw std::runtime_error("cannot read " + cfgp);
      const std::string want = config_hash(json::parse(cf));
      std::ifstream in(csv);
      if (!in) throw std::runtime_error("cannot read " + csv);
      std::string line;
      std::getline(in, line);
      int rows = 0;
      while (std::getline(in, line)) {
        ++rows;
        const auto pos = line.rfind(',');
        if (pos == std::string::npos || line.substr(pos + 1) != want) ok = false;
      }
      detail = std::to_string(rows) + " rows, expected " + want;
      if (rows == 0) ok = false;
    } catch (const std::exception& ex) {
      ok = false;
      detail = ex.what();
    }
    rec["pass"] = ok;
    rec["detail"] = detail;
    out.push_back(rec);
  }
  return out;
}

int cmd_verify(const Run& run) {
  const json& c = run.cfg;
  const bool inject = get_bool(c, "inject_k1_sign_error", false);
  const json extra = hash_checks(c);
  char* js = nullptr;
  char* cs = nullptr;
  int pass_j = 0, pass_c = 0;
  check(wl_verify(run.workers, inject ? 1 : 0, &js, &pass_j));
  const wl_status st = wl_verify_csv(run.workers, inject ? 1 : 0, &cs, &pass_c);
  json report = json::parse(js);
  std::string csv = cs ? cs : "";
  wl_free_string(js);
  wl_free_string(cs);
  check(st);
  bool all = pass_j && pass_c;
  for (const auto& e : extra) {
    all = all && e.at("pass").get<bool>();
    report["checks"].push_back(e);
    csv += csv_field(e.at("name").get<std::string>()) + "," + (e.at("pass").get<bool>() ? "true" : "false") +
           ",,," + csv_field(e.at("detail").get<std::string>()) + "\n";
  }
  report["all_pass"] = all;
  std::cout << report.dump(2) << "\n";
  if (!run.out_path.empty()) write_file(run.out_path, csv);
  return all ? kOk : kVerifyFail;
}

json load_config(const std::string& path, bool required) {
  if (path.empty()) {
    if (required) bad_config("--config is required for this subcommand");
    return json::object();
  }
  std::ifstream f(path);
  if (!f) bad_config("cannot read " + path);
  try {
    json j = json::parse(f);
    if (!j.is_object()) bad_config("top level must be an object");
    return j;
  } catch (const json::parse_error& e) {
    bad_config(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waringlab: numerical lab for shifted Waring inequalities"};
  app.require_subcommand(1, 1);
  std::string config_path, out_path;
  int workers = 0;
  std::int64_t budget = 0;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "output path (CSV); stdout when omitted");
  app.add_option("--workers", workers, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--budget-tuples", budget, "cap on enumerated tuples for counting")->check(CLI::PositiveNumber);
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> cmds{
      {"count", "N, N*, weighted count and main term over a tau sweep"},
      {"integrate", "DH integral with certified error"},
      {"arcs", "DH integral split by arc class"},
      {"minor-moment", "minor-arc moment over a P sweep"},
      {"hua-moment", "shifted Hua moment over a P sweep"},
      {"jcount", "Vinogradov system counts J and the shifted variant"},
      {"classify", "arc labels for a list of alpha"},
      {"verify", "cross-module invariant suite"},
      {"slopes", "moment sweep with a fitted exponent"}};
  for (const auto& [name, help] : cmds) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Run run;
    run.command = command;
    run.cfg = load_config(config_path, command != "verify");
    run.out_path = out_path;
    run.workers = workers > 0 ? workers : get_int(run.cfg, "workers", 1);
    if (run.workers < 1) bad_config("workers must be positive");
    run.budget_tuples = budget > 0 ? budget : static_cast<std::int64_t>(get_num(run.cfg, "budget_tuples", 0));

    if (command == "verify") return cmd_verify(run);

    Table t;
    const auto t0 = std::chrono::steady_clock::now();
    int rc = kOk;
    if (command == "count") rc = cmd_count(run, t);
    else if (command == "integrate") rc = cmd_integrate(run, t);
    else if (command == "arcs") rc = cmd_arcs(run, t);
    else if (command == "minor-moment") rc = cmd_minor(run, t);
    else if (command == "hua-moment") rc = cmd_hua(run, t);
    else if (command == "jcount") rc = cmd_jcount(run, t);
    else if (command == "classify") rc = cmd_classify(run, t);
    else if (command == "slopes") rc = cmd_slopes(run, t);
    emit(run, t, ms_since(t0));
    if (rc == kBudget) std::cerr << "error: tuple budget exceeded (see diagnostic row)\n";
    return rc;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kBadConfig;
  }
}
