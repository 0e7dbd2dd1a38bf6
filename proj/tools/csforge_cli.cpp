// csforge command-line tool: encode, verify, enumerate, papr, simulate.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource guard exceeded, 4 internal error.

#include <csforge/csforge.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kGuard = 3, kInternal = 4 };

// Carries a C API failure (or an input problem) up to main.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void bad_input(const std::string& msg) { throw Failure{kBadInput, msg}; }

void check(csf_status s) {
  if (s == CSF_OK) return;
  const int code = s == CSF_ERR_LIMIT ? kGuard : s == CSF_ERR_INTERNAL ? kInternal : kBadInput;
  throw Failure{code, std::string(csf_status_name(s)) + ": " + csf_last_error()};
}

struct ParamsDeleter {
  void operator()(csf_params* p) const { csf_params_destroy(p); }
};
struct PairDeleter {
  void operator()(csf_pair* p) const { csf_pair_destroy(p); }
};
struct CodebookDeleter {
  void operator()(csf_codebook* p) const { csf_codebook_destroy(p); }
};
using ParamsPtr = std::unique_ptr<csf_params, ParamsDeleter>;
using PairPtr = std::unique_ptr<csf_pair, PairDeleter>;
using CodebookPtr = std::unique_ptr<csf_codebook, CodebookDeleter>;

using Seq = std::vector<csf_complex>;

// ---- JSON helpers ---------------------------------------------------------

json seq_to_json(const Seq& v) {
  json re = json::array(), im = json::array();
  for (const auto& x : v) {
    re.push_back(x.re);
    im.push_back(x.im);
  }
  return {{"re", re}, {"im", im}};
}

Seq seq_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    bad_input(std::string(what) + " must be an object with re and im arrays");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  if (re.size() != im.size()) bad_input(std::string(what) + ": re and im lengths differ");
  Seq out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_input("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad_input(path + ": " + e.what());
  }
}

// ---- Parameters -----------------------------------------------------------

std::pair<Seq, Seq> read_seed_file(const std::string& path) {
  const auto j = read_json_file(path);
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    bad_input(path + ": a seed pair needs fields a and b");
  return {seq_from_json(j.at("a"), "seed a"), seq_from_json(j.at("b"), "seed b")};
}

void apply_seed(csf_params* p, const Seq& a, const Seq& b) {
  if (a.size() != b.size()) bad_input("seed sequences differ in length");
  check(csf_params_set_seed(p, a.data(), b.data(), a.size()));
}

ParamsPtr params_from_json(const json& j) {
  try {
    const int m = j.at("m").get<int>();
    const int H = j.value("H", 2);
    csf_params* raw = nullptr;
    check(csf_params_create(m, H, &raw));
    ParamsPtr p(raw);
    const std::size_t mm = static_cast<std::size_t>(m);
    if (j.contains("pi")) {
      const auto pi = j.at("pi").get<std::vector<int>>();
      if (pi.size() != mm) bad_input("pi must have m entries");
      check(csf_params_set_pi(p.get(), pi.data(), mm));
    }
    if (j.contains("e") || j.contains("e_prime")) {
      const auto e = j.value("e", std::vector<double>(mm, 0.0));
      if (e.size() != mm) bad_input("e must have m entries");
      check(csf_params_set_amplitude(p.get(), e.data(), mm, j.value("e_prime", 0.0)));
    }
    if (j.contains("k") || j.contains("k_prime") || j.contains("k_dprime")) {
      const auto k = j.value("k", std::vector<double>(mm, 0.0));
      if (k.size() != mm) bad_input("k must have m entries");
      check(csf_params_set_phase(p.get(), k.data(), mm, j.value("k_prime", 0.0), j.value("k_dprime", 0.0)));
    }
    if (j.contains("d")) {
      const auto d = j.at("d").get<std::vector<int>>();
      if (d.size() != mm) bad_input("d must have m entries");
      check(csf_params_set_shifts(p.get(), d.data(), mm));
    }
    if (j.contains("seed")) {
      const auto& s = j.at("seed");
      apply_seed(p.get(), seq_from_json(s.at("a"), "seed a"), seq_from_json(s.at("b"), "seed b"));
    }
    return p;
  } catch (const json::exception& e) {
    bad_input(std::string("parameter file: ") + e.what());
  }
}

json params_to_json(const csf_params* p) {
  const int m = csf_params_m(p);
  std::vector<int> pi(m), d(m);
  std::vector<double> e(m), k(m);
  double e_prime = 0, k_prime = 0, k_dprime = 0;
  check(csf_params_get_pi(p, pi.data(), pi.size()));
  check(csf_params_get_amplitude(p, e.data(), e.size(), &e_prime));
  check(csf_params_get_phase(p, k.data(), k.size(), &k_prime, &k_dprime));
  check(csf_params_get_shifts(p, d.data(), d.size()));
  const std::size_t n = csf_params_seed_length(p);
  Seq a(n), b(n);
  check(csf_params_get_seed(p, a.data(), b.data(), n));
  return {{"m", m},       {"H", csf_params_H(p)}, {"pi", pi},           {"e", e},
          {"e_prime", e_prime}, {"k", k},         {"k_prime", k_prime}, {"k_dprime", k_dprime},
          {"d", d},       {"seed", {{"a", seq_to_json(a)}, {"b", seq_to_json(b)}}}};
}

// Options shared by every subcommand that builds sequences from parameters.
struct ParamOptions {
  std::string params_file;
  std::optional<int> m;
  std::optional<int> H;
  std::vector<int> pi;
  std::string seed_file;
  bool seed_trivial = false;
  std::vector<double> e;
  double e_prime = 0.0;
  std::vector<double> k;
  double k_prime = 0.0;
  double k_dprime = 0.0;
  std::vector<int> d;
  std::string rule;
  int s = 1;
  std::vector<int> indices;
  int ell = 0;
  int sign_a = 1;
  int sign_b = 1;
  bool blue_swap = false;
  std::vector<int> base_k;
  int z = 0;

  void attach(CLI::App* app) {
    app->add_option("--params", params_file, "JSON parameter file (object or array of objects)");
    app->add_option("--m", m, "number of recursion steps");
    app->add_option("--H", H, "phase modulus (even)");
    app->add_option("--pi", pi, "permutation of 1..m")->delimiter(',');
    app->add_option("--seed-pair", seed_file, "JSON file with seed sequences a and b");
    app->add_flag("--seed-trivial", seed_trivial, "use a = b = (1) (the default)");
    app->add_option("--e", e, "amplitude exponents e_1..e_m")->delimiter(',');
    app->add_option("--e-prime", e_prime, "amplitude offset e'");
    app->add_option("--k", k, "phase exponents k_1..k_m in [0, H)")->delimiter(',');
    app->add_option("--k-prime", k_prime, "phase offset k' of the first sequence");
    app->add_option("--k-dprime", k_dprime, "phase offset k'' of the mate");
    app->add_option("--d", d, "shifts d_1..d_m (non-negative)")->delimiter(',');
    app->add_option("--rule", rule, "QAM rule: green, yellow, blue, cyan, orange");
    app->add_option("--s", s, "constellation size parameter (4s^2-QAM)");
    app->add_option("--indices", indices, "lattice indices: u,v (green/yellow/orange), u,v,w (blue), u,t,v,w (cyan)")
        ->delimiter(',');
    app->add_option("--ell", ell, "step carrying the rule (default m)");
    app->add_option("--sign-a", sign_a, "rotation sign of the first half (+1 or -1)");
    app->add_option("--sign-b", sign_b, "rotation sign of the second half (+1 or -1)");
    app->add_flag("--blue-swap", blue_swap, "blue rule: rotate the first half instead of the second");
    app->add_option("--base-k", base_k, "base phases in Z_4 for rule outputs")->delimiter(',');
    app->add_option("--z", z, "quadrant selector in Z_4");
  }

  bool from_file() const { return !params_file.empty(); }

  std::vector<ParamsPtr> build() const {
    std::vector<ParamsPtr> out;
    if (from_file()) {
      const auto j = read_json_file(params_file);
      auto add = [&](const json& item) {
        // Accept SequenceRecords as well as bare parameter objects.
        out.push_back(params_from_json(item.contains("params") ? item.at("params") : item));
      };
      if (j.is_array()) {
        for (const auto& item : j) add(item);
      } else {
        add(j);
      }
      if (out.empty()) bad_input(params_file + " holds no parameter sets");
      return out;
    }
    if (!m) bad_input("either --params or --m is required");
    const int mm = *m;
    if (mm < 1 || mm > 24) bad_input("--m must be in [1, 24]");
    std::vector<int> perm = pi;
    if (perm.empty())
      for (int i = 1; i <= mm; ++i) perm.push_back(i);
    if (static_cast<int>(perm.size()) != mm) bad_input("--pi must have m entries");

    csf_params* raw = nullptr;
    if (!rule.empty()) {
      if (H && *H != 4) bad_input("QAM rules use H = 4");
      std::vector<int> bk = base_k;
      if (bk.empty()) bk.assign(mm, 0);
      if (static_cast<int>(bk.size()) != mm) bad_input("--base-k must have m entries");
      csf_rule_spec spec{rule.c_str(), s, indices.data(), indices.size(), ell ? ell : mm,
                         sign_a,       sign_b, blue_swap ? 1 : 0, bk.data(), z};
      check(csf_params_from_rule(&spec, perm.data(), perm.size(), &raw));
      ParamsPtr p(raw);
      if (!seed_file.empty()) {
        const auto [a, b] = read_seed_file(seed_file);
        apply_seed(p.get(), a, b);
      }
      out.push_back(std::move(p));
      return out;
    }

    check(csf_params_create(mm, H.value_or(2), &raw));
    ParamsPtr p(raw);
    check(csf_params_set_pi(p.get(), perm.data(), perm.size()));
    auto sized = [&](auto v, const char* name) {
      if (v.empty()) v.assign(mm, 0);
      if (static_cast<int>(v.size()) != mm) bad_input(std::string(name) + " must have m entries");
      return v;
    };
    const auto ev = sized(e, "--e");
    const auto kv = sized(k, "--k");
    const auto dv = sized(d, "--d");
    check(csf_params_set_amplitude(p.get(), ev.data(), ev.size(), e_prime));
    check(csf_params_set_phase(p.get(), kv.data(), kv.size(), k_prime, k_dprime));
    check(csf_params_set_shifts(p.get(), dv.data(), dv.size()));
    if (!seed_file.empty()) {
      const auto [a, b] = read_seed_file(seed_file);
      apply_seed(p.get(), a, b);
    }
    out.push_back(std::move(p));
    return out;
  }
};

// ---- Sequence records -----------------------------------------------------

struct Encoded {
  Seq c, d;
  bool overlap = false;
};

Encoded encode(const csf_params* p) {
  csf_pair* raw = nullptr;
  check(csf_encode(p, &raw));
  PairPtr pair(raw);
  Encoded out;
  const std::size_t n = csf_pair_length(pair.get());
  out.c.resize(n);
  out.d.resize(n);
  check(csf_pair_copy(pair.get(), out.c.data(), out.d.data(), n));
  out.overlap = csf_pair_overlap(pair.get()) != 0;
  return out;
}

double papr_db(const Seq& v, int oversampling = 16) {
  double db = 0.0;
  check(csf_papr_oversampled(v.data(), v.size(), oversampling, &db, nullptr, 0));
  return db;
}

// max_{k != 0} |rho_c(k) + rho_d(k)| relative to rho_c(0) + rho_d(0).
double gcp_residual(const Seq& c, const Seq& d, bool* ok = nullptr) {
  int pass = 0;
  double viol = 0.0, energy = 0.0;
  check(csf_gcp_check(c.data(), d.data(), c.size(), 1e-9, &pass, &viol, &energy));
  if (ok) *ok = pass != 0;
  return energy > 0.0 ? viol / energy : viol;
}

std::vector<std::size_t> support_of(const Seq& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].re != 0.0 || v[i].im != 0.0) out.push_back(i);
  return out;
}

json make_record(const std::string& id, const csf_params* p, const Encoded& enc) {
  return {{"schema", 1},
          {"id", id},
          {"params", params_to_json(p)},
          {"length", enc.c.size()},
          {"values", seq_to_json(enc.c)},
          {"mate", seq_to_json(enc.d)},
          {"support", support_of(enc.c)},
          {"overlap", enc.overlap},
          {"papr_db", papr_db(enc.c)},
          {"gcp_residual", gcp_residual(enc.c, enc.d)}};
}

// Smallest descriptive alphabet of the nonzero entries.
std::string alphabet_class(const Seq& v) {
  std::vector<csf_complex> nz;
  for (const auto& x : v)
    if (x.re != 0.0 || x.im != 0.0) nz.push_back(x);
  if (nz.empty()) return "empty";
  const double r0 = std::hypot(nz[0].re, nz[0].im);
  bool constant_modulus = true;
  for (const auto& x : nz)
    if (std::abs(std::hypot(x.re, x.im) - r0) > 1e-9 * r0) constant_modulus = false;
  if (constant_modulus) {
    for (int H : {2, 4, 8, 16, 32, 64}) {
      bool all = true;
      for (const auto& x : nz) {
        const double turns = std::atan2(x.im, x.re) * H / (2.0 * M_PI);
        if (std::abs(turns - std::round(turns)) > 1e-9) all = false;
      }
      if (all) return H == 2 ? "bpsk" : H == 4 ? "qpsk" : std::to_string(H) + "-psk";
    }
  }
  // QPSK-based QAM: entries lie on the odd-integer grid after a (1 + j) rotation.
  for (int s = 1; s <= 32; ++s) {
    bool all = true;
    for (const auto& x : nz) {
      const csf_complex rot{x.re - x.im, x.re + x.im};
      if (!csf_is_qam_point(rot, s, 1e-6)) all = false;
    }
    if (all) return std::to_string(4 * s * s) + "-qam";
  }
  return constant_modulus ? "constant-modulus" : "complex";
}

struct RecordIn {
  std::string id;
  Seq values, mate;
  std::optional<double> stored_residual;
};

std::vector<RecordIn> read_records(const std::string& path) {
  const auto j = read_json_file(path);
  std::vector<RecordIn> out;
  auto add = [&](const json& r, std::size_t idx) {
    try {
      RecordIn rec;
      rec.id = r.contains("id") ? r.at("id").get<std::string>() : std::to_string(idx);
      rec.values = seq_from_json(r.at("values"), "values");
      if (r.contains("mate")) rec.mate = seq_from_json(r.at("mate"), "mate");
      if (r.contains("gcp_residual")) rec.stored_residual = r.at("gcp_residual").get<double>();
      if (rec.values.empty()) bad_input("record " + rec.id + " has no values");
      out.push_back(std::move(rec));
    } catch (const json::exception& e) {
      bad_input(path + ": " + e.what());
    }
  };
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) add(j[i], i);
  } else {
    add(j, 0);
  }
  if (out.empty()) bad_input(path + " holds no records");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- Subcommands ----------------------------------------------------------

int cmd_encode(const ParamOptions& opt) {
  const auto params = opt.build();
  json out = json::array();
  for (std::size_t i = 0; i < params.size(); ++i)
    out.push_back(make_record("seq-" + std::to_string(i), params[i].get(), encode(params[i].get())));
  emit(out);
  return kOk;
}

int cmd_verify(const std::string& path, double tol) {
  const auto records = read_records(path);
  json out = json::array();
  bool all_ok = true;
  for (const auto& r : records) {
    json rep{{"id", r.id}, {"length", r.values.size()}};
    bool ok = false;
    if (r.mate.size() != r.values.size()) {
      rep["gcp_ok"] = false;
      rep["error"] = "record has no mate of matching length";
    } else {
      int pass = 0;
      double viol = 0.0, energy = 0.0;
      check(csf_gcp_check(r.values.data(), r.mate.data(), r.values.size(), tol, &pass, &viol, &energy));
      ok = pass != 0;
      const double residual = energy > 0.0 ? viol / energy : viol;
      rep["gcp_ok"] = ok;
      rep["gcp_residual"] = residual;
      rep["max_violation"] = viol;
      if (r.stored_residual) rep["residual_matches_record"] = *r.stored_residual == residual;
    }
    if (!support_of(r.values).empty()) {
      double bound = 0.0;
      check(csf_papr_bound(r.values.data(), r.values.size(), &bound));
      rep["papr_db"] = papr_db(r.values);
      rep["papr_bound_db"] = bound;
    }
    std::size_t count = 0;
    check(csf_support_clusters(r.values.data(), r.values.size(), &count, nullptr, nullptr, 0));
    std::vector<std::size_t> starts(count), ends(count);
    check(csf_support_clusters(r.values.data(), r.values.size(), &count, starts.data(), ends.data(), count));
    json clusters = json::array(), gaps = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      clusters.push_back({starts[i], ends[i]});
      if (i > 0) gaps.push_back(starts[i] - ends[i - 1]);
    }
    rep["clusters"] = clusters;
    rep["gaps"] = gaps;
    rep["alphabet"] = alphabet_class(r.values);
    all_ok = all_ok && ok;
    out.push_back(rep);
  }
  emit(out);
  return all_ok ? kOk : kVerifyFailed;
}

struct EnumerateOptions {
  std::string rule = "total";
  int s = 1;
  int m = 1;
  int N = 1;
  bool dedup = false;
  std::vector<int> pi;
  std::string seed_file;
};

json count_json(const char* rule, int s, int m, int longer) {
  std::uint64_t units = 0, unit = 0, abs = 0;
  check(csf_count(rule, s, m, longer, &units, &unit, &abs));
  return {{"units", units}, {"count", abs}};
}

int cmd_enumerate(const EnumerateOptions& opt) {
  static const char* kRules[] = {"green", "yellow", "blue", "cyan", "orange"};
  if (opt.N < 1) bad_input("--N must be positive");
  const int longer = opt.N > 1 ? 1 : 0;
  std::uint64_t units = 0, unit = 0, total = 0;
  check(csf_count(opt.rule == "total" ? nullptr : opt.rule.c_str(), opt.s, opt.m, longer, &units, &unit, &total));
  json rules = json::object();
  for (const char* r : kRules) rules[r] = count_json(r, opt.s, opt.m, longer);

  std::uint64_t length = static_cast<std::uint64_t>(opt.N) << opt.m;
  json out{{"schema", 1},
           {"rule", opt.rule},
           {"s", opt.s},
           {"constellation", 4 * opt.s * opt.s},
           {"m", opt.m},
           {"N", opt.N},
           {"unit_name", longer ? "A0" : "G0"},
           {"unit_value", unit},
           {"units", units},
           {"count", total},
           {"bits", total > 0 ? static_cast<int>(std::bit_width(total)) - 1 : 0},
           {"length", length},
           {"rules", rules}};

  int code = kOk;
  if (opt.dedup) {
    Seq a, b;
    if (!opt.seed_file.empty()) std::tie(a, b) = read_seed_file(opt.seed_file);
    if (static_cast<int>(a.empty() ? 1 : a.size()) != opt.N)
      bad_input("--dedup with N > 1 needs a --seed-pair of length N");
    if (!opt.pi.empty() && static_cast<int>(opt.pi.size()) != opt.m) bad_input("--pi must have m entries");
    json dd = json::object();
    for (const char* r : kRules) {
      if (opt.rule != "total" && opt.rule != r) continue;
      std::uint64_t visited = 0, distinct = 0;
      check(csf_enumerate(r, opt.s, opt.m, a.empty() ? nullptr : a.data(), b.empty() ? nullptr : b.data(),
                          a.size(), opt.pi.empty() ? nullptr : opt.pi.data(), 0, &visited, &distinct));
      const auto formula = count_json(r, opt.s, opt.m, longer)["count"].get<std::uint64_t>();
      // With a fixed pi the formula no longer applies; report without judging.
      const bool comparable = opt.pi.empty();
      dd[r] = {{"visited", visited}, {"distinct", distinct}, {"formula", formula}};
      if (comparable) {
        dd[r]["match"] = distinct == formula;
        if (distinct != formula) code = kVerifyFailed;
      }
    }
    out["dedup"] = dd;
  }
  emit(out);
  return code;
}

int cmd_papr(const ParamOptions& popt, const std::string& input, int oversampling, const std::string& csv) {
  std::vector<std::pair<std::string, Seq>> seqs;
  if (!input.empty()) {
    for (auto& r : read_records(input)) seqs.emplace_back(r.id, std::move(r.values));
  } else {
    const auto params = popt.build();
    for (std::size_t i = 0; i < params.size(); ++i)
      seqs.emplace_back("seq-" + std::to_string(i), encode(params[i].get()).c);
  }
  json out = json::array();
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const auto& [id, v] = seqs[i];
    const std::size_t grid = v.size() * static_cast<std::size_t>(std::max(oversampling, 0));
    std::vector<double> power(grid);
    double db = 0.0, bound = 0.0;
    check(csf_papr_oversampled(v.data(), v.size(), oversampling, &db, power.data(), power.size()));
    check(csf_papr_bound(v.data(), v.size(), &bound));
    double peak = 0.0, sum = 0.0;
    for (double p : power) {
      peak = std::max(peak, p);
      sum += p;
    }
    out.push_back({{"id", id},
                   {"length", v.size()},
                   {"oversample", oversampling},
                   {"papr_db", db},
                   {"papr_bound_db", bound},
                   {"peak", peak},
                   {"mean", sum / static_cast<double>(grid)}});
    if (i == 0 && !csv.empty()) {
      std::ofstream f(csv);
      if (!f) bad_input("cannot write " + csv);
      f.precision(17);
      f << "t_norm,power\n";
      for (std::size_t n = 0; n < grid; ++n) f << static_cast<double>(n) / grid << ',' << power[n] << '\n';
    }
  }
  emit(out);
  return kOk;
}

struct SimulateOptions {
  std::string rule;
  int s = 1;
  int m = 2;
  std::vector<int> pi;
  std::string codebook_file;
  std::vector<std::string> ebn0 = {"0"};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
};

int cmd_simulate(const SimulateOptions& opt) {
  csf_codebook* raw = nullptr;
  if (!opt.codebook_file.empty()) {
    const auto records = read_records(opt.codebook_file);
    const std::size_t len = records.front().values.size();
    Seq flat;
    for (const auto& r : records) {
      if (r.values.size() != len) bad_input("codewords must share one length");
      flat.insert(flat.end(), r.values.begin(), r.values.end());
    }
    check(csf_codebook_from_words(flat.data(), records.size(), len, &raw));
  } else {
    if (opt.rule.empty()) bad_input("simulate needs --rule or --codebook");
    if (opt.m < 1 || opt.m > 4) bad_input("rule codebooks are limited to m <= 4");
    if (!opt.pi.empty() && static_cast<int>(opt.pi.size()) != opt.m) bad_input("--pi must have m entries");
    check(csf_codebook_from_rule(opt.rule.c_str(), opt.s, opt.m, opt.pi.empty() ? nullptr : opt.pi.data(), 0, &raw));
  }
  CodebookPtr book(raw);

  std::vector<double> grid;
  for (const auto& s : opt.ebn0) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') bad_input("bad Eb/N0 value '" + s + "'");
    grid.push_back(v);
  }
  std::vector<csf_sim_point> pts(grid.size());
  double papr90 = 0.0, peak90 = 0.0;
  check(csf_simulate(book.get(), grid.data(), grid.size(), opt.trials, opt.seed, pts.data(), &papr90, &peak90));

  json points = json::array();
  for (const auto& p : pts) {
    json e = std::isinf(p.ebn0_db) ? json("inf") : json(p.ebn0_db);
    points.push_back({{"ebn0_db", e},
                      {"ber", p.ber},
                      {"bit_errors", p.bit_errors},
                      {"bits", p.bits},
                      {"word_errors", p.word_errors}});
  }
  emit({{"schema", 1},
        {"codebook_size", csf_codebook_size(book.get())},
        {"bits_per_word", csf_codebook_bits(book.get())},
        {"length", csf_codebook_length(book.get())},
        {"trials", opt.trials},
        {"rng_seed", opt.seed},
        {"papr_p90_db", papr90},
        {"peak_power_p90", peak90},
        {"points", points}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golay complementary pair and complementary sequence encoder"};
  app.require_subcommand(1);
  app.set_version_flag("--version", csf_version());

  ParamOptions encode_opt;
  auto* enc = app.add_subcommand("encode", "encode sequence pairs from parameters or a QAM rule");
  encode_opt.attach(enc);

  std::string verify_file;
  double verify_tol = 1e-9;
  auto* ver = app.add_subcommand("verify", "check complementarity, PAPR, support and alphabet of records");
  ver->add_option("file", verify_file, "JSON records (encode output)")->required();
  ver->add_option("--tol", verify_tol, "relative complementarity tolerance");

  EnumerateOptions enum_opt;
  auto* en = app.add_subcommand("enumerate", "closed-form sequence counts and exhaustive dedup checks");
  en->add_option("--rule", enum_opt.rule, "green, yellow, blue, cyan, orange or total");
  en->add_option("--s", enum_opt.s, "constellation size parameter (4s^2-QAM)");
  en->add_option("--m", enum_opt.m, "number of recursion steps")->required();
  en->add_option("--N", enum_opt.N, "seed length");
  en->add_flag("--dedup", enum_opt.dedup, "enumerate every parameter set and count distinct sequences");
  en->add_option("--pi", enum_opt.pi, "restrict enumeration to one permutation")->delimiter(',');
  en->add_option("--seed-pair", enum_opt.seed_file, "seed pair for N > 1");

  ParamOptions papr_opt;
  std::string papr_in, papr_csv;
  int oversample = 16;
  auto* pa = app.add_subcommand("papr", "oversampled PAPR and power trace");
  papr_opt.attach(pa);
  pa->add_option("--in", papr_in, "JSON records to measure instead of encoding");
  pa->add_option("--oversample", oversample, "oversampling factor (>= 4)");
  pa->add_option("--out", papr_csv, "write the power trace of the first sequence as CSV");

  SimulateOptions sim_opt;
  auto* si = app.add_subcommand("simulate", "AWGN minimum-distance decoding over a sequence codebook");
  si->add_option("--rule", sim_opt.rule, "build the codebook from a QAM rule");
  si->add_option("--s", sim_opt.s, "constellation size parameter");
  si->add_option("--m", sim_opt.m, "number of recursion steps");
  si->add_option("--pi", sim_opt.pi, "fix the permutation")->delimiter(',');
  si->add_option("--codebook", sim_opt.codebook_file, "JSON records used as codewords");
  si->add_option("--ebn0", sim_opt.ebn0, "Eb/N0 grid in dB (inf for no noise)")->delimiter(',');
  si->add_option("--trials", sim_opt.trials, "transmissions per Eb/N0 point");
  si->add_option("--rng-seed", sim_opt.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*enc) return cmd_encode(encode_opt);
    if (*ver) return cmd_verify(verify_file, verify_tol);
    if (*en) return cmd_enumerate(enum_opt);
    if (*pa) return cmd_papr(papr_opt, papr_in, oversample, papr_csv);
    if (*si) return cmd_simulate(sim_opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadInput;
}
