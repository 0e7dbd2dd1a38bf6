#include "csforge/csforge.h"

#include <cmath>
#include <cstring>
#include <new>
#include <string>

#include "analysis.hpp"
#include "encoder.hpp"
#include "error.hpp"
#include "qam.hpp"
#include "simulate.hpp"

struct csf_params {
  csforge::EncoderParams p;
};

struct csf_pair {
  csforge::EncodedPair pair;
};

struct csf_codebook {
  csforge::Codebook book;
};

namespace {

thread_local std::string g_last_error;

csf_status fail(csf_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
csf_status guarded(F&& body) {
  try {
    body();
    return CSF_OK;
  } catch (const csforge::InvalidSeed& e) {
    return fail(CSF_ERR_SEED, e.what());
  } catch (const csforge::LimitExceeded& e) {
    return fail(CSF_ERR_LIMIT, e.what());
  } catch (const csforge::InvalidArgument& e) {
    return fail(CSF_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CSF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CSF_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* ptr, const char* name) {
  if (ptr == nullptr) throw csforge::InvalidArgument(std::string(name) + " must not be NULL");
}

std::vector<csforge::cplx> to_vec(const csf_complex* v, std::size_t n) {
  std::vector<csforge::cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {v[i].re, v[i].im};
  return out;
}

void from_vec(const std::vector<csforge::cplx>& v, csf_complex* out) {
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i].real(), v[i].imag()};
}

// Buffer-capacity failures get their own status code.
template <class F>
csf_status guarded_buffer(std::size_t have, std::size_t want, F&& body) {
  if (have < want) {
    g_last_error = "buffer holds " + std::to_string(have) + " entries, need " + std::to_string(want);
    return CSF_ERR_BUFFER;
  }
  return guarded(std::forward<F>(body));
}

void check_m(const csf_params* p, std::size_t m) {
  need(p, "params");
  if (static_cast<int>(m) != p->p.m)
    throw csforge::InvalidArgument("array length " + std::to_string(m) + " does not match m = " +
                                   std::to_string(p->p.m));
}

csforge::SeedPair seed_from(const csf_complex* a, const csf_complex* b, std::size_t n) {
  if (a == nullptr && b == nullptr) return csforge::SeedPair::trivial();
  need(a, "a");
  need(b, "b");
  return csforge::SeedPair(to_vec(a, n), to_vec(b, n));
}

csforge::EnumerationOptions enum_options(const int* pi, int m, uint64_t limit) {
  csforge::EnumerationOptions opt;
  if (pi != nullptr) opt.pi = std::vector<int>(pi, pi + m);
  opt.limit = limit;
  return opt;
}

}  // namespace

extern "C" {

const char* csf_version(void) { return "1.0.0"; }

const char* csf_last_error(void) { return g_last_error.c_str(); }

const char* csf_status_name(csf_status status) {
  switch (status) {
    case CSF_OK: return "ok";
    case CSF_ERR_INVALID: return "invalid argument";
    case CSF_ERR_SEED: return "invalid seed";
    case CSF_ERR_LIMIT: return "limit exceeded";
    case CSF_ERR_BUFFER: return "buffer too small";
    case CSF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

csf_status csf_params_create(int m, int H, csf_params** out) {
  return guarded([&] {
    need(out, "out");
    auto p = csforge::EncoderParams::neutral(m, H);
    p.validate();
    *out = new csf_params{std::move(p)};
  });
}

csf_status csf_params_clone(const csf_params* p, csf_params** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = new csf_params{p->p};
  });
}

void csf_params_destroy(csf_params* p) { delete p; }

csf_status csf_params_set_pi(csf_params* p, const int* pi, size_t m) {
  return guarded([&] {
    check_m(p, m);
    need(pi, "pi");
    auto next = p->p;
    next.pi.assign(pi, pi + m);
    next.validate();
    p->p = std::move(next);
  });
}

csf_status csf_params_set_amplitude(csf_params* p, const double* e, size_t m, double e_prime) {
  return guarded([&] {
    check_m(p, m);
    need(e, "e");
    auto next = p->p;
    next.e.assign(e, e + m);
    next.e_prime = e_prime;
    next.validate();
    p->p = std::move(next);
  });
}

csf_status csf_params_set_phase(csf_params* p, const double* k, size_t m, double k_prime, double k_dprime) {
  return guarded([&] {
    check_m(p, m);
    need(k, "k");
    auto next = p->p;
    next.k.assign(k, k + m);
    next.k_prime = k_prime;
    next.k_dprime = k_dprime;
    next.validate();
    p->p = std::move(next);
  });
}

csf_status csf_params_set_shifts(csf_params* p, const int* d, size_t m) {
  return guarded([&] {
    check_m(p, m);
    need(d, "d");
    auto next = p->p;
    next.d.assign(d, d + m);
    next.validate();
    p->p = std::move(next);
  });
}

csf_status csf_params_set_seed(csf_params* p, const csf_complex* a, const csf_complex* b, size_t n) {
  return guarded([&] {
    need(p, "params");
    need(a, "a");
    need(b, "b");
    auto next = p->p;
    next.seed = csforge::SeedPair(to_vec(a, n), to_vec(b, n));
    next.validate();
    p->p = std::move(next);
  });
}

int csf_params_m(const csf_params* p) { return p ? p->p.m : 0; }
int csf_params_H(const csf_params* p) { return p ? p->p.H : 0; }
size_t csf_params_seed_length(const csf_params* p) { return p ? p->p.seed.length() : 0; }
size_t csf_params_output_length(const csf_params* p) { return p ? p->p.output_length() : 0; }

csf_status csf_params_get_pi(const csf_params* p, int* pi, size_t cap) {
  if (p == nullptr || pi == nullptr) return fail(CSF_ERR_INVALID, "params and pi must not be NULL");
  return guarded_buffer(cap, p->p.pi.size(), [&] { std::copy(p->p.pi.begin(), p->p.pi.end(), pi); });
}

csf_status csf_params_get_amplitude(const csf_params* p, double* e, size_t cap, double* e_prime) {
  if (p == nullptr || e == nullptr) return fail(CSF_ERR_INVALID, "params and e must not be NULL");
  return guarded_buffer(cap, p->p.e.size(), [&] {
    std::copy(p->p.e.begin(), p->p.e.end(), e);
    if (e_prime) *e_prime = p->p.e_prime;
  });
}

csf_status csf_params_get_phase(const csf_params* p, double* k, size_t cap, double* k_prime, double* k_dprime) {
  if (p == nullptr || k == nullptr) return fail(CSF_ERR_INVALID, "params and k must not be NULL");
  return guarded_buffer(cap, p->p.k.size(), [&] {
    std::copy(p->p.k.begin(), p->p.k.end(), k);
    if (k_prime) *k_prime = p->p.k_prime;
    if (k_dprime) *k_dprime = p->p.k_dprime;
  });
}

csf_status csf_params_get_shifts(const csf_params* p, int* d, size_t cap) {
  if (p == nullptr || d == nullptr) return fail(CSF_ERR_INVALID, "params and d must not be NULL");
  return guarded_buffer(cap, p->p.d.size(), [&] { std::copy(p->p.d.begin(), p->p.d.end(), d); });
}

csf_status csf_params_get_seed(const csf_params* p, csf_complex* a, csf_complex* b, size_t cap) {
  if (p == nullptr) return fail(CSF_ERR_INVALID, "params must not be NULL");
  return guarded_buffer(cap, p->p.seed.length(), [&] {
    if (a) from_vec(p->p.seed.a(), a);
    if (b) from_vec(p->p.seed.b(), b);
  });
}

csf_status csf_params_from_rule(const csf_rule_spec* spec, const int* pi, size_t m, csf_params** out) {
  return guarded([&] {
    need(spec, "spec");
    need(spec->rule, "spec->rule");
    need(pi, "pi");
    need(out, "out");
    if (m < 1 || m > static_cast<size_t>(csforge::kMaxVariables)) throw csforge::InvalidArgument("m must be in [1, 24]");
    csforge::QamRuleSpec rs;
    rs.rule = csforge::rule_from_name(spec->rule);
    rs.s = spec->s;
    if (spec->n_indices > 0) need(spec->indices, "spec->indices");
    rs.set_indices(std::vector<int>(spec->indices, spec->indices + spec->n_indices));
    rs.ell = spec->ell;
    rs.sign_a = spec->sign_a;
    rs.sign_b = spec->sign_b;
    rs.blue_swap = spec->blue_swap != 0;
    rs.base_k = spec->base_k ? std::vector<int>(spec->base_k, spec->base_k + m) : std::vector<int>(m, 0);
    rs.z = spec->z;
    auto p = csforge::rule_params(rs, static_cast<int>(m), std::vector<int>(pi, pi + m));
    *out = new csf_params{std::move(p)};
  });
}

csf_status csf_encode(const csf_params* p, csf_pair** out) {
  return guarded([&] {
    need(p, "params");
    need(out, "out");
    *out = new csf_pair{csforge::encode_pair(p->p)};
  });
}

void csf_pair_destroy(csf_pair* pair) { delete pair; }
size_t csf_pair_length(const csf_pair* pair) { return pair ? pair->pair.c.size() : 0; }
int csf_pair_overlap(const csf_pair* pair) { return pair && pair->pair.overlap ? 1 : 0; }

csf_status csf_pair_copy(const csf_pair* pair, csf_complex* c, csf_complex* d, size_t cap) {
  if (pair == nullptr) return fail(CSF_ERR_INVALID, "pair must not be NULL");
  return guarded_buffer(cap, pair->pair.c.size(), [&] {
    if (c) from_vec(pair->pair.c.values(), c);
    if (d) from_vec(pair->pair.d.values(), d);
  });
}

csf_status csf_gcp_check(const csf_complex* a, const csf_complex* b, size_t n, double tol, int* ok,
                         double* max_violation, double* energy) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(ok, "ok");
    const auto va = to_vec(a, n);
    const auto vb = to_vec(b, n);
    const auto r = csforge::is_gcp(std::span<const csforge::cplx>(va), std::span<const csforge::cplx>(vb), tol);
    *ok = r.ok ? 1 : 0;
    if (max_violation) *max_violation = r.max_violation;
    if (energy) *energy = r.energy;
  });
}

csf_status csf_apac(const csf_complex* seq, size_t n, csf_complex* rho, size_t cap) {
  if (seq == nullptr || rho == nullptr) return fail(CSF_ERR_INVALID, "seq and rho must not be NULL");
  return guarded_buffer(cap, n, [&] {
    const auto v = to_vec(seq, n);
    from_vec(csforge::apac(std::span<const csforge::cplx>(v)).nonnegative(), rho);
  });
}

csf_status csf_papr_bound(const csf_complex* seq, size_t n, double* db) {
  return guarded([&] {
    need(seq, "seq");
    need(db, "db");
    const auto v = to_vec(seq, n);
    *db = csforge::papr_bound_db(std::span<const csforge::cplx>(v));
  });
}

csf_status csf_papr_oversampled(const csf_complex* seq, size_t n, int oversampling, double* db, double* power,
                                size_t power_cap) {
  if (power != nullptr && oversampling > 0 && power_cap < n * static_cast<size_t>(oversampling)) {
    g_last_error = "power buffer too small";
    return CSF_ERR_BUFFER;
  }
  return guarded([&] {
    need(seq, "seq");
    need(db, "db");
    const auto v = to_vec(seq, n);
    const auto r = csforge::papr_oversampled(std::span<const csforge::cplx>(v), oversampling);
    *db = r.papr_db;
    if (power) std::copy(r.trace.power.begin(), r.trace.power.end(), power);
  });
}

int csf_is_qam_point(csf_complex value, int s, double tol) {
  if (s < 1) return 0;
  try {
    return csforge::is_qam_point({value.re, value.im}, s, tol) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

csf_status csf_check_no_overlap(const int* d, const int* pi, size_t m, int* ok) {
  return guarded([&] {
    need(d, "d");
    need(pi, "pi");
    need(ok, "ok");
    *ok = csforge::check_no_overlap(std::span<const int>(d, m), std::span<const int>(pi, m)) ? 1 : 0;
  });
}

csf_status csf_support_clusters(const csf_complex* seq, size_t n, size_t* count, size_t* starts, size_t* ends,
                                size_t cap) {
  if (seq == nullptr || count == nullptr) return fail(CSF_ERR_INVALID, "seq and count must not be NULL");
  const auto v = to_vec(seq, n);
  const auto clusters = csforge::support_clusters(std::span<const csforge::cplx>(v));
  *count = clusters.size();
  if (starts == nullptr && ends == nullptr) return CSF_OK;
  return guarded_buffer(cap, clusters.size(), [&] {
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (starts) starts[i] = clusters[i].first;
      if (ends) ends[i] = clusters[i].second;
    }
  });
}

csf_status csf_count(const char* rule, int s, int m, int longer_seed, uint64_t* units, uint64_t* unit_value,
                     uint64_t* absolute) {
  return guarded([&] {
    const auto cls = longer_seed ? csforge::SeedClass::Longer : csforge::SeedClass::Unit;
    const auto c = (rule == nullptr || std::strcmp(rule, "total") == 0)
                       ? csforge::total_count(s, m, cls)
                       : csforge::count_sequences(csforge::rule_from_name(rule), s, m, cls);
    if (units) *units = c.units;
    if (unit_value) *unit_value = c.unit_value;
    if (absolute) *absolute = c.absolute;
  });
}

csf_status csf_enumeration_size(const char* rule, int s, int m, const int* pi, uint64_t* size) {
  return guarded([&] {
    need(rule, "rule");
    need(size, "size");
    *size = csforge::enumeration_size(csforge::rule_from_name(rule), s, m, enum_options(pi, m, 0));
  });
}

csf_status csf_enumerate(const char* rule, int s, int m, const csf_complex* a, const csf_complex* b, size_t n,
                         const int* pi, uint64_t limit, uint64_t* visited, uint64_t* distinct) {
  return guarded([&] {
    need(rule, "rule");
    const auto r = csforge::dedup_rule(csforge::rule_from_name(rule), s, m, seed_from(a, b, n),
                                       enum_options(pi, m, limit));
    if (visited) *visited = r.visited;
    if (distinct) *distinct = r.distinct;
  });
}

csf_status csf_codebook_from_rule(const char* rule, int s, int m, const int* pi, uint64_t limit,
                                  csf_codebook** out) {
  return guarded([&] {
    need(rule, "rule");
    need(out, "out");
    auto words = csforge::distinct_rule_outputs(csforge::rule_from_name(rule), s, m,
                                                csforge::SeedPair::trivial(), enum_options(pi, m, limit));
    *out = new csf_codebook{csforge::Codebook(std::move(words))};
  });
}

csf_status csf_codebook_from_words(const csf_complex* words, size_t count, size_t len, csf_codebook** out) {
  return guarded([&] {
    need(words, "words");
    need(out, "out");
    if (count > csforge::kMaxCodebookSize)
      throw csforge::LimitExceeded("codebook holds more than 65536 words");
    std::vector<csforge::ComplexSequence> list;
    list.reserve(count);
    for (std::size_t i = 0; i < count; ++i) list.emplace_back(to_vec(words + i * len, len));
    *out = new csf_codebook{csforge::Codebook(std::move(list))};
  });
}

void csf_codebook_destroy(csf_codebook* book) { delete book; }
size_t csf_codebook_size(const csf_codebook* book) { return book ? book->book.size() : 0; }
int csf_codebook_bits(const csf_codebook* book) { return book ? book->book.bits() : 0; }
size_t csf_codebook_length(const csf_codebook* book) { return book ? book->book.length() : 0; }

csf_status csf_simulate(const csf_codebook* book, const double* ebn0_db, size_t npoints, uint64_t trials,
                        uint64_t seed, csf_sim_point* points, double* papr_p90_db, double* peak_power_p90) {
  return guarded([&] {
    need(book, "codebook");
    need(ebn0_db, "ebn0_db");
    need(points, "points");
    csforge::SimConfig cfg{std::vector<double>(ebn0_db, ebn0_db + npoints), trials, seed};
    const auto r = csforge::simulate(book->book, cfg);
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const auto& p = r.points[i];
      points[i] = {p.ebn0_db, p.bit_errors, p.bits, p.word_errors, p.ber()};
    }
    if (papr_p90_db) *papr_p90_db = r.papr_p90_db;
    if (peak_power_p90) *peak_power_p90 = r.peak_power_p90;
  });
}

}  // extern "C"
