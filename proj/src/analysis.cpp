#include "analysis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <string>

#include "error.hpp"
#include "recursion.hpp"

namespace csforge {

ApacProfile::ApacProfile(std::vector<cplx> nonneg) : nonneg_(std::move(nonneg)) {}

cplx ApacProfile::at(long k) const {
  const long n = static_cast<long>(nonneg_.size());
  if (k <= -n || k >= n) return {0.0, 0.0};
  return k >= 0 ? nonneg_[k] : std::conj(nonneg_[-k]);
}

ApacProfile apac(std::span<const cplx> seq) {
  if (seq.empty()) throw InvalidArgument("APAC of an empty sequence");
  const std::size_t n = seq.size();
  std::vector<cplx> rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i + k < n; ++i) acc += std::conj(seq[i]) * seq[i + k];
    rho[k] = acc;
  }
  return ApacProfile(std::move(rho));
}

GcpCheck is_gcp(std::span<const cplx> a, std::span<const cplx> b, double tol) {
  if (a.size() != b.size())
    throw InvalidArgument("pair lengths differ: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  const auto ra = apac(a);
  const auto rb = apac(b);
  GcpCheck out;
  out.energy = ra.at(0).real() + rb.at(0).real();
  for (std::size_t k = 1; k < a.size(); ++k)
    out.max_violation = std::max(out.max_violation, std::abs(ra.at(k) + rb.at(k)));
  out.ok = out.max_violation <= tol * out.energy;
  return out;
}

double papr_bound_db(std::span<const cplx> seq) {
  const auto rho = apac(seq);
  const double r0 = rho.at(0).real();
  if (r0 <= 0.0) throw InvalidArgument("PAPR of an all-zero sequence");
  double side = 0.0;
  for (std::size_t k = 1; k < rho.length(); ++k) side += std::abs(rho.at(k));
  return 10.0 * std::log10((r0 + 2.0 * side) / r0);
}

namespace {

// Plan creation in FFTW is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

PaprMeasurement papr_oversampled(std::span<const cplx> seq, int oversampling) {
  if (seq.empty()) throw InvalidArgument("PAPR of an empty sequence");
  if (oversampling < 4) throw InvalidArgument("oversampling factor must be at least 4");
  const std::size_t grid = seq.size() * static_cast<std::size_t>(oversampling);
  if (grid > (std::size_t{1} << 30)) throw LimitExceeded("oversampled grid too large");

  auto* buf = fftw_alloc_complex(grid);
  if (buf == nullptr) throw Error("FFT buffer allocation failed");
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(grid), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < grid; ++i) {
    const cplx v = i < seq.size() ? seq[i] : cplx{0.0, 0.0};
    buf[i][0] = v.real();
    buf[i][1] = v.imag();
  }
  fftw_execute(plan);

  PaprMeasurement out;
  out.trace.oversampling = oversampling;
  out.trace.power.resize(grid);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double p = buf[i][0] * buf[i][0] + buf[i][1] * buf[i][1];
    out.trace.power[i] = p;
    out.trace.peak = std::max(out.trace.peak, p);
    sum += p;
  }
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(buf);

  out.trace.mean = sum / static_cast<double>(grid);
  if (out.trace.mean <= 0.0) throw InvalidArgument("PAPR of an all-zero sequence");
  out.papr_db = 10.0 * std::log10(out.trace.peak / out.trace.mean);
  return out;
}

void PowerTrace::write_csv(std::ostream& os) const {
  const auto prec = os.precision(17);
  os << "t_norm,power\n";
  const double n = static_cast<double>(power.size());
  for (std::size_t i = 0; i < power.size(); ++i) os << static_cast<double>(i) / n << ',' << power[i] << '\n';
  os.precision(prec);
}

bool check_no_overlap(std::span<const int> d, std::span<const int> pi) {
  if (d.size() != pi.size()) throw InvalidArgument("d and pi must have the same length");
  validate_pi(std::vector<int>(pi.begin(), pi.end()));
  const std::size_t m = pi.size();
  // shift_of[j] is the shift multiplying variable x_j.
  std::vector<long long> shift_of(m + 1, 0);
  for (std::size_t n = 0; n < m; ++n) {
    if (d[n] < 0) throw InvalidArgument("shifts must be non-negative");
    shift_of[pi[n]] = d[n];
  }
  long long tail = 0;
  for (std::size_t a = m; a >= 2; --a) {
    tail += shift_of[a];
    if (shift_of[a - 1] < tail) return false;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> support_clusters(std::span<const cplx> seq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  while (i < seq.size()) {
    if (seq[i] == cplx{0.0, 0.0}) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < seq.size() && seq[i] != cplx{0.0, 0.0}) ++i;
    out.emplace_back(begin, i);
  }
  return out;
}

}  // namespace csforge
