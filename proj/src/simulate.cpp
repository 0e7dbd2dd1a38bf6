#include "simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "analysis.hpp"
#include "error.hpp"

namespace csforge {

Codebook::Codebook(std::vector<ComplexSequence> words) {
  if (words.size() < 2) throw InvalidArgument("a codebook needs at least two codewords");
  if (words.size() > kMaxCodebookSize)
    throw LimitExceeded("codebook holds " + std::to_string(words.size()) + " words, limit is " +
                        std::to_string(kMaxCodebookSize));
  const std::size_t len = words.front().size();
  if (len == 0) throw InvalidArgument("codewords must be nonempty");
  std::set<std::vector<std::pair<double, double>>> seen;
  for (const auto& w : words) {
    if (w.size() != len) throw InvalidArgument("codewords must share one length");
    std::vector<std::pair<double, double>> key;
    for (const auto& v : w.values()) key.emplace_back(v.real(), v.imag());
    if (!seen.insert(std::move(key)).second) throw InvalidArgument("codewords must be distinct");
  }
  bits_ = std::bit_width(words.size()) - 1;
  words.resize(std::size_t{1} << bits_);
  words_ = std::move(words);
}

double Codebook::symbol_energy() const {
  double e = 0.0;
  for (const auto& w : words_) e += w.energy();
  return e / static_cast<double>(words_.size());
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

constexpr std::uint64_t kChunk = 4096;

struct ChunkResult {
  std::uint64_t bit_errors = 0;
  std::uint64_t word_errors = 0;
};

ChunkResult run_chunk(const Codebook& book, double sigma, std::uint64_t seed, std::uint64_t point,
                      std::uint64_t chunk, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(point), static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, book.size() - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto& words = book.words();
  const std::size_t len = book.length();
  std::vector<cplx> rx(len);

  ChunkResult out;
  for (std::uint64_t trial = 0; trial < count; ++trial) {
    const std::size_t sent = pick(rng);
    for (std::size_t i = 0; i < len; ++i) {
      rx[i] = words[sent][i];
      if (sigma > 0.0) rx[i] += cplx{sigma * gauss(rng), sigma * gauss(rng)};
    }
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < words.size(); ++c) {
      double dist = 0.0;
      for (std::size_t i = 0; i < len && dist < best_dist; ++i) dist += std::norm(rx[i] - words[c][i]);
      if (dist < best_dist) {
        best_dist = dist;
        best = c;
      }
    }
    if (best != sent) {
      ++out.word_errors;
      out.bit_errors += std::popcount(best ^ sent);
    }
  }
  return out;
}

double percentile90(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t idx = static_cast<std::size_t>(std::ceil(0.9 * v.size())) - 1;
  return v[std::min(idx, v.size() - 1)];
}

}  // namespace

SimReport simulate(const Codebook& book, const SimConfig& cfg) {
  if (cfg.trials == 0) throw InvalidArgument("trials must be positive");
  if (cfg.ebn0_db.empty()) throw InvalidArgument("need at least one Eb/N0 point");
  for (double v : cfg.ebn0_db)
    if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
      throw InvalidArgument("Eb/N0 must be a number or +inf");

  SimReport report;
  report.trials = cfg.trials;
  report.codebook_size = book.size();
  report.bits_per_word = book.bits();
  report.seed = cfg.seed;

  std::vector<double> paprs, peaks;
  for (const auto& w : book.words()) {
    const auto m = papr_oversampled(std::span<const cplx>(w.values()));
    paprs.push_back(m.papr_db);
    peaks.push_back(m.trace.peak);
  }
  report.papr_p90_db = percentile90(paprs);
  report.peak_power_p90 = percentile90(peaks);

  const double eb = book.symbol_energy() / book.bits();
  const std::uint64_t chunks = (cfg.trials + kChunk - 1) / kChunk;
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());

  for (std::size_t p = 0; p < cfg.ebn0_db.size(); ++p) {
    const double ebn0 = cfg.ebn0_db[p];
    // N0 is the complex noise variance; each real dimension gets N0 / 2.
    const double sigma = std::isinf(ebn0) ? 0.0 : std::sqrt(eb / std::pow(10.0, ebn0 / 10.0) / 2.0);
    SimPoint point{.ebn0_db = ebn0, .bits = cfg.trials * book.bits()};
    for (std::uint64_t first = 0; first < chunks; first += workers) {
      std::vector<std::future<ChunkResult>> batch;
      for (std::uint64_t c = first; c < std::min<std::uint64_t>(chunks, first + workers); ++c) {
        const std::uint64_t count = std::min(kChunk, cfg.trials - c * kChunk);
        batch.push_back(std::async(std::launch::async, run_chunk, std::cref(book), sigma, cfg.seed, p, c, count));
      }
      for (auto& f : batch) {
        const auto r = f.get();
        point.bit_errors += r.bit_errors;
        point.word_errors += r.word_errors;
      }
    }
    report.points.push_back(point);
  }
  return report;
}

}  // namespace csforge
