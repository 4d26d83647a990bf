#include "dihedral/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dihedral {

PhiloxBlock philox4x32(PhiloxBlock ctr, PhiloxKey key) {
  constexpr std::uint64_t kMul0 = 0xD2511F53u;
  constexpr std::uint64_t kMul1 = 0xCD9E8D57u;
  constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const std::uint64_t p0 = kMul0 * ctr[0];
    const std::uint64_t p1 = kMul1 * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      counter_{0u, 0u, static_cast<std::uint32_t>(stream),
               static_cast<std::uint32_t>(stream >> 32)} {}

void CounterRng::refill() {
  buffer_ = philox4x32(counter_, key_);
  if (++counter_[0] == 0) ++counter_[1];
  available_ = 4;
}

std::uint32_t CounterRng::next_u32() {
  if (available_ == 0) refill();
  return buffer_[4 - available_--];
}

double CounterRng::uniform() {
  const std::uint64_t hi = next_u32() >> 5;  // 27 bits
  const std::uint64_t lo = next_u32() >> 6;  // 26 bits
  return (static_cast<double>((hi << 26) | lo) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_normal_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double CounterRng::log_gamma_variate(double shape) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("gamma variate: shape must be positive");
  }
  // Marsaglia-Tsang for shape >= 1; smaller shapes use
  // Gamma(a) = Gamma(a+1) U^{1/a}, kept in log space.
  const double boosted = shape < 1.0 ? shape + 1.0 : shape;
  const double d = boosted - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  double log_value;
  while (true) {
    const double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      log_value = std::log(d * v);
      break;
    }
  }
  if (shape < 1.0) log_value += std::log(uniform()) / shape;
  return log_value;
}

void draw_dirichlet(CounterRng& rng, std::span<const double> alphas,
                    std::span<double> out) {
  if (alphas.size() != out.size()) {
    throw std::invalid_argument("draw_dirichlet: size mismatch");
  }
  double top = -INFINITY;
  for (std::size_t s = 0; s < alphas.size(); ++s) {
    out[s] = rng.log_gamma_variate(alphas[s]);
    top = std::max(top, out[s]);
  }
  double total = 0.0;
  for (double& x : out) {
    x = std::exp(x - top);
    total += x;
  }
  for (double& x : out) x /= total;
}

unsigned configured_thread_count() {
  if (const char* env = std::getenv("DIHEDRAL_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct ChunkStats {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;
};

ChunkStats merge(const ChunkStats& a, const ChunkStats& b) {
  if (a.count == 0.0) return b;
  if (b.count == 0.0) return a;
  ChunkStats out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * (b.count / out.count);
  out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
  return out;
}

ChunkStats reduce_pairwise(std::span<const ChunkStats> chunks) {
  if (chunks.empty()) return {};
  if (chunks.size() == 1) return chunks[0];
  const std::size_t half = chunks.size() / 2;
  return merge(reduce_pairwise(chunks.subspan(0, half)),
               reduce_pairwise(chunks.subspan(half)));
}

constexpr std::size_t kChunk = 4096;

}  // namespace

MonteCarloEstimate dirichlet_expectation(
    std::span<const double> alphas, std::size_t count, std::uint64_t seed,
    const std::function<double(std::span<const double>)>& fn) {
  if (count == 0) throw std::invalid_argument("dirichlet_expectation: zero samples");
  for (double a : alphas) {
    if (!(a > 0.0)) throw std::invalid_argument("dirichlet alphas must be positive");
  }
  const std::size_t n_chunks = (count + kChunk - 1) / kChunk;
  std::vector<ChunkStats> stats(n_chunks);

  auto run_chunk = [&](std::size_t c, std::vector<double>& u) {
    ChunkStats st;
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(count, begin + kChunk);
    for (std::size_t i = begin; i < end; ++i) {
      CounterRng rng(seed, i);
      draw_dirichlet(rng, alphas, u);
      const double f = fn(u);
      st.count += 1.0;
      const double delta = f - st.mean;
      st.mean += delta / st.count;
      st.m2 += delta * (f - st.mean);
    }
    stats[c] = st;
  };

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(configured_thread_count(), n_chunks));
  if (workers <= 1) {
    std::vector<double> u(alphas.size());
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c, u);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            std::vector<double> u(alphas.size());
            for (std::size_t c = w; c < n_chunks; c += workers) run_chunk(c, u);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  const ChunkStats total = reduce_pairwise(stats);
  MonteCarloEstimate est;
  est.mean = total.mean;
  est.samples = count;
  est.std_error = count > 1 ? std::sqrt(total.m2 / (total.count - 1.0) / total.count) : 0.0;
  return est;
}

}  // namespace dihedral
