#include "kakeya/stats.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <thread>

#include "kakeya/error.hpp"

namespace kakeya {

namespace {

mpq_class power(const mpq_class& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// (1 - k/q)^e
mpq_class one_minus_pow(unsigned long q, unsigned long k, unsigned long e) {
  return power(mpq_class(mpz_class(q) - k, mpz_class(q)), e);
}

}  // namespace

mpq_class expected_cardinality(unsigned long q) {
  const mpq_class q2 = mpq_class(mpz_class(q) * q);
  return (1 - one_minus_pow(q, 1, q + 1)) * q2;
}

mpq_class variance_cardinality(unsigned long q) {
  const mpz_class qz(q);
  const mpq_class q2(qz * qz);
  const mpq_class miss = one_minus_pow(q, 1, q + 1);
  mpq_class v = mpq_class(qz * (qz + 1) * (qz - 1) * (qz - 1)) * one_minus_pow(q, 2, q) + q2 * miss * (1 - q2 * miss);
  v.canonicalize();
  return v;
}

mpq_class joint_point_probability(unsigned long q, bool distinct) {
  const mpq_class miss = one_minus_pow(q, 1, q + 1);
  if (!distinct) return 1 - miss;
  mpq_class both = 1 + one_minus_pow(q, 1, 1) * one_minus_pow(q, 2, q) - 2 * miss;
  both.canonicalize();
  return both;
}

double chebyshev_bound(unsigned long q) {
  if (q < 3) throw Error(ErrorKind::InvalidConfig, "chebyshev_bound needs q >= 3");
  const double eps = static_cast<double>(q) * std::log(static_cast<double>(q));
  return variance_cardinality(q).get_d() / (eps * eps);
}

std::string to_fraction_string(const mpq_class& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

class CoverageEnumerator {
 public:
  explicit CoverageEnumerator(const FieldTable& f) : f_(f), q_(f.q()), cover_(static_cast<std::size_t>(q_) * q_, 0) {}

  void run() { visit(0, 0); }

  mpz_class sum;
  mpz_class sum_sq;

 private:
  void visit(unsigned slot, std::uint64_t covered) {
    if (slot > q_) {
      sum += covered;
      sum_sq += mpz_class(covered) * covered;
      return;
    }
    std::vector<std::uint32_t> cells(q_);
    for (unsigned b = 0; b < q_; ++b) {
      std::uint64_t fresh = 0;
      for (unsigned t = 0; t < q_; ++t) {
        cells[t] = slot == q_ ? b * q_ + t : t * q_ + f_.add(f_.mul(Felt{slot}, Felt{t}), Felt{b}).idx;
        if (cover_[cells[t]]++ == 0) ++fresh;
      }
      visit(slot + 1, covered + fresh);
      for (unsigned t = 0; t < q_; ++t) --cover_[cells[t]];
    }
  }

  const FieldTable& f_;
  unsigned q_;
  std::vector<std::uint16_t> cover_;
};

}  // namespace

ExactMoments exact_moments_by_enumeration(const FieldTable& field) {
  const unsigned q = field.q();
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), q, q + 1);
  if (count > kEnumerationCap)
    throw Error(ErrorKind::TooLarge, std::to_string(q) + "^" + std::to_string(q + 1) + " configurations exceed the cap");

  CoverageEnumerator e(field);
  e.run();
  ExactMoments m;
  m.mean = mpq_class(e.sum, count);
  m.mean.canonicalize();
  mpq_class second(e.sum_sq, count);
  second.canonicalize();
  m.variance = second - m.mean * m.mean;
  m.variance.canonicalize();
  return m;
}

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) noexcept {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    word = splitmix64_mix(x);
    x += 0x9e3779b97f4a7c15ULL;
  }
}

std::uint64_t Xoshiro256StarStar::next() noexcept {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256StarStar::uniform_below(std::uint64_t bound) noexcept {
  if (bound <= 1) return 0;
  const int bits = std::bit_width(bound - 1);
  for (;;) {
    const std::uint64_t x = next() >> (64 - bits);
    if (x < bound) return x;
  }
}

Xoshiro256StarStar Xoshiro256StarStar::for_sample(std::uint64_t seed, std::uint64_t index) noexcept {
  return Xoshiro256StarStar(splitmix64_mix(seed ^ splitmix64_mix(index ^ 0xd1b54a32d192ed03ULL)));
}

namespace {

void sample_range(const FieldTable& f, std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                  std::vector<std::int64_t>& out) {
  const unsigned q = f.q();
  std::vector<std::uint64_t> stamp(static_cast<std::size_t>(q) * q, 0);
  for (std::uint64_t i = begin; i < end; ++i) {
    auto rng = Xoshiro256StarStar::for_sample(seed, i);
    const std::uint64_t tag = i + 1;
    std::int64_t card = 0;
    for (unsigned slot = 0; slot <= q; ++slot) {
      const unsigned b = static_cast<unsigned>(rng.uniform_below(q));
      for (unsigned t = 0; t < q; ++t) {
        const std::size_t c = slot == q ? static_cast<std::size_t>(b) * q + t
                                        : static_cast<std::size_t>(t) * q + f.add(f.mul(Felt{slot}, Felt{t}), Felt{b}).idx;
        if (stamp[c] != tag) {
          stamp[c] = tag;
          ++card;
        }
      }
    }
    out[i] = card;
  }
}

}  // namespace

SampleReport monte_carlo(const FieldTable& field, std::uint64_t n, std::uint64_t seed, unsigned worker_count) {
  if (n < 1) throw Error(ErrorKind::InvalidConfig, "sample count must be >= 1");
  if (worker_count < 1) throw Error(ErrorKind::InvalidConfig, "worker_count must be >= 1");

  SampleReport r;
  r.q = field.q();
  r.n = n;
  r.seed = seed;
  r.cardinalities.assign(n, 0);

  const std::uint64_t workers = std::min<std::uint64_t>(worker_count, n);
  if (workers <= 1) {
    sample_range(field, seed, 0, n, r.cardinalities);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] { sample_range(field, seed, begin, end, r.cardinalities); });
    }
  }

  // Integer sums first, so the result is exact before conversion.
  unsigned __int128 sum = 0, sum_sq = 0;
  const double q = r.q;
  const double center = (1.0 - 1.0 / std::numbers::e) * q * q;
  const double half_width = 2.0 * q * std::log(q);
  std::uint64_t violations = 0;
  for (std::int64_t c : r.cardinalities) {
    sum += static_cast<unsigned __int128>(c);
    sum_sq += static_cast<unsigned __int128>(c) * static_cast<unsigned __int128>(c);
    if (std::abs(static_cast<double>(c) - center) >= half_width) ++violations;
  }
  const double nd = static_cast<double>(n);
  r.empirical_mean = static_cast<double>(sum) / nd;
  if (n > 1) {
    // n * sum_sq - sum^2 is exact in 128 bits for any feasible run.
    const unsigned __int128 centered = static_cast<unsigned __int128>(n) * sum_sq - sum * sum;
    r.empirical_variance = static_cast<double>(centered) / (nd * (nd - 1.0));
  }
  r.closed_form_mean = expected_cardinality(r.q).get_d();
  r.closed_form_variance = variance_cardinality(r.q).get_d();
  r.band_violation_fraction = static_cast<double>(violations) / nd;
  return r;
}

}  // namespace kakeya
