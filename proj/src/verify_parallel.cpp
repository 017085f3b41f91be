// Word-parallel checkers.  The outer enumeration is split into chunks that
// OpenMP threads take dynamically; each chunk reports its first failure and
// the one with the smallest rank wins, so the report does not depend on the
// schedule.

#include "verify_detail.hpp"

#include "sic/combinatorics.hpp"
#include "sic/error.hpp"
#include "sic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>

namespace sic {

namespace {

using detail::Subset;
using Word = BinaryCode::Word;

struct Hit {
  std::uint64_t rank = 0;
  Counterexample witness;
};

// Calls scan(begin, end) on chunks of [0, items); scan returns the first hit
// in its range.  Hit ranks must increase with the item index.
template <class Scan>
std::optional<Hit> first_hit(std::uint64_t items, Scan scan) {
  const std::uint64_t chunk = std::clamp<std::uint64_t>(items / 4096, 1, 4096);
  const auto chunks = static_cast<std::int64_t>((items + chunk - 1) / chunk);
  std::atomic<std::int64_t> best_chunk{chunks};
  std::optional<Hit> best;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    if (c > best_chunk.load(std::memory_order_relaxed)) continue;
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
    auto hit = scan(begin, std::min(items, begin + chunk));
    if (hit) {
#pragma omp critical(sic_first_hit)
      {
        if (!best || hit->rank < best->rank) {
          best = std::move(hit);
          best_chunk.store(c, std::memory_order_relaxed);
        }
      }
    }
  }
  return best;
}

VerificationReport report(const std::optional<Hit>& hit, std::uint64_t domain) {
  if (!hit) return {true, std::nullopt, domain};
  return {false, hit->witness, hit->rank + 1};
}

bool is_zero(const Word* v, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (v[w]) return false;
  return true;
}

std::size_t popcount(const Word* v, std::size_t words) {
  std::size_t n = 0;
  for (std::size_t w = 0; w < words; ++w) n += std::popcount(v[w]);
  return n;
}

// ge[c] holds the rows with at least c ones among `cols`, for c = 0..cap.
class RowCounts {
 public:
  RowCounts(const BinaryCode& code, std::uint32_t cap)
      : code_(code), words_(code.words_per_column()), cap_(cap), ge_((cap + 1) * words_) {}

  void assign(const Subset& cols) {
    std::fill(ge_.begin(), ge_.end(), 0);
    const Word tail = tail_mask(code_.rows());
    for (std::size_t w = 0; w < words_; ++w) ge_[w] = ~Word{0};
    if (words_) ge_[words_ - 1] = tail;
    for (auto j : cols) {
      const Word* x = code_.column(j).data();
      for (std::uint32_t c = cap_; c >= 1; --c) {
        Word* dst = &ge_[c * words_];
        const Word* src = &ge_[(c - 1) * words_];
        for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w] & x[w];
      }
    }
  }

  const Word* at_least(std::uint32_t c) const { return &ge_[c * words_]; }

 private:
  const BinaryCode& code_;
  std::size_t words_;
  std::uint32_t cap_;
  std::vector<Word> ge_;
};

// Finds the lexicographically first z-subset of positions into `pool` whose
// columns together hit every row of `target`.
class CoverSearch {
 public:
  explicit CoverSearch(const BinaryCode& code) : code_(code), words_(code.words_per_column()) {
    for (std::size_t j = 0; j < code.cols(); ++j) max_weight_ = std::max(max_weight_, code.column_weight(j));
  }

  bool find(const Subset& pool, std::uint32_t z, const Word* target, Subset& positions) {
    pool_ = &pool;
    z_ = z;
    const std::size_t m = pool.size();
    suffix_.assign((m + 1) * words_, 0);
    for (std::size_t p = m; p-- > 0;) {
      const Word* x = code_.column(pool[p]).data();
      for (std::size_t w = 0; w < words_; ++w) suffix_[p * words_ + w] = suffix_[(p + 1) * words_ + w] | x[w];
    }
    remaining_.assign((z + 1) * words_, 0);
    std::copy(target, target + words_, remaining_.begin());
    positions.assign(z, 0);
    return dfs(0, 0, positions);
  }

 private:
  bool dfs(std::uint32_t depth, std::uint32_t start, Subset& positions) {
    const Word* r = &remaining_[depth * words_];
    const std::uint32_t left = z_ - depth;
    const auto m = static_cast<std::uint32_t>(pool_->size());
    if (is_zero(r, words_)) {
      if (start + left > m) return false;
      for (std::uint32_t i = 0; i < left; ++i) positions[depth + i] = start + i;
      return true;
    }
    if (left == 0 || popcount(r, words_) > left * max_weight_) return false;
    Word* next = &remaining_[(depth + 1) * words_];
    for (std::uint32_t p = start; p + left <= m; ++p) {
      const Word* reach = &suffix_[p * words_];
      bool coverable = true;
      for (std::size_t w = 0; w < words_ && coverable; ++w) coverable = (r[w] & ~reach[w]) == 0;
      if (!coverable) break;
      const Word* x = code_.column((*pool_)[p]).data();
      for (std::size_t w = 0; w < words_; ++w) next[w] = r[w] & ~x[w];
      positions[depth] = p;
      if (dfs(depth + 1, p + 1, positions)) return true;
    }
    return false;
  }

  const BinaryCode& code_;
  std::size_t words_;
  std::size_t max_weight_ = 0;
  const Subset* pool_ = nullptr;
  std::uint32_t z_ = 0;
  std::vector<Word> suffix_;
  std::vector<Word> remaining_;
};

Subset pick(const Subset& pool, const Subset& positions) {
  Subset out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(pool[p]);
  return out;
}

// Rows where at least u of the set's columns are 1, for every set.
std::vector<Word> firing_rows(const BinaryCode& code, const std::vector<Subset>& sets, std::uint32_t u) {
  const std::size_t words = code.words_per_column();
  std::vector<Word> out(sets.size() * words);
  const auto n = static_cast<std::int64_t>(sets.size());
#pragma omp parallel
  {
    RowCounts counts(code, u);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      counts.assign(sets[i]);
      std::copy_n(counts.at_least(u), words, &out[i * words]);
    }
  }
  return out;
}

bool inside(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

VerificationReport check_cover_free(const BinaryCode& code, std::uint32_t z, std::uint32_t u,
                                    const CheckOptions& options) {
  detail::require_cover_free_params(code, z, u);
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t domain = detail::cover_free_domain(t, z, u);
  detail::enforce_budget(domain, options);
  const std::uint64_t per_u = binomial(t - u, z);

  auto hit = first_hit(binomial(t, u), [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    CoverSearch search(code);
    RowCounts counts(code, u);
    Subset U = subset_unrank(begin, u, t), positions;
    for (std::uint64_t i = begin; i < end; ++i, next_subset(U, t)) {
      counts.assign(U);
      const Subset rest = complement_of(U, t);
      if (search.find(rest, z, counts.at_least(u), positions))
        return Hit{i * per_u + subset_rank(positions, t - u), {U, pick(rest, positions), std::nullopt}};
    }
    return std::nullopt;
  });
  return report(hit, domain);
}

VerificationReport check_d_code(const BinaryCode& code, std::uint32_t s, std::uint32_t l,
                                const CheckOptions& options) {
  detail::require_d_code_params(code, s, l);
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t domain = detail::d_code_domain(t, s);
  detail::enforce_budget(domain, options);
  const std::size_t words = code.words_per_column();

  auto hit = first_hit(binomial(t, s), [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    RowCounts counts(code, l);
    Subset S = subset_unrank(begin, s, t);
    for (std::uint64_t i = begin; i < end; ++i, next_subset(S, t)) {
      counts.assign(S);
      const Word* crowded = counts.at_least(l);
      std::uint32_t pos = 0, k = 0;
      for (std::uint32_t j = 0; j < t; ++j) {
        if (k < s && S[k] == j) {
          ++k;
          continue;
        }
        const Word* x = code.column(j).data();
        if (inside(x, crowded, words)) return Hit{i * (t - s) + pos, {S, {}, j}};
        ++pos;
      }
    }
    return std::nullopt;
  });
  return report(hit, domain);
}

VerificationReport check_m_code(const BinaryCode& code, std::uint32_t s, std::uint32_t u,
                                const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "m-code");
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t domain = detail::m_code_domain(t, s, u);
  detail::enforce_budget(domain, options);
  const std::size_t words = code.words_per_column();

  for (std::uint32_t a = u; a <= s; ++a) {
    const std::uint64_t offset = detail::m_code_offset(t, u, a);
    const std::uint64_t per_z = binomial(t - a, a);
    auto hit = first_hit(binomial(t, a), [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
      CoverSearch search(code);
      RowCounts counts(code, u + 1);
      std::vector<Word> target(words);
      Subset U = subset_unrank(begin, a, t), positions;
      for (std::uint64_t i = begin; i < end; ++i, next_subset(U, t)) {
        counts.assign(U);
        const Word* ge_u = counts.at_least(u);
        const Word* ge_more = counts.at_least(u + 1);
        const Subset rest = complement_of(U, t);
        for (std::uint32_t idx = 0; idx < a; ++idx) {
          const Word* x = code.column(U[idx]).data();
          for (std::size_t w = 0; w < words; ++w) target[w] = ge_u[w] & ~ge_more[w] & x[w];
          if (search.find(rest, a, target.data(), positions))
            return Hit{offset + (i * a + idx) * per_z + subset_rank(positions, t - a),
                       {U, pick(rest, positions), U[idx]}};
        }
      }
      return std::nullopt;
    });
    if (hit) return report(hit, domain);
  }
  return {true, std::nullopt, domain};
}

VerificationReport check_design(const BinaryCode& code, const OutcomeFunction& outcome, std::uint32_t s,
                                DesignMode mode, const CheckOptions& options) {
  detail::require_design_params(code, outcome, s);
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t n = detail::threshold_set_count(t, detail::design_min_size(outcome, s, mode), s);
  const std::uint64_t domain = detail::design_domain(n);
  detail::enforce_budget(domain, options);

  const auto sets = detail::design_sets(t, outcome, s, mode);
  const std::size_t rows = code.rows();
  const std::uint32_t level = outcome.level();

  // Outcome vectors, one row of `rows` labels per set.
  std::vector<int> results(sets.size() * rows);
  const auto count = static_cast<std::int64_t>(sets.size());
#pragma omp parallel
  {
    RowCounts counts(code, level);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      counts.assign(sets[i]);
      for (std::size_t r = 0; r < rows; ++r) {
        std::uint32_t c = 0;
        while (c < level && ((counts.at_least(c + 1)[r / 64] >> (r % 64)) & 1u)) ++c;
        results[i * rows + r] = outcome(c);
      }
    }
  }

  std::vector<std::uint64_t> order(sets.size());
  std::iota(order.begin(), order.end(), 0);
  auto row_of = [&](std::uint64_t i) { return results.begin() + static_cast<std::ptrdiff_t>(i * rows); };
  auto same = [&](std::uint64_t a, std::uint64_t b) { return std::equal(row_of(a), row_of(a) + rows, row_of(b)); };
  auto less = [&](std::uint64_t a, std::uint64_t b) {
    if (same(a, b)) return a < b;
    return std::lexicographical_compare(row_of(a), row_of(a) + rows, row_of(b), row_of(b) + rows);
  };
  std::sort(order.begin(), order.end(), less);

  // Within a run of equal vectors the indices ascend; the first two form the
  // earliest colliding pair of that run.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!same(order[i], order[i + 1]) || (i > 0 && same(order[i - 1], order[i]))) continue;
    const std::pair<std::uint64_t, std::uint64_t> pair{order[i], order[i + 1]};
    if (!best || pair < *best) best = pair;
  }
  if (!best) return {true, std::nullopt, domain};
  const auto [a, b] = *best;
  return {false, Counterexample{sets[a], sets[b], std::nullopt}, detail::design_pair_rank(n, a, b) + 1};
}

VerificationReport check_threshold_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                          const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "threshold design");
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t domain = detail::threshold_domain(t, u, s);
  detail::enforce_budget(domain, options);

  const auto sets = detail::threshold_sets(t, u, s);
  const detail::ThresholdPairs pairs(sets, t, s);
  const std::size_t words = code.words_per_column();
  const auto fire = firing_rows(code, sets, u);

  auto hit = first_hit(sets.size(), [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    for (std::uint64_t a = begin; a < end; ++a) {
      const Word* ya = &fire[a * words];
      for (std::uint64_t b = 0; b < pairs.smaller_or_equal(a); ++b) {
        if (b == a) continue;
        if (inside(ya, &fire[b * words], words)) return Hit{pairs.rank(a, b), {sets[a], sets[b], std::nullopt}};
      }
    }
    return std::nullopt;
  });
  return report(hit, domain);
}

VerificationReport check_threshold_bar_design(const BinaryCode& code, std::uint32_t u, std::uint32_t s,
                                              const CheckOptions& options) {
  detail::require_threshold_params(code, u, s, "threshold-bar design");
  const auto t = static_cast<std::uint32_t>(code.cols());
  const std::uint64_t domain = detail::bar_domain(t, u, s);
  detail::enforce_budget(domain, options);

  const auto sets = detail::threshold_sets(t, u, s);
  const detail::BarPairs pairs(sets, t, s);
  const std::size_t words = code.words_per_column();
  const auto fire = firing_rows(code, sets, u);

  auto hit = first_hit(sets.size(), [&](std::uint64_t begin, std::uint64_t end) -> std::optional<Hit> {
    for (std::uint64_t a = begin; a < end; ++a) {
      const Word* ya = &fire[a * words];
      for (std::uint64_t b = 0; b < sets.size(); ++b) {
        // P inside P' forces Y_P inside Y_P', so the subset test only runs on
        // candidate failures.
        if (!inside(ya, &fire[b * words], words) || detail::is_subset(sets[a], sets[b])) continue;
        return Hit{pairs.rank(a, b), {sets[a], sets[b], std::nullopt}};
      }
    }
    return std::nullopt;
  });
  return report(hit, domain);
}

bool check_d_certificate(const BinaryCode& code, std::uint32_t s, std::uint32_t l) {
  if (!(1 <= l && l < s))
    throw Error(ErrorKind::ParameterOutOfRange,
                "certificate needs 1 <= l < s, got l=" + std::to_string(l) + " s=" + std::to_string(s));
  const auto w = code.constant_weight();
  if (!w) throw Error(ErrorKind::NotConstantWeight, "certificate needs a constant-weight code");
  const std::uint64_t lhs = static_cast<std::uint64_t>(s) * coincidence(code);
  const std::uint64_t rhs = static_cast<std::uint64_t>(l) * *w;
  return lhs + 1 <= rhs;
}

std::size_t coincidence(const BinaryCode& code) {
  if (code.cols() < 2) throw Error(ErrorKind::TooFewColumns, "coincidence needs at least two columns");
  const auto t = static_cast<std::int64_t>(code.cols());
  const std::size_t words = code.words_per_column();
  std::size_t best = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (std::int64_t a = 0; a < t; ++a) {
    const Word* x = code.column(a).data();
    for (std::int64_t b = a + 1; b < t; ++b) {
      const Word* y = code.column(b).data();
      std::size_t common = 0;
      for (std::size_t w = 0; w < words; ++w) common += std::popcount(x[w] & y[w]);
      best = std::max(best, common);
    }
  }
  return best;
}

std::size_t coincidence(const QaryCode& code) {
  if (code.t() < 2) throw Error(ErrorKind::TooFewColumns, "coincidence needs at least two codewords");
  const auto t = static_cast<std::int64_t>(code.t());
  std::size_t best = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
  for (std::int64_t a = 0; a < t; ++a) {
    const auto x = code.column(a);
    for (std::int64_t b = a + 1; b < t; ++b) {
      const auto y = code.column(b);
      std::size_t agree = 0;
      for (std::size_t i = 0; i < x.size(); ++i) agree += x[i] == y[i];
      best = std::max(best, agree);
    }
  }
  return best;
}

}  // namespace sic
