#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "sudogen/errors.hpp"

namespace sudogen {

/// Outcome of one rejection-sampling run.
struct TrialStats {
  std::uint64_t attempts = 0;
  std::chrono::nanoseconds elapsed{0};
  bool accepted = false;

  /// Mean time of one generate-and-check iteration.
  std::chrono::duration<double, std::nano> per_attempt() const {
    if (attempts == 0) return std::chrono::duration<double, std::nano>{0};
    return std::chrono::duration<double, std::nano>(elapsed) / static_cast<double>(attempts);
  }
};

template <class T>
struct Sampled {
  T value;
  TrialStats stats;
};

/// Thrown by sample_until when max_attempts candidates were all rejected.
class SamplingExhausted : public RetriesExhausted {
 public:
  explicit SamplingExhausted(TrialStats stats)
      : RetriesExhausted("sample_until: no candidate accepted after " +
                         std::to_string(stats.attempts) + " attempts"),
        stats_(stats) {}

  const TrialStats& stats() const noexcept { return stats_; }

 private:
  TrialStats stats_;
};

/// Draws candidates from `generate` until `accept` holds, returning the first
/// accepted candidate. The clock spans the whole loop. An empty
/// `max_attempts` means unbounded.
template <class Generate, class Accept>
auto sample_until(Generate&& generate, Accept&& accept,
                  std::optional<std::uint64_t> max_attempts = std::nullopt)
    -> Sampled<std::remove_cvref_t<std::invoke_result_t<Generate&>>> {
  if (max_attempts && *max_attempts == 0) {
    throw DomainError("sample_until: max_attempts must be positive");
  }
  using Clock = std::chrono::steady_clock;
  TrialStats stats;
  const auto start = Clock::now();
  for (;;) {
    auto candidate = generate();
    ++stats.attempts;
    if (accept(std::as_const(candidate))) {
      stats.accepted = true;
      stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      return {std::move(candidate), stats};
    }
    if (max_attempts && stats.attempts >= *max_attempts) {
      stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
      throw SamplingExhausted(stats);
    }
  }
}

struct AcceptanceCount {
  std::uint64_t accepted = 0;
  std::uint64_t trials = 0;

  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(trials);
  }
};

/// One generate + accept per trial; returns the raw tallies so exhaustive
/// generators can be compared against exact rationals.
template <class Generate, class Accept>
AcceptanceCount count_acceptances(Generate&& generate, Accept&& accept, std::uint64_t trials) {
  if (trials == 0) throw DomainError("acceptance_rate: trials must be >= 1");
  AcceptanceCount count{0, trials};
  for (std::uint64_t i = 0; i < trials; ++i) {
    auto candidate = generate();
    if (accept(std::as_const(candidate))) ++count.accepted;
  }
  return count;
}

/// Empirical |V|/|U|: accepted candidates over trials.
template <class Generate, class Accept>
double acceptance_rate(Generate&& generate, Accept&& accept, std::uint64_t trials) {
  return count_acceptances(std::forward<Generate>(generate), std::forward<Accept>(accept), trials)
      .rate();
}

}  // namespace sudogen
