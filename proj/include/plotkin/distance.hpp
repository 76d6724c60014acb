#pragma once

// Minimum-distance engines: exhaustive enumeration, Brouwer-Zimmermann,
// and a randomized Lee-Brickell search for low-weight codewords.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plotkin/codes.hpp"

namespace plotkin {

enum class DistanceStatus { Exact, BoundsOnly, WitnessOnly };

std::string to_string(DistanceStatus s);

struct DistanceResult {
    int lower = 0;
    int upper = 0;
    DistanceStatus status = DistanceStatus::BoundsOnly;
    /// A codeword of weight `upper`, when one was seen.
    std::optional<Codeword> witness;
    /// Codeword evaluations performed.
    std::uint64_t work = 0;

    /// "Exact d=3", "BoundsOnly 4<=d<=7", "WitnessOnly d<=12"
    std::string describe() const;
    /// The result as distance knowledge for a LinearCode.
    DistanceInfo as_info() const;
};

/// For the zero code (k = 0) every engine reports lower = upper = n + 1.

inline constexpr std::uint64_t kExhaustiveCeiling = 1ull << 24;
inline constexpr std::uint64_t kDefaultBzBudget = 1'000'000'000ull;

struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumerates all q^k - 1 nonzero codewords. Throws EngineError when
/// q^k exceeds `ceiling`.
DistanceResult min_distance_exhaustive(const LinearCode& code, std::uint64_t ceiling = kExhaustiveCeiling);

/// Number of codewords of each weight 0..n. Throws EngineError when q^k
/// exceeds `ceiling`.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code, std::uint64_t ceiling = kExhaustiveCeiling);

struct BzOptions {
    std::uint64_t budget = kDefaultBzBudget;
    unsigned threads = 1;
    /// Called after every completed (round, matrix) block.
    std::function<void(const std::string&)> log;
};

/// Brouwer-Zimmermann. Enumerates messages by increasing weight against
/// systematic generators on disjoint information sets; stops when the
/// lower bound meets the best weight seen, or before a block that would
/// overrun the budget.
DistanceResult min_distance_bz(const LinearCode& code, const BzOptions& opts = {});

struct WitnessOptions {
    std::uint64_t budget = 10'000'000ull;
    std::uint64_t seed = 1;
};

/// Lee-Brickell with p = 2: random information sets, all messages of
/// weight <= 2. Stops once a codeword of weight <= target is seen or the
/// evaluation budget is spent.
DistanceResult low_weight_witness(const LinearCode& code, int target, const WitnessOptions& opts = {});

/// True when the witness (if any) lies in the code and has weight `upper`.
bool verify_witness(const LinearCode& code, const DistanceResult& r);

}  // namespace plotkin
