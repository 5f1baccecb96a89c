#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "udcode/codebook.hpp"
#include "udcode/construction.hpp"
#include "udcode/enumeration.hpp"

namespace udcode {

using Rational = boost::rational<long long>;

double to_double(const Rational& r);

/// Verdict of a decodability check. A witness (two distinct codeword tuples with
/// equal sums) is present exactly when the code is not uniquely decodable.
struct UdReport {
    bool is_ud = false;
    std::optional<std::pair<std::vector<KVector>, std::vector<KVector>>> witness;
    std::uint64_t tuples_checked = 0;
};

/// Exhaustive unique-decodability check: enumerates every codeword tuple and
/// looks for a sum collision. Never reports probabilistically; exceeding the
/// enumeration cap raises CapacityError.
UdReport check_ud(const MultiUserCode& code, const EnumerationLimits& limits = {});

/// Same verdict via the difference route: searches for a not-all-zero selection
/// of within-constituent differences summing to zero. Serves as an independent
/// oracle for check_ud on small codes.
UdReport check_ud_by_differences(const MultiUserCode& code, const EnumerationLimits& limits = {});

/// Largest delta such that all distinct codeword tuples have sums at L1 distance
/// >= delta; 0 when the code is not uniquely decodable. Codes admitting a single
/// tuple are vacuously decodable at any margin; INT64_MAX is returned for them.
std::int64_t min_sum_distance(const MultiUserCode& code, const EnumerationLimits& limits = {});

/// Per-user and total rates in bits per channel use. The exact total is
/// available whenever every constituent size is a power of two.
struct RateSummary {
    int length = 0;
    std::vector<std::uint64_t> sizes;
    std::vector<double> per_user;
    double total = 0.0;
    std::optional<Rational> exact_total;
    std::optional<Rational> predicted_total;
    std::optional<long long> predicted_users;
};

RateSummary total_rate(const MultiUserCode& code);

/// Closed-form user count and total rate of the power-of-two construction:
/// (2^(m+1), m/2 + 1 + floor(log2(k-1))).
std::pair<long long, Rational> predicted_power_of_two(int m, int k);

/// Closed-form user count and total rate of the arbitrary-length construction:
/// (2n, (S1 + S2)/n + 1 + floor(log2(k-1))) with S1, S2 read off the binary
/// digits of n.
std::pair<long long, Rational> predicted_arbitrary_length(int n, int k);

struct RateTableRow {
    long long users = 0;
    int length = 0;
    Rational rate;  // measured == predicted, enforced at construction
};

/// Builds the code for each requested length and tabulates (users, length, total
/// rate), requiring exact agreement between measured and predicted rates.
std::vector<RateTableRow> rate_table(const std::vector<int>& lengths, int k,
                                     const BuildLimits& limits = {});

}  // namespace udcode
