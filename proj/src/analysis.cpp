#include "udcode/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <thread>

namespace udcode {

namespace {

void require_within_cap(std::uint64_t total, std::uint64_t cap) {
    if (total > cap) {
        throw CapacityError("enumeration of " + std::to_string(total) +
                            " tuples exceeds the configured cap of " + std::to_string(cap));
    }
}

// Fills entries[lo..hi) with (key, tuple index) pairs, partitioned across
// workers by contiguous index ranges. The result is independent of the split.
template <typename Key, typename MakeKey>
void fill_entries(const MultiUserCode& code, std::vector<std::pair<Key, std::uint64_t>>& entries,
                  unsigned threads, MakeKey make_key) {
    const std::uint64_t total = entries.size();
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        TupleCursor cursor(code, lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            entries[i] = {make_key(cursor.sum()), i};
            cursor.advance();
        }
    };
    if (threads <= 1 || total < (std::uint64_t{1} << 16)) {
        worker(0, total);
        return;
    }
    const unsigned workers = std::min<unsigned>(threads, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (std::thread& t : pool) t.join();
}

template <typename Key, typename MakeKey>
UdReport collision_scan(const MultiUserCode& code, std::uint64_t total, unsigned threads,
                        MakeKey make_key) {
    std::vector<std::pair<Key, std::uint64_t>> entries(total);
    fill_entries<Key>(code, entries, threads, make_key);
    std::sort(entries.begin(), entries.end());

    UdReport report;
    report.tuples_checked = total;
    report.is_ud = true;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first) {
            report.is_ud = false;
            report.witness = {tuple_at(code, entries[i - 1].second),
                              tuple_at(code, entries[i].second)};
            break;
        }
    }
    return report;
}

int floor_log2(std::uint64_t v) { return static_cast<int>(std::bit_width(v)) - 1; }

}  // namespace

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

UdReport check_ud(const MultiUserCode& code, const EnumerationLimits& limits) {
    const std::uint64_t total = tuple_count(code);
    require_within_cap(total, limits.max_tuples);

    if (auto packer = SumPacker::make(code)) {
        return collision_scan<std::uint64_t>(
            code, total, limits.threads,
            [&](std::span<const std::int32_t> sum) { return packer->pack(sum); });
    }
    return collision_scan<Symbols>(code, total, limits.threads,
                                   [](std::span<const std::int32_t> sum) {
                                       return Symbols(sum.begin(), sum.end());
                                   });
}

UdReport check_ud_by_differences(const MultiUserCode& code, const EnumerationLimits& limits) {
    const std::size_t users = code.user_count();
    const std::size_t n = code.length();

    // Distinct difference vectors per user, each with one representative word pair.
    std::vector<std::vector<Symbols>> deltas(users);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reps(users);
    for (std::size_t u = 0; u < users; ++u) {
        std::map<Symbols, std::pair<std::size_t, std::size_t>> seen;
        const auto& words = code.constituent(u).words();
        for (std::size_t a = 0; a < words.size(); ++a) {
            for (std::size_t b = 0; b < words.size(); ++b) {
                Symbols d(n);
                for (std::size_t i = 0; i < n; ++i) d[i] = words[a][i] - words[b][i];
                seen.emplace(std::move(d), std::make_pair(a, b));
            }
        }
        for (auto& [d, rep] : seen) {
            deltas[u].push_back(d);
            reps[u].push_back(rep);
        }
    }

    std::uint64_t total = 1;
    for (std::size_t u = 0; u < users; ++u) {
        const std::uint64_t s = deltas[u].size();
        if (total > std::numeric_limits<std::uint64_t>::max() / s) {
            require_within_cap(std::numeric_limits<std::uint64_t>::max(), limits.max_tuples);
        }
        total *= s;
    }
    require_within_cap(total, limits.max_tuples);

    UdReport report;
    report.is_ud = true;

    // Odometer over difference selections with running partial sums and a count
    // of nonzero choices.
    std::vector<std::size_t> idx(users, 0);
    std::vector<Symbols> partial(users + 1, Symbols(n, 0));
    std::vector<int> nonzero(users + 1, 0);
    auto apply_level = [&](std::size_t u) {
        const Symbols& d = deltas[u][idx[u]];
        for (std::size_t i = 0; i < n; ++i) partial[u + 1][i] = partial[u][i] + d[i];
        const bool z = std::all_of(d.begin(), d.end(), [](std::int32_t v) { return v == 0; });
        nonzero[u + 1] = nonzero[u] + (z ? 0 : 1);
    };
    for (std::size_t u = 0; u < users; ++u) apply_level(u);

    while (true) {
        ++report.tuples_checked;
        const Symbols& sum = partial[users];
        if (nonzero[users] > 0 &&
            std::all_of(sum.begin(), sum.end(), [](std::int32_t v) { return v == 0; })) {
            report.is_ud = false;
            std::vector<KVector> first, second;
            for (std::size_t u = 0; u < users; ++u) {
                const auto& words = code.constituent(u).words();
                const auto [a, b] = reps[u][idx[u]];
                first.push_back(words[a]);
                second.push_back(words[b]);
            }
            report.witness = {std::move(first), std::move(second)};
            return report;
        }
        std::size_t u = users;
        bool advanced = false;
        while (u-- > 0) {
            if (idx[u] + 1 < deltas[u].size()) {
                ++idx[u];
                for (std::size_t v = u + 1; v < users; ++v) idx[v] = 0;
                for (std::size_t v = u; v < users; ++v) apply_level(v);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return report;
}

std::int64_t min_sum_distance(const MultiUserCode& code, const EnumerationLimits& limits) {
    const std::uint64_t total = tuple_count(code);
    require_within_cap(total, limits.max_tuples);
    if (total <= 1) return std::numeric_limits<std::int64_t>::max();

    const std::size_t n = code.length();
    std::vector<std::int32_t> sums(total * n);
    {
        TupleCursor cursor(code);
        for (std::uint64_t i = 0; i < total; ++i) {
            const auto s = cursor.sum();
            std::copy(s.begin(), s.end(), sums.begin() + i * n);
            cursor.advance();
        }
    }

    // Collision first: a repeated sum means the code is not uniquely decodable.
    {
        std::vector<std::uint64_t> order(total);
        for (std::uint64_t i = 0; i < total; ++i) order[i] = i;
        auto lt = [&](std::uint64_t a, std::uint64_t b) {
            return std::lexicographical_compare(sums.begin() + a * n, sums.begin() + (a + 1) * n,
                                                sums.begin() + b * n, sums.begin() + (b + 1) * n);
        };
        std::sort(order.begin(), order.end(), lt);
        for (std::uint64_t i = 1; i < total; ++i) {
            if (!lt(order[i - 1], order[i]) && !lt(order[i], order[i - 1])) return 0;
        }
    }

    if (total * (total - 1) / 2 > limits.max_pairs) {
        throw CapacityError("pairwise distance scan over " + std::to_string(total) +
                            " sums exceeds the configured pair cap");
    }
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::uint64_t a = 0; a < total && best > 1; ++a) {
        for (std::uint64_t b = a + 1; b < total; ++b) {
            std::int64_t d = 0;
            for (std::size_t i = 0; i < n; ++i) {
                d += std::abs(static_cast<std::int64_t>(sums[a * n + i]) - sums[b * n + i]);
            }
            if (d < best) {
                best = d;
                if (best <= 1) break;
            }
        }
    }
    return best;
}

RateSummary total_rate(const MultiUserCode& code) {
    RateSummary s;
    s.length = static_cast<int>(code.length());
    bool all_pow2 = true;
    long long bits = 0;
    for (const ConstituentCode& c : code.constituents()) {
        const std::uint64_t size = c.size();
        s.sizes.push_back(size);
        s.per_user.push_back(std::log2(static_cast<double>(size)) / s.length);
        s.total += s.per_user.back();
        if (std::has_single_bit(size)) {
            bits += floor_log2(size);
        } else {
            all_pow2 = false;
        }
    }
    if (all_pow2) s.exact_total = Rational(bits, s.length);
    return s;
}

std::pair<long long, Rational> predicted_power_of_two(int m, int k) {
    if (k < 3) throw UnsupportedArityError("formulas require k >= 3");
    if (m < 0) throw std::invalid_argument("exponent must be nonnegative");
    const long long users = 1LL << (m + 1);
    const Rational rate = Rational(m, 2) + 1 + floor_log2(static_cast<std::uint64_t>(k) - 1);
    return {users, rate};
}

std::pair<long long, Rational> predicted_arbitrary_length(int n, int k) {
    const BinaryProfile p = binary_profile(n, k);
    long long s1 = 0;  // sum over digits of j * 2^(j-1)
    long long s2 = 0;  // cross terms between set digits
    for (int j = 1; j <= p.r; ++j) {
        if (p.digits[j]) s1 += static_cast<long long>(j) << (j - 1);
    }
    for (int j = 0; j < p.r; ++j) {
        if (!p.digits[j]) continue;
        long long ones_above = 0;
        for (int i = j + 1; i <= p.r; ++i) ones_above += p.digits[i];
        s2 += (1LL << j) * ones_above;
    }
    const Rational rate =
        Rational(s1 + s2, n) + 1 + floor_log2(static_cast<std::uint64_t>(k) - 1);
    return {2LL * n, rate};
}

std::vector<RateTableRow> rate_table(const std::vector<int>& lengths, int k,
                                     const BuildLimits& limits) {
    std::vector<RateTableRow> rows;
    rows.reserve(lengths.size());
    for (int n : lengths) {
        const ConstructedCode built = build_arbitrary_length(n, k, limits);
        const RateSummary measured = total_rate(built.code);
        const auto [users, rate] = predicted_arbitrary_length(n, k);
        if (static_cast<long long>(built.code.user_count()) != users || !measured.exact_total ||
            *measured.exact_total != rate) {
            throw std::logic_error("constructed code disagrees with the closed-form rate");
        }
        rows.push_back(RateTableRow{users, n, rate});
    }
    return rows;
}

}  // namespace udcode
