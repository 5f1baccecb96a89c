#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udcode/codebook.hpp"

namespace udcode {

struct EnumerationLimits {
    std::uint64_t max_tuples = std::uint64_t{1} << 24;
    std::uint64_t max_pairs = std::uint64_t{1} << 25;
    unsigned threads = 1;
};

/// Product of the constituent sizes, saturating at UINT64_MAX.
std::uint64_t tuple_count(const MultiUserCode& code);

/// Odometer over all codeword tuples of a code, keeping running partial sums.
/// Tuple index i enumerates the mixed-radix counter with the last user fastest.
class TupleCursor {
  public:
    explicit TupleCursor(const MultiUserCode& code, std::uint64_t start = 0);

    std::span<const std::int32_t> sum() const noexcept {
        return {partial_.data() + users_ * length_, length_};
    }
    std::uint64_t index() const noexcept { return index_; }
    bool advance() noexcept;

  private:
    void recompute_from(std::size_t user) noexcept;

    const MultiUserCode* code_;
    std::size_t users_;
    std::size_t length_;
    std::vector<std::size_t> idx_;
    std::vector<std::int32_t> partial_;  // (users+1) rows of length `length_`
    std::uint64_t index_;
};

/// The codeword tuple at a given enumeration index.
std::vector<KVector> tuple_at(const MultiUserCode& code, std::uint64_t index);

/// Packs sum words into 64-bit keys when the per-symbol range allows it.
struct SumPacker {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    unsigned bits = 0;
    std::size_t length = 0;

    static std::optional<SumPacker> make(const MultiUserCode& code);

    std::uint64_t pack(std::span<const std::int32_t> sum) const noexcept {
        std::uint64_t key = 0;
        for (std::int32_t s : sum) {
            key = (key << bits) | static_cast<std::uint64_t>(s - lo);
        }
        return key;
    }

    std::optional<std::uint64_t> try_pack(std::span<const std::int32_t> sum) const noexcept {
        if (sum.size() != length) return std::nullopt;
        for (std::int32_t s : sum) {
            if (s < lo || s > hi) return std::nullopt;
        }
        return pack(sum);
    }
};

}  // namespace udcode
