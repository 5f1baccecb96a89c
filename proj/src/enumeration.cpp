#include "udcode/enumeration.hpp"

#include <bit>
#include <limits>

namespace udcode {

std::uint64_t tuple_count(const MultiUserCode& code) {
    std::uint64_t total = 1;
    for (const ConstituentCode& c : code.constituents()) {
        const std::uint64_t s = c.size();
        if (total > std::numeric_limits<std::uint64_t>::max() / s) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= s;
    }
    return total;
}

TupleCursor::TupleCursor(const MultiUserCode& code, std::uint64_t start)
    : code_(&code),
      users_(code.user_count()),
      length_(code.length()),
      idx_(code.user_count(), 0),
      partial_((code.user_count() + 1) * code.length(), 0),
      index_(start) {
    std::uint64_t rest = start;
    for (std::size_t u = users_; u-- > 0;) {
        const std::uint64_t s = code_->constituent(u).size();
        idx_[u] = static_cast<std::size_t>(rest % s);
        rest /= s;
    }
    recompute_from(0);
}

void TupleCursor::recompute_from(std::size_t user) noexcept {
    for (std::size_t u = user; u < users_; ++u) {
        const std::int32_t* prev = partial_.data() + u * length_;
        std::int32_t* next = partial_.data() + (u + 1) * length_;
        const Symbols& w = code_->constituent(u).words()[idx_[u]].symbols();
        for (std::size_t i = 0; i < length_; ++i) next[i] = prev[i] + w[i];
    }
}

bool TupleCursor::advance() noexcept {
    std::size_t u = users_;
    while (u-- > 0) {
        if (idx_[u] + 1 < code_->constituent(u).size()) {
            ++idx_[u];
            for (std::size_t v = u + 1; v < users_; ++v) idx_[v] = 0;
            recompute_from(u);
            ++index_;
            return true;
        }
    }
    return false;
}

std::vector<KVector> tuple_at(const MultiUserCode& code, std::uint64_t index) {
    std::vector<std::size_t> idx(code.user_count());
    std::uint64_t rest = index;
    for (std::size_t u = code.user_count(); u-- > 0;) {
        const std::uint64_t s = code.constituent(u).size();
        idx[u] = static_cast<std::size_t>(rest % s);
        rest /= s;
    }
    std::vector<KVector> tuple;
    tuple.reserve(code.user_count());
    for (std::size_t u = 0; u < code.user_count(); ++u) {
        tuple.push_back(code.constituent(u).words()[idx[u]]);
    }
    return tuple;
}

std::optional<SumPacker> SumPacker::make(const MultiUserCode& code) {
    const std::int64_t users = static_cast<std::int64_t>(code.user_count());
    SumPacker p;
    p.lo = users * code.alphabet().min_symbol();
    p.hi = users * code.alphabet().max_symbol();
    p.length = code.length();
    const std::uint64_t range = static_cast<std::uint64_t>(p.hi - p.lo);
    p.bits = range == 0 ? 1 : static_cast<unsigned>(std::bit_width(range));
    if (p.bits * p.length > 64) return std::nullopt;
    return p;
}

}  // namespace udcode
