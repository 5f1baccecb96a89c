#include "udcode/codebook.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace udcode {

Alphabet::Alphabet(std::int32_t arity, bool with_sign) : k(arity), is_signed(with_sign) {
    if (k < 2) throw std::invalid_argument("alphabet arity must be at least 2");
}

KVector::KVector(Symbols symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    if (symbols_.empty()) throw std::invalid_argument("codeword must have length >= 1");
    for (std::int32_t s : symbols_) {
        if (!alphabet_.contains(s)) {
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " outside alphabet range");
        }
    }
}

ConstituentCode::ConstituentCode(std::vector<KVector> words, int user_index)
    : words_(std::move(words)), index_(user_index) {
    if (words_.empty()) throw std::invalid_argument("constituent code must be nonempty");
    const std::size_t n = words_.front().length();
    const Alphabet& a = words_.front().alphabet();
    for (const KVector& w : words_) {
        if (w.length() != n) throw std::invalid_argument("constituent words differ in length");
        if (!(w.alphabet() == a)) throw std::invalid_argument("constituent words differ in alphabet");
    }
    std::sort(words_.begin(), words_.end());
    for (std::size_t i = 1; i < words_.size(); ++i) {
        if (words_[i] == words_[i - 1]) {
            throw std::invalid_argument("duplicate codeword in constituent code");
        }
    }
}

bool ConstituentCode::contains(const KVector& w) const {
    if (!(w.alphabet() == alphabet()) || w.length() != length()) return false;
    return std::binary_search(words_.begin(), words_.end(), w);
}

MultiUserCode::MultiUserCode(std::vector<ConstituentCode> constituents)
    : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw std::invalid_argument("multi-user code needs at least one user");
    const std::size_t n = constituents_.front().length();
    const Alphabet& a = constituents_.front().alphabet();
    for (std::size_t i = 0; i < constituents_.size(); ++i) {
        if (constituents_[i].length() != n)
            throw std::invalid_argument("constituents differ in code length");
        if (!(constituents_[i].alphabet() == a))
            throw std::invalid_argument("constituents differ in alphabet");
        if (constituents_[i].index() != static_cast<int>(i) + 1)
            throw std::invalid_argument("constituent user indices must run 1..T in order");
    }
}

MultiUserCode MultiUserCode::from_words(const std::vector<std::vector<Symbols>>& sets,
                                        Alphabet alphabet) {
    std::vector<ConstituentCode> cs;
    cs.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::vector<KVector> words;
        words.reserve(sets[i].size());
        for (const Symbols& s : sets[i]) words.emplace_back(s, alphabet);
        cs.emplace_back(std::move(words), static_cast<int>(i) + 1);
    }
    return MultiUserCode(std::move(cs));
}

std::int64_t weight(std::span<const std::int32_t> x) noexcept {
    std::int64_t w = 0;
    for (std::int32_t s : x) w += std::abs(static_cast<std::int64_t>(s));
    return w;
}

std::int64_t weight(const KVector& x) noexcept { return weight(std::span(x.symbols())); }

std::int64_t distance(std::span<const std::int32_t> y, std::span<const std::int32_t> yp) {
    if (y.size() != yp.size()) throw std::invalid_argument("distance: length mismatch");
    std::int64_t d = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        d += std::abs(static_cast<std::int64_t>(y[i]) - static_cast<std::int64_t>(yp[i]));
    }
    return d;
}

std::int64_t distance(const SumWord& y, const SumWord& yp) {
    return distance(std::span(y.symbols), std::span(yp.symbols));
}

SumWord sum_tuple(const std::vector<KVector>& words) {
    if (words.empty()) throw std::invalid_argument("sum_tuple: empty tuple");
    const std::size_t n = words.front().length();
    Symbols sum(n, 0);
    for (const KVector& w : words) {
        if (w.length() != n) throw std::invalid_argument("sum_tuple: length mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t v = static_cast<std::int64_t>(sum[i]) + w[i];
            if (v > std::numeric_limits<std::int32_t>::max() ||
                v < std::numeric_limits<std::int32_t>::min()) {
                throw std::overflow_error("sum_tuple: symbol sum overflow");
            }
            sum[i] = static_cast<std::int32_t>(v);
        }
    }
    return SumWord{std::move(sum)};
}

}  // namespace udcode
