#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "udcode/errors.hpp"

namespace udcode {

/// Symbol alphabet. Unsigned alphabets hold {0,...,k-1}; signed alphabets hold
/// {-(k-1),...,k-1}. Signed alphabets appear only in difference sets.
struct Alphabet {
    Alphabet(std::int32_t arity, bool with_sign);

    std::int32_t k;
    bool is_signed;

    std::int32_t min_symbol() const noexcept { return is_signed ? -(k - 1) : 0; }
    std::int32_t max_symbol() const noexcept { return k - 1; }
    bool contains(std::int32_t s) const noexcept { return s >= min_symbol() && s <= max_symbol(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using Symbols = std::vector<std::int32_t>;

/// Fixed-length word over an alphabet. Immutable after construction.
class KVector {
  public:
    KVector(Symbols symbols, Alphabet alphabet);

    const Symbols& symbols() const noexcept { return symbols_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return symbols_.size(); }
    std::int32_t operator[](std::size_t i) const { return symbols_[i]; }

    friend bool operator==(const KVector& a, const KVector& b) {
        return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
    }
    // Lexicographic on symbols; only meaningful between words of one code.
    friend bool operator<(const KVector& a, const KVector& b) { return a.symbols_ < b.symbols_; }

  private:
    Symbols symbols_;
    Alphabet alphabet_;
};

/// One user's codeword set. Words are kept sorted lexicographically and must be
/// distinct, nonempty, and share length and alphabet.
class ConstituentCode {
  public:
    ConstituentCode(std::vector<KVector> words, int user_index);

    const std::vector<KVector>& words() const noexcept { return words_; }
    int index() const noexcept { return index_; }
    std::size_t size() const noexcept { return words_.size(); }
    std::size_t length() const noexcept { return words_.front().length(); }
    const Alphabet& alphabet() const noexcept { return words_.front().alphabet(); }
    bool contains(const KVector& w) const;

    // Set equality; the user index is positional bookkeeping and not compared.
    friend bool operator==(const ConstituentCode& a, const ConstituentCode& b) {
        return a.words_ == b.words_;
    }

  private:
    std::vector<KVector> words_;
    int index_;
};

/// Ordered collection of T constituent codes sharing length and alphabet.
/// Equality is order-sensitive.
class MultiUserCode {
  public:
    explicit MultiUserCode(std::vector<ConstituentCode> constituents);

    /// Builds a code from raw symbol sets, assigning user indices 1..T.
    static MultiUserCode from_words(const std::vector<std::vector<Symbols>>& sets,
                                    Alphabet alphabet);

    std::size_t user_count() const noexcept { return constituents_.size(); }
    std::size_t length() const noexcept { return constituents_.front().length(); }
    const Alphabet& alphabet() const noexcept { return constituents_.front().alphabet(); }
    const ConstituentCode& constituent(std::size_t i) const { return constituents_.at(i); }
    const std::vector<ConstituentCode>& constituents() const noexcept { return constituents_; }

    friend bool operator==(const MultiUserCode& a, const MultiUserCode& b) {
        return a.constituents_ == b.constituents_;
    }

  private:
    std::vector<ConstituentCode> constituents_;
};

/// Adder-channel output: the componentwise integer sum of one codeword per user.
struct SumWord {
    Symbols symbols;

    friend bool operator==(const SumWord&, const SumWord&) = default;
};

/// Sum of absolute symbol values, over the integers.
std::int64_t weight(std::span<const std::int32_t> x) noexcept;
std::int64_t weight(const KVector& x) noexcept;

/// L1 distance between two integer vectors of equal length.
std::int64_t distance(std::span<const std::int32_t> y, std::span<const std::int32_t> yp);
std::int64_t distance(const SumWord& y, const SumWord& yp);

/// Componentwise sum of one word per user. Words must share a length.
SumWord sum_tuple(const std::vector<KVector>& words);

}  // namespace udcode
