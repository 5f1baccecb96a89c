#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "udcode/codebook.hpp"

namespace udcode {

/// Decomposition of a signed word d into nonnegative parts with d = plus - minus
/// and disjoint supports.
struct DifferencePair {
    KVector d;
    KVector plus;
    KVector minus;
};

DifferencePair split_signed(const KVector& d);

/// Subtracts `offset` from every symbol, mapping {0..2c} onto {-c..c}. The code's
/// arity must equal 2*offset+1; the result is signed with arity offset+1.
MultiUserCode shift_to_signed(const MultiUserCode& code, std::int32_t offset);

/// The 2-user, length-1 code at rung `ladder` of the arity ladder
/// k_j = 2^j (k-1) + 1: user 1 gets {0,...,2^l - 1} with l = floor(log2(k_j - 1)),
/// user 2 gets {0, k_j - 1}.
MultiUserCode initial_code(int ladder, int base_arity);

/// Combines an unsigned code of length f with a signed difference set of length
/// g <= f over the same arity into a code of length f+g. Users carried over from
/// `code` transmit (a, a_prefix_g); difference-set users transmit their word's
/// nonnegative split, the plus part zero-padded to length f. An absent difference
/// set leaves `code` unchanged.
MultiUserCode combine_with_difference_set(const MultiUserCode& code,
                                          const std::optional<MultiUserCode>& diff_set);

/// Node of the construction recipe consumed by the recursive decoder. A combine
/// node's right child is the higher-arity code that was shifted down by `offset`
/// to form the difference set.
struct TraceNode {
    enum class Kind { leaf, combine };

    Kind kind;
    int length = 0;
    int users = 0;
    int arity = 0;  // alphabet arity of this node's code (unsigned)

    // leaf
    int ell = 0;  // user 1 holds 2^ell words

    // combine
    int f = 0;
    int g = 0;
    int offset = 0;
    std::shared_ptr<const TraceNode> left;
    std::shared_ptr<const TraceNode> right;
};

using ConstructionTracePtr = std::shared_ptr<const TraceNode>;

struct ConstructedCode {
    MultiUserCode code;
    ConstructionTracePtr trace;
};

struct BuildLimits {
    std::uint64_t max_total_symbols = 10'000'000;  // across all intermediate codes
    int max_exponent = 24;
};

/// Builds the code of length 2^m over arity k (k >= 3) by folding the combine
/// step over the ladder of initial codes.
ConstructedCode build_power_of_two(int m, int k, const BuildLimits& limits = {});

/// Base-2 digit profile of a target length n, with the partial lengths and the
/// arity ladder consumed by the arbitrary-length recursion.
struct BinaryProfile {
    int n = 0;
    int r = 0;                        // floor(log2 n)
    std::vector<int> digits;          // digits[j] of n, j = 0..r, digits[r] = 1
    std::vector<int> step_lengths;    // digits[j] * 2^j
    std::vector<int> prefix_lengths;  // partial sums of step_lengths; back() == n
    std::vector<int> ladder;          // arity used at level j; ladder[r] == k
};

BinaryProfile binary_profile(int n, int k);

/// Builds the code of arbitrary length n over arity k (k >= 3): power-of-two
/// blocks for each set digit of n, folded together via the combine step.
ConstructedCode build_arbitrary_length(int n, int k, const BuildLimits& limits = {});

}  // namespace udcode
