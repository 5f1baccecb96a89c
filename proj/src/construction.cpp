#include "udcode/construction.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

namespace udcode {

namespace {

int floor_log2(std::uint64_t v) { return static_cast<int>(std::bit_width(v)) - 1; }

std::uint64_t code_symbol_count(const MultiUserCode& code) {
    std::uint64_t total = 0;
    for (const ConstituentCode& c : code.constituents()) {
        total += static_cast<std::uint64_t>(c.size()) * c.length();
    }
    return total;
}

struct SymbolBudget {
    std::uint64_t used = 0;
    std::uint64_t cap;

    void charge(std::uint64_t symbols) {
        used += symbols;
        if (used > cap) {
            throw CapacityError("construction would allocate " + std::to_string(used) +
                                " symbols, above the configured cap of " + std::to_string(cap));
        }
    }
};

ConstructedCode make_leaf(int ladder, int k, SymbolBudget& budget) {
    MultiUserCode code = initial_code(ladder, k);
    budget.charge(code_symbol_count(code));

    auto node = std::make_shared<TraceNode>();
    node->kind = TraceNode::Kind::leaf;
    node->length = 1;
    node->users = 2;
    node->arity = code.alphabet().k;
    node->ell = floor_log2(static_cast<std::uint64_t>(node->arity) - 1);
    return ConstructedCode{std::move(code), std::move(node)};
}

// One fold step: shift the right operand one rung down the arity ladder and
// attach it to the left operand as a difference set.
ConstructedCode combine_traced(ConstructedCode left, const ConstructedCode& right,
                               SymbolBudget& budget) {
    const std::int32_t offset = left.code.alphabet().k - 1;
    MultiUserCode shifted = shift_to_signed(right.code, offset);
    budget.charge(code_symbol_count(shifted));
    MultiUserCode combined = combine_with_difference_set(left.code, std::move(shifted));
    budget.charge(code_symbol_count(combined));

    auto node = std::make_shared<TraceNode>();
    node->kind = TraceNode::Kind::combine;
    node->length = static_cast<int>(combined.length());
    node->users = static_cast<int>(combined.user_count());
    node->arity = combined.alphabet().k;
    node->f = static_cast<int>(left.code.length());
    node->g = static_cast<int>(right.code.length());
    node->offset = offset;
    node->left = std::move(left.trace);
    node->right = right.trace;
    return ConstructedCode{std::move(combined), std::move(node)};
}

// The code of length 2^exponent over arity rung `ladder_base` of base k. Builds
// the row of initial codes at rungs ladder_base .. ladder_base+exponent and folds
// them level by level; cell j of each level pairs with the shifted cell j+1.
ConstructedCode build_cell(int exponent, int ladder_base, int k, SymbolBudget& budget) {
    std::vector<ConstructedCode> row;
    row.reserve(exponent + 1);
    for (int j = 0; j <= exponent; ++j) row.push_back(make_leaf(ladder_base + j, k, budget));
    for (int step = 1; step <= exponent; ++step) {
        for (int j = 0; j + step <= exponent; ++j) {
            row[j] = combine_traced(std::move(row[j]), row[j + 1], budget);
        }
    }
    return std::move(row.front());
}

void check_base_arity(int k) {
    if (k == 2) {
        throw UnsupportedArityError(
            "binary alphabets (k = 2) follow a different construction and are not supported; "
            "use k >= 3");
    }
    if (k < 2) throw UnsupportedArityError("alphabet arity must be at least 3");
}

}  // namespace

DifferencePair split_signed(const KVector& d) {
    if (!d.alphabet().is_signed) {
        throw std::invalid_argument("split_signed expects a signed-alphabet word");
    }
    const Alphabet part_alpha(d.alphabet().k, false);
    Symbols plus(d.length()), minus(d.length());
    for (std::size_t i = 0; i < d.length(); ++i) {
        if (d[i] >= 0) {
            plus[i] = d[i];
            minus[i] = 0;
        } else {
            plus[i] = 0;
            minus[i] = -d[i];
        }
    }
    return DifferencePair{d, KVector(std::move(plus), part_alpha),
                          KVector(std::move(minus), part_alpha)};
}

MultiUserCode shift_to_signed(const MultiUserCode& code, std::int32_t offset) {
    if (code.alphabet().is_signed) {
        throw std::invalid_argument("shift_to_signed expects an unsigned-alphabet code");
    }
    if (offset < 1 || code.alphabet().k != 2 * offset + 1) {
        throw std::invalid_argument("shift offset must equal (arity - 1) / 2 with odd arity");
    }
    const Alphabet target(offset + 1, true);
    std::vector<ConstituentCode> out;
    out.reserve(code.user_count());
    for (const ConstituentCode& c : code.constituents()) {
        std::vector<KVector> words;
        words.reserve(c.size());
        for (const KVector& w : c.words()) {
            Symbols s = w.symbols();
            for (std::int32_t& v : s) v -= offset;
            words.emplace_back(std::move(s), target);
        }
        out.emplace_back(std::move(words), c.index());
    }
    return MultiUserCode(std::move(out));
}

MultiUserCode initial_code(int ladder, int base_arity) {
    check_base_arity(base_arity);
    if (ladder < 0) throw std::invalid_argument("ladder index must be nonnegative");
    if (ladder > 30 || (static_cast<std::int64_t>(base_arity - 1) << ladder) > (1 << 26)) {
        throw CapacityError("arity ladder rung too large");
    }
    const std::int32_t kj = ((base_arity - 1) << ladder) + 1;
    const int ell = floor_log2(static_cast<std::uint64_t>(kj) - 1);
    const Alphabet alpha(kj, false);

    std::vector<KVector> first;
    first.reserve(std::size_t{1} << ell);
    for (std::int32_t v = 0; v < (1 << ell); ++v) first.emplace_back(Symbols{v}, alpha);
    std::vector<KVector> second;
    second.emplace_back(Symbols{0}, alpha);
    second.emplace_back(Symbols{kj - 1}, alpha);

    std::vector<ConstituentCode> cs;
    cs.emplace_back(std::move(first), 1);
    cs.emplace_back(std::move(second), 2);
    return MultiUserCode(std::move(cs));
}

MultiUserCode combine_with_difference_set(const MultiUserCode& code,
                                          const std::optional<MultiUserCode>& diff_set) {
    if (!diff_set) return code;
    const MultiUserCode& d = *diff_set;

    if (code.alphabet().is_signed) {
        throw std::invalid_argument("combine: left operand must be over an unsigned alphabet");
    }
    if (!d.alphabet().is_signed) {
        throw std::invalid_argument("combine: difference set must be over a signed alphabet");
    }
    if (code.alphabet().k != d.alphabet().k) {
        throw std::invalid_argument("combine: operands must share the alphabet arity");
    }
    const std::size_t f = code.length();
    const std::size_t g = d.length();
    if (f < g) throw std::invalid_argument("combine: code length must be >= difference-set length");

    const Alphabet out_alpha(code.alphabet().k, false);
    std::vector<ConstituentCode> out;
    out.reserve(code.user_count() + d.user_count());

    int user = 1;
    // Users carried over from the code transmit the word followed by a copy of
    // its first g symbols.
    for (const ConstituentCode& c : code.constituents()) {
        std::vector<KVector> words;
        words.reserve(c.size());
        for (const KVector& a : c.words()) {
            Symbols s;
            s.reserve(f + g);
            s.insert(s.end(), a.symbols().begin(), a.symbols().end());
            s.insert(s.end(), a.symbols().begin(), a.symbols().begin() + g);
            words.emplace_back(std::move(s), out_alpha);
        }
        out.emplace_back(std::move(words), user++);
    }
    // Difference-set users transmit (plus part zero-padded to length f, minus part).
    for (const ConstituentCode& c : d.constituents()) {
        std::vector<KVector> words;
        words.reserve(c.size());
        for (const KVector& dw : c.words()) {
            const DifferencePair parts = split_signed(dw);
            Symbols s;
            s.reserve(f + g);
            s.insert(s.end(), parts.plus.symbols().begin(), parts.plus.symbols().end());
            s.insert(s.end(), f - g, 0);
            s.insert(s.end(), parts.minus.symbols().begin(), parts.minus.symbols().end());
            words.emplace_back(std::move(s), out_alpha);
        }
        out.emplace_back(std::move(words), user++);
    }
    return MultiUserCode(std::move(out));
}

ConstructedCode build_power_of_two(int m, int k, const BuildLimits& limits) {
    check_base_arity(k);
    if (m < 0) throw std::invalid_argument("exponent must be nonnegative");
    if (m > limits.max_exponent) {
        throw CapacityError("exponent " + std::to_string(m) + " above configured maximum " +
                            std::to_string(limits.max_exponent));
    }
    SymbolBudget budget{0, limits.max_total_symbols};
    return build_cell(m, 0, k, budget);
}

BinaryProfile binary_profile(int n, int k) {
    check_base_arity(k);
    if (n < 1) throw std::invalid_argument("code length must be at least 1");

    BinaryProfile p;
    p.n = n;
    p.r = floor_log2(static_cast<std::uint64_t>(n));
    p.digits.resize(p.r + 1);
    p.step_lengths.resize(p.r + 1);
    p.prefix_lengths.resize(p.r + 1);
    p.ladder.resize(p.r + 1);

    int prefix = 0;
    for (int j = 0; j <= p.r; ++j) {
        p.digits[j] = (n >> j) & 1;
        p.step_lengths[j] = p.digits[j] << j;
        prefix += p.step_lengths[j];
        p.prefix_lengths[j] = prefix;
    }
    for (int j = 0; j <= p.r; ++j) {
        int ones_above = 0;
        for (int i = j + 1; i <= p.r; ++i) ones_above += p.digits[i];
        p.ladder[j] = ((k - 1) << ones_above) + 1;
    }
    return p;
}

ConstructedCode build_arbitrary_length(int n, int k, const BuildLimits& limits) {
    const BinaryProfile profile = binary_profile(n, k);
    if (profile.r > limits.max_exponent) {
        throw CapacityError("length " + std::to_string(n) + " above configured maximum");
    }
    SymbolBudget budget{0, limits.max_total_symbols};

    std::optional<ConstructedCode> acc;
    for (int j = 0; j <= profile.r; ++j) {
        if (!profile.digits[j]) continue;
        int ones_above = 0;
        for (int i = j + 1; i <= profile.r; ++i) ones_above += profile.digits[i];
        ConstructedCode block = build_cell(j, ones_above, k, budget);
        if (!acc) {
            acc = std::move(block);  // empty accumulator: combine is the identity
        } else {
            acc = combine_traced(std::move(block), *acc, budget);
        }
    }
    return std::move(*acc);
}

}  // namespace udcode
