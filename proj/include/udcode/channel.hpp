#pragma once

#include <cstdint>
#include <vector>

#include "udcode/codebook.hpp"

namespace udcode {

/// Row-stochastic transition matrix of the discrete memoryless channel cascaded
/// after the adder. Row i gives the output distribution for input symbol i.
class TransitionMatrix {
  public:
    explicit TransitionMatrix(std::vector<std::vector<double>> rows);

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<double>& row(std::size_t i) const { return rows_.at(i); }

    static TransitionMatrix identity(std::size_t size);
    /// Each symbol moves to a neighbour with probability p per side; mass at the
    /// range ends folds onto the diagonal.
    static TransitionMatrix symmetric_perturbation(std::size_t size, double p);

  private:
    std::vector<std::vector<double>> rows_;
};

/// Noiseless adder channel: verifies each word belongs to its user's constituent
/// code and returns the componentwise sum.
SumWord transmit(const MultiUserCode& code, const std::vector<KVector>& tuple);

/// Resamples each symbol of y independently from its matrix row. Deterministic
/// for a fixed seed: mt19937_64, uniform draws (x >> 11) * 2^-53, and an
/// ascending cumulative scan over the row.
SumWord apply_dmc(const SumWord& y, const TransitionMatrix& matrix, std::uint64_t seed);

}  // namespace udcode
