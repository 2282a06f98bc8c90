#ifndef HAHN_CERTIFICATE_HPP
#define HAHN_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hahn/linalg.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Machine-readable outcome of the independence hypothesis check on a
/// series family: either the constant-shifted inputs are Q-linearly
/// independent (rank n, certifying transcendence degree >= n+1 for the
/// family together with its exponentials), or a dependence witness is
/// produced, or — for jets — the trusted coefficients do not decide.
struct Certificate {
    enum class Outcome { certified, dependent, inconclusive };

    std::vector<Series> inputs;
    std::vector<Series> shifted_inputs; // y_i minus constant term
    std::size_t rank = 0;
    Outcome outcome = Outcome::inconclusive;
    std::optional<std::vector<Rat>> witness; // coprime integers, lead positive
    std::optional<std::string> conclusion;   // "td >= n+1" when certified
    std::optional<Exponent> trusted_region;  // min of present jet bounds
    std::optional<std::string> reason;       // when inconclusive
};

/// Rank and right kernel of the family over Q, computed from the exact
/// coefficient matrix on the common trusted region. Throws usage_error on
/// an empty family.
RankNullspace series_rank(const std::vector<Series>& vectors);

/// Full hypothesis check: shift every input by its constant term, decide
/// Q-linear independence of the shifted family on trusted coefficients.
Certificate certify_independence(const std::vector<Series>& ys);

struct ConstantCombinationCheck {
    bool holds = false;
    bool vacuous = false; // premise (the combination is a constant) failed
};

/// Verifies that whenever sum m_i y_i is a constant, the same combination
/// of the constant-shifted inputs vanishes exactly. Vacuously true when the
/// combination is not a constant.
ConstantCombinationCheck check_constant_combination(const std::vector<Series>& ys,
                                                    const std::vector<Rat>& m);

} // namespace hahn

#endif
