#ifndef HAHN_TRANSLOG_HPP
#define HAHN_TRANSLOG_HPP

#include <optional>

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Taylor partial sum sum_{k<=depth} eps^k / k! for infinitesimal eps,
/// a jet below (depth+1) v(eps); exp(0) = 1 exactly. Inputs with constant
/// or negative support are rejected.
Series exp_series(const Series& eps, unsigned depth);

/// Logarithm of a = t^g0 (1 + eps) with leading coefficient 1: the monomial
/// part maps through the shift (g0 = sum_phi c_phi e(phi) contributes
/// -sum_phi c_phi t^{-e(sigma(phi))}), the unit part is the alternating
/// Mercator partial sum, a jet below (depth+1) v(eps).
///
/// The monomial branch requires `sigma` and an atom-only g0 with integer
/// indices. The sign of the monomial branch is chosen so that
/// D(log a) = D(a)/a holds for the matching shift derivation.
Series log_series(const Series& a, unsigned depth, std::optional<ShiftMap> sigma = std::nullopt);

} // namespace hahn

#endif
