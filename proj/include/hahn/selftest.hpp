#ifndef HAHN_SELFTEST_HPP
#define HAHN_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "hahn/derivation.hpp"
#include "hahn/series.hpp"

namespace hahn {

namespace testing {

using Rng = std::mt19937_64;

Rat random_rational(Rng& rng, long max_abs_num = 9, long max_den = 4);
Rat random_nonzero_rational(Rng& rng, long max_abs_num = 9, long max_den = 4);

struct ExponentOptions {
    long index_lo = -4;
    long index_hi = 6;
    bool integer_indices = true;
    bool allow_tails = false;
    int tail_offset = 1;
    bool positive_coeffs = false; // forces a positive exponent
    int max_terms = 2;
};

Exponent random_exponent(Rng& rng, const ExponentOptions& opt);

struct SeriesOptions {
    ExponentOptions exponent;
    int max_terms = 3;
    bool allow_zero = true;
};

Series random_series(Rng& rng, const SeriesOptions& opt);
/// Nonzero series whose support is strictly positive.
Series random_infinitesimal(Rng& rng, SeriesOptions opt);

/// Index-point constraints appropriate for each derivation mode.
SeriesOptions series_options_for(const DerivationSpec& spec);

} // namespace testing

namespace suites {

struct SuiteResult {
    std::string name;
    int total = 0;
    int failures = 0;
    std::vector<std::string> notes; // first few failure details

    SuiteResult() = default;
    explicit SuiteResult(std::string name_) : name(std::move(name_)) {}

    bool passed() const { return failures == 0; }
    void check(bool ok, const std::string& detail);
};

SuiteResult exponent_order(int n, std::uint64_t seed);
SuiteResult sign_oracle_agreement(int n, int depth, std::uint64_t seed);
SuiteResult tail_identity(int n, std::uint64_t seed);
SuiteResult field_laws(int n, std::uint64_t seed);
SuiteResult decomposition_split(int n, std::uint64_t seed);
SuiteResult leibniz(const DerivationSpec& spec, int n, std::uint64_t seed);
SuiteResult exp_compatibility(const DerivationSpec& spec, int n, unsigned depth,
                              std::uint64_t seed);
SuiteResult exp_homomorphism(int n, unsigned depth, std::uint64_t seed);
SuiteResult log_exp_roundtrips(int n, unsigned depth, std::uint64_t seed);
SuiteResult el_log_derivative(const ShiftMap& sigma, int n, std::uint64_t seed);
SuiteResult constant_combination_families(int n, std::uint64_t seed);
SuiteResult certificate_scaling_invariance(int n, std::uint64_t seed);
SuiteResult guarantee_stability(int n, unsigned depth_low, unsigned depth_high,
                                std::uint64_t seed);
SuiteResult rank_oracle_agreement(int n, std::size_t max_dim, std::uint64_t seed);
SuiteResult planted_relations(int n, unsigned degree, std::uint64_t seed);
SuiteResult relation_schanuel_consistency(int n, std::uint64_t seed);
SuiteResult expansion_parallel_agreement(int n, std::uint64_t seed);
SuiteResult parser_roundtrip();

/// The standard eleven derivation specs x suites bundle used by the
/// `selftest` subcommand. Returns the number of failing suites.
int run_selftest(std::ostream& out);

/// Expression corpus used by the parser suite.
const std::vector<std::string>& parser_corpus();
const std::vector<std::string>& malformed_corpus();

} // namespace suites

} // namespace hahn

#endif
