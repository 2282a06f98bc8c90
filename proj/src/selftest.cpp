#include "hahn/selftest.hpp"

#include <chrono>
#include <ostream>

#include "hahn/certificate.hpp"
#include "hahn/errors.hpp"
#include "hahn/linalg.hpp"
#include "hahn/parser.hpp"
#include "hahn/reference.hpp"
#include "hahn/relation.hpp"
#include "hahn/translog.hpp"

namespace hahn {

namespace testing {

Rat random_rational(Rng& rng, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

Rat random_nonzero_rational(Rng& rng, long max_abs_num, long max_den) {
    while (true) {
        Rat r = random_rational(rng, max_abs_num, max_den);
        if (r != 0) return r;
    }
}

Exponent random_exponent(Rng& rng, const ExponentOptions& opt) {
    std::uniform_int_distribution<int> count(1, opt.max_terms);
    std::uniform_int_distribution<long> index(opt.index_lo, opt.index_hi);
    std::uniform_int_distribution<int> half(0, 1);
    std::uniform_int_distribution<int> tail(0, 3);

    std::vector<Exponent::Entry> atoms, tails;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Rat idx(index(rng));
        bool is_tail = opt.allow_tails && tail(rng) == 0;
        if (!is_tail && !opt.integer_indices && half(rng) == 0)
            idx += make_rational(1, 2);
        Rat c = random_nonzero_rational(rng, 5, 3);
        if (opt.positive_coeffs) c = abs(c);
        if (is_tail)
            tails.emplace_back(idx, c);
        else
            atoms.emplace_back(idx, c);
    }
    std::optional<int> shift;
    if (!tails.empty()) shift = opt.tail_offset;
    return Exponent::make(std::move(atoms), std::move(tails), shift);
}

Series random_series(Rng& rng, const SeriesOptions& opt) {
    std::uniform_int_distribution<int> count(opt.allow_zero ? 0 : 1, opt.max_terms);
    std::vector<Series::Term> terms;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        terms.push_back({random_exponent(rng, opt.exponent), random_nonzero_rational(rng)});
    return Series::from_terms(std::move(terms));
}

Series random_infinitesimal(Rng& rng, SeriesOptions opt) {
    opt.exponent.positive_coeffs = true;
    opt.allow_zero = false;
    // Positive atom coefficients put the least support index in charge with
    // a positive coefficient, so every generated exponent is positive.
    while (true) {
        Series s = random_series(rng, opt);
        if (!s.is_structurally_zero()) return s;
    }
}

SeriesOptions series_options_for(const DerivationSpec& spec) {
    SeriesOptions opt;
    struct Visitor {
        SeriesOptions& opt;
        void operator()(const Case1Spec&) const { opt.exponent.integer_indices = true; }
        void operator()(const ElSpec&) const { opt.exponent.integer_indices = true; }
        void operator()(const Case2MaxSpec& s) const {
            opt.exponent.integer_indices = false;
            // keep every index point at or below the greatest element
            opt.exponent.index_hi = 6;
            (void)s;
        }
        void operator()(const Case2CofinalSpec&) const {
            opt.exponent.integer_indices = false;
            opt.exponent.index_lo = 1; // stay inside the generated partition
            opt.exponent.index_hi = 8;
        }
    };
    std::visit(Visitor{opt}, spec.value());
    return opt;
}

} // namespace testing

namespace suites {

using namespace testing;

void SuiteResult::check(bool ok, const std::string& detail) {
    ++total;
    if (!ok) {
        ++failures;
        if (notes.size() < 3) notes.push_back(detail);
    }
}

namespace {

Sign negate_sign(Sign s) {
    if (s == Sign::positive) return Sign::negative;
    if (s == Sign::negative) return Sign::positive;
    return Sign::zero;
}

std::optional<Exponent> combined_guarantee(const Series& a, const Series& b) {
    return min_guarantee(a.guarantee(), b.guarantee());
}

bool agree_on_combined(const Series& a, const Series& b) {
    auto bound = combined_guarantee(a, b);
    if (!bound) return a == b;
    return a.agrees_below(b, *bound);
}

std::vector<DerivationSpec> standard_specs() {
    return {
        DerivationSpec::case1(ShiftMap{1}),
        DerivationSpec::case2_max(Embedding::affine(Rat(1), Rat(0)), Rat(10)),
        DerivationSpec::case2_cofinal(Embedding::affine(Rat(1), Rat(1)),
                                      CofinalSequence::powers_of_two()),
        DerivationSpec::el(ShiftMap{1}),
    };
}

} // namespace

SuiteResult exponent_order(int n, std::uint64_t seed) {
    SuiteResult r("exponent-order");
    Rng rng(seed);
    ExponentOptions opt;
    opt.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Exponent a = random_exponent(rng, opt);
        Exponent b = random_exponent(rng, opt);
        Exponent c = random_exponent(rng, opt);

        r.check(negate_sign(a.sign()) == (-a).sign(), "sign(-a) != -sign(a) for " + a.str());

        auto ab = a.compare(b), ba = b.compare(a);
        bool antisym = (ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal) &&
                       (ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater);
        r.check(antisym, "antisymmetry failed for " + a.str() + " vs " + b.str());

        if (a <= b && b <= c) r.check(a <= c, "transitivity failed");
        r.check(a.compare(b) == (a + c).compare(b + c),
                "translation invariance failed for " + a.str() + ", " + b.str() + ", " + c.str());
    }
    return r;
}

SuiteResult sign_oracle_agreement(int n, int depth, std::uint64_t seed) {
    SuiteResult r("exponent-sign-vs-expansion-oracle");
    Rng rng(seed);
    std::uniform_int_distribution<int> offset(1, 3);
    for (int i = 0; i < n; ++i) {
        ExponentOptions opt;
        opt.allow_tails = true;
        opt.tail_offset = offset(rng);
        opt.max_terms = 3;
        Exponent a = random_exponent(rng, opt);
        auto oracle = reference::sign_by_tail_expansion(a, depth);
        if (!oracle) continue; // expansion not decisive
        r.check(*oracle == a.sign(), "sign mismatch vs depth-" + std::to_string(depth) +
                                         " expansion for " + a.str());
    }
    return r;
}

SuiteResult tail_identity(int n, std::uint64_t seed) {
    SuiteResult r("tail-unfold-identity");
    Rng rng(seed);
    std::uniform_int_distribution<long> index(-20, 20);
    std::uniform_int_distribution<int> offset(1, 3);
    for (int i = 0; i < n; ++i) {
        Rat phi(index(rng));
        ShiftMap sigma{offset(rng)};
        auto [atom, rest] = tail_unfold(phi, sigma);
        Exponent whole = Exponent::tail(phi, sigma);
        r.check(atom + rest == whole, "tau(" + to_string(phi) + ") != e + tau under shift " +
                                          std::to_string(sigma.offset));
    }
    return r;
}

SuiteResult field_laws(int n, std::uint64_t seed) {
    SuiteResult r("series-field-laws");
    Rng rng(seed);
    SeriesOptions opt;
    opt.exponent.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Series a = random_series(rng, opt);
        Series b = random_series(rng, opt);
        Series c = random_series(rng, opt);

        r.check(a + b == b + a, "commutativity (+)");
        r.check(a * b == b * a, "commutativity (*)");
        r.check((a + b) + c == a + (b + c), "associativity (+)");
        r.check((a * b) * c == a * (b * c), "associativity (*)");
        r.check(a * (b + c) == a * b + a * c, "distributivity");

        if (!a.is_structurally_zero() && !b.is_structurally_zero()) {
            Series ab = a * b;
            r.check(ab.valuation() == a.valuation() + b.valuation(),
                    "valuation multiplicativity for " + a.str() + " times " + b.str());
        }
        Series sum = a + b;
        if (!a.is_structurally_zero() && !b.is_structurally_zero() &&
            !sum.is_structurally_zero()) {
            const Exponent& va = a.valuation();
            const Exponent& vb = b.valuation();
            const Exponent& vsum = sum.valuation();
            r.check(vsum >= min(va, vb), "ultrametric inequality");
            if (va != vb) r.check(vsum == min(va, vb), "ultrametric equality case");
        }
        if (!a.is_structurally_zero()) {
            Series inv = inverse(a, 4);
            Series prod = a * inv;
            if (inv.guarantee())
                r.check(prod.agrees_below(Series::one(), *prod.guarantee()),
                        "a * inv(a) != 1 below bound for " + a.str());
            else
                r.check(prod == Series::one(), "a * inv(a) != 1 for exact inverse of " + a.str());
        }
    }
    return r;
}

SuiteResult decomposition_split(int n, std::uint64_t seed) {
    SuiteResult r("decomposition-direct-sum");
    Rng rng(seed);
    SeriesOptions opt;
    opt.exponent.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Series y = random_series(rng, opt);
        Decomposition d = decompose(y);
        Series back = d.negative_part + Series::constant(d.constant_term) + d.infinitesimal_part;
        r.check(back == y.with_guarantee(std::nullopt) ||
                    (y.guarantee() && back == y), // guarantee kept on the parts
                "reconstruction failed for " + y.str());
        for (const auto& t : d.negative_part.terms())
            r.check(t.exponent.is_negative(), "negative part has a non-negative exponent");
        for (const auto& t : d.infinitesimal_part.terms())
            r.check(t.exponent.is_positive(), "infinitesimal part has a non-positive exponent");
        Decomposition again = decompose(d.negative_part);
        r.check(again.negative_part == d.negative_part && again.constant_term == 0 &&
                    again.infinitesimal_part.is_structurally_zero(),
                "decompose is not idempotent on the negative part");
    }
    return r;
}

SuiteResult leibniz(const DerivationSpec& spec, int n, std::uint64_t seed) {
    SuiteResult r("derivation-leibniz (" + spec.str() + ")");
    Rng rng(seed);
    SeriesOptions opt = series_options_for(spec);
    for (int i = 0; i < n; ++i) {
        Series a = random_series(rng, opt);
        Series b = random_series(rng, opt);
        Series lhs = derive(spec, a * b);
        Series rhs = a * derive(spec, b) + b * derive(spec, a);
        r.check(lhs == rhs, "D(ab) != aD(b)+bD(a) for a=" + a.str() + ", b=" + b.str());
    }
    return r;
}

SuiteResult exp_compatibility(const DerivationSpec& spec, int n, unsigned depth,
                              std::uint64_t seed) {
    SuiteResult r("derivation-exp-compatibility (" + spec.str() + ")");
    Rng rng(seed);
    SeriesOptions opt = series_options_for(spec);
    for (int i = 0; i < n; ++i) {
        Series eps = random_infinitesimal(rng, opt);
        Series e = exp_series(eps, depth);
        Series lhs = derive(spec, e);
        Series rhs = derive(spec, eps) * e;
        auto bound = combined_guarantee(lhs, rhs);
        bool ok = bound ? lhs.agrees_below(rhs, *bound) : lhs == rhs;
        r.check(ok, "D(exp eps) != D(eps) exp(eps) below bound for eps=" + eps.str());
    }
    return r;
}

SuiteResult exp_homomorphism(int n, unsigned depth, std::uint64_t seed) {
    SuiteResult r("exp-homomorphism");
    Rng rng(seed);
    SeriesOptions opt;
    opt.exponent.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Series x = random_infinitesimal(rng, opt);
        Series y = random_infinitesimal(rng, opt);
        Series lhs = exp_series(x + y, depth);
        Series rhs = exp_series(x, depth) * exp_series(y, depth);
        r.check(agree_on_combined(lhs, rhs),
                "exp(x+y) != exp(x)exp(y) below bound for x=" + x.str() + ", y=" + y.str());
    }
    return r;
}

SuiteResult log_exp_roundtrips(int n, unsigned depth, std::uint64_t seed) {
    SuiteResult r("log-exp-roundtrips");
    Rng rng(seed);
    SeriesOptions opt;
    opt.exponent.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Series eps = random_infinitesimal(rng, opt);

        Series back = log_series(exp_series(eps, depth), depth);
        r.check(back.guarantee() && back.agrees_below(eps, *back.guarantee()),
                "log(exp(eps)) != eps below bound for eps=" + eps.str());

        Series unit = Series::one() + eps;
        Series forth = exp_series(log_series(unit, depth), depth);
        r.check(forth.guarantee() && forth.agrees_below(unit, *forth.guarantee()),
                "exp(log(1+eps)) != 1+eps below bound for eps=" + eps.str());
    }
    return r;
}

SuiteResult el_log_derivative(const ShiftMap& sigma, int n, std::uint64_t seed) {
    SuiteResult r("el-logarithmic-derivative (shift=" + std::to_string(sigma.offset) + ")");
    Rng rng(seed);
    DerivationSpec spec = DerivationSpec::el(sigma);
    ExponentOptions opt;
    opt.integer_indices = true;
    opt.max_terms = 3;
    for (int i = 0; i < n; ++i) {
        Exponent g = random_exponent(rng, opt);
        if (g.is_structurally_zero()) continue;
        Series mono = Series::monomial(g);
        Series lhs = derive(spec, log_series(mono, 4, sigma));
        Series rhs = derive(spec, mono) * inverse(mono, 1);
        r.check(lhs == rhs, "D(log t^g) != D(t^g)/t^g for g=" + g.str());
    }
    return r;
}

SuiteResult constant_combination_families(int n, std::uint64_t seed) {
    SuiteResult r("constant-combination-lemma");
    Rng rng(seed);
    SeriesOptions opt;
    std::uniform_int_distribution<int> size(2, 5);
    for (int i = 0; i < n; ++i) {
        int k = size(rng);
        std::vector<Series> ys;
        std::vector<Rat> m;
        for (int j = 0; j + 1 < k; ++j) {
            ys.push_back(random_series(rng, opt));
            m.push_back(random_rational(rng));
        }
        Rat mk = random_nonzero_rational(rng);
        Rat constant = random_rational(rng);
        Series acc = Series::constant(constant);
        for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(k); ++j)
            acc = acc - ys[j].scaled(m[j]);
        ys.push_back(acc.scaled(1 / mk));
        m.push_back(mk);

        auto res = check_constant_combination(ys, m);
        r.check(res.holds && !res.vacuous, "engineered constant combination rejected");
    }
    return r;
}

SuiteResult certificate_scaling_invariance(int n, std::uint64_t seed) {
    SuiteResult r("certificate-scaling-invariance");
    Rng rng(seed);
    SeriesOptions opt;
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<int> plant(0, 1);
    for (int i = 0; i < n; ++i) {
        int k = size(rng);
        std::vector<Series> ys;
        for (int j = 0; j < k; ++j) ys.push_back(random_series(rng, opt));
        if (k >= 2 && plant(rng)) // force a dependence some of the time
            ys[static_cast<std::size_t>(k) - 1] =
                ys[0].scaled(random_rational(rng)) + Series::constant(random_rational(rng));

        Certificate before = certify_independence(ys);
        for (auto& y : ys) y = y.scaled(random_nonzero_rational(rng));
        Certificate after = certify_independence(ys);

        r.check(before.outcome == after.outcome && before.rank == after.rank,
                "certificate class changed under nonzero scaling");
        if (before.witness) {
            Series combo = Series::zero();
            for (std::size_t j = 0; j < before.shifted_inputs.size(); ++j)
                combo = combo + before.shifted_inputs[j].scaled((*before.witness)[j]);
            r.check(combo.is_structurally_zero(), "emitted witness does not annihilate");
        }
    }
    return r;
}

SuiteResult guarantee_stability(int n, unsigned depth_low, unsigned depth_high,
                                std::uint64_t seed) {
    SuiteResult r("jet-bound-stability");
    Rng rng(seed);
    SeriesOptions opt;
    opt.exponent.allow_tails = true;
    for (int i = 0; i < n; ++i) {
        Series eps = random_infinitesimal(rng, opt);

        Series lo = exp_series(eps, depth_low);
        Series hi = exp_series(eps, depth_high);
        r.check(hi.agrees_below(lo, *lo.guarantee()), "exp coefficients moved below bound");

        Series unit = Series::one() + eps;
        Series llo = log_series(unit, depth_low);
        Series lhi = log_series(unit, depth_high);
        r.check(lhi.agrees_below(llo, *llo.guarantee()), "log coefficients moved below bound");

        Series a = Series::monomial(random_exponent(rng, opt.exponent),
                                    random_nonzero_rational(rng)) *
                   unit;
        Series ilo = inverse(a, depth_low);
        Series ihi = inverse(a, depth_high);
        r.check(ihi.agrees_below(ilo, *ilo.guarantee()), "inv coefficients moved below bound");
    }
    return r;
}

SuiteResult rank_oracle_agreement(int n, std::size_t max_dim, std::uint64_t seed) {
    SuiteResult r("rank-vs-gauss-oracle");
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    for (int i = 0; i < n; ++i) {
        std::size_t rows = dim(rng), cols = dim(rng);
        Matrix m(rows, std::vector<Rat>(cols));
        for (auto& row : m)
            for (auto& x : row) x = random_rational(rng, 6, 3);

        RankNullspace fast = rank_nullspace(m, cols, true);
        RankNullspace serial = rank_nullspace(m, cols, false);
        RankNullspace oracle = reference::gauss_rank_nullspace(m, cols);
        r.check(fast.rank == oracle.rank && fast.kernel == oracle.kernel,
                "fraction-free elimination disagrees with the Gauss oracle");
        r.check(fast.rank == serial.rank && fast.kernel == serial.kernel,
                "parallel and serial elimination disagree");
    }
    return r;
}

SuiteResult planted_relations(int n, unsigned degree, std::uint64_t seed) {
    SuiteResult r("planted-relations-found");
    Rng rng(seed);
    SeriesOptions opt;
    opt.max_terms = 2;
    opt.exponent.max_terms = 1;
    std::uniform_int_distribution<int> size(2, 4);
    for (int i = 0; i < n; ++i) {
        int k = size(rng);
        std::vector<Series> ws;
        for (int j = 0; j + 1 < k; ++j) ws.push_back(random_series(rng, opt));

        // Random polynomial in the first k-1 series; the last series is its
        // value, so a degree <= `degree` relation exists by construction.
        auto monos = enumerate_monomials(ws.size(), degree - 1 > 0 ? degree - 1 : 1);
        Series value = Series::zero();
        for (const auto& tuple : monos) {
            Rat c = random_rational(rng, 3, 2);
            if (c == 0) continue;
            Series term = Series::constant(c);
            for (std::size_t j = 0; j < tuple.size(); ++j)
                if (tuple[j] > 0) term = term * ws[j].pow(tuple[j]);
            value = value + term;
        }
        ws.push_back(value);

        RelationReport report = find_relation(ws, degree);
        r.check(report.outcome == RelationReport::Outcome::verified,
                "planted relation not found at degree " + std::to_string(degree));
        if (report.outcome == RelationReport::Outcome::verified) {
            // Independent re-multiplication of the reported combination.
            Series combo = Series::zero();
            for (std::size_t t = 0; t < report.monomials.size(); ++t) {
                Rat c = (*report.coefficients)[t];
                if (c == 0) continue;
                Series term = Series::constant(c);
                for (std::size_t j = 0; j < ws.size(); ++j)
                    if (report.monomials[t][j] > 0) term = term * ws[j].pow(report.monomials[t][j]);
                combo = combo + term;
            }
            r.check(combo.is_structurally_zero(), "reported relation does not re-multiply to 0");
        }
    }
    return r;
}

SuiteResult relation_schanuel_consistency(int n, std::uint64_t seed) {
    SuiteResult r("relation-vs-certificate-consistency");
    Rng rng(seed);
    std::uniform_int_distribution<int> size(1, 3);
    ExponentOptions opt;
    for (int i = 0; i < n; ++i) {
        int k = size(rng);
        std::vector<Series> ys;
        TermMap seen;
        while (static_cast<int>(ys.size()) < k) {
            Exponent g = random_exponent(rng, opt);
            if (g.is_zero() || seen.count(g)) continue;
            seen.emplace(g, 0);
            ys.push_back(Series::monomial(g, random_nonzero_rational(rng)) +
                         Series::constant(random_rational(rng)));
        }
        Certificate cert = certify_independence(ys);
        r.check(cert.outcome == Certificate::Outcome::certified,
                "distinct monomial family not certified");

        RelationReport report = find_relation(cert.shifted_inputs, 1);
        r.check(report.outcome == RelationReport::Outcome::none_found,
                "degree-1 relation reported for a certified family");
    }
    return r;
}

SuiteResult expansion_parallel_agreement(int n, std::uint64_t seed) {
    SuiteResult r("monomial-expansion-parallel-vs-serial");
    Rng rng(seed);
    SeriesOptions opt;
    opt.max_terms = 2;
    for (int i = 0; i < n; ++i) {
        std::vector<Series> ws;
        for (int j = 0; j < 3; ++j) ws.push_back(random_series(rng, opt));
        auto tuples = enumerate_monomials(ws.size(), 3);
        auto par = expand_monomials(ws, tuples, true);
        auto ser = expand_monomials(ws, tuples, false);
        r.check(par == ser, "parallel expansion differs from serial");
    }
    return r;
}

const std::vector<std::string>& parser_corpus() {
    static const std::vector<std::string> corpus = {
        "0",
        "1",
        "-7",
        "3/2",
        "-3/2",
        "1/4 + 2/4",
        "t^{1*e(0)}",
        "t^{0}",
        "t^{-1*e(0)}",
        "t^{1*e(-3)}",
        "t^{3/2*e(1/2)}",
        "t^{2*e(0) - 1*tau(0)}",
        "t^{1*tau(2)}",
        "t^{-2*tau(-1) + 1*e(5)}",
        "t^{1*e(0) + 1*e(1) + 1*e(2)}",
        "1 + t^{1*e(0)}",
        "1 - t^{1*e(0)}",
        "-1*t^{1*e(0)} + 3/2*t^{2*e(1)}",
        "t^{-1*e(0)} + 3",
        "2*t^{-1*e(0)} - 1",
        "(1 + t^{1*e(0)}) * (1 - t^{1*e(0)})",
        "(1 + t^{1*e(0)})^3",
        "t^{1*e(0)}^2",
        "t^{1*e(0)}^-2",
        "(t^{-1*e(0)} + 1)^2",
        "exp(t^{1*e(0)})",
        "exp(0)",
        "exp(t^{1*tau(0)})",
        "log(1 + t^{1*e(0)})",
        "log(t^{1*e(0)})",
        "inv(1 - t^{1*e(0)})",
        "inv(2)",
        "D(t^{1*e(0)})",
        "D(1 + t^{1*e(0)})",
        "D(exp(t^{1*e(0)}))",
        "exp(log(1 + t^{1*e(0)}))",
        "1/2 * t^{1*e(0)}",
        "t^{1*e(0)} / 2",
        "t^{1*e(0)} / (1 + t^{1*e(0)})",
        "1 + 2 + 3",
        "1 - 2 - 3",
        "2 * 3 * 4",
        "-(1 + t^{1*e(0)})",
        "-t^{1*e(0)}",
        "exp(t^{1*e(0)} + t^{2*e(0)})",
        "log(1 + t^{1*e(0)} - 1/2*t^{2*e(0)})",
        "D(t^{2*e(0) + 3*e(1)})",
        "t^{1*e(0)} * t^{-1*tau(0)}",
        "(1 + t^{1*e(0)}) / (1 - t^{1*e(0)})",
        "exp(1/3*t^{1*e(2)})",
        "t^{5*e(0) - 1/2*e(1) + 2*tau(3)}",
        "inv(t^{1*e(0)})",
        "D(log(t^{1*e(0)}))",
    };
    return corpus;
}

const std::vector<std::string>& malformed_corpus() {
    static const std::vector<std::string> corpus = {
        "",
        "log(",
        "1 +",
        "t^",
        "t^{",
        "t^{1*e(0)",
        "t^{1*q(0)}",
        "t^{e(}",
        "exp 2",
        "exp()",
        "(1 + 2",
        "1 / / 2",
        "foo(1)",
        "t^{1*e(0)} ^",
        "3/0",
        "1 @ 2",
        "t{1*e(0)}",
        "e(0)",
    };
    return corpus;
}

SuiteResult parser_roundtrip() {
    SuiteResult r("parser-roundtrip-and-diagnostics");
    for (const auto& text : parser_corpus()) {
        try {
            ExprPtr first = parse_expression(text);
            std::string printed = print_expr(first);
            ExprPtr second = parse_expression(printed);
            r.check(structurally_equal(first, second),
                    "round trip changed structure: '" + text + "' -> '" + printed + "'");
        } catch (const parse_error& e) {
            r.check(false, "corpus expression rejected: '" + text + "': " + e.what());
        }
    }
    for (const auto& text : malformed_corpus()) {
        try {
            parse_expression(text);
            r.check(false, "malformed input accepted: '" + text + "'");
        } catch (const parse_error& e) {
            r.check(e.line >= 1 && e.column >= 1 && !std::string(e.what()).empty(),
                    "diagnostic lacks a position for '" + text + "'");
        }
    }
    return r;
}

int run_selftest(std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<SuiteResult> results;

    results.push_back(exponent_order(300, 11));
    results.push_back(sign_oracle_agreement(300, 6, 12));
    results.push_back(tail_identity(100, 13));
    results.push_back(field_laws(150, 14));
    results.push_back(decomposition_split(150, 15));
    for (const auto& spec : standard_specs()) {
        results.push_back(leibniz(spec, 200, 16));
        results.push_back(exp_compatibility(spec, 50, 6, 17));
    }
    results.push_back(exp_homomorphism(60, 6, 18));
    results.push_back(log_exp_roundtrips(60, 6, 19));
    for (int offset : {1, 2, 3})
        results.push_back(el_log_derivative(ShiftMap{offset}, 50, 20 + offset));
    results.push_back(constant_combination_families(200, 24));
    results.push_back(certificate_scaling_invariance(100, 25));
    results.push_back(guarantee_stability(50, 6, 10, 26));
    results.push_back(rank_oracle_agreement(100, 8, 27));
    results.push_back(planted_relations(20, 3, 28));
    results.push_back(relation_schanuel_consistency(50, 29));
    results.push_back(expansion_parallel_agreement(20, 30));
    results.push_back(parser_roundtrip());

    int failed_suites = 0;
    int total_checks = 0, total_failures = 0;
    for (const auto& r : results) {
        total_checks += r.total;
        total_failures += r.failures;
        if (!r.passed()) ++failed_suites;
        out << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << ": "
            << (r.total - r.failures) << "/" << r.total << " checks\n";
        for (const auto& note : r.notes) out << "      " << note << "\n";
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    out << "selftest: " << results.size() << " suites, " << total_checks << " checks, "
        << total_failures << " failures, " << elapsed << " ms\n";
    return failed_suites;
}

} // namespace suites

} // namespace hahn
