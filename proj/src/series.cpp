#include "hahn/series.hpp"

#include <algorithm>
#include <sstream>

#include "hahn/errors.hpp"

namespace hahn {

std::optional<Exponent> min_guarantee(const std::optional<Exponent>& a,
                                      const std::optional<Exponent>& b) {
    if (!a) return b;
    if (!b) return a;
    return min(*a, *b);
}

Series Series::constant(const Rat& c) { return monomial(Exponent{}, c); }

Series Series::monomial(const Exponent& g, const Rat& c) {
    Series s;
    if (c != 0) s.terms_.push_back({g, c});
    return s;
}

Series Series::from_terms(std::vector<Term> terms, std::optional<Exponent> guarantee) {
    TermMap acc;
    for (auto& t : terms) acc[t.exponent] += t.coeff;
    Series s;
    for (auto& [g, c] : acc)
        if (c != 0) s.terms_.push_back({g, c});
    s.guarantee_ = std::move(guarantee);
    return s;
}

const Exponent& Series::valuation() const {
    if (terms_.empty()) throw domain_error("valuation of the zero series is undefined");
    return terms_.front().exponent;
}

Rat Series::coefficient_at(const Exponent& g) const {
    for (const auto& t : terms_) {
        auto cmp = t.exponent.compare(g);
        if (cmp == std::strong_ordering::equal) return t.coeff;
        if (cmp == std::strong_ordering::greater) break;
    }
    return Rat(0);
}

Series Series::operator+(const Series& o) const {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            merged.push_back(terms_[i++]);
        } else if (i == terms_.size()) {
            merged.push_back(o.terms_[j++]);
        } else {
            auto cmp = terms_[i].exponent.compare(o.terms_[j].exponent);
            if (cmp == std::strong_ordering::less) {
                merged.push_back(terms_[i++]);
            } else if (cmp == std::strong_ordering::greater) {
                merged.push_back(o.terms_[j++]);
            } else {
                Rat c = terms_[i].coeff + o.terms_[j].coeff;
                if (c != 0) merged.push_back({terms_[i].exponent, std::move(c)});
                ++i;
                ++j;
            }
        }
    }
    Series s;
    s.terms_ = std::move(merged);
    s.guarantee_ = min_guarantee(guarantee_, o.guarantee_);
    return s;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const { return scaled(Rat(-1)); }

Series Series::operator*(const Series& o) const {
    TermMap acc;
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_) acc[ta.exponent + tb.exponent] += ta.coeff * tb.coeff;

    Series s;
    for (auto& [g, c] : acc)
        if (c != 0) s.terms_.push_back({g, c});

    // omega_a + v(b), omega_b + v(a), omega_a + omega_b; rules needing the
    // valuation of an empty term list are dropped.
    std::optional<Exponent> bound;
    if (guarantee_ && !o.terms_.empty())
        bound = min_guarantee(bound, *guarantee_ + o.valuation());
    if (o.guarantee_ && !terms_.empty())
        bound = min_guarantee(bound, *o.guarantee_ + valuation());
    if (guarantee_ && o.guarantee_) bound = min_guarantee(bound, *guarantee_ + *o.guarantee_);
    s.guarantee_ = bound;
    return s;
}

Series Series::scaled(const Rat& q) const {
    Series s;
    if (q == 0) return s; // exactly zero
    s.terms_ = terms_;
    for (auto& t : s.terms_) t.coeff *= q;
    s.guarantee_ = guarantee_;
    return s;
}

Series Series::pow(unsigned e) const {
    Series acc = Series::one();
    Series base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool Series::operator==(const Series& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff ||
            terms_[i].exponent != o.terms_[i].exponent)
            return false;
    if (guarantee_.has_value() != o.guarantee_.has_value()) return false;
    if (guarantee_ && *guarantee_ != *o.guarantee_) return false;
    return true;
}

Series Series::with_guarantee(const std::optional<Exponent>& omega) const {
    Series s = *this;
    s.guarantee_ = min_guarantee(guarantee_, omega);
    return s;
}

Series Series::truncated_at(const Exponent& bound) const {
    Series s;
    for (const auto& t : terms_) {
        if (!(t.exponent < bound)) break; // terms are ascending
        s.terms_.push_back(t);
    }
    s.guarantee_ = guarantee_;
    return s;
}

bool Series::agrees_below(const Series& o, const Exponent& bound) const {
    Series diff = *this - o;
    for (const auto& t : diff.terms())
        if (t.exponent < bound) return false;
    return true;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            first = false;
        } else {
            out << (c > 0 ? " + " : " - ");
            c = abs(c);
        }
        if (t.exponent.is_structurally_zero())
            out << to_string(c);
        else
            out << to_string(c) << "*t^{" << t.exponent.str() << '}';
    }
    return out.str();
}

Decomposition decompose(const Series& y) {
    Decomposition d;
    std::vector<Series::Term> neg, inf;
    for (const auto& t : y.terms()) {
        switch (t.exponent.sign()) {
            case Sign::negative: neg.push_back(t); break;
            case Sign::zero: d.constant_term = t.coeff; break;
            case Sign::positive: inf.push_back(t); break;
        }
    }
    d.negative_part = Series::from_terms(std::move(neg), y.guarantee());
    d.infinitesimal_part = Series::from_terms(std::move(inf), y.guarantee());
    return d;
}

Series drop_constant_term(const Series& y) {
    std::vector<Series::Term> kept;
    for (const auto& t : y.terms())
        if (!t.exponent.is_zero()) kept.push_back(t);
    return Series::from_terms(std::move(kept), y.guarantee());
}

Series inverse(const Series& a, unsigned depth) {
    if (a.is_structurally_zero()) throw domain_error("division by the zero series");

    const Exponent& g = a.valuation();
    const Rat& lead = a.terms().front().coeff;

    // a = lead * t^g * (1 + eps)
    std::vector<Series::Term> eps_terms;
    for (std::size_t i = 1; i < a.terms().size(); ++i)
        eps_terms.push_back({a.terms()[i].exponent - g, a.terms()[i].coeff / lead});
    std::optional<Exponent> eps_guarantee;
    if (a.guarantee()) eps_guarantee = *a.guarantee() - g;
    Series eps = Series::from_terms(std::move(eps_terms), eps_guarantee);

    Series inv_unit;
    if (eps.is_structurally_zero()) {
        inv_unit = Series::one().with_guarantee(eps.guarantee());
    } else {
        Exponent v = eps.valuation();
        if (eps.guarantee()) v = min(v, *eps.guarantee());
        Exponent truncation = v.scaled(Rat(static_cast<long>(depth) + 1));
        Series acc = Series::one();
        Series power = Series::one();
        Series neg_eps = -eps;
        for (unsigned k = 1; k <= depth; ++k) {
            power = (power * neg_eps).truncated_at(truncation);
            acc = acc + power;
        }
        inv_unit = acc.with_guarantee(truncation);
    }

    std::vector<Series::Term> out;
    for (const auto& t : inv_unit.terms()) out.push_back({t.exponent - g, t.coeff / lead});
    std::optional<Exponent> bound;
    if (inv_unit.guarantee()) bound = *inv_unit.guarantee() - g;
    return Series::from_terms(std::move(out), bound);
}

} // namespace hahn
