#include "hahn/exponent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hahn/errors.hpp"

namespace hahn {

namespace {

Int floor_rat(const Rat& x) {
    Int n = Int(numerator(x)), d = Int(denominator(x)); // d > 0
    Int q = n / d;                                      // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

/// Is (theta - psi) a positive integral multiple of offset?
bool on_progression(const Rat& theta, const Rat& psi, int offset) {
    Rat steps = (theta - psi) / offset;
    return is_integer(steps) && steps >= 1;
}

std::vector<Exponent::Entry> merge_entries(const std::vector<Exponent::Entry>& a,
                                           const std::vector<Exponent::Entry>& b,
                                           bool negate_b) {
    std::vector<Exponent::Entry> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat c = negate_b ? Rat(-b[j].second) : b[j].second;
            out.emplace_back(b[j].first, std::move(c));
            ++j;
        } else {
            Rat c = negate_b ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
            if (c != 0) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<int> merge_shift(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b && *a != *b)
        throw config_error("exponent mode mismatch: shift offsets " + std::to_string(*a) +
                           " and " + std::to_string(*b));
    return a ? a : b;
}

} // namespace

Exponent Exponent::atom(const Rat& index, const Rat& coeff) {
    Exponent e;
    if (coeff != 0) e.atoms_.emplace_back(index, coeff);
    return e;
}

Exponent Exponent::tail(const Rat& index, const ShiftMap& sigma, const Rat& coeff) {
    if (!is_integer(index))
        throw config_error("tail index must be an integer, got " + to_string(index));
    if (sigma.offset < 1) throw config_error("shift offset must be >= 1");
    Exponent e;
    if (coeff != 0) {
        e.tails_.emplace_back(index, coeff);
        e.shift_ = sigma.offset;
    }
    return e;
}

Exponent Exponent::make(std::vector<Entry> atoms, std::vector<Entry> tails,
                        std::optional<int> shift) {
    auto compact = [](std::vector<Entry>& v) {
        std::sort(v.begin(), v.end(),
                  [](const Entry& x, const Entry& y) { return x.first < y.first; });
        std::vector<Entry> out;
        for (auto& e : v) {
            if (!out.empty() && out.back().first == e.first)
                out.back().second += e.second;
            else
                out.push_back(std::move(e));
        }
        std::erase_if(out, [](const Entry& e) { return e.second == 0; });
        v = std::move(out);
    };
    compact(atoms);
    compact(tails);

    Exponent e;
    e.atoms_ = std::move(atoms);
    e.tails_ = std::move(tails);
    if (!e.tails_.empty()) {
        if (!shift) throw config_error("tail-bearing exponent requires a shift offset");
        if (*shift < 1) throw config_error("shift offset must be >= 1");
        for (const auto& [idx, c] : e.tails_)
            if (!is_integer(idx))
                throw config_error("tail index must be an integer, got " + to_string(idx));
        e.shift_ = shift;
    }
    return e;
}

Exponent Exponent::operator+(const Exponent& o) const {
    std::optional<int> shift = merge_shift(shift_, o.shift_);
    Exponent r;
    r.atoms_ = merge_entries(atoms_, o.atoms_, false);
    r.tails_ = merge_entries(tails_, o.tails_, false);
    if (!r.tails_.empty()) r.shift_ = shift;
    return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
    std::optional<int> shift = merge_shift(shift_, o.shift_);
    Exponent r;
    r.atoms_ = merge_entries(atoms_, o.atoms_, true);
    r.tails_ = merge_entries(tails_, o.tails_, true);
    if (!r.tails_.empty()) r.shift_ = shift;
    return r;
}

Exponent Exponent::operator-() const { return scaled(Rat(-1)); }

Exponent Exponent::scaled(const Rat& q) const {
    Exponent r;
    if (q == 0) return r;
    r.atoms_ = atoms_;
    r.tails_ = tails_;
    for (auto& [i, c] : r.atoms_) c *= q;
    for (auto& [i, c] : r.tails_) c *= q;
    r.shift_ = shift_;
    return r;
}

Sign Exponent::sign() const {
    if (tails_.empty()) {
        // Lexicographic: the least-index coefficient decides.
        if (atoms_.empty()) return Sign::zero;
        return atoms_.front().second > 0 ? Sign::positive : Sign::negative;
    }
    const int offset = *shift_;

    // The induced coefficient function is c(theta) = atom(theta) + T(theta),
    // where T accumulates every tail whose progression has reached theta.
    // Beyond theta_max every progression of a residue class has started, so
    // c is the full class mass there; at or below theta_max the support is
    // contained in the finite candidate set below.
    Rat theta_max;
    bool have_max = false;
    auto bump = [&](const Rat& v) {
        if (!have_max || v > theta_max) {
            theta_max = v;
            have_max = true;
        }
    };
    for (const auto& [idx, c] : atoms_) bump(idx);
    for (const auto& [idx, c] : tails_) bump(idx + offset);

    std::map<Rat, Rat> candidates;
    for (const auto& [idx, c] : atoms_) candidates.emplace(idx, 0);
    for (const auto& [psi, c] : tails_)
        for (Rat p = psi + offset; p <= theta_max; p += offset) candidates.emplace(p, 0);

    for (const auto& [idx, c] : atoms_) candidates[idx] += c;
    for (auto& [theta, acc] : candidates)
        for (const auto& [psi, q] : tails_)
            if (on_progression(theta, psi, offset)) acc += q;

    for (const auto& [theta, c] : candidates) {
        if (c != 0) return c > 0 ? Sign::positive : Sign::negative;
    }

    // All spikes cancel; the first nonzero class mass past theta_max decides.
    std::map<Int, Rat> class_mass; // residue mod offset -> total tail mass
    for (const auto& [psi, q] : tails_) {
        Int r = ((Int(numerator(psi)) % offset) + offset) % offset;
        class_mass[r] += q;
    }
    bool found = false;
    Int best_point = 0;
    Rat best_mass;
    Int base = floor_rat(theta_max) + 1; // least integer > theta_max, up to residue shift
    for (const auto& [r, m] : class_mass) {
        if (m == 0) continue;
        Int x = base + (((r - base) % offset + offset) % offset);
        if (!found || x < best_point) {
            found = true;
            best_point = x;
            best_mass = m;
        }
    }
    if (!found) return Sign::zero;
    return best_mass > 0 ? Sign::positive : Sign::negative;
}

bool Exponent::is_zero() const { return sign() == Sign::zero; }

std::strong_ordering Exponent::compare(const Exponent& o) const {
    // Cheap path: identical structure.
    if (atoms_ == o.atoms_ && tails_ == o.tails_) {
        merge_shift(shift_, o.shift_);
        return std::strong_ordering::equal;
    }
    switch ((*this - o).sign()) {
        case Sign::negative: return std::strong_ordering::less;
        case Sign::positive: return std::strong_ordering::greater;
        default: return std::strong_ordering::equal;
    }
}

std::string Exponent::str() const {
    if (atoms_.empty() && tails_.empty()) return "0";
    struct Part {
        const Rat* index;
        const Rat* coeff;
        bool is_tail;
    };
    std::vector<Part> parts;
    std::size_t i = 0, j = 0;
    while (i < atoms_.size() || j < tails_.size()) {
        bool take_atom = j == tails_.size() ||
                         (i < atoms_.size() && atoms_[i].first <= tails_[j].first);
        if (take_atom) {
            parts.push_back({&atoms_[i].first, &atoms_[i].second, false});
            ++i;
        } else {
            parts.push_back({&tails_[j].first, &tails_[j].second, true});
            ++j;
        }
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& p : parts) {
        Rat c = *p.coeff;
        if (first) {
            first = false;
        } else {
            out << (c > 0 ? " + " : " - ");
            c = abs(c);
        }
        out << to_string(c) << '*' << (p.is_tail ? "tau(" : "e(") << to_string(*p.index) << ')';
    }
    return out.str();
}

std::pair<Exponent, Exponent> tail_unfold(const Rat& phi, const ShiftMap& sigma) {
    if (!is_integer(phi))
        throw config_error("tail_unfold requires an integer index point, got " + to_string(phi));
    Rat next = sigma.apply(phi);
    return {Exponent::atom(next), Exponent::tail(next, sigma)};
}

void Exponent::check_invariants() const {
    if (tails_.empty() != !shift_.has_value())
        throw config_error("exponent invariant: shift present iff tails nonempty");
}

} // namespace hahn
