#include "hahn/derivation.hpp"

#include <algorithm>
#include <sstream>

#include "hahn/errors.hpp"

namespace hahn {

Embedding Embedding::affine(const Rat& scale, const Rat& shift) {
    if (scale <= 0) throw config_error("affine embedding must be order preserving: scale > 0");
    Embedding e;
    e.scale_ = scale;
    e.shift_ = shift;
    return e;
}

Embedding Embedding::table(std::vector<std::pair<Rat, Rat>> entries) {
    if (entries.empty()) throw config_error("embedding table must be nonempty");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1].first == entries[i].first)
            throw config_error("embedding table has a duplicate index point " +
                               to_string(entries[i].first));
        if (entries[i - 1].second >= entries[i].second)
            throw config_error("embedding table is not order preserving at index " +
                               to_string(entries[i].first));
    }
    Embedding e;
    e.table_ = std::move(entries);
    return e;
}

Rat Embedding::operator()(const Rat& phi) const {
    if (table_.empty()) return scale_ * phi + shift_;
    for (const auto& [k, v] : table_)
        if (k == phi) return v;
    throw config_error("index point " + to_string(phi) + " outside the embedding table");
}

std::string Embedding::str() const {
    if (table_.empty())
        return "affine(" + to_string(scale_) + "," + to_string(shift_) + ")";
    std::ostringstream out;
    out << "table(";
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i) out << ',';
        out << to_string(table_[i].first) << ':' << to_string(table_[i].second);
    }
    out << ')';
    return out.str();
}

CofinalSequence CofinalSequence::powers_of_two() { return {}; }

CofinalSequence CofinalSequence::naturals() {
    CofinalSequence s;
    s.kind_ = Kind::naturals;
    return s;
}

CofinalSequence CofinalSequence::list(std::vector<long> values) {
    if (values.empty()) throw config_error("cofinal sequence list must be nonempty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] >= values[i])
            throw config_error("cofinal sequence must be strictly increasing");
    CofinalSequence s;
    s.kind_ = Kind::list;
    s.values_ = std::move(values);
    return s;
}

Rat CofinalSequence::point(std::size_t n) const {
    switch (kind_) {
        case Kind::powers_of_two: {
            Int p = 1;
            p <<= n;
            return Rat(p);
        }
        case Kind::naturals: return Rat(static_cast<long>(n));
        case Kind::list:
            if (n >= values_.size())
                throw config_error("cofinal sequence list exhausted at position " +
                                   std::to_string(n));
            return Rat(values_[n]);
    }
    throw config_error("unreachable cofinal sequence kind");
}

std::size_t CofinalSequence::interval_of(const Rat& phi) const {
    if (phi < point(0))
        throw config_error("index point " + to_string(phi) +
                           " precedes the cofinal partition start " + to_string(point(0)));
    std::size_t n = 0;
    while (phi >= point(n + 1)) ++n;
    return n;
}

std::string CofinalSequence::str() const {
    switch (kind_) {
        case Kind::powers_of_two: return "powers2";
        case Kind::naturals: return "nat";
        case Kind::list: {
            std::ostringstream out;
            out << "list(";
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i) out << ',';
                out << values_[i];
            }
            out << ')';
            return out.str();
        }
    }
    return {};
}

std::optional<ShiftMap> DerivationSpec::shift() const {
    if (const auto* c1 = std::get_if<Case1Spec>(&v_)) return c1->sigma;
    if (const auto* el = std::get_if<ElSpec>(&v_)) return el->sigma;
    return std::nullopt;
}

std::string DerivationSpec::str() const {
    struct Printer {
        std::string operator()(const Case1Spec& s) const {
            return "case1:shift=" + std::to_string(s.sigma.offset);
        }
        std::string operator()(const Case2MaxSpec& s) const {
            return "case2max:f=" + s.f.str() + ",phiM=" + to_string(s.phi_max);
        }
        std::string operator()(const Case2CofinalSpec& s) const {
            return "case2cof:f=" + s.f.str() + ",seq=" + s.seq.str();
        }
        std::string operator()(const ElSpec& s) const {
            return "el:shift=" + std::to_string(s.sigma.offset);
        }
    };
    return std::visit(Printer{}, v_);
}

namespace {

void require_integer_index(const Rat& phi, const char* mode) {
    if (!is_integer(phi))
        throw config_error(std::string(mode) +
                           " derivation requires integer index points, got " + to_string(phi));
}

/// Logarithmic-derivative exponent h(phi) for one atom index.
Exponent h_exponent(const DerivationSpec& spec, const Rat& phi) {
    struct Visitor {
        const Rat& phi;
        Exponent operator()(const Case1Spec& s) const {
            require_integer_index(phi, "case1");
            return Exponent::atom(s.sigma.apply(phi), Rat(-1));
        }
        Exponent operator()(const Case2MaxSpec& s) const {
            if (phi > s.phi_max)
                throw config_error("index point " + to_string(phi) +
                                   " exceeds the greatest element phiM = " + to_string(s.phi_max));
            return Exponent::atom(s.phi_max, s.f(phi));
        }
        Exponent operator()(const Case2CofinalSpec& s) const {
            Rat value = s.f(phi);
            if (value <= 0)
                throw config_error("cofinal-mode embedding must be positive; f(" +
                                   to_string(phi) + ") = " + to_string(value));
            std::size_t n = s.seq.interval_of(phi);
            return Exponent::atom(s.seq.point(n + 1), value);
        }
        Exponent operator()(const ElSpec& s) const {
            require_integer_index(phi, "el");
            return -Exponent::tail(phi, s.sigma);
        }
    };
    return std::visit(Visitor{phi}, spec.value());
}

} // namespace

Series monomial_derivative(const DerivationSpec& spec, const Exponent& g) {
    if (g.has_tails())
        throw domain_error("derivative of t^{" + g.str() +
                           "}: tail components give a derivative with infinite support");
    std::vector<Series::Term> terms;
    for (const auto& [phi, c] : g.atoms())
        terms.push_back({g + h_exponent(spec, phi), c});
    return Series::from_terms(std::move(terms));
}

Series derive(const DerivationSpec& spec, const Series& a) {
    Series out = Series::zero();
    std::optional<Exponent> least_shift;
    for (const auto& t : a.terms()) {
        out = out + monomial_derivative(spec, t.exponent).scaled(t.coeff);
        for (const auto& [phi, c] : t.exponent.atoms()) {
            Exponent h = h_exponent(spec, phi);
            if (!least_shift || h < *least_shift) least_shift = h;
        }
    }
    if (a.guarantee()) {
        Exponent bound = *a.guarantee();
        if (least_shift) bound = bound + *least_shift;
        return out.with_guarantee(bound);
    }
    return out;
}

// --- CLI syntax ---

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

Rat parse_rat_or_throw(const std::string& text, const std::string& what) {
    auto r = parse_rational(text);
    if (!r) throw config_error("derivation spec: bad " + what + " '" + text + "'");
    return *r;
}

Embedding parse_embedding(const std::string& text) {
    if (text.starts_with("affine(") && text.ends_with(")")) {
        auto parts = split(text.substr(7, text.size() - 8), ',');
        if (parts.size() != 2) throw config_error("derivation spec: affine expects two arguments");
        return Embedding::affine(parse_rat_or_throw(parts[0], "affine scale"),
                                 parse_rat_or_throw(parts[1], "affine shift"));
    }
    if (text.starts_with("table(") && text.ends_with(")")) {
        std::vector<std::pair<Rat, Rat>> entries;
        for (const auto& item : split(text.substr(6, text.size() - 7), ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos)
                throw config_error("derivation spec: table entry '" + item + "' needs index:value");
            entries.emplace_back(parse_rat_or_throw(item.substr(0, colon), "table index"),
                                 parse_rat_or_throw(item.substr(colon + 1), "table value"));
        }
        return Embedding::table(std::move(entries));
    }
    throw config_error("derivation spec: unknown embedding '" + text + "'");
}

CofinalSequence parse_sequence(const std::string& text) {
    if (text == "powers2") return CofinalSequence::powers_of_two();
    if (text == "nat") return CofinalSequence::naturals();
    if (text.starts_with("list(") && text.ends_with(")")) {
        std::vector<long> values;
        for (const auto& item : split(text.substr(5, text.size() - 6), ',')) {
            Rat v = parse_rat_or_throw(item, "sequence entry");
            if (!is_integer(v)) throw config_error("cofinal sequence entries must be integers");
            values.push_back(static_cast<long>(numerator(v)));
        }
        return CofinalSequence::list(std::move(values));
    }
    throw config_error("derivation spec: unknown sequence '" + text + "'");
}

int parse_shift(const std::string& text) {
    Rat v = parse_rat_or_throw(text, "shift");
    if (!is_integer(v) || v < 1) throw config_error("shift offset must be an integer >= 1");
    return static_cast<int>(numerator(v));
}

} // namespace

DerivationSpec DerivationSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw config_error("derivation spec '" + text + "': expected mode:key=value,...");
    std::string mode = text.substr(0, colon);

    std::map<std::string, std::string> kv;
    for (const auto& item : split(text.substr(colon + 1), ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw config_error("derivation spec: expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw config_error("derivation spec: mode '" + mode + "' needs " + key + "=...");
        return it->second;
    };

    if (mode == "case1") return case1(ShiftMap{parse_shift(need("shift"))});
    if (mode == "el") return el(ShiftMap{parse_shift(need("shift"))});
    if (mode == "case2max")
        return case2_max(parse_embedding(need("f")), parse_rat_or_throw(need("phiM"), "phiM"));
    if (mode == "case2cof")
        return case2_cofinal(parse_embedding(need("f")), parse_sequence(need("seq")));
    throw config_error("derivation spec: unknown mode '" + mode + "'");
}

} // namespace hahn
