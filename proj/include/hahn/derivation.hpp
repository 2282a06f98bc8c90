#ifndef HAHN_DERIVATION_HPP
#define HAHN_DERIVATION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hahn/exponent.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Order-preserving embedding of index points into the rationals, either
/// affine (q*phi + r with q > 0) or a finite strictly increasing table.
class Embedding {
public:
    static Embedding affine(const Rat& scale, const Rat& shift);
    static Embedding table(std::vector<std::pair<Rat, Rat>> entries);

    /// Throws config_error for points outside a table.
    Rat operator()(const Rat& phi) const;

    std::string str() const;

private:
    // affine when table_ is empty
    Rat scale_{1};
    Rat shift_{0};
    std::vector<std::pair<Rat, Rat>> table_;
};

/// Strictly increasing integer sequence phi_0 < phi_1 < ..., cofinal in the
/// index set; generated lazily from a named rule or an explicit list.
class CofinalSequence {
public:
    enum class Kind { powers_of_two, naturals, list };

    static CofinalSequence powers_of_two();
    static CofinalSequence naturals();
    static CofinalSequence list(std::vector<long> values);

    /// Index n with phi in [phi_n, phi_{n+1}); throws config_error when phi
    /// precedes phi_0 or (for finite lists) exceeds the last interval.
    std::size_t interval_of(const Rat& phi) const;
    Rat point(std::size_t n) const;

    std::string str() const;

private:
    Kind kind_ = Kind::powers_of_two;
    std::vector<long> values_;
};

struct Case1Spec {
    ShiftMap sigma;
};
struct Case2MaxSpec {
    Embedding f;
    Rat phi_max;
};
struct Case2CofinalSpec {
    Embedding f;
    CofinalSequence seq;
};
struct ElSpec {
    ShiftMap sigma;
};

/// One of the shift, embedding-with-maximum, embedding-with-cofinal-sequence,
/// and exponential-logarithmic derivation constructions.
class DerivationSpec {
public:
    using Variant = std::variant<Case1Spec, Case2MaxSpec, Case2CofinalSpec, ElSpec>;

    DerivationSpec(Variant v) : v_(std::move(v)) {}

    static DerivationSpec case1(ShiftMap sigma) { return DerivationSpec(Case1Spec{sigma}); }
    static DerivationSpec case2_max(Embedding f, Rat phi_max) {
        return DerivationSpec(Case2MaxSpec{std::move(f), std::move(phi_max)});
    }
    static DerivationSpec case2_cofinal(Embedding f, CofinalSequence seq) {
        return DerivationSpec(Case2CofinalSpec{std::move(f), std::move(seq)});
    }
    static DerivationSpec el(ShiftMap sigma) { return DerivationSpec(ElSpec{sigma}); }

    /// Parses the CLI syntax: "case1:shift=1", "case2max:f=affine(1,0),phiM=10",
    /// "case2cof:f=affine(1,1),seq=powers2", "el:shift=1". Tables are written
    /// f=table(0:1,2:5,...), explicit sequences seq=list(1,2,5).
    static DerivationSpec parse(const std::string& text);

    const Variant& value() const { return v_; }
    /// The shift map, when this mode is built on one.
    std::optional<ShiftMap> shift() const;

    std::string str() const;

private:
    Variant v_;
};

/// Derivative of the monomial t^g by the strong Leibniz rule:
/// sum_phi g_phi t^{g + h(phi)} with the mode's logarithmic-derivative
/// exponent h. Exact. g must be atom-only: a tail component would produce a
/// derivative with infinite support in every mode.
Series monomial_derivative(const DerivationSpec& spec, const Exponent& g);

/// Termwise extension of monomial_derivative (strong linearity). Exact
/// inputs give exact outputs; a jet bound is shifted conservatively by the
/// least h over index points of the stored terms.
Series derive(const DerivationSpec& spec, const Series& a);

} // namespace hahn

#endif
