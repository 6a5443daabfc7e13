#pragma once

// Exact arithmetic in Q[q, q^-1].

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace potts {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws InvalidParameter when den == 0.
Rational make_rational(long num, long den = 1);

/// Parses `a` or `a/b` (optional leading minus). Throws InvalidParameter.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Laurent polynomial in the single indeterminate q with rational coefficients.
///
/// Canonical form: no zero coefficient is ever stored, so two polynomials are
/// equal iff their coefficient maps are equal.
class LaurentPoly {
public:
    using Terms = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT: implicit by design of the ring
    LaurentPoly(long constant);             // NOLINT

    static LaurentPoly monomial(const Rational& coeff, int exponent);
    /// The indeterminate raised to `exponent`.
    static LaurentPoly q(int exponent = 1);
    static LaurentPoly from_terms(std::initializer_list<std::pair<int, Rational>> terms);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Coefficient of q^exponent (zero when absent).
    Rational coefficient(int exponent) const;
    /// Highest / lowest exponent; undefined for the zero polynomial.
    int max_exponent() const;
    int min_exponent() const;

    /// Adds coeff * q^exponent in place.
    void add_term(int exponent, const Rational& coeff);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const Rational& rhs);

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    friend LaurentPoly operator*(LaurentPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend LaurentPoly operator*(const Rational& lhs, LaurentPoly rhs) { return rhs *= lhs; }
    LaurentPoly operator-() const;

    /// Multiplies by q^shift.
    LaurentPoly shifted(int shift) const;
    /// this^n for n >= 0.
    LaurentPoly pow(unsigned n) const;

    /// Evaluates at q = x. Throws DegenerateWeight for x == 0 with negative exponents.
    Rational evaluate(const Rational& x) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    Terms terms_;
};

/// Renders terms in decreasing exponent order, e.g. `1*q^3 + -3*q^2 + 2*q^1`.
/// The constant term is rendered as a bare rational and zero as `0`.
std::string to_string(const LaurentPoly& p);

/// Inverse of to_string(LaurentPoly). Throws InvalidParameter on malformed input.
LaurentPoly parse_laurent(std::string_view text);

/// Edge weight c * q^d.
struct QMonomialWeight {
    Rational coeff{0};
    int qpower = 0;

    QMonomialWeight() = default;
    QMonomialWeight(Rational c, int d = 0) : coeff(std::move(c)), qpower(d) {}  // NOLINT

    bool is_zero() const { return sgn(coeff) == 0; }
    LaurentPoly as_poly() const { return LaurentPoly::monomial(coeff, qpower); }

    /// 1 / w. Throws DegenerateWeight on a zero coefficient.
    QMonomialWeight inverse() const;

    friend QMonomialWeight operator*(const QMonomialWeight& a, const QMonomialWeight& b) {
        return {a.coeff * b.coeff, a.qpower + b.qpower};
    }
    friend bool operator==(const QMonomialWeight& a, const QMonomialWeight& b) {
        return a.coeff == b.coeff && a.qpower == b.qpower;
    }
};

/// Parses `<rational>` or `<rational>*q^<int>`.
QMonomialWeight parse_weight(std::string_view text);
std::string to_string(const QMonomialWeight& w);

/// Product of the weights as a one-term polynomial; the empty product is 1.
LaurentPoly weight_product(std::span<const QMonomialWeight> weights);

enum class CombineMode {
    difference,       // v - u
    ratio_minus_one,  // u / v - 1
};

/// Per-edge coefficient of the deletion (ratio) and contraction (difference)
/// expansions. Ratio mode throws DegenerateWeight when v has a zero coefficient.
LaurentPoly weight_combine(const QMonomialWeight& v, const QMonomialWeight& u, CombineMode mode);

} // namespace potts
