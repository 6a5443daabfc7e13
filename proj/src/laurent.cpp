#include "potts/laurent.hpp"

#include "potts/errors.hpp"

#include <charconv>
#include <sstream>

namespace potts {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

int parse_exponent(std::string_view s) {
    s = trim(s);
    if (!is_integer_literal(s)) throw InvalidParameter("malformed exponent '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidParameter("exponent out of range '" + std::string(s) + "'");
    }
    return value;
}

// Splits `<rational>*q^<int>` (or a bare rational) into coefficient and exponent.
std::pair<Rational, int> parse_monomial(std::string_view text) {
    text = trim(text);
    const auto star = text.find('*');
    if (star == std::string_view::npos) return {parse_rational(text), 0};
    const auto tail = trim(text.substr(star + 1));
    if (tail.size() < 3 || tail.substr(0, 2) != "q^") {
        throw InvalidParameter("expected '*q^<int>' in '" + std::string(text) + "'");
    }
    return {parse_rational(text.substr(0, star)), parse_exponent(tail.substr(2))};
}

} // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidParameter("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
        throw InvalidParameter("malformed rational '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
    };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(strip_plus(den), 10);
        if (d == 0) throw InvalidParameter("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(long constant) { add_term(0, Rational(constant)); }

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::q(int exponent) { return monomial(Rational(1), exponent); }

LaurentPoly LaurentPoly::from_terms(std::initializer_list<std::pair<int, Rational>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (inserted) return;
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    Rational product;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            product = ca * cb;
            out.add_term(ea + eb, product);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs) {
    if (sgn(rhs) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly result(1L);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    if (sgn(x) == 0) {
        if (min_exponent() < 0) throw DegenerateWeight("evaluating a negative power of q at 0");
        return coefficient(0);
    }
    // Horner from the top exponent down, then rescale by x^min.
    Rational acc(0);
    int current = max_exponent();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        while (current > it->first) {
            acc *= x;
            --current;
        }
        acc += it->second;
    }
    const int low = current;
    Rational scale(1);
    const Rational base = low < 0 ? Rational(1 / x) : x;
    for (int i = 0; i < (low < 0 ? -low : low); ++i) scale *= base;
    return Rational(acc * scale);
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << it->second.get_str();
        if (it->first != 0) out << "*q^" << it->first;
    }
    return out.str();
}

LaurentPoly parse_laurent(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InvalidParameter("empty polynomial");
    if (text == "0") return {};
    LaurentPoly p;
    constexpr std::string_view sep = " + ";
    while (true) {
        const auto pos = text.find(sep);
        const auto [c, e] = parse_monomial(text.substr(0, pos));
        p.add_term(e, c);
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + sep.size());
    }
    return p;
}

QMonomialWeight QMonomialWeight::inverse() const {
    if (is_zero()) throw DegenerateWeight("cannot invert a zero weight");
    return {Rational(1 / coeff), -qpower};
}

QMonomialWeight parse_weight(std::string_view text) {
    auto [c, e] = parse_monomial(text);
    return {std::move(c), e};
}

std::string to_string(const QMonomialWeight& w) {
    if (w.qpower == 0) return w.coeff.get_str();
    return w.coeff.get_str() + "*q^" + std::to_string(w.qpower);
}

LaurentPoly weight_product(std::span<const QMonomialWeight> weights) {
    Rational coeff(1);
    int exponent = 0;
    for (const auto& w : weights) {
        coeff *= w.coeff;
        exponent += w.qpower;
    }
    return LaurentPoly::monomial(coeff, exponent);
}

LaurentPoly weight_combine(const QMonomialWeight& v, const QMonomialWeight& u, CombineMode mode) {
    switch (mode) {
    case CombineMode::difference:
        return v.as_poly() - u.as_poly();
    case CombineMode::ratio_minus_one:
        if (v.is_zero()) throw DegenerateWeight("u/v requires a nonzero v");
        return (u * v.inverse()).as_poly() - LaurentPoly(1L);
    }
    return {};
}

} // namespace potts
