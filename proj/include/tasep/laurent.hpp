#pragma once

#include "tasep/bigint.hpp"

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace tasep {

// Exact bivariate Laurent polynomial in the boundary rates alpha and beta,
// printed with `a` for alpha and `b` for beta. Exponents may be negative.
// The term map is canonical: no zero coefficients are ever stored, so two
// polynomials are equal iff their term maps are identical.
//
// Values are immutable in spirit: every operation returns a fresh value and
// nothing here holds shared mutable state, so instances may be copied and
// used freely across threads.
class LaurentPolynomial {
public:
    using Exponents = std::pair<int, int>; // (a_exp, b_exp)
    using TermMap = std::map<Exponents, BigInt>;

    LaurentPolynomial() = default; // zero
    explicit LaurentPolynomial(BigInt constant) {
        set_term(0, 0, std::move(constant));
    }
    explicit LaurentPolynomial(long constant) : LaurentPolynomial(BigInt(constant)) {}

    static LaurentPolynomial monomial(int a_exp, int b_exp, BigInt coeff = BigInt(1)) {
        LaurentPolynomial p;
        p.set_term(a_exp, b_exp, std::move(coeff));
        return p;
    }
    static LaurentPolynomial alpha_pow(int e) { return monomial(e, 0); }
    static LaurentPolynomial beta_pow(int e) { return monomial(0, e); }
    static LaurentPolynomial one() { return LaurentPolynomial(1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    BigInt coefficient(int a_exp, int b_exp) const {
        auto it = terms_.find({a_exp, b_exp});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
        for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, coeff);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& rhs) {
        for (const auto& [exps, coeff] : rhs.terms_) add_term(exps, -coeff);
        return *this;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& p) {
        LaurentPolynomial negated;
        for (const auto& [exps, coeff] : p.terms_) negated.terms_.emplace(exps, -coeff);
        return negated;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        LaurentPolynomial product;
        for (const auto& [le, lc] : lhs.terms_) {
            for (const auto& [re, rc] : rhs.terms_) {
                product.add_term({le.first + re.first, le.second + re.second}, lc * rc);
            }
        }
        return product;
    }

    friend bool operator==(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    // Exact evaluation at rational (a, b). Substituting zero into a variable
    // that appears with a negative exponent is a domain error.
    BigRational eval(const BigRational& a, const BigRational& b) const {
        BigRational total = 0;
        for (const auto& [exps, coeff] : terms_) {
            BigRational term = BigRational(coeff) * rational_pow(a, exps.first, "alpha") *
                               rational_pow(b, exps.second, "beta");
            total += term;
        }
        return total;
    }

    // Canonical text form: terms in descending lexicographic order of
    // (a_exp, b_exp), e.g. "a^2*b + a*b^2" or "b^-1 + a^-1"; "0" when empty.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const BigInt& coeff = it->second;
            if (first) {
                if (coeff < 0) out << "-";
                first = false;
            } else {
                out << (coeff < 0 ? " - " : " + ");
            }
            out << term_str(it->first, abs(coeff));
        }
        return out.str();
    }

private:
    TermMap terms_;

    void set_term(int a_exp, int b_exp, BigInt coeff) {
        if (coeff != 0) terms_[{a_exp, b_exp}] = std::move(coeff);
    }

    void add_term(const Exponents& exps, const BigInt& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static BigRational rational_pow(const BigRational& base, int exp, const char* name) {
        if (exp == 0) return 1;
        if (base == 0) {
            if (exp < 0) {
                throw std::domain_error(std::string(name) +
                                        " = 0 substituted into a negative exponent");
            }
            return 0;
        }
        BigRational result = 1;
        const BigRational factor = exp > 0 ? base : BigRational(1) / base;
        for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) result *= factor;
        return result;
    }

    static std::string term_str(const Exponents& exps, const BigInt& magnitude) {
        std::string vars;
        auto append_var = [&vars](char symbol, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += symbol;
            if (e != 1) vars += "^" + std::to_string(e);
        };
        append_var('a', exps.first);
        append_var('b', exps.second);
        if (vars.empty()) return magnitude.str();
        if (magnitude == 1) return vars;
        return magnitude.str() + "*" + vars;
    }
};

inline LaurentPolynomial pow(const LaurentPolynomial& base, unsigned exp) {
    LaurentPolynomial result = LaurentPolynomial::one();
    for (unsigned i = 0; i < exp; ++i) result *= base;
    return result;
}

} // namespace tasep
