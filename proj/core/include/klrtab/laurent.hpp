#pragma once

#include <map>
#include <string>

namespace klrtab {

/// Integer Laurent polynomial in q.  Zero coefficients are never
/// stored, so equality is structural.
class LaurentInt {
public:
    LaurentInt() = default;
    LaurentInt(long long constant) {
        if (constant != 0) c_[0] = constant;
    }
    static LaurentInt monomial(long long coeff, int exp) {
        LaurentInt p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long long coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }
    const std::map<int, long long>& terms() const { return c_; }
    int min_exp() const;
    int max_exp() const;

    bool nonneg_coeffs() const;

    /// q -> q^{-1}.
    LaurentInt bar() const;
    /// q -> q^d (substitute a power of q for the variable).
    LaurentInt substitute_power(int d) const;

    LaurentInt operator-() const;
    friend LaurentInt operator+(const LaurentInt& a, const LaurentInt& b);
    friend LaurentInt operator-(const LaurentInt& a, const LaurentInt& b);
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
    LaurentInt& operator+=(const LaurentInt& o) { return *this = *this + o; }
    LaurentInt& operator-=(const LaurentInt& o) { return *this = *this - o; }
    LaurentInt& operator*=(const LaurentInt& o) { return *this = *this * o; }

    /// Exact division; throws std::domain_error if the quotient is not
    /// a Laurent polynomial over the integers.
    LaurentInt divide_exact(const LaurentInt& d) const;

    long long eval_at_one() const;

    friend bool operator==(const LaurentInt&, const LaurentInt&) = default;

    /// Ascending exponents with explicit q^k tokens, e.g. "q^-1+2q^3".
    std::string to_string() const;

private:
    void add_term(int exp, long long coeff);
    std::map<int, long long> c_;
};

}  // namespace klrtab
