#include "klrtab/laurent.hpp"

#include <stdexcept>

namespace klrtab {

void LaurentInt::add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

int LaurentInt::min_exp() const {
    if (c_.empty()) throw std::domain_error("LaurentInt: min_exp of zero");
    return c_.begin()->first;
}

int LaurentInt::max_exp() const {
    if (c_.empty()) throw std::domain_error("LaurentInt: max_exp of zero");
    return c_.rbegin()->first;
}

bool LaurentInt::nonneg_coeffs() const {
    for (const auto& [e, c] : c_)
        if (c < 0) return false;
    return true;
}

LaurentInt LaurentInt::bar() const {
    LaurentInt r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

LaurentInt LaurentInt::substitute_power(int d) const {
    LaurentInt r;
    for (const auto& [e, c] : c_) r.add_term(e * d, c);
    return r;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

LaurentInt operator+(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r = a;
    for (const auto& [e, c] : b.c_) r.add_term(e, c);
    return r;
}

LaurentInt operator-(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r = a;
    for (const auto& [e, c] : b.c_) r.add_term(e, -c);
    return r;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    LaurentInt r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentInt LaurentInt::divide_exact(const LaurentInt& d) const {
    if (d.is_zero()) throw std::domain_error("LaurentInt: division by zero");
    LaurentInt rem = *this, quot;
    int dlead = d.max_exp();
    long long dcoeff = d.coeff(dlead);
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        long long rc = rem.coeff(rlead);
        if (rc % dcoeff != 0) throw std::domain_error("LaurentInt: inexact division");
        LaurentInt t = monomial(rc / dcoeff, rlead - dlead);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

long long LaurentInt::eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

std::string LaurentInt::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : c_) {
        long long a = c;
        if (first) {
            if (a < 0) { s += '-'; a = -a; }
        } else {
            s += a < 0 ? '-' : '+';
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            s += std::to_string(a);
        } else {
            if (a != 1) s += std::to_string(a);
            s += "q^" + std::to_string(e);
        }
    }
    return s;
}

}  // namespace klrtab
