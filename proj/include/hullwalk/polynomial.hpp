#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hullwalk/numbers.hpp"

namespace hullwalk {

/// Dense polynomial in one indeterminate with exact big-integer coefficients.
/// coeffs()[j] is the coefficient of t^j. The zero polynomial has an empty
/// coefficient vector and degree -1; otherwise the leading coefficient is
/// nonzero.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        normalize();
    }

    static IntPolynomial constant(BigInt c) {
        IntPolynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }
    static IntPolynomial one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of t^j; 0 outside the stored range (also for negative j).
    BigInt coeff(long j) const {
        if (j < 0 || j >= static_cast<long>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(j)];
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& o) const = default;

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(out));
    }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    BigInt eval(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    BigRational eval(const BigRational& t) const {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + BigRational(*it);
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int j = degree(); j >= 0; --j) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            BigInt a = abs(c);
            if (a != 1 || j == 0) s += a.str();
            if (j > 0) s += j == 1 ? "t" : "t^" + std::to_string(j);
        }
        return s;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
inline BigRational poly_eval(const IntPolynomial& a, const BigRational& t) { return a.eval(t); }

}  // namespace hullwalk
