#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

using Int = boost::multiprecision::cpp_int;

// Dense univariate polynomial over arbitrary-precision integers.
// Invariant: the coefficient vector is empty (zero polynomial) or ends in a
// nonzero entry, so equal polynomials compare equal member-wise.
template <char Var>
class DensePoly {
  public:
    DensePoly() = default;
    DensePoly(int constant) : DensePoly(Int(constant)) {}
    DensePoly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    // Ascending coefficients: {1, -1, 1} is 1 - x + x^2.
    explicit DensePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { prune(); }

    static DensePoly monomial(Int coeff, std::size_t power) {
        DensePoly p;
        if (coeff != 0) {
            p.coeffs_.assign(power + 1, Int(0));
            p.coeffs_.back() = std::move(coeff);
        }
        return p;
    }

    static DensePoly variable() { return monomial(1, 1); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    // The zero polynomial has degree -1.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<Int>& coeffs() const { return coeffs_; }
    [[nodiscard]] Int coeff(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Int(0);
    }
    [[nodiscard]] Int leading_coeff() const {
        return coeffs_.empty() ? Int(0) : coeffs_.back();
    }

    // Sum of coefficients, the value at Var = 1.
    [[nodiscard]] Int eval_at_one() const {
        Int sum = 0;
        for (const Int& c : coeffs_) sum += c;
        return sum;
    }

    DensePoly& operator+=(const DensePoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        prune();
        return *this;
    }

    DensePoly& operator-=(const DensePoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        prune();
        return *this;
    }

    DensePoly& operator*=(const DensePoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
    friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }

    friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
        DensePoly out;
        if (lhs.is_zero() || rhs.is_zero()) return out;
        out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        out.prune();
        return out;
    }

    DensePoly operator-() const {
        DensePoly out = *this;
        for (Int& c : out.coeffs_) c = -c;
        return out;
    }

    bool operator==(const DensePoly&) const = default;

    // Human-readable form in ascending powers: "1 - q + q^2", "-2q", "0".
    [[nodiscard]] std::string str() const { return render("^", "", ""); }
    // Same layout with braced exponents: "1 - q + q^{2}".
    [[nodiscard]] std::string latex() const { return render("^{", "}", ""); }

  private:
    void prune() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::string render(const char* exp_open, const char* exp_close, const char*) const {
        if (coeffs_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            const bool neg = coeffs_[i] < 0;
            Int mag = neg ? Int(-coeffs_[i]) : coeffs_[i];
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0 || mag != 1) out += mag.str();
            if (i >= 1) {
                out += Var;
                if (i >= 2) out += exp_open + std::to_string(i) + exp_close;
            }
        }
        return out;
    }

    std::vector<Int> coeffs_;
};

using QPoly = DensePoly<'q'>;
using SPoly = DensePoly<'s'>;

// (-q)^e as a polynomial in q; e must be nonnegative.
inline QPoly neg_q_power(int e) {
    if (e < 0) throw IndexOutOfRange("neg_q_power: negative exponent");
    return QPoly::monomial(e % 2 == 0 ? 1 : -1, static_cast<std::size_t>(e));
}

// [k]_{-q} = 1 - q + q^2 - ... + (-q)^{k-1}; [0]_{-q} = 0.
inline QPoly neg_q_integer(int k) {
    if (k < 0) throw IndexOutOfRange("neg_q_integer: negative argument");
    std::vector<Int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return QPoly(std::move(c));
}

// Nonnegative integer power by repeated squaring.
template <char Var>
DensePoly<Var> power(const DensePoly<Var>& base, int e) {
    if (e < 0) throw IndexOutOfRange("power: negative exponent");
    DensePoly<Var> acc(1);
    DensePoly<Var> sq = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= sq;
        if (e > 1) sq *= sq;
    }
    return acc;
}

// Quotient a / b in Z[Var]. Throws NotDivisible unless b divides a exactly,
// coefficient divisibility included; division by zero is never exact.
template <char Var>
DensePoly<Var> exact_divide(const DensePoly<Var>& a, const DensePoly<Var>& b) {
    if (b.is_zero()) throw NotDivisible("exact_divide: division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible();
    std::vector<Int> rem = a.coeffs();
    const std::size_t qsize = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
    std::vector<Int> quot(qsize, Int(0));
    const Int& lead = b.leading_coeff();
    for (std::size_t step = qsize; step-- > 0;) {
        Int& top = rem[step + static_cast<std::size_t>(b.degree())];
        if (top == 0) continue;
        if (top % lead != 0) throw NotDivisible();
        Int factor = top / lead;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) rem[step + j] -= factor * b.coeffs()[j];
        quot[step] = std::move(factor);
    }
    for (const Int& c : rem)
        if (c != 0) throw NotDivisible();
    return DensePoly<Var>(std::move(quot));
}

// q^i -> s^{2i}.
inline SPoly lift_to_s(const QPoly& p) {
    std::vector<Int> c(p.coeffs().size() == 0 ? 0 : 2 * p.coeffs().size() - 1, Int(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[2 * i] = p.coeffs()[i];
    return SPoly(std::move(c));
}

// s^{2i} -> q^i; throws OddPowerPresent when an odd power of s survives.
inline QPoly lower_from_s(const SPoly& p) {
    std::vector<Int> c((p.coeffs().size() + 1) / 2, Int(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i % 2 == 1 && p.coeffs()[i] != 0)
            throw OddPowerPresent("lower_from_s: s^" + std::to_string(i) + " survives");
        if (i % 2 == 0) c[i / 2] = p.coeffs()[i];
    }
    return QPoly(std::move(c));
}

}  // namespace hecke
