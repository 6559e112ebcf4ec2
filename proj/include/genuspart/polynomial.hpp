#pragma once

#include "genuspart/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genuspart {

// Sparse multivariate polynomials over Rat in the variables eps, y and
// kappa_1, kappa_2, ...  Variable ids: 0 = eps, 1 = y, l+1 = kappa_l.
namespace var {
inline constexpr int eps = 0;
inline constexpr int y = 1;
inline constexpr int kappa(int l) { return l + 1; }
}  // namespace var

struct Monomial {
    // (variable id, exponent) pairs, sorted by id, exponents > 0
    std::vector<std::pair<int, int>> powers;

    static Monomial one() { return {}; }
    static Monomial var(int id, int exp = 1) { return {{{id, exp}}}; }
    bool is_one() const { return powers.empty(); }
    Monomial times(const Monomial& o) const;
    int total_degree() const;
    std::string str() const;  // "k1^2*k3*eps"

    bool operator==(const Monomial&) const = default;
    auto operator<=>(const Monomial&) const = default;
};

class Poly {
  public:
    Poly() = default;
    Poly(int v) : Poly(Rat(v)) {}
    Poly(const Rat& c) {
        if (c != 0) terms_.emplace_back(Monomial::one(), c);
    }
    static Poly variable(int id) { return Poly(Monomial::var(id), Rat(1)); }
    static Poly kappa(int l) { return variable(var::kappa(l)); }
    static Poly eps() { return variable(var::eps); }
    static Poly y() { return variable(var::y); }
    Poly(Monomial m, Rat c) {
        if (c != 0) terms_.emplace_back(std::move(m), std::move(c));
    }

    // terms sorted by monomial, all coefficients nonzero
    const std::vector<std::pair<Monomial, Rat>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }
    Rat constant_value() const;  // throws if not constant
    Rat coeff_of(const Monomial& m) const;
    bool uses_var(int id) const;
    // true when no variable other than y occurs (fractional powers stay exact)
    bool numeric_in_y() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rat& c);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }

    Poly substituted(int id, const Rat& value) const;

    std::string str() const;

    bool operator==(const Poly&) const = default;

  private:
    std::vector<std::pair<Monomial, Rat>> terms_;
};

}  // namespace genuspart
