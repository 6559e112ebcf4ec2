#pragma once

#include "genuspart/polynomial.hpp"
#include "genuspart/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace genuspart {

// Per-coefficient-ring hooks for Series<C>.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rat> {
    static bool is_zero(const Rat& c) { return c == 0; }
    static bool is_one(const Rat& c) { return c == 1; }
    // fractional powers are exact over plain rationals
    static bool fractional_pow_ok(const Rat&) { return true; }
    static std::string str(const Rat& c) { return rat_to_string(c); }
};

template <>
struct CoeffTraits<Poly> {
    static bool is_zero(const Poly& c) { return c.is_zero(); }
    static bool is_one(const Poly& c) { return c.is_constant() && !c.is_zero() && c.constant_value() == 1; }
    // kappa or eps in a coefficient would need symbolic square roots
    static bool fractional_pow_ok(const Poly& c) { return c.numeric_in_y(); }
    static std::string str(const Poly& c) { return c.str(); }
};

// Power series in x truncated at a fixed order: coefficients 0..order are
// stored and exact, everything above is unknown. Binary operations truncate
// to the smaller order of the two operands.
template <class C>
class Series {
  public:
    explicit Series(int order) : c_(order + 1) {
        if (order < 0) throw std::invalid_argument("series: order must be >= 0");
    }
    static Series constant(C v, int order) {
        Series s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static Series x(int order) { return monomial(C(1), 1, order); }
    static Series monomial(C coeff, int power, int order) {
        Series s(order);
        if (power <= order) s.c_[power] = std::move(coeff);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const C& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("series: coefficient beyond truncation order");
        return c_[k];
    }
    void set_coeff(int k, C v) {
        if (k < 0 || k > order()) throw std::out_of_range("series: coefficient beyond truncation order");
        c_[k] = std::move(v);
    }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!CoeffTraits<C>::is_zero(c)) return false;
        return true;
    }

    Series truncated(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("series: cannot extend truncation order");
        Series s(new_order);
        for (int k = 0; k <= new_order; ++k) s.c_[k] = c_[k];
        return s;
    }

    Series operator-() const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r.c_[k] = C(0) - c_[k];
        return r;
    }
    Series scaled(const C& f) const {
        Series r(order());
        for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * f;
        return r;
    }

    // f(g) for g with zero constant term; Horner from the top coefficient
    Series composed_with(const Series& g) const {
        if (!CoeffTraits<C>::is_zero(g.c_[0]))
            throw std::invalid_argument("series: composition needs zero constant term");
        int ord = std::min(order(), g.order());
        Series r = Series::constant(c_[order()], ord);
        for (int k = order() - 1; k >= 0; --k) {
            r = r * g;
            r.c_[0] += c_[k];
        }
        return r;
    }

    Series derivative() const {
        Series r(order() == 0 ? 0 : order() - 1);
        for (int k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * C(k);
        return r;
    }

    // multiply by x^k (top coefficients fall off)
    Series shifted_up(int k) const {
        Series r(order());
        for (int i = order(); i >= k; --i) r.c_[i] = c_[i - k];
        return r;
    }
    // divide by x^k; the low coefficients must vanish. The order drops by k:
    // coefficients above it would need data beyond this truncation.
    Series shifted_down(int k) const {
        if (k > order()) throw std::invalid_argument("series: shift below order 0");
        for (int i = 0; i < k; ++i)
            if (!CoeffTraits<C>::is_zero(c_[i]))
                throw std::invalid_argument("series: not divisible by x^" + std::to_string(k));
        Series r(order() - k);
        for (int i = 0; i + k <= order(); ++i) r.c_[i] = c_[i + k];
        return r;
    }

    // 1/f for f with constant term 1
    Series reciprocal() const {
        if (!CoeffTraits<C>::is_one(c_[0]))
            throw std::invalid_argument("series: reciprocal needs constant term 1");
        Series r(order());
        r.c_[0] = C(1);
        for (int k = 1; k <= order(); ++k) {
            C acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = C(0) - acc;
        }
        return r;
    }

    // f^e for rational e and f with constant term 1, via the binomial series
    // on u = f - 1. Fractional e requires coefficients without symbols whose
    // fractional powers would leave the ring.
    Series pow_rational(const Rat& e) const {
        if (!CoeffTraits<C>::is_one(c_[0]))
            throw std::invalid_argument("series: pow_rational needs constant term 1");
        if (denominator(e) != 1) {
            for (const auto& c : c_)
                if (!CoeffTraits<C>::fractional_pow_ok(c))
                    throw std::invalid_argument(
                        "series: fractional power of symbolic coefficients is unsupported");
        }
        Series u = *this;
        u.c_[0] = C(0);
        Series r = Series::constant(C(1), order());
        Series upow = Series::constant(C(1), order());
        for (int k = 1; k <= order(); ++k) {
            Rat b = binomial_rat(e, k);
            if (b == 0) break;  // integer e >= 0 and k > e; all later terms vanish too
            upow = upow * u;
            for (int i = 0; i <= order(); ++i) r.c_[i] += upow.c_[i] * C(b);
        }
        return r;
    }

    bool operator==(const Series&) const = default;

    std::string str(const std::string& varname = "x") const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            if (CoeffTraits<C>::is_zero(c_[k])) continue;
            if (!first) os << " + ";
            first = false;
            std::string cs = CoeffTraits<C>::str(c_[k]);
            bool wrap = cs.find_first_of("+- ") != std::string::npos && k > 0;
            if (k == 0) {
                os << cs;
            } else {
                if (CoeffTraits<C>::is_one(c_[k])) {
                    os << varname;
                } else {
                    os << (wrap ? "(" + cs + ")" : cs) << '*' << varname;
                }
                if (k > 1) os << '^' << k;
            }
        }
        if (first) os << '0';
        return os.str();
    }

  private:
    std::vector<C> c_;  // c_[k] is the x^k coefficient
};

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    Series<C> r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.set_coeff(k, a.coeff(k) + b.coeff(k));
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    Series<C> r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r.set_coeff(k, a.coeff(k) - b.coeff(k));
    return r;
}

template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    Series<C> r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (CoeffTraits<C>::is_zero(a.coeff(i))) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (CoeffTraits<C>::is_zero(b.coeff(j))) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

using RatSeries = Series<Rat>;
using PolySeries = Series<Poly>;

// C(k) conversions used above need Poly(int) and Rat(int); Poly also needs
// multiplication by C(Rat) in pow_rational.
// Solves Z = 1 + W(x Z) by iteration; each pass fixes one more order.
template <class C>
Series<C> solve_fixed_point(const Series<C>& W, bool check_inverse_relation = true) {
    if (!CoeffTraits<C>::is_zero(W.coeff(0)))
        throw std::invalid_argument("series: W must have zero constant term");
    int N = W.order();
    Series<C> Z = Series<C>::constant(C(1), N);
    for (int it = 0; it < N; ++it) {
        Series<C> next = W.composed_with(Z.shifted_up(1));
        next.set_coeff(0, next.coeff(0) + C(1));
        if (next == Z) break;
        Z = std::move(next);
    }
    {
        Series<C> again = W.composed_with(Z.shifted_up(1));
        again.set_coeff(0, again.coeff(0) + C(1));
        if (!(again == Z)) throw std::logic_error("series: fixed point did not converge");
    }
    if (check_inverse_relation) {
        // xZ(x) and z/(1+W(z)) are compositional inverses
        Series<C> onePlusW = W;
        onePlusW.set_coeff(0, C(1));
        Series<C> h = onePlusW.reciprocal().shifted_up(1);
        if (!(h.composed_with(Z.shifted_up(1)) == Series<C>::x(N)))
            throw std::logic_error("series: inverse-function relation violated");
    }
    return Z;
}

}  // namespace genuspart
