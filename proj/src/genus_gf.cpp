#include "genuspart/genus_gf.hpp"

#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace genuspart {

namespace {

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        out.push_back(trimmed(s.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_size(const std::string& tok, const std::string& whole) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("weights: \"" + tok + "\" is not a part size in \"" + whole +
                                    "\"");
    }
}

}  // namespace

CumulantSpec CumulantSpec::parse(const std::string& text) {
    std::string t = trimmed(text);
    CumulantSpec spec;
    if (t == "ones" || t == "all-ones") {
        spec.mode = WeightMode::all_ones;
    } else if (t == "y" || t == "all-y") {
        spec.mode = WeightMode::all_y;
    } else if (t == "doublets") {
        spec.mode = WeightMode::doublets;
    } else if (t == "triplets") {
        spec.mode = WeightMode::triplets;
    } else if (t == "sf-ones" || t == "singleton-free-ones") {
        spec.mode = WeightMode::singleton_free_ones;
    } else if (t == "sf-y" || t == "singleton-free-y") {
        spec.mode = WeightMode::singleton_free_y;
    } else if (t == "symbolic") {
        spec.mode = WeightMode::symbolic;
    } else if (t.starts_with("symbolic:")) {
        spec.mode = WeightMode::symbolic;
        std::set<int> sizes;
        for (const std::string& tok : split(t.substr(9), ',')) {
            if (tok.empty()) throw std::invalid_argument("weights: empty size in " + t);
            sizes.insert(parse_size(tok, t));
        }
        if (sizes.empty() || *sizes.begin() < 1)
            throw std::invalid_argument("weights: part sizes start at 1");
        spec.sizes = std::move(sizes);
    } else if (t.find('=') != std::string::npos) {
        spec.mode = WeightMode::custom;
        for (const std::string& tok : split(t, ',')) {
            size_t eq = tok.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("weights: expected size=value in " + t);
            int l = parse_size(trimmed(tok.substr(0, eq)), t);
            if (l < 1) throw std::invalid_argument("weights: part sizes start at 1");
            spec.custom[l] = rat_from_string(trimmed(tok.substr(eq + 1)));
        }
    } else {
        throw std::invalid_argument(
            "weights: expected ones|y|doublets|triplets|sf-ones|sf-y|symbolic[:sizes] "
            "or a list like \"2=1,3=1/2\", got \"" +
            t + "\"");
    }
    return spec;
}

std::string CumulantSpec::str() const {
    switch (mode) {
        case WeightMode::all_ones: return "ones";
        case WeightMode::all_y: return "y";
        case WeightMode::doublets: return "doublets";
        case WeightMode::triplets: return "triplets";
        case WeightMode::singleton_free_ones: return "sf-ones";
        case WeightMode::singleton_free_y: return "sf-y";
        case WeightMode::symbolic: {
            std::string s = "symbolic";
            if (sizes) {
                char sep = ':';
                for (int l : *sizes) {
                    s += sep;
                    s += std::to_string(l);
                    sep = ',';
                }
            }
            return s;
        }
        case WeightMode::custom: {
            std::string s;
            for (const auto& [l, v] : custom) {
                if (!s.empty()) s += ',';
                s += std::to_string(l) + "=" + rat_to_string(v);
            }
            return s;
        }
    }
    throw std::invalid_argument("CumulantSpec::str: bad mode");
}

template <class C>
Series<C> build_W(const CumulantSpec& spec, int order) {
    if (order < 0) throw std::invalid_argument("build_W: negative order");
    Series<C> W(order);
    switch (spec.mode) {
        case WeightMode::all_ones:
            for (int l = 1; l <= order; ++l) W.set_coeff(l, C(1));
            break;
        case WeightMode::doublets:
            if (order >= 2) W.set_coeff(2, C(1));
            break;
        case WeightMode::triplets:
            if (order >= 3) W.set_coeff(3, C(1));
            break;
        case WeightMode::singleton_free_ones:
            for (int l = 2; l <= order; ++l) W.set_coeff(l, C(1));
            break;
        case WeightMode::custom:
            for (const auto& [l, v] : spec.custom)
                if (l <= order) W.set_coeff(l, C(v));
            break;
        case WeightMode::all_y:
        case WeightMode::singleton_free_y:
        case WeightMode::symbolic:
            if constexpr (std::is_same_v<C, Poly>) {
                if (spec.mode == WeightMode::symbolic) {
                    for (int l = 1; l <= order; ++l)
                        if (!spec.sizes || spec.sizes->contains(l))
                            W.set_coeff(l, Poly::kappa(l));
                } else {
                    for (int l = spec.mode == WeightMode::all_y ? 1 : 2; l <= order; ++l)
                        W.set_coeff(l, Poly::y());
                }
            } else {
                throw std::invalid_argument(
                    "build_W: symbolic or y weights need polynomial coefficients");
            }
            break;
    }
    return W;
}

template <class C>
Series<C> genus0_gf(const Series<C>& W) {
    return solve_fixed_point(W);
}

namespace {

template <class C>
C times_rat(C v, const Rat& r) {
    v *= r;
    return v;
}

// c_0 + c_1 t + ... with integer coefficients listed as (power, coefficient)
template <class C>
Series<C> weighted_powers(const Series<C>& t,
                          std::initializer_list<std::pair<int, int>> terms) {
    int order = t.order();
    Series<C> out(order);
    Series<C> tp = Series<C>::constant(C(1), order);
    int cur = 0;
    for (auto [p, c] : terms) {
        while (cur < p) {
            tp = tp * t;
            ++cur;
        }
        out = out + tp.scaled(C(c));
    }
    return out;
}

}  // namespace

template <class C>
DressingFunctions<C> dressing(const Series<C>& W) {
    int order = W.order();
    Series<C> Z0 = solve_fixed_point(W);
    Series<C> xt = Z0.shifted_up(1);
    Series<C> X2(order), Y2(order);
    for (int k = 2; k <= order; ++k) {
        const C& wk = W.coeff(k);
        if (CoeffTraits<C>::is_zero(wk)) continue;
        X2.set_coeff(k, times_rat(wk, Rat(k - 1)));              // x W' - W
        Y2.set_coeff(k, times_rat(wk, Rat(k * (k - 1) / 2)));    // x^2 W'' / 2
    }
    Series<C> X2t = X2.composed_with(xt);
    Series<C> Y2t = Y2.composed_with(xt);
    // V = x W'(xt): W'(xt) to order-1 suffices for every coefficient of V
    Series<C> wpt = W.derivative().composed_with(xt);
    Series<C> V(order);
    for (int k = 1; k <= order; ++k)
        if (k - 1 <= wpt.order()) V.set_coeff(k, wpt.coeff(k - 1));
    Series<C> one = Series<C>::constant(C(1), order);
    Series<C> inv1m = (one - X2t).reciprocal();
    Series<C> tX2 = X2t * inv1m;
    Series<C> tY2 = Y2t * inv1m * inv1m;
    Series<C> invV = (one - V).reciprocal();
    return DressingFunctions<C>{W,
                                std::move(Z0),
                                std::move(xt),
                                std::move(X2t),
                                std::move(Y2t),
                                std::move(V),
                                std::move(inv1m),
                                std::move(tX2),
                                std::move(tY2),
                                std::move(invV)};
}

template <class C>
Series<C> genus1_gf(const DressingFunctions<C>& d) {
    Series<C> one = Series<C>::constant(C(1), d.W.order());
    Series<C> inv2 = d.inv1m * d.inv1m;
    Series<C> a = d.X2t * d.Y2t * inv2 * inv2 * d.invV;
    Series<C> b = d.tY2 * d.tX2 * (one + d.tX2) * d.invV;
    if (!(a == b)) throw std::logic_error("genus1_gf: the two forms disagree");
    return a;
}

template <class C>
Series<C> genus1_gf(const Series<C>& W) {
    return genus1_gf(dressing(W));
}

template <class C>
Series<C> genus2_gf(const DressingFunctions<C>& d) {
    int order = d.W.order();
    auto upper = [&](int l, bool shift_index) {
        // X_l = sum_k binom(k-1, l-1) kappa_k x^k   (shift_index = true)
        // Y_l = sum_k binom(k, l)     kappa_k x^k   (shift_index = false)
        Series<C> s(order);
        for (int k = l; k <= order; ++k) {
            const C& wk = d.W.coeff(k);
            if (CoeffTraits<C>::is_zero(wk)) continue;
            BigInt b = shift_index ? binomial_big(k - 1, l - 1) : binomial_big(k, l);
            s.set_coeff(k, times_rat(wk, Rat(b)));
        }
        return s;
    };
    Series<C> inv2 = d.inv1m * d.inv1m;
    Series<C> inv3 = inv2 * d.inv1m;
    Series<C> inv4 = inv3 * d.inv1m;
    Series<C> tX3 = upper(3, true).composed_with(d.xt) * inv3;
    Series<C> tY3 = upper(3, false).composed_with(d.xt) * inv3;
    Series<C> tX4 = upper(4, true).composed_with(d.xt) * inv4;
    Series<C> tY4 = upper(4, false).composed_with(d.xt) * inv4;
    Series<C> dress = d.Y2t.scaled(C(2)) * d.inv1m;  // 2 Y2(xt) / (1 - X2(xt))
    Series<C> big3 = tY3 + tX3 * dress;
    Series<C> big4 = tY4 + tX4 * dress;
    Series<C> one = Series<C>::constant(C(1), order);
    Series<C> one_m = one - d.X2t;

    // all-doublet cores
    Series<C> z2 = d.tY2 * weighted_powers(d.tX2, {{3, 21}, {4, 168}, {5, 483},
                                                   {6, 651}, {7, 420}, {8, 105}});
    // one 3-part
    Series<C> z3 =
        tX3 * d.tY2 *
            weighted_powers(d.tX2, {{1, 8}, {2, 94}, {3, 296}, {4, 350}, {5, 140}}) +
        weighted_powers(d.tX2, {{2, 6}, {3, 47}, {4, 111}, {5, 105}, {6, 35}}) * big3;
    // two 3-parts, primitive cores
    Series<C> z33 =
        tX3 * tX3 * d.tY2 * weighted_powers(d.tX2, {{0, 5}, {1, 26}, {2, 26}}) +
        tX3 * weighted_powers(d.tX2, {{0, 1}, {1, 15}, {2, 39}, {3, 26}}) * big3;
    // two 3-parts, semiprimitive cores
    Series<C> z33s =
        d.tY2 * tX3 * tX3 * weighted_powers(d.tX2, {{1, 6}, {2, 18}, {3, 12}}) * one_m +
        tY3 * tX3 * weighted_powers(d.tX2, {{2, 9}, {3, 18}, {4, 9}}) * one_m +
        tX3 * tX3 * weighted_powers(d.tX2, {{2, 15}, {3, 30}, {4, 15}}) * d.Y2t;
    // one 4-part
    Series<C> z4 =
        d.tY2 * tX4 * weighted_powers(d.tX2, {{1, 3}, {2, 9}, {3, 6}}) +
        weighted_powers(d.tX2, {{2, 3}, {3, 6}, {4, 3}}) * big4;

    return (z2 + z3 + z33 + z33s + z4) * d.invV;
}

template <class C>
Series<C> genus2_gf(const Series<C>& W) {
    return genus2_gf(dressing(W));
}

template <class C>
Series<C> singleton_insert_transform(const Series<C>& Zhat, const C& kappa1) {
    int order = Zhat.order();
    Series<C> denom = Series<C>::constant(C(1), order);
    if (order >= 1) denom.set_coeff(1, C(0) - kappa1);
    Series<C> inv = denom.reciprocal();   // 1/(1 - kappa_1 x)
    Series<C> g = inv.shifted_up(1);      // x/(1 - kappa_1 x)
    return Zhat.composed_with(g) * inv;
}

template <class C>
Series<C> singleton_remove_transform(const Series<C>& Z, const C& kappa1) {
    int order = Z.order();
    Series<C> denom = Series<C>::constant(C(1), order);
    if (order >= 1) denom.set_coeff(1, kappa1);
    Series<C> inv = denom.reciprocal();   // 1/(1 + kappa_1 u)
    Series<C> g = inv.shifted_up(1);      // u/(1 + kappa_1 u)
    return Z.composed_with(g) * inv;
}

Series<Rat> genus3_doublet_series(int order) {
    Series<Rat> base(order);
    base.set_coeff(0, Rat(1));
    if (order >= 2) base.set_coeff(2, Rat(-4));
    Series<Rat> pw = base.pow_rational(Rat(-17, 2));  // (1 - 4x^2)^(-17/2)
    Series<Rat> num(order);                           // 11 x^12 (135 + 558 x^2 + 158 x^4)
    if (order >= 12) num.set_coeff(12, Rat(11 * 135));
    if (order >= 14) num.set_coeff(14, Rat(11 * 558));
    if (order >= 16) num.set_coeff(16, Rat(11 * 158));
    return num * pw;
}

// ---- explicit instantiations for the two coefficient rings ----

template Series<Rat> build_W<Rat>(const CumulantSpec&, int);
template Series<Poly> build_W<Poly>(const CumulantSpec&, int);
template Series<Rat> genus0_gf<Rat>(const Series<Rat>&);
template Series<Poly> genus0_gf<Poly>(const Series<Poly>&);
template DressingFunctions<Rat> dressing<Rat>(const Series<Rat>&);
template DressingFunctions<Poly> dressing<Poly>(const Series<Poly>&);
template Series<Rat> genus1_gf<Rat>(const DressingFunctions<Rat>&);
template Series<Poly> genus1_gf<Poly>(const DressingFunctions<Poly>&);
template Series<Rat> genus1_gf<Rat>(const Series<Rat>&);
template Series<Poly> genus1_gf<Poly>(const Series<Poly>&);
template Series<Rat> genus2_gf<Rat>(const DressingFunctions<Rat>&);
template Series<Poly> genus2_gf<Poly>(const DressingFunctions<Poly>&);
template Series<Rat> genus2_gf<Rat>(const Series<Rat>&);
template Series<Poly> genus2_gf<Poly>(const Series<Poly>&);
template Series<Rat> singleton_insert_transform<Rat>(const Series<Rat>&, const Rat&);
template Series<Poly> singleton_insert_transform<Poly>(const Series<Poly>&, const Poly&);
template Series<Rat> singleton_remove_transform<Rat>(const Series<Rat>&, const Rat&);
template Series<Poly> singleton_remove_transform<Poly>(const Series<Poly>&, const Poly&);

}  // namespace genuspart
