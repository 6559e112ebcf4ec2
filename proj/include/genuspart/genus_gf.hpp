#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "genuspart/polynomial.hpp"
#include "genuspart/rational.hpp"
#include "genuspart/series.hpp"

namespace genuspart {

// How the per-part-size weights kappa_l are specialized when building the
// weight series W(x) = sum_l kappa_l x^l.
enum class WeightMode {
    symbolic,             // kappa_l kept as polynomial indeterminates
    all_ones,             // kappa_l = 1: plain counting
    all_y,                // kappa_l = y: marks the number of parts
    doublets,             // kappa_2 = 1, all others 0
    triplets,             // kappa_3 = 1, all others 0
    singleton_free_ones,  // kappa_1 = 0, kappa_l = 1 for l >= 2
    singleton_free_y,     // kappa_1 = 0, kappa_l = y for l >= 2
    custom,               // explicit rational weight per size, absent sizes 0
};

struct CumulantSpec {
    WeightMode mode = WeightMode::all_ones;
    std::map<int, Rat> custom;           // used when mode == custom
    std::optional<std::set<int>> sizes;  // symbolic mode: keep only these part sizes

    // Accepts: "ones", "y", "doublets", "triplets", "sf-ones", "sf-y",
    // "symbolic", "symbolic:2,3", or a custom list like "2=1,3=1/2".
    static CumulantSpec parse(const std::string& text);
    std::string str() const;
};

// W(x) = sum_{l>=1} kappa_l x^l truncated at `order`. Symbolic and y-weighted
// modes require C = Poly.
template <class C>
Series<C> build_W(const CumulantSpec& spec, int order);

// Genus-0 series: the unique solution of Z = 1 + W(x Z). Verified against the
// defining equation and the compositional-inverse relation before returning.
template <class C>
Series<C> genus0_gf(const Series<C>& W);

// The dressed quantities shared by the positive-genus series. All series are
// held at the order of W:
//   xt    = x Z0(x)                     (dressed variable)
//   X2t   = X2(xt),  X2 = x W' - W
//   Y2t   = Y2(xt),  Y2 = x^2 W'' / 2
//   V     = x W'(xt)                    (note: the prefactor x is undressed)
//   inv1m = 1 / (1 - X2t)
//   tX2   = X2t / (1 - X2t),   tY2 = Y2t / (1 - X2t)^2
//   invV  = 1 / (1 - V)
template <class C>
struct DressingFunctions {
    Series<C> W, Z0, xt, X2t, Y2t, V, inv1m, tX2, tY2, invV;
};

template <class C>
DressingFunctions<C> dressing(const Series<C>& W);

// Genus-1 series. Computed in two algebraically equal forms,
//   X2t Y2t / ((1 - X2t)^4 (1 - V))   and   tY2 tX2 (1 + tX2) / (1 - V),
// which must agree exactly (std::logic_error otherwise).
template <class C>
Series<C> genus1_gf(const DressingFunctions<C>& d);
template <class C>
Series<C> genus1_gf(const Series<C>& W);

// Genus-2 series: the five contributions sorted by the profile of the
// irreducible core (all doublets / one 3-part / two 3-parts, primitive and
// semiprimitive / one 4-part), each dressed, summed and divided by 1 - V.
template <class C>
Series<C> genus2_gf(const DressingFunctions<C>& d);
template <class C>
Series<C> genus2_gf(const Series<C>& W);

// Rewrites a singleton-free series as the full series: inserting singletons
// with weight kappa_1 sends Zhat(u) to Z(x) = Zhat(x/(1-kappa_1 x))/(1-kappa_1 x).
template <class C>
Series<C> singleton_insert_transform(const Series<C>& Zhat, const C& kappa1);
// Inverse direction: Zhat(u) = Z(u/(1+kappa_1 u))/(1+kappa_1 u).
template <class C>
Series<C> singleton_remove_transform(const Series<C>& Z, const C& kappa1);

// Genus-3 series for the doublet specialization,
// 11 x^12 (135 + 558 x^2 + 158 x^4) / (1-4x^2)^(17/2), via the binomial series.
Series<Rat> genus3_doublet_series(int order);

}  // namespace genuspart
