#include "genuspart/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genuspart {

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.powers.reserve(powers.size() + o.powers.size());
    auto a = powers.begin(), b = o.powers.begin();
    while (a != powers.end() && b != o.powers.end()) {
        if (a->first < b->first) {
            r.powers.push_back(*a++);
        } else if (b->first < a->first) {
            r.powers.push_back(*b++);
        } else {
            r.powers.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.powers.insert(r.powers.end(), a, powers.end());
    r.powers.insert(r.powers.end(), b, o.powers.end());
    return r;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto [id, e] : powers) d += e;
    return d;
}

static std::string var_name(int id) {
    if (id == var::eps) return "eps";
    if (id == var::y) return "y";
    return "k" + std::to_string(id - 1);
}

std::string Monomial::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < powers.size(); ++i) {
        if (i) os << '*';
        os << var_name(powers[i].first);
        if (powers[i].second != 1) os << '^' << powers[i].second;
    }
    return os.str();
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::invalid_argument("polynomial is not constant: " + str());
    return terms_[0].second;
}

Rat Poly::coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
}

bool Poly::uses_var(int id) const {
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m.powers)
            if (v == id) return true;
    return false;
}

bool Poly::numeric_in_y() const {
    for (const auto& [m, c] : terms_)
        for (auto [v, e] : m.powers)
            if (v != var::y) return false;
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<std::pair<Monomial, Rat>> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (a->first < b->first) {
            out.push_back(std::move(*a++));
        } else if (b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rat c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(terms_.end()));
    out.insert(out.end(), b, o.terms_.end());
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    return *this += -o;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Poly();
    std::map<Monomial, Rat> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) acc[ma.times(mb)] += ca * cb;
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.emplace_back(m, std::move(c));
    return r;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::substituted(int id, const Rat& value) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Rat factor = c;
        Monomial rest;
        for (auto [v, e] : m.powers) {
            if (v == id) {
                for (int i = 0; i < e; ++i) factor *= value;
            } else {
                rest.powers.emplace_back(v, e);
            }
        }
        out += Poly(std::move(rest), std::move(factor));
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    // display order: total degree, then monomial order
    std::vector<const std::pair<Monomial, Rat>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        int da = a->first.total_degree(), db = b->first.total_degree();
        return da != db ? da < db : a->first < b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_one()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << m.str();
        } else {
            os << rat_to_string(a) << '*' << m.str();
        }
    }
    return os.str();
}

}  // namespace genuspart
