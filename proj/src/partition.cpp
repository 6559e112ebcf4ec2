#include "genuspart/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genuspart {

Permutation::Permutation(int n) : n_(n), img_(n + 1) {
    for (int i = 1; i <= n; ++i) img_[i] = i;
}

Permutation Permutation::from_images(std::vector<int> images) {
    int n = static_cast<int>(images.size()) - 1;
    if (n < 0) throw std::invalid_argument("permutation: images must have size n+1");
    std::vector<char> seen(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int v = images[i];
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("permutation: not a bijection");
        seen[v] = 1;
    }
    Permutation p(n);
    p.img_ = std::move(images);
    p.img_[0] = 0;
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i) inv[img_[i]] = i;
    Permutation p(n_);
    p.img_ = std::move(inv);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<char> seen(n_ + 1, 0);
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= n_; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::cycle_count() const {
    std::vector<char> seen(n_ + 1, 0);
    int k = 0;
    for (int i = 1; i <= n_; ++i) {
        if (seen[i]) continue;
        ++k;
        for (int j = i; !seen[j]; j = img_[j]) seen[j] = 1;
    }
    return k;
}

std::string Permutation::cycle_string() const {
    std::ostringstream os;
    for (const auto& c : cycles()) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ',';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

int PartitionType::n() const {
    int s = 0;
    for (auto [size, m] : mult) s += size * m;
    return s;
}

int PartitionType::part_count() const {
    int s = 0;
    for (auto [size, m] : mult) s += m;
    return s;
}

std::string PartitionType::str() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto [size, m] : mult) {
        if (!first) os << ' ';
        first = false;
        os << size;
        if (m > 1) os << '^' << m;
    }
    os << ']';
    return os.str();
}

PartitionType PartitionType::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("type: unbalanced brackets in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    PartitionType t;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        int size = 0, m = 1;
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                size = std::stoi(tok);
            } else {
                size = std::stoi(tok.substr(0, caret));
                m = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("type: bad token '" + tok + "'");
        }
        if (size < 1 || m < 1) throw std::invalid_argument("type: sizes and multiplicities must be >= 1");
        t.mult[size] += m;
    }
    if (t.mult.empty()) throw std::invalid_argument("type: empty");
    return t;
}

Partition Partition::from_parts(int n, std::vector<std::vector<int>> parts) {
    if (n < 1) throw std::invalid_argument("partition: n must be >= 1");
    std::vector<char> seen(n + 1, 0);
    int covered = 0;
    for (auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("partition: empty part");
        std::sort(p.begin(), p.end());
        for (int e : p) {
            if (e < 1 || e > n) throw std::invalid_argument("partition: element out of range");
            if (seen[e]) throw std::invalid_argument("partition: duplicate element");
            seen[e] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("partition: elements do not cover 1..n");
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    Partition q;
    q.n_ = n;
    q.parts_ = std::move(parts);
    return q;
}

Partition Partition::empty() {
    return Partition();
}

Partition Partition::parse(const std::string& text) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    int maxe = 0;
    std::string tok;
    auto flush_tok = [&] {
        if (tok.empty()) throw std::invalid_argument("partition: missing element in '" + text + "'");
        int e;
        try {
            e = std::stoi(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("partition: bad element '" + tok + "'");
        }
        cur.push_back(e);
        maxe = std::max(maxe, e);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == ',') {
            flush_tok();
        } else if (ch == '|') {
            flush_tok();
            parts.push_back(std::move(cur));
            cur.clear();
        } else {
            tok += ch;
        }
    }
    if (!tok.empty() || !cur.empty()) {
        flush_tok();
        parts.push_back(std::move(cur));
    }
    if (parts.empty()) throw std::invalid_argument("partition: empty input");
    return from_parts(maxe, std::move(parts));
}

PartitionType Partition::type() const {
    PartitionType t;
    for (const auto& p : parts_) t.mult[static_cast<int>(p.size())]++;
    return t;
}

Permutation Partition::tau() const {
    std::vector<int> img(n_ + 1, 0);
    for (const auto& p : parts_)
        for (size_t i = 0; i < p.size(); ++i) img[p[i]] = p[(i + 1) % p.size()];
    return Permutation::from_images(std::move(img));
}

Permutation Partition::face_permutation() const {
    std::vector<int> img(n_ + 1, 0);
    for (const auto& p : parts_)
        for (size_t i = 0; i < p.size(); ++i) {
            // tau^{-1}(p[(i+1)%k]) = p[i], so face(p[(i+1)%k]) = p[i] mod n + 1
            img[p[(i + 1) % p.size()]] = p[i] % n_ + 1;
        }
    return Permutation::from_images(std::move(img));
}

int Partition::face_count() const {
    if (n_ == 0) return 0;
    return face_permutation().cycle_count();
}

int Partition::genus() const {
    if (n_ == 0) return 0;
    int two_g = n_ + 1 - part_count() - face_count();
    if (two_g < 0 || two_g % 2 != 0)
        throw std::logic_error("genus: parity violated (internal error)");
    return two_g / 2;
}

Partition Partition::rotated(int k) const {
    if (n_ == 0) return *this;
    k %= n_;
    if (k < 0) k += n_;
    std::vector<std::vector<int>> parts = parts_;
    for (auto& p : parts)
        for (int& e : p) e = (e - 1 + k) % n_ + 1;
    return from_parts(n_, std::move(parts));
}

Partition Partition::canonical() const {
    if (n_ == 0) return *this;
    Partition best = *this;
    for (int k = 1; k < n_; ++k) {
        Partition r = rotated(k);
        if (r < best) best = std::move(r);
    }
    return best;
}

int Partition::stabilizer_order() const {
    if (n_ == 0) return 1;
    for (int d = 1; d <= n_; ++d) {
        if (n_ % d != 0) continue;
        if (rotated(d) == *this) return n_ / d;
    }
    return 1;  // unreachable: d = n always fixes
}

std::string Partition::str() const {
    if (n_ == 0) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << '|';
        for (size_t j = 0; j < parts_[i].size(); ++j) {
            if (j) os << ',';
            os << parts_[i][j];
        }
    }
    return os.str();
}

int genus_max(int n) {
    if (n < 1) throw std::invalid_argument("genus_max: n must be >= 1");
    return (n - 1) / 2;
}

int genus_max(int n, const PartitionType& type) {
    if (type.n() != n) throw std::invalid_argument("genus_max: type does not sum to n");
    return (n - type.part_count()) / 2;
}

}  // namespace genuspart
