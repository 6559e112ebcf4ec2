#include "genuspart/reduce.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "genuspart/enumerate.hpp"

namespace genuspart {

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::remove_singleton: return "remove_singleton";
        case MoveKind::remove_centipede: return "remove_centipede";
        case MoveKind::remove_adjacent_edge: return "remove_adjacent_edge";
        case MoveKind::remove_parallel_line: return "remove_parallel_line";
    }
    throw std::invalid_argument("to_string(MoveKind): bad value");
}

std::string to_string(ReducedClass c) {
    switch (c) {
        case ReducedClass::empty: return "empty";
        case ReducedClass::primitive: return "primitive";
        case ReducedClass::semiprimitive: return "semiprimitive";
    }
    throw std::invalid_argument("to_string(ReducedClass): bad value");
}

namespace {

// Degree-1 and degree-2 faces, read off tau:
//   degree-1 face at x    <=>  tau(x-1) = x  (a part contains cyclic neighbours)
//   degree-2 face {i, k}  <=>  tau(i-1) = k and tau(k-1) = i, i != k;
// its incident parts are P(i) (contains k-1 and i) and P(k) (contains i-1 and k).
struct DiagramScan {
    bool has_singleton = false;
    bool has_one_cycle = false;
    bool has_two_cycle = false;
    bool has_reducible_two_cycle = false;  // degree-2 face touching a part of size <= 2
};

DiagramScan scan(const Partition& p) {
    DiagramScan s;
    int n = p.n();
    if (n == 0) return s;
    std::vector<int> part_size(n + 1, 0);
    for (const auto& part : p.parts()) {
        if (part.size() == 1) s.has_singleton = true;
        for (int e : part) part_size[e] = static_cast<int>(part.size());
    }
    Permutation t = p.tau();
    auto pv = [n](int b) { return b == 1 ? n : b - 1; };
    for (int i = 1; i <= n; ++i) {
        int k = t.image(pv(i));
        if (k == i) {
            s.has_one_cycle = true;
            continue;
        }
        if (t.image(pv(k)) != i) continue;
        s.has_two_cycle = true;
        if (part_size[i] <= 2 || part_size[k] <= 2) s.has_reducible_two_cycle = true;
    }
    return s;
}

}  // namespace

bool is_primitive(const Partition& p) {
    DiagramScan s = scan(p);
    return !s.has_singleton && !s.has_one_cycle && !s.has_two_cycle;
}

bool is_semiprimitive(const Partition& p) {
    DiagramScan s = scan(p);
    return !s.has_singleton && !s.has_one_cycle && s.has_two_cycle && !s.has_reducible_two_cycle;
}

bool is_irreducible(const Partition& p) {
    DiagramScan s = scan(p);
    return !s.has_singleton && !s.has_one_cycle && !s.has_reducible_two_cycle;
}

std::vector<Move> applicable_moves(const Partition& p) {
    std::vector<Move> out;
    int n = p.n();
    if (n == 0) return out;
    const auto& parts = p.parts();
    std::vector<int> part_of(n + 1, -1);
    for (int pi = 0; pi < static_cast<int>(parts.size()); ++pi)
        for (int e : parts[pi]) part_of[e] = pi;
    auto nx = [n](int a) { return a == n ? 1 : a + 1; };
    auto pv = [n](int b) { return b == 1 ? n : b - 1; };

    // singletons (parts are ordered by smallest element, so this is ascending)
    for (const auto& part : parts)
        if (part.size() == 1) out.push_back({MoveKind::remove_singleton, part});

    // centipedes: parts of size >= 2 whose elements form one cyclic run
    for (const auto& part : parts) {
        if (part.size() < 2) continue;
        int gaps = 0;
        for (size_t j = 0; j < part.size(); ++j) {
            int a = part[j], b = part[(j + 1) % part.size()];
            if ((b - a + n) % n != 1) ++gaps;
        }
        if (gaps <= 1) out.push_back({MoveKind::remove_centipede, part});
    }

    // adjacent-edge contractions: a part contains x and x+1; delete x+1,
    // except that element 1 always survives
    if (n >= 2) {
        std::set<int> deletable;
        for (int x = 1; x <= n; ++x)
            if (part_of[x] == part_of[nx(x)]) deletable.insert(nx(x) == 1 ? x : nx(x));
        for (int e : deletable) out.push_back({MoveKind::remove_adjacent_edge, {e}});
    }

    // parallel lines: a degree-2 face {i, k} allows deleting an incident part
    // of size exactly 2. When both sides qualify, the side avoiding the
    // smallest of {i-1, i, k-1, k} is listed first (the smallest survives).
    Permutation t = p.tau();
    std::set<std::vector<int>> seen;
    for (int i = 1; i <= n; ++i) {
        int k = t.image(pv(i));
        if (k <= i) continue;  // skip degree-1 faces and the mirrored visit
        if (t.image(pv(k)) != i) continue;
        int pi_ = part_of[i], pk_ = part_of[k];
        bool small_i = parts[pi_].size() == 2, small_k = parts[pk_].size() == 2;
        if (!small_i && !small_k) continue;
        std::vector<const std::vector<int>*> candidates;
        if (small_i && small_k) {
            int m = std::min({pv(i), i, pv(k), k});
            bool i_side_keeps = parts[pi_][0] == m || parts[pi_][1] == m;
            candidates.push_back(i_side_keeps ? &parts[pk_] : &parts[pi_]);
            candidates.push_back(i_side_keeps ? &parts[pi_] : &parts[pk_]);
        } else {
            candidates.push_back(small_i ? &parts[pi_] : &parts[pk_]);
        }
        for (const auto* c : candidates)
            if (seen.insert(*c).second) out.push_back({MoveKind::remove_parallel_line, *c});
    }
    return out;
}

Partition apply_move(const Partition& p, const Move& m) {
    int n = p.n();
    std::vector<char> gone(n + 1, 0);
    for (int e : m.removed) {
        if (e < 1 || e > n || gone[e]) throw std::invalid_argument("apply_move: bad element list");
        gone[e] = 1;
    }
    std::vector<int> relabel(n + 1, 0);
    int m_new = 0;
    for (int e = 1; e <= n; ++e)
        if (!gone[e]) relabel[e] = ++m_new;
    std::vector<std::vector<int>> parts;
    for (const auto& part : p.parts()) {
        std::vector<int> q;
        for (int e : part)
            if (!gone[e]) q.push_back(relabel[e]);
        if (!q.empty()) parts.push_back(std::move(q));
    }
    Partition next =
        m_new == 0 ? Partition::empty() : Partition::from_parts(m_new, std::move(parts));
    if (next.genus() != p.genus())
        throw std::logic_error("apply_move: genus changed by a " + to_string(m.kind));
    return next;
}

ReductionTrace reduce(const Partition& p) {
    ReductionTrace tr;
    tr.initial = p;
    tr.genus = p.genus();
    Partition cur = p;
    for (;;) {
        std::vector<Move> moves = applicable_moves(cur);
        if (moves.empty()) break;
        const Move& mv = moves.front();
        Partition next = apply_move(cur, mv);
        tr.steps.push_back({mv.kind, mv.removed, cur.n(), next.n()});
        cur = std::move(next);
    }
    tr.reduced = cur;
    if (cur.n() == 0)
        tr.result_class = ReducedClass::empty;
    else if (is_primitive(cur))
        tr.result_class = ReducedClass::primitive;
    else if (is_semiprimitive(cur))
        tr.result_class = ReducedClass::semiprimitive;
    else
        throw std::logic_error("reduce: no move applies but the diagram is still reducible");
    return tr;
}

namespace {

Partition exhaust_kind(Partition cur, MoveKind kind) {
    for (;;) {
        std::vector<Move> moves = applicable_moves(cur);
        auto it = std::find_if(moves.begin(), moves.end(),
                               [&](const Move& m) { return m.kind == kind; });
        if (it == moves.end()) return cur;
        cur = apply_move(cur, *it);
    }
}

}  // namespace

Partition remove_singletons(const Partition& p) {
    return exhaust_kind(p, MoveKind::remove_singleton);
}
Partition remove_centipedes(const Partition& p) {
    return exhaust_kind(p, MoveKind::remove_centipede);
}
Partition remove_adjacent_edges(const Partition& p) {
    return exhaust_kind(p, MoveKind::remove_adjacent_edge);
}
Partition remove_parallel_lines(const Partition& p) {
    return exhaust_kind(p, MoveKind::remove_parallel_line);
}

ConfluenceReport confluence_check(const Partition& p, std::uint64_t trials, std::uint64_t seed) {
    ConfluenceReport rep;
    rep.reference = reduce(p).reduced;
    rep.trials = trials;
    Partition want = rep.reference.canonical();
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Partition cur = p;
        for (;;) {
            std::vector<Move> moves = applicable_moves(cur);
            if (moves.empty()) break;
            std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
            cur = apply_move(cur, moves[pick(rng)]);
        }
        if (cur.canonical() != want) {
            rep.consistent = false;
            break;
        }
    }
    return rep;
}

CensusTable census_genus2(int n_min, int n_max, std::uint64_t budget, int threads) {
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("census_genus2: bad range");
    CensusTable table;
    // profile: `count_big` parts of size `big`, doublets elsewhere
    auto profile = [](int n, int big, int count_big) {
        PartitionType t;
        if (count_big > 0) t.mult[big] = count_big;
        int rest = (n - big * count_big) / 2;
        if (rest > 0) t.mult[2] = rest;
        return t;
    };
    auto run = [&](int n, const PartitionType& ty) {
        if (ty.n() != n || genus_max(n, ty) < 2) return detail::ClassCounts{};
        return detail::classified_count(n, ty, 2, budget, threads);
    };
    for (int n = n_min; n <= n_max; ++n) {
        CensusRow row;
        row.n = n;
        if (n % 2 == 0) {
            auto cc2 = run(n, profile(n, 2, 0));
            row.two_vertices_only = cc2.primitive;
            auto cc33 = n >= 6 ? run(n, profile(n, 3, 2)) : detail::ClassCounts{};
            row.two_3vertices_prim = cc33.primitive;
            row.two_3vertices_semiprim = cc33.semiprimitive;
            auto cc4 = n >= 4 ? run(n, profile(n, 4, 1)) : detail::ClassCounts{};
            row.one_4vertex = cc4.primitive;
            if (cc2.semiprimitive || cc4.semiprimitive)
                throw std::logic_error(
                    "census_genus2: a semiprimitive diagram needs two parts of size >= 3");
        } else {
            auto cc3 = n >= 3 ? run(n, profile(n, 3, 1)) : detail::ClassCounts{};
            row.one_3vertex = cc3.primitive;
            if (cc3.semiprimitive)
                throw std::logic_error(
                    "census_genus2: a semiprimitive diagram needs two parts of size >= 3");
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace genuspart
