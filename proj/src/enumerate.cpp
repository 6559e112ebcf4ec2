#include "genuspart/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace genuspart {

namespace {

// Depth-first assignment of elements 1..n to parts. Parts are created at
// their minimum element, so part creation order equals ordering by minimum.
//
// tau transitions (tau(a) = b, "a -> b") are recorded as they become fixed:
// when b joins the part whose largest element is a, and when a part closes
// (largest -> minimum). Each transition is one arc of the face permutation
// phi = sigma tau^{-1}, namely phi(b) = a mod n + 1, which lets us:
//   - prune phi 1-cycles the moment they appear (b == a mod n + 1),
//   - detect phi 2-cycles the moment their second transition appears
//     (the partner of a -> b is b-1 -> a+1, cyclically),
//   - maintain the number of completed phi cycles for genus bounds.
struct Walker {
    int n = 0;
    bool typed = false;
    bool irreducible = false;    // prune 1-cycles and 2-cycles not allowed below
    bool strict_primitive = false;  // prune every 2-cycle (primitive-only filters)
    bool singleton_free = false;
    int genus_filter = -1;       // -1 = none; enables face-count bounds when typed
    int total_parts = 0;         // typed mode: number of parts the type dictates

    std::vector<int> rem;        // typed: remaining parts to open per size
    std::vector<int> distinct;   // typed: distinct sizes, ascending
    int open_need = 0;           // elements required to fill currently open parts

    std::vector<int> target;     // per part (typed: chosen size; free: n)
    std::vector<int> count, pmin, plast;
    int nparts = 0;
    std::vector<int> part_of;    // element -> part id
    std::vector<int> succ, pred; // fixed tau transitions, 0 = unset
    int two_cycles = 0;          // phi 2-cycles formed so far
    int transitions = 0;
    int faces_done = 0;          // completed phi cycles

    std::uint64_t visited = 0;   // leaves reached
    std::uint64_t check_every = 1 << 12;
    std::uint64_t next_check = 1 << 12;
    std::atomic<std::uint64_t>* shared_visited = nullptr;
    std::atomic<bool>* cancel = nullptr;
    std::uint64_t budget = 0;    // 0 = unlimited (checked via shared counter)

    // scratch for cycle walks at leaves
    std::vector<std::uint64_t> stamp;
    std::uint64_t stamp_gen = 0;

    void init(int n_, const EnumOptions& opt) {
        n = n_;
        typed = opt.type.has_value();
        irreducible = opt.klass != ClassFilter::all;
        strict_primitive = opt.klass == ClassFilter::primitive;  // a 2-cycle, once formed, persists
        singleton_free = opt.singleton_free ||
                         (typed && !opt.type->mult.contains(1)) || irreducible;
        genus_filter = opt.genus.value_or(-1);
        rem.assign(n + 1, 0);
        if (typed) {
            for (auto [size, m] : opt.type->mult) {
                rem[size] = m;
                distinct.push_back(size);
                total_parts += m;
            }
        }
        target.assign(n + 2, 0);
        count.assign(n + 2, 0);
        pmin.assign(n + 2, 0);
        plast.assign(n + 2, 0);
        part_of.assign(n + 1, 0);
        succ.assign(n + 1, 0);
        pred.assign(n + 1, 0);
        stamp.assign(n + 1, 0);
        budget = opt.budget;
    }

    int cyc_next(int a) const { return a == n ? 1 : a + 1; }
    int cyc_prev(int b) const { return b == 1 ? n : b - 1; }

    // Registers transition a -> b. Returns false (no change) when the
    // transition is pruned in irreducible mode; fills the undo flags.
    bool add_transition(int a, int b, bool& closed_cycle, bool& made_two_cycle) {
        int v = cyc_next(a);
        if (irreducible && b == v) return false;  // phi 1-cycle
        int u = cyc_prev(b);
        made_two_cycle = succ[u] == v;
        if (made_two_cycle && irreducible) {
            if (strict_primitive) return false;
            // the 2-cycle joins part_of[b] and part_of[u]; in typed mode the
            // final sizes are the targets
            if (typed && (target[part_of[b]] <= 2 || target[part_of[u]] <= 2)) return false;
        }
        succ[a] = b;
        pred[b] = a;
        ++transitions;
        if (made_two_cycle) ++two_cycles;
        // does the new phi arc b -> v close a cycle? Follow phi from v until
        // the chain breaks or returns to b.
        closed_cycle = false;
        int j = v;
        while (pred[j] != 0) {
            if (j == b) {
                closed_cycle = true;
                ++faces_done;
                break;
            }
            j = cyc_next(pred[j]);
        }
        return true;
    }

    void remove_transition(int a, int b, bool closed_cycle, bool made_two_cycle) {
        succ[a] = 0;
        pred[b] = 0;
        --transitions;
        if (made_two_cycle) --two_cycles;
        if (closed_cycle) --faces_done;
    }

    // Genus window from completed faces: remaining transitions can each close
    // at most one more cycle, and at least one more closes if any remain.
    bool genus_window_ok(int placed) const {
        if (genus_filter < 0 || !typed) return true;
        int R = n - transitions;
        int f_max = faces_done + R;
        if (n + 1 - total_parts - f_max > 2 * genus_filter) return false;
        int f_min = faces_done + (R > 0 ? 1 : 0);
        if (n + 1 - total_parts - f_min < 2 * genus_filter) return false;
        (void)placed;
        return true;
    }

    int leaf_faces() {
        ++stamp_gen;
        int f = 0;
        for (int i = 1; i <= n; ++i) {
            if (stamp[i] == stamp_gen) continue;
            ++f;
            int j = i;
            while (stamp[j] != stamp_gen) {
                stamp[j] = stamp_gen;
                j = cyc_next(pred[j]);
            }
        }
        return f;
    }

    // classification of the leaf against the class filter; assumes the leaf
    // already has no singleton parts when irreducible
    bool leaf_matches_class(ClassFilter k) {
        if (k == ClassFilter::all) return true;
        if (typed)  // pruning already enforced: no 1-cycles, no bad 2-cycles
            return k == ClassFilter::primitive ? two_cycles == 0 : two_cycles > 0;
        // free mode: inspect phi cycles directly
        ++stamp_gen;
        bool any_two = false;
        for (int i = 1; i <= n; ++i) {
            if (stamp[i] == stamp_gen) continue;
            int len = 0, j = i;
            while (stamp[j] != stamp_gen) {
                stamp[j] = stamp_gen;
                j = cyc_next(pred[j]);
                ++len;
            }
            if (len == 1) return false;
            if (len == 2) {
                int other = cyc_next(pred[i]);
                if (count[part_of[i]] <= 2 || count[part_of[other]] <= 2) return false;
                any_two = true;
            }
        }
        return k == ClassFilter::primitive ? !any_two : any_two;
    }
};

// Leaf sink shared by the public entry points.
template <class F>
struct Driver {
    Walker w;
    EnumOptions opt;
    F on_leaf;  // void(Walker&, int genus)

    bool stopped = false;

    void leaf() {
        ++w.visited;
        if (w.shared_visited) {
            if (w.visited >= w.next_check) {
                w.next_check += w.check_every;
                std::uint64_t total = w.shared_visited->fetch_add(w.check_every) + w.check_every;
                if ((w.budget && total > w.budget) || w.cancel->load()) {
                    w.cancel->store(true);
                    stopped = true;
                    return;
                }
            }
        } else if (w.budget && w.visited > w.budget) {
            stopped = true;
            return;
        }
        int f = w.leaf_faces();
        int two_g = w.n + 1 - w.nparts - f;
        if (two_g < 0 || (two_g & 1))
            throw std::logic_error("enumerator produced an invalid Euler characteristic");
        int g = two_g / 2;
        if (w.genus_filter >= 0 && g != w.genus_filter) return;
        if (w.singleton_free && !w.typed) {
            for (int p = 0; p < w.nparts; ++p)
                if (w.count[p] == 1) return;
        }
        if (!w.leaf_matches_class(opt.klass)) return;
        on_leaf(w, g);
    }

    void place(int i) {
        if (stopped) return;
        if (i > w.n) {
            if (!w.typed) {
                // close every part: wrap transitions largest -> minimum
                if (!close_free_parts(0)) return;
                return;  // close_free_parts calls leaf() at full closure
            }
            leaf();
            return;
        }
        int remaining = w.n - i;  // elements after placing i
        // join an existing open part
        for (int p = 0; p < w.nparts; ++p) {
            if (w.count[p] >= w.target[p]) continue;
            int a = w.plast[p];
            bool closes = w.typed && w.count[p] + 1 == w.target[p];
            bool cc1 = false, t1 = false;
            w.part_of[i] = p;  // must be set before add_transition inspects part sizes
            if (!w.add_transition(a, i, cc1, t1)) continue;
            w.plast[p] = i;
            ++w.count[p];
            --w.open_need;
            bool ok = true;
            bool cc2 = false, t2 = false;
            if (closes) ok = w.add_transition(i, w.pmin[p], cc2, t2);
            if (ok && w.open_need <= remaining && w.genus_window_ok(i)) place(i + 1);
            if (closes && ok) w.remove_transition(i, w.pmin[p], cc2, t2);
            ++w.open_need;
            --w.count[p];
            w.plast[p] = a;
            w.remove_transition(a, i, cc1, t1);
        }
        // open a new part at i
        if (w.typed) {
            for (int s : w.distinct) {
                if (w.rem[s] == 0) continue;
                if (s == 1 && w.singleton_free) continue;
                if (w.open_need + (s - 1) > remaining) continue;
                int p = w.nparts++;
                w.target[p] = s;
                w.count[p] = 1;
                w.pmin[p] = w.plast[p] = i;
                w.part_of[i] = p;
                --w.rem[s];
                w.open_need += s - 1;
                bool ok = true;
                bool cc = false, t2 = false;
                if (s == 1) ok = w.add_transition(i, i, cc, t2);  // tau fixed point
                if (ok && w.genus_window_ok(i)) place(i + 1);
                if (s == 1 && ok) w.remove_transition(i, i, cc, t2);
                w.open_need -= s - 1;
                ++w.rem[s];
                --w.nparts;
            }
        } else {
            if (!(w.singleton_free && i == w.n)) {  // a part opened by n stays size 1
                int p = w.nparts++;
                w.target[p] = w.n;  // unbounded
                w.count[p] = 1;
                w.pmin[p] = w.plast[p] = i;
                w.part_of[i] = p;
                place(i + 1);
                --w.nparts;
            }
        }
    }

    // free mode: after all elements are placed, fix the wrap transition of
    // each part in turn (recursively so undo stays trivial)
    bool close_free_parts(int p) {
        if (stopped) return true;
        if (p == w.nparts) {
            leaf();
            return true;
        }
        int a = w.plast[p], b = w.pmin[p];
        if (w.count[p] == 1) {
            // singleton: tau fixed point, transition to itself
            if (w.irreducible) return true;  // cannot be (semi)primitive
        }
        if (w.irreducible && b == w.cyc_next(a)) return true;  // 1-cycle
        bool cc = false, t2 = false;
        if (!w.add_transition(a, b, cc, t2)) return true;
        close_free_parts(p + 1);
        w.remove_transition(a, b, cc, t2);
        return true;
    }
};

}  // namespace

// ---- public entry points ----

static void run_single(int n, const EnumOptions& opt,
                       const std::function<void(Walker&, int)>& on_leaf) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (opt.type && opt.type->n() != n)
        throw std::invalid_argument("enumerate: type sums to " + std::to_string(opt.type->n()) +
                                    ", not n = " + std::to_string(n));
    Driver<const std::function<void(Walker&, int)>&> d{Walker{}, opt, on_leaf};
    d.w.init(n, opt);
    d.place(1);
    if (d.stopped || (opt.budget && d.w.visited > opt.budget)) throw BudgetExceeded(opt.budget);
}

void for_each_partition(int n, const EnumOptions& opt,
                        const std::function<void(const Partition&, int genus)>& visit) {
    run_single(n, opt, [&](Walker& w, int g) {
        std::vector<std::vector<int>> parts(w.nparts);
        for (int p = 0; p < w.nparts; ++p) parts[p].reserve(w.count[p]);
        for (int e = 1; e <= n; ++e) parts[w.part_of[e]].push_back(e);
        visit(Partition::from_parts(n, std::move(parts)), g);
    });
}

std::uint64_t GenusCountTable::total() const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : cells) s += v;
    return s;
}

std::uint64_t GenusCountTable::total_for_genus(int g) const {
    std::uint64_t s = 0;
    for (const auto& [k, v] : cells)
        if (k.second == g) s += v;
    return s;
}

std::uint64_t GenusCountTable::at(const PartitionType& t, int g) const {
    auto it = cells.find({t, g});
    return it == cells.end() ? 0 : it->second;
}

GenusCountTable count_by_genus(int n, const EnumOptions& opt) {
    GenusCountTable table;
    table.n = n;
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (opt.type && opt.type->n() != n)
        throw std::invalid_argument("enumerate: type sums to " + std::to_string(opt.type->n()) +
                                    ", not n = " + std::to_string(n));

    int threads = std::max(1, opt.threads);
    using LocalTable = std::map<std::pair<std::vector<int>, int>, std::uint64_t>;

    auto leaf_key = [](Walker& w) {
        std::vector<int> sizes(w.count.begin(), w.count.begin() + w.nparts);
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };

    std::atomic<std::uint64_t> shared_visited{0};
    std::atomic<bool> cancel{false};
    std::vector<LocalTable> results;

    if (threads == 1) {
        LocalTable local;
        Driver<std::function<void(Walker&, int)>> d{
            Walker{}, opt, [&](Walker& w, int g) { ++local[{leaf_key(w), g}]; }};
        d.w.init(n, opt);
        d.place(1);
        if (d.stopped || (opt.budget && d.w.visited > opt.budget))
            throw BudgetExceeded(opt.budget);
        results.push_back(std::move(local));
    } else {
        // shard: expand the assignment tree serially to a fixed depth, then
        // replay each prefix in a worker and walk its subtree
        int depth = std::min(n, 7);
        std::vector<std::vector<int>> prefixes;  // encoded choice strings
        {
            // enumerate choice strings: at each element, choice c is either
            // join part index c, or open size s encoded as -s
            std::vector<int> cur;
            std::function<void(Walker&, int)> expand = [&](Walker& w, int i) {
                if (i > std::min(depth, n)) {
                    prefixes.push_back(cur);
                    return;
                }
                // replicate place() choice structure without recursion depth
                int remaining = n - i;
                for (int p = 0; p < w.nparts; ++p) {
                    if (w.count[p] >= w.target[p]) continue;
                    int a = w.plast[p];
                    bool closes = w.typed && w.count[p] + 1 == w.target[p];
                    bool cc1 = false, t1 = false;
                    w.part_of[i] = p;  // must be set before add_transition inspects part sizes
                    if (!w.add_transition(a, i, cc1, t1)) continue;
                    w.plast[p] = i;
                    ++w.count[p];
                    --w.open_need;
                    bool ok = true;
                    bool cc2 = false, t2 = false;
                    if (closes) ok = w.add_transition(i, w.pmin[p], cc2, t2);
                    if (ok && w.open_need <= remaining && w.genus_window_ok(i)) {
                        cur.push_back(p);
                        expand(w, i + 1);
                        cur.pop_back();
                    }
                    if (closes && ok) w.remove_transition(i, w.pmin[p], cc2, t2);
                    ++w.open_need;
                    --w.count[p];
                    w.plast[p] = a;
                    w.remove_transition(a, i, cc1, t1);
                }
                if (w.typed) {
                    for (int s : w.distinct) {
                        if (w.rem[s] == 0) continue;
                        if (s == 1 && w.singleton_free) continue;
                        if (w.open_need + (s - 1) > remaining) continue;
                        int p = w.nparts++;
                        w.target[p] = s;
                        w.count[p] = 1;
                        w.pmin[p] = w.plast[p] = i;
                        w.part_of[i] = p;
                        --w.rem[s];
                        w.open_need += s - 1;
                        bool ok = true;
                        bool cc = false, t2 = false;
                        if (s == 1) ok = w.add_transition(i, i, cc, t2);
                        if (ok && w.genus_window_ok(i)) {
                            cur.push_back(-s);
                            expand(w, i + 1);
                            cur.pop_back();
                        }
                        if (s == 1 && ok) w.remove_transition(i, i, cc, t2);
                        w.open_need -= s - 1;
                        ++w.rem[s];
                        --w.nparts;
                    }
                } else if (!(w.singleton_free && i == w.n)) {
                    int p = w.nparts++;
                    w.target[p] = w.n;
                    w.count[p] = 1;
                    w.pmin[p] = w.plast[p] = i;
                    w.part_of[i] = p;
                    cur.push_back(-1);
                    expand(w, i + 1);
                    cur.pop_back();
                    --w.nparts;
                }
            };
            Walker w0;
            w0.init(n, opt);
            expand(w0, 1);
        }

        results.resize(prefixes.size());
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= prefixes.size() || cancel.load()) return;
                LocalTable local;
                Driver<std::function<void(Walker&, int)>> d{
                    Walker{}, opt, [&](Walker& w, int g) { ++local[{leaf_key(w), g}]; }};
                d.w.init(n, opt);
                d.w.shared_visited = &shared_visited;
                d.w.cancel = &cancel;
                d.w.check_every = 1 << 10;
                d.w.next_check = d.w.check_every;
                // replay prefix
                const auto& pre = prefixes[idx];
                for (size_t j = 0; j < pre.size(); ++j) {
                    int i = static_cast<int>(j) + 1;
                    int c = pre[j];
                    if (c >= 0) {
                        int p = c, a = d.w.plast[p];
                        bool closes = d.w.typed && d.w.count[p] + 1 == d.w.target[p];
                        bool cc1 = false, t1 = false;
                        d.w.part_of[i] = p;  // must be set before add_transition inspects part sizes
                        d.w.add_transition(a, i, cc1, t1);
                        d.w.plast[p] = i;
                        ++d.w.count[p];
                        --d.w.open_need;
                        if (closes) {
                            bool cc2 = false, t2 = false;
                            d.w.add_transition(i, d.w.pmin[p], cc2, t2);
                        }
                    } else {
                        int s = d.w.typed ? -c : n;
                        int p = d.w.nparts++;
                        d.w.target[p] = s;
                        d.w.count[p] = 1;
                        d.w.pmin[p] = d.w.plast[p] = i;
                        d.w.part_of[i] = p;
                        if (d.w.typed) {
                            --d.w.rem[s];
                            d.w.open_need += s - 1;
                        }
                        if (s == 1) {
                            bool cc = false, t2 = false;
                            d.w.add_transition(i, i, cc, t2);
                        }
                    }
                }
                d.place(static_cast<int>(pre.size()) + 1);
                shared_visited += d.w.visited % d.w.check_every;
                results[idx] = std::move(local);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (opt.budget && shared_visited.load() > opt.budget) throw BudgetExceeded(opt.budget);
        if (cancel.load()) throw BudgetExceeded(opt.budget);
    }

    for (const auto& local : results) {
        for (const auto& [key, cnt] : local) {
            PartitionType t;
            for (int s : key.first) t.mult[s]++;
            table.cells[{t, key.second}] += cnt;
        }
    }
    return table;
}

BigInt partition_count_big(int n, const PartitionType& type) {
    if (type.n() != n) throw std::invalid_argument("partition_count: type does not sum to n");
    BigInt denom = 1;
    for (auto [size, m] : type.mult) {
        denom *= factorial_big(m);
        BigInt f = factorial_big(size);
        for (int i = 0; i < m; ++i) denom *= f;
    }
    return factorial_big(n) / denom;
}

std::uint64_t partition_count(int n, const PartitionType& type) {
    return to_u64(partition_count_big(n, type), "partition_count");
}

BigInt kreweras_count_big(int n, const PartitionType& type) {
    if (type.n() != n) throw std::invalid_argument("kreweras_count: type does not sum to n");
    int r = n + 1 - type.part_count();
    BigInt denom = factorial_big(r);
    for (auto [size, m] : type.mult) denom *= factorial_big(m);
    return factorial_big(n) / denom;
}

std::uint64_t kreweras_count(int n, const PartitionType& type) {
    return to_u64(kreweras_count_big(n, type), "kreweras_count");
}

BigInt bell_number(int n) {
    // Bell triangle
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const BigInt& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::vector<OrbitRecord> orbit_census(int n, const EnumOptions& opt) {
    std::map<std::string, OrbitRecord> orbits;
    std::uint64_t total = 0;
    for_each_partition(n, opt, [&](const Partition& p, int) {
        ++total;
        Partition canon = p.canonical();
        std::string key = canon.str();
        auto it = orbits.find(key);
        if (it == orbits.end()) {
            int stab = canon.stabilizer_order();
            OrbitRecord rec{std::move(canon), stab, static_cast<std::uint64_t>(n / stab)};
            orbits.emplace(std::move(key), std::move(rec));
        }
    });
    std::vector<OrbitRecord> out;
    std::uint64_t length_sum = 0;
    for (auto& [k, rec] : orbits) {
        length_sum += rec.orbit_length;
        out.push_back(std::move(rec));
    }
    if (length_sum != total)
        throw std::logic_error("orbit_census: orbit lengths do not add up to the labeled count");
    return out;
}

Poly moment_polynomial(int n, std::uint64_t budget) {
    EnumOptions opt;
    opt.budget = budget;
    GenusCountTable t = count_by_genus(n, opt);
    Poly out;
    for (const auto& [cell, cnt] : t.cells) {
        const auto& [type, g] = cell;
        Monomial m;
        if (g > 0) m.powers.emplace_back(var::eps, g);
        for (auto [size, mm] : type.mult) m.powers.emplace_back(var::kappa(size), mm);
        out += Poly(std::move(m), Rat(BigInt(cnt)));
    }
    return out;
}

SingletonCheck singleton_insertion_check(int n, const PartitionType& type, int genus,
                                         std::uint64_t budget) {
    if (type.n() != n) throw std::invalid_argument("singleton_insertion_check: type does not sum to n");
    int r = type.mult.contains(1) ? type.mult.at(1) : 0;
    SingletonCheck res;
    EnumOptions opt;
    opt.type = type;
    opt.genus = genus;
    opt.budget = budget;
    res.with_singletons = count_by_genus(n, opt).total();
    PartitionType rest = type;
    rest.mult.erase(1);
    BigInt rhs;
    if (rest.mult.empty()) {
        rhs = genus == 0 ? 1 : 0;  // all singletons: only the genus-0 diagram remains
    } else {
        EnumOptions opt2;
        opt2.type = rest;
        opt2.genus = genus;
        opt2.budget = budget;
        rhs = BigInt(count_by_genus(n - r, opt2).total());
    }
    rhs *= binomial_big(n, r);
    res.predicted = to_u64(rhs, "singleton_insertion_check");
    res.ok = res.with_singletons == res.predicted;
    return res;
}

detail::ClassCounts detail::classified_count(int n, const PartitionType& type, int genus,
                                             std::uint64_t budget, int threads) {
    (void)threads;
    EnumOptions opt;
    opt.type = type;
    opt.genus = genus;
    opt.klass = ClassFilter::semiprimitive;  // prune, then split on the counter
    opt.budget = budget;
    detail::ClassCounts out;
    // run the pruned walk once, classifying leaves by the 2-cycle counter
    if (type.n() != n) throw std::invalid_argument("classified_count: type does not sum to n");
    Driver<std::function<void(Walker&, int)>> d{Walker{}, opt, [&](Walker& w, int) {
                                                    if (w.two_cycles == 0)
                                                        ++out.primitive;
                                                    else
                                                        ++out.semiprimitive;
                                                }};
    d.opt.klass = ClassFilter::all;  // classification handled in the sink
    d.w.init(n, opt);
    d.place(1);
    if (d.stopped || (opt.budget && d.w.visited > opt.budget)) throw BudgetExceeded(opt.budget);
    return out;
}

}  // namespace genuspart
