#pragma once

#include "genuspart/partition.hpp"
#include "genuspart/polynomial.hpp"
#include "genuspart/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genuspart {

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                             " candidate partitions exceeded"),
          budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

  private:
    std::uint64_t budget_;
};

// Which reduced class a partition would fall into if enumerated with a class
// filter. "all" places no constraint.
enum class ClassFilter { all, primitive, semiprimitive };

struct EnumOptions {
    std::optional<PartitionType> type;  // restrict to one part-size multiset
    std::optional<int> genus;           // keep only this genus
    bool singleton_free = false;
    ClassFilter klass = ClassFilter::all;
    std::uint64_t budget = 100'000'000;  // visited complete partitions; 0 = unlimited
    int threads = 1;
};

// Streams every matching partition in a fixed deterministic order (elements
// 1..n assigned depth-first: join existing parts in creation order, then open
// a new part, smaller target sizes first). Single-threaded.
void for_each_partition(int n, const EnumOptions& opt,
                        const std::function<void(const Partition&, int genus)>& visit);

// One (type, genus) -> count table; cells are only present when nonzero.
struct GenusCountTable {
    int n = 0;
    std::map<std::pair<PartitionType, int>, std::uint64_t> cells;

    std::uint64_t total() const;
    std::uint64_t total_for_genus(int g) const;
    std::uint64_t at(const PartitionType& t, int g) const;  // 0 when absent
};

// Counts matching partitions grouped by (type, genus). Honors opt.threads.
GenusCountTable count_by_genus(int n, const EnumOptions& opt = {});

// number of partitions of [n] with the given part-size multiset:
// n! / prod_l (alpha_l! * l!^alpha_l)
BigInt partition_count_big(int n, const PartitionType& type);
std::uint64_t partition_count(int n, const PartitionType& type);

// genus-0 count for a type: n! / ((n+1-parts)! * prod_l alpha_l!)
BigInt kreweras_count_big(int n, const PartitionType& type);
std::uint64_t kreweras_count(int n, const PartitionType& type);

BigInt bell_number(int n);

// One rotation orbit: the canonical representative, the order of its
// stabilizer inside the cyclic group, and the orbit length n/stabilizer.
struct OrbitRecord {
    Partition representative = Partition::empty();
    int stabilizer_order = 1;
    std::uint64_t orbit_length = 0;
};

// Orbits of the matching partitions under rotation, sorted by representative.
// Checks that orbit lengths add up to the labeled count.
std::vector<OrbitRecord> orbit_census(int n, const EnumOptions& opt = {});

// Sum over all partitions of [n] of eps^genus * prod kappa_{part sizes}:
// the polynomial expressing the n-th moment in cumulants with genus marked.
Poly moment_polynomial(int n, std::uint64_t budget = 100'000'000);

// Checks the singleton relation: the count for (full type containing r
// singletons, genus g) must equal binom(n, r) times the count for the
// singleton-free remainder at n - r.
struct SingletonCheck {
    std::uint64_t with_singletons = 0;
    std::uint64_t predicted = 0;  // binom(n,r) * count without singletons
    bool ok = false;
};
SingletonCheck singleton_insertion_check(int n, const PartitionType& type, int genus,
                                         std::uint64_t budget = 100'000'000);

namespace detail {
// Both irreducible-class counts for one (type, genus) cell in a single pruned
// sweep; used by the census.
struct ClassCounts {
    std::uint64_t primitive = 0;
    std::uint64_t semiprimitive = 0;
};
ClassCounts classified_count(int n, const PartitionType& type, int genus, std::uint64_t budget,
                             int threads);
}  // namespace detail

}  // namespace genuspart
