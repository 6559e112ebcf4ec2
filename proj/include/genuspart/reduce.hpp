#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genuspart/partition.hpp"

namespace genuspart {

// Genus-preserving deletions. Each move removes elements from the circle and
// renumbers the survivors 1..m in ascending order.
enum class MoveKind {
    remove_singleton,      // delete a one-element part
    remove_centipede,      // delete a part whose elements form one cyclic run
    remove_adjacent_edge,  // a part contains cyclic neighbours x, x+1: delete one of them
    remove_parallel_line,  // delete a two-element part that bounds a degree-2 face
};

std::string to_string(MoveKind k);

// One applicable move on a concrete partition.
struct Move {
    MoveKind kind;
    std::vector<int> removed;  // ascending labels, in the partition the move applies to

    auto operator<=>(const Move&) const = default;
};

// All applicable moves, in the deterministic priority order used by reduce():
// singletons (ascending), centipedes (by smallest element), adjacent-edge
// contractions (by deleted element), parallel-line deletions (by face, the
// preferred side first).
std::vector<Move> applicable_moves(const Partition& p);

// Applies one move; throws std::logic_error if the deletion changes the genus.
Partition apply_move(const Partition& p, const Move& m);

struct ReductionStep {
    MoveKind kind;
    std::vector<int> removed;  // labels in the partition the step was applied to
    int before_n = 0;
    int after_n = 0;
};

enum class ReducedClass {
    empty,          // nothing left: the partition was a tree-like (genus 0) diagram
    primitive,      // no singleton, no degree-1 face, no degree-2 face
    semiprimitive,  // degree-2 faces exist but each joins two parts of size >= 3
};

std::string to_string(ReducedClass c);

struct ReductionTrace {
    Partition initial = Partition::empty();
    std::vector<ReductionStep> steps;
    Partition reduced = Partition::empty();
    ReducedClass result_class = ReducedClass::empty;
    int genus = 0;  // preserved along the whole trace
};

// True when no part is a singleton, no part contains two cyclic neighbours
// (no degree-1 face of the diagram) and no degree-2 face exists. The empty
// partition is vacuously primitive.
bool is_primitive(const Partition& p);
// True when the only failures of primitivity are degree-2 faces that join two
// parts of size >= 3 each, with at least one such face; no deletion applies.
bool is_semiprimitive(const Partition& p);
// primitive or semiprimitive: no move applies
bool is_irreducible(const Partition& p);

// Bulk forms: repeatedly apply every instance of one move kind (rescanning
// after each deletion) and return the result. Genus-checked per deletion.
Partition remove_singletons(const Partition& p);
Partition remove_centipedes(const Partition& p);
Partition remove_adjacent_edges(const Partition& p);
Partition remove_parallel_lines(const Partition& p);

// Full reduction under the fixed priority order. Every step re-computes the
// genus and throws std::logic_error if it moved.
ReductionTrace reduce(const Partition& p);

struct ConfluenceReport {
    bool consistent = true;  // all random orders reached the deterministic result
    Partition reference = Partition::empty();  // result of the deterministic reduction
    std::uint64_t trials = 0;
};

// Reduces `trials` more times picking uniformly among all applicable moves at
// each step, and compares the endpoints with the deterministic reduction.
// Deleting at different positions renumbers the survivors differently, so the
// endpoints of two orders can be rotations of one another; they are compared
// by canonical form.
ConfluenceReport confluence_check(const Partition& p, std::uint64_t trials, std::uint64_t seed);

// Census of genus-2 irreducible diagrams. For genus 2 the possible part
// profiles are all-doublets, one 3-part, two 3-parts (primitive or
// semiprimitive), or one 4-part, with the rest doublets.
struct CensusRow {
    int n = 0;
    std::uint64_t two_vertices_only = 0;       // [2^(n/2)], primitive
    std::uint64_t one_3vertex = 0;             // [3 2^((n-3)/2)], primitive
    std::uint64_t two_3vertices_prim = 0;      // [3^2 2^((n-6)/2)], primitive
    std::uint64_t two_3vertices_semiprim = 0;  // [3^2 2^((n-6)/2)], semiprimitive
    std::uint64_t one_4vertex = 0;             // [4 2^((n-4)/2)], primitive

    std::uint64_t total() const {
        return two_vertices_only + one_3vertex + two_3vertices_prim + two_3vertices_semiprim +
               one_4vertex;
    }
};

struct CensusTable {
    std::vector<CensusRow> rows;
};

// Counts genus-2 irreducible diagrams for every n in [n_min, n_max].
// budget = 0 means unlimited.
CensusTable census_genus2(int n_min, int n_max, std::uint64_t budget = 0, int threads = 1);

}  // namespace genuspart
