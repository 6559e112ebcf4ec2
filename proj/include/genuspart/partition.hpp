#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace genuspart {

// Permutation of {1..n}. Images are 1-based; image(0) is unused.
class Permutation {
  public:
    explicit Permutation(int n);
    static Permutation from_images(std::vector<int> images_1based);

    int n() const { return n_; }
    int image(int i) const { return img_[i]; }
    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;  // each cycle starts at its minimum
    int cycle_count() const;
    std::string cycle_string() const;  // "(1,3,4,6,7)(2,5,9)(8)(10)"

    bool operator==(const Permutation&) const = default;

  private:
    int n_;
    std::vector<int> img_;  // size n+1, img_[0] = 0
};

// Multiset of part sizes, e.g. [1^2 3 5] for two singletons, a 3-part and a 5-part.
struct PartitionType {
    std::map<int, int> mult;  // part size -> multiplicity, sizes >= 1

    int n() const;           // sum of size*multiplicity
    int part_count() const;  // sum of multiplicities
    bool singleton_free() const { return !mult.contains(1); }

    std::string str() const;  // "[1^2 3 5]"
    // accepts "2^4", "1^2 3 5", with optional surrounding brackets
    static PartitionType parse(const std::string& text);

    auto operator<=>(const PartitionType&) const = default;
};

// A set partition of {1..n}. Parts are stored sorted: elements ascending within
// a part, parts ordered by smallest element. The empty partition (n = 0) is a
// legal value only as the endpoint of a reduction; parsing rejects it.
class Partition {
  public:
    static Partition from_parts(int n, std::vector<std::vector<int>> parts);
    static Partition empty();
    // text form "1,3,4,6,7|2,5,9|8|10"; n is the largest element
    static Partition parse(const std::string& text);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_count() const { return static_cast<int>(parts_.size()); }
    PartitionType type() const;

    // tau: each part acts as an increasing cycle
    Permutation tau() const;
    // face permutation sigma tau^{-1} where sigma = (1,2,...,n):
    // i -> (tau^{-1}(i) mod n) + 1
    Permutation face_permutation() const;
    int face_count() const;
    // from 2g = n + 1 - #parts - #faces; throws std::logic_error on odd parity
    int genus() const;

    // each element i replaced by ((i - 1 + k) mod n) + 1; k may be negative
    Partition rotated(int k) const;
    // lexicographically smallest rotation; constant on rotation orbits
    Partition canonical() const;
    // smallest d > 0 with rotated(d) == *this; divides n
    int stabilizer_order() const;

    std::string str() const;  // parse() round-trips this

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    Partition() : n_(0) {}
    int n_;
    std::vector<std::vector<int>> parts_;
};

// largest genus a partition of [n] can have: floor((n-1)/2)
int genus_max(int n);
// largest genus for a given type: floor((n - #parts)/2)
int genus_max(int n, const PartitionType& type);

}  // namespace genuspart
