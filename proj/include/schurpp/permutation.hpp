#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace schurpp {

/// A bijection on {1..n}, stored as its image sequence.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int img : images_) {
            if (img < 1 || img > int(images_.size()) || seen[img]) {
                throw Error("not a permutation");
            }
            seen[img] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 1);
        return Permutation(std::move(images));
    }

    int size() const { return int(images_.size()); }

    /// sigma(i) for 1-based i.
    int operator()(int i) const { return images_[i - 1]; }

    const std::vector<int>& images() const { return images_; }

    int inversions() const
    {
        int count = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            for (std::size_t j = i + 1; j < images_.size(); ++j) {
                count += images_[i] > images_[j];
            }
        }
        return count;
    }

    int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

    /// (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b)
    {
        std::vector<int> images(b.images_.size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            images[i] = a.images_[b.images_[i] - 1];
        }
        return Permutation(std::move(images));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Calls fn(sigma) for every permutation of {1..n} in lexicographic order.
template <typename Fn>
void for_each_permutation(int n, Fn&& fn)
{
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        fn(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

/// Subset of {1..n} encoded as a bitmask; bit i-1 set iff i is in the subset.
using SubsetMask = std::uint32_t;

inline bool contains(SubsetMask s, int i) { return (s >> (i - 1)) & 1u; }

inline int cardinality(SubsetMask s) { return __builtin_popcount(s); }

/// Calls fn(mask) for every subset of {1..n}.
template <typename Fn>
void for_each_subset(int n, Fn&& fn)
{
    for (SubsetMask s = 0; s < (SubsetMask(1) << n); ++s) {
        fn(s);
    }
}

} // namespace schurpp
