#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cpt/errors.hpp"

namespace cpt {

class Base;

/// Canonical key of a symmetric tensor entry / multi-hypergraph edge: the
/// sorted m-tuple of vertex indices over [n]. Two raw tuples that are
/// permutations of each other canonicalize to the same MultisetIndex, so a
/// tensor stored by these keys is symmetric by construction.
///
/// Vertices are 1-based throughout, matching the usual [n] convention.
class MultisetIndex {
public:
    MultisetIndex() = default;

    /// Sorted copy of `raw`. Throws DomainError naming the offending position
    /// when an index falls outside [1, dim]; requires raw.size() >= 2.
    static MultisetIndex canonical(std::vector<int> raw, int dim);

    const std::vector<int>& entries() const { return entries_; }
    int order() const { return static_cast<int>(entries_.size()); }
    int dim() const { return dim_; }

    Base base() const;
    bool contains(int vertex) const;
    int multiplicity(int vertex) const;

    /// Count of raw index tuples in that canonicalize to this key:
    /// m! / prod(multiplicities!).
    unsigned long long ordered_count() const;

    auto operator<=>(const MultisetIndex&) const = default;

private:
    MultisetIndex(std::vector<int> sorted, int dim) : entries_(std::move(sorted)), dim_(dim) {}

    std::vector<int> entries_; // sorted ascending, compared first: lexicographic order
    int dim_ = 0;
};

/// Set of distinct vertices of an edge or index multiset, kept sorted.
class Base {
public:
    Base() = default;

    /// Sorts and deduplicates; throws DomainError on vertices outside [1, dim].
    Base(std::vector<int> vertices, int dim);

    const std::vector<int>& vertices() const { return vertices_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    bool empty() const { return vertices_.empty(); }
    int dim() const { return dim_; }

    bool contains(int vertex) const;
    bool subset_of(const Base& other) const;

    /// Bitmask with bit (v-1) set per vertex v; dim must be <= 64.
    std::uint64_t mask() const;
    static Base from_mask(std::uint64_t mask, int dim);

    auto operator<=>(const Base&) const = default;

private:
    std::vector<int> vertices_; // sorted ascending, distinct
    int dim_ = 0;
};

/// Named free-function form of MultisetIndex::canonical.
MultisetIndex canonicalize(const std::vector<int>& raw, int dim);

Base base_of(const MultisetIndex& idx);

/// Majorization between two index multisets: a <= b iff B(a) is a subset of
/// B(b). Both directions reported; similar means both hold (equal bases).
struct MajorizationRelation {
    bool a_below; // B(a) subset of B(b)
    bool b_below;

    bool similar() const { return a_below && b_below; }
    bool incomparable() const { return !a_below && !b_below; }
    bool a_strictly_below() const { return a_below && !b_below; }
    bool b_strictly_below() const { return b_below && !a_below; }
};

/// Throws DomainError when the operands disagree on order or dimension.
MajorizationRelation majorizes(const MultisetIndex& a, const MultisetIndex& b);

/// All canonical m-multisets whose base is contained in `base`: exactly
/// C(r+m-1, m) of them for r = base.size(), in lexicographic order.
/// Throws DomainError on an empty base.
std::vector<MultisetIndex> complete_multisets(const Base& base, int order);

/// The same complete m-multiset as raw ordered tuples: exactly r^m of them,
/// in lexicographic order.
std::vector<std::vector<int>> complete_ordered_tuples(const Base& base, int order);

unsigned long long ordered_count(const MultisetIndex& idx);

} // namespace cpt
