#include "cpt/multiset_index.hpp"

#include <algorithm>
#include <string>

namespace cpt {

namespace {

void check_dim(int dim) {
    if (dim < 1) throw DomainError("dimension must be positive, got " + std::to_string(dim));
}

} // namespace

MultisetIndex MultisetIndex::canonical(std::vector<int> raw, int dim) {
    check_dim(dim);
    if (raw.size() < 2) {
        throw DomainError("index tuple must have order >= 2, got " + std::to_string(raw.size()));
    }
    for (std::size_t pos = 0; pos < raw.size(); ++pos) {
        if (raw[pos] < 1 || raw[pos] > dim) {
            throw DomainError("index " + std::to_string(raw[pos]) + " at position " +
                              std::to_string(pos + 1) + " out of range [1, " +
                              std::to_string(dim) + "]");
        }
    }
    std::sort(raw.begin(), raw.end());
    return MultisetIndex(std::move(raw), dim);
}

Base MultisetIndex::base() const {
    std::vector<int> distinct;
    distinct.reserve(entries_.size());
    for (int v : entries_) {
        if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
    }
    return Base(std::move(distinct), dim_);
}

bool MultisetIndex::contains(int vertex) const {
    return std::binary_search(entries_.begin(), entries_.end(), vertex);
}

int MultisetIndex::multiplicity(int vertex) const {
    const auto [lo, hi] = std::equal_range(entries_.begin(), entries_.end(), vertex);
    return static_cast<int>(hi - lo);
}

unsigned long long MultisetIndex::ordered_count() const {
    // m! / prod(multiplicity!) computed as a product of binomials to stay
    // within 64 bits for any order this library handles.
    unsigned long long count = 1;
    int remaining = order();
    std::size_t i = 0;
    while (i < entries_.size()) {
        std::size_t j = i;
        while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
        const int mult = static_cast<int>(j - i);
        // C(remaining, mult)
        unsigned long long binom = 1;
        for (int k = 1; k <= mult; ++k) {
            binom = binom * static_cast<unsigned long long>(remaining - mult + k) /
                    static_cast<unsigned long long>(k);
        }
        count *= binom;
        remaining -= mult;
        i = j;
    }
    return count;
}

Base::Base(std::vector<int> vertices, int dim) : vertices_(std::move(vertices)), dim_(dim) {
    check_dim(dim_);
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (int v : vertices_) {
        if (v < 1 || v > dim_) {
            throw DomainError("vertex " + std::to_string(v) + " out of range [1, " +
                              std::to_string(dim_) + "]");
        }
    }
}

bool Base::contains(int vertex) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), vertex);
}

bool Base::subset_of(const Base& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

std::uint64_t Base::mask() const {
    if (dim_ > 64) throw CapabilityError("bitmask form limited to dimension <= 64");
    std::uint64_t m = 0;
    for (int v : vertices_) m |= std::uint64_t{1} << (v - 1);
    return m;
}

Base Base::from_mask(std::uint64_t mask, int dim) {
    std::vector<int> verts;
    for (int v = 1; v <= dim; ++v) {
        if (mask & (std::uint64_t{1} << (v - 1))) verts.push_back(v);
    }
    return Base(std::move(verts), dim);
}

MultisetIndex canonicalize(const std::vector<int>& raw, int dim) {
    return MultisetIndex::canonical(raw, dim);
}

Base base_of(const MultisetIndex& idx) { return idx.base(); }

MajorizationRelation majorizes(const MultisetIndex& a, const MultisetIndex& b) {
    if (a.order() != b.order()) {
        throw DomainError("majorization between indices of different order (" +
                          std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
    }
    if (a.dim() != b.dim()) {
        throw DomainError("majorization between indices of different dimension (" +
                          std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    }
    const Base ba = a.base();
    const Base bb = b.base();
    return MajorizationRelation{ba.subset_of(bb), bb.subset_of(ba)};
}

std::vector<MultisetIndex> complete_multisets(const Base& base, int order) {
    if (base.empty()) throw DomainError("complete multiset of an empty base");
    const auto& verts = base.vertices();
    const int r = base.size();

    // Nondecreasing digit strings over the sorted base, in lexicographic
    // order; each maps directly to a canonical MultisetIndex.
    std::vector<MultisetIndex> result;
    std::vector<int> digits(static_cast<std::size_t>(order), 0);
    while (true) {
        std::vector<int> entries(static_cast<std::size_t>(order));
        for (int k = 0; k < order; ++k) entries[k] = verts[digits[k]];
        result.push_back(MultisetIndex::canonical(std::move(entries), base.dim()));

        int pos = order - 1;
        while (pos >= 0 && digits[pos] == r - 1) --pos;
        if (pos < 0) break;
        const int next = digits[pos] + 1;
        for (int k = pos; k < order; ++k) digits[k] = next;
    }
    return result;
}

std::vector<std::vector<int>> complete_ordered_tuples(const Base& base, int order) {
    if (base.empty()) throw DomainError("complete multiset of an empty base");
    const auto& verts = base.vertices();
    const int r = base.size();

    std::vector<std::vector<int>> result;
    std::vector<int> digits(static_cast<std::size_t>(order), 0);
    while (true) {
        std::vector<int> tuple(static_cast<std::size_t>(order));
        for (int k = 0; k < order; ++k) tuple[k] = verts[digits[k]];
        result.push_back(std::move(tuple));

        int pos = order - 1;
        while (pos >= 0 && digits[pos] == r - 1) --pos;
        if (pos < 0) break;
        ++digits[pos];
        for (int k = pos + 1; k < order; ++k) digits[k] = 0;
    }
    return result;
}

unsigned long long ordered_count(const MultisetIndex& idx) { return idx.ordered_count(); }

} // namespace cpt
