#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cpt/multiset_index.hpp"
#include "cpt/sym_tensor.hpp"

namespace cpt {

/// m-uniform multi-hypergraph on vertex set [n]: edges are canonical
/// m-multisets of vertices, stored as a duplicate-free set (edge multiplicity
/// is not modeled — the (0,1) associated tensor cannot see it).
class MultiHypergraph {
public:
    MultiHypergraph(int order, int dim);
    MultiHypergraph(int order, int dim, std::set<MultisetIndex> edges);

    /// Canonicalizes each raw edge tuple; duplicates collapse silently.
    static MultiHypergraph from_edge_lists(int order, int dim,
                                           const std::vector<std::vector<int>>& raw_edges);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::set<MultisetIndex>& edges() const { return edges_; }
    bool has_edge(const MultisetIndex& edge) const { return edges_.count(edge) > 0; }

    bool operator==(const MultiHypergraph&) const = default;

private:
    int order_;
    int dim_;
    std::set<MultisetIndex> edges_;
};

/// The support of a (0,1) tensor as an edge set; inverse of associated_tensor.
MultiHypergraph from_pattern(const ZeroOneTensor& tensor);

/// The unique (0,1) tensor whose support equals the edge set.
ZeroOneTensor associated_tensor(const MultiHypergraph& hypergraph);

/// True iff support(tensor) equals the edge set exactly.
/// Throws DomainError when order or dimension disagree.
bool is_associated(const SymTensor& tensor, const MultiHypergraph& hypergraph);

struct RankCorank {
    int rank;   // maximum base size over edges
    int corank; // minimum base size over edges
};

/// Throws DomainError on an empty edge set ("rank undefined").
RankCorank rank_corank(const MultiHypergraph& hypergraph);

/// Inclusion-maximal (resp. -minimal) elements of the set of edge bases, in
/// lexicographic order. Throws DomainError on an empty edge set.
std::vector<Base> maximal_bases(const MultiHypergraph& hypergraph);
std::vector<Base> minimal_bases(const MultiHypergraph& hypergraph);

/// An edge whose complete m-multiset is not fully contained in the edge set,
/// together with the first multiset it is missing.
struct PropertyRViolation {
    MultisetIndex edge;
    MultisetIndex missing;

    bool operator==(const PropertyRViolation&) const = default;
};

struct PropertyRResult {
    bool holds = true;
    std::optional<PropertyRViolation> violation;
};

/// Property R: for every edge, every canonical m-multiset over its base is an
/// edge. Vacuously true for the empty edge set. On failure reports the
/// lexicographically first violating (edge, missing) pair.
PropertyRResult has_property_R(const MultiHypergraph& hypergraph);

struct DominanceViolation {
    MultisetIndex zero_index;    // a_sigma = 0
    MultisetIndex nonzero_index; // B(tau) contains B(sigma) yet a_tau != 0

    bool operator==(const DominanceViolation&) const = default;
};

struct DominanceResult {
    bool holds = true;
    std::optional<DominanceViolation> violation;
};

/// Zero-entry dominance: a zero entry at base B forces zeros at every index
/// whose base contains B. Equivalent to Property R of the pattern hypergraph.
DominanceResult zero_entry_dominance(const SymTensor& tensor);

/// Connectivity under shared vertices of edge bases, plus the edge-free rest.
struct BranchPartition {
    std::vector<Base> branches; // disjoint, each holding at least one edge base
    std::vector<int> isolated;  // vertices incident to no edge
};

BranchPartition branches(const MultiHypergraph& hypergraph);

struct EdgeCounts {
    unsigned long long distinct; // canonical edges
    unsigned long long ordered;  // ordered index tuples, i.e. sum of multinomials
};

EdgeCounts edge_counts(const MultiHypergraph& hypergraph);

} // namespace cpt
