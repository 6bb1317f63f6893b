#include "cpt/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cpt {

namespace {

void check_shape(int order, int dim) {
    if (order < 2) throw DomainError("uniformity must be >= 2, got " + std::to_string(order));
    if (dim < 1) throw DomainError("vertex count must be >= 1, got " + std::to_string(dim));
}

void require_edges(const MultiHypergraph& hypergraph, const char* what) {
    if (hypergraph.edges().empty()) {
        throw DomainError(std::string(what) + " undefined for an empty edge set");
    }
}

std::vector<Base> edge_bases(const MultiHypergraph& hypergraph) {
    std::set<Base> bases;
    for (const auto& edge : hypergraph.edges()) bases.insert(edge.base());
    return {bases.begin(), bases.end()};
}

} // namespace

MultiHypergraph::MultiHypergraph(int order, int dim) : order_(order), dim_(dim) {
    check_shape(order, dim);
}

MultiHypergraph::MultiHypergraph(int order, int dim, std::set<MultisetIndex> edges)
    : order_(order), dim_(dim), edges_(std::move(edges)) {
    check_shape(order, dim);
    for (const auto& edge : edges_) {
        if (edge.order() != order || edge.dim() != dim) {
            throw DomainError("edge does not match hypergraph shape (m=" + std::to_string(order) +
                              ", n=" + std::to_string(dim) + ")");
        }
    }
}

MultiHypergraph MultiHypergraph::from_edge_lists(int order, int dim,
                                                 const std::vector<std::vector<int>>& raw_edges) {
    check_shape(order, dim);
    std::set<MultisetIndex> edges;
    for (const auto& raw : raw_edges) {
        if (static_cast<int>(raw.size()) != order) {
            throw DomainError("edge has " + std::to_string(raw.size()) + " vertices, uniformity is " +
                              std::to_string(order));
        }
        edges.insert(canonicalize(raw, dim));
    }
    return MultiHypergraph(order, dim, std::move(edges));
}

MultiHypergraph from_pattern(const ZeroOneTensor& tensor) {
    return MultiHypergraph(tensor.order(), tensor.dim(), tensor.support());
}

ZeroOneTensor associated_tensor(const MultiHypergraph& hypergraph) {
    return ZeroOneTensor(hypergraph.order(), hypergraph.dim(), hypergraph.edges());
}

bool is_associated(const SymTensor& tensor, const MultiHypergraph& hypergraph) {
    if (tensor.order() != hypergraph.order() || tensor.dim() != hypergraph.dim()) {
        throw DomainError("tensor is (m=" + std::to_string(tensor.order()) + ", n=" +
                          std::to_string(tensor.dim()) + "), hypergraph is (m=" +
                          std::to_string(hypergraph.order()) + ", n=" +
                          std::to_string(hypergraph.dim()) + ")");
    }
    return pattern(tensor).support() == hypergraph.edges();
}

RankCorank rank_corank(const MultiHypergraph& hypergraph) {
    require_edges(hypergraph, "rank");
    int max_size = 0;
    int min_size = hypergraph.order() + 1;
    for (const auto& edge : hypergraph.edges()) {
        const int size = edge.base().size();
        max_size = std::max(max_size, size);
        min_size = std::min(min_size, size);
    }
    return RankCorank{max_size, min_size};
}

std::vector<Base> maximal_bases(const MultiHypergraph& hypergraph) {
    require_edges(hypergraph, "maximal bases");
    const auto bases = edge_bases(hypergraph);
    std::vector<Base> result;
    for (const auto& candidate : bases) {
        const bool dominated = std::any_of(bases.begin(), bases.end(), [&](const Base& other) {
            return other != candidate && candidate.subset_of(other);
        });
        if (!dominated) result.push_back(candidate);
    }
    return result;
}

std::vector<Base> minimal_bases(const MultiHypergraph& hypergraph) {
    require_edges(hypergraph, "minimal bases");
    const auto bases = edge_bases(hypergraph);
    std::vector<Base> result;
    for (const auto& candidate : bases) {
        const bool dominates = std::any_of(bases.begin(), bases.end(), [&](const Base& other) {
            return other != candidate && other.subset_of(candidate);
        });
        if (!dominates) result.push_back(candidate);
    }
    return result;
}

PropertyRResult has_property_R(const MultiHypergraph& hypergraph) {
    for (const auto& edge : hypergraph.edges()) {
        for (const auto& required : complete_multisets(edge.base(), hypergraph.order())) {
            if (!hypergraph.has_edge(required)) {
                return PropertyRResult{false, PropertyRViolation{edge, required}};
            }
        }
    }
    return PropertyRResult{};
}

DominanceResult zero_entry_dominance(const SymTensor& tensor) {
    std::vector<int> all_vertices(static_cast<std::size_t>(tensor.dim()));
    std::iota(all_vertices.begin(), all_vertices.end(), 1);
    const auto all_keys =
        complete_multisets(Base(std::move(all_vertices), tensor.dim()), tensor.order());

    for (const auto& zero_key : all_keys) {
        if (!tensor.at(zero_key).is_zero()) continue;
        const Base zero_base = zero_key.base();
        for (const auto& other : all_keys) {
            if (tensor.at(other).is_zero()) continue;
            if (zero_base.subset_of(other.base())) {
                return DominanceResult{false, DominanceViolation{zero_key, other}};
            }
        }
    }
    return DominanceResult{};
}

BranchPartition branches(const MultiHypergraph& hypergraph) {
    const int n = hypergraph.dim();
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (const auto& edge : hypergraph.edges()) {
        const Base base = edge.base();
        const auto& verts = base.vertices();
        for (int v : verts) covered[v] = true;
        for (std::size_t k = 1; k < verts.size(); ++k) {
            parent[find(verts[k])] = find(verts[0]);
        }
    }

    BranchPartition result;
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        if (covered[v]) groups[find(v)].push_back(v);
        else result.isolated.push_back(v);
    }
    for (int root = 1; root <= n; ++root) {
        if (!groups[root].empty()) result.branches.emplace_back(std::move(groups[root]), n);
    }
    std::sort(result.branches.begin(), result.branches.end());
    return result;
}

EdgeCounts edge_counts(const MultiHypergraph& hypergraph) {
    unsigned long long ordered = 0;
    for (const auto& edge : hypergraph.edges()) ordered += edge.ordered_count();
    return EdgeCounts{hypergraph.edges().size(), ordered};
}

} // namespace cpt
