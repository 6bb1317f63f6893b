#include "cpt/cp_decision.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace cpt {

namespace {

std::string index_str(const MultisetIndex& key) {
    std::string s = "(";
    for (std::size_t i = 0; i < key.entries().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key.entries()[i]);
    }
    return s + ")";
}

// Visits the nonempty proper subsets of [n] in lexicographic order of their
// sorted vertex lists ({1}, {1,2}, {1,2,3}, ..., {1,3}, ..., {2}, ...) until
// `visit` returns true; reports whether the walk was stopped.
bool lex_subsets(int n, std::vector<int>& prefix, int next,
                 const std::function<bool(const std::vector<int>&)>& visit) {
    for (int v = next; v <= n; ++v) {
        prefix.push_back(v);
        const bool proper = static_cast<int>(prefix.size()) < n;
        if ((proper && visit(prefix)) || lex_subsets(n, prefix, v + 1, visit)) {
            prefix.pop_back();
            return true;
        }
        prefix.pop_back();
    }
    return false;
}

} // namespace

std::optional<Base> reducibility_witness(const SymTensor& tensor, int exhaustive_limit) {
    const int n = tensor.dim();
    if (n > exhaustive_limit) {
        throw CapabilityError("reducibility scan over 2^" + std::to_string(n) +
                              " subsets exceeds the exhaustive limit " +
                              std::to_string(exhaustive_limit));
    }
    if (n < 2) return std::nullopt; // no nonempty proper subset exists

    // I is a witness iff no nonzero key has exactly one of its m slots in I.
    std::optional<Base> witness;
    std::function<bool(const std::vector<int>&)> check = [&](const std::vector<int>& subset) {
        const Base candidate(subset, n);
        for (const auto& [key, value] : tensor.entries()) {
            int slots_inside = 0;
            for (int v : key.entries()) {
                if (candidate.contains(v)) ++slots_inside;
            }
            if (slots_inside == 1) return false;
        }
        witness = candidate;
        return true;
    };
    std::vector<int> prefix;
    lex_subsets(n, prefix, 1, check);
    return witness;
}

DecompositionReport decompose(const SymTensor& tensor) {
    const BranchPartition parts = branches(from_pattern(pattern(tensor)));

    DecompositionReport report;
    report.branch_vertex_sets = parts.branches;
    report.zero_block_dim = static_cast<int>(parts.isolated.size());

    report.permutation.assign(static_cast<std::size_t>(tensor.dim()), 0);
    int next_label = 1;
    for (const auto& branch : parts.branches) {
        for (int v : branch.vertices()) report.permutation[v - 1] = next_label++;
    }
    for (int v : parts.isolated) report.permutation[v - 1] = next_label++;

    for (const auto& branch : parts.branches) {
        report.blocks.push_back(principal_subtensor(tensor, branch).tensor);
    }
    return report;
}

ZeroOneCpVerdict is_zero_one_cp(const ZeroOneTensor& tensor) {
    const BranchPartition parts = branches(from_pattern(tensor));

    for (const auto& branch : parts.branches) {
        for (const auto& key : complete_multisets(branch, tensor.order())) {
            if (!tensor.contains(key)) {
                ZeroOneCpVerdict verdict;
                verdict.cp = false;
                verdict.witness_branch = branch;
                verdict.missing_key = key;
                return verdict;
            }
        }
    }

    ZeroOneCpVerdict verdict;
    verdict.cp = true;
    CpCertificate cert(tensor.order(), tensor.dim());
    for (const auto& branch : parts.branches) cert.add(branch, 1);
    verdict.certificate = std::move(cert);
    return verdict;
}

bool is_cp_multihypergraph(const MultiHypergraph& hypergraph) {
    return has_property_R(hypergraph).holds;
}

CpConstruction construct_cp_tensor(const MultiHypergraph& hypergraph) {
    const PropertyRResult r = has_property_R(hypergraph);
    if (!r.holds) {
        const auto& v = *r.violation;
        throw PropertyRError(v, "hypergraph lacks Property R: edge " + index_str(v.edge) +
                                    " requires missing edge " + index_str(v.missing));
    }

    CpCertificate cert(hypergraph.order(), hypergraph.dim());
    if (!hypergraph.edges().empty()) {
        for (const auto& base : maximal_bases(hypergraph)) cert.add(base, 1);
    }
    return CpConstruction{cp_sum(cert), std::move(cert)};
}

bool verify_certificate(const SymTensor& tensor, const CpCertificate& certificate) {
    if (tensor.order() != certificate.order() || tensor.dim() != certificate.dim()) {
        throw DomainError("certificate is (m=" + std::to_string(certificate.order()) + ", n=" +
                          std::to_string(certificate.dim()) + "), tensor is (m=" +
                          std::to_string(tensor.order()) + ", n=" + std::to_string(tensor.dim()) +
                          ")");
    }
    return cp_sum(certificate) == tensor;
}

CorollaryReport corollary_check(const MultiHypergraph& hypergraph) {
    const BranchPartition parts = branches(hypergraph);
    const EdgeCounts counts = edge_counts(hypergraph);

    CorollaryReport report;
    report.ordered_edges = counts.ordered;
    for (const auto& branch : parts.branches) {
        report.branch_dims.push_back(branch.size());
        unsigned long long power = 1;
        for (int k = 0; k < hypergraph.order(); ++k) {
            power *= static_cast<unsigned long long>(branch.size());
        }
        report.branch_power_sum += power;
    }
    report.holds = report.ordered_edges == report.branch_power_sum;
    return report;
}

} // namespace cpt
