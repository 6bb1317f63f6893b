#pragma once

#include <optional>
#include <vector>

#include "cpt/certificate.hpp"
#include "cpt/hypergraph.hpp"
#include "cpt/sym_tensor.hpp"

namespace cpt {

/// Precondition failure of construct_cp_tensor, carrying the Property R
/// counterexample.
class PropertyRError : public PreconditionError {
public:
    PropertyRError(PropertyRViolation violation, const std::string& what)
        : PreconditionError(what), violation_(std::move(violation)) {}

    const PropertyRViolation& violation() const { return violation_; }

private:
    PropertyRViolation violation_;
};

/// Lexicographically first nonempty proper subset I of [n] with every entry
/// zero whose index tuple has exactly its first position inside I, or nullopt
/// when the tensor is irreducible. The scan is exponential in n and refuses
/// (CapabilityError) beyond `exhaustive_limit`.
std::optional<Base> reducibility_witness(const SymTensor& tensor, int exhaustive_limit = 12);

/// Permutation-similarity decomposition into branch blocks plus a zero block.
/// Blocks follow the branches of the pattern; applying `permutation` to the
/// input reproduces direct_sum(blocks...) padded with the zero block.
struct DecompositionReport {
    std::vector<int> permutation;        // permutation[v-1] = new label of vertex v
    std::vector<SymTensor> blocks;       // one per branch, relabeled to its own [n_i]
    std::vector<Base> branch_vertex_sets; // original vertices per block
    int zero_block_dim = 0;              // isolated vertices, moved to the tail
};

DecompositionReport decompose(const SymTensor& tensor);

/// Outcome of the structural {0,1}-cp decision: either a certificate (one
/// indicator vector per branch, disjoint supports) or the first branch whose
/// block is not all-ones plus one key it is missing.
struct ZeroOneCpVerdict {
    bool cp = false;
    std::optional<CpCertificate> certificate;
    std::optional<Base> witness_branch;
    std::optional<MultisetIndex> missing_key;
};

/// A (0,1) tensor is {0,1}-cp iff every branch of its pattern induces the
/// all-ones block. Isolated vertices join the zero block and never affect
/// the verdict.
ZeroOneCpVerdict is_zero_one_cp(const ZeroOneTensor& tensor);

/// A multi-hypergraph admits some {0,1}-cp associated tensor iff it has
/// Property R.
bool is_cp_multihypergraph(const MultiHypergraph& hypergraph);

struct CpConstruction {
    SymTensor tensor;
    CpCertificate certificate;
};

/// Constructive direction: one indicator vector per maximal base. The output
/// tensor is associated with the input and its entries count the covering
/// maximal bases. Throws PropertyRError when Property R fails.
CpConstruction construct_cp_tensor(const MultiHypergraph& hypergraph);

/// Definitional check: cp_sum(certificate) equals the tensor entry-for-entry.
/// Throws DomainError when order or dimension disagree.
bool verify_certificate(const SymTensor& tensor, const CpCertificate& certificate);

/// Ordered-edge-count identity N = sum of (branch dimension)^m. Guaranteed
/// for disjoint unions of complete blocks; reported (holds=false) otherwise.
struct CorollaryReport {
    bool holds = false;
    unsigned long long ordered_edges = 0;   // lhs
    unsigned long long branch_power_sum = 0; // rhs
    std::vector<int> branch_dims;
};

CorollaryReport corollary_check(const MultiHypergraph& hypergraph);

} // namespace cpt
