#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cpt/certificate.hpp"
#include "cpt/multiset_index.hpp"
#include "cpt/rational.hpp"

namespace cpt {

class ZeroOneTensor;

/// Order-m, dimension-n symmetric tensor stored sparsely by canonical
/// multiset key. Entries are exact nonnegative rationals; zero entries are
/// never stored. Any query by raw tuple routes through canonicalization, so
/// symmetry holds by construction.
///
/// Immutable after construction; all operations below return new values.
class SymTensor {
public:
    /// Zero tensor. Requires order >= 2 and dim >= 1.
    SymTensor(int order, int dim);

    using RawEntry = std::pair<std::vector<int>, Rational>;

    /// Builds from raw (tuple, value) pairs. Tuples canonicalize; zero values
    /// are dropped. Distinct raw tuples mapping to the same key must agree in
    /// value, otherwise a DomainError names the conflicting key.
    static SymTensor from_entries(int order, int dim, const std::vector<RawEntry>& raw);

    /// Builds from an already-canonical entry map (keys validated, zeros dropped).
    static SymTensor from_canonical(int order, int dim, std::map<MultisetIndex, Rational> entries);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::map<MultisetIndex, Rational>& entries() const { return entries_; }

    Rational at(const MultisetIndex& key) const;
    Rational at(const std::vector<int>& raw_tuple) const;

    bool is_zero() const { return entries_.empty(); }
    bool zero_one_valued() const;

    bool operator==(const SymTensor&) const = default;

private:
    int order_;
    int dim_;
    std::map<MultisetIndex, Rational> entries_;
};

/// Symmetric tensor with entries in {0,1}, represented as the set of present
/// keys. The support doubles as a multi-hypergraph edge set.
class ZeroOneTensor {
public:
    ZeroOneTensor(int order, int dim);
    ZeroOneTensor(int order, int dim, std::set<MultisetIndex> support);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::set<MultisetIndex>& support() const { return support_; }
    bool contains(const MultisetIndex& key) const { return support_.count(key) > 0; }

    SymTensor as_sym_tensor() const;

    bool operator==(const ZeroOneTensor&) const = default;

private:
    int order_;
    int dim_;
    std::set<MultisetIndex> support_;
};

/// Support indicator of A. Idempotent: pattern(pattern(A)) == pattern(A).
ZeroOneTensor pattern(const SymTensor& tensor);
ZeroOneTensor pattern(const ZeroOneTensor& tensor);

/// Principal subtensor on vertex set I, relabeled to [|I|] preserving order.
/// original_vertex[k] is the input label of output vertex k+1.
struct PrincipalSubtensor {
    SymTensor tensor;
    std::vector<int> original_vertex;
};
PrincipalSubtensor principal_subtensor(const SymTensor& tensor, const Base& index_set);

/// Zero slices, isolated vertices, and (within the exhaustive gate) all
/// inclusion-maximal vertex sets whose principal subtensor is zero.
struct ZeroStructureReport {
    std::vector<int> isolated;            // vertices appearing in no stored key
    bool exhaustive = false;              // maximal_zero_blocks populated?
    std::vector<Base> maximal_zero_blocks;
};
ZeroStructureReport find_zero_structures(const SymTensor& tensor, int exhaustive_limit = 12);

/// Simultaneous relabeling of all modes: output value at the canonical form
/// of (phi(i1),...,phi(im)) equals the input value at (i1,...,im).
/// phi[i-1] is the image of vertex i; throws DomainError unless bijective.
SymTensor permute(const SymTensor& tensor, const std::vector<int>& phi);

/// Block placement on disjoint vertex ranges: keys of `first` unchanged, keys
/// of `second` shifted by first.dim(), every mixed entry zero.
SymTensor direct_sum(const SymTensor& first, const SymTensor& second);

/// m-th rank-one power of a {0,1} vector: entry 1 exactly at keys whose base
/// lies inside the support. Coordinates outside {0,1} raise DomainError.
SymTensor rank_one_power(const std::vector<int>& zero_one_vector, int order);

/// Sum of rank-one powers over all certificate factors: the entry at a key
/// counts the factors whose support contains the key's base.
SymTensor cp_sum(const CpCertificate& certificate);

/// Dense slice rendering: for order 3 prints one matrix A(:,:,k) per fixed
/// last index, rows indexed by the first mode and columns by the second.
/// Order 2 prints the matrix itself; higher orders fix the trailing modes.
std::string render_slices(const SymTensor& tensor);

} // namespace cpt
