#pragma once

#include <vector>

#include "cpt/multiset_index.hpp"

namespace cpt {

/// One {0,1} factor of a cp decomposition: the support of the vector plus how
/// many times it repeats in the sum.
struct CertVector {
    Base support;
    int multiplicity = 1;

    bool operator==(const CertVector&) const = default;
};

/// A multiset of {0,1} vectors whose m-th rank-one powers sum to a tensor.
/// Factors produced by the structural decision have pairwise disjoint supports
/// and multiplicity 1; the brute-force search may emit repeated supports.
class CpCertificate {
public:
    CpCertificate(int order, int dim) : order_(order), dim_(dim) {}

    /// Appends a factor. Throws DomainError on an empty support, a support
    /// over the wrong ambient dimension, or a multiplicity < 1.
    void add(Base support, int multiplicity = 1);

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::vector<CertVector>& vectors() const { return vectors_; }
    bool empty() const { return vectors_.empty(); }

    /// Total factor count q (multiplicities included).
    int total_vectors() const;

    bool operator==(const CpCertificate&) const = default;

private:
    int order_;
    int dim_;
    std::vector<CertVector> vectors_;
};

} // namespace cpt
