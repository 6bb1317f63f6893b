#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpt/certificate.hpp"
#include "cpt/sym_tensor.hpp"

namespace cpt {

/// Hard caps on the exhaustive search. The oracle aborts with an explicit
/// budget-exceeded status rather than ever guessing.
struct OracleBudget {
    int max_dimension = 6;
    long long max_total_vectors = 64;   // cap on q
    long long node_limit = 50'000'000;  // search nodes before giving up
};

enum class OracleStatus { cp, not_cp, budget_exceeded };

struct OracleVerdict {
    OracleStatus status;
    std::optional<CpCertificate> certificate; // present iff status == cp
    std::string detail;                       // reason for not_cp / budget_exceeded
};

/// Decides whether the tensor is a sum of m-th powers of {0,1} vectors by
/// exhaustive search over support multiplicities. Entries that are negative
/// or non-integer make the tensor not-cp by definition. Dimensions above the
/// budget raise CapabilityError.
OracleVerdict oracle_is_cp(const SymTensor& tensor, const OracleBudget& budget = {});

struct OracleRankResult {
    OracleStatus status;
    std::optional<int> cp_rank;               // present iff status == cp
    std::optional<CpCertificate> certificate; // a witness of the minimal rank
    std::string detail;
};

/// Minimal number of rank-one {0,1} terms, by iterative deepening on q.
OracleRankResult oracle_cp_rank(const SymTensor& tensor, const OracleBudget& budget = {});

/// Every symmetric (0,1) tensor of the given shape exactly once, addressable
/// by index in a fixed order: bit j of the pattern index toggles the j-th
/// canonical key (lexicographic). Construction throws CapabilityError when
/// the key count C(n+m-1, m) exceeds 24.
class PatternStream {
public:
    PatternStream(int order, int dim);

    std::uint64_t count() const { return std::uint64_t{1} << keys_.size(); }
    ZeroOneTensor at(std::uint64_t pattern_index) const;

    int order() const { return order_; }
    int dim() const { return dim_; }
    const std::vector<MultisetIndex>& keys() const { return keys_; }

private:
    int order_;
    int dim_;
    std::vector<MultisetIndex> keys_;
};

PatternStream enumerate_patterns(int order, int dim);

} // namespace cpt
