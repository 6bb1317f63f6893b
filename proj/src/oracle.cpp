#include "cpt/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cpt {

namespace {

// The constraint system behind Eq.-style {0,1} decompositions: for every
// realizable base B (nonempty, |B| <= m), the multiplicities x_S of factors
// with support S must satisfy  sum over S containing B of x_S = f(B),
// where f(B) is the common entry value shared by all indices with base B.
struct SupportSystem {
    int order = 0;
    int dim = 0;
    std::vector<std::uint64_t> supports;          // all nonempty subsets, size-desc then lex
    std::vector<std::uint64_t> base_masks;        // realizable bases, same ordering as ids
    std::vector<long long> targets;               // f(B) per base id
    std::vector<std::vector<int>> bases_in;       // support position -> base ids under it
    std::vector<int> last_position;               // base id -> position of S == B
    long long diagonal_trace = 0;                 // sum of f over singletons
};

int popcount(std::uint64_t mask) { return static_cast<int>(__builtin_popcountll(mask)); }

std::vector<int> mask_vertices(std::uint64_t mask, int dim) {
    std::vector<int> verts;
    for (int v = 1; v <= dim; ++v) {
        if (mask & (std::uint64_t{1} << (v - 1))) verts.push_back(v);
    }
    return verts;
}

// Entry values of a {0,1}-cp tensor depend only on the base of the key; any
// disagreement within a base class refutes cp-ness immediately.
struct ClassCheck {
    bool consistent = true;
    std::string detail;
    std::vector<long long> targets;
};

ClassCheck base_class_values(const SymTensor& tensor,
                             const std::vector<std::uint64_t>& base_masks) {
    ClassCheck result;
    result.targets.reserve(base_masks.size());
    for (std::uint64_t mask : base_masks) {
        const Base base = Base::from_mask(mask, tensor.dim());
        long long value = -1;
        for (const auto& key : complete_multisets(base, tensor.order())) {
            if (key.base() != base) continue; // need base exactly B
            const Rational entry = tensor.at(key);
            const long long v = entry.as_integer();
            if (value < 0) {
                value = v;
            } else if (value != v) {
                result.consistent = false;
                result.detail = "entries with a common base differ (base size " +
                                std::to_string(base.size()) + ")";
                return result;
            }
        }
        result.targets.push_back(value);
    }
    return result;
}

SupportSystem build_system(const SymTensor& tensor) {
    SupportSystem sys;
    sys.order = tensor.order();
    sys.dim = tensor.dim();
    const int n = sys.dim;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        sys.supports.push_back(mask);
        if (popcount(mask) <= sys.order) sys.base_masks.push_back(mask);
    }
    std::sort(sys.supports.begin(), sys.supports.end(), [n](std::uint64_t a, std::uint64_t b) {
        const int pa = popcount(a);
        const int pb = popcount(b);
        if (pa != pb) return pa > pb;
        return mask_vertices(a, n) < mask_vertices(b, n);
    });
    std::sort(sys.base_masks.begin(), sys.base_masks.end(),
              [n](std::uint64_t a, std::uint64_t b) {
                  return mask_vertices(a, n) < mask_vertices(b, n);
              });
    return sys;
}

void index_system(SupportSystem& sys) {
    std::vector<int> id_of(std::size_t{1} << sys.dim, -1);
    for (std::size_t i = 0; i < sys.base_masks.size(); ++i) {
        id_of[sys.base_masks[i]] = static_cast<int>(i);
    }

    sys.bases_in.resize(sys.supports.size());
    sys.last_position.assign(sys.base_masks.size(), -1);
    for (std::size_t pos = 0; pos < sys.supports.size(); ++pos) {
        const std::uint64_t support = sys.supports[pos];
        // enumerate nonempty submasks
        for (std::uint64_t sub = support;; sub = (sub - 1) & support) {
            if (sub == 0) break;
            const int id = id_of[sub];
            if (id >= 0) {
                sys.bases_in[pos].push_back(id);
                sys.last_position[id] = std::max(sys.last_position[id], static_cast<int>(pos));
            }
        }
    }
    for (int k = 0; k < sys.dim; ++k) {
        sys.diagonal_trace += sys.targets[id_of[std::uint64_t{1} << k]];
    }
}

struct NodeLimitHit {};

// Backtracking over factor multiplicities. `exact_q` < 0 searches for any
// solution with total at most `q_cap`; otherwise the total must equal it.
class SupportSearch {
public:
    SupportSearch(const SupportSystem& sys, long long node_limit)
        : sys_(sys), remaining_(sys.targets), assignment_(sys.supports.size(), 0),
          node_limit_(node_limit) {}

    bool run(long long q_cap, long long exact_q) {
        q_cap_ = q_cap;
        exact_q_ = exact_q;
        return descend(0, 0);
    }

    long long nodes_used() const { return nodes_; }

    CpCertificate certificate() const {
        CpCertificate cert(sys_.order, sys_.dim);
        std::vector<std::pair<std::vector<int>, long long>> factors;
        for (std::size_t pos = 0; pos < sys_.supports.size(); ++pos) {
            if (assignment_[pos] > 0) {
                factors.emplace_back(mask_vertices(sys_.supports[pos], sys_.dim),
                                     assignment_[pos]);
            }
        }
        std::sort(factors.begin(), factors.end());
        for (auto& [verts, mult] : factors) {
            cert.add(Base(std::move(verts), sys_.dim), static_cast<int>(mult));
        }
        return cert;
    }

private:
    bool descend(std::size_t pos, long long q_used) {
        if (++nodes_ > node_limit_) throw NodeLimitHit{};
        if (pos == sys_.supports.size()) {
            return exact_q_ < 0 || q_used == exact_q_;
        }

        long long bound = q_cap_ - q_used;
        for (int id : sys_.bases_in[pos]) bound = std::min(bound, remaining_[id]);
        if (exact_q_ >= 0) bound = std::min(bound, exact_q_ - q_used);

        for (long long x = bound; x >= 0; --x) {
            for (int id : sys_.bases_in[pos]) remaining_[id] -= x;
            assignment_[pos] = x;
            if (viable(pos, q_used + x) && descend(pos + 1, q_used + x)) return true;
            for (int id : sys_.bases_in[pos]) remaining_[id] += x;
            assignment_[pos] = 0;
        }
        return false;
    }

    bool viable(std::size_t pos, long long q_used) const {
        // A base's equation is finalized when its own support passes.
        for (int id : sys_.bases_in[pos]) {
            if (sys_.last_position[id] == static_cast<int>(pos) && remaining_[id] != 0) {
                return false;
            }
        }
        if (exact_q_ >= 0) {
            const long long q_left = exact_q_ - q_used;
            if (q_left < 0) return false;
            long long max_remaining = 0;
            for (long long r : remaining_) max_remaining = std::max(max_remaining, r);
            if (q_left < max_remaining) return false; // each factor covers a base once
        }
        return true;
    }

    const SupportSystem& sys_;
    std::vector<long long> remaining_;
    std::vector<long long> assignment_;
    long long node_limit_;
    long long q_cap_ = 0;
    long long exact_q_ = -1;
    long long nodes_ = 0;
};

// Shared preamble: budget gate, integrality, base-class consistency.
// On success fills `sys`; otherwise returns the early verdict.
std::optional<OracleVerdict> prepare(const SymTensor& tensor, const OracleBudget& budget,
                                     SupportSystem& sys) {
    if (tensor.dim() > budget.max_dimension) {
        throw CapabilityError("oracle limited to dimension <= " +
                              std::to_string(budget.max_dimension) + ", tensor has dimension " +
                              std::to_string(tensor.dim()));
    }
    for (const auto& [key, value] : tensor.entries()) {
        if (value.is_negative() || !value.is_integer()) {
            return OracleVerdict{OracleStatus::not_cp, std::nullopt,
                                 "entry " + value.str() + " is not a nonnegative integer"};
        }
    }

    sys = build_system(tensor);
    ClassCheck classes = base_class_values(tensor, sys.base_masks);
    if (!classes.consistent) {
        return OracleVerdict{OracleStatus::not_cp, std::nullopt, classes.detail};
    }
    sys.targets = std::move(classes.targets);
    index_system(sys);
    return std::nullopt;
}

} // namespace

OracleVerdict oracle_is_cp(const SymTensor& tensor, const OracleBudget& budget) {
    SupportSystem sys;
    if (auto early = prepare(tensor, budget, sys)) return *early;

    SupportSearch search(sys, budget.node_limit);
    const long long q_cap = std::min(sys.diagonal_trace, budget.max_total_vectors);
    try {
        if (search.run(q_cap, -1)) {
            return OracleVerdict{OracleStatus::cp, search.certificate(), ""};
        }
    } catch (const NodeLimitHit&) {
        return OracleVerdict{OracleStatus::budget_exceeded, std::nullopt,
                             "node limit " + std::to_string(budget.node_limit) + " reached"};
    }
    if (sys.diagonal_trace > budget.max_total_vectors) {
        // Solutions above the vector cap were never explored; refusing to guess.
        return OracleVerdict{OracleStatus::budget_exceeded, std::nullopt,
                             "any decomposition needs up to " + std::to_string(sys.diagonal_trace) +
                                 " vectors, cap is " + std::to_string(budget.max_total_vectors)};
    }
    return OracleVerdict{OracleStatus::not_cp, std::nullopt,
                         "no {0,1} factor multiplicities satisfy the entry constraints"};
}

OracleRankResult oracle_cp_rank(const SymTensor& tensor, const OracleBudget& budget) {
    SupportSystem sys;
    if (auto early = prepare(tensor, budget, sys)) {
        return OracleRankResult{early->status, std::nullopt, std::nullopt, early->detail};
    }

    const long long q_bound = std::min(sys.diagonal_trace, budget.max_total_vectors);
    long long nodes_left = budget.node_limit;
    for (long long q = 0; q <= q_bound; ++q) {
        SupportSearch search(sys, nodes_left);
        try {
            if (search.run(q, q)) {
                return OracleRankResult{OracleStatus::cp, static_cast<int>(q),
                                        search.certificate(), ""};
            }
        } catch (const NodeLimitHit&) {
            return OracleRankResult{OracleStatus::budget_exceeded, std::nullopt, std::nullopt,
                                    "node limit " + std::to_string(budget.node_limit) + " reached"};
        }
        nodes_left -= search.nodes_used();
    }
    if (sys.diagonal_trace > budget.max_total_vectors) {
        return OracleRankResult{OracleStatus::budget_exceeded, std::nullopt, std::nullopt,
                                "any decomposition needs up to " +
                                    std::to_string(sys.diagonal_trace) + " vectors, cap is " +
                                    std::to_string(budget.max_total_vectors)};
    }
    return OracleRankResult{OracleStatus::not_cp, std::nullopt, std::nullopt,
                            "no {0,1} factor multiplicities satisfy the entry constraints"};
}

PatternStream::PatternStream(int order, int dim) : order_(order), dim_(dim) {
    std::vector<int> all(static_cast<std::size_t>(dim));
    std::iota(all.begin(), all.end(), 1);
    keys_ = complete_multisets(Base(std::move(all), dim), order);
    if (keys_.size() > 24) {
        throw CapabilityError("pattern enumeration over 2^" + std::to_string(keys_.size()) +
                              " tensors exceeds the 2^24 gate");
    }
}

ZeroOneTensor PatternStream::at(std::uint64_t pattern_index) const {
    if (pattern_index >= count()) {
        throw DomainError("pattern index " + std::to_string(pattern_index) + " out of range");
    }
    std::set<MultisetIndex> support;
    for (std::size_t j = 0; j < keys_.size(); ++j) {
        if (pattern_index & (std::uint64_t{1} << j)) support.insert(keys_[j]);
    }
    return ZeroOneTensor(order_, dim_, std::move(support));
}

PatternStream enumerate_patterns(int order, int dim) { return PatternStream(order, dim); }

} // namespace cpt
