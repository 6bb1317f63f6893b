#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cpt/cp_decision.hpp"
#include "cpt/oracle.hpp"
#include "test_helpers.hpp"

using namespace cpt;
using namespace cpt::test;

namespace {

// Rebuilds direct_sum(blocks...) padded with the zero block, the shape the
// permutation is required to reproduce.
SymTensor reassemble(const DecompositionReport& report, int order, int dim) {
    if (report.blocks.empty()) return SymTensor(order, dim);
    SymTensor acc = report.blocks.front();
    for (std::size_t i = 1; i < report.blocks.size(); ++i) {
        acc = direct_sum(acc, report.blocks[i]);
    }
    if (report.zero_block_dim > 0) acc = direct_sum(acc, SymTensor(order, report.zero_block_dim));
    return acc;
}

// Checks the reducibility condition from its definition, on raw tuples.
bool reducible_with(const SymTensor& tensor, const Base& subset) {
    std::vector<int> all;
    for (int v = 1; v <= tensor.dim(); ++v) all.push_back(v);
    for (const auto& tuple : complete_ordered_tuples(Base(all, tensor.dim()), tensor.order())) {
        if (!subset.contains(tuple[0])) continue;
        bool rest_outside = true;
        for (std::size_t k = 1; k < tuple.size(); ++k) {
            if (subset.contains(tuple[k])) rest_outside = false;
        }
        if (rest_outside && !tensor.at(tuple).is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("reducibility witnesses") {
    SUBCASE("the all-ones tensor is irreducible") {
        CHECK(!reducibility_witness(all_ones(3, 3)).has_value());
    }

    SUBCASE("single-edge tensor: first witness is {1,2}") {
        const SymTensor tensor = SymTensor::from_entries(3, 3, {{{1, 2, 3}, 1}});
        const auto witness = reducibility_witness(tensor);
        REQUIRE(witness.has_value());
        CHECK(witness->vertices() == std::vector<int>{1, 2});

        // Independent scan of all six nonempty proper subsets.
        for (std::uint64_t mask = 1; mask < 7; ++mask) {
            const Base candidate = Base::from_mask(mask, 3);
            const bool expected = candidate.vertices() == std::vector<int>{1, 2} ||
                                  candidate.vertices() == std::vector<int>{1, 3} ||
                                  candidate.vertices() == std::vector<int>{2, 3};
            CHECK(reducible_with(tensor, candidate) == expected);
        }
    }

    SUBCASE("diagonal matrix") {
        const SymTensor diag = SymTensor::from_entries(2, 2, {{{1, 1}, 1}, {{2, 2}, 1}});
        const auto witness = reducibility_witness(diag);
        REQUIRE(witness.has_value());
        CHECK(witness->vertices() == std::vector<int>{1});
    }

    SUBCASE("witnesses satisfy the definition") {
        std::mt19937 rng(3);
        const PatternStream stream = enumerate_patterns(3, 3);
        std::uniform_int_distribution<std::uint64_t> pick(0, stream.count() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            const SymTensor tensor = stream.at(pick(rng)).as_sym_tensor();
            const auto witness = reducibility_witness(tensor);
            if (witness) CHECK(reducible_with(tensor, *witness));
        }
    }

    SUBCASE("dimension gate") {
        CHECK_THROWS_AS(reducibility_witness(SymTensor(2, 13), 12), CapabilityError);
    }
}

TEST_CASE("decompose into branch blocks plus a zero block") {
    SUBCASE("visible block structure") {
        const SymTensor tensor = direct_sum(all_ones(2, 2), SymTensor(2, 1));
        const auto report = decompose(tensor);
        CHECK(report.permutation == std::vector<int>{1, 2, 3});
        REQUIRE(report.blocks.size() == 1);
        CHECK(report.blocks[0] == all_ones(2, 2));
        CHECK(report.zero_block_dim == 1);
        CHECK(permute(tensor, report.permutation) == reassemble(report, 2, 3));
    }

    SUBCASE("one branch keeps the tensor whole") {
        const auto report = decompose(example41_tensor());
        REQUIRE(report.blocks.size() == 1);
        CHECK(report.blocks[0] == example41_tensor());
        CHECK(report.zero_block_dim == 0);
    }

    SUBCASE("blocks recovered regardless of labeling") {
        std::mt19937 rng(13);
        const SymTensor original = direct_sum(all_ones(2, 2), all_ones(2, 1));
        for (int trial = 0; trial < 20; ++trial) {
            const SymTensor shuffled = permute(original, random_permutation(3, rng));
            const auto report = decompose(shuffled);
            std::multiset<int> dims;
            for (const auto& block : report.blocks) dims.insert(block.dim());
            CHECK(dims == std::multiset<int>{1, 2});
            CHECK(permute(shuffled, report.permutation) == reassemble(report, 2, 3));
        }
    }

    SUBCASE("zero tensor is all zero block") {
        const auto report = decompose(SymTensor(3, 2));
        CHECK(report.blocks.empty());
        CHECK(report.zero_block_dim == 2);
    }
}

TEST_CASE("structural {0,1}-cp decision") {
    SUBCASE("the dominance counterexample is not cp") {
        const auto verdict = is_zero_one_cp(pattern(counterexample_matrix()));
        CHECK_FALSE(verdict.cp);
        REQUIRE(verdict.witness_branch.has_value());
        CHECK(verdict.witness_branch->vertices() == std::vector<int>{1, 2, 3});
        REQUIRE(verdict.missing_key.has_value());
        CHECK(*verdict.missing_key == canonicalize({1, 3}, 3));
    }

    SUBCASE("all-ones tensors are cp with a single factor") {
        for (int m = 2; m <= 4; ++m) {
            for (int n = 1; n <= 4; ++n) {
                const auto verdict = is_zero_one_cp(pattern(all_ones(m, n)));
                REQUIRE(verdict.cp);
                REQUIRE(verdict.certificate.has_value());
                CHECK(verdict.certificate->total_vectors() == 1);
                CHECK(verdict.certificate->vectors()[0].support.size() == n);
                CHECK(verify_certificate(all_ones(m, n), *verdict.certificate));
            }
        }
    }

    SUBCASE("two complete blocks certify with disjoint supports") {
        const SymTensor tensor = direct_sum(all_ones(3, 2), all_ones(3, 2));
        const auto verdict = is_zero_one_cp(pattern(tensor));
        REQUIRE(verdict.cp);
        const auto& cert = *verdict.certificate;
        REQUIRE(cert.vectors().size() == 2);
        CHECK(cert.vectors()[0].support.vertices() == std::vector<int>{1, 2});
        CHECK(cert.vectors()[1].support.vertices() == std::vector<int>{3, 4});
        CHECK(gram_is_diagonal(cert));
        CHECK(verify_certificate(tensor, cert));
    }

    SUBCASE("isolated vertices never block the verdict") {
        const SymTensor tensor = direct_sum(all_ones(2, 2), SymTensor(2, 2));
        const auto verdict = is_zero_one_cp(pattern(tensor));
        REQUIRE(verdict.cp);
        CHECK(verdict.certificate->total_vectors() == 1);
    }
}

TEST_CASE("cp multi-hypergraph decision") {
    CHECK(is_cp_multihypergraph(from_pattern(pattern(example41_tensor()))));
    CHECK_FALSE(is_cp_multihypergraph(MultiHypergraph::from_edge_lists(3, 3, {{1, 2, 3}})));

    // The hypergraph is cp even though its (0,1) tensor is not.
    const MultiHypergraph counter_hg = from_pattern(pattern(counterexample_matrix()));
    CHECK(is_cp_multihypergraph(counter_hg));
    CHECK_FALSE(is_zero_one_cp(associated_tensor(counter_hg)).cp);
}

TEST_CASE("constructing a cp tensor from maximal bases") {
    SUBCASE("diagonal-2 pattern rebuilds the printed slices") {
        const auto built = construct_cp_tensor(from_pattern(pattern(example41_tensor())));
        CHECK(built.tensor == example41_tensor());
        CHECK(built.certificate == example41_certificate());
        CHECK(is_associated(built.tensor, from_pattern(pattern(example41_tensor()))));
        CHECK(verify_certificate(built.tensor, built.certificate));
    }

    SUBCASE("complete hypergraph gives the all-ones tensor") {
        const auto built = construct_cp_tensor(from_pattern(pattern(all_ones(3, 3))));
        CHECK(built.tensor == all_ones(3, 3));
        CHECK(built.certificate.total_vectors() == 1);
    }

    SUBCASE("union of the three pair classes gives diagonals of 2") {
        // The complete-union reading of the rank/co-rank example's edge set,
        // i.e. the diagonal-2 pattern, rather than its literal 8-entry
        // listing (which misses (2,3,3) and fails Property R).
        std::set<MultisetIndex> edges;
        for (const auto& pair : {std::vector<int>{1, 2}, {1, 3}, {2, 3}}) {
            for (const auto& key : complete_multisets(Base(pair, 3), 3)) edges.insert(key);
        }
        const auto built = construct_cp_tensor(MultiHypergraph(3, 3, edges));
        CHECK(built.tensor.at({1, 1, 1}) == Rational(2));
        CHECK(built.tensor.at({2, 2, 2}) == Rational(2));
        CHECK(built.tensor.at({3, 3, 3}) == Rational(2));
        CHECK(built.tensor == example41_tensor());
    }

    SUBCASE("empty hypergraph gives the zero tensor") {
        const auto built = construct_cp_tensor(MultiHypergraph(3, 3));
        CHECK(built.tensor.is_zero());
        CHECK(built.certificate.empty());
    }

    SUBCASE("Property R failures are precondition errors with the counterexample") {
        try {
            construct_cp_tensor(MultiHypergraph::from_edge_lists(3, 3, {{1, 2, 3}}));
            FAIL("expected PropertyRError");
        } catch (const PropertyRError& e) {
            CHECK(e.violation().edge == canonicalize({1, 2, 3}, 3));
            CHECK(e.violation().missing == canonicalize({1, 1, 1}, 3));
        }
    }
}

TEST_CASE("certificate verification") {
    CHECK(verify_certificate(example41_tensor(), example41_certificate()));

    CpCertificate ones(2, 3);
    ones.add(Base({1, 2, 3}, 3), 1);
    CHECK(verify_certificate(all_ones(2, 3), ones));

    CpCertificate wrong(3, 3);
    wrong.add(Base({1, 2, 3}, 3), 1);
    CHECK_FALSE(verify_certificate(example41_tensor(), wrong)); // diagonals would be 1

    CHECK_THROWS_AS(verify_certificate(all_ones(2, 2), ones), DomainError);
}

TEST_CASE("ordered edge count identity") {
    SUBCASE("disjoint complete blocks") {
        const SymTensor tensor = direct_sum(all_ones(3, 2), all_ones(3, 3));
        const auto report = corollary_check(from_pattern(pattern(tensor)));
        CHECK(report.holds);
        CHECK(report.ordered_edges == 35); // 2^3 + 3^3
        CHECK(report.branch_power_sum == 35);
        CHECK(report.branch_dims == std::vector<int>{2, 3});
    }

    SUBCASE("one complete block") {
        const auto report = corollary_check(from_pattern(pattern(all_ones(3, 2))));
        CHECK(report.holds);
        CHECK(report.ordered_edges == 8);
    }

    SUBCASE("overlapping classes break the identity") {
        const auto report = corollary_check(from_pattern(pattern(example41_tensor())));
        CHECK_FALSE(report.holds);
        CHECK(report.ordered_edges == 21);
        CHECK(report.branch_power_sum == 27); // one branch of dimension 3
    }
}

TEST_CASE("direct-sum multiplicativity of the verdict") {
    const PatternStream stream = enumerate_patterns(2, 2);
    for (std::uint64_t i = 0; i < stream.count(); ++i) {
        for (std::uint64_t j = 0; j < stream.count(); ++j) {
            const SymTensor a = stream.at(i).as_sym_tensor();
            const SymTensor b = stream.at(j).as_sym_tensor();
            const bool combined = is_zero_one_cp(pattern(direct_sum(a, b))).cp;
            const bool separate = is_zero_one_cp(pattern(a)).cp && is_zero_one_cp(pattern(b)).cp;
            REQUIRE(combined == separate);
        }
    }
}

TEST_CASE("verdicts and certificates transport along permutations") {
    std::mt19937 rng(29);
    const PatternStream stream = enumerate_patterns(3, 3);
    std::uniform_int_distribution<std::uint64_t> pick(0, stream.count() - 1);

    for (int trial = 0; trial < 60; ++trial) {
        const ZeroOneTensor tensor = stream.at(pick(rng));
        const auto phi = random_permutation(3, rng);
        const ZeroOneTensor moved = pattern(permute(tensor.as_sym_tensor(), phi));

        const auto before = is_zero_one_cp(tensor);
        const auto after = is_zero_one_cp(moved);
        REQUIRE(before.cp == after.cp);
        if (!before.cp) continue;

        // Certificates map onto each other under phi.
        std::set<std::vector<int>> mapped;
        for (const auto& factor : before.certificate->vectors()) {
            std::vector<int> image;
            for (int v : factor.support.vertices()) image.push_back(phi[v - 1]);
            std::sort(image.begin(), image.end());
            mapped.insert(image);
        }
        std::set<std::vector<int>> target;
        for (const auto& factor : after.certificate->vectors()) {
            target.insert(factor.support.vertices());
        }
        CHECK(mapped == target);
    }
}
