#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cpt/sym_tensor.hpp"
#include "test_helpers.hpp"

using namespace cpt;
using namespace cpt::test;

TEST_CASE("from_entries builds the slice-listed tensor") {
    // Feed every ordered position of the three printed slices, zeros included.
    std::vector<SymTensor::RawEntry> raw;
    const SymTensor reference = example41_tensor();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) raw.push_back({{i, j, k}, reference.at({i, j, k})});

    const SymTensor tensor = SymTensor::from_entries(3, 3, raw);
    CHECK(tensor == reference);
    CHECK(tensor.at({1, 1, 1}) == Rational(2));
    CHECK(tensor.at({1, 1, 2}) == Rational(1));
    CHECK(tensor.at({1, 2, 3}) == Rational(0));
    CHECK(tensor.entries().count(canonicalize({1, 2, 3}, 3)) == 0); // absent, not stored
}

TEST_CASE("from_entries edge cases") {
    CHECK(SymTensor::from_entries(2, 2, {}).is_zero());

    const SymTensor collapsed = SymTensor::from_entries(2, 2, {{{1, 2}, 5}, {{2, 1}, 5}});
    CHECK(collapsed.entries().size() == 1);
    CHECK(collapsed.at({1, 2}) == Rational(5));

    CHECK_THROWS_WITH_AS(SymTensor::from_entries(2, 2, {{{1, 2}, 5}, {{2, 1}, 6}}),
                         "symmetry violation at key (1,2): values 5 and 6 conflict", DomainError);
    CHECK_THROWS_AS(SymTensor::from_entries(2, 2, {{{1, 2}, Rational(-1)}}), DomainError);
    CHECK_THROWS_AS(SymTensor::from_entries(2, 2, {{{1, 2, 2}, 1}}), DomainError);
}

TEST_CASE("pattern is the support indicator") {
    const SymTensor tensor = example41_tensor();
    const ZeroOneTensor pat = pattern(tensor);

    std::set<MultisetIndex> expected;
    for (const auto& pair : {std::vector<int>{1, 2}, {1, 3}, {2, 3}}) {
        for (const auto& key : complete_multisets(Base(pair, 3), 3)) expected.insert(key);
    }
    CHECK(pat.support() == expected);

    CHECK(pattern(SymTensor(2, 2)).support().empty());

    const SymTensor j22 = all_ones(2, 2);
    CHECK(pattern(j22).as_sym_tensor() == j22); // (0,1) fixed point
    CHECK(pattern(pattern(j22)) == pattern(j22));
}

TEST_CASE("principal subtensor relabels and restricts") {
    const SymTensor tensor = example41_tensor();

    SUBCASE("singleton") {
        const auto sub = principal_subtensor(tensor, Base({1}, 3));
        CHECK(sub.tensor.dim() == 1);
        CHECK(sub.tensor.at(std::vector<int>{1, 1, 1}) == Rational(2));
        CHECK(sub.original_vertex == std::vector<int>{1});
    }

    SUBCASE("full index set is the identity") {
        const auto sub = principal_subtensor(tensor, Base({1, 2, 3}, 3));
        CHECK(sub.tensor == tensor);
    }

    SUBCASE("zero tensor stays zero") {
        CHECK(principal_subtensor(SymTensor(3, 4), Base({2, 3}, 4)).tensor.is_zero());
    }

    SUBCASE("bad index sets refused") {
        CHECK_THROWS_AS(principal_subtensor(tensor, Base()), DomainError);
        CHECK_THROWS_AS(principal_subtensor(tensor, Base({1, 2}, 4)), DomainError);
    }
}

TEST_CASE("zero structures") {
    SUBCASE("diagonal-2 tensor has none") {
        const auto report = find_zero_structures(example41_tensor());
        CHECK(report.isolated.empty());
        CHECK(report.exhaustive);
        CHECK(report.maximal_zero_blocks.empty());
    }

    SUBCASE("zero matrix") {
        const auto report = find_zero_structures(SymTensor(2, 2));
        CHECK(report.isolated == std::vector<int>{1, 2});
        REQUIRE(report.maximal_zero_blocks.size() == 1);
        CHECK(report.maximal_zero_blocks[0].vertices() == std::vector<int>{1, 2});
    }

    SUBCASE("single-edge tensor") {
        const SymTensor tensor = SymTensor::from_entries(3, 3, {{{1, 2, 3}, 1}});
        const auto report = find_zero_structures(tensor);
        REQUIRE(report.maximal_zero_blocks.size() == 3);
        CHECK(report.maximal_zero_blocks[0].vertices() == std::vector<int>{1, 2});
        CHECK(report.maximal_zero_blocks[1].vertices() == std::vector<int>{1, 3});
        CHECK(report.maximal_zero_blocks[2].vertices() == std::vector<int>{2, 3});

        // Independent subset check over all nonempty subsets of [3].
        for (std::uint64_t mask = 1; mask < 8; ++mask) {
            const Base candidate = Base::from_mask(mask, 3);
            bool zero = true;
            for (const auto& [key, value] : tensor.entries()) {
                if (key.base().subset_of(candidate)) zero = false;
            }
            const bool listed_or_covered =
                std::any_of(report.maximal_zero_blocks.begin(), report.maximal_zero_blocks.end(),
                            [&](const Base& block) { return candidate.subset_of(block); });
            CHECK(zero == listed_or_covered);
        }
    }

    SUBCASE("scan skipped above the gate") {
        const auto report = find_zero_structures(SymTensor(2, 5), 4);
        CHECK_FALSE(report.exhaustive);
        CHECK(report.maximal_zero_blocks.empty());
        CHECK(report.isolated.size() == 5);
    }
}

TEST_CASE("permute relabels keys") {
    const SymTensor tensor = example41_tensor();

    SUBCASE("swap of 1 and 2 fixes this tensor") {
        const SymTensor swapped = permute(tensor, {2, 1, 3});

        // Independent route: rebuild from raw relabeled positions.
        std::vector<SymTensor::RawEntry> raw;
        const int img[4] = {0, 2, 1, 3};
        for (const auto& [key, value] : tensor.entries()) {
            std::vector<int> mapped;
            for (int v : key.entries()) mapped.push_back(img[v]);
            raw.push_back({mapped, value});
        }
        CHECK(swapped == SymTensor::from_entries(3, 3, raw));
        CHECK(swapped == tensor);
    }

    SUBCASE("identity and inverse") {
        CHECK(permute(tensor, {1, 2, 3}) == tensor);
        const std::vector<int> phi{3, 1, 2};
        const std::vector<int> inv{2, 3, 1};
        CHECK(permute(permute(tensor, phi), inv) == tensor);
    }

    SUBCASE("single key relabeling") {
        const SymTensor single = SymTensor::from_entries(3, 3, {{{1, 1, 2}, 1}});
        const SymTensor moved = permute(single, {3, 1, 2}); // 1->3, 2->1, 3->2
        CHECK(moved.entries().size() == 1);
        CHECK(moved.at({1, 3, 3}) == Rational(1));
    }

    SUBCASE("non-bijections refused") {
        CHECK_THROWS_AS(permute(tensor, {1, 1, 3}), DomainError);
        CHECK_THROWS_AS(permute(tensor, {1, 2}), DomainError);
    }
}

TEST_CASE("direct sum places blocks on disjoint ranges") {
    const SymTensor j2 = all_ones(2, 2);
    const SymTensor j1 = all_ones(2, 1);

    const SymTensor block = direct_sum(j2, j1);
    CHECK(block.dim() == 3);
    CHECK(block.at({1, 1}) == Rational(1));
    CHECK(block.at({1, 2}) == Rational(1));
    CHECK(block.at({2, 2}) == Rational(1));
    CHECK(block.at({3, 3}) == Rational(1));
    CHECK(block.at({1, 3}) == Rational(0));
    CHECK(block.at({2, 3}) == Rational(0));

    const SymTensor appended = direct_sum(example41_tensor(), SymTensor(3, 1));
    CHECK(appended.dim() == 4);
    CHECK(appended.entries().size() == example41_tensor().entries().size());

    CHECK_THROWS_AS(direct_sum(all_ones(2, 2), all_ones(3, 2)), DomainError);
}

TEST_CASE("rank-one powers of {0,1} vectors") {
    SUBCASE("support {1,2}, m=3, against the direct product expansion") {
        const std::vector<int> u{1, 1, 0};
        const SymTensor power = rank_one_power(u, 3);
        CHECK(power.entries().size() == 4); // canonical keys over {1,2}

        int nonzero_positions = 0;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k) {
                    const int expected = u[i - 1] * u[j - 1] * u[k - 1];
                    CHECK(power.at({i, j, k}) == Rational(expected));
                    nonzero_positions += expected;
                }
        CHECK(nonzero_positions == 8);
    }

    SUBCASE("zero vector gives the zero tensor") {
        CHECK(rank_one_power({0, 0, 0}, 3).is_zero());
    }

    SUBCASE("all-ones vector gives the all-ones tensor") {
        const SymTensor j = rank_one_power({1, 1, 1}, 3);
        for (const auto& key : complete_multisets(Base({1, 2, 3}, 3), 3)) {
            CHECK(j.at(key) == Rational(1));
        }
    }

    SUBCASE("non-{0,1} coordinates refused") {
        CHECK_THROWS_AS(rank_one_power({1, 2, 0}, 3), DomainError);
    }
}

TEST_CASE("cp_sum of a certificate") {
    SUBCASE("the three-column certificate reproduces the printed slices") {
        CHECK(cp_sum(example41_certificate()) == example41_tensor());
    }

    SUBCASE("single all-ones factor") {
        CpCertificate cert(3, 4);
        cert.add(Base({1, 2, 3, 4}, 4), 1);
        CHECK(cp_sum(cert) == all_ones(3, 4));
    }

    SUBCASE("empty certificate is the zero tensor") {
        CHECK(cp_sum(CpCertificate(3, 3)).is_zero());
    }

    SUBCASE("entries depend only on the base of the key") {
        CpCertificate cert(3, 4);
        cert.add(Base({1, 2}, 4), 2);
        cert.add(Base({2, 3, 4}, 4), 1);
        const SymTensor sum = cp_sum(cert);
        const auto keys = complete_multisets(Base({1, 2, 3, 4}, 4), 3);
        for (const auto& a : keys) {
            for (const auto& b : keys) {
                if (a.base() == b.base()) CHECK(sum.at(a) == sum.at(b));
            }
        }
    }
}

TEST_CASE("direct sum then principal subtensor recovers the first block") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> dim(1, 3);
        std::uniform_int_distribution<int> value(0, 2);
        const int n1 = dim(rng);
        const int n2 = dim(rng);

        std::vector<SymTensor::RawEntry> raw1;
        std::vector<int> all1;
        for (int v = 1; v <= n1; ++v) all1.push_back(v);
        for (const auto& key : complete_multisets(Base(all1, n1), 3)) {
            raw1.push_back({key.entries(), value(rng)});
        }
        const SymTensor a = SymTensor::from_entries(3, n1, raw1);
        const SymTensor b = all_ones(3, n2);

        std::vector<int> front;
        for (int v = 1; v <= n1; ++v) front.push_back(v);
        CHECK(principal_subtensor(direct_sum(a, b), Base(front, n1 + n2)).tensor == a);
    }
}

TEST_CASE("raw queries agree with canonical queries") {
    std::mt19937 rng(5);
    const SymTensor tensor = example41_tensor();
    std::uniform_int_distribution<int> vertex(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> raw{vertex(rng), vertex(rng), vertex(rng)};
        CHECK(tensor.at(raw) == tensor.at(canonicalize(raw, 3)));
    }
}

TEST_CASE("permute preserves the multiset of entry values") {
    std::mt19937 rng(11);
    const SymTensor tensor = example41_tensor();
    for (int trial = 0; trial < 10; ++trial) {
        const SymTensor shuffled = permute(tensor, random_permutation(3, rng));
        std::multiset<Rational> before, after;
        for (const auto& [key, value] : tensor.entries()) before.insert(value);
        for (const auto& [key, value] : shuffled.entries()) after.insert(value);
        CHECK(before == after);
    }
}

TEST_CASE("slice rendering fixes the row/column convention") {
    const std::string rendered = render_slices(example41_tensor());
    CHECK(rendered ==
          "A(:,:,1) =\n"
          "  2 1 1\n"
          "  1 1 0\n"
          "  1 0 1\n"
          "\n"
          "A(:,:,2) =\n"
          "  1 1 0\n"
          "  1 2 1\n"
          "  0 1 1\n"
          "\n"
          "A(:,:,3) =\n"
          "  1 0 1\n"
          "  0 1 1\n"
          "  1 1 2\n");

    CHECK(render_slices(counterexample_matrix()) ==
          "A =\n"
          "  1 1 0\n"
          "  1 1 1\n"
          "  0 1 1\n");
}
