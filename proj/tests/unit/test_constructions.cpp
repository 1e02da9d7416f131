#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dnacodes/code.hpp"
#include "dnacodes/constructions.hpp"
#include "dnacodes/errors.hpp"
#include "dnacodes/orbit.hpp"
#include "dnacodes/similarity.hpp"
#include "helpers.hpp"

using namespace dnacodes;
using testutil::all_words;
using testutil::seq;

namespace {

bool is_rc_closed_and_self_rc_free(const std::vector<QarySequence>& code) {
    const std::set<QarySequence> as_set(code.begin(), code.end());
    for (const QarySequence& x : code) {
        const QarySequence mirror = reverse_complement(x);
        if (mirror == x || as_set.count(mirror) == 0) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("zero-parity words stay zero-parity under reverse complement") {
    // the orbit construction leans on this closure property of M_q(n)
    for (const QarySequence& x : all_words(4, 4))
        if (parity_class(x) == 0) CHECK(parity_class(reverse_complement(x)) == 0);
}

TEST_CASE("orbit construction, q=4 n=4") {
    const ConstructionReport r = construct_orbit_code(4, 4);
    CHECK(r.case_used == ConstructionCase::odd_k);
    CHECK(to_string(r.case_used) == "T31-odd-k");
    CHECK(r.achieved_size == 34);
    CHECK(r.claimed_size == BigRat(34));
    CHECK(r.validated);
    CHECK(r.notes.empty());

    const auto& code = r.code.codewords;
    REQUIRE(code.size() == 34);
    CHECK(validate_dna_code(code, SimilarityKind::block, 1).valid);
    CHECK(is_rc_closed_and_self_rc_free(code));
    for (const QarySequence& x : code) CHECK(parity_class(x) == 0);

    // meets the size ceiling for block distance 1, so it is optimal
    CHECK(BigInt(r.achieved_size) == block_dna_size_upper_bound(4, 4));
}

TEST_CASE("orbit construction, q=2 n=4 reaches the known optimum") {
    const ConstructionReport r = construct_orbit_code(2, 4);
    CHECK(r.case_used == ConstructionCase::power_of_two);
    CHECK(to_string(r.case_used) == "T31-power-of-two");
    CHECK(r.achieved_size == 4);
    CHECK(r.claimed_size == BigRat(4));  // q^(n-1)/2
    CHECK(r.validated);

    // the selection works out to the constants plus the odd shifts of 0011
    const std::vector<QarySequence> expected = {seq(2, "0000"), seq(2, "0110"),
                                                seq(2, "1001"), seq(2, "1111")};
    CHECK(r.code.codewords == expected);
    std::vector<QarySequence> fixture = testutil::load_fixture("example_2_3.txt");
    std::sort(fixture.begin(), fixture.end());
    CHECK(r.code.codewords == fixture);
}

TEST_CASE("orbit construction, smallest parameters") {
    const ConstructionReport r = construct_orbit_code(2, 2);
    CHECK(r.case_used == ConstructionCase::odd_k);
    CHECK(r.achieved_size == 2);
    CHECK(r.claimed_size == BigRat(2));
    CHECK(r.validated);
    const std::vector<QarySequence> expected = {seq(2, "00"), seq(2, "11")};
    CHECK(r.code.codewords == expected);
}

TEST_CASE("orbit construction, q=2 n=6: odd nominal size cannot be met exactly") {
    // (2^5 + 2)/2 = 17 is odd, but the code must pair every word with its
    // distinct reverse complement, so the construction lands one short
    const ConstructionReport r = construct_orbit_code(2, 6);
    CHECK(r.case_used == ConstructionCase::odd_k);
    CHECK(r.claimed_size == BigRat(17));
    CHECK(r.achieved_size == 16);
    CHECK(r.validated);
    CHECK(!r.notes.empty());
    CHECK(is_rc_closed_and_self_rc_free(r.code.codewords));
}

TEST_CASE("orbit construction, q=2 n=8") {
    const ConstructionReport r = construct_orbit_code(2, 8);
    CHECK(r.case_used == ConstructionCase::power_of_two);
    CHECK(r.claimed_size == BigRat(64));
    CHECK(r.achieved_size == 64);
    CHECK(r.validated);
}

TEST_CASE("orbit construction, q=4 n=8") {
    const ConstructionReport r = construct_orbit_code(4, 8);
    CHECK(r.case_used == ConstructionCase::power_of_two);
    CHECK(r.claimed_size == BigRat(8192));  // 4^7 / 2
    CHECK(r.achieved_size == 8192);
    CHECK(r.validated);
    CHECK(BigInt(r.achieved_size) <= block_dna_size_upper_bound(4, 8));
}

TEST_CASE("orbit construction, q=2 n=12: even k, restricted to full orbits") {
    const ConstructionReport r = construct_orbit_code(2, 12);
    CHECK(r.case_used == ConstructionCase::even_k);
    CHECK(to_string(r.case_used) == "T31-even-k");
    // (2^11 - (2^7 - 1))/2, a guaranteed floor rather than an exact size
    CHECK(r.claimed_size == BigRat(1921, 2));
    CHECK(BigRat(static_cast<long>(r.achieved_size)) >= r.claimed_size);
    CHECK(r.achieved_size % 2 == 0);
    CHECK(r.validated);
    for (const QarySequence& x : r.code.codewords)
        CHECK(orbit_of(x).size() == 12);  // nothing from smaller orbits
}

TEST_CASE("orbit construction rejects lengths the cases do not cover") {
    CHECK_THROWS_AS(construct_orbit_code(2, 5), unsupported_parameters);
    CHECK_THROWS_AS(construct_orbit_code(4, 6), unsupported_parameters);
    CHECK_THROWS_AS(construct_orbit_code(3, 6), std::invalid_argument);
    CHECK_THROWS_AS(construct_orbit_code(4, 16), enumeration_refused);  // 4^16 states
    CHECK_THROWS_AS(construct_orbit_code(2, 8, 100), enumeration_refused);
}

TEST_CASE("odd-shift selection around a self-mirrored word") {
    // Every cyclic orbit of size 4k that contains a word equal to its own
    // reverse complement yields a small DNA code: take the odd shifts of such
    // a word.  Half the orbit survives, the result is closed under reverse
    // complement with no fixed point, and block similarity stays at n-2 or
    // less.
    for (int n : {4, 8}) {
        std::set<QarySequence> seen;
        for (const QarySequence& x : all_words(2, n)) {
            const Orbit orbit = orbit_of(x);
            if (seen.count(orbit.canonical())) continue;
            seen.insert(orbit.canonical());
            const bool self_rc_orbit =
                orbit.cls == OrbitClass::G2 || orbit.cls == OrbitClass::G3;
            if (!self_rc_orbit || orbit.size() % 4 != 0) continue;

            const QarySequence* anchor = nullptr;
            for (const QarySequence& m : orbit.members)
                if (is_self_reverse_complementary(m)) {
                    anchor = &m;
                    break;
                }
            REQUIRE(anchor != nullptr);

            std::vector<QarySequence> selection;
            for (std::size_t m = 1; m < orbit.size(); m += 2)
                selection.push_back(cyclic_shift(*anchor, static_cast<long>(m)));

            CHECK(selection.size() == orbit.size() / 2);
            CHECK(is_rc_closed_and_self_rc_free(selection));
            for (std::size_t i = 0; i < selection.size(); ++i)
                for (std::size_t j = i + 1; j < selection.size(); ++j)
                    CHECK(block_similarity(selection[i], selection[j]) <= n - 2);
        }
    }
}

TEST_CASE("Tenengolts classes") {
    CHECK(tenengolts_class(seq(2, "0000")) == TenengoltsClass{0, 2});
    const auto t02 = tenengolts_code(2, 4, 0, 2);
    CHECK(std::count(t02.begin(), t02.end(), seq(2, "0000")) == 1);

    SUBCASE("classes partition the whole space") {
        for (auto [q, n] : {std::pair{2, 4}, {4, 3}, {2, 5}}) {
            std::size_t total = 0;
            for (int beta = 0; beta < q; ++beta)
                for (int gamma = 0; gamma < n; ++gamma)
                    total += tenengolts_code(q, n, beta, gamma).size();
            BigInt space = ipow(q, static_cast<unsigned>(n));
            CHECK(BigInt(total) == space);
        }
    }

    SUBCASE("every nonempty class corrects a single deletion") {
        for (auto [q, n] : {std::pair{2, 4}, {2, 5}, {2, 6}, {4, 4}, {4, 6}}) {
            for (int beta = 0; beta < q; ++beta)
                for (int gamma = 0; gamma < n; ++gamma) {
                    const auto cls = tenengolts_code(q, n, beta, gamma);
                    if (cls.empty()) continue;
                    CHECK(validate_distance_only(cls, SimilarityKind::deletion, 1).valid);
                }
        }
    }

    SUBCASE("parameter checks") {
        CHECK_THROWS_AS(tenengolts_code(2, 4, 2, 0), std::invalid_argument);
        CHECK_THROWS_AS(tenengolts_code(2, 4, -1, 0), std::invalid_argument);
        CHECK_THROWS_AS(tenengolts_code(2, 4, 0, 4), std::invalid_argument);
        CHECK_THROWS_AS(tenengolts_code(2, 40, 0, 0), enumeration_refused);
    }
}

TEST_CASE("largest zero-sum Tenengolts class") {
    SUBCASE("q=4 n=4 clears the pigeonhole floor") {
        const TenengoltsBest best = best_tenengolts_class(4, 4);
        CHECK(best.code.size() >= 16);  // q^(n-1)/n = 64/4
        for (const QarySequence& x : best.code) {
            const TenengoltsClass tc = tenengolts_class(x);
            CHECK(tc.beta == 0);
            CHECK(tc.gamma == best.gamma);
        }
        CHECK(validate_distance_only(best.code, SimilarityKind::deletion, 1).valid);
    }

    SUBCASE("q=2 n=2 by hand") {
        const TenengoltsBest best = best_tenengolts_class(2, 2);
        CHECK(best.gamma == 1);
        const std::vector<QarySequence> expected = {seq(2, "00"), seq(2, "11")};
        CHECK(best.code == expected);
    }

    SUBCASE("ties fall to the smallest gamma") {
        for (auto [q, n] : {std::pair{2, 4}, {2, 6}, {4, 4}}) {
            const TenengoltsBest best = best_tenengolts_class(q, n);
            for (int gamma = 0; gamma < best.gamma; ++gamma)
                CHECK(tenengolts_code(q, n, 0, gamma).size() < best.code.size());
            for (int gamma = best.gamma + 1; gamma < n; ++gamma)
                CHECK(tenengolts_code(q, n, 0, gamma).size() <= best.code.size());
        }
    }

    SUBCASE("pigeonhole floor holds wherever the guarantee applies") {
        for (auto [q, n] : {std::pair{2, 2}, {2, 6}, {4, 4}}) {
            const TenengoltsBest best = best_tenengolts_class(q, n);
            CHECK(BigRat(static_cast<long>(best.code.size())) >=
                  deletion_dna_size_lower_bound(q, n));
        }
    }
}

TEST_CASE("composition symmetrization") {
    SUBCASE("single codeword") {
        const std::vector<QarySequence> input = {seq(4, "0000")};
        const ConstructionReport r = symmetrize_to_dna_code(input);
        CHECK(r.case_used == ConstructionCase::symmetrize);
        CHECK(to_string(r.case_used) == "T32");
        const std::vector<QarySequence> expected = {seq(4, "0000"), seq(4, "3333")};
        CHECK(r.code.codewords == expected);
        CHECK(r.achieved_size == 2);
        CHECK(r.claimed_size == BigRat(1));
        CHECK(r.validated);
    }

    SUBCASE("the best q=4 n=4 deletion code symmetrizes without loss") {
        const TenengoltsBest best = best_tenengolts_class(4, 4);
        const ConstructionReport r = symmetrize_to_dna_code(best.code);
        CHECK(r.achieved_size >= best.code.size());
        CHECK(r.achieved_size >= 16);
        CHECK(r.validated);
        CHECK(validate_dna_code(r.code.codewords, SimilarityKind::deletion, 1).valid);
        CHECK(is_rc_closed_and_self_rc_free(r.code.codewords));
    }

    SUBCASE("never shrinks, over every class with the right shape") {
        // n = q (k=1) for q in {2,4}, plus n = 3q for q=2; the q=4, n=12
        // instance is enumerable but its quadratic validation pass is not
        // worth the test time
        for (auto [q, n] : {std::pair{2, 2}, {4, 4}, {2, 6}}) {
            for (int gamma = 0; gamma < n; ++gamma) {
                // beta = 0 already pins these classes inside the zero-parity code
                const std::vector<QarySequence> cls = tenengolts_code(q, n, 0, gamma);
                if (cls.empty()) continue;
                const ConstructionReport r = symmetrize_to_dna_code(cls);
                CHECK(r.achieved_size >= cls.size());
                CHECK(r.achieved_size % 2 == 0);
                CHECK(r.validated);
            }
        }
    }

    SUBCASE("rejects inputs outside its contract") {
        const std::vector<QarySequence> empty;
        CHECK_THROWS_AS(symmetrize_to_dna_code(empty), std::invalid_argument);

        // k = n/q even
        const std::vector<QarySequence> wrong_shape = {seq(2, "0000")};
        CHECK_THROWS_AS(symmetrize_to_dna_code(wrong_shape), unsupported_parameters);

        // nonzero letter sum
        const std::vector<QarySequence> off_parity = {seq(4, "0001")};
        CHECK_THROWS_AS(symmetrize_to_dna_code(off_parity), std::invalid_argument);

        // 0130 is one cyclic shift of 0013: deletion similarity n-1
        const std::vector<QarySequence> too_close = {seq(4, "0013"), seq(4, "0130")};
        CHECK_THROWS_AS(symmetrize_to_dna_code(too_close), std::invalid_argument);

        // mixed lengths
        const std::vector<QarySequence> ragged = {seq(4, "0000"), seq(4, "00")};
        CHECK_THROWS_AS(symmetrize_to_dna_code(ragged), std::invalid_argument);
    }
}

TEST_CASE("guaranteed size of the symmetrized code") {
    CHECK(deletion_dna_size_lower_bound(4, 4) == BigRat(16));
    CHECK(deletion_dna_size_lower_bound(2, 2) == BigRat(1));
    CHECK(deletion_dna_size_lower_bound(2, 6) == BigRat(32, 6));
    CHECK_THROWS_AS(deletion_dna_size_lower_bound(2, 4), unsupported_parameters);
    CHECK_THROWS_AS(deletion_dna_size_lower_bound(4, 6), unsupported_parameters);
    CHECK_THROWS_AS(deletion_dna_size_lower_bound(3, 3), std::invalid_argument);
}

TEST_CASE("constructed codes respect the size ceiling") {
    for (auto [q, n] : {std::pair{2, 2}, {2, 4}, {2, 6}, {2, 8}, {4, 4}}) {
        const ConstructionReport r = construct_orbit_code(q, n);
        CHECK(BigInt(r.achieved_size) <= block_dna_size_upper_bound(q, n));
    }
}

}  // TEST_SUITE
