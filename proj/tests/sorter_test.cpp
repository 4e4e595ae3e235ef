#include "blocksort/errors.hpp"
#include "blocksort/sorter.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace blocksort;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

void expect_valid_trace(const SortTrace& t) {
    ASSERT_EQ(t.moves.size(), t.intermediates.size());
    ASSERT_EQ(t.moves.size(), t.bad_pair_counts.size());
    Permutation cur = t.input;
    for (std::size_t k = 0; k < t.moves.size(); ++k) {
        cur = apply_block_move(cur, t.moves[k]);
        ASSERT_EQ(cur, t.intermediates[k]);
        ASSERT_EQ(bad_pair_count(cur), t.bad_pair_counts[k]);
    }
    ASSERT_TRUE(t.complete());
}

}  // namespace

TEST(SelectPdec, Examples) {
    const auto a = select_pdec(P({5, 1, 3, 4, 2}));
    EXPECT_EQ(a.positions, (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_EQ(a.values, (std::vector<int>{5, 3, 2}));

    const auto b = select_pdec(P({9, 3, 10, 6, 8, 2, 4, 1, 5, 7, 12, 11, 13}));
    EXPECT_EQ(b.values, (std::vector<int>{9, 8, 7}));
    EXPECT_EQ(b.positions, (std::vector<std::size_t>{1, 5, 10}));

    const auto c = select_pdec(P({4, 3, 2, 1}));
    EXPECT_EQ(c.positions, (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(c.values, (std::vector<int>{4, 3, 2, 1}));
}

TEST(SelectPdec, RejectsViolatedPreconditions) {
    EXPECT_THROW(select_pdec(Permutation{}), ContractError);
    EXPECT_THROW(select_pdec(P({2, 1})), ContractError);
    EXPECT_THROW(select_pdec(P({1, 3, 2})), ContractError);
}

// The anchor has maximal reach, no left refinement and no insertable entry,
// judged by enumerating every decreasing subsequence from position 1.
TEST(SelectPdec, SatisfiesInvariantsAgainstBruteForce) {
    for (std::size_t n = 3; n <= 8; ++n)
        for (const auto& raw : oracle::all_permutations(n)) {
            if (raw[0] < 3) continue;
            const auto anchor = select_pdec(P(raw));
            ASSERT_EQ(anchor.positions.front(), 1u);
            for (std::size_t t = 1; t < anchor.positions.size(); ++t) {
                ASSERT_LT(anchor.positions[t - 1], anchor.positions[t]);
                ASSERT_GT(anchor.values[t - 1], anchor.values[t]);
                ASSERT_EQ(anchor.values[t], raw[anchor.positions[t] - 1]);
            }
            const auto verdict = oracle::judge_anchor(raw, anchor.positions);
            ASSERT_TRUE(verdict.maximal_reach) << P(raw);
            ASSERT_TRUE(verdict.no_left_refinement) << P(raw);
            ASSERT_TRUE(verdict.not_extendable) << P(raw);
        }
}

TEST(FindReducingMove, Examples) {
    const auto big = find_reducing_move_detailed(P({9, 3, 10, 6, 8, 2, 4, 1, 5, 7, 12, 11, 13}));
    EXPECT_EQ(big.move, (BlockMove{1, 4, 8, 10}));
    EXPECT_EQ(big.reduction, ReductionCase::anchor_adjacent);

    const auto small = find_reducing_move_detailed(P({1, 4, 3, 2, 5}));
    EXPECT_EQ(small.reduced_move, (BlockMove{1, 1, 3, 3}));
    EXPECT_EQ(small.move, (BlockMove{2, 2, 4, 4}));
    EXPECT_EQ(small.reduction, ReductionCase::two_before_one);
    EXPECT_EQ(bad_pair_count(apply_block_move(P({1, 4, 3, 2, 5}), small.move)), 0);

    EXPECT_EQ(find_reducing_move(P({2, 1})), (BlockMove{1, 1, 2, 2}));
    EXPECT_THROW(find_reducing_move(Permutation::identity(4)), ContractError);
}

// Every reduction case fires somewhere in S_7, and each removes >= 2 bad pairs.
TEST(FindReducingMove, EveryCaseReducesByTwo) {
    std::map<ReductionCase, int> seen;
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            if (p.is_identity()) continue;
            const auto r = find_reducing_move_detailed(p);
            ++seen[r.reduction];
            ASSERT_TRUE(r.move.valid_for(n));
            ASSERT_LE(bad_pair_count(apply_block_move(p, r.move)) - bad_pair_count(p), -2) << p;
        }
    EXPECT_EQ(seen.size(), 4u);
}

TEST(SortConstructive, Examples) {
    EXPECT_EQ(sort_constructive(Permutation::identity(5)).length(), 0u);
    const auto dec = sort_constructive(P({5, 4, 3, 2, 1}));
    EXPECT_EQ(dec.length(), 2u);
    expect_valid_trace(dec);
    const auto one = sort_constructive(P({1, 4, 3, 2, 5}));
    EXPECT_EQ(one.length(), 1u);
    expect_valid_trace(one);
}

TEST(SortGreedy, Examples) {
    const auto one = sort_greedy(P({1, 4, 3, 2, 5}));
    ASSERT_EQ(one.length(), 1u);
    EXPECT_EQ(one.moves.front(), (BlockMove{2, 2, 4, 4}));
    EXPECT_EQ(sort_greedy(Permutation::identity(3)).length(), 0u);
    const auto dec = sort_greedy(P({5, 4, 3, 2, 1}));
    EXPECT_EQ(dec.length(), 2u);
    expect_valid_trace(dec);
}

// Greedy choice is the lexicographically smallest move with the largest
// decrease, checked against full enumeration.
TEST(SortGreedy, PicksSmallestBestMove) {
    for (const auto& raw : oracle::all_permutations(6)) {
        const auto p = P(raw);
        if (p.is_identity()) continue;
        const auto trace = sort_greedy(p);
        BlockMove best{};
        int best_delta = 100;
        for (const auto& m : enumerate_block_moves(6, MoveKind::block_move)) {
            const int d = bad_pair_count(apply_block_move(p, m)) - bad_pair_count(p);
            if (d < best_delta) {
                best_delta = d;
                best = m;
            }
        }
        ASSERT_EQ(trace.moves.front(), best) << p;
    }
}

TEST(Sorters, TheoremBoundExhaustive) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto limit = (n + 1) / 2;
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            for (auto algorithm : {SortAlgorithm::constructive, SortAlgorithm::greedy}) {
                const auto t = sort_with(p, algorithm);
                ASSERT_TRUE(t.complete());
                ASSERT_LE(t.length(), limit) << p;
                ASSERT_LE(static_cast<int>(t.length()), (bad_pair_count(p) + 1) / 2) << p;
            }
            ASSERT_EQ(static_cast<std::size_t>(constructive_length(p)), sort_constructive(p).length());
        }
    }
}

// Sorting the contracted permutation step by step produces the same bad-pair
// deltas as sorting the original.
TEST(Sorters, ContractedAndOriginalDeltasAgree) {
    for (const auto& raw : oracle::all_permutations(7)) {
        const auto p = P(raw);
        const auto c = contract(p);
        if (c.reduced.empty()) continue;
        const auto m = find_reducing_move_detailed(p);
        const int reduced_delta = bad_pair_count(apply_block_move(c.reduced, m.reduced_move)) - bad_pair_count(c.reduced);
        const int original_delta = bad_pair_count(apply_block_move(p, m.move)) - bad_pair_count(p);
        ASSERT_EQ(reduced_delta, original_delta) << p;
    }
}

TEST(DecreasingSchedule, Examples) {
    EXPECT_EQ(decreasing_schedule(5), (std::vector<BlockMove>{{1, 1, 5, 5}, {2, 2, 4, 4}}));
    EXPECT_EQ(decreasing_schedule(2), (std::vector<BlockMove>{{1, 1, 2, 2}}));
    EXPECT_EQ(decreasing_schedule(4), (std::vector<BlockMove>{{1, 1, 4, 4}, {2, 2, 3, 3}}));
    EXPECT_TRUE(decreasing_schedule(1).empty());
}

TEST(DecreasingSchedule, SortsDecreasingPermutation) {
    for (std::size_t n = 2; n <= 40; ++n) {
        Permutation cur = Permutation::decreasing(n);
        const auto schedule = decreasing_schedule(n);
        EXPECT_EQ(schedule.size(), n / 2);  // == ceil((n-1)/2)
        for (const auto& m : schedule) cur = apply_block_move(cur, m);
        EXPECT_TRUE(cur.is_identity()) << n;
    }
}

TEST(SortConstructive, LargeRandomInputsStayWithinBound) {
    std::mt19937 rng(99);
    for (std::size_t n : {13u, 25u, 60u}) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::shuffle(v.begin(), v.end(), rng);
            const auto t = sort_constructive(P(v));
            expect_valid_trace(t);
            EXPECT_LE(t.length(), (n + 1) / 2);
        }
    }
}
