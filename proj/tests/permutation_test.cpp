#include "blocksort/errors.hpp"
#include "blocksort/permutation.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace blocksort;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<int> vec(const Permutation& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST(ParsePermutation, AcceptsSpacesAndCommas) {
    EXPECT_EQ(parse_permutation("5 1 3 4 2"), P({5, 1, 3, 4, 2}));
    EXPECT_EQ(parse_permutation("5,1, 3 ,4,2"), P({5, 1, 3, 4, 2}));
    EXPECT_EQ(parse_permutation("1"), P({1}));
    EXPECT_TRUE(parse_permutation("").empty());
}

TEST(ParsePermutation, ReportsOffendingToken) {
    try {
        parse_permutation("1 1 2");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("duplicate value 1"), std::string::npos);
    }
    EXPECT_THROW(parse_permutation("1 4 2"), InputError);
    EXPECT_THROW(parse_permutation("0 1"), InputError);
    EXPECT_THROW(parse_permutation("1 x 2"), InputError);
    EXPECT_THROW(parse_permutation("1 2.5"), InputError);
}

TEST(ApplyBlockMove, WorkedExamples) {
    EXPECT_EQ(apply_block_move(P({9, 3, 10, 6, 8, 2, 4, 1, 5, 7, 12, 11, 13}), {1, 4, 8, 10}),
              P({1, 5, 7, 8, 2, 4, 9, 3, 10, 6, 12, 11, 13}));
    EXPECT_EQ(apply_block_move(P({1, 4, 3, 2, 5}), {2, 2, 4, 4}), Permutation::identity(5));
    EXPECT_EQ(apply_block_move(P({1, 2}), {1, 1, 2, 2}), P({2, 1}));
}

TEST(ApplyBlockMove, RejectsInvalidMoves) {
    const auto p = P({3, 1, 2});
    EXPECT_THROW(apply_block_move(p, {1, 2, 2, 3}), InvalidMoveError);  // overlap
    EXPECT_THROW(apply_block_move(p, {1, 1, 3, 4}), InvalidMoveError);  // past the end
    EXPECT_THROW(apply_block_move(p, {0, 1, 2, 2}), InvalidMoveError);
    EXPECT_THROW(apply_block_move(p, {2, 1, 3, 3}), InvalidMoveError);  // empty block
}

TEST(InverseMove, Examples) {
    EXPECT_EQ(inverse_move({1, 4, 8, 10}, 4, 3), (BlockMove{1, 3, 7, 10}));
    EXPECT_EQ(inverse_move({2, 2, 4, 4}, 1, 1), (BlockMove{2, 2, 4, 4}));
    EXPECT_EQ(inverse_move({1, 1, 2, 3}, 1, 2), (BlockMove{1, 2, 3, 3}));
    EXPECT_THROW(inverse_move({1, 1, 2, 3}, 2, 2), InvalidMoveError);

    const auto p = P({9, 3, 10, 6, 8, 2, 4, 1, 5, 7, 12, 11, 13});
    EXPECT_EQ(apply_block_move(apply_block_move(p, {1, 4, 8, 10}), {1, 3, 7, 10}), p);
}

// Exhaustive for n <= 6: every move agrees with the slicing oracle, preserves
// the value set, and is undone by its inverse.
TEST(ApplyBlockMove, MatchesOracleAndInvertsExhaustively) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto moves = enumerate_block_moves(n, MoveKind::block_move);
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            for (const auto& m : moves) {
                const auto q = apply_block_move(p, m);
                ASSERT_EQ(vec(q), oracle::apply_move(raw, {m.a_start, m.a_end, m.b_start, m.b_end}));
                ASSERT_NO_THROW(Permutation(vec(q)));
                ASSERT_EQ(apply_block_move(q, inverse_move(m)), p);
            }
        }
    }
}

TEST(EnumerateBlockMoves, SmallCases) {
    EXPECT_EQ(enumerate_block_moves(2, MoveKind::block_move), (std::vector<BlockMove>{{1, 1, 2, 2}}));
    EXPECT_EQ(enumerate_block_moves(3, MoveKind::block_transposition),
              (std::vector<BlockMove>{{1, 1, 2, 2}, {1, 1, 2, 3}, {1, 2, 3, 3}, {2, 2, 3, 3}}));
    EXPECT_EQ(enumerate_block_moves(3, MoveKind::block_move),
              (std::vector<BlockMove>{{1, 1, 2, 2}, {1, 1, 2, 3}, {1, 1, 3, 3}, {1, 2, 3, 3}, {2, 2, 3, 3}}));
    EXPECT_TRUE(enumerate_block_moves(1, MoveKind::block_move).empty());
    EXPECT_TRUE(enumerate_block_moves(0, MoveKind::block_transposition).empty());
}

TEST(EnumerateBlockMoves, MatchesBruteForceAndIsSorted) {
    for (std::size_t n = 2; n <= 9; ++n)
        for (auto kind : {MoveKind::block_move, MoveKind::block_transposition}) {
            const auto moves = enumerate_block_moves(n, kind);
            const auto brute = oracle::moves(n, kind == MoveKind::block_transposition);
            ASSERT_EQ(moves.size(), brute.size());
            ASSERT_EQ(moves.size(), block_move_count(n, kind));
            for (std::size_t i = 0; i < moves.size(); ++i) {
                EXPECT_EQ(moves[i].a_start, brute[i][0]);
                EXPECT_EQ(moves[i].a_end, brute[i][1]);
                EXPECT_EQ(moves[i].b_start, brute[i][2]);
                EXPECT_EQ(moves[i].b_end, brute[i][3]);
            }
            EXPECT_TRUE(std::is_sorted(moves.begin(), moves.end()));
        }
}

TEST(Descents, Examples) {
    EXPECT_EQ(descent_count(P({3, 4, 1, 5, 2})), 2);
    EXPECT_EQ(descent_count(Permutation::identity(7)), 0);
    EXPECT_EQ(descent_count(P({5, 4, 3, 2, 1})), 4);
    EXPECT_EQ(descent_count(Permutation{}), 0);
}

TEST(ClassifyPairs, Examples) {
    const auto c = classify_pairs(P({4, 1, 2, 5, 3}));
    EXPECT_EQ(c.good, (std::vector<bool>{false, false, true, false, false, false}));
    EXPECT_EQ(c.good_count, 1);
    EXPECT_EQ(c.bad_count, 5);

    EXPECT_EQ(classify_pairs(P({1, 4, 3, 2, 5})).bad_count, 4);

    const auto id = classify_pairs(Permutation::identity(6));
    EXPECT_EQ(id.bad_count, 0);
    EXPECT_EQ(id.good_count, 7);

    const auto big = classify_pairs(P({9, 3, 10, 6, 8, 2, 4, 1, 5, 7, 12, 11, 13}));
    EXPECT_EQ(big.bad_count, 13);
    EXPECT_TRUE(big.good[13]);

    const auto one = classify_pairs(P({1}));
    EXPECT_EQ(one.good_count, 2);
    const auto empty = classify_pairs(Permutation{});
    EXPECT_EQ(empty.good_count, 1);  // the sentinels 0 and 1 are adjacent
    EXPECT_EQ(empty.bad_count, 0);
}

TEST(ClassifyPairs, InvariantsExhaustive) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            const auto c = classify_pairs(p);
            ASSERT_EQ(c.good_count + c.bad_count, static_cast<int>(n) + 1);
            ASSERT_EQ(c.good[0], p[0] == 1);
            ASSERT_EQ(c.good[n], p[n - 1] == static_cast<int>(n));
            ASSERT_EQ(c.bad_count == 0, p.is_identity());
            if (!p.is_identity()) ASSERT_GE(c.bad_count, 2);
            ASSERT_EQ(c.bad_count, oracle::bad_pairs(raw));
            ASSERT_EQ(bad_pair_count(p), c.bad_count);
        }
}

TEST(LowerBounds, Examples) {
    EXPECT_EQ(descent_lower_bound(P({5, 4, 3, 2, 1})), 2);
    EXPECT_EQ(descent_lower_bound(Permutation::identity(4)), 0);
    EXPECT_EQ(descent_lower_bound(P({3, 4, 1, 5, 2})), 1);
    EXPECT_EQ(combined_lower_bound(P({5, 4, 3, 2, 1})), 2);
    EXPECT_EQ(combined_lower_bound(Permutation::identity(4)), 0);
    EXPECT_EQ(combined_lower_bound(P({4, 1, 2, 5, 3})), 2);
}

// Descent and bad-pair changes per move, exhaustive for n <= 6; the fast
// boundary-only delta agrees with full recounting.
TEST(MoveDeltas, BoundedExhaustive) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto moves = enumerate_block_moves(n, MoveKind::block_move);
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            for (const auto& m : moves) {
                const auto q = apply_block_move(p, m);
                const int dd = descent_count(q) - descent_count(p);
                ASSERT_GE(dd, -2);
                ASSERT_LE(dd, 2);
                const int db = bad_pair_count(q) - bad_pair_count(p);
                ASSERT_LE(std::abs(db), 4);
                ASSERT_EQ(bad_pair_delta(p.entries(), m), db) << p << ' ' << m;
            }
        }
    }
}

TEST(Contract, Examples) {
    const auto a = contract(P({1, 4, 3, 2, 5}));
    EXPECT_EQ(a.reduced, P({3, 2, 1}));
    EXPECT_EQ(a.spans, (std::vector<PositionSpan>{{2, 2}, {3, 3}, {4, 4}}));

    EXPECT_TRUE(contract(Permutation::identity(5)).reduced.empty());

    const auto b = contract(P({4, 1, 2, 5, 3}));
    EXPECT_EQ(b.reduced, P({3, 1, 4, 2}));
    EXPECT_EQ(b.spans, (std::vector<PositionSpan>{{1, 1}, {2, 3}, {4, 4}, {5, 5}}));

    const auto c = contract(P({1, 2, 5, 3, 4}));  // strips 1 2, glues 3 4
    EXPECT_EQ(c.reduced, P({2, 1}));
    EXPECT_EQ(c.spans, (std::vector<PositionSpan>{{3, 3}, {4, 5}}));
}

TEST(Contract, NoGoodPairsAndOrderIndependent) {
    std::mt19937 rng(12345);
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto c = contract(P(raw));
            ASSERT_EQ(c.reduced.is_identity(), P(raw).is_identity());
            if (!c.reduced.empty()) ASSERT_EQ(classify_pairs(c.reduced).good_count, 0) << P(raw);
            ASSERT_EQ(c.spans.size(), c.reduced.size());
            for (int trial = 0; trial < 3; ++trial)
                ASSERT_EQ(vec(c.reduced), oracle::contract_random_order(raw, rng)) << P(raw);
            // Spans are contiguous runs of consecutive values in the original.
            for (const auto& s : c.spans)
                for (std::size_t i = s.first; i < s.last; ++i) ASSERT_EQ(raw[i - 1] + 1, raw[i]);
        }
}

TEST(Contract, LiftedMovesPreserveBadPairDelta) {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& raw : oracle::all_permutations(n)) {
            const auto p = P(raw);
            const auto c = contract(p);
            if (c.reduced.size() < 2) continue;
            for (const auto& m : enumerate_block_moves(c.reduced.size(), MoveKind::block_move)) {
                const int reduced_delta = bad_pair_count(apply_block_move(c.reduced, m)) - bad_pair_count(c.reduced);
                const int lifted_delta = bad_pair_count(apply_block_move(p, lift_move(c, m))) - bad_pair_count(p);
                ASSERT_EQ(reduced_delta, lifted_delta) << p << ' ' << m;
            }
        }
}
