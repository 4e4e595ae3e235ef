#include "blocksort/sorter.hpp"

#include "blocksort/errors.hpp"

#include <limits>
#include <string>

namespace blocksort {

std::string_view to_string(SortAlgorithm algorithm) {
    return algorithm == SortAlgorithm::constructive ? "constructive" : "greedy";
}

SortAlgorithm parse_sort_algorithm(std::string_view text) {
    if (text == "constructive") return SortAlgorithm::constructive;
    if (text == "greedy") return SortAlgorithm::greedy;
    throw InputError("unknown sort algorithm '" + std::string(text) + "' (expected constructive|greedy)");
}

DecreasingAnchor select_pdec(const Permutation& q) {
    const auto m = q.size();
    if (m == 0 || q[0] < 3) throw ContractError("select_pdec needs a non-empty permutation starting with a value >= 3");

    // reach[i]: rightmost position (0-based) ending a decreasing subsequence that starts at i.
    std::vector<std::size_t> reach(m);
    for (std::size_t i = m; i-- > 0;) {
        reach[i] = i;
        for (std::size_t j = i + 1; j < m; ++j)
            if (q[j] < q[i] && reach[j] > reach[i]) reach[i] = reach[j];
    }
    const std::size_t target = reach[0];

    DecreasingAnchor anchor;
    std::size_t cur = 0;
    anchor.positions.push_back(1);
    anchor.values.push_back(q[0]);
    while (cur != target) {
        std::size_t next = cur + 1;
        while (!(q[next] < q[cur] && reach[next] == target)) ++next;
        cur = next;
        anchor.positions.push_back(cur + 1);
        anchor.values.push_back(q[cur]);
    }
    return anchor;
}

namespace {

// Case analysis on a permutation with no good pairs. Positions are 1-based.
// The anchor cases run before the "2 precedes 1" case; the latter is only
// needed when entry 1 terminates the anchor.
std::pair<BlockMove, ReductionCase> reduce_contracted(const Permutation& q) {
    const std::size_t pos1 = q.position_of(1);
    const std::size_t pos2 = q.position_of(2);

    if (q[0] == 2) return {{1, pos1 - 1, pos1, pos1}, ReductionCase::two_first};

    const DecreasingAnchor anchor = select_pdec(q);
    if (anchor.positions.back() <= pos1) {
        // Every entry right of the anchor exceeds all anchor values, so 1 is its last entry.
        if (pos2 > pos1) throw ContractError("entry 1 ends the anchor of " + to_string(q) + " but 2 follows it");
        return {{1, pos2 - 1, pos1, pos1}, ReductionCase::two_before_one};
    }

    std::size_t j = 0;
    while (anchor.positions[j + 1] < pos1) ++j;

    const int upper = anchor.values[j];
    const std::size_t a_end = j == 0 ? pos1 - 1 : anchor.positions[j] - 1;
    if (upper - 1 == anchor.values[j + 1])
        return {{1, a_end, pos1, anchor.positions[j + 1]}, ReductionCase::anchor_adjacent};
    const std::size_t pos_pred = q.position_of(upper - 1);
    if (pos_pred <= anchor.positions[j + 1])
        throw ContractError("anchor of " + to_string(q) + " admits a left refinement");
    return {{1, a_end, pos1, pos_pred}, ReductionCase::anchor_gap};
}

}  // namespace

ReducingMove find_reducing_move_detailed(const Permutation& p) {
    if (p.is_identity()) throw ContractError("the identity permutation admits no reducing move");
    const Contraction c = contract(p);
    auto [reduced_move, reduction] = reduce_contracted(c.reduced);
    return {lift_move(c, reduced_move), reduced_move, reduction};
}

namespace {

BlockMove best_greedy_move(const Permutation& p) {
    const auto n = p.size();
    BlockMove best;
    int best_delta = std::numeric_limits<int>::max();
    for (std::size_t as = 1; as <= n; ++as)
        for (std::size_t ae = as; ae < n; ++ae)
            for (std::size_t bs = ae + 1; bs <= n; ++bs)
                for (std::size_t be = bs; be <= n; ++be) {
                    const BlockMove m{as, ae, bs, be};
                    const int delta = bad_pair_delta(p.entries(), m);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best = m;
                    }
                }
    return best;
}

template <typename ChooseMove>
SortTrace run_sort(const Permutation& p, SortAlgorithm algorithm, ChooseMove choose) {
    SortTrace trace;
    trace.input = p;
    trace.algorithm = algorithm;
    Permutation cur = p;
    int bad = bad_pair_count(cur);
    while (bad > 0) {
        const BlockMove m = choose(cur);
        Permutation next = apply_block_move(cur, m);
        const int next_bad = bad_pair_count(next);
        if (next_bad > bad - 2)
            throw ContractError("move " + to_string(m) + " on " + to_string(cur) + " removes fewer than two bad pairs");
        trace.moves.push_back(m);
        trace.bad_pair_counts.push_back(next_bad);
        trace.intermediates.push_back(next);
        cur = std::move(next);
        bad = next_bad;
    }
    return trace;
}

}  // namespace

SortTrace sort_constructive(const Permutation& p) {
    return run_sort(p, SortAlgorithm::constructive, [](const Permutation& cur) { return find_reducing_move(cur); });
}

SortTrace sort_greedy(const Permutation& p) {
    return run_sort(p, SortAlgorithm::greedy, best_greedy_move);
}

SortTrace sort_with(const Permutation& p, SortAlgorithm algorithm) {
    return algorithm == SortAlgorithm::constructive ? sort_constructive(p) : sort_greedy(p);
}

int constructive_length(const Permutation& p) {
    int count = 0;
    Permutation cur = p;
    while (!cur.is_identity()) {
        cur = apply_block_move(cur, find_reducing_move(cur));
        ++count;
    }
    return count;
}

int greedy_length(const Permutation& p) {
    int count = 0;
    Permutation cur = p;
    while (!cur.is_identity()) {
        cur = apply_block_move(cur, best_greedy_move(cur));
        ++count;
    }
    return count;
}

std::vector<BlockMove> decreasing_schedule(std::size_t n) {
    std::vector<BlockMove> moves;
    if (n < 2) return moves;
    for (std::size_t i = 1; i <= n / 2; ++i) moves.push_back({i, i, n + 1 - i, n + 1 - i});
    return moves;
}

}  // namespace blocksort
