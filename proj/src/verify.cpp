#include "blocksort/verify.hpp"

#include "blocksort/parallel.hpp"
#include "blocksort/sorter.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace blocksort {

namespace {

struct Violation {
    Permutation permutation;
    std::optional<BlockMove> move;
    std::string why;
};

// Runs `probe` on every permutation of S_n; reports the first violation in rank order.
template <typename Probe>
CheckResult exhaustive(std::string name, std::string detail, std::size_t n, unsigned threads, Probe probe) {
    auto found = map_chunks(factorial(n), 64, threads, [&](std::size_t begin, std::size_t end) -> std::optional<Violation> {
        std::vector<int> e(n);
        for (std::size_t r = begin; r < end; ++r) {
            unrank_into(r, e);
            if (auto v = probe(Permutation::from_trusted(e))) return v;
        }
        return std::nullopt;
    });
    CheckResult result{std::move(name), CheckStatus::pass, std::move(detail), std::nullopt, std::nullopt};
    for (auto& v : found) {
        if (!v) continue;
        result.status = CheckStatus::fail;
        result.detail = v->why;
        result.counterexample = v->permutation;
        result.move = v->move;
        break;
    }
    return result;
}

}  // namespace

CheckResult lemma_check(std::size_t n, unsigned threads) {
    const auto moves = enumerate_block_moves(n, MoveKind::block_move);
    return exhaustive("descent lemma", "|d(p') - d(p)| <= 2 for all p and all " + std::to_string(moves.size()) + " moves",
                      n, threads, [&](const Permutation& p) -> std::optional<Violation> {
                          const int d = descent_count(p);
                          std::vector<int> out(n);
                          for (const auto& m : moves) {
                              apply_block_move_unchecked(p.entries(), m, out);
                              const int change = descent_count(out) - d;
                              if (change < -2 || change > 2)
                                  return Violation{p, m, "descent count changes by " + std::to_string(change)};
                          }
                          return std::nullopt;
                      });
}

CheckResult proposition_check(std::size_t n, unsigned threads) {
    return exhaustive("bad-pair reduction", "a move removing >= 2 bad pairs is found for every non-identity p", n,
                      threads, [](const Permutation& p) -> std::optional<Violation> {
                          if (p.is_identity()) return std::nullopt;
                          const BlockMove m = find_reducing_move(p);
                          if (!m.valid_for(p.size())) return Violation{p, m, "invalid move"};
                          const int change = bad_pair_count(apply_block_move(p, m)) - bad_pair_count(p);
                          if (change > -2) return Violation{p, m, "bad pairs change by " + std::to_string(change)};
                          return std::nullopt;
                      });
}

CheckResult theorem_check(std::size_t n, unsigned threads) {
    const auto limit = (n + 1) / 2;
    return exhaustive("sorting bound", "constructive and greedy traces sort within " + std::to_string(limit) + " moves",
                      n, threads, [&](const Permutation& p) -> std::optional<Violation> {
                          for (auto algorithm : {SortAlgorithm::constructive, SortAlgorithm::greedy}) {
                              const auto trace = sort_with(p, algorithm);
                              const std::string tag(to_string(algorithm));
                              if (!trace.complete()) return Violation{p, std::nullopt, tag + " trace does not end at the identity"};
                              if (trace.length() > limit)
                                  return Violation{p, std::nullopt, tag + " trace uses " + std::to_string(trace.length()) + " moves"};
                              int previous = bad_pair_count(p);
                              for (std::size_t k = 0; k < trace.length(); ++k) {
                                  if (trace.bad_pair_counts[k] > previous - 2)
                                      return Violation{p, trace.moves[k], tag + " step removes fewer than two bad pairs"};
                                  previous = trace.bad_pair_counts[k];
                              }
                          }
                          return std::nullopt;
                      });
}

bool VerificationReport::passed() const noexcept {
    return std::all_of(per_n.begin(), per_n.end(), [](const BoundsReport& r) { return r.passed(); });
}

VerificationReport run_verification(std::size_t max_n, TableCache& cache, const VerifyCaps& caps) {
    VerificationReport report;
    report.max_n = max_n;
    const unsigned threads = cache.options().threads;
    auto skip = [](std::string name, std::string why) {
        return CheckResult{std::move(name), CheckStatus::skipped, std::move(why), std::nullopt, std::nullopt};
    };
    for (std::size_t n = 1; n <= max_n; ++n) {
        BoundsReport entry;
        entry.n = n;
        if (n < 2) {
            entry.checks.push_back(skip("all checks", "n < 2 has no nontrivial block move"));
            report.per_n.push_back(std::move(entry));
            continue;
        }
        entry.checks.push_back(n <= caps.lemma ? lemma_check(n, threads)
                                               : skip("descent lemma", "above exhaustive cap " + std::to_string(caps.lemma)));
        if (n <= caps.proposition) {
            entry.checks.push_back(proposition_check(n, threads));
            entry.checks.push_back(theorem_check(n, threads));
        } else {
            entry.checks.push_back(skip("bad-pair reduction", "above exhaustive cap " + std::to_string(caps.proposition)));
            entry.checks.push_back(skip("sorting bound", "above exhaustive cap " + std::to_string(caps.proposition)));
        }
        if (n <= caps.distance) {
            auto bounds = check_bounds(n, cache);
            for (auto& c : bounds.checks) entry.checks.push_back(std::move(c));
        } else {
            entry.checks.push_back(skip("distance checks", "above exact-search cap " + std::to_string(caps.distance)));
        }
        report.per_n.push_back(std::move(entry));
    }
    return report;
}

}  // namespace blocksort
