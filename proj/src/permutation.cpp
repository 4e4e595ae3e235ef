#include "blocksort/permutation.hpp"

#include "blocksort/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace blocksort {

std::string_view to_string(MoveKind kind) {
    return kind == MoveKind::block_move ? "move" : "transposition";
}

MoveKind parse_move_kind(std::string_view text) {
    if (text == "move" || text == "block_move" || text == "block-move") return MoveKind::block_move;
    if (text == "transposition" || text == "block_transposition" || text == "block-transposition")
        return MoveKind::block_transposition;
    throw InputError("unknown move kind '" + std::string(text) + "' (expected move|transposition)");
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw InputError("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[v]) throw InputError("duplicate value " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return from_trusted(std::move(e));
}

Permutation Permutation::decreasing(std::size_t n) {
    std::vector<int> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>(n - i);
    return from_trusted(std::move(e));
}

Permutation Permutation::from_trusted(std::vector<int> entries) noexcept {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != static_cast<int>(i + 1)) return false;
    return true;
}

std::size_t Permutation::position_of(int value) const {
    auto it = std::find(entries_.begin(), entries_.end(), value);
    if (it == entries_.end()) throw ContractError("value " + std::to_string(value) + " not in permutation");
    return static_cast<std::size_t>(it - entries_.begin()) + 1;
}

std::string to_string(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }

bool BlockMove::valid_for(std::size_t n) const noexcept {
    return 1 <= a_start && a_start <= a_end && a_end < b_start && b_start <= b_end && b_end <= n;
}

std::string to_string(const BlockMove& m) {
    std::ostringstream os;
    os << '(' << m.a_start << ',' << m.a_end << ", " << m.b_start << ',' << m.b_end << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const BlockMove& m) { return os << to_string(m); }

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        std::string_view token = text.substr(i, j - i);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InputError("non-integer token '" + std::string(token) + "'");
        values.push_back(v);
        i = j;
    }
    return Permutation(std::move(values));
}

void apply_block_move_unchecked(std::span<const int> src, const BlockMove& m, std::span<int> dst) noexcept {
    const auto a0 = m.a_start - 1, a1 = m.a_end, b0 = m.b_start - 1, b1 = m.b_end;
    auto out = std::copy(src.begin(), src.begin() + a0, dst.begin());
    out = std::copy(src.begin() + b0, src.begin() + b1, out);
    out = std::copy(src.begin() + a1, src.begin() + b0, out);
    out = std::copy(src.begin() + a0, src.begin() + a1, out);
    std::copy(src.begin() + b1, src.end(), out);
}

Permutation apply_block_move(const Permutation& p, const BlockMove& m) {
    if (!m.valid_for(p.size()))
        throw InvalidMoveError("move " + to_string(m) + " is not valid for length " + std::to_string(p.size()));
    std::vector<int> out(p.size());
    apply_block_move_unchecked(p.entries(), m, out);
    return Permutation::from_trusted(std::move(out));
}

BlockMove inverse_move(const BlockMove& m, std::size_t length_a, std::size_t length_b) {
    if (length_a != m.length_a() || length_b != m.length_b() || m.a_start == 0 || m.a_end >= m.b_start ||
        m.a_start > m.a_end || m.b_start > m.b_end)
        throw InvalidMoveError("inconsistent block lengths for " + to_string(m));
    return {m.a_start, m.a_start + length_b - 1, m.b_end - length_a + 1, m.b_end};
}

std::vector<BlockMove> enumerate_block_moves(std::size_t n, MoveKind kind) {
    std::vector<BlockMove> moves;
    if (n < 2) return moves;
    moves.reserve(block_move_count(n, kind));
    for (std::size_t as = 1; as <= n; ++as)
        for (std::size_t ae = as; ae < n; ++ae)
            for (std::size_t bs = ae + 1; bs <= n; ++bs) {
                if (kind == MoveKind::block_transposition && bs != ae + 1) break;
                for (std::size_t be = bs; be <= n; ++be) moves.push_back({as, ae, bs, be});
            }
    return moves;
}

std::size_t block_move_count(std::size_t n, MoveKind kind) noexcept {
    if (n < 2) return 0;
    // C(n+2, 4) choices of a_start <= a_end < b_start <= b_end; C(n+1, 3) when adjacent.
    if (kind == MoveKind::block_move) return (n + 2) * (n + 1) * n * (n - 1) / 24;
    return (n + 1) * n * (n - 1) / 6;
}

int descent_count(std::span<const int> entries) noexcept {
    int d = 0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] > entries[i + 1]) ++d;
    return d;
}

int descent_count(const Permutation& p) noexcept { return descent_count(p.entries()); }

PairClassification classify_pairs(const Permutation& p) {
    const auto n = p.size();
    PairClassification c;
    c.good.assign(n + 1, false);
    for (std::size_t i = 0; i <= n; ++i) {
        const int left = i == 0 ? 0 : p[i - 1];
        const int right = i == n ? static_cast<int>(n) + 1 : p[i];
        c.good[i] = left + 1 == right;
        if (c.good[i]) ++c.good_count;
    }
    c.bad_count = static_cast<int>(n + 1) - c.good_count;
    return c;
}

int bad_pair_count(std::span<const int> entries) noexcept {
    const auto n = entries.size();
    int bad = 0;
    int left = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const int right = i == n ? static_cast<int>(n) + 1 : entries[i];
        if (left + 1 != right) ++bad;
        left = right;
    }
    return bad;
}

int bad_pair_delta(std::span<const int> entries, const BlockMove& m) noexcept {
    const auto n = entries.size();
    // Value at 1-based position i, with sentinels 0 and n+1.
    auto at = [&](std::size_t i) -> int {
        if (i == 0) return 0;
        if (i == n + 1) return static_cast<int>(n) + 1;
        return entries[i - 1];
    };
    auto bad = [](int x, int y) { return x + 1 != y ? 1 : 0; };

    int before = bad(at(m.a_start - 1), at(m.a_start)) + bad(at(m.a_end), at(m.a_end + 1)) +
                 bad(at(m.b_end), at(m.b_end + 1));
    int after = bad(at(m.a_start - 1), at(m.b_start)) + bad(at(m.a_end), at(m.b_end + 1));
    if (m.is_transposition()) {
        after += bad(at(m.b_end), at(m.a_start));
    } else {
        before += bad(at(m.b_start - 1), at(m.b_start));
        after += bad(at(m.b_end), at(m.a_end + 1)) + bad(at(m.b_start - 1), at(m.a_start));
    }
    return after - before;
}

int descent_lower_bound(const Permutation& p) noexcept { return (descent_count(p) + 1) / 2; }

int combined_lower_bound(const Permutation& p) noexcept {
    return std::max(descent_lower_bound(p), (bad_pair_count(p) + 3) / 4);
}

namespace {

struct Glued {
    int value;
    PositionSpan span;
};

// Drops `value` from the label set: every larger label shifts down by one.
void relabel_after_removal(std::vector<Glued>& items, int value) {
    for (auto& g : items)
        if (g.value > value) --g.value;
}

}  // namespace

Contraction contract(const Permutation& p) {
    std::vector<Glued> items;
    items.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) items.push_back({p[i], {i + 1, i + 1}});

    bool changed = true;
    while (changed) {
        changed = false;
        if (!items.empty() && items.front().value == 1) {
            items.erase(items.begin());
            relabel_after_removal(items, 1);
            changed = true;
        }
        if (!items.empty() && items.back().value == static_cast<int>(items.size())) {
            items.pop_back();
            changed = true;
        }
        for (std::size_t i = 0; i + 1 < items.size();) {
            if (items[i].value + 1 == items[i + 1].value) {
                const int removed = items[i + 1].value;
                items[i].span.last = items[i + 1].span.last;
                items.erase(items.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                relabel_after_removal(items, removed);
                changed = true;
            } else {
                ++i;
            }
        }
    }

    Contraction c;
    std::vector<int> values;
    values.reserve(items.size());
    c.spans.reserve(items.size());
    for (const auto& g : items) {
        values.push_back(g.value);
        c.spans.push_back(g.span);
    }
    c.reduced = Permutation::from_trusted(std::move(values));
    return c;
}

BlockMove lift_move(const Contraction& c, const BlockMove& reduced_move) {
    if (!reduced_move.valid_for(c.spans.size()))
        throw InvalidMoveError("move " + to_string(reduced_move) + " is not valid for the contracted permutation");
    return {c.spans[reduced_move.a_start - 1].first, c.spans[reduced_move.a_end - 1].last,
            c.spans[reduced_move.b_start - 1].first, c.spans[reduced_move.b_end - 1].last};
}

}  // namespace blocksort
