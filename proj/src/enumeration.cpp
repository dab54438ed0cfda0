#include "holey/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <thread>

#include "holey/bounds.hpp"
#include "holey/error.hpp"

namespace holey {

namespace {

enum class Step { Descend, Skip };

// Redelmeier lattice-animal enumeration with a forbidden-cell frontier.
// Cells live on a board of width 2n-1 and height n; the first cell is
// pinned to the leftmost position of the bottom row, which canonicalizes
// translation. Every node of the recursion tree at depth d is a distinct
// fixed d-omino, and all of them appear.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int max_n)
        : n_(max_n),
          W_(2 * max_n - 1),
          H_(max_n),
          origin_col_(max_n - 1),
          occ_(static_cast<std::size_t>(W_) * H_, 0),
          seen_(static_cast<std::size_t>(W_) * H_, 0),
          cells_(static_cast<std::size_t>(max_n)),
          path_(static_cast<std::size_t>(max_n), 0),
          save_minc_(static_cast<std::size_t>(max_n)),
          save_maxc_(static_cast<std::size_t>(max_n)),
          save_maxy_(static_cast<std::size_t>(max_n)),
          arena_(static_cast<std::size_t>(max_n + 1) * cap()),
          stamp_(static_cast<std::size_t>(W_ + 2) * (H_ + 2), 0) {}

    // visit(size) is called once per node; prefix pins the pop index taken
    // at the first prefix.size() levels (work sharding); nodes smaller than
    // min_visit_size are not reported.
    template <class V>
    void run(V&& visit, const std::vector<int>& prefix = {}, int min_visit_size = 1) {
        min_visit_size_ = min_visit_size;
        abort_ = false;
        b_ = 0;
        minc_ = maxc_ = origin_col_;
        maxy_ = 0;
        int* root = level_buf(0);
        const int origin = origin_col_;  // y = 0
        root[0] = origin;
        seen_[origin] = 1;
        rec(visit, 0, root, 1, prefix);
        seen_[origin] = 0;
    }

    void abort() { abort_ = true; }

    int depth_cells(int size, std::vector<Cell>& out) const {
        out.clear();
        for (int i = 0; i < size; ++i) out.push_back(decode(cells_[i]));
        return size;
    }

    std::int64_t shared_edges() const { return b_; }
    const std::vector<int>& path() const { return path_; }

    // Bounded empty components of the current cell set (padded-bbox flood
    // fill over the live board).
    std::int64_t holes_now() {
        const int c0 = minc_ - 1, c1 = maxc_ + 1;
        const int y0 = -1, y1 = maxy_ + 1;
        const int sw = W_ + 2;
        ++stamp_ctr_;
        const int outside = stamp_ctr_;
        ++stamp_ctr_;
        const int interior = stamp_ctr_;

        auto sidx = [&](int c, int y) { return (y + 1) * sw + (c + 1); };
        auto occupied = [&](int c, int y) {
            return c >= 0 && c < W_ && y >= 0 && y < H_ &&
                   occ_[static_cast<std::size_t>(y) * W_ + c] != 0;
        };

        fstack_.clear();
        auto push = [&](int c, int y, int mark) {
            if (occupied(c, y)) return;
            int& s = stamp_[static_cast<std::size_t>(sidx(c, y))];
            if (s >= outside) return;  // already reached in this query
            s = mark;
            fstack_.push_back(c);
            fstack_.push_back(y);
        };
        auto drain = [&](int mark) {
            while (!fstack_.empty()) {
                int y = fstack_.back();
                fstack_.pop_back();
                int c = fstack_.back();
                fstack_.pop_back();
                if (c + 1 <= c1) push(c + 1, y, mark);
                if (c - 1 >= c0) push(c - 1, y, mark);
                if (y + 1 <= y1) push(c, y + 1, mark);
                if (y - 1 >= y0) push(c, y - 1, mark);
            }
        };

        for (int c = c0; c <= c1; ++c) {
            push(c, y0, outside);
            push(c, y1, outside);
        }
        for (int y = y0; y <= y1; ++y) {
            push(c0, y, outside);
            push(c1, y, outside);
        }
        drain(outside);

        std::int64_t count = 0;
        for (int y = y0 + 1; y < y1; ++y) {
            for (int c = c0 + 1; c < c1; ++c) {
                if (occupied(c, y)) continue;
                if (stamp_[static_cast<std::size_t>(sidx(c, y))] >= outside) continue;
                ++count;
                push(c, y, interior);
                drain(interior);
            }
        }
        return count;
    }

    // Deterministic shard plan: the pop-index pairs taken at levels 1 and 2.
    static std::vector<std::vector<int>> make_shards() {
        TreeEnumerator probe(3);
        std::vector<std::vector<int>> shards;
        probe.run([&](int size, TreeEnumerator& e) {
            if (size == 3) shards.push_back({e.path_[0], e.path_[1], e.path_[2]});
            return Step::Descend;
        });
        return shards;
    }

private:
    int cap() const { return 4 * n_ + 4; }
    int* level_buf(int depth) { return arena_.data() + static_cast<std::size_t>(depth) * cap(); }

    Cell decode(int idx) const {
        return {static_cast<std::int32_t>(idx % W_ - origin_col_),
                static_cast<std::int32_t>(idx / W_)};
    }

    int count_occ_neighbors(int idx) const {
        const int c = idx % W_, y = idx / W_;
        int cnt = 0;
        if (c + 1 < W_) cnt += occ_[idx + 1];
        if (c - 1 >= 0) cnt += occ_[idx - 1];
        if (y + 1 < H_) cnt += occ_[idx + W_];
        if (y - 1 >= 0) cnt += occ_[idx - W_];
        return cnt;
    }

    template <class V>
    void rec(V& visit, int depth, int* untried, int untried_len, const std::vector<int>& prefix) {
        int pop_i = 0;
        while (untried_len > 0 && !abort_) {
            const int c = untried[--untried_len];
            const bool in_prefix = depth < static_cast<int>(prefix.size());
            if (in_prefix && pop_i != prefix[static_cast<std::size_t>(depth)]) {
                ++pop_i;  // this branch belongs to another shard
                continue;
            }
            path_[static_cast<std::size_t>(depth)] = pop_i;
            ++pop_i;

            // place
            occ_[static_cast<std::size_t>(c)] = 1;
            cells_[static_cast<std::size_t>(depth)] = c;
            b_ += count_occ_neighbors(c) - 0;
            save_minc_[static_cast<std::size_t>(depth)] = minc_;
            save_maxc_[static_cast<std::size_t>(depth)] = maxc_;
            save_maxy_[static_cast<std::size_t>(depth)] = maxy_;
            const int ccol = c % W_, cy = c / W_;
            minc_ = std::min(minc_, ccol);
            maxc_ = std::max(maxc_, ccol);
            maxy_ = std::max(maxy_, cy);

            Step step = Step::Descend;
            if (depth + 1 >= min_visit_size_) step = visit(depth + 1, *this);

            if (depth + 1 < n_ && step == Step::Descend && !abort_) {
                int* child = level_buf(depth + 1);
                std::copy(untried, untried + untried_len, child);
                int clen = untried_len;
                int added[4];
                int na = 0;
                auto try_add = [&](int nb) {
                    if (!occ_[static_cast<std::size_t>(nb)] && !seen_[static_cast<std::size_t>(nb)]) {
                        seen_[static_cast<std::size_t>(nb)] = 1;
                        child[clen++] = nb;
                        added[na++] = nb;
                    }
                };
                if (ccol + 1 < W_) try_add(c + 1);
                if (ccol - 1 >= 0 && (cy > 0 || ccol - 1 >= origin_col_)) try_add(c - 1);
                if (cy + 1 < H_) try_add(c + W_);
                if (cy - 1 > 0 || (cy - 1 == 0 && ccol >= origin_col_)) try_add(c - W_);

                rec(visit, depth + 1, child, clen, prefix);
                for (int i = 0; i < na; ++i) seen_[static_cast<std::size_t>(added[i])] = 0;
            }

            // unplace
            occ_[static_cast<std::size_t>(c)] = 0;
            b_ -= count_occ_neighbors(c);
            minc_ = save_minc_[static_cast<std::size_t>(depth)];
            maxc_ = save_maxc_[static_cast<std::size_t>(depth)];
            maxy_ = save_maxy_[static_cast<std::size_t>(depth)];

            if (in_prefix) return;  // the shard covers exactly one branch here
        }
    }

    int n_, W_, H_, origin_col_;
    std::vector<std::uint8_t> occ_, seen_;
    std::vector<int> cells_, path_;
    std::vector<int> save_minc_, save_maxc_, save_maxy_;
    std::vector<int> arena_;
    std::vector<int> stamp_;
    std::vector<int> fstack_;
    int stamp_ctr_ = 0;
    std::int64_t b_ = 0;
    int minc_ = 0, maxc_ = 0, maxy_ = 0;
    int min_visit_size_ = 1;
    bool abort_ = false;
};

struct LocalCensus {
    std::vector<CensusRow> rows;  // index n-1

    explicit LocalCensus(int max_n) {
        rows.resize(static_cast<std::size_t>(max_n));
        for (int n = 1; n <= max_n; ++n) {
            rows[static_cast<std::size_t>(n - 1)].n = n;
            rows[static_cast<std::size_t>(n - 1)].min_perimeter =
                std::numeric_limits<std::int64_t>::max();
        }
    }

    void record(int size, std::int64_t holes, std::int64_t p) {
        CensusRow& row = rows[static_cast<std::size_t>(size - 1)];
        ++row.total;
        if (holes >= static_cast<std::int64_t>(row.counts_by_holes.size()))
            row.counts_by_holes.resize(static_cast<std::size_t>(holes + 1), 0);
        ++row.counts_by_holes[static_cast<std::size_t>(holes)];
        row.min_perimeter = std::min(row.min_perimeter, p);
    }

    void merge(const LocalCensus& other) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const CensusRow& src = other.rows[i];
            CensusRow& dst = rows[i];
            dst.total += src.total;
            if (src.counts_by_holes.size() > dst.counts_by_holes.size())
                dst.counts_by_holes.resize(src.counts_by_holes.size(), 0);
            for (std::size_t h = 0; h < src.counts_by_holes.size(); ++h)
                dst.counts_by_holes[h] += src.counts_by_holes[h];
            dst.min_perimeter = std::min(dst.min_perimeter, src.min_perimeter);
        }
    }
};

// Nothing with fewer than 7 tiles encloses a hole. (A dual-graph tree can:
// closed tiles meeting at a corner pinch off a cavity, so b = n - 1 is NOT
// a valid filter.)
std::int64_t holes_or_zero(TreeEnumerator& e, int size) {
    if (size < 7) return 0;
    return e.holes_now();
}

auto census_visitor(LocalCensus& local) {
    return [&local](int size, TreeEnumerator& e) {
        const std::int64_t b = e.shared_edges();
        local.record(size, holes_or_zero(e, size), 4 * size - 2 * b);
        return Step::Descend;
    };
}

}  // namespace

std::int64_t enumerate_fixed(int n, const std::function<void(const Polyomino&)>& visitor) {
    if (n < 1 || n > kEnumerationHardCap)
        throw Error(ErrorKind::CapExceeded,
                    "enumerate_fixed: n must be in [1, " + std::to_string(kEnumerationHardCap) + "]");
    std::int64_t count = 0;
    TreeEnumerator e(n);
    std::vector<Cell> buf;
    e.run([&](int size, TreeEnumerator& en) {
        if (size == n) {
            ++count;
            if (visitor) {
                en.depth_cells(size, buf);
                visitor(Polyomino::from_cells_unchecked(buf));
            }
        }
        return Step::Descend;
    });
    return count;
}

EnumerationTable census(int max_n, int workers) {
    if (max_n < 1 || max_n > kEnumerationHardCap)
        throw Error(ErrorKind::CapExceeded,
                    "census: max_n must be in [1, " + std::to_string(kEnumerationHardCap) + "]");
    if (workers < 1) workers = 1;

    LocalCensus total(max_n);
    if (max_n <= 3 || workers == 1) {
        TreeEnumerator e(max_n);
        e.run(census_visitor(total));
    } else {
        // Sizes 1 and 2 once, serially; every size >= 3 node lives in
        // exactly one shard.
        TreeEnumerator small(2);
        small.run(census_visitor(total));

        const std::vector<std::vector<int>> shards = TreeEnumerator::make_shards();
        std::vector<LocalCensus> partial(shards.size(), LocalCensus(max_n));
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (;;) {
                std::size_t s = next.fetch_add(1);
                if (s >= shards.size()) break;
                TreeEnumerator e(max_n);
                e.run(census_visitor(partial[s]), shards[s], 3);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<int>(workers, static_cast<int>(shards.size())); ++w)
            pool.emplace_back(work);
        for (auto& t : pool) t.join();
        for (const LocalCensus& p : partial) total.merge(p);
    }

    EnumerationTable table;
    table.max_n = max_n;
    for (CensusRow& row : total.rows) {
        if (row.counts_by_holes.empty()) row.counts_by_holes.push_back(0);
        row.f = static_cast<std::int64_t>(row.counts_by_holes.size()) - 1;
        table.per_n.push_back(std::move(row));
    }
    return table;
}

GTable g_table(int max_m, const EnumerationTable& table) {
    GTable g;
    for (int m = 1; m <= max_m; ++m) {
        bool found = false;
        for (const CensusRow& row : table.per_n) {
            if (row.f >= m) {
                g.per_m[m] = row.n;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::InsufficientCensus,
                        "g_table: census f never reaches m = " + std::to_string(m));
    }
    return g;
}

SearchResult search_g(int m, const SearchOptions& opts) {
    if (m < 1) throw Error(ErrorKind::PreconditionViolation, "search_g: m must be >= 1");

    std::int64_t n = 1;
    while (ub_fixed_point(n) < m) ++n;  // sound start: f(n) <= ub_fixed_point(n)

    std::uint64_t nodes = 0;
    std::vector<Cell> buf;
    for (;; ++n) {
        TreeEnumerator e(static_cast<int>(n));
        std::optional<Polyomino> witness;
        std::int64_t witness_holes = 0;
        e.run([&](int size, TreeEnumerator& en) {
            if (++nodes > opts.node_budget)
                throw Error(ErrorKind::SearchBudgetExceeded,
                            "search_g: node budget exceeded at n = " + std::to_string(n));
            if (size == static_cast<int>(n)) {
                std::int64_t h = holes_or_zero(en, size);
                if (h >= m) {
                    en.depth_cells(size, buf);
                    witness = Polyomino::from_cells_unchecked(buf);
                    witness_holes = h;
                    en.abort();
                }
                return Step::Skip;
            }
            if (opts.prune) {
                const std::int64_t optimistic = (n - size) / 2 + 1;
                if (optimistic < m && holes_or_zero(en, size) + optimistic < m)
                    return Step::Skip;
            }
            return Step::Descend;
        });
        if (witness) return {n, std::move(*witness), witness_holes, nodes};
    }
}

}  // namespace holey
