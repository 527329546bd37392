#include "girth/range_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace girth {

EdgeRangeIndex build_index(const WeightedGraph& g, const Hierarchy& h) {
    return build_index(g, h.k(), [&h](VertexId w, int i) { return h.level_dist(w, i + 1); });
}

EdgeRangeIndex build_index(const WeightedGraph& g, int k,
                           const std::function<double(VertexId, int)>& next_level_dist) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    EdgeRangeIndex idx;
    idx.graph_ = &g;
    idx.k_ = k;
    const std::size_t n = g.vertex_count();
    idx.offset_.resize(n + 1);
    idx.leaves_.resize(n);
    std::size_t total = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t leaves = std::bit_ceil(std::max<std::size_t>(1, g.degree(static_cast<VertexId>(v))));
        idx.leaves_[v] = leaves;
        idx.offset_[v] = total;
        total += 2 * leaves;
    }
    idx.offset_[n] = total;

    idx.values_.assign(static_cast<std::size_t>(k), std::vector<double>(total, kInfinity));
    for (int i = 0; i < k; ++i) {
        auto& vals = idx.values_[static_cast<std::size_t>(i)];
        for (std::size_t v = 0; v < n; ++v) {
            const auto adj = g.neighbors(static_cast<VertexId>(v));
            const std::size_t base = idx.offset_[v];
            const std::size_t leaves = idx.leaves_[v];
            for (std::size_t j = 0; j < adj.size(); ++j)
                vals[base + leaves + j] = adj[j].length - next_level_dist(adj[j].neighbor, i);
            for (std::size_t t = leaves - 1; t >= 1; --t)
                vals[base + t] = std::min(vals[base + 2 * t], vals[base + 2 * t + 1]);
        }
    }
    return idx;
}

RangeCursor::RangeCursor(const EdgeRangeIndex& index, VertexId v, int level, double y0)
    : index_(&index), v_(v), level_(level), y0_(y0), pos_(0) {
    ++visits_;
    done_ = !(index.root_min(v, level) < y0);
}

std::optional<EdgeRef> RangeCursor::next() {
    if (done_) return std::nullopt;
    const std::size_t leaves = index_->leaf_count(v_);
    const std::size_t deg = index_->graph().degree(v_);
    if (pos_ >= deg) {
        done_ = true;
        return std::nullopt;
    }
    auto val = [&](std::size_t t) {
        ++visits_;
        return index_->node(v_, level_, t);
    };

    // Leftmost leaf at position >= pos_ with value < y0: climb until a right
    // sibling subtree qualifies, then descend taking the left child when it does.
    std::size_t t = leaves + pos_;
    if (!(val(t) < y0_)) {
        for (;;) {
            if (t == 1) {
                done_ = true;
                return std::nullopt;
            }
            if ((t & 1) == 0 && val(t + 1) < y0_) {
                ++t;
                break;
            }
            t >>= 1;
        }
        while (t < leaves) {
            t <<= 1;
            if (!(val(t) < y0_)) ++t;
        }
    }
    const std::size_t j = t - leaves;
    if (j >= deg) {  // only +inf padding remains
        done_ = true;
        return std::nullopt;
    }
    pos_ = j + 1;
    return index_->graph().incident(v_, j);
}

RangeCursor open_cursor(const EdgeRangeIndex& index, VertexId v, int level, double y0) {
    if (level < 0 || level >= index.k())
        throw std::out_of_range("cursor level " + std::to_string(level) + " outside [0, " +
                                std::to_string(index.k()) + ")");
    return RangeCursor(index, v, level, y0);
}

}  // namespace girth
