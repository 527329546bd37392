#include "girth/cluster_explorer.hpp"

#include <algorithm>
#include <unordered_set>

namespace girth {

bool ClusterExplorer::relax_next(VertexId u, VertexId x, const PathStore& store, Queue& queue,
                                 ExploreStats& stats) {
    const double dx = store.d(u, x);
    auto it = cursors_.find(x);
    if (it == cursors_.end())
        it = cursors_.emplace(x, open_cursor(index_, x, hierarchy_.level_of(u), -dx)).first;
    auto& cursor = it->second;
    const EdgeRef tree = store.pi(u, x);
    const auto before = cursor.visits();
    auto e = cursor.next();
    if (e && tree.from != kNoVertex && e->id == tree.id) {
        // Reverse of x's own tree edge: walking it back is not a cycle.
        ++stats.degenerate_skips;
        e = cursor.next();
    }
    stats.cursor_visits += cursor.visits() - before;
    if (!e) return false;
    queue.push({dx + e->length, e->id, e->from < e->to ? 0 : 1, *e});
    ++stats.queue_insertions;
    return true;
}

ClusterOutcome ClusterExplorer::run(PathStore& store, VertexId u) {
    reset_cursors();
    ClusterOutcome out;
    std::unordered_set<VertexId> visited;

    store.set(u, u, 0.0, EdgeRef{});
    visited.insert(u);
    out.members.push_back(u);

    Queue queue;
    relax_next(u, u, store, queue, out.stats);

    while (!queue.empty()) {
        const QueueItem item = queue.top();
        queue.pop();
        ++out.stats.extractions;
        const VertexId a = item.e.from;
        const VertexId b = item.e.to;

        if (visited.contains(b)) {
            // relax_next never queues the reverse of a tree edge, so this closes a cycle.
            CycleWitness w;
            w.center = u;
            w.v = a;
            w.w = b;
            w.closing = item.e;
            w.bound = store.d(u, a) + item.e.length + store.d(u, b);
            out.cycle = w;
            break;
        }

        store.set(u, b, item.key, item.e);
        visited.insert(b);
        out.members.push_back(b);
        relax_next(u, a, store, queue, out.stats);
        relax_next(u, b, store, queue, out.stats);
    }
    reset_cursors();
    return out;
}

ClusterOutcome cluster_or_cycle(const WeightedGraph& g, const Hierarchy& h,
                                const EdgeRangeIndex& index, PathStore& store, VertexId u) {
    ClusterExplorer explorer(g, h, index);
    return explorer.run(store, u);
}

std::vector<VertexId> full_cluster(const WeightedGraph& g, const Hierarchy& h, VertexId u) {
    const int next_level = h.level_of(u) + 1;
    std::unordered_map<VertexId, double> dist;
    std::unordered_set<VertexId> done;
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[u] = 0.0;
    pq.emplace(0.0, u);
    std::vector<VertexId> members;
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (!done.insert(x).second) continue;
        members.push_back(x);
        for (const auto& a : g.neighbors(x)) {
            const double nd = d + a.length;
            if (!(nd < h.level_dist(a.neighbor, next_level))) continue;
            auto it = dist.find(a.neighbor);
            if (it == dist.end() || nd < it->second) {
                dist[a.neighbor] = nd;
                pq.emplace(nd, a.neighbor);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace girth
