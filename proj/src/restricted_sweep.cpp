#include "arrgraph/graph.hpp"
#include "arrgraph/wiring.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrgraph {

// Re-sweep the arrangement starting inside the unbounded face wedged between
// the two span-end rays of a degree-2 crossing v.  Going counterclockwise
// from that face, the first n rays cross each line once and fix both the new
// bottom-to-top wire order and the direction each line is traversed; a greedy
// replay of the crossings in that frame yields a diagram whose only level-1
// swap is v itself.
WiringDiagram restricted_sweep(const ArrangementGraph& g) {
    const int n = g.n;
    const int m = static_cast<int>(g.vertices.size());

    int chosen = -1;
    for (int v = 0; v < m; ++v) {
        if (g.degree(v) != 2) continue;
        if (chosen < 0 || std::make_pair(g.vertices[v].l1, g.vertices[v].l2) <
                              std::make_pair(g.vertices[chosen].l1, g.vertices[chosen].l2))
            chosen = v;
    }
    if (chosen < 0) throw std::logic_error("restricted_sweep: no degree-2 crossing");

    auto outer_ray = [&](int slot) -> std::pair<int, bool> {
        const auto& ord = g.line_orders[slot];
        if (ord.front() == chosen) return {slot, false}; // tail side is free
        if (ord.back() == chosen) return {slot, true};
        throw std::logic_error("restricted_sweep: chosen crossing not extreme on its line");
    };
    int sa = g.slot_of(g.vertices[chosen].l1);
    int sb = g.slot_of(g.vertices[chosen].l2);
    std::pair<int, bool> ra = outer_ray(sa), rb = outer_ray(sb);

    const auto& cyc = g.infinity_cycle;
    const int R = static_cast<int>(cyc.size()); // 2n
    int ia = -1, ib = -1;
    for (int i = 0; i < R; ++i) {
        if (cyc[i] == ra) ia = i;
        if (cyc[i] == rb) ib = i;
    }
    if (ia < 0 || ib < 0) throw std::logic_error("restricted_sweep: ray missing from cycle");
    int start;
    if ((ia + 1) % R == ib) start = ib;
    else if ((ib + 1) % R == ia) start = ia;
    else throw std::logic_error("restricted_sweep: span-end rays not adjacent at infinity");

    // wires bottom-to-top = lines in ray order from the start gap
    std::vector<int> route_slot(n), route_head(n);
    std::vector<char> seen(n, 0);
    for (int k = 0; k < n; ++k) {
        auto [slot, head] = cyc[(start + k) % R];
        if (seen[slot])
            throw std::logic_error("restricted_sweep: line crossed twice in ray route");
        seen[slot] = 1;
        route_slot[k] = slot;
        route_head[k] = head ? 1 : 0;
    }

    std::vector<std::vector<int>> seq(n); // consumption order per slot
    std::vector<size_t> ptr(n, 0);
    std::vector<int> levels(n); // level index -> slot
    for (int k = 0; k < n; ++k) {
        seq[route_slot[k]] = g.line_orders[route_slot[k]];
        if (route_head[k]) std::reverse(seq[route_slot[k]].begin(), seq[route_slot[k]].end());
        levels[k] = route_slot[k];
    }

    WiringDiagram out;
    out.n = n;
    for (int fired = 0; fired < m; ++fired) {
        bool any = false;
        for (int p = 0; p + 1 < n; ++p) {
            int u = levels[p], w = levels[p + 1];
            if (ptr[u] < seq[u].size() && ptr[w] < seq[w].size() &&
                seq[u][ptr[u]] == seq[w][ptr[w]]) {
                out.swaps.push_back(p + 1);
                ++ptr[u];
                ++ptr[w];
                std::swap(levels[p], levels[p + 1]);
                any = true;
                break;
            }
        }
        if (!any) throw std::logic_error("restricted_sweep: replay stuck");
    }

    if (!validate(out).ok)
        throw std::logic_error("restricted_sweep produced an invalid diagram");
    int bottom = 0;
    for (int s : out.swaps) bottom += (s == 1) ? 1 : 0;
    if (bottom != 1)
        throw std::logic_error("restricted_sweep: expected exactly one level-1 swap, got " +
                               std::to_string(bottom));
    return out;
}

} // namespace arrgraph
