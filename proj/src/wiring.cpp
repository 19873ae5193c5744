#include "arrgraph/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrgraph {

WiringValidation validate(const WiringDiagram& d) {
    WiringValidation rep;
    if (d.n < 3) {
        rep.issues.push_back({0, "n must be at least 3, got " + std::to_string(d.n)});
        return rep;
    }
    const int n = d.n;
    const size_t m = static_cast<size_t>(n) * (n - 1) / 2;
    if (d.swaps.size() != m) {
        rep.issues.push_back({0, "expected " + std::to_string(m) + " swaps, got " +
                                     std::to_string(d.swaps.size())});
        // keep simulating what is there; later checks still apply
    }

    std::vector<int> levels(n);
    std::iota(levels.begin(), levels.end(), 1);
    std::vector<std::vector<bool>> crossed(n + 1, std::vector<bool>(n + 1, false));

    for (size_t t = 0; t < d.swaps.size(); ++t) {
        int p = d.swaps[t];
        if (p < 1 || p > n - 1) {
            rep.issues.push_back({static_cast<int>(t + 1),
                                  "swap level " + std::to_string(p) + " out of range"});
            return rep;
        }
        int a = levels[p - 1], b = levels[p];
        int lo = std::min(a, b), hi = std::max(a, b);
        if (crossed[lo][hi]) {
            rep.issues.push_back({static_cast<int>(t + 1),
                                  "wires " + std::to_string(lo) + " and " + std::to_string(hi) +
                                      " cross a second time"});
            return rep;
        }
        crossed[lo][hi] = true;
        std::swap(levels[p - 1], levels[p]);
    }

    if (rep.issues.empty()) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (!crossed[a][b]) {
                    rep.issues.push_back({0, "wires " + std::to_string(a) + " and " +
                                                 std::to_string(b) + " never cross"});
                    return rep;
                }
        for (int i = 0; i < n; ++i)
            if (levels[i] != n - i) {
                rep.issues.push_back({0, "final order is not the reversal"});
                return rep;
            }
    }

    rep.ok = rep.issues.empty();
    return rep;
}

int SweepState::level_of(int wire, int step) const {
    const auto& row = levels[step - 1];
    for (int p = 0; p < n; ++p)
        if (row[p] == wire) return p + 1;
    throw std::logic_error("wire not found");
}

SweepState sweep(const WiringDiagram& d) {
    auto v = validate(d);
    if (!v.ok) throw std::invalid_argument("invalid wiring diagram: " + v.issues.front().what);
    SweepState s;
    s.n = d.n;
    std::vector<int> levels(d.n);
    std::iota(levels.begin(), levels.end(), 1);
    s.levels.push_back(levels);
    for (int p : d.swaps) {
        std::swap(levels[p - 1], levels[p]);
        s.levels.push_back(levels);
    }
    return s;
}

namespace {

struct EnumState {
    int n;
    size_t m;
    std::vector<int> levels;
    std::vector<std::vector<bool>> crossed;
    std::vector<int> swaps;
    const std::function<bool(const WiringDiagram&)>* yield;
    bool stopped = false;

    void rec() {
        if (stopped) return;
        if (swaps.size() == m) {
            if (!(*yield)(WiringDiagram{n, swaps})) stopped = true;
            return;
        }
        for (int p = 1; p <= n - 1 && !stopped; ++p) {
            int a = levels[p - 1], b = levels[p];
            int lo = std::min(a, b), hi = std::max(a, b);
            if (crossed[lo][hi]) continue;
            crossed[lo][hi] = true;
            std::swap(levels[p - 1], levels[p]);
            swaps.push_back(p);
            rec();
            swaps.pop_back();
            std::swap(levels[p - 1], levels[p]);
            crossed[lo][hi] = false;
        }
    }
};

} // namespace

void enumerate_all(int n, const std::function<bool(const WiringDiagram&)>& yield,
                   const EnumerateOptions& opts) {
    if (n < 3 || n > 6)
        throw std::invalid_argument("enumerate_all supports 3 <= n <= 6");
    if (n == 6 && !opts.allow_n6)
        throw std::invalid_argument("n=6 enumeration must be opted into explicitly");
    EnumState st;
    st.n = n;
    st.m = static_cast<size_t>(n) * (n - 1) / 2;
    st.levels.resize(n);
    std::iota(st.levels.begin(), st.levels.end(), 1);
    st.crossed.assign(n + 1, std::vector<bool>(n + 1, false));
    st.yield = &yield;
    st.rec();
}

std::vector<WiringDiagram> enumerate_all(int n, const EnumerateOptions& opts) {
    std::vector<WiringDiagram> out;
    enumerate_all(n, [&](const WiringDiagram& d) {
        out.push_back(d);
        return true;
    }, opts);
    return out;
}

} // namespace arrgraph
