#include "linf/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace linf {

namespace {

struct Kuhn {
    const BipartiteGraph& bg;
    std::vector<int> match_x;  // 0-based x -> matched 0-based y, or -1
    std::vector<int> match_y;

    explicit Kuhn(const BipartiteGraph& graph)
        : bg(graph),
          match_x(static_cast<std::size_t>(graph.left_size()), -1),
          match_y(static_cast<std::size_t>(graph.right_size()), -1) {}

    bool augment(int x, std::uint64_t& visited_y) {
        std::uint64_t candidates = bg.x_row(x + 1) & ~visited_y;
        visited_y |= candidates;
        std::uint64_t free_y = candidates;
        while (free_y) {
            int y = std::countr_zero(free_y);
            free_y &= free_y - 1;
            if (match_y[static_cast<std::size_t>(y)] == -1) {
                match_x[static_cast<std::size_t>(x)] = y;
                match_y[static_cast<std::size_t>(y)] = x;
                return true;
            }
        }
        while (candidates) {
            int y = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (augment(match_y[static_cast<std::size_t>(y)], visited_y)) {
                match_x[static_cast<std::size_t>(x)] = y;
                match_y[static_cast<std::size_t>(y)] = x;
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        for (int x = 0; x < bg.left_size(); ++x) {
            std::uint64_t visited = 0;
            if (augment(x, visited)) ++size;
        }
        return size;
    }
};

}  // namespace

int matching_number(const BipartiteGraph& bg) { return Kuhn(bg).run(); }

std::vector<int> min_vertex_cover_bipartite(const BipartiteGraph& bg) {
    Kuhn kuhn(bg);
    kuhn.run();

    // Koenig: alternate from unmatched X vertices (any edge forward, matching
    // edge back); cover = (X not reached) + (Y reached).
    int nx = bg.left_size(), ny = bg.right_size();
    std::uint64_t zx = 0, zy = 0;
    std::vector<int> stack;
    for (int x = 0; x < nx; ++x) {
        if (kuhn.match_x[static_cast<std::size_t>(x)] == -1) {
            zx |= 1ull << x;
            stack.push_back(x);
        }
    }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        std::uint64_t fresh = bg.x_row(x + 1) & ~zy;
        zy |= fresh;
        while (fresh) {
            int y = std::countr_zero(fresh);
            fresh &= fresh - 1;
            int back = kuhn.match_y[static_cast<std::size_t>(y)];
            if (back != -1 && !((zx >> back) & 1)) {
                zx |= 1ull << back;
                stack.push_back(back);
            }
        }
    }

    std::vector<int> cover;
    for (int x = 0; x < nx; ++x) {
        if (!((zx >> x) & 1) && kuhn.match_x[static_cast<std::size_t>(x)] != -1) {
            cover.push_back(x + 1);
        }
    }
    for (int y = 0; y < ny; ++y) {
        if ((zy >> y) & 1) cover.push_back(nx + y + 1);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace linf
