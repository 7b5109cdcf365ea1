#include "mucalc/detail/scc.hpp"

#include <algorithm>

namespace mucalc::detail {

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    struct Frame {
        int vertex;
        size_t edge;
    };

    for (int start = 0; start < n; ++start) {
        if (index[start] >= 0) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const int v = frame.vertex;
            if (frame.edge < adjacency[v].size()) {
                const int w = adjacency[v][frame.edge++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back(Frame{w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    std::vector<int> component;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        component.push_back(w);
                    } while (w != v);
                    components.push_back(std::move(component));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().vertex] =
                        std::min(lowlink[frames.back().vertex], lowlink[v]);
                }
            }
        }
    }
    return components;
}

}  // namespace mucalc::detail
