#include "rainbow/mindeg3.hpp"

#include <algorithm>
#include <string>

namespace rainbow {

Mindeg3Result construct_mindeg3(const DistributionSequence& seq) {
    if (!is_n_good(seq)) throw std::invalid_argument("construct_mindeg3 needs an n-good sequence");
    const int n = seq.n();
    const int k = seq.k();
    if (n < 2 * k)
        throw PreconditionViolation("n = " + std::to_string(n) + " < 2k = " + std::to_string(2 * k));

    Mindeg3Result out{Colouring(n, k), {}, kNoColour};
    std::vector<std::pair<Count, Colour>> live;  // (budget, colour)
    for (Colour c = 1; c <= k; ++c)
        if (seq[c] > 0) live.emplace_back(seq[c], c);

    int x = n;
    while (x >= 2) {
        std::sort(live.begin(), live.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (live.size() == 1) {
            const Colour c = live.front().second;
            for (Vertex u = 1; u <= x; ++u)
                for (Vertex v = u + 1; v <= x; ++v) out.colouring.set(u, v, c);
            out.final_colour = c;
            break;
        }
        auto& [e1, major] = live.front();
        const auto [ek, minor] = live.back();
        const Count xc = static_cast<Count>(x);
        Count t = 1;
        while (choose2(t) + t * (xc - t) < ek) ++t;
        const Count incident = choose2(t) + t * (xc - t);
        if (incident - ek > e1) throw std::logic_error("largest colour cannot absorb the peel remainder");

        Count minor_left = ek;
        const Vertex first = x - static_cast<int>(t) + 1;
        for (Vertex v = x; v >= first; --v)
            for (Vertex u = 1; u < v; ++u) {
                const bool use_minor = minor_left > 0;
                out.colouring.set(u, v, use_minor ? minor : major);
                if (use_minor) --minor_left;
            }
        e1 -= incident - ek;
        out.peels.push_back({x, static_cast<int>(t), minor, major, ek});
        live.pop_back();
        x = first - 1;
        live.erase(std::remove_if(live.begin(), live.end(), [](const auto& p) { return p.first == 0; }), live.end());
        if (live.empty()) break;
    }
    return out;
}

}  // namespace rainbow
