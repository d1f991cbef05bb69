#include "ppw/render.hpp"

#include <sstream>

namespace ppw {

std::string render_diagram(const std::string& title, int total_dim,
                           const DiagramLayers& layers) {
    std::ostringstream os;
    int lo = 0, hi = -1;
    for (auto& layer : layers)
        for (auto& [vd, mult] : layer) {
            if (hi < lo) lo = hi = vd.second;
            lo = std::min(lo, vd.second);
            hi = std::max(hi, vd.second);
        }
    os << title << ": dim " << total_dim;
    if (hi >= lo) os << ", degrees " << lo << ".." << hi;
    os << "\n";
    for (auto& layer : layers) {
        os << " ";
        for (auto& [vd, mult] : layer)
            for (int k = 0; k < mult; ++k) {
                os << " " << vd.first;
                if (vd.second == 0) os << "*";
                else os << "@" << vd.second;
            }
        os << "\n";
    }
    return os.str();
}

} // namespace ppw
