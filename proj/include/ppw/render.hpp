#pragma once

// Plain-text rendering of module diagrams (radical filtrations with degree
// annotations; degree-zero entries are starred, mirroring the bold entries of
// the usual hand-drawn filtration pictures) and of word-quiver presentations.

#include <map>
#include <string>
#include <vector>

namespace ppw {

// one layer = multiset of (vertex id, degree)
using DiagramLayers = std::vector<std::map<std::pair<int, int>, int>>;

std::string render_diagram(const std::string& title, int total_dim,
                           const DiagramLayers& layers);

} // namespace ppw
