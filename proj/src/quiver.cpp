#include "ppw/quiver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace ppw {

int Quiver::vindex(int vid) const {
    for (int i = 0; i < (int)verts.size(); ++i)
        if (verts[i] == vid) return i;
    throw QuiverError("unknown vertex id " + std::to_string(vid));
}

bool Quiver::has_vertex(int vid) const {
    return std::find(verts.begin(), verts.end(), vid) != verts.end();
}

void Quiver::validate() const {
    std::set<int> seen;
    for (int v : verts) {
        if (v <= 0) throw QuiverError("vertex ids must be positive, got " + std::to_string(v));
        if (!seen.insert(v).second)
            throw QuiverError("duplicate vertex id " + std::to_string(v));
    }
    std::set<int> aids;
    std::set<std::string> anames;
    for (auto& a : arrows) {
        if (!has_vertex(a.src) || !has_vertex(a.tgt))
            throw QuiverError("arrow " + a.name + " has unknown endpoint");
        if (a.src == a.tgt)
            throw QuiverError("loop arrow " + a.name + " at vertex " + std::to_string(a.src));
        if (!aids.insert(a.id).second) throw QuiverError("duplicate arrow id");
        if (!anames.insert(a.name).second)
            throw QuiverError("duplicate arrow name " + a.name);
    }
    topological_order(); // throws on directed cycles
}

std::vector<int> Quiver::topological_order() const {
    std::map<int, int> indeg;
    for (int v : verts) indeg[v] = 0;
    for (auto& a : arrows) indeg[a.tgt]++;
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v : verts)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    std::map<int, int> left = indeg;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto& a : arrows)
            if (a.src == v && --left[a.tgt] == 0) ready.push(a.tgt);
    }
    if (order.size() != verts.size()) {
        // report one cycle for the error message
        std::set<int> placed(order.begin(), order.end());
        std::ostringstream os;
        os << "directed cycle through vertices {";
        bool first = true;
        for (int v : verts)
            if (!placed.count(v)) {
                if (!first) os << " ";
                os << v;
                first = false;
            }
        os << "}";
        throw QuiverError(os.str());
    }
    return order;
}

std::vector<std::vector<long>> Quiver::path_count_matrix() const {
    int m = n();
    std::vector<std::vector<long>> c(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i) c[i][i] = 1;
    std::vector<int> order = topological_order();
    // process targets in reverse topological order: c[i][j] = sum over arrows i->k of c[k][j]
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int i = vindex(*it);
        for (auto& a : arrows) {
            if (a.src != *it) continue;
            int k = vindex(a.tgt);
            for (int j = 0; j < m; ++j) c[i][j] += c[k][j];
        }
    }
    return c;
}

std::string Quiver::describe() const {
    std::ostringstream os;
    os << "vertices:";
    for (int v : verts) os << " " << v;
    os << "; arrows:";
    for (auto& a : arrows) os << " " << a.name << ": " << a.src << " -> " << a.tgt << ";";
    return os.str();
}

DoubleQuiver::DoubleQuiver(const Quiver& q) : base(q) {
    base.validate();
    int nb = (int)q.arrows.size();
    arrows.resize(2 * nb);
    for (int k = 0; k < nb; ++k) {
        const Arrow& a = q.arrows[k];
        arrows[a.id] = DArrow{a.id, a.name, a.src, a.tgt, 0, a.id, false};
        arrows[nb + a.id] = DArrow{nb + a.id, a.name + "*", a.tgt, a.src, 1, a.id, true};
    }
}

std::vector<int> DoubleQuiver::arrows_from(int vid) const {
    std::vector<int> out;
    for (auto& a : arrows)
        if (a.src == vid) out.push_back(a.id);
    return out;
}

std::vector<int> DoubleQuiver::arrows_into(int vid) const {
    std::vector<int> out;
    for (auto& a : arrows)
        if (a.tgt == vid) out.push_back(a.id);
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    void advance() {
        if (i < s.size()) {
            if (s[i] == '\n') { line++; col = 1; } else col++;
            i++;
        }
    }
    void skip_ws() {
        while (i < s.size()) {
            if (s[i] == '#') { // comment to end of line
                while (i < s.size() && s[i] != '\n') advance();
            } else if (isspace((unsigned char)s[i])) {
                advance();
            } else break;
        }
    }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    [[noreturn]] void fail(const std::string& what) {
        throw QuiverError("parse error at line " + std::to_string(line) + ", col " +
                          std::to_string(col) + ": " + what);
    }
    bool try_consume(const std::string& tok) {
        skip_ws();
        if (s.compare(i, tok.size(), tok) == 0) {
            for (size_t k = 0; k < tok.size(); ++k) advance();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!try_consume(tok)) fail("expected '" + tok + "'");
    }
    int read_int() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && isdigit((unsigned char)s[i])) advance();
        if (start == i) fail("expected integer");
        return std::stoi(s.substr(start, i - start));
    }
    std::string read_name() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (isalnum((unsigned char)s[i]) || s[i] == '_')) advance();
        if (start == i) fail("expected name");
        return s.substr(start, i - start);
    }
};

} // namespace

Quiver parse_quiver(const std::string& text) {
    Cursor c{text};
    Quiver q;
    c.expect("vertices");
    c.expect(":");
    while (!c.eof() && isdigit((unsigned char)c.peek()))
        q.verts.push_back(c.read_int());
    if (q.verts.empty()) c.fail("at least one vertex required");
    c.try_consume(";");
    if (!c.eof()) {
        c.expect("arrows");
        c.expect(":");
        int id = 0;
        while (!c.eof()) {
            Arrow a;
            a.id = id++;
            a.name = c.read_name();
            c.expect(":");
            a.src = c.read_int();
            c.expect("->");
            a.tgt = c.read_int();
            q.arrows.push_back(a);
            if (!c.try_consume(";")) break;
        }
        if (!c.eof()) c.fail("trailing input");
    }
    q.validate();
    return q;
}

Quiver support_subquiver(const Quiver& q, const std::set<int>& vs) {
    Quiver out;
    for (int v : q.verts) {
        if (!vs.count(v)) continue;
        out.verts.push_back(v);
    }
    for (int v : vs)
        if (!q.has_vertex(v)) throw QuiverError("unknown vertex id " + std::to_string(v));
    int id = 0;
    for (auto& a : q.arrows)
        if (vs.count(a.src) && vs.count(a.tgt))
            out.arrows.push_back(Arrow{id++, a.name, a.src, a.tgt});
    out.validate();
    return out;
}

namespace {

void extend_path(const DoubleQuiver& dq, Path& cur, int tgt, int max_degree,
                 std::vector<Path>& out) {
    if (cur.tgt == tgt) out.push_back(cur);
    for (auto& a : dq.arrows) {
        if (a.src != cur.tgt) continue;
        if (cur.deg + a.deg > max_degree) continue;
        // unstarred runs cannot revisit a vertex (base quiver is acyclic), and
        // the star count is capped, so the recursion terminates
        cur.arrows.push_back(a.id);
        int old_tgt = cur.tgt;
        cur.tgt = a.tgt;
        cur.deg += a.deg;
        extend_path(dq, cur, tgt, max_degree, out);
        cur.deg -= a.deg;
        cur.tgt = old_tgt;
        cur.arrows.pop_back();
    }
}

} // namespace

std::vector<Path> enumerate_paths(const DoubleQuiver& dq, int src, int tgt, int max_degree) {
    if (max_degree < 0) throw QuiverError("max_degree must be >= 0");
    dq.base.vindex(src);
    dq.base.vindex(tgt);
    Path cur;
    cur.src = cur.tgt = src;
    std::vector<Path> out;
    extend_path(dq, cur, tgt, max_degree, out);
    std::sort(out.begin(), out.end(), [](const Path& p, const Path& q) {
        if (p.arrows.size() != q.arrows.size()) return p.arrows.size() < q.arrows.size();
        return p.arrows < q.arrows;
    });
    return out;
}

bool is_source(const Quiver& q, int v) {
    q.vindex(v);
    for (auto& a : q.arrows)
        if (a.tgt == v) return false;
    return true;
}

Quiver reflect_at_source(const Quiver& q, int v) {
    if (!is_source(q, v)) throw QuiverError("vertex " + std::to_string(v) + " is not a source");
    Quiver out = q;
    for (auto& a : out.arrows)
        if (a.src == v) std::swap(a.src, a.tgt);
    out.validate();
    return out;
}

} // namespace ppw
