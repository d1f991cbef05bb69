#include "ppw/coxeter.hpp"

#include <algorithm>

namespace ppw {

GeomElt GeomElt::identity(int n) {
    GeomElt g;
    g.n = n;
    g.m.assign((size_t)n * n, 0);
    for (int i = 0; i < n; ++i) g.at(i, i) = 1;
    return g;
}

GeomElt GeomElt::operator*(const GeomElt& o) const {
    GeomElt g;
    g.n = n;
    g.m.assign((size_t)n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < n; ++j)
                if (o.at(k, j) != 0) g.at(i, j) += at(i, k) * o.at(k, j);
        }
    return g;
}

std::vector<std::vector<long>> bilinear_gram(const Quiver& q) {
    int n = q.n();
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (auto& ar : q.arrows) {
        int i = q.vindex(ar.src), j = q.vindex(ar.tgt);
        a[i][j] -= 1;
        a[j][i] -= 1;
    }
    return a;
}

GeomElt simple_reflection(const Quiver& q, int u) {
    int n = q.n(), iu = q.vindex(u);
    auto gram = bilinear_gram(q);
    GeomElt s = GeomElt::identity(n);
    // s_u(alpha_v) = alpha_v - B(u,v) alpha_u
    for (int j = 0; j < n; ++j) s.at(iu, j) -= gram[iu][j];
    return s;
}

GeomElt element_of(const Quiver& q, const Word& w) {
    GeomElt g = GeomElt::identity(q.n());
    for (int u : w) g = g * simple_reflection(q, u);
    return g;
}

bool preserves_form(const Quiver& q, const GeomElt& g) {
    auto gr = bilinear_gram(q);
    int n = q.n();
    // check g^T B g == B
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (g.at(k, i) != 0 && gr[k][l] != 0 && g.at(l, j) != 0)
                        s += g.at(k, i) * gr[k][l] * g.at(l, j);
            if (s != gr[i][j]) return false;
        }
    return true;
}

namespace {

// sign of the root M * e_u: +1 positive, -1 negative (roots never mix signs)
int root_sign(const GeomElt& m, int col) {
    bool pos = false, neg = false;
    for (int i = 0; i < m.n; ++i) {
        if (m.at(i, col) > 0) pos = true;
        if (m.at(i, col) < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("mixed-sign root; not a root lattice element");
    return neg ? -1 : +1;
}

} // namespace

bool is_reduced(const Quiver& q, const Word& w) {
    GeomElt prefix = GeomElt::identity(q.n());
    for (int u : w) {
        // the word extends reducibly by s_u iff prefix(alpha_u) is positive
        if (root_sign(prefix, q.vindex(u)) < 0) return false;
        prefix = prefix * simple_reflection(q, u);
    }
    return true;
}

std::set<int> support(const Word& w) { return std::set<int>(w.begin(), w.end()); }

Word admissible_coxeter_word(const Quiver& q) { return q.topological_order(); }

WordStats word_stats(const Word& w) {
    WordStats st;
    st.repeats.assign(w.size(), 0);
    std::map<int, int> count;
    for (int i = 0; i < (int)w.size(); ++i) {
        st.repeats[i] = count[w[i]]++;
        st.last_pos[w[i]] = i + 1;
    }
    return st;
}

Word SortableFactorization::concat() const {
    Word w;
    for (auto& b : blocks) w.insert(w.end(), b.begin(), b.end());
    return w;
}

SortableFactorization sortable_factorize(const Quiver& q, const Word& w, const Word& c) {
    SortableFactorization out;
    if (!is_reduced(q, w))
        throw std::invalid_argument("sortable_factorize requires a reduced word");
    int remaining = (int)w.size();
    // track the inverse of the remaining right factor of w
    GeomElt rinv = GeomElt::identity(q.n()); // (remaining)^{-1}, starts at w^{-1}
    {
        Word rev(w.rbegin(), w.rend());
        rinv = element_of(q, rev);
    }
    while (remaining > 0) {
        Word block;
        for (int u : c) {
            if (remaining == 0) break;
            // s_u is a left descent of the remaining element iff
            // remaining^{-1}(alpha_u) is a negative root
            if (root_sign(rinv, q.vindex(u)) < 0) {
                block.push_back(u);
                rinv = rinv * simple_reflection(q, u);
                --remaining;
            }
        }
        if (block.empty())
            throw std::logic_error("sorting scan stalled; word not reduced?");
        out.blocks.push_back(block);
    }
    out.ok = true;
    for (size_t i = 0; i + 1 < out.blocks.size(); ++i) {
        auto sup_lo = support(out.blocks[i]);
        for (int u : out.blocks[i + 1])
            if (!sup_lo.count(u)) {
                out.ok = false;
                out.offending_block = (int)i;
                break;
            }
        if (!out.ok) break;
    }
    return out;
}

namespace {

void enumerate_chains(const Quiver& q, const Word& c, std::vector<Word>& chain,
                      int used_len, int maxlen, std::vector<SortableFactorization>& out) {
    if (!chain.empty()) {
        Word w;
        for (auto& b : chain) w.insert(w.end(), b.begin(), b.end());
        if (!is_reduced(q, w)) return; // extensions of non-reduced words stay non-reduced
        SortableFactorization f;
        f.ok = true;
        f.blocks = chain;
        out.push_back(f);
    }
    std::set<int> allowed = chain.empty() ? std::set<int>(c.begin(), c.end())
                                          : support(chain.back());
    // next block: any nonempty subset of the previous support, in c-order
    std::vector<int> pool;
    for (int u : c)
        if (allowed.count(u)) pool.push_back(u);
    int k = (int)pool.size();
    for (int mask = 1; mask < (1 << k); ++mask) {
        Word block;
        for (int b = 0; b < k; ++b)
            if (mask & (1 << b)) block.push_back(pool[b]);
        if (used_len + (int)block.size() > maxlen) continue;
        chain.push_back(block);
        enumerate_chains(q, c, chain, used_len + (int)block.size(), maxlen, out);
        chain.pop_back();
    }
}

} // namespace

std::vector<SortableFactorization> enumerate_sortable(const Quiver& q, int maxlen) {
    Word c = admissible_coxeter_word(q);
    std::vector<SortableFactorization> out;
    std::vector<Word> chain;
    enumerate_chains(q, c, chain, 0, maxlen, out);
    std::sort(out.begin(), out.end(), [](const SortableFactorization& a, const SortableFactorization& b) {
        Word wa = a.concat(), wb = b.concat();
        if (wa.size() != wb.size()) return wa.size() < wb.size();
        return wa < wb;
    });
    return out;
}

} // namespace ppw
