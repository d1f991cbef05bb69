#pragma once

// Coxeter group machinery for the group attached to a quiver: exact geometric
// representation over the integers, the reduced-word test through positive
// roots, and the greedy sorting-word factorization with its nested-support
// check.  Everything works uniformly for finite and infinite groups.

#include "ppw/quiver.hpp"
#include "ppw/scalars.hpp"
#include <map>
#include <optional>

namespace ppw {

// Integer matrix of a group element acting on the root lattice in the basis
// of simple roots (column convention: w(x) = M x).
struct GeomElt {
    int n = 0;
    std::vector<Int> m; // row-major n x n

    Int& at(int i, int j) { return m[(size_t)i * n + j]; }
    const Int& at(int i, int j) const { return m[(size_t)i * n + j]; }
    static GeomElt identity(int n);
    GeomElt operator*(const GeomElt& o) const;
    bool operator==(const GeomElt& o) const { return n == o.n && m == o.m; }
};

// Symmetrized Cartan-type matrix: 2 on the diagonal, minus the number of
// edges between u and v off the diagonal (edge count from the double of the
// underlying graph, independent of orientation).
std::vector<std::vector<long>> bilinear_gram(const Quiver& q);

GeomElt simple_reflection(const Quiver& q, int u);
GeomElt element_of(const Quiver& q, const Word& w);
bool preserves_form(const Quiver& q, const GeomElt& g);

bool is_reduced(const Quiver& q, const Word& w);
std::set<int> support(const Word& w);

// The admissible Coxeter word: simple reflections in topological order.
Word admissible_coxeter_word(const Quiver& q);

struct WordStats {
    std::map<int, int> last_pos;   // p_u: 1-based position of the last occurrence
    std::vector<int> repeats;      // m_i: earlier occurrences of letter i (1-based i)
};
WordStats word_stats(const Word& w);

// Greedy sorting-word factorization with respect to the Coxeter word c:
// scan c cyclically against the remaining element, taking every left descent.
// The blocks always come back (they are the canonical sorting word); `ok` is
// true iff the supports are nested, i.e. the word is c-sortable.
struct SortableFactorization {
    bool ok = false;
    std::vector<Word> blocks;
    int offending_block = -1; // first i with Supp(block[i+1]) not inside Supp(block[i])
    Word concat() const;
    int m() const { return (int)blocks.size() - 1; }
};
SortableFactorization sortable_factorize(const Quiver& q, const Word& w, const Word& c);

// All c-sortable elements with word length in [1, maxlen], as their sorting
// words, ordered lexicographically by block-subset chains; deterministic.
std::vector<SortableFactorization> enumerate_sortable(const Quiver& q, int maxlen);

} // namespace ppw
