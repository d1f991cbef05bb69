#include "doctest.h"
#include "ppw/coxeter.hpp"

using namespace ppw;

namespace {
Quiver a3paper() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3; c: 1->3"); }
Quiver a2() { return parse_quiver("vertices: 1 2; arrows: a: 1->2"); }
Quiver a3line() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3"); }
Quiver kron() { return parse_quiver("vertices: 1 2; arrows: a: 1->2; b: 1->2"); }

// brute-force enumeration of a (finite) Coxeter group by words
std::vector<GeomElt> enumerate_group(const Quiver& q, int maxlen, std::map<int, int>* len_of = nullptr) {
    std::vector<GeomElt> elems{GeomElt::identity(q.n())};
    std::vector<Word> words{{}};
    for (int l = 1; l <= maxlen; ++l) {
        size_t before = elems.size();
        std::vector<Word> frontier;
        for (size_t i = 0; i < words.size(); ++i)
            if ((int)words[i].size() == l - 1) frontier.push_back(words[i]);
        for (auto& w : frontier)
            for (int u : q.verts) {
                Word nw = w;
                nw.push_back(u);
                GeomElt g = element_of(q, nw);
                bool known = false;
                for (auto& e : elems) known = known || (e == g);
                if (!known) {
                    elems.push_back(g);
                    words.push_back(nw);
                }
            }
        if (elems.size() == before) break;
    }
    if (len_of)
        for (size_t i = 0; i < words.size(); ++i) (*len_of)[(int)i] = (int)words[i].size();
    return elems;
}
} // namespace

TEST_CASE("admissible word") {
    CHECK(admissible_coxeter_word(a3paper()) == Word{1, 2, 3});
    CHECK(admissible_coxeter_word(kron()) == Word{1, 2});
    CHECK(admissible_coxeter_word(parse_quiver("vertices: 1")) == Word{1});
}

TEST_CASE("element_of basics") {
    CHECK(element_of(a3paper(), {}) == GeomElt::identity(3));
    // two reduced words of the same element
    CHECK(element_of(a3paper(), {1, 2, 3, 1, 2, 1}) == element_of(a3paper(), {1, 2, 3, 2, 1, 2}));
    CHECK(!(element_of(a2(), {1, 2}) == element_of(a2(), {2, 1})));
}

TEST_CASE("geometric matrices preserve the bilinear form") {
    for (auto q : {a3paper(), a2(), kron()}) {
        CHECK(preserves_form(q, element_of(q, {1})));
        Word w;
        for (int i = 0; i < 7; ++i) w.push_back(q.verts[i % q.n()]);
        CHECK(preserves_form(q, element_of(q, w)));
    }
}

TEST_CASE("is_reduced") {
    CHECK(!is_reduced(a2(), {1, 1}));
    CHECK(is_reduced(a3paper(), {1, 2, 3, 1, 2, 1}));
    CHECK(!is_reduced(a2(), {1, 2, 1, 2})); // the A2 group has 6 elements, max length 3
    CHECK(is_reduced(kron(), {1, 2, 1, 2, 1, 2, 1, 2})); // infinite dihedral
}

TEST_CASE("is_reduced against brute force on the A2 group") {
    Quiver q = a2();
    auto elems = enumerate_group(q, 4);
    CHECK(elems.size() == 6);
    // minimal length per element
    auto min_len = [&](const GeomElt& g) {
        for (int l = 0; l <= 4; ++l) {
            std::function<bool(Word&, int)> rec = [&](Word& w, int left) {
                if (!left) return element_of(q, w) == g;
                for (int u : q.verts) {
                    w.push_back(u);
                    if (rec(w, left - 1)) { w.pop_back(); return true; }
                    w.pop_back();
                }
                return false;
            };
            Word w;
            if (rec(w, l)) return l;
        }
        return -1;
    };
    // every word is reduced iff its length equals the minimal length
    std::vector<Word> words = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2},
                               {1, 1}, {1, 2, 1, 2}, {2, 2, 1}};
    for (auto& w : words)
        CHECK(is_reduced(q, w) == ((int)w.size() == min_len(element_of(q, w))));
}

TEST_CASE("support") {
    CHECK(support({1, 2}) == std::set<int>{1, 2});
    CHECK(support({1, 2, 3, 1, 2, 1}) == std::set<int>{1, 2, 3});
    CHECK(support({}) == std::set<int>{});
}

TEST_CASE("word_stats") {
    auto st = word_stats({1, 2, 3, 1, 2, 1});
    CHECK(st.last_pos == std::map<int, int>{{1, 6}, {2, 5}, {3, 3}});
    CHECK(st.repeats == std::vector<int>{0, 0, 0, 1, 1, 2});
    auto st1 = word_stats({1});
    CHECK(st1.last_pos == std::map<int, int>{{1, 1}});
    CHECK(st1.repeats == std::vector<int>{0});
    auto stk = word_stats({1, 2, 1, 2, 1, 2});
    CHECK(stk.last_pos == std::map<int, int>{{1, 5}, {2, 6}});
    CHECK(stk.repeats == std::vector<int>{0, 0, 1, 1, 2, 2});
}

TEST_CASE("sortable factorization of the running example") {
    auto f = sortable_factorize(a3paper(), {1, 2, 3, 1, 2, 1}, {1, 2, 3});
    REQUIRE(f.ok);
    REQUIRE(f.blocks.size() == 3);
    CHECK(f.blocks[0] == Word{1, 2, 3});
    CHECK(f.blocks[1] == Word{1, 2});
    CHECK(f.blocks[2] == Word{1});
    CHECK(f.m() == 2);
}

TEST_CASE("sortable factorization trivial and partial-support cases") {
    auto f = sortable_factorize(a2(), {1, 2}, {1, 2});
    REQUIRE(f.ok);
    CHECK(f.blocks.size() == 1);
    auto g = sortable_factorize(a3paper(), {2, 3}, {1, 2, 3});
    REQUIRE(g.ok);
    REQUIRE(g.blocks.size() == 1);
    CHECK(g.blocks[0] == Word{2, 3});
}

TEST_CASE("non-sortable word is reported with the offending block") {
    // s2 s1 in A2: the sorting scan yields blocks {2}, {1} with supports not nested
    auto f = sortable_factorize(a2(), {2, 1}, {1, 2});
    CHECK(!f.ok);
    CHECK(f.offending_block == 0);
}

TEST_CASE("factorization output is reduced and has the right element") {
    for (auto& w : std::vector<Word>{{1, 2, 3, 1, 2, 1}, {2, 3}, {1, 2, 3, 2, 1, 2}}) {
        Quiver q = a3paper();
        auto f = sortable_factorize(q, w, {1, 2, 3});
        Word cat = f.concat();
        CHECK(is_reduced(q, cat));
        CHECK(element_of(q, cat) == element_of(q, w));
    }
}

TEST_CASE("counting c-sortables on A2 matches brute force") {
    Quiver q = a2();
    auto elems = enumerate_group(q, 4);
    Word c = admissible_coxeter_word(q);
    int sortable = 0;
    // test every element via its minimal word found by brute force
    std::vector<Word> reduced_words = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
    for (auto& w : reduced_words) {
        if (w.empty()) { ++sortable; continue; } // identity counts
        auto f = sortable_factorize(q, w, c);
        if (f.ok) ++sortable;
    }
    CHECK(elems.size() == 6);
    CHECK(sortable == 5); // all but s2 s1
    auto enumd = enumerate_sortable(q, 3);
    CHECK(enumd.size() == 4); // nonempty ones
}

TEST_CASE("enumerated sortable words round-trip through the factorizer") {
    for (auto q : {a2(), a3line(), kron()}) {
        Word c = admissible_coxeter_word(q);
        for (auto& f : enumerate_sortable(q, 5)) {
            Word w = f.concat();
            auto g = sortable_factorize(q, w, c);
            CHECK(g.ok);
            CHECK(g.blocks == f.blocks);
        }
    }
}

TEST_CASE("sortable words have nested-support block statistics") {
    // m_{p_u} = max block index containing u, for every u in the support
    for (auto q : {a3paper(), a3line(), kron()}) {
        Word c = admissible_coxeter_word(q);
        for (auto& f : enumerate_sortable(q, 6)) {
            Word w = f.concat();
            auto st = word_stats(w);
            for (int u : support(w)) {
                int want = -1;
                for (int b = 0; b < (int)f.blocks.size(); ++b)
                    if (support(f.blocks[b]).count(u)) want = b;
                CHECK(st.repeats[st.last_pos[u] - 1] == want);
            }
        }
    }
}
