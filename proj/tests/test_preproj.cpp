#include "doctest.h"
#include "ppw/coxeter.hpp"
#include "ppw/preproj.hpp"

using namespace ppw;

namespace {
Quiver a2() { return parse_quiver("vertices: 1 2; arrows: a: 1->2"); }
Quiver a3paper() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3; c: 1->3"); }
Quiver a3line() { return parse_quiver("vertices: 1 2 3; arrows: a: 1->2; b: 2->3"); }
Quiver a4() { return parse_quiver("vertices: 1 2 3 4; arrows: a: 1->2; b: 2->3; c: 3->4"); }
Quiver d4() { return parse_quiver("vertices: 1 2 3 4; arrows: a: 1->2; b: 2->3; c: 2->4"); }
Quiver kron() { return parse_quiver("vertices: 1 2; arrows: a: 1->2; b: 1->2"); }
} // namespace

TEST_CASE("A2 truncated preprojective algebra dimensions and basis") {
    PreprojAlg<Rat> P(a2(), 1);
    CHECK(P.dim(0) == 3); // e1, e2, a
    CHECK(P.dim(1) == 1); // a*
    // the degree-1 element runs 2 -> 1
    CHECK(P.dim_block(1, 2, 1) == 1);
    CHECK(P.dim_block(1, 1, 1) == 0); // a a* and a* a are killed
    CHECK(P.dim_block(1, 2, 2) == 0);
}

TEST_CASE("A2 deeper truncation vanishes") {
    PreprojAlg<Rat> P(a2(), 3);
    CHECK(P.dim(2) == 0);
    CHECK(P.dim(3) == 0);
}

TEST_CASE("degree zero part is the path algebra") {
    PreprojAlg<Rat> P(a3paper(), 0);
    CHECK(P.dim(0) == 7); // 3 idempotents + 3 arrows + the path ab
    CHECK(P.dim_block(0, 1, 3) == 2); // ab and c
    // multiplication in degree zero is path concatenation
    Vec<Rat> a_ = P.class_of_path(Path{1, 2, 0, {0}}).second;
    Vec<Rat> b_ = P.class_of_path(Path{2, 3, 0, {1}}).second;
    Vec<Rat> ab = P.mul(a_, 0, b_, 0);
    int nonzero = 0;
    for (auto& x : ab) if (!fis_zero(x)) ++nonzero;
    CHECK(nonzero == 1);
}

TEST_CASE("multiplication is associative on random triples") {
    PreprojAlg<Rat> P(a3paper(), 2);
    uint64_t st = 99;
    auto next = [&]() { st ^= st << 13; st ^= st >> 7; st ^= st << 17; return st; };
    for (int trial = 0; trial < 20; ++trial) {
        int da = next() % 2, db = next() % 2, dc = next() % 1;
        if (da + db + dc > P.maxdeg) continue;
        auto rnd = [&](int d) {
            Vec<Rat> v = P.zero_vec(d);
            for (auto& x : v) x = Rat((long)(next() % 5) - 2);
            return v;
        };
        Vec<Rat> x = rnd(da), y = rnd(db), z = rnd(dc);
        Vec<Rat> lhs = P.mul(P.mul(x, da, y, db), da + db, z, dc);
        Vec<Rat> rhs = P.mul(x, da, P.mul(y, db, z, dc), db + dc);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("idempotents multiply as expected") {
    PreprojAlg<Rat> P(a3line(), 1);
    Vec<Rat> e1 = P.idem(1), e2 = P.idem(2);
    CHECK(P.mul(e1, 0, e1, 0) == e1);
    CHECK(vec_is_zero(P.mul(e1, 0, e2, 0)));
}

TEST_CASE("dimension oracle at degree zero is the projective dimension vector") {
    for (auto q : {a2(), a3paper(), a4(), d4(), kron()})
        for (int u : q.verts) {
            auto v = preprojective_dimvec_oracle(q, 0, u);
            auto pv = oracle_projective_dimvec(q, u);
            CHECK(v == pv);
        }
}

TEST_CASE("path engine dimensions agree with the Coxeter-matrix oracle") {
    // the central two-route consistency check, run to degree 8
    for (auto q : {a2(), a3paper(), a3line(), a4(), d4(), kron()}) {
        int N = 8;
        PreprojAlg<Rat> P(q, N);
        for (int u : q.verts)
            for (int d = 0; d <= N; ++d) {
                auto ov = preprojective_dimvec_oracle(q, d, u);
                for (int vi = 0; vi < q.n(); ++vi)
                    CHECK(P.dim_block(d, q.verts[vi], u) == ov[vi]);
            }
    }
}

TEST_CASE("Dynkin dimension sequences hit zero and stay zero") {
    for (auto q : {a2(), a3line(), a4(), d4()}) {
        PreprojAlg<Rat> P(q, 8);
        for (int u : q.verts) {
            bool died = false;
            for (int d = 0; d <= 8; ++d) {
                long dd = 0;
                for (int v : q.verts) dd += P.dim_block(d, v, u);
                if (died) CHECK(dd == 0);
                if (dd == 0) died = true;
            }
            CHECK(died);
        }
    }
}

TEST_CASE("Kronecker column dimensions grow linearly") {
    PreprojAlg<Rat> P(kron(), 4);
    // dim vector of the degree-d column at 1 is (2d+1, 2d)
    for (int d = 0; d <= 4; ++d) {
        CHECK(P.dim_block(d, 1, 1) == 2 * d + 1);
        CHECK(P.dim_block(d, 2, 1) == 2 * d);
    }
}

TEST_CASE("vertex ideal on A2") {
    PreprojAlg<Rat> P(a2(), 1);
    GradedIdeal<Rat> i1 = vertex_ideal(P, 1);
    CHECK(i1.dim(0) == 2); // e2, a
    CHECK(i1.dim(1) == 1); // a*
    GradedIdeal<Rat> i2 = vertex_ideal(P, 2);
    CHECK(i2.dim(0) == 2); // e1, a
    CHECK(i2.dim(1) == 1);
}

TEST_CASE("vertex ideal on a one-vertex quiver is zero") {
    PreprojAlg<Rat> P(parse_quiver("vertices: 1"), 2);
    GradedIdeal<Rat> i1 = vertex_ideal(P, 1);
    for (int d = 0; d <= 2; ++d) CHECK(i1.dim(d) == 0);
}

TEST_CASE("degree-zero part of a vertex ideal is generated by the other idempotents") {
    PreprojAlg<Rat> P(a3paper(), 1);
    GradedIdeal<Rat> i1 = vertex_ideal(P, 1);
    // the two-sided ideal of kQ generated by e2, e3: all paths except e1
    CHECK(i1.dim(0) == P.dim(0) - 1);
    Vec<Rat> e1 = P.idem(1);
    CHECK(!i1.comp[0].contains(e1));
}

TEST_CASE("ideal times the unit ideal is the ideal") {
    PreprojAlg<Rat> P(a3paper(), 2);
    GradedIdeal<Rat> i1 = vertex_ideal(P, 1);
    GradedIdeal<Rat> u = GradedIdeal<Rat>::unit(P);
    CHECK(ideal_product(i1, u).equals(i1));
    CHECK(ideal_product(u, i1).equals(i1));
}

TEST_CASE("closure-based word ideals match pairwise products") {
    PreprojAlg<Rat> P(a3paper(), 2);
    Word w = {1, 2, 3, 1};
    GradedIdeal<Rat> closed = ideal_for_word(P, w);
    GradedIdeal<Rat> paired = vertex_ideal(P, 1);
    for (size_t i = 1; i < w.size(); ++i) paired = ideal_product(paired, vertex_ideal(P, w[i]));
    CHECK(closed.equals(paired));
}

TEST_CASE("word ideal is eventually the whole algebra (the length bound)") {
    PreprojAlg<Rat> P(a3paper(), 3);
    Word w = {1, 2, 3, 1, 2, 1};
    GradedIdeal<Rat> iw = ideal_for_word(P, w);
    // blocks of the sorting word: m = 2, so degrees >= 3 are everything
    CHECK(iw.dim(3) == P.dim(3));
    CHECK(iw.dim(2) < P.dim(2));
}

TEST_CASE("the word ideal only depends on the group element") {
    PreprojAlg<Rat> P(a3paper(), 3);
    GradedIdeal<Rat> i1 = ideal_for_word(P, {1, 2, 3, 1, 2, 1});
    GradedIdeal<Rat> i2 = ideal_for_word(P, {1, 2, 3, 2, 1, 2});
    CHECK(i1.equals(i2));
}

TEST_CASE("nested-block degree-zero stability") {
    // (I_{c0} I_{c0 c1})_0 = (I_{c0})_0 for the running example blocks
    PreprojAlg<Rat> P(a3paper(), 1);
    GradedIdeal<Rat> ic0 = ideal_for_word(P, {1, 2, 3});
    GradedIdeal<Rat> both = ideal_for_word(P, {1, 2, 3, 1, 2});
    CHECK(both.comp[0].equals(ic0.comp[0]));
}

TEST_CASE("quotient by the zero ideal changes nothing") {
    PreprojAlg<Rat> P(a2(), 1);
    QuotAlg<Rat> Q(P, GradedIdeal<Rat>::zero(P));
    CHECK(Q.dim(0) == P.dim(0));
    CHECK(Q.dim(1) == P.dim(1));
}

TEST_CASE("quotient for the running example word") {
    PreprojAlg<Rat> P(a3paper(), 2);
    QuotAlg<Rat> piw(P, ideal_for_word(P, {1, 2, 3, 1, 2, 1}));
    CHECK(piw.dim(0) == 7); // degree zero part is the path algebra
    // per-column dimension tables from the worked figures
    auto col = [&](int u, int d) {
        int s = 0;
        for (int v : P.dq.base.verts) s += piw.dim_block(d, v, u);
        return s;
    };
    CHECK(col(1, 0) == 1);
    CHECK(col(1, 1) == 5);
    CHECK(col(1, 2) == 2);
    CHECK(col(2, 0) == 2);
    CHECK(col(2, 1) == 7);
    CHECK(col(2, 2) == 0);
    CHECK(col(3, 0) == 4);
    CHECK(col(3, 1) == 0);
    CHECK(piw.total_dim() == 21);
}

TEST_CASE("subwords of the Coxeter word give the path algebra of the support") {
    PreprojAlg<Rat> P(a3paper(), 1);
    QuotAlg<Rat> q12(P, ideal_for_word(P, {1, 2}));
    CHECK(q12.dim(1) == 0);
    CHECK(q12.dim(0) == 3); // kQ' for 1 -> 2: e1, e2, a
    QuotAlg<Rat> qc(P, ideal_for_word(P, {1, 2, 3}));
    CHECK(qc.dim(0) == 7);
    CHECK(qc.dim(1) == 0);
}

TEST_CASE("prefix truncation equalities for the sorting word") {
    // (Pi_w)_{<= i} = (Pi_{c^(0)...c^(i)})_{<= i}, degreewise dimensions
    PreprojAlg<Rat> P(a3paper(), 2);
    Word w = {1, 2, 3, 1, 2, 1};
    QuotAlg<Rat> piw(P, ideal_for_word(P, w));
    std::vector<Word> prefixes = {{1, 2, 3}, {1, 2, 3, 1, 2}, {1, 2, 3, 1, 2, 1}};
    for (int i = 0; i <= 2; ++i) {
        QuotAlg<Rat> pref(P, ideal_for_word(P, prefixes[i]));
        for (int d = 0; d <= i; ++d)
            for (int u : P.dq.base.verts)
                for (int v : P.dq.base.verts)
                    CHECK(piw.dim_block(d, u, v) == pref.dim_block(d, u, v));
        // and the prefix algebra lives entirely in degrees <= i
        for (int d = i + 1; d <= 2; ++d) CHECK(pref.dim(d) == 0);
    }
}

TEST_CASE("Kronecker powers match radical powers") {
    // I_{c^i} agrees with J^{2i-1} on the column at 1 and J^{2i} at 2
    int n = 3;
    PreprojAlg<Rat> P(kron(), n);
    auto prefixes = prefix_ideals(P, Word{1, 2, 1, 2, 1, 2, 1, 2});
    for (int i = 1; i <= n; ++i) {
        GradedIdeal<Rat>& ic = prefixes[2 * i]; // I_{c^i}
        auto j1 = P.radical_power(2 * i - 1);
        auto j2 = P.radical_power(2 * i);
        for (int d = 0; d <= P.maxdeg; ++d) {
            // compare column restrictions
            for (int u : {1, 2}) {
                RowSpace<Rat> lhs(P.dim(d)), r1(P.dim(d));
                for (auto& row : ic.comp[d].rows) {
                    Vec<Rat> v = P.zero_vec(d);
                    for (int k = 0; k < P.dim(d); ++k)
                        if (P.elt(d, k).v == u) v[k] = row[k];
                    lhs.add(std::move(v));
                }
                const auto& jpw = (u == 1) ? j1[d] : j2[d];
                for (auto& row : jpw.rows) {
                    Vec<Rat> v = P.zero_vec(d);
                    for (int k = 0; k < P.dim(d); ++k)
                        if (P.elt(d, k).v == u) v[k] = row[k];
                    r1.add(std::move(v));
                }
                CHECK(lhs.equals(r1));
            }
        }
    }
}

TEST_CASE("resource cap raises a clean error") {
    CHECK_THROWS_AS(PreprojAlg<Rat>(kron(), 8, 10), ResourceLimit);
}

TEST_CASE("prime field backend agrees with the rationals on dimensions") {
    GFp::set_modulus((1u << 21) + 17); // 2097169, prime
    for (auto q : {a3paper(), kron()}) {
        PreprojAlg<Rat> Pr(q, 3);
        PreprojAlg<GFp> Pp(q, 3);
        for (int d = 0; d <= 3; ++d) CHECK(Pr.dim(d) == Pp.dim(d));
        Word w = admissible_coxeter_word(q);
        GradedIdeal<Rat> ir = ideal_for_word(Pr, w);
        GradedIdeal<GFp> ip = ideal_for_word(Pp, w);
        for (int d = 0; d <= 3; ++d) CHECK(ir.dim(d) == ip.dim(d));
    }
}
