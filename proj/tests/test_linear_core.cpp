#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nha/subspace.hpp"

using namespace nha;

namespace {

const Field Q = Field::rationals();

SparseVec vec(std::vector<std::pair<uint64_t, long>> entries) {
    SparseVec v;
    for (auto& [c, n] : entries)
        if (n) v.push_back({c, Scalar(Q, n)});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    return v;
}

Subspace random_subspace(std::mt19937& rng, const WordSpace& ws, int nvecs) {
    std::vector<SparseVec> rows;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int k = 0; k < nvecs; ++k) {
        SparseVec v;
        for (uint64_t c = 0; c < ws.dim(); ++c) {
            int x = coeff(rng);
            if (x && rng() % 3 == 0) v.push_back({c, Scalar(Q, x)});
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(ws, Q, std::move(rows));
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and GF(p)") {
    Scalar a = Scalar::parse(Q, "-3/2");
    Scalar b = Scalar::parse(Q, "1/3");
    CHECK((a * b).str() == "-1/2");
    CHECK((a + b).str() == "-7/6");
    CHECK((a / b).str() == "-9/2");
    CHECK(a.inverse().str() == "-2/3");

    Field f7 = Field::prime(7);
    Scalar x(f7, 3), y(f7, 5);
    CHECK((x + y).str() == "1");
    CHECK((x * y).str() == "1");
    CHECK((x / y).str() == "2");  // 3 * 5^{-1} = 3*3 = 9 = 2
    CHECK(Scalar::parse(f7, "1/2").str() == "4");
    CHECK_THROWS(Field::prime(6));
}

TEST_CASE("word enumeration is a positional bijection") {
    WordSpace ws(3, 4);
    CHECK(ws.dim() == 81);
    for (uint64_t i = 0; i < ws.dim(); ++i) {
        auto w = ws.word_of(i);
        CHECK(ws.index_of(w) == i);
    }
    // concatenation is integer arithmetic
    WordSpace w2(3, 2);
    uint32_t a[2] = {1, 2}, b[2] = {0, 1};
    uint32_t ab[4] = {1, 2, 0, 1};
    CHECK(WordSpace::concat(w2.index_of(a), w2, w2.index_of(b)) == ws.index_of(ab));
}

TEST_CASE("rref canonical form and reduce") {
    WordSpace ws(2, 2);  // dim 4
    auto u = Subspace::span(ws, Q, {vec({{0, 1}, {1, 2}, {2, 1}}), vec({{0, 2}, {1, 4}, {3, 1}}),
                                    vec({{0, 3}, {1, 6}, {2, 1}, {3, 1}})});
    CHECK(u.dim() == 2);
    // canonical: re-span the reported basis in any order gives identical rows
    auto again = Subspace::span(ws, Q, {u.basis()[1], u.basis()[0]});
    CHECK(u.equals(again));
}

TEST_CASE("subspace ops: disjoint lines, idempotent sum") {
    WordSpace ws(2, 1);
    auto e1 = Subspace::span(ws, Q, {vec({{0, 1}})});
    auto e2 = Subspace::span(ws, Q, {vec({{1, 1}})});
    CHECK(e1.intersect(e2).is_zero());
    CHECK(e1.sum(e1).equals(e1));
    CHECK(e1.sum(e2).equals(Subspace::full(ws, Q)));
    WordSpace other(2, 2);
    auto f = Subspace::zero(other, Q);
    CHECK_THROWS_AS((void)e1.sum(f), std::invalid_argument);
}

TEST_CASE("V(x)R and R(x)V meet trivially for the commutator plane") {
    // R = span{xy - yx} in V^{(x)2}, dim V = 2
    WordSpace w2(2, 2);
    auto r = Subspace::span(w2, Q, {vec({{1, 1}, {2, -1}})});
    auto vr = r.embed_block(1, 0);
    auto rv = r.embed_block(0, 1);
    CHECK(vr.dim() == 2);
    CHECK(rv.dim() == 2);
    CHECK(vr.intersect(rv).is_zero());
    // brute-force oracle: stack both bases, rank must be 4 = 2 + 2 - 0
    std::vector<SparseVec> all;
    for (auto& x : vr.basis()) all.push_back(x);
    for (auto& x : rv.basis()) all.push_back(x);
    CHECK(Subspace::span(WordSpace(2, 3), Q, all).dim() == 4);
}

TEST_CASE("embed_block dimensions and identity") {
    WordSpace w2(2, 2);
    auto r = Subspace::span(w2, Q, {vec({{1, 1}, {2, -1}})});
    CHECK(r.embed_block(0, 0).equals(r));
    CHECK(r.embed_block(1, 0).dim() == 2);  // (dim V)^{1} * dim R
    CHECK(r.embed_block(2, 3).dim() == 32);
}

TEST_CASE("example 5.9 relation blocks: sum has dimension 6, not 5") {
    // single relation x1x2 + x2x3 - x3x1 on three generators
    WordSpace w2(3, 2);
    uint32_t x12[2] = {0, 1}, x23[2] = {1, 2}, x31[2] = {2, 0};
    auto r = Subspace::span(
        w2, Q,
        {vec({{w2.index_of(x12), 1}, {w2.index_of(x23), 1}, {w2.index_of(x31), -1}})});
    auto sum = r.embed_block(1, 0).sum(r.embed_block(0, 1));
    CHECK(sum.dim() == 6);
    CHECK(r.embed_block(1, 0).intersect(r.embed_block(0, 1)).is_zero());
}

TEST_CASE("annihilator of the commutator relation") {
    WordSpace w2(2, 2);
    auto r = Subspace::span(w2, Q, {vec({{1, 1}, {2, -1}})});
    auto perp = r.annihilator();
    CHECK(perp.dim() == 3);
    // x*x*, y*y*, x*y* + y*x*
    CHECK(perp.contains_vector(vec({{0, 1}})));
    CHECK(perp.contains_vector(vec({{3, 1}})));
    CHECK(perp.contains_vector(vec({{1, 1}, {2, 1}})));
    CHECK_FALSE(perp.contains_vector(vec({{1, 1}})));
    CHECK(Subspace::full(w2, Q).annihilator().is_zero());
    CHECK(Subspace::zero(w2, Q).annihilator().equals(Subspace::full(w2, Q)));
}

TEST_CASE("property: modular law, double annihilator, embed composition") {
    std::mt19937 rng(20240811);
    WordSpace ws(2, 3);  // dim 8
    for (int trial = 0; trial < 40; ++trial) {
        auto u = random_subspace(rng, ws, 1 + trial % 4);
        auto w = random_subspace(rng, ws, 1 + (trial / 2) % 4);
        // dim(U+W) + dim(U cap W) == dim U + dim W
        CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
        // double annihilator returns the input
        CHECK(u.annihilator().annihilator().equals(u));
        // inclusion reversing
        if (u.contains(w)) CHECK(w.annihilator().contains(u.annihilator()));
        // intersection is contained in both
        auto c = u.intersect(w);
        CHECK(u.contains(c));
        CHECK(w.contains(c));
        // embed composition
        auto e1 = u.embed_block(1, 0).embed_block(1, 1);
        auto e2 = u.embed_block(2, 1);
        CHECK(e1.equals(e2));
    }
}

TEST_CASE("gf(p) subspace arithmetic stays exact") {
    Field f5 = Field::prime(5);
    WordSpace ws(2, 2);
    auto u = Subspace::span(ws, f5,
                            {SparseVec{{0, Scalar(f5, 2)}, {1, Scalar(f5, 3)}},
                             SparseVec{{0, Scalar(f5, 4)}, {1, Scalar(f5, 6)}}});
    CHECK(u.dim() == 1);  // second row is twice the first mod 5
    CHECK(u.basis()[0].front().c.is_one());
}
